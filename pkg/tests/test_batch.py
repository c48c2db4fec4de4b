import pytest
from fastapi.testclient import TestClient
from openpyxl import Workbook, load_workbook

from torelli.api.routes import batch as batch_routes
from torelli.core.errors import WordSyntaxError
from torelli.main import app
from torelli.utils import batch_handler
from torelli.utils.batch_handler import EXPORT_HEADERS, BatchHandler


@pytest.fixture(autouse=True)
def directories(tmp_path, monkeypatch):
    exports = tmp_path / "exports"
    uploads = tmp_path / "uploads"
    monkeypatch.setattr(batch_handler, "EXPORTS_DIR", exports)
    monkeypatch.setattr(batch_routes, "UPLOADS_DIR", uploads)
    return exports, uploads


def write_workbook(path, sheets):
    wb = Workbook()
    wb.remove(wb.active)
    for title, rows in sheets.items():
        ws = wb.create_sheet(title)
        for row in rows:
            ws.append(row)
    wb.save(path)
    return path


class TestEvaluateWord:
    def test_kernel_word(self):
        row = BatchHandler.evaluate_word("z2 z2", 1)
        assert row["kernel"] is True
        assert row["epsilon"] == [0, 0, 0]
        assert row["verified"] is True

    def test_odd_word(self):
        row = BatchHandler.evaluate_word("z1", 1)
        assert row["even"] is False
        assert row["epsilon"] is None
        assert row["factors"] is None

    def test_bad_word(self):
        with pytest.raises(WordSyntaxError):
            BatchHandler.evaluate_word("q1", 1)


class TestExport:
    def test_enumeration(self, directories):
        path = BatchHandler.export_enumeration(1, 2)
        assert path.parent == directories[0]
        ws = load_workbook(path).active
        rows = list(ws.iter_rows(values_only=True))
        assert list(rows[0]) == EXPORT_HEADERS
        assert len(rows) == 1 + 31
        assert rows[1][3] == "si"

    def test_template(self):
        path = BatchHandler.create_template()
        rows = list(load_workbook(path).active.iter_rows(values_only=True))
        assert rows[0] == ("Palabra",)
        assert len(rows) == 3


class TestImport:
    def test_multiple_sheets(self, tmp_path):
        path = write_workbook(
            tmp_path / "lote.xlsx",
            {
                "uno": [["Palabra"], ["z2 z2"], ["z1 z2"], ["x9"]],
                "dos": [["w"], ["z1"]],
                "vacia": [["otra"], ["z1 z1"]],
            },
        )
        results = BatchHandler.import_words_multiple_sheets(path, 1)
        rows, errors = results["uno"]
        assert [row["kernel"] for row in rows] == [True, False]
        assert len(errors) == 1
        assert "Fila 4" in errors[0]
        assert results["dos"][0][0]["even"] is False
        assert results["vacia"][0] == []
        assert "Falta la columna" in results["vacia"][1][0]

    def test_missing_sheet(self, tmp_path):
        path = write_workbook(tmp_path / "lote.xlsx", {"uno": [["word"], ["z1 z1"]]})
        results = BatchHandler.import_words_multiple_sheets(path, 1, ["uno", "otra"])
        assert len(results["uno"][0]) == 1
        assert "no existe" in results["otra"][1][0]

    def test_sheet_names(self, tmp_path):
        path = write_workbook(tmp_path / "lote.xlsx", {"a": [["w"]], "b": [["w"]]})
        assert BatchHandler.get_sheet_names(path) == ["a", "b"]


class TestRoutes:
    @pytest.fixture
    def client(self):
        return TestClient(app)

    def test_upload(self, client, tmp_path, directories):
        path = write_workbook(tmp_path / "lote.xlsx", {"uno": [["palabra"], ["z2 z2"], ["z1 z2"]]})
        with path.open("rb") as handle:
            response = client.post(
                "/api/batch/importar",
                params={"genus": 1},
                files={"file": ("lote.xlsx", handle, batch_routes.XLSX_MEDIA_TYPE)},
            )
        assert response.status_code == 200
        body = response.json()
        assert body["success"] is True
        assert body["data"]["hojas_procesadas"]["uno"] == {
            "procesadas": 2,
            "en_nucleo": 1,
            "errores": 0,
        }
        assert not any(directories[1].glob("upload_*"))

    def test_upload_paths_are_unique(self, client, tmp_path, directories, monkeypatch):
        seen = []
        original = BatchHandler.import_words_multiple_sheets

        def recording(filepath, genus, sheet_names=None):
            seen.append(filepath)
            return original(filepath, genus, sheet_names)

        monkeypatch.setattr(BatchHandler, "import_words_multiple_sheets", staticmethod(recording))
        path = write_workbook(tmp_path / "lote.xlsx", {"uno": [["palabra"], ["z2 z2"]]})
        for _ in range(2):
            with path.open("rb") as handle:
                response = client.post(
                    "/api/batch/importar",
                    params={"genus": 1},
                    files={"file": ("lote.xlsx", handle, batch_routes.XLSX_MEDIA_TYPE)},
                )
            assert response.status_code == 200
        assert len(seen) == 2
        assert seen[0] != seen[1]
        assert all(p.parent == directories[1] for p in seen)
        assert not any(directories[1].iterdir())

    def test_upload_rejects_extension(self, client):
        response = client.post(
            "/api/batch/importar",
            params={"genus": 1},
            files={"file": ("lote.csv", b"word\nz1 z1\n", "text/csv")},
        )
        assert response.status_code == 400

    def test_export(self, client):
        response = client.get("/api/batch/exportar", params={"genus": 1, "max_len": 2})
        assert response.status_code == 200
        assert response.headers["content-type"] == batch_routes.XLSX_MEDIA_TYPE

    def test_template(self, client):
        assert client.get("/api/batch/plantilla").status_code == 200

"""
Operaciones de alto nivel compartidas por la CLI y la API.

Cada función recibe texto y parámetros sin procesar, y devuelve un
``Result`` con la forma de texto y la forma JSON del resultado.
"""
from dataclasses import dataclass
from typing import Any, Optional

from torelli.core.burau import (
    burau,
    burau_at,
    center_word,
    format_braid,
    in_Kn,
    is_pure,
    kernel_center_word,
    parse_braid,
    permutation,
)
from torelli.core.epsilon import (
    epsilon,
    factor_kernel_word,
    in_ker_epsilon,
    rank_for_genus,
    schreier_generators,
    split,
    verify_factorization,
)
from torelli.core.errors import IndexRangeError
from torelli.core.harness import check_kernel_characterization, check_random
from torelli.core.homology import action_matrix as homology_matrix
from torelli.core.homology import beta_image, in_torelli_kernel
from torelli.core.laurent import IntMatrix
from torelli.core.words import Word, display_word, enumerate_even_words, format_word, parse_word
from torelli.schemas.wire import FactorizationModel, LaurentMatrixModel, factorization_to_json


@dataclass
class Result:
    text: str
    data: Any


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _word(genus: int, text: str) -> Word:
    return parse_word(text, rank_for_genus(genus))


# ---------------------------------------------------------------------------
# Palabras


def word_reduce(genus: int, text: str) -> Result:
    w = _word(genus, text)
    return Result(display_word(w), format_word(w))


def word_eps(genus: int, text: str) -> Result:
    v = epsilon(_word(genus, text))
    return Result(str(v), v.to_list())


def word_split(genus: int, text: str) -> Result:
    k, v = split(_word(genus, text))
    return Result(
        f"kernel: {display_word(k)}\nvector: {v}",
        {"kernel": format_word(k), "vector": v.to_list()},
    )


def word_kernel(genus: int, text: str) -> Result:
    value = in_ker_epsilon(_word(genus, text))
    return Result(_bool(value), value)


def word_factor(genus: int, text: str) -> Result:
    w = _word(genus, text)
    f = factor_kernel_word(w)
    verified = verify_factorization(w, f)
    lines = [
        f"[{display_word(entry.conj)}] {entry.generator.tag()}^{entry.exponent:+d}"
        for entry in f.entries
    ]
    lines.append(f"verified: {_bool(verified)}")
    data = FactorizationModel(factorization=factorization_to_json(f), verified=verified)
    return Result("\n".join(lines), data.model_dump())


def word_schreier(genus: int, radius: int) -> Result:
    generators = schreier_generators(genus, radius)
    return Result(
        "\n".join(display_word(w) for w in generators),
        [format_word(w) for w in generators],
    )


def word_enum(genus: int, max_len: int) -> Result:
    words = list(enumerate_even_words(rank_for_genus(genus), max_len))
    return Result(
        "\n".join(display_word(w) for w in words),
        [format_word(w) for w in words],
    )


def word_check(
    genus: int, max_len: int, workers: int = 1, samples: int = 0, seed: int = 0
) -> Result:
    report = check_kernel_characterization(genus, max_len, workers)
    if samples:
        report.merge(check_random(genus, samples, max_len, seed))
    lines = [
        f"checked: {report.checked}",
        f"kernel: {report.kernel}",
        f"factorized: {report.factorized}",
        f"ok: {_bool(report.ok)}",
    ]
    lines.extend(f"failure: {message}" for message in report.failures)
    return Result("\n".join(lines), report.to_dict())


# ---------------------------------------------------------------------------
# Trenzas


def _matrix_text(matrix: IntMatrix) -> str:
    scalar = matrix.scalar_value()
    if scalar == 1:
        return "I"
    if scalar == -1:
        return "-I"
    return str(matrix.tolist())


def braid_burau(strands: int, text: str) -> Result:
    matrix = burau(parse_braid(text, strands))
    return Result(str(matrix), LaurentMatrixModel.from_matrix(matrix).model_dump())


def braid_eval(strands: int, text: str, at: int = -1) -> Result:
    matrix = burau_at(parse_braid(text, strands), at)
    return Result(str(matrix), matrix.tolist())


def braid_perm(strands: int, text: str) -> Result:
    perm = permutation(parse_braid(text, strands))
    pure = perm.is_identity()
    return Result(
        f"permutation: {perm}\nimages: {list(perm.images)}\npure: {_bool(pure)}",
        {"images": list(perm.images), "cycles": str(perm), "pure": pure},
    )


def braid_kernel(strands: int, text: str) -> Result:
    w = parse_braid(text, strands)
    pure = is_pure(w)
    image = burau_at(w, -1)
    member = in_Kn(w)
    if member:
        text_out = "true"
    elif not pure:
        text_out = "false (not pure)"
    else:
        text_out = f"false (image = {_matrix_text(image)})"
    return Result(text_out, {"in_kernel": member, "pure": pure, "image": image.tolist()})


def braid_center(strands: int, kernel: bool = False) -> Result:
    w = kernel_center_word(strands) if kernel else center_word(strands)
    return Result(format_braid(w), format_braid(w))


# ---------------------------------------------------------------------------
# Acción en homología relativa


def action_matrix(genus: int, text: str, beta: Optional[int] = None) -> Result:
    w = _word(genus, text)
    if beta is not None:
        if not 1 <= beta <= w.rank:
            raise IndexRangeError(f"Clase β_{beta} fuera de rango 1..{w.rank}")
        image = beta_image(w, beta)
        return Result(str(image), image.to_list())
    matrix = homology_matrix(w)
    return Result(str(matrix), matrix.tolist())


def action_fix(genus: int, text: str) -> Result:
    w = _word(genus, text)
    fixes = in_torelli_kernel(w)
    image = beta_image(w, 1)
    text_out = "true" if fixes else f"false (b1 -> {image})"
    return Result(text_out, {"fixes": fixes, "image": image.to_list()})

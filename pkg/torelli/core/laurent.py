"""
Polinomios de Laurent con coeficientes enteros y matrices cuadradas sobre ellos.

Los coeficientes son enteros de Python (precisión arbitraria). La
especialización solo se permite en t = 1 y t = -1, donde t es invertible
sobre los enteros.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np
import sympy

from torelli.core.errors import DimensionMismatchError, SpecializationError

Term = Tuple[int, int]
Scalar = Union[int, "LaurentPoly"]

ALLOWED_SPECIALIZATIONS = (1, -1)


def _normalize(terms: Iterable[Term]) -> Tuple[Term, ...]:
    coeffs: Dict[int, int] = {}
    for exponent, coeff in terms:
        coeffs[exponent] = coeffs.get(exponent, 0) + coeff
    return tuple(sorted((e, c) for e, c in coeffs.items() if c != 0))


@dataclass(frozen=True)
class LaurentPoly:
    """Polinomio de Laurent como pares (exponente, coeficiente) ordenados"""

    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "terms", _normalize((int(e), int(c)) for e, c in self.terms)
        )

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(coeffs.items()))

    @classmethod
    def monomial(cls, coeff: int, exponent: int = 0) -> "LaurentPoly":
        return cls(((exponent, coeff),))

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls.monomial(value, 0)

    @classmethod
    def _coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        return NotImplemented

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(
            tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)
        )

    __rmul__ = __mul__

    def evaluate(self, t0: int) -> int:
        if t0 not in ALLOWED_SPECIALIZATIONS:
            raise SpecializationError(
                f"Solo se puede evaluar en t = 1 o t = -1 sobre los enteros, se recibió {t0}"
            )
        # (-1)**e con e negativo daría un float
        return sum(c if (t0 == 1 or e % 2 == 0) else -c for e, c in self.terms)

    def to_pairs(self) -> List[List[int]]:
        return [[e, c] for e, c in self.terms]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "LaurentPoly":
        return cls(tuple((e, c) for e, c in pairs))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.terms):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            magnitude = abs(c)
            body = str(magnitude) if e == 0 else (mono if magnitude == 1 else f"{magnitude}{mono}")
            if k == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)
ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


# ---------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class LaurentMatrix:
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(LaurentPoly._coerce(x) for x in row) for row in self.rows)
        dim = len(rows)
        if dim < 1 or any(len(row) != dim for row in rows):
            raise DimensionMismatchError("La matriz debe ser cuadrada y de dimensión >= 1")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        r, c = key
        return self.rows[r][c]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return mat_mul(self, other)

    def scale(self, factor: Scalar) -> "LaurentMatrix":
        return LaurentMatrix(tuple(tuple(x * factor for x in row) for row in self.rows))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[entry.to_pairs() for entry in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, payload: Mapping) -> "LaurentMatrix":
        matrix = cls(
            tuple(tuple(LaurentPoly.from_pairs(entry) for entry in row) for row in payload["entries"])
        )
        if matrix.dim != payload["dim"]:
            raise DimensionMismatchError(
                f"dim={payload['dim']} no coincide con {matrix.dim} filas"
            )
        return matrix

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)


def mat_identity(dim: int) -> LaurentMatrix:
    return LaurentMatrix(
        tuple(tuple(ONE if r == c else ZERO for c in range(dim)) for r in range(dim))
    )


def mat_mul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"Dimensiones incompatibles: {a.dim} y {b.dim}")
    dim = a.dim
    rows = []
    for r in range(dim):
        row = []
        for c in range(dim):
            terms: List[Term] = []
            for k in range(dim):
                x, y = a.rows[r][k], b.rows[k][c]
                if x.terms and y.terms:
                    terms.extend((e1 + e2, c1 * c2) for e1, c1 in x.terms for e2, c2 in y.terms)
            row.append(LaurentPoly(tuple(terms)))
        rows.append(tuple(row))
    return LaurentMatrix(tuple(rows))


def evaluate_at(a: LaurentMatrix, t0: int) -> "IntMatrix":
    """Sustituye t = t0 en cada entrada (homomorfismo de anillos)"""
    if t0 not in ALLOWED_SPECIALIZATIONS:
        raise SpecializationError(
            f"Solo se puede evaluar en t = 1 o t = -1 sobre los enteros, se recibió {t0}"
        )
    return IntMatrix([[entry.evaluate(t0) for entry in row] for row in a.rows])


class IntMatrix:
    """Matriz cuadrada de enteros exactos (arreglo numpy de dtype object)"""

    __slots__ = ("_data",)

    def __init__(self, rows):
        data = np.array(rows, dtype=object)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise DimensionMismatchError("La matriz entera debe ser cuadrada y no vacía")
        data.setflags(write=False)
        self._data = data

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls([[1 if r == c else 0 for c in range(dim)] for r in range(dim)])

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return int(self._data[key])

    def _check(self, other: "IntMatrix") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Dimensiones incompatibles: {self.dim} y {other.dim}")

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        return IntMatrix(self._data @ other._data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        return IntMatrix(self._data + other._data)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check(other)
        return IntMatrix(self._data - other._data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(-self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash(tuple(map(tuple, self.tolist())))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.tolist())

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != self.dim:
            raise DimensionMismatchError(
                f"Vector de longitud {len(vector)} para matriz de dimensión {self.dim}"
            )
        return tuple(int(x) for x in self._data @ np.array(vector, dtype=object))

    def column(self, k: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._data[:, k])

    def tolist(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._data]

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.dim)

    def scalar_value(self):
        """Devuelve c si la matriz es c·I, o None"""
        c = self[0, 0]
        return c if self == IntMatrix([[c if r == k else 0 for k in range(self.dim)] for r in range(self.dim)]) else None

    def determinant(self) -> int:
        """Determinante exacto; solo como ayuda para pruebas"""
        return int(sympy.Matrix(self.tolist()).det())

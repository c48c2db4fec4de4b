"""
Representación de Burau reducida de B_n y el núcleo K_n en t = -1.

Convención fija: σ_i actúa como la identidad salvo en la fila i, que tiene
-t en la diagonal, t en la columna i-1 (si i > 1) y 1 en la columna i+1
(si i < n-1). Las palabras se leen de izquierda a derecha: la matriz de una
palabra es el producto de las matrices de sus letras en el mismo orden.

La igualdad de trenzas no se decide aquí: las relaciones de trenza no se
aplican a las palabras, y comparar imágenes de Burau junto con permutaciones
es un oráculo correcto pero incompleto.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

from torelli.core.errors import IndexRangeError, RankMismatchError, WordSyntaxError
from torelli.core.laurent import (
    ONE,
    T,
    T_INV,
    ZERO,
    IntMatrix,
    LaurentMatrix,
    evaluate_at,
    mat_identity,
    mat_mul,
)
from torelli.core.words import Letter, format_letters, parse_letters, reduce_letters

logger = logging.getLogger(__name__)

BRAID_SYMBOL = "s"


@dataclass(frozen=True)
class BraidWord:
    """Palabra en los generadores σ_1..σ_{n-1}, libremente reducida"""

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise IndexRangeError(f"Se necesitan al menos 2 hebras, se recibió {self.strands}")
        for position, (index, sign) in enumerate(self.letters, start=1):
            if not 1 <= index <= self.strands - 1:
                raise IndexRangeError(
                    f"Generador s{index} fuera de rango 1..{self.strands - 1}", position
                )
            if sign not in (1, -1):
                raise WordSyntaxError(f"Signo inválido {sign}", position)
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    @classmethod
    def generator(cls, strands: int, index: int, sign: int = 1) -> "BraidWord":
        return cls(strands, ((index, sign),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise RankMismatchError(
                f"Número de hebras incompatible: {self.strands} y {other.strands}"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(exponent))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        return by * self * by.inverse()


def parse_braid(text: str, strands: int) -> BraidWord:
    return BraidWord(strands, parse_letters(text, BRAID_SYMBOL, strands - 1))


def format_braid(w: BraidWord) -> str:
    return format_letters(w.letters, BRAID_SYMBOL)


def strands_for_genus(genus: int, boundary: bool = False) -> int:
    """2g+1 hebras (lado capado, PB_{2g+1}) o 2g+2 (lado B_{2g+2})"""
    return 2 * genus + 2 if boundary else 2 * genus + 1


# ---------------------------------------------------------------------------
# Permutaciones


@dataclass(frozen=True)
class Permutation:
    """Biyección de {1..n}; images[k-1] es la imagen de k"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise IndexRangeError(f"No es una permutación de 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other: primero ``other``, después ``self``"""
        return Permutation(tuple(self(other(k)) for k in range(1, len(self.images) + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        seen = set()
        result = []
        for start in range(1, len(self.images) + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cycle.append(k)
                seen.add(k)
                k = self(k)
            result.append(tuple(cycle))
        return tuple(result)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(k) for k in cycle) + ")" for cycle in cycles)


def permutation(w: BraidWord) -> Permutation:
    """
    Permutación inducida; la palabra actúa de izquierda a derecha, así que
    permutation(u*v) == permutation(v).compose(permutation(u))
    """
    result = Permutation.identity(w.strands)
    for index, _ in w.letters:
        result = Permutation.transposition(w.strands, index, index + 1).compose(result)
    return result


def is_pure(w: BraidWord) -> bool:
    return permutation(w).is_identity()


# ---------------------------------------------------------------------------
# Burau


@lru_cache(maxsize=None)
def burau_generator(strands: int, index: int, sign: int = 1) -> LaurentMatrix:
    """Matriz de Burau reducida de σ_index^sign, de tamaño (n-1)×(n-1)"""
    if not 1 <= index <= strands - 1:
        raise IndexRangeError(f"Generador s{index} fuera de rango 1..{strands - 1}")
    if sign not in (1, -1):
        raise WordSyntaxError(f"Signo inválido {sign}")
    dim = strands - 1
    rows = [list(row) for row in mat_identity(dim).rows]
    r = index - 1
    rows[r] = [ZERO] * dim
    if sign == 1:
        rows[r][r] = -T
        if r > 0:
            rows[r][r - 1] = T
        if r < dim - 1:
            rows[r][r + 1] = ONE
    else:
        rows[r][r] = -T_INV
        if r > 0:
            rows[r][r - 1] = ONE
        if r < dim - 1:
            rows[r][r + 1] = T_INV
    return LaurentMatrix(tuple(tuple(row) for row in rows))


def burau(w: BraidWord) -> LaurentMatrix:
    result = mat_identity(w.strands - 1)
    for index, sign in w.letters:
        result = mat_mul(result, burau_generator(w.strands, index, sign))
    return result


def burau_at(w: BraidWord, t0: int = -1) -> IntMatrix:
    return evaluate_at(burau(w), t0)


def in_Kn(w: BraidWord) -> bool:
    """Pura y con imagen de Burau trivial en t = -1"""
    if not is_pure(w):
        return False
    return burau_at(w, -1).is_identity()


def center_word(strands: int) -> BraidWord:
    """Giro completo Δ² = (σ_1σ_2⋯σ_{n-1})^n"""
    if strands < 2:
        raise IndexRangeError(f"Se necesitan al menos 2 hebras, se recibió {strands}")
    sweep = tuple((i, 1) for i in range(1, strands))
    return BraidWord(strands, sweep * strands)


def kernel_center_word(strands: int) -> BraidWord:
    """
    Generador de Z(B_n) ∩ K_n: Burau(Δ²) = tⁿ·I vale (-1)ⁿ·I en t = -1,
    así que basta Δ² con n par y hace falta Δ⁴ con n impar
    """
    delta_sq = center_word(strands)
    return delta_sq if strands % 2 == 0 else delta_sq ** 2


def pure_generator(strands: int, i: int, j: int) -> BraidWord:
    """A_ij = (σ_{j-1}⋯σ_{i+1}) σ_i² (σ_{j-1}⋯σ_{i+1})⁻¹"""
    if not 1 <= i < j <= strands:
        raise IndexRangeError(f"Se requiere 1 <= i < j <= {strands}, se recibió ({i}, {j})")
    head = tuple((k, 1) for k in range(j - 1, i, -1))
    tail = tuple((k, -1) for k in range(i + 1, j))
    return BraidWord(strands, head + ((i, 1), (i, 1)) + tail)

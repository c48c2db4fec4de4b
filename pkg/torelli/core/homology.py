"""
Acción de las palabras en ζ sobre las clases relativas [β_1], ..., [β_{2g+1}].

Las clases se tratan como base libre de un módulo de rango 2g+1 (convención
de columnas: la columna k de una matriz es la imagen de β_k). La letra más a
la izquierda actúa primero, por lo que action_matrix(u*v) es
action_matrix(v) @ action_matrix(u); en el subgrupo par ambos órdenes
coinciden.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from torelli.core.epsilon import (
    epsilon,
    format_vector,
    genus_for_rank,
    is_surface_rank,
    rank_for_genus,
)
from torelli.core.errors import DimensionMismatchError, IndexRangeError, OddWordError
from torelli.core.laurent import IntMatrix
from torelli.core.words import Word, is_even

HomActionMatrix = IntMatrix


@dataclass(frozen=True)
class BetaVector:
    genus: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        rank = rank_for_genus(self.genus)
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != rank:
            raise DimensionMismatchError(
                f"Se esperaban {rank} coordenadas, se recibieron {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, genus: int, k: int) -> "BetaVector":
        rank = rank_for_genus(genus)
        if not 1 <= k <= rank:
            raise IndexRangeError(f"Clase β_{k} fuera de rango 1..{rank}")
        return cls(genus, tuple(1 if i == k else 0 for i in range(1, rank + 1)))

    def to_list(self):
        return list(self.coords)

    def __str__(self) -> str:
        return format_beta(self.coords)


def format_beta(coords) -> str:
    return format_vector(coords, "b")


@lru_cache(maxsize=None)
def letter_action(genus: int, i: int) -> HomActionMatrix:
    """M_i = I - 2·e_i·𝟙ᵀ: β_k ↦ β_k - 2β_i, en particular β_i ↦ -β_i"""
    rank = rank_for_genus(genus)
    if not 1 <= i <= rank:
        raise IndexRangeError(f"Índice {i} fuera de rango 1..{rank}")
    return IntMatrix(
        [[(1 if r == c else 0) - (2 if r == i else 0) for c in range(1, rank + 1)]
         for r in range(1, rank + 1)]
    )


def action_matrix(w: Word) -> HomActionMatrix:
    genus = genus_for_rank(w.rank)
    result = IntMatrix.identity(w.rank)
    for index, _ in w.letters:
        result = letter_action(genus, index) @ result
    return result


def closed_form_action(w: Word) -> HomActionMatrix:
    """I - 2·c·𝟙ᵀ con c = ε(w) escrito en la base β"""
    if not is_even(w):
        raise OddWordError(f"La forma cerrada solo vale para palabras pares: '{w}'")
    c = epsilon(w).coords
    rank = w.rank
    return IntMatrix(
        [[(1 if r == k else 0) - 2 * c[r] for k in range(rank)] for r in range(rank)]
    )


def common_offset(m: HomActionMatrix) -> Optional[Tuple[int, ...]]:
    """Columna común de M - I si todas las columnas coinciden; None si no"""
    offset = m - IntMatrix.identity(m.dim)
    first = offset.column(0)
    if all(offset.column(k) == first for k in range(1, m.dim)):
        return first
    return None


def beta_image(w: Word, k: int) -> BetaVector:
    """ζ_⋆([β_k]) como vector en la base β"""
    genus = genus_for_rank(w.rank)
    if not 1 <= k <= w.rank:
        raise IndexRangeError(f"Clase β_{k} fuera de rango 1..{w.rank}")
    return BetaVector(genus, action_matrix(w).column(k - 1))


def in_torelli_kernel(w: Word) -> bool:
    """Par, de rango 2g+1, y fija la clase relativa [β_1]"""
    if not is_surface_rank(w.rank) or not is_even(w):
        return False
    genus = genus_for_rank(w.rank)
    return beta_image(w, 1) == BetaVector.basis(genus, 1)

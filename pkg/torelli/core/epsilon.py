"""
El homomorfismo ε: F_{2g+1}^{even} → Z^{2g+1}_bal, su núcleo y la escisión.

ε(ζ_{i_1}^{α_1} ⋯ ζ_{i_k}^{α_k}) = Σ_j (-1)^{j+1} e_{i_j}: solo cuentan la
posición y el índice de cada letra, nunca el signo del exponente.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from torelli.core.errors import (
    BalanceError,
    IndexRangeError,
    NotInKernelError,
    OddWordError,
    RankMismatchError,
    WordSyntaxError,
)
from torelli.core.words import (
    Letter,
    Word,
    commutator,
    invert,
    is_even,
    multiply,
    product,
    reduce_letters,
)

logger = logging.getLogger(__name__)


def is_surface_rank(rank: int) -> bool:
    return rank >= 3 and rank % 2 == 1


def genus_for_rank(rank: int) -> int:
    if not is_surface_rank(rank):
        raise RankMismatchError(f"El rango debe ser 2g+1 con g >= 1, se recibió {rank}")
    return (rank - 1) // 2


def rank_for_genus(genus: int) -> int:
    if genus < 1:
        raise IndexRangeError(f"El género debe ser >= 1, se recibió {genus}")
    return 2 * genus + 1


# ---------------------------------------------------------------------------
# Z^{2g+1}_bal


@dataclass(frozen=True)
class BalancedVector:
    """Vector entero de longitud 2g+1 con suma de coordenadas cero"""

    genus: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        rank = rank_for_genus(self.genus)
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != rank:
            raise BalanceError(f"Se esperaban {rank} coordenadas, se recibieron {len(coords)}")
        if sum(coords) != 0:
            raise BalanceError(f"Las coordenadas deben sumar 0, suman {sum(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, genus: int) -> "BalancedVector":
        return cls(genus, (0,) * rank_for_genus(genus))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        """Coordenada i, con índices desde 1"""
        return self.coords[i - 1]

    def __add__(self, other: "BalancedVector") -> "BalancedVector":
        self._check(other)
        return BalancedVector(self.genus, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "BalancedVector":
        return BalancedVector(self.genus, tuple(-c for c in self.coords))

    def __sub__(self, other: "BalancedVector") -> "BalancedVector":
        return self + (-other)

    def _check(self, other: "BalancedVector") -> None:
        if self.genus != other.genus:
            raise RankMismatchError(f"Géneros incompatibles: {self.genus} y {other.genus}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_list(self) -> List[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return format_vector(self.coords, "e")


def format_vector(coords: Sequence[int], symbol: str) -> str:
    """Texto tipo ``e1 - 2e3``; el vector nulo es ``0``"""
    parts = []
    for i, c in enumerate(coords, start=1):
        if c == 0:
            continue
        body = f"{symbol}{i}" if abs(c) == 1 else f"{abs(c)}{symbol}{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def pair_vector(genus: int, i: int, j: int) -> BalancedVector:
    """e_{i,j} = e_i - e_j"""
    rank = rank_for_genus(genus)
    if not (1 <= i <= rank and 1 <= j <= rank):
        raise IndexRangeError(f"Índices ({i}, {j}) fuera de rango 1..{rank}")
    coords = [0] * rank
    coords[i - 1] += 1
    coords[j - 1] -= 1
    return BalancedVector(genus, tuple(coords))


def basis_vector(genus: int, i: int) -> Tuple[int, ...]:
    """e_i como coordenadas simples (no está en Z_bal)"""
    rank = rank_for_genus(genus)
    if not 1 <= i <= rank:
        raise IndexRangeError(f"Índice {i} fuera de rango 1..{rank}")
    return tuple(1 if k == i else 0 for k in range(1, rank + 1))


def height(v: BalancedVector) -> int:
    return sum(abs(c) for c in v.coords)


def _vectors_of_height(rank: int, target: int) -> List[Tuple[int, ...]]:
    found = []
    prefix: List[int] = []

    def extend(remaining: int) -> None:
        if len(prefix) == rank:
            if remaining == 0 and sum(prefix) == 0:
                found.append(tuple(prefix))
            return
        for c in range(-remaining, remaining + 1):
            prefix.append(c)
            extend(remaining - abs(c))
            prefix.pop()

    extend(target)
    return found


def enumerate_balanced(genus: int, max_height: int) -> Iterator[BalancedVector]:
    """Vectores balanceados de altura <= max_height, por altura y luego en orden lexicográfico"""
    rank = rank_for_genus(genus)
    for h in range(0, max_height + 1, 2):
        for coords in _vectors_of_height(rank, h):
            yield BalancedVector(genus, coords)


def forget_first(v: BalancedVector) -> Tuple[int, ...]:
    """Isomorfismo Z^{2g+1}_bal → Z^{2g} que olvida la primera coordenada"""
    return v.coords[1:]


def restore_first(genus: int, coords: Sequence[int]) -> BalancedVector:
    coords = tuple(coords)
    return BalancedVector(genus, (-sum(coords),) + coords)


def balanced_decompose(v: BalancedVector) -> List[Tuple[int, int]]:
    """
    Descenso de altura: escribe v como suma de e_j - e_m

    En cada paso m es el menor índice con coordenada negativa y j el menor
    con coordenada positiva; restar e_j - e_m baja la altura en 2.
    """
    coords = list(v.coords)
    pairs = []
    while any(coords):
        m = next(k for k, c in enumerate(coords) if c < 0)
        j = next(k for k, c in enumerate(coords) if c > 0)
        pairs.append((j + 1, m + 1))
        coords[j] -= 1
        coords[m] += 1
    return pairs


# ---------------------------------------------------------------------------
# ε


def epsilon_of_letters(letters: Iterable[Letter], rank: int) -> BalancedVector:
    """ε sobre una secuencia de letras (reducida o no) de longitud par"""
    genus = genus_for_rank(rank)
    coords = [0] * rank
    count = 0
    for position, (index, _) in enumerate(letters):
        coords[index - 1] += 1 if position % 2 == 0 else -1
        count += 1
    if count % 2:
        raise OddWordError("ε solo está definido en palabras pares")
    return BalancedVector(genus, tuple(coords))


def epsilon(w: Word) -> BalancedVector:
    if not is_even(w):
        raise OddWordError(f"ε solo está definido en palabras pares: '{w}' es impar")
    return epsilon_of_letters(w.letters, w.rank)


def in_ker_epsilon(w: Word) -> bool:
    """Falso para palabras impares o de rango distinto de 2g+1"""
    if not is_surface_rank(w.rank) or not is_even(w):
        return False
    return epsilon(w).is_zero()


def section(v: BalancedVector) -> Word:
    """s(v) = Π_{i=2}^{2g+1} (ζ_iζ_1)^{v_i}, bloques en orden creciente de i"""
    rank = v.rank
    result = Word._trusted(rank, ())
    for i in range(2, rank + 1):
        exponent = v[i]
        if exponent:
            result = multiply(result, g_word(rank, i) ** exponent)
    return result


def split(w: Word) -> Tuple[Word, BalancedVector]:
    """w = k · s(ε(w)) con k en ker ε"""
    v = epsilon(w)
    k = multiply(w, invert(section(v)))
    return k, v


# ---------------------------------------------------------------------------
# Generadores normales y factorizaciones


def g_word(rank: int, i: int) -> Word:
    """g_i = ζ_iζ_1"""
    return Word(rank, ((i, 1), (1, 1)))


def h_word(rank: int, i: int) -> Word:
    """h_i = ζ_1ζ_i"""
    return Word(rank, ((1, 1), (i, 1)))


SQUARE = "sq"
COMM = "comm"


@dataclass(frozen=True)
class NormalGenerator:
    """ζ_i² (``sq``) o [ζ_iζ_1, ζ_jζ_1] (``comm``, con i, j >= 2 distintos)"""

    kind: str
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind == SQUARE:
            if self.j is not None or self.i < 1:
                raise IndexRangeError(f"Generador cuadrado inválido: {self.i}")
        elif self.kind == COMM:
            if self.j is None or self.i < 2 or self.j < 2 or self.i == self.j:
                raise IndexRangeError(
                    f"Conmutador inválido ({self.i}, {self.j}): se requiere i, j >= 2 e i != j"
                )
        else:
            raise WordSyntaxError(f"Tipo de generador desconocido '{self.kind}'")

    @classmethod
    def square(cls, i: int) -> "NormalGenerator":
        return cls(SQUARE, i)

    @classmethod
    def comm(cls, i: int, j: int) -> "NormalGenerator":
        return cls(COMM, i, j)

    def word(self, rank: int) -> Word:
        top = max(self.i, self.j or 0)
        if top > rank:
            raise IndexRangeError(f"Generador {self.tag()} fuera de rango 1..{rank}")
        if self.kind == SQUARE:
            return Word(rank, ((self.i, 1), (self.i, 1)))
        return commutator(g_word(rank, self.i), g_word(rank, self.j))

    def tag(self) -> str:
        if self.kind == SQUARE:
            return f"sq:{self.i}"
        return f"comm:{self.i}:{self.j}"

    @classmethod
    def parse(cls, tag: str) -> "NormalGenerator":
        parts = tag.split(":")
        try:
            if parts[0] == SQUARE and len(parts) == 2:
                return cls.square(int(parts[1]))
            if parts[0] == COMM and len(parts) == 3:
                return cls.comm(int(parts[1]), int(parts[2]))
        except ValueError:
            pass
        raise WordSyntaxError(f"Etiqueta de generador inválida '{tag}'")

    def __str__(self) -> str:
        return self.tag()


@dataclass(frozen=True)
class FactorEntry:
    conj: Word
    generator: NormalGenerator
    exponent: int

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise WordSyntaxError(f"Exponente inválido {self.exponent}")

    def expand(self) -> Word:
        return multiply(
            multiply(self.conj, self.generator.word(self.conj.rank) ** self.exponent),
            invert(self.conj),
        )


@dataclass(frozen=True)
class Factorization:
    rank: int
    entries: Tuple[FactorEntry, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[FactorEntry]:
        return iter(self.entries)


def expand_factorization(f: Factorization) -> Word:
    return product((entry.expand() for entry in f.entries), f.rank)


def verify_factorization(w: Word, f: Factorization) -> bool:
    if w.rank != f.rank:
        raise RankMismatchError(f"Rangos incompatibles: {w.rank} y {f.rank}")
    return expand_factorization(f) == w


# Letras de la base libre {g_i, h_i} del subgrupo par: (tipo, índice, signo),
# con h_1 identificado con g_1 = ζ_1².
BasisLetter = Tuple[str, int, int]


def _h(i: int, sign: int) -> BasisLetter:
    return ("g", 1, sign) if i == 1 else ("h", i, sign)


def _pair_to_basis(a: int, alpha: int, b: int, beta: int) -> List[BasisLetter]:
    if alpha == 1 and beta == 1:
        # ζ_aζ_b = g_a g_1⁻¹ h_b
        return [("g", a, 1), ("g", 1, -1), _h(b, 1)]
    if alpha == 1:
        # ζ_aζ_b⁻¹ = g_a g_b⁻¹
        return [("g", a, 1), ("g", b, -1)]
    if beta == 1:
        # ζ_a⁻¹ζ_b = h_a⁻¹ h_b
        return [_h(a, -1), _h(b, 1)]
    # ζ_a⁻¹ζ_b⁻¹ = h_a⁻¹ g_1 g_b⁻¹
    return [_h(a, -1), ("g", 1, 1), ("g", b, -1)]


def _reduce_basis(letters: Iterable[BasisLetter]) -> List[BasisLetter]:
    stack: List[BasisLetter] = []
    for letter in letters:
        if stack and stack[-1][:2] == letter[:2] and stack[-1][2] == -letter[2]:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def _to_basis(w: Word) -> List[BasisLetter]:
    letters = w.letters
    rewritten: List[BasisLetter] = []
    for k in range(0, len(letters), 2):
        (a, alpha), (b, beta) = letters[k], letters[k + 1]
        rewritten.extend(_pair_to_basis(a, alpha, b, beta))
    return _reduce_basis(rewritten)


def _g_power(rank: int, i: int, sign: int) -> Word:
    return g_word(rank, i) ** sign


def _g_product(rank: int, letters: Sequence[Letter]) -> Word:
    return product((_g_power(rank, i, s) for i, s in letters), rank)


def _relator_entries(conj: Word, i: int, sign: int) -> List[FactorEntry]:
    # g_i h_i = (ζ_i ζ_1² ζ_i⁻¹) · ζ_i²
    rank = conj.rank
    shifted = multiply(conj, Word(rank, ((i, 1),)))
    square_one = NormalGenerator.square(1)
    square_i = NormalGenerator.square(i)
    if sign == 1:
        return [FactorEntry(shifted, square_one, 1), FactorEntry(conj, square_i, 1)]
    return [FactorEntry(conj, square_i, -1), FactorEntry(shifted, square_one, -1)]


def _eliminate_h(rank: int, basis: Sequence[BasisLetter]) -> Tuple[List[FactorEntry], List[Letter]]:
    entries: List[FactorEntry] = []
    kept: List[Letter] = []
    prefix = Word._trusted(rank, ())
    for kind, i, sign in basis:
        if kind == "g":
            kept.append((i, sign))
            prefix = multiply(prefix, _g_power(rank, i, sign))
        elif sign == 1:
            # A·h_i = (A g_i⁻¹) r_i (A g_i⁻¹)⁻¹ · A g_i⁻¹
            prefix = multiply(prefix, _g_power(rank, i, -1))
            kept.append((i, -1))
            entries.extend(_relator_entries(prefix, i, 1))
        else:
            # A·h_i⁻¹ = A r_i⁻¹ A⁻¹ · A g_i
            entries.extend(_relator_entries(prefix, i, -1))
            prefix = multiply(prefix, _g_power(rank, i, 1))
            kept.append((i, 1))
    return entries, list(reduce_letters(kept))


def _eliminate_g1(rank: int, kept: Sequence[Letter]) -> Tuple[List[FactorEntry], List[Letter]]:
    entries: List[FactorEntry] = []
    rest: List[Letter] = []
    prefix = Word._trusted(rank, ())
    square_one = NormalGenerator.square(1)
    for i, sign in kept:
        if i == 1:
            entries.append(FactorEntry(prefix, square_one, sign))
        else:
            rest.append((i, sign))
            prefix = multiply(prefix, _g_power(rank, i, sign))
    return entries, list(reduce_letters(rest))


def _swap_entry(rank: int, prefix: Word, a: int, alpha: int, b: int, beta: int) -> FactorEntry:
    """Entrada para x·y = [x, y]·y·x con x = g_a^α, y = g_b^β"""
    ga, gb = g_word(rank, a), g_word(rank, b)
    if alpha == 1 and beta == 1:
        local, exponent = Word._trusted(rank, ()), 1
    elif alpha == -1 and beta == 1:
        local, exponent = invert(ga), -1
    elif alpha == 1:
        local, exponent = invert(gb), -1
    else:
        local, exponent = multiply(invert(ga), invert(gb)), 1
    return FactorEntry(multiply(prefix, local), NormalGenerator.comm(a, b), exponent)


def _collect(rank: int, letters: Sequence[Letter]) -> List[FactorEntry]:
    """
    Proceso de colección: ordena por índice creciente con intercambios
    adyacentes (primero la inversión más a la izquierda); cada intercambio
    emite un conmutador conjugado. Con sumas de exponentes nulas la palabra
    termina vacía.
    """
    entries: List[FactorEntry] = []
    current = list(letters)
    while True:
        pos = next(
            (k for k in range(len(current) - 1) if current[k][0] > current[k + 1][0]), None
        )
        if pos is None:
            break
        (a, alpha), (b, beta) = current[pos], current[pos + 1]
        prefix = _g_product(rank, current[:pos])
        entries.append(_swap_entry(rank, prefix, a, alpha, b, beta))
        current = list(reduce_letters(current[:pos] + [(b, beta), (a, alpha)] + current[pos + 2:]))
    if current:
        raise NotInKernelError(
            f"La colección no terminó en la identidad: quedan {len(current)} letras"
        )
    return entries


def factor_kernel_word(w: Word) -> Factorization:
    """
    Factoriza w ∈ ker ε como producto de conjugados de ζ_i² y [ζ_iζ_1, ζ_jζ_1]

    Pasos: reescribir en la base libre g_i = ζ_iζ_1, h_i = ζ_1ζ_i; eliminar
    cada h_i con h_i = g_i⁻¹·(g_i h_i); eliminar g_1 = ζ_1²; colectar lo que
    queda en g_2..g_{2g+1}. La factorización no es canónica: solo se
    garantiza que su expansión reproduce w.
    """
    if not in_ker_epsilon(w):
        raise NotInKernelError(f"La palabra '{w}' no está en ker ε")
    rank = w.rank
    basis = _to_basis(w)
    h_entries, kept = _eliminate_h(rank, basis)
    g1_entries, rest = _eliminate_g1(rank, kept)
    comm_entries = _collect(rank, rest)
    entries = tuple(h_entries + g1_entries + comm_entries)
    logger.debug(
        "factorización de longitud %d: %d cuadrados (h), %d cuadrados (g1), %d conmutadores",
        len(w), len(h_entries), len(g1_entries), len(comm_entries),
    )
    return Factorization(rank, entries)


# ---------------------------------------------------------------------------
# Schreier y presentación de Z_bal


def even_basis(rank: int) -> List[Word]:
    """Base de Schreier del subgrupo par con transversal {1, ζ_1}"""
    basis = [Word(rank, ((i, 1), (1, -1))) for i in range(2, rank + 1)]
    basis += [Word(rank, ((1, 1), (i, 1))) for i in range(1, rank + 1)]
    return basis


def schreier_generators(genus: int, radius: int) -> List[Word]:
    """
    Generadores de Schreier de ker ε sobre las clases con altura/2 <= radius

    Para cada v y cada letra x de la base par (y su inversa) se emite
    s(v)·x·s(v + ε(x))⁻¹, sin repetir y omitiendo la identidad.
    """
    if radius < 0:
        raise IndexRangeError(f"El radio debe ser >= 0, se recibió {radius}")
    rank = rank_for_genus(genus)
    letters = []
    for x in even_basis(rank):
        letters.append((x, epsilon(x)))
        letters.append((invert(x), -epsilon(x)))
    seen = set()
    found = []
    for v in enumerate_balanced(genus, 2 * radius):
        s = section(v)
        for x, ex in letters:
            generator = multiply(multiply(s, x), invert(section(v + ex)))
            if generator.is_identity() or generator in seen:
                continue
            seen.add(generator)
            found.append(generator)
    logger.info("Schreier g=%d, radio %d: %d generadores", genus, radius, len(found))
    return found


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[str, ...]


def balanced_presentation(genus: int) -> Presentation:
    """⟨e_{i,i}, e_{j,1} | e_{i,i} = 1, [e_{i,1}, e_{j,1}] = 1⟩"""
    rank = rank_for_genus(genus)
    generators = tuple(f"e{i},{i}" for i in range(1, rank + 1))
    generators += tuple(f"e{i},1" for i in range(2, rank + 1))
    relators = tuple(f"e{i},{i}" for i in range(1, rank + 1))
    relators += tuple(
        f"[e{i},1, e{j},1]" for i in range(2, rank + 1) for j in range(i + 1, rank + 1)
    )
    return Presentation(generators, relators)


def relator_lifts(genus: int) -> List[Tuple[NormalGenerator, Word]]:
    """Levantamientos de los relatores a F^even: ζ_i² y [ζ_iζ_1, ζ_jζ_1]"""
    rank = rank_for_genus(genus)
    lifts = [NormalGenerator.square(i) for i in range(1, rank + 1)]
    lifts += [
        NormalGenerator.comm(i, j) for i in range(2, rank + 1) for j in range(i + 1, rank + 1)
    ]
    return [(gen, gen.word(rank)) for gen in lifts]

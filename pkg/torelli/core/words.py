"""
Aritmética exacta de palabras en el grupo libre F_r.

Las letras son pares (índice, signo) con índices desde 1, de modo que el
token ``z1`` es ζ_1 y ``z1^-1`` su inverso. Toda palabra se guarda reducida.
"""
import logging
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from torelli.core.errors import IndexRangeError, RankMismatchError, TokenRangeError, WordSyntaxError

logger = logging.getLogger(__name__)

Letter = Tuple[int, int]

WORD_SYMBOL = "z"
IDENTITY_DISPLAY = "<id>"


def reduce_letters(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Reducción libre con una pila: cancela pares adyacentes x·x⁻¹"""
    stack: List[Letter] = []
    for index, sign in letters:
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


def _join(left: Tuple[Letter, ...], right: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    # ambos lados ya reducidos: solo puede cancelar la frontera
    k = 0
    limit = min(len(left), len(right))
    while k < limit:
        a = left[-1 - k]
        b = right[k]
        if a[0] != b[0] or a[1] != -b[1]:
            break
        k += 1
    return left[:len(left) - k] + right[k:]


@dataclass(frozen=True)
class Word:
    """Palabra reducida en el grupo libre de rango ``rank``"""

    rank: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise IndexRangeError(f"El rango debe ser positivo, se recibió {self.rank}")
        checked = []
        for position, (index, sign) in enumerate(self.letters, start=1):
            if not 1 <= index <= self.rank:
                raise IndexRangeError(
                    f"Índice {index} fuera de rango 1..{self.rank}", position
                )
            if sign not in (1, -1):
                raise WordSyntaxError(f"Signo inválido {sign}", position)
            checked.append((int(index), int(sign)))
        object.__setattr__(self, "letters", reduce_letters(checked))

    @classmethod
    def _trusted(cls, rank: int, letters: Tuple[Letter, ...]) -> "Word":
        # letras ya validadas y reducidas
        word = object.__new__(cls)
        object.__setattr__(word, "rank", rank)
        object.__setattr__(word, "letters", letters)
        return word

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "Word":
        return cls(rank, ((index, sign),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else invert(self)
        result = Word._trusted(self.rank, ())
        for _ in range(abs(exponent)):
            result = multiply(result, base)
        return result

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return invert(self)


def _check_ranks(*words: Word) -> int:
    ranks = {w.rank for w in words}
    if len(ranks) != 1:
        raise RankMismatchError(
            f"Rangos incompatibles: {', '.join(str(r) for r in sorted(ranks))}"
        )
    return ranks.pop()


def reduce(letters: Iterable[Letter], rank: Optional[int] = None) -> Word:
    """
    Reduce libremente una secuencia de letras

    Args:
        letters: Secuencia de pares (índice, signo), posiblemente no reducida
        rank: Rango del grupo libre (por defecto el mayor índice presente)

    Returns:
        Word reducida que representa el mismo elemento
    """
    letters = tuple(letters)
    if rank is None:
        rank = max((index for index, _ in letters), default=1)
    return Word(rank, letters)


def multiply(u: Word, v: Word) -> Word:
    rank = _check_ranks(u, v)
    return Word._trusted(rank, _join(u.letters, v.letters))


def invert(w: Word) -> Word:
    return Word._trusted(w.rank, tuple((index, -sign) for index, sign in reversed(w.letters)))


def conjugate(w: Word, c: Word) -> Word:
    """c·w·c⁻¹"""
    return multiply(multiply(c, w), invert(c))


def commutator(u: Word, v: Word) -> Word:
    """u·v·u⁻¹·v⁻¹"""
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def product(words: Iterable[Word], rank: int) -> Word:
    result = Word._trusted(rank, ())
    for w in words:
        result = multiply(result, w)
    return result


def exponent_sum(w: Word) -> int:
    return sum(sign for _, sign in w.letters)


def is_even(w: Word) -> bool:
    return exponent_sum(w) % 2 == 0


# ---------------------------------------------------------------------------
# Gramática de texto

_TOKEN_CACHE = {}


def _token_pattern(symbol: str):
    if symbol not in _TOKEN_CACHE:
        _TOKEN_CACHE[symbol] = re.compile(rf"^{re.escape(symbol)}([0-9]+)(\^-1)?$")
    return _TOKEN_CACHE[symbol]


def parse_letters(text: str, symbol: str, bound: int) -> Tuple[Letter, ...]:
    """
    Convierte tokens ``<symbol><k>`` / ``<symbol><k>^-1`` en letras

    Args:
        text: Tokens separados por espacios; vacío es la identidad
        symbol: Prefijo de los tokens (``z`` para palabras, ``s`` para trenzas)
        bound: Índice máximo permitido

    Returns:
        Tupla de letras sin reducir
    """
    pattern = _token_pattern(symbol)
    letters = []
    for position, token in enumerate(text.split(), start=1):
        match = pattern.match(token)
        if not match:
            raise WordSyntaxError(
                f"Token mal formado '{token}', se espera {symbol}<k> o {symbol}<k>^-1",
                position,
            )
        index = int(match.group(1))
        if not 1 <= index <= bound:
            raise TokenRangeError(f"Índice {index} fuera de rango 1..{bound}", position)
        letters.append((index, -1 if match.group(2) else 1))
    return tuple(letters)


def format_letters(letters: Sequence[Letter], symbol: str) -> str:
    return " ".join(
        f"{symbol}{index}" if sign == 1 else f"{symbol}{index}^-1" for index, sign in letters
    )


def parse_word(text: str, rank: int) -> Word:
    return Word(rank, parse_letters(text, WORD_SYMBOL, rank))


def format_word(w: Word) -> str:
    return format_letters(w.letters, WORD_SYMBOL)


def display_word(w: Word) -> str:
    """Forma para pantalla: la identidad se muestra como ``<id>``"""
    return format_word(w) or IDENTITY_DISPLAY


# ---------------------------------------------------------------------------
# Enumeración y muestreo

def alphabet(rank: int) -> List[Letter]:
    """Orden de letras: 1 < 2 < ... y +1 antes que -1"""
    return [(index, sign) for index in range(1, rank + 1) for sign in (1, -1)]


def _sequences(rank: int, length: int, first: Optional[Letter] = None) -> Iterator[Tuple[Letter, ...]]:
    letters = alphabet(rank)
    prefix: List[Letter] = []

    def extend() -> Iterator[Tuple[Letter, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        last = prefix[-1] if prefix else None
        candidates = [first] if (first is not None and not prefix) else letters
        for letter in candidates:
            if last is not None and letter[0] == last[0] and letter[1] == -last[1]:
                continue
            prefix.append(letter)
            yield from extend()
            prefix.pop()

    yield from extend()


def enumerate_words(
    rank: int, max_len: int, even_only: bool = False, first: Optional[Letter] = None
) -> Iterator[Word]:
    """
    Recorre palabras reducidas en orden longitud-lexicográfico

    Con ``first`` solo se recorren las palabras no vacías que empiezan por
    esa letra; así se reparte una enumeración entre varios procesos.
    """
    if max_len < 0:
        raise IndexRangeError(f"La longitud máxima debe ser >= 0, se recibió {max_len}")
    step = 2 if even_only else 1
    start = 0 if first is None else (2 if even_only else 1)
    for length in range(start, max_len + 1, step):
        count = 0
        for letters in _sequences(rank, length, first):
            count += 1
            yield Word._trusted(rank, letters)
        logger.debug("rango %d, longitud %d: %d palabras", rank, length, count)


def enumerate_even_words(rank: int, max_len: int) -> Iterator[Word]:
    # la paridad de la suma de exponentes coincide con la de la longitud
    return enumerate_words(rank, max_len, even_only=True)


def random_word(rank: int, length: int, rng: Optional[random.Random] = None) -> Word:
    """Palabra reducida uniforme de longitud exacta ``length``"""
    rng = rng or random.Random()
    letters: List[Letter] = []
    for _ in range(length):
        while True:
            letter = (rng.randint(1, rank), rng.choice((1, -1)))
            if not letters or letters[-1] != (letter[0], -letter[1]):
                break
        letters.append(letter)
    return Word._trusted(rank, tuple(letters))


def random_even_word(rank: int, max_len: int, rng: Optional[random.Random] = None) -> Word:
    rng = rng or random.Random()
    return random_word(rank, 2 * rng.randint(0, max_len // 2), rng)

"""
Verificaciones exhaustivas y aleatorias de la caracterización del núcleo.

Cada palabra par se somete a cuatro comprobaciones: in_torelli_kernel contra
in_ker_epsilon, ida y vuelta de split, forma cerrada de la acción y, si está
en el núcleo, ida y vuelta de la factorización.
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from torelli.core.epsilon import (
    factor_kernel_word,
    in_ker_epsilon,
    rank_for_genus,
    section,
    split,
    verify_factorization,
)
from torelli.core.homology import action_matrix, closed_form_action, in_torelli_kernel
from torelli.core.words import Letter, Word, alphabet, enumerate_words, random_word

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 20


@dataclass
class CheckReport:
    checked: int = 0
    kernel: int = 0
    factorized: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.kernel += other.kernel
        self.factorized += other.factorized
        room = MAX_REPORTED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        return self

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "kernel": self.kernel,
            "factorized": self.factorized,
            "failures": list(self.failures),
            "ok": self.ok,
        }


def check_word(w: Word, report: CheckReport) -> None:
    report.checked += 1
    in_kernel = in_ker_epsilon(w)
    if in_torelli_kernel(w) != in_kernel:
        report.fail(f"'{w}': in_torelli_kernel != in_ker_epsilon")
    k, v = split(w)
    if not in_ker_epsilon(k) or k * section(v) != w:
        report.fail(f"'{w}': split no reconstruye la palabra")
    if action_matrix(w) != closed_form_action(w):
        report.fail(f"'{w}': la acción no coincide con I - 2·ε(w)·1ᵀ")
    if in_kernel:
        report.kernel += 1
        check_factorization(w, report)


def check_factorization(w: Word, report: CheckReport) -> None:
    if verify_factorization(w, factor_kernel_word(w)):
        report.factorized += 1
    else:
        report.fail(f"'{w}': la factorización no reproduce la palabra")


def _check_chunk(task: Tuple[int, int, Optional[Letter]]) -> CheckReport:
    rank, max_len, first = task
    report = CheckReport()
    if first is None:
        check_word(Word(rank), report)
        return report
    for w in enumerate_words(rank, max_len, even_only=True, first=first):
        check_word(w, report)
    return report


def check_kernel_characterization(genus: int, max_len: int, workers: int = 1) -> CheckReport:
    """
    Recorre todas las palabras pares de longitud <= max_len

    El trabajo se reparte por primera letra; los parciales se combinan en el
    orden de las tareas, así el informe no depende de ``workers``.
    """
    rank = rank_for_genus(genus)
    tasks = [(rank, max_len, None)] + [(rank, max_len, letter) for letter in alphabet(rank)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_check_chunk, tasks))
    else:
        partials = [_check_chunk(task) for task in tasks]
    report = CheckReport()
    for partial in partials:
        report.merge(partial)
    logger.info(
        "g=%d, longitud <= %d: %d palabras, %d en el núcleo, %d fallos",
        genus, max_len, report.checked, report.kernel, len(report.failures),
    )
    return report


def check_random(genus: int, samples: int, max_len: int, seed: int = 0) -> CheckReport:
    """Palabras pares aleatorias y sus restos de split (siempre en el núcleo)"""
    rank = rank_for_genus(genus)
    rng = random.Random(seed)
    report = CheckReport()
    for _ in range(samples):
        w = random_word(rank, 2 * rng.randint(0, max_len // 2), rng)
        check_word(w, report)
        remainder, _ = split(w)
        check_factorization(remainder, report)
    logger.info(
        "g=%d, %d muestras (semilla %d): %d fallos", genus, samples, seed, len(report.failures)
    )
    return report

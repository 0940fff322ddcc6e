"""Brute-force ground truth for periodic-point counts.

These routines follow the definitions directly and are exponential in the
period; they exist to check the fast paths in :mod:`pftzeta.zeta`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm

from .graph import State, Wbg, build_ms_presentation
from .model import PftSpec, StandardPft, Word, derived_pft
from .zeta import count_periodic_via_traces, counts_via_zeta

ENUMERATION_LIMIT = 10**7


class GuardError(ValueError):
    """Requested period is too large to enumerate."""


def _check_guard(alphabet_size: int, n: int):
    if alphabet_size**n > ENUMERATION_LIMIT:
        raise GuardError(
            f"{alphabet_size}^{n} candidate words exceeds the enumeration limit {ENUMERATION_LIMIT}"
        )


def _forbidden_lists(x: PftSpec | StandardPft) -> tuple[frozenset[Word], ...]:
    if isinstance(x, StandardPft):
        return (x.forbidden_set,) + (frozenset(),) * (x.period - 1)
    return x.forbidden


def is_member_periodic(x: PftSpec | StandardPft, w: Word) -> bool:
    """Whether the periodic sequence ``w w w ...`` lies in the shift.

    Works on either description.  A word banned at phase ``j`` may not start
    at any position ``i`` with ``i - r == j (mod T)`` for the chosen offset
    ``r``; positions repeat modulo ``lcm(n, T)``.
    """
    n = len(w)
    if n < 1:
        raise ValueError("empty word")
    lists = _forbidden_lists(x)
    T = len(lists)
    window = lcm(n, T)
    lengths = [sorted({len(f) for f in fs}) for fs in lists]

    def factor(i, k):
        return tuple(w[(i + m) % n] for m in range(k))

    for r in range(T):
        ok = True
        for i in range(window):
            phase = (i - r) % T
            if any(factor(i, k) in lists[phase] for k in lengths[phase]):
                ok = False
                break
        if ok:
            return True
    return False


def periodic_words(x: PftSpec | StandardPft, n: int) -> set[Word]:
    alphabet = x.alphabet
    _check_guard(alphabet.size, n)
    return {w for w in alphabet.words(n) if is_member_periodic(x, w)}


def count_periodic_bruteforce(x: PftSpec | StandardPft, n: int) -> int:
    return len(periodic_words(x, n))


def cycle_labels(g: Wbg, state: State, n: int) -> set[Word]:
    """Label words of the length-``n`` cycles at ``state``."""
    frontier: list[tuple[State, Word]] = [(state, ())]
    for _ in range(n):
        frontier = [
            (v, labels + (a,))
            for u, labels in frontier
            for a, v in g.successors[u].items()
        ]
    return {labels for v, labels in frontier if v == state}


def count_via_cycles(x: StandardPft, n: int) -> int:
    """Count by inclusion-exclusion over cycle label sets in the period-``gcd(n, T)`` presentation."""
    _check_guard(x.alphabet.size, n)
    d = gcd(n, x.period)
    g = build_ms_presentation(derived_pft(x, d))
    present = set(g.states)
    total = 0
    for w in x.alphabet.words(x.word_length):
        sets = [cycle_labels(g, (i, w), n) if (i, w) in present else set() for i in range(d)]
        for size in range(1, d + 1):
            for subset in combinations(range(d), size):
                common = set.intersection(*(sets[j] for j in subset))
                total += (-1) ** (size - 1) * len(common)
    return total


@dataclass(frozen=True)
class CountReport:
    n: int
    brute_force: int | None
    cycle_ie: int | None
    traces: int | None
    zeta_series: int | None

    @property
    def agree(self) -> bool:
        values = {v for v in (self.brute_force, self.cycle_ie, self.traces, self.zeta_series) if v is not None}
        return len(values) <= 1

    def row(self) -> str:
        cells = [self.n, self.brute_force, self.cycle_ie, self.traces, self.zeta_series]
        text = ["-" if c is None else str(c) for c in cells]
        return "\t".join(text + ["OK" if self.agree else "MISMATCH"])


def verify_counts(x: StandardPft, max_n: int) -> list[CountReport]:
    _check_guard(x.alphabet.size, max_n)
    zeta_counts = counts_via_zeta(x, max_n)
    return [
        CountReport(
            n,
            count_periodic_bruteforce(x, n),
            count_via_cycles(x, n),
            count_periodic_via_traces(x, n),
            zeta_counts[n - 1],
        )
        for n in range(1, max_n + 1)
    ]

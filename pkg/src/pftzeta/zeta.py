"""Zeta functions of periodic-finite-type shifts.

The zeta function is assembled from one necklace graph per rotation class of
nonzero binary words of length ``T``: each contributes
``det(I - tA) ** (-1) ** weight``, and classes whose root repeats an even
number of times with an odd weight also contribute
``det(I - t ** (2L) B ** 2)`` where ``B`` is the condensed matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactalg import (
    IntPoly,
    InconsistentCount,
    RationalFn,
    det_identity_minus_tA,
    periodic_counts_from_zeta,
)
from .graph import adjacency, build_ms_presentation, condensed_matrix, necklace_adjacency
from .model import StandardPft, derived_pft
from .necklace import NecklaceRep, enumerate_omega


@dataclass(frozen=True)
class NecklaceFactor:
    z: NecklaceRep
    det_a: IntPoly
    correction: IntPoly | None = None

    @property
    def exponent(self) -> int:
        return (-1) ** self.z.root_weight

    def to_dict(self) -> dict:
        z = self.z
        return {
            "z": z.bits,
            "root": z.root,
            "L": z.root_length,
            "W": z.root_weight,
            "N": z.repetitions,
            "exp": self.exponent,
            "det_I_minus_tA": list(self.det_a.coefficients),
            "correction": None if self.correction is None else list(self.correction.coefficients),
        }


@dataclass(frozen=True)
class ZetaResult:
    factors: RationalFn
    per_necklace: tuple[NecklaceFactor, ...]

    def to_dict(self) -> dict:
        return {
            **self.factors.to_dict(),
            "per_necklace": [f.to_dict() for f in self.per_necklace],
            "pretty": str(self.factors),
        }


def _nontrivial(factors):
    # constant-1 factors carry no information
    return RationalFn(tuple((p, e) for p, e in factors if p.coefficients != (1,)))


def needs_correction(z: NecklaceRep) -> bool:
    return z.repetitions % 2 == 0 and z.root_weight % 2 == 1


def zeta_pft(x: StandardPft, tie_break: str = "min") -> ZetaResult:
    records = []
    main, corrections = [], []
    for z in enumerate_omega(x.period, tie_break):
        det_a = det_identity_minus_tA(necklace_adjacency(x, z))
        correction = None
        if needs_correction(z):
            b = condensed_matrix(x, z)
            correction = det_identity_minus_tA(b @ b).substitute_power(2 * z.root_length)
            corrections.append((correction, 1))
        main.append((det_a, (-1) ** z.root_weight))
        records.append(NecklaceFactor(z, det_a, correction))
    return ZetaResult(_nontrivial(main + corrections), tuple(records))


def zeta_sft(x: StandardPft) -> RationalFn:
    """``1 / det(I - tA)`` for the presentation of a period-1 shift."""
    if x.period != 1:
        raise ValueError(f"expected period 1, got {x.period}")
    return _nontrivial([(det_identity_minus_tA(adjacency(build_ms_presentation(x))), -1)])


def odd_T_zeta(x: StandardPft) -> RationalFn:
    """Zeta function for odd period, where no correction terms arise."""
    if x.period % 2 == 0:
        raise ValueError(f"period {x.period} is even")
    return _nontrivial(
        [
            (det_identity_minus_tA(necklace_adjacency(x, z)), (-1) ** z.root_weight)
            for z in enumerate_omega(x.period)
        ]
    )


def trace_sign(z: NecklaceRep) -> int:
    """Sign of ``z``'s trace term: ``(-1) ** (ones in z - 1)``."""
    return (-1) ** (z.bits.count("1") - 1)


def count_periodic_via_traces(x: StandardPft, n: int) -> int:
    """``|P_n|`` as a signed sum of traces over necklaces of length ``gcd(n, T)``."""
    if n < 1:
        raise ValueError("n must be positive")
    d = gcd(n, x.period)
    xd = derived_pft(x, d)
    total = sum(
        trace_sign(z) * (necklace_adjacency(xd, z) ** n).trace()
        for z in enumerate_omega(d)
    )
    if total < 0:
        raise InconsistentCount(f"negative trace count {total} for n={n}")
    return total


def counts_via_traces(x: StandardPft, max_n: int) -> list[int]:
    return [count_periodic_via_traces(x, n) for n in range(1, max_n + 1)]


def counts_via_zeta(x: StandardPft, max_n: int) -> list[int]:
    return periodic_counts_from_zeta(zeta_pft(x).factors, max_n)

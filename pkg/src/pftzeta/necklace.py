"""Binary necklaces, primitive roots and the Moebius bookkeeping around them.

Binary words are plain ``str`` over ``"01"``.
"""

from __future__ import annotations

from dataclasses import dataclass


def primitive_root(w: str) -> str:
    """Shortest ``u`` with ``w == u * k``."""
    if not w:
        raise ValueError("empty word has no primitive root")
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class NecklaceRep:
    bits: str

    def __post_init__(self):
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValueError(f"not a binary word: {self.bits!r}")
        if self.bits[0] != "1":
            raise ValueError(f"representative must start with 1: {self.bits!r}")

    @property
    def root(self) -> str:
        return primitive_root(self.bits)

    @property
    def root_length(self) -> int:
        return len(self.root)

    @property
    def root_weight(self) -> int:
        """Number of 1s in the primitive root."""
        return self.root.count("1")

    @property
    def repetitions(self) -> int:
        return len(self.bits) // self.root_length

    def __str__(self):
        return self.bits


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def enumerate_omega(T: int, tie_break: str = "min") -> list[NecklaceRep]:
    """One representative per rotation class of nonzero binary words of length ``T``.

    Each representative starts with 1; ``tie_break`` picks the smallest
    (``"min"``) or largest (``"max"``) such rotation.  Sorted by bits.
    """
    if T < 1:
        raise ValueError("T must be positive")
    if tie_break not in ("min", "max"):
        raise ValueError(f"unknown tie-break {tie_break!r}")
    choose = min if tie_break == "min" else max
    reps = set()
    for k in range(1, 2**T):
        bits = format(k, f"0{T}b")
        reps.add(choose(r for r in rotations(bits) if r[0] == "1"))
    return [NecklaceRep(b) for b in sorted(reps)]


def j_set(z: NecklaceRep | str, q: int, modulus: int | None = None) -> frozenset[int]:
    """``{(q - i) mod T : z_i = 1}`` with ``T = len(z)`` unless given."""
    bits = z.bits if isinstance(z, NecklaceRep) else z
    T = len(bits) if modulus is None else modulus
    if len(bits) != T:
        raise ValueError("modulus must equal the length of z")
    if not 0 <= q < len(primitive_root(bits)):
        raise ValueError(f"q={q} outside [0, root length)")
    return frozenset((q - i) % T for i, b in enumerate(bits) if b == "1")


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def beta(z: NecklaceRep, s: int) -> int:
    """Coefficient attached to the ``s``-fold repetition of ``z``'s root.

    Nonzero only for ``s`` in ``{1, 2}``.
    """
    if s < 1 or z.repetitions % s:
        raise ValueError(f"s={s} does not divide {z.repetitions}")
    sign = (-1) ** (z.root_weight - 1)
    if s == 1:
        return sign
    if s == 2:
        return -1 - sign
    return 0


def beta_mobius_sum(z: NecklaceRep, s: int) -> int:
    """The defining divisor sum for :func:`beta`."""
    if s < 1 or z.repetitions % s:
        raise ValueError(f"s={s} does not divide {z.repetitions}")
    return sum(mobius(r) * (-1) ** ((s // r) * z.root_weight - 1) for r in divisors(s))

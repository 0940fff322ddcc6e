"""Word-based graphs and their integer adjacency matrices.

A word-based graph has ``num_phases`` phases; each phase holds some words of
a fixed length ``ell``.  There is an edge labeled ``a`` from ``u`` in phase
``i`` to ``v`` in phase ``i + 1 (mod num_phases)`` exactly when
``u[1:] == v[:-1]`` and ``v[-1] == a``.  Every graph here is determined by
which words populate each phase, so builders only choose the phases.

States are ``(phase, word)`` pairs; sorting them gives the canonical order
used for matrix rows and DOT output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .model import Alphabet, StandardPft, Word
from .necklace import NecklaceRep, primitive_root

State = tuple[int, Word]


@dataclass(frozen=True)
class Wbg:
    alphabet: Alphabet
    word_length: int
    phases: tuple[tuple[Word, ...], ...]
    edges: tuple[tuple[State, State, int], ...]

    @property
    def num_phases(self) -> int:
        return len(self.phases)

    @cached_property
    def states(self) -> tuple[State, ...]:
        return tuple((i, w) for i, ws in enumerate(self.phases) for w in ws)

    @cached_property
    def index(self) -> dict[State, int]:
        return {s: k for k, s in enumerate(self.states)}

    @cached_property
    def successors(self) -> dict[State, dict[int, State]]:
        """``successors[u][label] -> v``; well defined because the graph is deterministic."""
        out: dict[State, dict[int, State]] = {s: {} for s in self.states}
        for u, v, a in self.edges:
            out[u][a] = v
        return out

    def state_name(self, s: State) -> str:
        phase, word = s
        return f"{self.alphabet.format(word)}@{phase}"

    def to_dot(self, name: str = "wbg") -> str:
        def q(text):
            return '"' + text.replace('"', r"\"") + '"'

        lines = [f"digraph {q(name)} {{", "  rankdir=LR;"]
        for i, words in enumerate(self.phases):
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f"    label={q(f'phase_{i}')};")
            for w in words:
                lines.append(f"    {q(self.state_name((i, w)))};")
            lines.append("  }")
        for u, v, a in self.edges:
            label = self.alphabet.symbols[a]
            lines.append(f"  {q(self.state_name(u))} -> {q(self.state_name(v))} [label={q(label)}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        a = self.alphabet
        return {
            "num_phases": self.num_phases,
            "word_length": self.word_length,
            "states": [
                {"id": self.state_name(s), "phase": s[0], "word": a.serialize(s[1])}
                for s in self.states
            ],
            "edges": [
                {"source": self.state_name(u), "target": self.state_name(v), "label": a.symbols[lab]}
                for u, v, lab in self.edges
            ],
        }


def word_based_graph(alphabet: Alphabet, word_length: int, phases) -> Wbg:
    """Build the WBG whose phase ``i`` contains the words ``phases[i]``."""
    phases = tuple(tuple(sorted(set(ws))) for ws in phases)
    if not phases:
        raise ValueError("a word-based graph needs at least one phase")
    members = [set(ws) for ws in phases]
    T = len(phases)
    edges = []
    for i, words in enumerate(phases):
        nxt = (i + 1) % T
        for u in words:
            for a in range(alphabet.size):
                v = u[1:] + (a,)
                if v in members[nxt]:
                    edges.append(((i, u), (nxt, v), a))
    return Wbg(alphabet, word_length, phases, tuple(edges))


def build_ms_presentation(x: StandardPft) -> Wbg:
    """Presentation with phase 0 restricted to allowed words, the rest unrestricted."""
    every = tuple(x.alphabet.words(x.word_length))
    return word_based_graph(x.alphabet, x.word_length, [x.allowed] + [every] * (x.period - 1))


def build_gz(x: StandardPft, z: NecklaceRep | str) -> Wbg:
    """WBG with one phase per symbol of the primitive root of ``z``.

    A phase is restricted to allowed words where the root has a 1.
    """
    bits = z.bits if isinstance(z, NecklaceRep) else z
    root = primitive_root(bits)
    every = tuple(x.alphabet.words(x.word_length))
    phases = [x.allowed if b == "1" else every for b in root]
    return word_based_graph(x.alphabet, x.word_length, phases)


@dataclass(frozen=True)
class Matrix:
    """Square matrix of Python ints; ``labels`` maps rows to graph states when known."""

    entries: tuple[tuple[int, ...], ...]
    labels: tuple = ()

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")
        if self.labels and len(self.labels) != n:
            raise ValueError("one label per row required")

    @classmethod
    def of(cls, rows, labels=()) -> Matrix:
        return cls(tuple(tuple(int(v) for v in row) for row in rows), tuple(labels))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: Matrix) -> Matrix:
        cols = list(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        )
        if not cols:
            rows = tuple(() for _ in self.entries)
        return Matrix(rows, self.labels)

    def __pow__(self, n: int) -> Matrix:
        if n < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.dimension)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return Matrix(result.entries, self.labels)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dimension))

    def submatrix(self, indices) -> Matrix:
        indices = list(indices)
        labels = tuple(self.labels[i] for i in indices) if self.labels else ()
        return Matrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices), labels)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def adjacency(g: Wbg) -> Matrix:
    n = len(g.states)
    rows = [[0] * n for _ in range(n)]
    for u, v, _ in g.edges:
        rows[g.index[u]][g.index[v]] = 1
    return Matrix.of(rows, g.states)


@lru_cache(maxsize=None)
def _necklace_adjacency(alphabet: Alphabet, word_length: int, forbidden0, root: str) -> Matrix:
    x = StandardPft(alphabet, 1, word_length, forbidden0)
    return adjacency(build_gz(x, root))


def necklace_adjacency(x: StandardPft, z: NecklaceRep | str) -> Matrix:
    """Adjacency matrix of :func:`build_gz`, cached by primitive root."""
    bits = z.bits if isinstance(z, NecklaceRep) else z
    return _necklace_adjacency(x.alphabet, x.word_length, x.forbidden0, primitive_root(bits))


def condensed_matrix(x: StandardPft, z: NecklaceRep | str) -> Matrix:
    """Phase-0 block of ``A ** L`` where ``A`` is the necklace graph matrix and
    ``L`` its number of phases.

    Entries count paths (not 0/1 reachability); the trace identity between
    the two matrices needs the counts.
    """
    a = necklace_adjacency(x, z)
    bits = z.bits if isinstance(z, NecklaceRep) else z
    power = a ** len(primitive_root(bits))
    phase0 = [k for k, s in enumerate(a.labels) if s[0] == 0]
    return power.submatrix(phase0)

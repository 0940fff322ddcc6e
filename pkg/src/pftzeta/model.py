"""PFT descriptions and conversion to standard form.

A periodic-finite-type shift is given by an alphabet, a period ``T`` and a
list of ``T`` forbidden sets; a word in the ``j``-th set may not start at
any position congruent to ``j`` modulo ``T`` (for some fixed offset of the
sequence).  :func:`normalize` rewrites an arbitrary description so that only
the first set is non-empty and all of its words have a common length.

Words are tuples of alphabet indices, so alphabets may use multi-character
tokens.  Lexicographic order on index tuples is the alphabet order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Iterator

Word = tuple[int, ...]


class SpecError(ValueError):
    """Malformed PFT description; ``where`` names the offending field."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise SpecError("alphabet must contain at least one symbol", "alphabet")
        for i, s in enumerate(self.symbols):
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise SpecError(
                    "symbols must be non-empty strings without whitespace",
                    f"alphabet[{i}]",
                )
        if len(set(self.symbols)) != len(self.symbols):
            raise SpecError("duplicate symbols", "alphabet")

    @classmethod
    def of(cls, symbols) -> Alphabet:
        """``Alphabet.of("01")`` or ``Alphabet.of(["ab", "c"])``."""
        return cls(tuple(symbols))

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def words(self, length: int) -> Iterator[Word]:
        """All words of the given length in lexicographic order."""
        return product(range(self.size), repeat=length)

    def word(self, text) -> Word:
        """Parse a word from a string (single-character alphabets) or a token list."""
        if isinstance(text, str):
            if not self.single_char:
                raise SpecError(
                    "words must be token arrays when the alphabet has "
                    "multi-character symbols"
                )
            tokens = list(text)
        else:
            tokens = list(text)
        try:
            return tuple(self._index[t] for t in tokens)
        except (KeyError, TypeError):
            raise SpecError(f"word {text!r} uses a symbol outside the alphabet") from None

    def format(self, word: Word) -> str:
        sep = "" if self.single_char else "."
        return sep.join(self.symbols[i] for i in word)

    def serialize(self, word: Word):
        if self.single_char:
            return self.format(word)
        return [self.symbols[i] for i in word]


@dataclass(frozen=True)
class PftSpec:
    """User-level description: ``forbidden[j]`` holds the words banned at phase ``j``."""

    alphabet: Alphabet
    period: int
    forbidden: tuple[frozenset[Word], ...]

    def __post_init__(self):
        if not isinstance(self.period, int) or isinstance(self.period, bool) or self.period < 1:
            raise SpecError("period must be a positive integer", "period")
        if len(self.forbidden) != self.period:
            raise SpecError(
                f"expected {self.period} forbidden lists, got {len(self.forbidden)}",
                "forbidden",
            )
        for j, words in enumerate(self.forbidden):
            for w in words:
                if not w:
                    raise SpecError("forbidden words must be non-empty", f"forbidden[{j}]")
                if any(not 0 <= a < self.alphabet.size for a in w):
                    raise SpecError("symbol index out of range", f"forbidden[{j}]")


@dataclass(frozen=True)
class StandardPft:
    """Standard form: every forbidden word has length ``word_length`` and sits at phase 0."""

    alphabet: Alphabet
    period: int
    word_length: int
    forbidden0: tuple[Word, ...]

    def __post_init__(self):
        if self.period < 1:
            raise SpecError("period must be a positive integer", "period")
        if self.word_length < 1:
            raise SpecError("word length must be at least 1", "word_length")
        for w in self.forbidden0:
            if len(w) != self.word_length:
                raise SpecError(
                    f"forbidden word of length {len(w)} in standard form of length "
                    f"{self.word_length}",
                    "forbidden[0]",
                )
        # canonical: sorted and deduplicated
        object.__setattr__(self, "forbidden0", tuple(sorted(set(self.forbidden0))))

    @cached_property
    def forbidden_set(self) -> frozenset[Word]:
        return frozenset(self.forbidden0)

    @cached_property
    def allowed(self) -> tuple[Word, ...]:
        """Length-``word_length`` words outside the forbidden set, lexicographic."""
        return tuple(w for w in self.alphabet.words(self.word_length) if w not in self.forbidden_set)

    @property
    def is_empty(self) -> bool:
        return not self.allowed

    def as_spec(self) -> PftSpec:
        lists = [frozenset(self.forbidden0)] + [frozenset()] * (self.period - 1)
        return PftSpec(self.alphabet, self.period, tuple(lists))


def expand_shifted_word(f: Word, j: int, alphabet: Alphabet) -> set[Word]:
    """Words of length ``j + len(f)`` ending with ``f``.

    Banning ``f`` at phase ``j`` is the same as banning each of these at
    phase 0.
    """
    if j < 1:
        raise ValueError("shift must be positive")
    return {prefix + tuple(f) for prefix in alphabet.words(j)}


def normalize(spec: PftSpec) -> StandardPft:
    alphabet = spec.alphabet
    base: set[Word] = set(spec.forbidden[0])
    for j, words in enumerate(spec.forbidden[1:], start=1):
        for f in words:
            base |= expand_shifted_word(f, j, alphabet)

    # an everywhere-empty list gives the full shift with length-1 states
    ell = max((len(f) for f in base), default=1)
    forbidden0 = {
        f + tail for f in base for tail in alphabet.words(ell - len(f))
    }
    return StandardPft(alphabet, spec.period, ell, tuple(forbidden0))


def derived_pft(x: StandardPft, d: int) -> StandardPft:
    """The same forbidden set imposed with period ``d`` (``d`` must divide the period)."""
    if d < 1 or x.period % d:
        raise ValueError(f"{d} does not divide the period {x.period}")
    if d == x.period:
        return x
    return StandardPft(x.alphabet, d, x.word_length, x.forbidden0)


def standard(alphabet, period: int, forbidden0) -> StandardPft:
    """Convenience constructor: ``standard("01", 2, ["11"])``."""
    a = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
    words = [a.word(w) for w in forbidden0]
    if not words:
        return StandardPft(a, period, 1, ())
    return StandardPft(a, period, len(words[0]), tuple(words))


# ---------------------------------------------------------------- JSON I/O


def spec_from_dict(data: Any) -> PftSpec:
    if not isinstance(data, dict):
        raise SpecError("top level must be a JSON object")
    for key in ("alphabet", "period", "forbidden"):
        if key not in data:
            raise SpecError("missing field", key)

    symbols = data["alphabet"]
    if not isinstance(symbols, list):
        raise SpecError("must be an array of strings", "alphabet")
    alphabet = Alphabet(tuple(symbols))

    period = data["period"]
    if not isinstance(period, int) or isinstance(period, bool) or period < 1:
        raise SpecError("must be a positive integer", "period")

    lists = data["forbidden"]
    if not isinstance(lists, list):
        raise SpecError("must be an array of arrays", "forbidden")
    if len(lists) != period:
        raise SpecError(f"expected {period} lists, got {len(lists)}", "forbidden")

    forbidden = []
    for j, words in enumerate(lists):
        if not isinstance(words, list):
            raise SpecError("must be an array", f"forbidden[{j}]")
        parsed = set()
        for k, w in enumerate(words):
            where = f"forbidden[{j}][{k}]"
            if not isinstance(w, (str, list)) or (
                isinstance(w, list) and not all(isinstance(t, str) for t in w)
            ):
                raise SpecError("word must be a string or an array of symbols", where)
            try:
                word = alphabet.word(w)
            except SpecError as e:
                raise SpecError(str(e), where) from None
            if not word:
                raise SpecError("forbidden words must be non-empty", where)
            parsed.add(word)
        forbidden.append(frozenset(parsed))
    spec = PftSpec(alphabet, period, tuple(forbidden))

    if "word_length" in data:
        # present in normalize output; must agree with what we would derive
        ell = data["word_length"]
        x = normalize(spec)
        if ell != x.word_length and spec.forbidden[0]:
            raise SpecError(f"inconsistent with forbidden words ({x.word_length})", "word_length")
    return spec


def load_spec(text: str) -> PftSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return spec_from_dict(data)


def spec_to_dict(spec: PftSpec) -> dict:
    a = spec.alphabet
    return {
        "alphabet": list(a.symbols),
        "period": spec.period,
        "forbidden": [[a.serialize(w) for w in sorted(ws)] for ws in spec.forbidden],
    }


def standard_to_dict(x: StandardPft) -> dict:
    """Serialized standard form; readable back by :func:`spec_from_dict`."""
    a = x.alphabet
    lists: list[list] = [[a.serialize(w) for w in x.forbidden0]]
    lists += [[] for _ in range(x.period - 1)]
    return {
        "alphabet": list(a.symbols),
        "period": x.period,
        "word_length": x.word_length,
        "forbidden": lists,
    }

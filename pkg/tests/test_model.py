import json

import pytest
from hypothesis import given, settings, strategies as st

from pftzeta.model import (
    Alphabet,
    PftSpec,
    SpecError,
    StandardPft,
    derived_pft,
    expand_shifted_word,
    load_spec,
    normalize,
    spec_from_dict,
    standard,
    standard_to_dict,
)
from pftzeta.oracle import periodic_words

B = Alphabet.of("01")


def words(alphabet, *texts):
    return {alphabet.word(t) for t in texts}


def spec(alphabet, period, *lists):
    a = Alphabet.of(alphabet)
    return PftSpec(a, period, tuple(frozenset(a.word(w) for w in ws) for ws in lists))


@pytest.mark.parametrize(
    "f, j, alphabet, expected",
    [
        ("1", 1, "01", {"01", "11"}),
        ("0", 2, "01", {"000", "010", "100", "110"}),
        ("ab", 1, "abc", {"aab", "bab", "cab"}),
    ],
)
def test_expand_shifted_word(f, j, alphabet, expected):
    a = Alphabet.of(alphabet)
    assert expand_shifted_word(a.word(f), j, a) == words(a, *expected)


def test_normalize_moves_phase_one_word():
    x = normalize(spec("01", 2, [], ["1"]))
    assert (x.period, x.word_length) == (2, 2)
    assert set(x.forbidden0) == words(B, "01", "11")


def test_normalize_already_standard():
    x = normalize(spec("01", 1, ["11"]))
    assert x == standard("01", 1, ["11"])


def test_normalize_pads_short_words():
    x = normalize(spec("01", 1, ["1", "00"]))
    assert x.word_length == 2
    assert set(x.forbidden0) == words(B, "10", "11", "00")


def test_normalize_everything_empty_is_full_shift():
    x = normalize(spec("01", 3, [], [], []))
    assert (x.word_length, x.forbidden0) == (1, ())
    assert len(x.allowed) == 2


def test_derived_pft():
    x = standard("01", 4, ["11"])
    assert derived_pft(x, 2) == StandardPft(B, 2, 2, x.forbidden0)
    assert derived_pft(standard("01", 6, ["11"]), 1).period == 1
    assert derived_pft(x, 4) == x
    with pytest.raises(ValueError):
        derived_pft(x, 3)


def test_standard_form_is_sorted_and_deduplicated():
    x = StandardPft(B, 1, 2, ((1, 1), (0, 1), (1, 1)))
    assert x.forbidden0 == ((0, 1), (1, 1))


def test_full_forbidden_set_is_empty_shift():
    x = standard("01", 1, ["00", "01", "10", "11"])
    assert x.is_empty
    for n in range(1, 6):
        assert not periodic_words(x, n)


@pytest.mark.parametrize(
    "s",
    [
        spec("01", 2, [], ["1"]),
        spec("01", 1, ["1", "00"]),
        spec("01", 3, ["11"], ["0"], []),
        spec("01", 3, [], ["101"], ["00"]),
        spec("abc", 2, ["a"], ["bc", "c"]),
        spec("01", 4, ["1"], [], ["11"], ["0"]),
    ],
)
def test_normalize_preserves_periodic_points(s):
    # brute-force membership on the raw description vs. the standard form
    x = normalize(s)
    top = 10 if s.alphabet.size == 2 else 7
    for n in range(1, top + 1):
        assert periodic_words(s, n) == periodic_words(x, n), n


def random_specs():
    word = st.lists(st.integers(0, 1), min_size=1, max_size=3).map(tuple)

    def build(period):
        lists = st.lists(st.frozensets(word, max_size=2), min_size=period, max_size=period)
        return lists.map(lambda ls: PftSpec(B, period, tuple(ls)))

    return st.integers(1, 3).flatmap(build)


@settings(max_examples=40, deadline=None)
@given(random_specs())
def test_normalize_invariants(s):
    x = normalize(s)
    assert len(x.forbidden0) <= 2**x.word_length
    assert normalize(x.as_spec()) == x
    for n in range(1, 9):
        assert periodic_words(s, n) == periodic_words(x, n)


def test_json_roundtrip_single_char():
    s = load_spec('{"alphabet": ["0","1"], "period": 2, "forbidden": [["11"], []]}')
    x = normalize(s)
    data = standard_to_dict(x)
    assert data == {"alphabet": ["0", "1"], "period": 2, "word_length": 2, "forbidden": [["11"], []]}
    assert normalize(spec_from_dict(json.loads(json.dumps(data)))) == x


def test_json_token_arrays():
    s = load_spec('{"alphabet": ["ab","c"], "period": 1, "forbidden": [[["ab","c"],["c"]]]}')
    x = normalize(s)
    assert x.word_length == 2
    assert standard_to_dict(x)["forbidden"][0] == [["ab", "c"], ["c", "ab"], ["c", "c"]]


@pytest.mark.parametrize(
    "text, where",
    [
        ("{", "line 1"),
        ('{"alphabet": [], "period": 1, "forbidden": [[]]}', "alphabet"),
        ('{"alphabet": ["0","0"], "period": 1, "forbidden": [[]]}', "alphabet"),
        ('{"alphabet": ["0"," "], "period": 1, "forbidden": [[]]}', "alphabet[1]"),
        ('{"alphabet": ["0","1"], "period": 0, "forbidden": []}', "period"),
        ('{"alphabet": ["0","1"], "period": 2, "forbidden": [[]]}', "forbidden"),
        ('{"alphabet": ["0","1"], "period": 1, "forbidden": [["12"]]}', "forbidden[0][0]"),
        ('{"alphabet": ["0","1"], "period": 1, "forbidden": [[""]]}', "forbidden[0][0]"),
        ('{"alphabet": ["ab","c"], "period": 1, "forbidden": [["abc"]]}', "forbidden[0][0]"),
        ('{"alphabet": ["0","1"], "period": 1}', "forbidden"),
    ],
)
def test_malformed_input(text, where):
    with pytest.raises(SpecError) as info:
        load_spec(text)
    assert info.value.where.startswith(where)

import json

import pytest

from racg_anosov.core import DomainError
from racg_anosov.racg import (BUILTIN_NERVES, builtin_system, induced_subsystem, is_finite, is_irreducible, load_system,
                              parse_nerve)


def test_parse_square_plus_point():
    sys = parse_nerve({"generators": ["a", "b", "c", "d", "e"], "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]})
    assert sys.n == 5
    assert sys.generators == ("a", "b", "c", "d", "e")
    a, b, c, d, e = range(5)
    assert sys.commute(a, b) and sys.commute(b, a)
    assert not sys.commute(a, c)
    assert not any(sys.commute(e, x) for x in range(5))
    assert sys.link(a) == frozenset({b, d})
    assert sys.star(a) == frozenset({a, b, d})


def test_parse_single_generator():
    sys = parse_nerve({"generators": ["a"], "edges": []})
    assert sys.n == 1
    assert sys.edges == frozenset()


def test_parse_keeps_declared_order():
    sys = parse_nerve({"generators": ["z", "y", "x"]})
    assert sys.generators == ("z", "y", "x")
    assert sys.index("x") == 2


@pytest.mark.parametrize("doc", [
    {"generators": ["a"], "edges": [["a", "a"]]},
    {"generators": ["a", "a"], "edges": []},
    {"generators": ["a", "b"], "edges": [["a", "c"]]},
    {"generators": ["a", "b"], "edges": [["a"]]},
    {"edges": []},
    ["a", "b"],
])
def test_parse_rejects_invalid_documents(doc):
    with pytest.raises(DomainError):
        parse_nerve(doc)


def test_unknown_generator_name(fig_a1):
    with pytest.raises(DomainError):
        fig_a1.index("q")


def test_irreducibility(fig_a1, klein):
    assert is_irreducible(fig_a1)
    assert not is_irreducible(klein)
    assert is_irreducible(parse_nerve({"generators": ["a"]}))
    assert is_irreducible(builtin_system("pentagon"))


def test_finiteness(klein, dihedral):
    assert is_finite(klein)
    assert not is_finite(dihedral)


def test_induced_subsystem(fig_a2):
    T = fig_a2.subset(["t1", "d1", "d2"])
    sub, members = induced_subsystem(fig_a2, T)
    assert sub.generators == ("t1", "d1", "d2")
    assert members == tuple(sorted(T))
    assert sub.commute(0, 1) and sub.commute(0, 2)
    assert not sub.commute(1, 2)


def test_builtins_parse():
    for name in BUILTIN_NERVES:
        assert builtin_system(name).n == len(BUILTIN_NERVES[name]["generators"])


def test_load_system_from_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"generators": ["p", "q", "r", "s"], "edges": [["p", "q"], ["q", "r"], ["r", "s"], ["s", "p"]]}))
    sys = load_system(str(path))
    assert sys.n == 4
    assert sys.commute(sys.index("p"), sys.index("q"))
    assert not sys.commute(sys.index("p"), sys.index("r"))


def test_load_system_builtin_and_missing(tmp_path):
    assert load_system("fig-a1") == builtin_system("fig-a1")
    with pytest.raises(DomainError):
        load_system(str(tmp_path / "missing.json"))


def test_to_dict_round_trip(fig_a2):
    assert parse_nerve(fig_a2.to_dict()) == fig_a2

import pytest

from oracles import brute_automorphisms, brute_orbits
from semicat.aut import orbit_count, tau
from semicat.family import (BOUNDED, INCREASING, NOTE, UNCLEAR, FamilySpec, member, render_table,
                            run_family, trend)


def _values(report):
    return [r["value"] for r in report["rows"]]


def test_chain_tau_increases():
    rep = run_family(FamilySpec("chain_semilattice", tuple(range(1, 9))))
    assert _values(rep) == list(range(1, 9)) and rep["trend"] == INCREASING
    assert rep["note"] == NOTE


def test_null_tau_constant():
    rep = run_family(FamilySpec("null", tuple(range(1, 9))))
    assert _values(rep) == [2] * 8 and rep["trend"] == BOUNDED


def test_brandt_tau():
    # {0}, idempotents, and the rest; for m >= 2 the twisted automorphisms merge
    # the off-diagonal elements with g and with 1
    rep = run_family(FamilySpec("brandt", (1, 2, 3)))
    assert _values(rep) == [3, 4, 4]


@pytest.mark.parametrize("family", ["chain_semilattice", "null", "brandt", "direct_power",
                                    "example_c", "boolean_zs"])
def test_statistics_match_direct_calls(family):
    params = (2, 3)
    for stat, n in (("tau", 1), ("orbit_count", 2), ("aut_order", 1)):
        spec = FamilySpec(family, params, stat, n)
        rep = run_family(spec)
        for row in rep["rows"]:
            S = member(spec, row["parameter"])
            assert row["order"] == S.order
            if S.order <= 8:
                auts = brute_automorphisms(S)
                expected = {"tau": brute_orbits(S.order, 1, auts),
                            "orbit_count": brute_orbits(S.order, 2, auts),
                            "aut_order": len(auts)}[stat]
            else:
                expected = {"tau": tau(S), "orbit_count": orbit_count(S, 2).orbit_count}.get(stat)
            if expected is not None:
                assert row["value"] == expected


def test_trend_labels():
    assert trend([1, 2, 3]) == INCREASING
    assert trend([2, 2, 2]) == BOUNDED
    assert trend([5]) == BOUNDED
    assert trend([3, 1, 2]) == UNCLEAR


@pytest.mark.parametrize("kwargs", [dict(family="nope", parameters=(1,)),
                                    dict(family="null", parameters=()),
                                    dict(family="null", parameters=(0, 1)),
                                    dict(family="null", parameters=(1,), statistic="x"),
                                    dict(family="null", parameters=(1,), n=0)])
def test_invalid_specs(kwargs):
    with pytest.raises(ValueError):
        FamilySpec(**kwargs)


def test_table_rendering():
    text = render_table(run_family(FamilySpec("null", (1, 2))))
    assert NOTE in text and text.rstrip().endswith(BOUNDED)


def test_deterministic():
    spec = FamilySpec("example_c", (2, 3, 4), "orbit_count", 2)
    assert run_family(spec) == run_family(spec)

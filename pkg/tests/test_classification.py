from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorsion.classification import (
    CM,
    PHI1,
    PHI_INF_4,
    PHI_INF_Q4,
    PHI_STAR_4,
    PHI_STAR_4_G,
    RULES,
    S_Q,
    SUTHERLAND,
    TABLE1_COLUMNS,
    TABLE1_ROWS,
    candidate_orders,
    check_consistency,
    compare_table1,
    generate_table1,
    quartic_examples,
    rule_filter,
)
from qtorsion.structures import C, TorsionStructure, element_orders, subgroup_of


def elements(G: TorsionStructure):
    return list(product(range(G.a), range(G.b)))


def order_of(G: TorsionStructure, g) -> int:
    x, y = g
    return (G.a // gcd(G.a, x)) * (G.b // gcd(G.b, y)) // gcd(G.a // gcd(G.a, x), G.b // gcd(G.b, y))


def counts(G: TorsionStructure) -> dict[int, int]:
    out: dict[int, int] = {}
    for g in elements(G):
        k = order_of(G, g)
        out[k] = out.get(k, 0) + 1
    return out


def test_subgroup_examples():
    assert subgroup_of(C(2, 4), C(4, 8))
    assert not subgroup_of(C(3, 3), C(6))
    assert subgroup_of(C(4), C(20))


def test_element_orders_examples():
    assert element_orders(C(4, 8)) == {1, 2, 4, 8}
    assert element_orders(C(15)) == {1, 3, 5, 15}
    assert element_orders(C(2, 6)) == {1, 2, 3, 6}


def test_structure_parsing():
    assert TorsionStructure.parse("C2×C4") == C(2, 4) == TorsionStructure.parse("(2,4)")
    assert TorsionStructure.parse("Z/2 x Z/4") == C(2, 4)
    assert TorsionStructure.parse("(5)") == C(5)
    assert C(4, 2) == C(2, 4)
    with pytest.raises(ValueError):
        C(2, 3)
    with pytest.raises(ValueError):
        TorsionStructure.parse("C2xC4xC8")


structures = st.builds(lambda a, k: C(a, a * k), st.integers(1, 6), st.integers(1, 6))


@settings(max_examples=80)
@given(structures, structures)
def test_subgroup_matches_counting(A, B):
    # A embeds in B iff B has at least as many elements of each order-divisor kernel
    by_count = all(A.count_killed_by(d) <= B.count_killed_by(d) for d in range(1, A.b * B.b + 1))
    assert subgroup_of(A, B) == by_count


@settings(max_examples=60)
@given(structures)
def test_element_orders_match_enumeration(H):
    c = counts(H)
    assert element_orders(H) == set(c)
    assert sum(c.values()) == H.order
    for d in range(1, H.b + 1):
        assert H.count_killed_by(d) == sum(v for k, v in c.items() if d % k == 0)


def test_rule_filter_examples():
    v = rule_filter(C(4), C(20))
    assert v.kind == "ruled_out" and v.rule == "teo-5"
    v = rule_filter(C(1), C(11))
    assert v.kind == "ruled_out" and v.rule == "teo-2"
    assert rule_filter(C(2), C(20)).allowed
    assert rule_filter(C(3), C(6)).rule == "teo-1"
    assert rule_filter(C(3), C(15)).allowed
    assert rule_filter(C(4), C(6)).kind == "not_supergroup"
    assert rule_filter(C(3), C(9)).rule == "teo-12"
    assert rule_filter(C(3), C(6, 6)).rule == "teo-1"
    assert rule_filter(C(2, 6), C(6, 6)).rule == "teo-9"
    assert rule_filter(C(2), C(6, 6)).allowed


@pytest.mark.parametrize("G, allowed", [
    (C(7), {C(7)}),
    (C(10), {C(10), C(20), C(2, 10)}),
    (C(12), {C(12), C(24), C(2, 12)}),
])
def test_table_columns(G, allowed):
    assert generate_table1().allowed(G) == allowed


def test_table_regenerates_every_column():
    table = generate_table1()
    assert len(TABLE1_COLUMNS) == 15
    for G in TABLE1_COLUMNS:
        assert table.allowed(G) == PHI_STAR_4_G[G]


@pytest.mark.parametrize("G, H, rule", [
    (C(4), C(20), "teo-5"), (C(8), C(24), "teo-6"),
    (C(2, 2), C(2, 10), "teo-7"), (C(2, 4), C(2, 12), "teo-8"),
])
def test_spot_checked_cells(G, H, rule):
    assert generate_table1().cells[H, G].rule == rule


def test_stored_annotations_only_differ_in_citation():
    for d in compare_table1():
        assert d.stored_rule_applies, d


def test_machine_lines():
    lines = generate_table1().machine_lines()
    assert "G=C4 H=C20 verdict=teo-5" in lines
    assert "G=C2 H=C20 verdict=allowed" in lines
    assert len(lines) == len(TABLE1_ROWS) * len(TABLE1_COLUMNS)


def test_set_consistency():
    check_consistency()
    assert frozenset().union(*PHI_STAR_4_G.values()) == PHI_STAR_4
    assert PHI_INF_Q4 == PHI_STAR_4 - {C(15)}
    assert C(15) in PHI_STAR_4 and C(15) not in PHI_INF_Q4
    assert len(PHI1) == 15 and set(PHI_STAR_4_G) == set(PHI1)
    assert S_Q[4] == {2, 3, 5, 7, 13}
    for G, Hs in PHI_STAR_4_G.items():
        assert all(subgroup_of(G, H) for H in Hs)
        assert Hs <= PHI_STAR_4
    assert PHI_STAR_4 - {C(15)} <= PHI_INF_4


def test_cm_and_image_tables():
    assert CM[1] <= CM[2] and CM[1] <= CM[4]
    assert C(11) in CM[5]
    for row in SUTHERLAND:
        assert row.d % row.d1 == 0 and row.d0 <= row.d1
        assert row.prime in (3, 5)


def test_candidate_orders():
    assert candidate_orders(C(7)) == {7}
    assert 16 in candidate_orders(C(2))
    assert candidate_orders(C(3)) == {o for H in PHI_STAR_4_G[C(3)] for o in element_orders(H)} - {1}


@settings(max_examples=60)
@given(st.sampled_from(sorted(PHI1)), st.sampled_from(sorted(PHI_INF_4 | {C(15)})))
def test_rule_engine_is_pure_and_consistent(G, H):
    v = rule_filter(G, H)
    assert v == rule_filter(G, H)
    if v.allowed:
        assert subgroup_of(G, H)
        assert all(not r.executable or not r.rules_out(G, H) for r in RULES)
    if v.kind == "ruled_out":
        ids = [r.id for r in RULES]
        earlier = RULES[:ids.index(v.rule)]
        assert all(not r.executable or not r.rules_out(G, H) for r in earlier)


def test_quartic_example_rows_are_allowed():
    rows = quartic_examples()
    assert len(rows) >= 30
    for r in rows:
        assert r.H in PHI_STAR_4_G[r.G], r

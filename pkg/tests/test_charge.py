"""Charge bookkeeping, node orders, and the semisimplicity criterion."""

from fractions import Fraction

import pytest

from ariki.charge import (ChargeParams, am_below, below_key, flotw_above,
                          is_below, is_semisimple, residue)
from ariki.crystal import flotw_multipartitions
from ariki.partitions import Node, diagram_nodes


def test_residue_examples():
    p = ChargeParams(2, 4, (0, 2))
    assert residue(Node(1, 4, 0), p) == 3
    assert residue(Node(2, 5, 1), p) == 1
    assert residue(Node(1, 1, 0), ChargeParams(2, 4, (0, 1))) == 0


def test_residue_component_out_of_range():
    with pytest.raises(ValueError):
        residue(Node(1, 1, 2), ChargeParams(2, 4, (0, 1)))


def test_residue_constant_on_diagonals():
    p = ChargeParams(3, 5, (0, 2, 4))
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(3):
                assert residue(Node(a, b, c), p) == residue(Node(a + 1, b + 1, c), p)


def test_am_below_examples():
    assert am_below(Node(1, 1, 0), Node(1, 1, 1))
    assert am_below(Node(1, 2, 0), Node(2, 1, 0))
    assert not am_below(Node(2, 1, 1), Node(1, 5, 1))


def test_flotw_above_examples():
    p = ChargeParams(2, 4, (0, 1))
    assert flotw_above(Node(1, 1, 0), Node(1, 1, 1), p)
    g = Node(2, 3, 1)
    assert not flotw_above(g, g, p)
    p0 = ChargeParams(2, 4, (0, 0))
    assert flotw_above(Node(1, 1, 1), Node(1, 1, 0), p0)


def test_orders_are_strict_and_total_on_distinct_keys():
    p = ChargeParams(2, 3, (0, 1))
    nodes = [Node(a, b, c) for a in (1, 2, 3) for b in (1, 2, 3) for c in (0, 1)]
    for g in nodes:
        for h in nodes:
            for order in ("am", "flotw"):
                if is_below(g, h, order, p):
                    assert not is_below(h, g, order, p)
            if (g.comp, g.row) != (h.comp, h.row):
                assert am_below(g, h) != am_below(h, g)
            key = lambda x: (x.col - x.row + p.v[x.comp], x.comp)
            if key(g) != key(h):
                assert flotw_above(g, h, p) != flotw_above(h, g, p)


def test_is_semisimple_examples():
    assert not is_semisimple(ChargeParams(2, 4, (0, 1)), 2)
    assert is_semisimple(ChargeParams(1, 5, (0,), 0), 2)
    assert is_semisimple(ChargeParams(2, 4, (0, 1)), 0)


def test_is_semisimple_needs_large_e():
    assert not is_semisimple(ChargeParams(1, 3, (0,), 0), 3)
    assert is_semisimple(ChargeParams(1, 4, (0,), 0), 3)


def test_default_shift_is_minimal():
    p = ChargeParams(2, 4, (0, 1))
    assert p.s == 1 and p.scaled_m == (8, 6)
    q = ChargeParams(2, 4, (1, 2))
    assert q.s == 0 and q.scaled_m == (2, 0)
    r = ChargeParams(3, 3, (0, 1, 2))
    assert r.s == 0 and r.scaled_m == (0, 0, 0)


def test_shift_bump_adds_de_everywhere():
    for p in (ChargeParams(2, 4, (0, 1)), ChargeParams(3, 3, (0, 1, 2))):
        bumped = ChargeParams(p.d, p.e, p.v, p.s + 1)
        for j in range(p.d):
            assert bumped.scaled_m[j] - p.scaled_m[j] == p.d * p.e
        diffs = {(i, j): p.scaled_m[i] - p.scaled_m[j]
                 for i in range(p.d) for j in range(p.d)}
        diffs_b = {(i, j): bumped.scaled_m[i] - bumped.scaled_m[j]
                   for i in range(p.d) for j in range(p.d)}
        assert diffs == diffs_b


def test_m_values_are_exact():
    p = ChargeParams(2, 4, (0, 1), 1)
    assert p.m == (Fraction(4), Fraction(3))


def test_validation_errors():
    with pytest.raises(ValueError):
        ChargeParams(2, 4, (1, 0))     # not weakly increasing
    with pytest.raises(ValueError):
        ChargeParams(2, 4, (0, 4))     # charge >= e
    with pytest.raises(ValueError):
        ChargeParams(2, 1, (0, 0))     # e too small
    with pytest.raises(ValueError):
        ChargeParams(2, 4, (0,))       # wrong charge count
    with pytest.raises(ValueError):
        ChargeParams(2, 4, (0, 1), 0)  # shift leaves a negative weight


def test_json_dict_round_trip():
    p = ChargeParams(2, 4, (0, 1), 1)
    assert p.to_dict() == {"d": 2, "e": 4, "v": [0, 1], "s": 1}
    assert ChargeParams.from_dict(p.to_dict()) == p


@pytest.mark.parametrize("d,e,v", [(2, 4, (0, 1)), (3, 3, (0, 1, 2))])
def test_flotw_order_matches_scaled_diagonals_on_vertices(d, e, v):
    # on same-residue nodes of a diagonal-crystal vertex, the scaled-weight
    # diagonal comparison agrees with the order relation
    p = ChargeParams(d, e, v)
    for n in range(6):
        for mp in flotw_multipartitions(p, n):
            nodes = diagram_nodes(mp)
            for g in nodes:
                for h in nodes:
                    if g == h or residue(g, p) != residue(h, p):
                        continue
                    lhs = d * (g.col - g.row) + p.scaled_m[g.comp]
                    rhs = d * (h.col - h.row) + p.scaled_m[h.comp]
                    if lhs > rhs:
                        assert flotw_above(h, g, p)
                        assert not flotw_above(g, h, p)


def test_below_key_sorts_lowest_first():
    p = ChargeParams(2, 4, (0, 1))
    nodes = [Node(1, 1, 1), Node(1, 2, 0), Node(2, 1, 0)]
    ordered = sorted(nodes, key=below_key("flotw", p))
    for i in range(len(ordered) - 1):
        assert not flotw_above(ordered[i], ordered[i + 1], p)

"""Type B specializations: closed-form a-values and both matrix regimes."""

from fractions import Fraction

import pytest

from ariki.canonical import decomposition_matrix
from ariki.charge import ChargeParams, is_semisimple
from ariki.crystal import crystal_graph
from ariki.symbols import a_value
from ariki.typeb import (a_value_typeb, bipartitions_of, canonical_basic_set_b,
                         decomposition_matrix_b, even_charge_params,
                         type_a_params)


def test_a_value_typeb_examples():
    assert a_value_typeb(((1,), ()), 1) == 0
    assert a_value_typeb(((), (1,)), 1) == 1
    assert a_value_typeb(((), ()), 1) == 0
    assert a_value_typeb(((), ())) == 0


def test_a_value_typeb_r_too_small():
    with pytest.raises(ValueError):
        a_value_typeb(((2, 1), ()), 1)


def test_a_value_typeb_matches_symbol_formula():
    for e in (2, 4):
        p = even_charge_params(e)
        assert p.m == (Fraction(1), Fraction(0))
        for n in range(6):
            for bp in bipartitions_of(n):
                hmax = max(len(bp[0]), len(bp[1]))
                values = {a_value_typeb(bp, r) for r in (hmax, hmax + 1, hmax + 2)}
                assert len(values) == 1
                assert a_value(bp, p) == Fraction(values.pop())


def test_basic_set_examples():
    # for e = 2 the charges coincide and ((),(1)) drops out: the specialized
    # rank-1 algebra has a single simple module (u_0 = u_1 = -1)
    assert set(canonical_basic_set_b(1, 2)) == {((1,), ())}
    assert not is_semisimple(even_charge_params(2), 1)
    for e in (3, 4, 5):
        assert set(canonical_basic_set_b(1, e)) == {((1,), ()), ((), (1,))}
    # e = 3 keeps doubled parts: multiplicity 2 < 3
    assert len(canonical_basic_set_b(2, 3)) == 5


def test_basic_set_even_matches_crystal():
    for n in range(6):
        expected = crystal_graph(even_charge_params(2), 5, "flotw").vertices(n)
        assert tuple(canonical_basic_set_b(n, 2)) == tuple(expected)


def test_even_matrix_delegates():
    m = decomposition_matrix_b(2, 2)
    direct = decomposition_matrix(ChargeParams(2, 2, (1, 1)), 2)
    assert m.rows == direct.rows
    assert m.columns == direct.columns
    assert m.entries == direct.entries


def test_odd_matrix_block_tensor_structure():
    n, e = 3, 3
    m = decomposition_matrix_b(n, e)
    factors = {l: decomposition_matrix(type_a_params(e), l) for l in range(n + 1)}
    assert len(m.rows) == len(bipartitions_of(n))
    for i, mu in enumerate(m.rows):
        for j, lam in enumerate(m.columns):
            if sum(mu[0]) != sum(lam[0]):
                expected = 0
            else:
                a = sum(lam[0])
                expected = (factors[a].entry((mu[0],), (lam[0],))
                            * factors[n - a].entry((mu[1],), (lam[1],)))
            assert m.entries[i][j] == expected


def test_odd_matrix_identity_blocks_where_semisimple():
    n, e = 3, 3
    m = decomposition_matrix_b(n, e)
    pa = type_a_params(e)
    for a in range(n + 1):
        semisimple = is_semisimple(pa, a) and is_semisimple(pa, n - a)
        rows = [mu for mu in m.rows if sum(mu[0]) == a]
        cols = [lam for lam in m.columns if sum(lam[0]) == a]
        identity = (len(rows) == len(cols)
                    and all(m.entry(mu, lam) == (1 if mu == lam else 0)
                            for mu in rows for lam in cols))
        assert identity == semisimple, f"size split ({a}, {n - a})"


@pytest.mark.parametrize("n,e", [(3, 3), (4, 3), (3, 2), (4, 2)])
def test_minimal_a_row_is_diagonal(n, e):
    m = decomposition_matrix_b(n, e)
    for j, col in enumerate(m.columns):
        nonzero = [i for i in range(len(m.rows)) if m.entries[i][j]]
        assert min(m.row_a_values[i] for i in nonzero) == m.column_a_values[j]
        assert m.entry(col, col) == 1


def test_column_count_is_product_of_regular_counts():
    from ariki.partitions import is_e_regular, partitions_of
    for n, e in ((4, 3), (3, 5)):
        m = decomposition_matrix_b(n, e)
        expected = sum(
            sum(1 for p0 in partitions_of(a) if is_e_regular(p0, e))
            * sum(1 for p1 in partitions_of(n - a) if is_e_regular(p1, e))
            for a in range(n + 1))
        assert len(m.columns) == expected

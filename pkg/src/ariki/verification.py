"""Named end-to-end checks over exhaustive small-rank enumerations.

Each check returns (ok, detail); the CLI `verify` subcommand runs them all
and reports one line per property.  Rank caps default to the scales the
checks are known to pass at desk speed and can be lowered for a quick run.
The parameter grid used throughout pairs both orders with d = 2 and d = 3
charge sets, which is what pins every ordering convention in the package.
"""

from dataclasses import dataclass
from fractions import Fraction

from .aseq import a_graph, a_sequence, residue_path_terminals
from .canonical import canonical_basis, decomposition_matrix, simple_module_a_values
from .charge import ChargeParams, is_semisimple
from .crystal import flotw_multipartitions, kleshchev_multipartitions
from .fock import FockVector, f_divided, f_power_divided_oracle
from .laurent import LaurentPoly
from .partitions import enumerate_multipartitions, is_e_regular
from .symbols import a_value, ordinary_symbol, schur_valuation, shifted_symbol
from .typeb import (a_value_typeb, bipartitions_of, decomposition_matrix_b,
                    even_charge_params, type_a_params)

GRID = (
    ChargeParams(2, 4, (0, 1)),
    ChargeParams(2, 2, (0, 1)),
    ChargeParams(3, 3, (0, 1, 2)),
    ChargeParams(2, 4, (1, 2)),
)


@dataclass
class RankCaps:
    """Rank ceilings for the expensive enumerations."""
    counting: int = 6
    d1_regular: int = 8
    a_oracle: int = 5
    invariance: int = 4
    divided: int = 4
    minimality: int = 5
    canonical: int = 6
    typeb: int = 5

    @classmethod
    def quick(cls):
        return cls(counting=4, d1_regular=5, a_oracle=3, invariance=3,
                   divided=3, minimality=4, canonical=4, typeb=3)

    def clamped(self, cap: int):
        from dataclasses import fields, replace
        return replace(self, **{f.name: min(getattr(self, f.name), cap)
                                for f in fields(self)})


def check_symbol_example(caps):
    """Three-component symbol with fractional weights matches the printed table."""
    mp = ((4, 2), (), (5, 2, 1))
    sym = ordinary_symbol(mp, 0)
    if sym.rows != ((6, 3, 0), (2, 1, 0), (7, 3, 1)):
        return False, f"ordinary rows {sym.rows}"
    shifted = shifted_symbol(sym, (1, Fraction(1, 2), 2))
    expect = ((Fraction(7), Fraction(4), Fraction(1)),
              (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2)),
              (Fraction(9), Fraction(5), Fraction(3)))
    if shifted.rows != expect:
        return False, f"shifted rows {shifted.rows}"
    return True, "B and B[m]' reproduced exactly"


def check_a_sequence_example(caps):
    """Residue sequence and optimal chain of (2.2, 2.2.1) at {4; 0, 1}."""
    p = ChargeParams(2, 4, (0, 1))
    lam = ((2, 2), (2, 2, 1))
    seq = a_sequence(lam, p)
    if seq != (1, 0, 0, 3, 3, 2, 1, 1, 0):
        return False, f"sequence {seq}"
    graph = a_graph(lam, p)
    stages = [((), ()), ((), (1,)), ((1,), (1,)), ((1,), (1, 1)),
              ((1, 1), (1, 1)), ((1, 1), (1, 1, 1)), ((1, 1), (2, 1, 1)),
              ((2, 1), (2, 1, 1)), ((2, 1), (2, 2, 1)), ((2, 2), (2, 2, 1))]
    positions = [(1, 1), (1, 0), (2, 1), (2, 0), (3, 1), (1, 1), (1, 0), (2, 1), (2, 0)]
    if list(graph.stages) != stages:
        return False, f"stages {graph.stages}"
    if [(g.row, g.comp) for _, g, _ in graph.steps] != positions:
        return False, "node positions differ"
    return True, "10-stage chain with positions reproduced"


def check_counting_identity(caps):
    """Both crystal vertex sets are equinumerous at every rank."""
    for p in GRID:
        for n in range(caps.counting + 1):
            k = len(kleshchev_multipartitions(p, n))
            f = len(flotw_multipartitions(p, n))
            if k != f:
                return False, f"{p.to_dict()} rank {n}: {k} vs {f}"
    return True, f"all ranks <= {caps.counting} on the grid"


def check_d1_oracle(caps):
    """For d = 1 both vertex sets equal the e-regular partitions."""
    for e in (2, 3):
        p = ChargeParams(1, e, (0,), 0)
        for n in range(caps.d1_regular + 1):
            regular = [mp for mp in enumerate_multipartitions(1, n)
                       if is_e_regular(mp[0], e)]
            if kleshchev_multipartitions(p, n) != regular:
                return False, f"e={e} rank {n}: component-major set differs"
            if flotw_multipartitions(p, n) != regular:
                return False, f"e={e} rank {n}: diagonal set differs"
    return True, f"e in (2, 3), ranks <= {caps.d1_regular}"


def check_a_oracle(caps):
    """a_value equals -schur_valuation/d on every multipartition of the grid."""
    total = 0
    for p in GRID:
        for n in range(caps.a_oracle + 1):
            for mp in enumerate_multipartitions(p.d, n):
                if a_value(mp, p) != Fraction(-schur_valuation(mp, p), p.d):
                    return False, f"{mp} at {p.to_dict()}"
                total += 1
    return True, f"{total} multipartitions checked"


def check_invariances(caps):
    """Symbol-shift invariance of a_value; charge-shift invariance of comparisons."""
    from .symbols import prec
    for p in GRID:
        bumped = ChargeParams(p.d, p.e, p.v, p.s + 1)
        for n in range(caps.invariance + 1):
            mps = enumerate_multipartitions(p.d, n)
            for mp in mps:
                base = a_value(mp, p)
                if any(a_value(mp, p, k) != base for k in (1, 2)):
                    return False, f"shift dependence at {mp}"
            for mu in mps:
                for nu in mps:
                    if prec(mu, nu, p) != prec(mu, nu, bumped):
                        return False, f"prec changed under s+1 at {mu}, {nu}"
            for mp in flotw_multipartitions(p, n):
                if a_graph(mp, p).steps != a_graph(mp, bumped).steps:
                    return False, f"optimal chain changed under s+1 at {mp}"
    return True, f"shift k in (0,1,2) and s -> s+1, ranks <= {caps.invariance}"


def check_divided_powers(caps):
    """f_i^(j) [j]! = (f_i)^j on all basis vectors, both orders, exactly."""
    total = 0
    for p in GRID:
        for n in range(caps.divided + 1):
            for mp in enumerate_multipartitions(p.d, n):
                vec = FockVector.unit(mp)
                for order in ("am", "flotw"):
                    for i in range(p.e):
                        for j in range(4):
                            if f_divided(vec, i, j, order, p) != \
                                    f_power_divided_oracle(vec, i, j, order, p):
                                return False, f"{mp} {order} i={i} j={j}"
                            total += 1
    return True, f"{total} cases, division exactness asserted"


def check_minimality(caps):
    """Alternative realizations of a residue sequence end strictly higher."""
    checked = 0
    for p in (ChargeParams(2, 4, (0, 1)), ChargeParams(2, 2, (0, 1))):
        for n in range(caps.minimality + 1):
            for lam in flotw_multipartitions(p, n):
                seq = a_sequence(lam, p)
                terminals = residue_path_terminals(seq, p)
                if lam not in terminals:
                    return False, f"{lam} unreachable from its own sequence"
                a_lam = a_value(lam, p)
                for mu in terminals:
                    if mu != lam and a_value(mu, p) <= a_lam:
                        return False, f"{mu} not above {lam}"
                checked += len(terminals)
    return True, f"{checked} terminal multipartitions compared"


def check_canonical_structure(caps):
    """Leading 1, q*Z[q] coefficients, strict a-triangularity, min-identity."""
    cases = [(ChargeParams(2, 4, (0, 1)), caps.canonical),
             (ChargeParams(2, 2, (0, 1)), max(0, caps.canonical - 1))]
    for p, cap in cases:
        for n in range(cap + 1):
            avals = {mp: a_value(mp, p) for mp in enumerate_multipartitions(p.d, n)}
            for el in canonical_basis(p, n):
                vec = el.vector
                if vec.coefficient(el.label) != LaurentPoly.one():
                    return False, f"leading coefficient at {el.label}"
                for nu in vec.support():
                    if nu == el.label:
                        continue
                    c = vec.coefficient(nu)
                    if not c.in_q_zq():
                        return False, f"{nu} coefficient {c} outside q*Z[q]"
                    if c.at_one() < 0:
                        return False, f"negative value at q=1 for {nu}"
                    if avals[nu] <= avals[el.label]:
                        return False, f"a({nu}) <= a({el.label})"
            simple_module_a_values(p, n)
    return True, "both parameter sets, all ranks"


def check_small_known_matrix(caps):
    """d=1, e=2, n=2: single column (2) + q (1,1)."""
    p = ChargeParams(1, 2, (0,), 0)
    basis = canonical_basis(p, 2)
    if len(basis) != 1 or basis[0].label != ((2,),):
        return False, "unexpected labels"
    vec = basis[0].vector
    if vec.coefficient(((2,),)) != LaurentPoly.one() or \
            vec.coefficient(((1, 1),)) != LaurentPoly.q_power(1) or \
            len(vec.support()) != 2:
        return False, f"vector {vec}"
    matrix = decomposition_matrix(p, 2)
    if matrix.entries != ((1,), (1,)):
        return False, f"entries {matrix.entries}"
    return True, "(2) -> (2) + q (1,1); entries (1, 1) at q=1"


def check_semisimple_identity(caps):
    """Semisimple parameters give the identity decomposition matrix."""
    cases = [(ChargeParams(1, 5, (0,), 0), 2), (ChargeParams(1, 7, (0,), 0), 3),
             (ChargeParams(2, 5, (0, 2)), 2), (ChargeParams(3, 7, (0, 2, 4)), 2)]
    found = 0
    for p, n in cases:
        if not is_semisimple(p, n):
            continue
        found += 1
        if not decomposition_matrix(p, n).is_identity():
            return False, f"{p.to_dict()} n={n} not identity"
    return True, f"{found} semisimple cases are identity matrices"


def check_typeb(caps):
    """Closed-form a-values match the symbol formula; odd-e block tensor rule."""
    for e in (2, 4):
        p = even_charge_params(e)
        for n in range(caps.typeb + 1):
            for bp in bipartitions_of(n):
                hmax = max(len(bp[0]), len(bp[1]))
                vals = {a_value_typeb(bp, r) for r in (hmax, hmax + 1, hmax + 2)}
                if len(vals) != 1:
                    return False, f"r-dependence at {bp}, e={e}"
                if a_value(bp, p) != Fraction(vals.pop()):
                    return False, f"mismatch at {bp}, e={e}"
    matrix = decomposition_matrix_b(3, 3)
    factors = {l: decomposition_matrix(type_a_params(3), l) for l in range(4)}
    for i, mu in enumerate(matrix.rows):
        for j, lam in enumerate(matrix.columns):
            if sum(mu[0]) != sum(lam[0]):
                expected = 0
            else:
                a = sum(lam[0])
                expected = (factors[a].entry((mu[0],), (lam[0],))
                            * factors[3 - a].entry((mu[1],), (lam[1],)))
            if matrix.entries[i][j] != expected:
                return False, f"block entry at {mu}, {lam}"
    for j in range(len(matrix.columns)):
        nonzero = [matrix.row_a_values[i] for i in range(len(matrix.rows))
                   if matrix.entries[i][j]]
        if min(nonzero) != matrix.column_a_values[j]:
            return False, f"column {matrix.columns[j]} min a-value"
    # identity blocks exactly where both type-A factors are semisimple
    for a in range(4):
        semi = is_semisimple(type_a_params(3), a) and is_semisimple(type_a_params(3), 3 - a)
        rows_a = [mu for mu in matrix.rows if sum(mu[0]) == a]
        cols_a = [lam for lam in matrix.columns if sum(lam[0]) == a]
        block_is_identity = (len(rows_a) == len(cols_a) and all(
            matrix.entry(mu, lam) == (1 if mu == lam else 0)
            for mu in rows_a for lam in cols_a))
        if block_is_identity != semi:
            return False, f"block {a}: identity={block_is_identity}, semisimple={semi}"
    return True, "a-value agreement, block tensor rule, identity blocks"


def check_determinism(caps):
    """Canonical/decomposition output is byte-identical across thread counts."""
    from .render import render_canonical, render_decomp
    p = ChargeParams(2, 4, (0, 1))
    n = min(4, caps.canonical)
    runs = {render_canonical(p, n, threads=t) + render_decomp(p, n, threads=t)
            for t in (1, 4)}
    if len(runs) != 1:
        return False, "outputs differ across thread counts"
    runs_b = {render_decomp(even_charge_params(2), 3, threads=t) for t in (1, 3)}
    if len(runs_b) != 1:
        return False, "type B outputs differ across thread counts"
    return True, "thread counts 1 and 4 agree byte for byte"


ALL_CHECKS = (
    ("symbol-example", check_symbol_example),
    ("a-sequence-example", check_a_sequence_example),
    ("counting-identity", check_counting_identity),
    ("d1-e-regular-oracle", check_d1_oracle),
    ("a-function-oracle", check_a_oracle),
    ("shift-invariances", check_invariances),
    ("divided-power-oracle", check_divided_powers),
    ("minimality-brute-force", check_minimality),
    ("canonical-structure", check_canonical_structure),
    ("small-known-matrix", check_small_known_matrix),
    ("semisimple-identity", check_semisimple_identity),
    ("type-b", check_typeb),
    ("determinism", check_determinism),
)


def run_all(caps: RankCaps = None, report=print):
    """Run every check; returns True iff all pass."""
    caps = caps or RankCaps()
    ok_all = True
    for name, fn in ALL_CHECKS:
        ok, detail = fn(caps)
        ok_all &= ok
        report(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return ok_all

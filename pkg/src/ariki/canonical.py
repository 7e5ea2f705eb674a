"""Canonical bases of the highest-weight submodule and decomposition matrices.

For each diagonal-crystal vertex, applying the divided powers dictated by
its residue sequence to the empty multipartition yields a bar-invariant
vector whose leading coefficient is 1 and whose other terms all have
strictly larger a-value.  Straightening these vectors in decreasing
a-value order, by repeatedly subtracting the bar-symmetric completion of
any offending coefficient times an already-finished basis element, yields
the canonical basis: leading coefficient 1, every other coefficient in
q*Z[q].  Specializing q = 1 gives the decomposition matrix, with rows and
columns sorted by ascending a-value (ties lexicographic) so its
unitriangular shape is visually literal.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .aseq import a_sequence_blocks
from .charge import ChargeParams
from .crystal import bijection_j_inverse, flotw_multipartitions
from .fock import FockVector, f_divided
from .laurent import LaurentPoly
from .partitions import empty_multipartition, enumerate_multipartitions
from .symbols import a_value


def worker_count(threads=None) -> int:
    """Worker cap: explicit argument, else ARIKI_THREADS, else 1."""
    if threads is None:
        threads = int(os.environ.get("ARIKI_THREADS", "1"))
    return max(1, threads)


def compute_A(mp, p: ChargeParams) -> FockVector:
    """Divided powers of the residue sequence applied to the empty vector."""
    blocks = a_sequence_blocks(mp, p)
    vec = FockVector.unit(empty_multipartition(p.d))
    for i, count in blocks:
        vec = f_divided(vec, i, count, "flotw", p)
    lead = vec.coefficient(mp)
    if lead != LaurentPoly.one():
        raise RuntimeError(f"leading coefficient of A({mp}) is {lead}, not 1")
    return vec


@dataclass(frozen=True)
class CanonicalBasisElement:
    """One straightened basis vector with its crystal label."""
    label: tuple
    vector: FockVector


def _bar_symmetric_completion(c: LaurentPoly) -> LaurentPoly:
    """Smallest bar-invariant polynomial agreeing with c in degrees <= 0."""
    data = {}
    for e, coeff in c.nonpositive_part().coeffs.items():
        data[e] = data.get(e, 0) + coeff
        if e < 0:
            data[-e] = data.get(-e, 0) + coeff
    return LaurentPoly(data)


def canonical_basis(p: ChargeParams, n: int, threads=None, _tie_reverse=False):
    """All canonical basis elements at rank n, sorted by (a-value, label).

    Straightens in strictly decreasing a-value order; equal-a labels never
    interact, so the lexicographic tie-break (reversible via _tie_reverse,
    for tests) cannot change the result.  After straightening, every
    non-leading coefficient (crystal label or not) must land in q*Z[q];
    anything else is an error.
    """
    labels = flotw_multipartitions(p, n)
    avals = {mp: a_value(mp, p) for mp in enumerate_multipartitions(p.d, n)}

    workers = worker_count(threads)
    if workers > 1 and len(labels) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            raw = dict(zip(labels, pool.map(lambda mp: compute_A(mp, p), labels)))
    else:
        raw = {mp: compute_A(mp, p) for mp in labels}

    def tie_key(m):
        return tuple(tuple(-x for x in comp) for comp in m) if _tie_reverse else m

    flotw_set = set(labels)
    basis = {}
    cap = max(8, len(labels) + 2)
    for mp in sorted(labels, key=lambda m: (-avals[m],) + (tie_key(m),)):
        vec = raw[mp]
        for _ in range(cap):
            offending = [nu for nu in vec.support()
                         if nu != mp and nu in flotw_set
                         and not vec.coefficient(nu).in_q_zq()]
            if not offending:
                break
            nu = min(offending, key=lambda m: (avals[m],) + (tie_key(m),))
            gamma = _bar_symmetric_completion(vec.coefficient(nu))
            if gamma != gamma.bar():
                raise RuntimeError("correction coefficient is not bar-symmetric")
            vec = vec - basis[nu].scale(gamma)
        else:
            raise RuntimeError(f"straightening of {mp} did not terminate")
        if vec.coefficient(mp) != LaurentPoly.one():
            raise RuntimeError(f"straightening destroyed the leading term of {mp}")
        for nu in vec.support():
            if nu != mp and not vec.coefficient(nu).in_q_zq():
                raise RuntimeError(
                    f"coefficient of {nu} in the element labeled {mp} "
                    f"is {vec.coefficient(nu)}, not in q*Z[q]")
        basis[mp] = vec

    order = sorted(labels, key=lambda m: (avals[m], m))
    return [CanonicalBasisElement(label=mp, vector=basis[mp]) for mp in order]


@dataclass(frozen=True)
class DecompositionMatrix:
    """Integer decomposition matrix with dual-labeled columns.

    Rows and columns are sorted by ascending a-value, ties lexicographic.
    kleshchev_labels[j] is the component-major crystal label matching
    column j, when the column labels come from the diagonal crystal.
    """
    rows: tuple
    columns: tuple
    kleshchev_labels: tuple
    entries: tuple
    row_a_values: tuple
    column_a_values: tuple

    def entry(self, mp_row, mp_col) -> int:
        return self.entries[self.rows.index(mp_row)][self.columns.index(mp_col)]

    def is_identity(self) -> bool:
        return (len(self.rows) == len(self.columns)
                and all(self.entries[i][j] == (1 if i == j else 0)
                        for i in range(len(self.rows))
                        for j in range(len(self.columns))))


def decomposition_matrix(p: ChargeParams, n: int, threads=None) -> DecompositionMatrix:
    """Canonical basis at q = 1, assembled into the a-sorted matrix."""
    basis = canonical_basis(p, n, threads=threads)
    avals = {mp: a_value(mp, p) for mp in enumerate_multipartitions(p.d, n)}
    rows = sorted(enumerate_multipartitions(p.d, n), key=lambda m: (avals[m], m))
    columns = tuple(el.label for el in basis)
    specialized = [el.vector.at_one() for el in basis]
    entries = tuple(tuple(spec.get(mp, 0) for spec in specialized) for mp in rows)
    kleshchev = tuple(bijection_j_inverse(col, p) for col in columns)
    return DecompositionMatrix(
        rows=tuple(rows), columns=columns, kleshchev_labels=kleshchev,
        entries=entries,
        row_a_values=tuple(avals[mp] for mp in rows),
        column_a_values=tuple(avals[mp] for mp in columns))


def simple_module_a_values(p: ChargeParams, n: int, matrix=None):
    """a-value of each simple module, keyed by component-major crystal label.

    Checks the defining identity: the a-value attached to a column equals
    the minimum a-value over its nonzero rows.
    """
    if matrix is None:
        matrix = decomposition_matrix(p, n)
    out = {}
    for j, col in enumerate(matrix.columns):
        nonzero = [matrix.row_a_values[i] for i in range(len(matrix.rows))
                   if matrix.entries[i][j] != 0]
        a_col = matrix.column_a_values[j]
        if not nonzero or min(nonzero) != a_col:
            raise RuntimeError(
                f"column {col}: min nonzero row a-value {min(nonzero, default=None)} "
                f"differs from column a-value {a_col}")
        out[matrix.kleshchev_labels[j]] = a_col
    return out

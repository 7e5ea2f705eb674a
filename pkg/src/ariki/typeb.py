"""Equal-parameter type B specializations, split by the parity of e.

For odd e the decomposition matrix factors through two type-A computations:
an entry is the product of the component-wise type-A decomposition numbers
when the component sizes match, and zero otherwise; the basic set consists
of the bipartitions with both components e-regular.  For even e the algebra
is the d = 2 case at charges (1, e/2), so everything delegates to the
general machinery.  The closed-form a-value below specializes the symbol
formula to these charges and is independent of the cutoff r.
"""

from .canonical import DecompositionMatrix, decomposition_matrix
from .charge import ChargeParams
from .crystal import flotw_multipartitions
from .partitions import (check_multipartition, is_e_regular, part,
                         partitions_of, rank)


def even_charge_params(e: int) -> ChargeParams:
    """Charges (1, e/2) that realize the one-parameter type B algebra."""
    if e % 2:
        raise ValueError("even-e parameters require e even")
    return ChargeParams(2, e, (1, e // 2), 0)


def a_value_typeb(bp, r: int = None) -> int:
    """Closed-form a-value of a bipartition, independent of the cutoff r."""
    bp = check_multipartition(bp)
    if len(bp) != 2:
        raise ValueError("expected a bipartition")
    hmax = max(len(bp[0]), len(bp[1]))
    if r is None:
        r = hmax
    if r < hmax:
        raise ValueError(f"cutoff r={r} is below the maximal height {hmax}")
    total = -(r * (r - 1) * (2 * r + 5)) // 6
    total += sum((i - 1) * (part(bp[0], i) + part(bp[1], i) + 1)
                 for i in range(1, r + 1))
    total += sum(min(part(bp[0], i) + 1 + r - i, part(bp[1], j) + r - j)
                 for i in range(1, r + 1) for j in range(1, r + 1))
    return total


def bipartitions_of(n: int):
    """All bipartitions of rank n, in canonical order."""
    out = [(p0, p1)
           for a in range(n + 1)
           for p0 in partitions_of(a)
           for p1 in partitions_of(n - a)]
    out.sort()
    return out


def canonical_basic_set_b(n: int, e: int):
    """Labels of the canonical basic set, sorted canonically."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if e % 2:
        return [bp for bp in bipartitions_of(n)
                if is_e_regular(bp[0], e) and is_e_regular(bp[1], e)]
    return flotw_multipartitions(even_charge_params(e), n)


def type_a_params(e: int) -> ChargeParams:
    return ChargeParams(1, e, (0,), 0)


def decomposition_matrix_b(n: int, e: int, threads=None) -> DecompositionMatrix:
    """Type B decomposition matrix for either parity of e."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if e % 2 == 0:
        return decomposition_matrix(even_charge_params(e), n, threads=threads)

    pa = type_a_params(e)
    factors = {l: decomposition_matrix(pa, l, threads=threads) for l in range(n + 1)}

    def type_a_entry(l, mu, lam):
        m = factors[l]
        return m.entry((mu,), (lam,))

    avals = {bp: a_value_typeb(bp) for bp in bipartitions_of(n)}
    rows = sorted(bipartitions_of(n), key=lambda bp: (avals[bp], bp))
    columns = sorted(canonical_basic_set_b(n, e), key=lambda bp: (avals[bp], bp))
    entries = []
    for mu in rows:
        line = []
        for lam in columns:
            if rank((mu[0],)) == rank((lam[0],)):
                a = rank((lam[0],))
                line.append(type_a_entry(a, mu[0], lam[0])
                            * type_a_entry(n - a, mu[1], lam[1]))
            else:
                line.append(0)
        entries.append(tuple(line))
    return DecompositionMatrix(
        rows=tuple(rows), columns=tuple(columns), kleshchev_labels=None,
        entries=tuple(entries),
        row_a_values=tuple(avals[bp] for bp in rows),
        column_a_values=tuple(avals[bp] for bp in columns))

"""Shape combinatorics of partitions, multipartitions and multicompositions.

Everything here is charge-free: partitions are weakly decreasing tuples of
positive integers, compositions drop the ordering constraint, and a
d-(multi)partition is a d-tuple of components.  Nodes of the Young diagram
are triples (row, col, comp), 1-based in row and column.  All values are
plain immutable tuples, so they hash, sort and compare with no extra
machinery; the canonical order on multipartitions is tuple order.
"""

from typing import NamedTuple


class Node(NamedTuple):
    """A cell (row a, column b, component c) of a multipartition diagram."""
    row: int
    col: int
    comp: int


def is_partition(parts) -> bool:
    """True iff parts is a weakly decreasing sequence of positive integers."""
    parts = tuple(parts)
    return all(isinstance(x, int) and x >= 1 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def is_composition(parts) -> bool:
    """True iff every entry is a positive integer (any order)."""
    return all(isinstance(x, int) and x >= 1 for x in parts)


def check_multipartition(mp):
    """Validate a multipartition; returns it normalized to tuples."""
    mp = tuple(tuple(comp) for comp in mp)
    for comp in mp:
        if not is_partition(comp):
            raise ValueError(f"component {comp} is not a partition")
    return mp


def check_multicomposition(mc):
    """Validate a multicomposition; returns it normalized to tuples."""
    mc = tuple(tuple(comp) for comp in mc)
    for comp in mc:
        if not is_composition(comp):
            raise ValueError(f"component {comp} is not a composition")
    return mc


def rank(mc) -> int:
    """Total number of cells of a multipartition or multicomposition."""
    return sum(sum(comp) for comp in mc)


def height(comp) -> int:
    """Number of parts of a single component."""
    return len(comp)


def part(comp, j: int) -> int:
    """j-th part of a component (1-based), 0 beyond its height."""
    return comp[j - 1] if 1 <= j <= len(comp) else 0


def empty_multipartition(d: int):
    """The d-tuple of empty components."""
    return ((),) * d


def conjugate(p):
    """Transpose of the Young diagram of a partition."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def diagram_nodes(mc):
    """All nodes (a, b, c) of a multicomposition, row-major per component."""
    return [Node(a, b, c)
            for c, comp in enumerate(mc)
            for a, length in enumerate(comp, start=1)
            for b in range(1, length + 1)]


def border_nodes(mc):
    """The rightmost node of every nonempty row."""
    return [Node(a, length, c)
            for c, comp in enumerate(mc)
            for a, length in enumerate(comp, start=1)]


def removable_nodes(mp):
    """Nodes whose deletion leaves a multipartition."""
    out = []
    for c, comp in enumerate(mp):
        for a, length in enumerate(comp, start=1):
            if part(comp, a + 1) < length:
                out.append(Node(a, length, c))
    return out


def addable_nodes(mp):
    """Positions whose addition yields a multipartition (new bottom row included)."""
    out = []
    for c, comp in enumerate(mp):
        for a in range(1, len(comp) + 2):
            target = part(comp, a) + 1
            if a == 1 or part(comp, a - 1) >= target:
                out.append(Node(a, target, c))
    return out


def add_node(mp, node: Node):
    """Multipartition (or multicomposition) with one more cell at node."""
    a, b, c = node
    comp = mp[c]
    if a == len(comp) + 1:
        if b != 1:
            raise ValueError(f"cannot append row at {node}")
        new = comp + (1,)
    else:
        if part(comp, a) + 1 != b:
            raise ValueError(f"{node} is not addable")
        new = comp[:a - 1] + (comp[a - 1] + 1,) + comp[a:]
    return mp[:c] + (new,) + mp[c + 1:]


def remove_node(mp, node: Node):
    """Multipartition (or multicomposition) with the cell at node deleted."""
    a, b, c = node
    comp = mp[c]
    if part(comp, a) != b:
        raise ValueError(f"{node} is not the end of its row")
    if b == 1:
        new = comp[:a - 1] + comp[a:]
        if a != len(comp):
            raise ValueError(f"removing {node} leaves a gap")
    else:
        new = comp[:a - 1] + (b - 1,) + comp[a:]
    return mp[:c] + (new,) + mp[c + 1:]


def dominates(mu, lam) -> bool:
    """Dominance order on d-partitions of equal rank: mu >= lam."""
    if len(mu) != len(lam):
        raise ValueError("multipartitions have different numbers of components")
    if rank(mu) != rank(lam):
        raise ValueError("multipartitions have different ranks")
    acc_mu = acc_lam = 0
    for j in range(len(mu)):
        h = max(len(mu[j]), len(lam[j]))
        run_mu, run_lam = acc_mu, acc_lam
        for i in range(1, h + 1):
            run_mu += part(mu[j], i)
            run_lam += part(lam[j], i)
            if run_mu < run_lam:
                return False
        acc_mu, acc_lam = run_mu, run_lam
    return True


def is_e_regular(p, e: int) -> bool:
    """True iff no part value of the partition repeats e or more times."""
    if e < 2:
        raise ValueError("e must be at least 2")
    for x in set(p):
        if p.count(x) >= e:
            return False
    return True


def partitions_of(n: int):
    """All partitions of n, in lexicographic order of part tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def grow(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(min(cap, remaining), 0, -1):
            grow(remaining - first, first, prefix + [first])

    grow(n, n, [])
    out.sort()
    return out


def enumerate_multipartitions(d: int, n: int):
    """All d-partitions of rank n, sorted in canonical (tuple) order."""
    if d < 1:
        raise ValueError("d must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    levels = [partitions_of(k) for k in range(n + 1)]

    def split(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in split(remaining - first, slots - 1):
                yield (first,) + rest

    out = []
    for sizes in split(n, d):
        stack = [()]
        for size in sizes:
            stack = [mp + (p,) for mp in stack for p in levels[size]]
        out.extend(stack)
    out.sort()
    return out


def count_multipartitions(d: int, n: int) -> int:
    """Number of d-partitions of rank n via the partition-count convolution."""
    counts = [len(partitions_of(k)) for k in range(n + 1)]

    def conv(slots, remaining):
        if slots == 1:
            return counts[remaining]
        return sum(counts[k] * conv(slots - 1, remaining - k)
                   for k in range(remaining + 1))

    return conv(d, n)


def format_multipartition(mp) -> str:
    """Text form: parts joined by dots, components by commas, '-' when empty."""
    return ",".join(".".join(str(x) for x in comp) if comp else "-"
                    for comp in mp)


def parse_multipartition(text: str, require_partitions: bool = True):
    """Parse the dotted text form; '-' denotes an empty component."""
    comps = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if chunk in ("-", ""):
            comps.append(())
            continue
        try:
            parts = tuple(int(x) for x in chunk.split("."))
        except ValueError:
            raise ValueError(f"cannot parse component {chunk!r}")
        comps.append(parts)
    mp = tuple(comps)
    return check_multipartition(mp) if require_partitions else check_multicomposition(mp)


def multipartition_to_json(mp):
    """JSON form: array of d arrays of parts."""
    return [list(comp) for comp in mp]


def multipartition_from_json(data, require_partitions: bool = True):
    """Inverse of multipartition_to_json."""
    mp = tuple(tuple(comp) for comp in data)
    return check_multipartition(mp) if require_partitions else check_multicomposition(mp)

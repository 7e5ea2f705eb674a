"""Crystal combinatorics: signatures, good nodes, membership, and the bijection.

The i-signature of a multipartition lists its addable and removable i-nodes
from the lowest to the highest node of the selected order.  Scanning in
that direction, an addable node cancels the next uncancelled removable node
after it; the good addable node is the lowest surviving addable one and the
good removable node is the highest surviving removable one.  This scanning
convention is pinned by three observable requirements checked in the test
suite: for d = 1 both crystals regenerate exactly the e-regular partitions,
the diagonal-order crystal regenerates the explicit two-condition
membership test at every rank, and the two membership sets are equinumerous
rank by rank.

Component-major-order crystal vertices are called Kleshchev multipartitions
and diagonal-order vertices satisfy the explicit conditions below
(is_flotw).  Replaying residue paths between the two crystals gives the
canonical bijection between the two vertex sets.
"""

from dataclasses import dataclass
from functools import lru_cache

from .charge import ChargeParams, ORDERS, below_key, residue
from .partitions import (add_node, addable_nodes, check_multipartition,
                         empty_multipartition, enumerate_multipartitions,
                         part, rank, remove_node, removable_nodes)

ADDABLE = "A"
REMOVABLE = "R"


def signature(mp, i, order: str, p: ChargeParams):
    """Addable/removable i-nodes with kinds, lowest node of the order first."""
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    items = [(g, ADDABLE) for g in addable_nodes(mp) if residue(g, p) == i]
    items += [(g, REMOVABLE) for g in removable_nodes(mp) if residue(g, p) == i]
    key = below_key(order, p)
    items.sort(key=lambda item: key(item[0]))
    return items


def _reduced_signature(mp, i, order, p):
    """Surviving addable and removable nodes after pair cancellation.

    Scanning upward, each addable node cancels against the next surviving
    removable node above it.
    """
    surviving_removable = []
    stack = []
    for g, kind in signature(mp, i, order, p):
        if kind == ADDABLE:
            stack.append(g)
        elif stack:
            stack.pop()
        else:
            surviving_removable.append(g)
    return stack, surviving_removable


def good_addable_node(mp, i, order: str, p: ChargeParams):
    """Position added by the crystal lowering operator, or None."""
    mp = check_multipartition(mp)
    addable, _ = _reduced_signature(mp, i, order, p)
    return addable[0] if addable else None


def good_removable_node(mp, i, order: str, p: ChargeParams):
    """Node removed by the crystal raising operator, or None."""
    mp = check_multipartition(mp)
    _, removable = _reduced_signature(mp, i, order, p)
    return removable[-1] if removable else None


def crystal_lower(mp, i, order: str, p: ChargeParams):
    """One step down the crystal, or None."""
    g = good_addable_node(mp, i, order, p)
    return add_node(mp, g) if g is not None else None


def crystal_raise(mp, i, order: str, p: ChargeParams):
    """One step up the crystal, or None."""
    g = good_removable_node(mp, i, order, p)
    return remove_node(mp, g) if g is not None else None


@lru_cache(maxsize=None)
def _kleshchev_cached(mp, p: ChargeParams) -> bool:
    if rank(mp) == 0:
        return True
    for i in range(p.e):
        g = good_removable_node(mp, i, "am", p)
        if g is not None and _kleshchev_cached(remove_node(mp, g), p):
            return True
    return False


def is_kleshchev(mp, p: ChargeParams) -> bool:
    """Reachable from empty by good-node additions in the component-major order."""
    return _kleshchev_cached(check_multipartition(mp), p)


def is_flotw(mp, p: ChargeParams) -> bool:
    """Explicit two-condition membership test for the diagonal-order crystal."""
    mp = check_multipartition(mp)
    if len(mp) != p.d:
        raise ValueError(f"expected {p.d} components, got {len(mp)}")
    d, e, v = p.d, p.e, p.v
    hmax = max((len(comp) for comp in mp), default=0)
    for i in range(1, hmax + 1):
        for j in range(d - 1):
            if part(mp[j], i) < part(mp[j + 1], i + v[j + 1] - v[j]):
                return False
        if part(mp[d - 1], i) < part(mp[0], i + e + v[0] - v[d - 1]):
            return False
    lengths = {}
    for c, comp in enumerate(mp):
        for a, length in enumerate(comp, start=1):
            lengths.setdefault(length, set()).add((length - a + v[c]) % e)
    for length, residues in lengths.items():
        if len(residues) == e:
            return False
    return True


@dataclass(frozen=True)
class CrystalGraph:
    """Ranked crystal: vertex lists per rank and labeled edges between ranks.

    edges[r] holds (source, residue, node, target) with source of rank r.
    """
    order: str
    levels: tuple
    edges: tuple

    def vertices(self, r: int):
        return self.levels[r]

    @property
    def depth(self):
        return len(self.levels) - 1


def crystal_graph(p: ChargeParams, n: int, order: str) -> CrystalGraph:
    """Breadth-first crystal from the empty multipartition up to rank n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    levels = [[empty_multipartition(p.d)]]
    edges = []
    for r in range(n):
        seen = set()
        next_level = []
        level_edges = []
        for mp in levels[r]:
            for i in range(p.e):
                g = good_addable_node(mp, i, order, p)
                if g is None:
                    continue
                nxt = add_node(mp, g)
                level_edges.append((mp, i, g, nxt))
                if nxt not in seen:
                    seen.add(nxt)
                    next_level.append(nxt)
        next_level.sort()
        level_edges.sort()
        levels.append(next_level)
        edges.append(tuple(level_edges))
    return CrystalGraph(order=order,
                        levels=tuple(tuple(lv) for lv in levels),
                        edges=tuple(edges))


def kleshchev_multipartitions(p: ChargeParams, n: int):
    """All component-major-order crystal vertices of rank n, sorted."""
    return [mp for mp in enumerate_multipartitions(p.d, n) if is_kleshchev(mp, p)]


def flotw_multipartitions(p: ChargeParams, n: int):
    """All diagonal-order crystal vertices of rank n (direct test), sorted."""
    return [mp for mp in enumerate_multipartitions(p.d, n) if is_flotw(mp, p)]


def _raising_path(mp, order, p):
    """Residues removed on the way down to empty, in removal order."""
    path = []
    cur = mp
    while rank(cur) > 0:
        for i in range(p.e):
            g = good_removable_node(cur, i, order, p)
            if g is not None:
                path.append(i)
                cur = remove_node(cur, g)
                break
        else:
            raise ValueError(f"{cur} has no good removable node; not a crystal vertex")
    return path


def _lowering_replay(path, order, p):
    """Rebuild a crystal vertex from empty by good additions, last removal first."""
    cur = empty_multipartition(p.d)
    for i in reversed(path):
        nxt = crystal_lower(cur, i, order, p)
        if nxt is None:
            raise ValueError("residue path cannot be replayed; crystals disagree")
        cur = nxt
    return cur


def bijection_j(mp, p: ChargeParams):
    """Image of a Kleshchev multipartition in the diagonal-order crystal."""
    mp = check_multipartition(mp)
    if not is_kleshchev(mp, p):
        raise ValueError(f"{mp} is not a Kleshchev multipartition")
    return _lowering_replay(_raising_path(mp, "am", p), "flotw", p)


def bijection_j_inverse(mp, p: ChargeParams):
    """Image of a diagonal-order crystal vertex in the component-major crystal."""
    mp = check_multipartition(mp)
    if not is_flotw(mp, p):
        raise ValueError(f"{mp} does not satisfy the membership conditions")
    return _lowering_replay(_raising_path(mp, "flotw", p), "am", p)

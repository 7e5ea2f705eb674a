"""Residue sequences and optimal-addition chains for diagonal-crystal vertices.

Peeling works top down: among removable nodes on the longest parts, pick a
residue k such that no (k-1)-node sits on the border of a part of that
length (the smallest such k when several qualify), then strip every
removable k-node lying on parts longer than the longest part carrying a
(k-1)-border-node.  Reading the stripped residues bottom-up gives the
residue sequence; replaying it from the empty multipartition, always adding
at the position with the largest shifted diagonal, rebuilds the original
multipartition through a chain of diagonal-crystal vertices.
"""

from dataclasses import dataclass

from .charge import ChargeParams, residue
from .crystal import is_flotw
from .partitions import (Node, add_node, border_nodes, check_multipartition,
                         check_multicomposition, empty_multipartition, part,
                         rank, removable_nodes)


@dataclass(frozen=True)
class PeelStep:
    """One peeling step: chosen residue, qualifying ties, removed nodes, rest."""
    k: int
    candidates: tuple
    removed: tuple
    rest: tuple


def peel_step(mp, p: ChargeParams, force_k=None) -> PeelStep:
    """Strip one block of equal-residue removable nodes from a nonempty vertex.

    Several residues may qualify; the smallest is taken unless force_k names
    another qualifying one (used to compare tie-broken sequences).
    """
    mp = check_multipartition(mp)
    if rank(mp) == 0:
        raise ValueError("cannot peel the empty multipartition")
    border = border_nodes(mp)
    lmax = max(comp[0] for comp in mp if comp)
    top_border_residues = {residue(g, p) for g in border if g.col == lmax}
    candidates = sorted({residue(g, p) for g in removable_nodes(mp)
                         if g.col == lmax
                         and (residue(g, p) - 1) % p.e not in top_border_residues})
    if not candidates:
        raise ValueError(f"no admissible residue on {mp}; not a diagonal-crystal vertex")
    if force_k is not None and force_k not in candidates:
        raise ValueError(f"residue {force_k} does not qualify on {mp}")
    k = candidates[0] if force_k is None else force_k
    threshold = max((g.col for g in border if residue(g, p) == (k - 1) % p.e),
                    default=0)
    removed = tuple(g for g in removable_nodes(mp)
                    if residue(g, p) == k and g.col > threshold)
    rest = list(list(comp) for comp in mp)
    for g in removed:
        rest[g.comp][g.row - 1] -= 1
    rest = tuple(tuple(x for x in comp if x > 0) for comp in rest)
    rest = check_multipartition(rest)
    return PeelStep(k=k, candidates=tuple(candidates), removed=removed, rest=rest)


def a_sequence_blocks(mp, p: ChargeParams):
    """Block form [(residue, count), ...] from first-added to last-added."""
    mp = check_multipartition(mp)
    if not is_flotw(mp, p):
        raise ValueError(f"{mp} does not satisfy the membership conditions")
    blocks = []
    cur = mp
    while rank(cur) > 0:
        step = peel_step(cur, p)
        blocks.append((step.k, len(step.removed)))
        cur = step.rest
    blocks.reverse()
    return blocks


def a_sequence(mp, p: ChargeParams):
    """Residue sequence of a diagonal-crystal vertex, first-added first."""
    return tuple(k for k, count in a_sequence_blocks(mp, p) for _ in range(count))


def composition_addable_positions(mc, k, p: ChargeParams):
    """Nodes of residue k addable to a multicomposition (any row, or a new one)."""
    out = []
    for c, comp in enumerate(mc):
        for j in range(1, len(comp) + 2):
            b = part(comp, j) + 1
            if (b - j + p.v[c]) % p.e == k:
                out.append(Node(j, b, c))
    return out


def k_opt_add(mc, k, p: ChargeParams):
    """Add a k-node at the position with the largest shifted diagonal.

    Returns (new multicomposition, added node).  On multipartitions the
    maximizer is unique; composition ties go to the smallest (component, row).
    """
    mc = check_multicomposition(mc)
    best = None
    for g in composition_addable_positions(mc, k, p):
        weight = p.d * (part(mc[g.comp], g.row) - g.row) + p.scaled_m[g.comp]
        slot = (g.comp, g.row)
        if best is None or weight > best[0] or (weight == best[0] and slot < best[1]):
            best = (weight, slot, g)
    if best is None:
        raise ValueError(f"no addable node of residue {k} on {mc}")
    g = best[2]
    return add_node(mc, g), g


@dataclass(frozen=True)
class AGraph:
    """Optimal-addition chain: steps (stage-before, node, residue) and final stage."""
    steps: tuple
    final: tuple

    @property
    def stages(self):
        return tuple(before for before, _, _ in self.steps) + (self.final,)


def a_graph(mp, p: ChargeParams) -> AGraph:
    """Replay the residue sequence from empty through optimal additions."""
    mp = check_multipartition(mp)
    seq = a_sequence(mp, p)
    cur = empty_multipartition(p.d)
    steps = []
    for k in seq:
        nxt, node = k_opt_add(cur, k, p)
        steps.append((cur, node, k))
        cur = nxt
    if cur != mp:
        raise RuntimeError(f"optimal replay of {seq} ended at {cur}, not {mp}")
    return AGraph(steps=tuple(steps), final=cur)


def residue_path_terminals(seq, p: ChargeParams, compositions: bool = False):
    """All endpoints of single-node addition chains realizing a residue sequence.

    With compositions=False the chain passes through multipartitions only;
    otherwise any multicomposition stage is allowed.
    """
    frontier = {empty_multipartition(p.d)}
    for k in seq:
        nxt = set()
        for mc in frontier:
            if compositions:
                spots = composition_addable_positions(mc, k, p)
            else:
                from .fock import addable_i_nodes
                spots = addable_i_nodes(mc, k, p)
            for g in spots:
                nxt.add(add_node(mc, g))
        frontier = nxt
    return frontier

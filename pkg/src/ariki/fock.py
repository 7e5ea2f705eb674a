"""Fock-space vectors and the two q-deformed actions on multipartitions.

A vector is a finitely supported map from multipartitions to Laurent
polynomials.  The raising/lowering generators act by adding/removing nodes
of a fixed residue; the q-exponent on each term balances addable against
removable nodes of that residue on one side of the moved node, the side
being measured in either the component-major order ("am") or the diagonal
order ("flotw").  Divided powers add several equal-residue nodes at once
with the closed-form multi-node exponent; dividing the j-fold ordinary
action by [j]! must reproduce them exactly, which the tests exploit.
"""

from dataclasses import dataclass
from itertools import combinations

from .charge import ChargeParams, ORDERS, is_above, is_below, residue
from .laurent import LaurentPoly, gauss_factorial
from .partitions import (add_node, addable_nodes, check_multipartition,
                         diagram_nodes, rank, remove_node, removable_nodes)


class FockVector:
    """Immutable finitely supported map multipartition -> LaurentPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for mp, poly in dict(terms).items():
                if not isinstance(poly, LaurentPoly):
                    poly = LaurentPoly({0: poly})
                if not poly.is_zero():
                    data[mp] = poly
        ranks = {rank(mp) for mp in data}
        if len(ranks) > 1:
            raise ValueError("mixed ranks in a Fock vector")
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def unit(cls, mp):
        return cls({check_multipartition(mp): LaurentPoly.one()})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        """Basis multipartitions in canonical order."""
        return sorted(self.terms)

    def coefficient(self, mp) -> LaurentPoly:
        return self.terms.get(mp, LaurentPoly.zero())

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        data = dict(self.terms)
        for mp, poly in other.terms.items():
            new = data.get(mp, LaurentPoly.zero()) + poly
            if new.is_zero():
                data.pop(mp, None)
            else:
                data[mp] = new
        return FockVector(data)

    def __neg__(self):
        return FockVector({mp: -poly for mp, poly in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        """Multiply every coefficient by a Laurent polynomial (or int)."""
        if isinstance(poly, int):
            poly = LaurentPoly({0: poly})
        return FockVector({mp: c * poly for mp, c in self.terms.items()})

    def exact_div(self, poly: LaurentPoly):
        """Divide every coefficient exactly by poly; raises if any fails."""
        return FockVector({mp: c.exact_div(poly) for mp, c in self.terms.items()})

    def bar_coefficients(self):
        """Apply the bar involution to every coefficient."""
        return FockVector({mp: c.bar() for mp, c in self.terms.items()})

    def at_one(self):
        """Specialize q = 1: map multipartition -> integer."""
        return {mp: c.at_one() for mp, c in self.terms.items()}

    def to_pairs(self):
        """JSON form: [multipartition, laurent-pairs] sorted canonically."""
        return [[[list(comp) for comp in mp], self.terms[mp].to_pairs()]
                for mp in self.support()]

    def __str__(self):
        if not self.terms:
            return "0"
        from .partitions import format_multipartition
        return " + ".join(f"({self.terms[mp]})*[{format_multipartition(mp)}]"
                          for mp in self.support())

    def __repr__(self):
        return f"FockVector({self.terms!r})"


def _check_order(order):
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")


def addable_i_nodes(mp, i, p: ChargeParams):
    return [g for g in addable_nodes(mp) if residue(g, p) == i]


def removable_i_nodes(mp, i, p: ChargeParams):
    return [g for g in removable_nodes(mp) if residue(g, p) == i]


def lowering_exponent(lam, mu, gamma, i, order, p: ChargeParams) -> int:
    """addable i-nodes of lam below gamma minus removable i-nodes of mu below gamma."""
    add = sum(1 for g in addable_i_nodes(lam, i, p) if is_below(g, gamma, order, p))
    rem = sum(1 for g in removable_i_nodes(mu, i, p) if is_below(g, gamma, order, p))
    return add - rem


def raising_exponent(mu, lam, gamma, i, order, p: ChargeParams) -> int:
    """addable i-nodes of mu above gamma minus removable i-nodes of lam above gamma."""
    add = sum(1 for g in addable_i_nodes(mu, i, p) if is_above(g, gamma, order, p))
    rem = sum(1 for g in removable_i_nodes(lam, i, p) if is_above(g, gamma, order, p))
    return add - rem


def multi_lowering_exponent(lam, mu, added, i, order, p: ChargeParams) -> int:
    """Multi-node exponent: for each added node, addable i-nodes of mu below it
    minus removable i-nodes of lam below it, summed."""
    total = 0
    add_mu = addable_i_nodes(mu, i, p)
    rem_lam = removable_i_nodes(lam, i, p)
    for gamma in added:
        total += sum(1 for g in add_mu if is_below(g, gamma, order, p))
        total -= sum(1 for g in rem_lam if is_below(g, gamma, order, p))
    return total


def f_action(v: FockVector, i, order: str, p: ChargeParams) -> FockVector:
    """Lowering generator f_i: add one i-node every possible way."""
    _check_order(order)
    out = {}
    for lam in v.support():
        coef = v.terms[lam]
        for gamma in addable_i_nodes(lam, i, p):
            mu = add_node(lam, gamma)
            exp = lowering_exponent(lam, mu, gamma, i, order, p)
            prev = out.get(mu, LaurentPoly.zero())
            out[mu] = prev + coef * LaurentPoly.q_power(exp)
    return FockVector(out)


def e_action(v: FockVector, i, order: str, p: ChargeParams) -> FockVector:
    """Raising generator e_i: remove one i-node every possible way."""
    _check_order(order)
    out = {}
    for lam in v.support():
        coef = v.terms[lam]
        for gamma in removable_i_nodes(lam, i, p):
            mu = remove_node(lam, gamma)
            exp = -raising_exponent(mu, lam, gamma, i, order, p)
            prev = out.get(mu, LaurentPoly.zero())
            out[mu] = prev + coef * LaurentPoly.q_power(exp)
    return FockVector(out)


def f_divided(v: FockVector, i, j: int, order: str, p: ChargeParams) -> FockVector:
    """Divided power f_i^(j): add j distinct i-nodes with the multi-node exponent."""
    _check_order(order)
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return v
    out = {}
    for lam in v.support():
        coef = v.terms[lam]
        candidates = addable_i_nodes(lam, i, p)
        for added in combinations(candidates, j):
            mu = lam
            for gamma in added:
                mu = add_node(mu, gamma)
            exp = multi_lowering_exponent(lam, mu, added, i, order, p)
            prev = out.get(mu, LaurentPoly.zero())
            out[mu] = prev + coef * LaurentPoly.q_power(exp)
    return FockVector(out)


def f_power_divided_oracle(v: FockVector, i, j: int, order: str, p: ChargeParams) -> FockVector:
    """(f_i)^j / [j]!, with the division required to be exact."""
    out = v
    for _ in range(j):
        out = f_action(out, i, order, p)
    return out.exact_div(gauss_factorial(j))


@dataclass(frozen=True)
class Weights:
    """Diagonal weight data of one multipartition."""
    net_addable: tuple   # per residue: addable minus removable i-nodes
    zero_nodes: int      # number of 0-nodes in the diagram


def weights(mp, p: ChargeParams) -> Weights:
    """Exponents of the diagonal generators on a basis multipartition."""
    mp = check_multipartition(mp)
    net = [0] * p.e
    for g in addable_nodes(mp):
        net[residue(g, p)] += 1
    for g in removable_nodes(mp):
        net[residue(g, p)] -= 1
    zeros = sum(1 for g in diagram_nodes(mp) if residue(g, p) == 0)
    return Weights(net_addable=tuple(net), zero_nodes=zeros)

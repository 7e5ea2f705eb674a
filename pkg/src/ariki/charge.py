"""Charge parameters, residues, the two node orders, and semisimplicity.

A parameter set consists of d, a root-of-unity order e >= 2, weakly
increasing charges 0 <= v_0 <= ... <= v_{d-1} < e, and a shift s chosen so
that the weights m^(j) = v_j - j*e/d + s*e are all nonnegative.  The m^(j)
have denominator d, so all arithmetic is done on the integers
scaled_m[j] = d*m^(j); rationals only ever appear in display.

Two strict total orders on same-residue nodes drive everything downstream:
the component-major order (below = smaller (comp, row)) and the
diagonal order (below = larger b - a + v_c, ties to the smaller component).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import Node, diagram_nodes

ORDERS = ("am", "flotw")


@dataclass(frozen=True)
class ChargeParams:
    """Immutable (d, e, charges, shift) bundle with the derived scaled weights."""
    d: int
    e: int
    v: tuple
    s: int = None  # minimal shift making all weights nonnegative, if omitted
    scaled_m: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        v = tuple(self.v)
        object.__setattr__(self, "v", v)
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if len(v) != self.d:
            raise ValueError(f"expected {self.d} charges, got {len(v)}")
        if not all(isinstance(x, int) for x in v):
            raise ValueError("charges must be integers")
        if not all(0 <= v[j] <= v[j + 1] for j in range(self.d - 1)) or not (
                0 <= v[0] and v[-1] < self.e):
            raise ValueError("charges must satisfy 0 <= v_0 <= ... <= v_{d-1} < e")
        if self.s is None:
            need = max((j * self.e - self.d * v[j] + self.d * self.e - 1)
                       // (self.d * self.e) for j in range(self.d))
            object.__setattr__(self, "s", max(0, need))
        elif self.s < 0:
            raise ValueError("shift s must be nonnegative")
        scaled = tuple(self.d * v[j] - j * self.e + self.s * self.d * self.e
                       for j in range(self.d))
        if any(x < 0 for x in scaled):
            raise ValueError(f"shift s={self.s} leaves a negative weight")
        object.__setattr__(self, "scaled_m", scaled)

    @property
    def m(self):
        """The weights m^(j) as exact rationals."""
        return tuple(Fraction(x, self.d) for x in self.scaled_m)

    def to_dict(self):
        return {"d": self.d, "e": self.e, "v": list(self.v), "s": self.s}

    @classmethod
    def from_dict(cls, data):
        return cls(d=data["d"], e=data["e"], v=tuple(data["v"]), s=data.get("s"))


def residue(node: Node, p: ChargeParams) -> int:
    """Residue (b - a + v_c) mod e of a node."""
    a, b, c = node
    if not 0 <= c < p.d:
        raise ValueError(f"component index {c} out of range for d={p.d}")
    return (b - a + p.v[c]) % p.e


def am_below(g: Node, g2: Node) -> bool:
    """Component-major order: g lies below g2 iff (c, a) < (c', a')."""
    return (g.comp, g.row) < (g2.comp, g2.row)


def flotw_above(g: Node, g2: Node, p: ChargeParams) -> bool:
    """Diagonal order: g lies above g2 iff its charged content is smaller,
    with ties going to the larger component index."""
    ca = g.col - g.row + p.v[g.comp]
    cb = g2.col - g2.row + p.v[g2.comp]
    return ca < cb or (ca == cb and g.comp > g2.comp)


def flotw_below(g: Node, g2: Node, p: ChargeParams) -> bool:
    """Inverse of flotw_above on distinct comparable nodes."""
    return flotw_above(g2, g, p)


def below_key(order: str, p: ChargeParams):
    """Sort key placing the lowest node of the given order first."""
    if order == "am":
        return lambda g: (g.comp, g.row)
    if order == "flotw":
        return lambda g: (-(g.col - g.row + p.v[g.comp]), g.comp)
    raise ValueError(f"unknown order {order!r}")


def is_below(g: Node, g2: Node, order: str, p: ChargeParams) -> bool:
    """Strictly below in the selected order."""
    if order == "am":
        return am_below(g, g2)
    if order == "flotw":
        return flotw_below(g, g2, p)
    raise ValueError(f"unknown order {order!r}")


def is_above(g: Node, g2: Node, order: str, p: ChargeParams) -> bool:
    """Strictly above in the selected order."""
    return is_below(g2, g, order, p)


def is_semisimple(p: ChargeParams, n: int) -> bool:
    """Semisimplicity of the algebra on n strands at these parameters.

    Requires e > n and that no power v^k u_i with |k| < n collides with u_j.
    """
    if n <= 0:
        return True
    if p.e <= n:
        return False
    for i in range(p.d):
        for j in range(p.d):
            if i == j:
                continue
            for k in range(-(n - 1), n):
                if (k + p.v[i] - p.v[j]) % p.e == 0:
                    return False
    return True


def diagram_residues(mc, p: ChargeParams):
    """Map residue -> number of nodes of the diagram with that residue."""
    counts = {i: 0 for i in range(p.e)}
    for node in diagram_nodes(mc):
        counts[residue(node, p)] += 1
    return counts

"""Symbols, the a-function, and the Schur-element valuation oracle.

The ordinary symbol of a d-composition at height h is the table
B^(i)_j = lambda^(i)_j - j + h (j = 1..h, missing parts read as 0); the
shifted variant adds the weight m^(i) to every entry of row i.  The a-value
of a d-partition is a rational with denominator d, computed here from the
symbol entries with every summation index an integer; the same quantity is
recovered independently in schur_valuation as the y-adic valuation of the
Schur element, walking the explicit product of binomial factors.

All charged arithmetic uses entries scaled by d (see charge.scaled_m);
exact rationals appear only in shifted symbols and returned a-values.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .charge import ChargeParams
from .partitions import check_multicomposition, check_multipartition, part, rank


@dataclass(frozen=True)
class Symbol:
    """Ordinary symbol: d rows of beta-numbers at a common height."""
    rows: tuple
    height: int
    source_rank: int

    @property
    def d(self):
        return len(self.rows)

    @property
    def total(self):
        """Sum of all entries."""
        return sum(sum(row) for row in self.rows)

    @property
    def sigma(self):
        """Exponent of the sign attached to the symbol."""
        return comb(self.d, 2) * comb(self.height, 2) + self.source_rank * (self.d - 1)

    @property
    def tau(self):
        """Power-of-v prefactor exponent: sum of C(d*t+1, 2) for t = 1..h-1."""
        return sum(comb(self.d * t + 1, 2) for t in range(1, self.height))

    @property
    def sign(self):
        return -1 if self.sigma % 2 else 1


@dataclass(frozen=True)
class ShiftedSymbol:
    """Symbol with m^(i) added to row i; entries are exact rationals."""
    rows: tuple
    height: int


def ordinary_symbol(mc, shift: int = 0) -> Symbol:
    """Ordinary symbol of a d-composition at height (max component height) + shift."""
    mc = check_multicomposition(mc)
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    h = max((len(comp) for comp in mc), default=0) + shift
    rows = tuple(tuple(part(comp, j) - j + h for j in range(1, h + 1))
                 for comp in mc)
    return Symbol(rows=rows, height=h, source_rank=rank(mc))


def shifted_symbol(sym: Symbol, m) -> ShiftedSymbol:
    """Add the weight m^(i) to every entry of row i."""
    m = tuple(Fraction(x) for x in m)
    if len(m) != sym.d:
        raise ValueError(f"expected {sym.d} weights, got {len(m)}")
    rows = tuple(tuple(Fraction(entry) + m[i] for entry in row)
                 for i, row in enumerate(sym.rows))
    return ShiftedSymbol(rows=rows, height=sym.height)


def _pair_interaction(rows, scaled_m, d):
    """Sum of min(d*alpha + sm_i, d*beta + sm_j) over cross pairs of entries.

    Rows i < j take all entry pairs; within a row, each unordered pair of
    positions counts once.
    """
    total = 0
    dd = len(rows)
    for i in range(dd):
        row = rows[i]
        for j1 in range(len(row)):
            for j2 in range(j1 + 1, len(row)):
                total += min(d * row[j1], d * row[j2]) + scaled_m[i]
        for j in range(i + 1, dd):
            for alpha in row:
                for beta in rows[j]:
                    total += min(d * alpha + scaled_m[i], d * beta + scaled_m[j])
    return total


def _hook_interaction(rows, scaled_m, d):
    """Sum of min(d*k + sm_i, sm_j) over rows i, entries alpha, 1 <= k <= alpha, all j."""
    total = 0
    for i, row in enumerate(rows):
        for alpha in row:
            for k in range(1, alpha + 1):
                for sm_j in scaled_m:
                    total += min(d * k + scaled_m[i], sm_j)
    return total


def _scaled_stat(sym: Symbol, p: ChargeParams) -> int:
    """d times the symbol statistic that orders compositions (see prec)."""
    return (_pair_interaction(sym.rows, p.scaled_m, p.d)
            - _hook_interaction(sym.rows, p.scaled_m, p.d))


def a_value(mp, p: ChargeParams, shift: int = 0) -> Fraction:
    """a-value of a d-partition: exact rational with denominator d.

    Independent of the symbol shift; equals -schur_valuation(mp, p)/d.
    """
    mp = check_multipartition(mp)
    if len(mp) != p.d:
        raise ValueError(f"expected {p.d} components, got {len(mp)}")
    sym = ordinary_symbol(mp, shift)
    n = sym.source_rank
    sm = p.scaled_m
    scaled = n * sum(sm) - p.d * sym.tau + p.d * sym.total - p.d * n
    scaled -= sym.height * sum(min(sm[i], sm[j])
                               for i in range(p.d) for j in range(i + 1, p.d))
    scaled += _scaled_stat(sym, p)
    return Fraction(scaled, p.d)


def schur_valuation(mp, p: ChargeParams) -> int:
    """y-adic valuation of the Schur element, walked factor by factor.

    Parameters are u_j = y^(d*m^(j)) * eta_d^j and v = y^d.  Every binomial
    factor has the shape y^A * eta_d^i - y^B * eta_d^j with (A, i) != (B, j),
    so its lowest coefficient never cancels and it contributes min(A, B).
    """
    mp = check_multipartition(mp)
    if len(mp) != p.d:
        raise ValueError(f"expected {p.d} components, got {len(mp)}")
    sym = ordinary_symbol(mp, 0)
    d, sm = p.d, p.scaled_m
    rows = sym.rows
    n = sym.source_rank

    # prefactor ((v-1) prod u_i)^(-n) * v^(tau - |B| + n); v - 1 has valuation 0
    val = d * (sym.tau - sym.total + n) - n * sum(sm)

    # nu: product over i < j of (u_i - u_j)^h, then the theta product
    for i in range(d):
        for j in range(i + 1, d):
            exp_a, exp_b = sm[i], sm[j]
            assert (exp_a, i) != (exp_b, j)
            val += sym.height * min(exp_a, exp_b)
    for i in range(d):
        for j in range(d):
            for alpha in rows[i]:
                for k in range(1, alpha + 1):
                    exp_a, exp_b = d * k + sm[i], sm[j]
                    assert (exp_a, i) != (exp_b, j)
                    val += min(exp_a, exp_b)

    # delta: one factor per admissible pair of symbol entries, divided out
    for i in range(d):
        row = rows[i]
        for j1 in range(len(row)):
            for j2 in range(j1 + 1, len(row)):
                alpha, beta = row[j1], row[j2]
                exp_a, exp_b = d * alpha + sm[i], d * beta + sm[i]
                assert exp_a != exp_b, "equal entries in a partition symbol row"
                val -= min(exp_a, exp_b)
        for j in range(i + 1, d):
            for alpha in row:
                for beta in rows[j]:
                    exp_a, exp_b = d * alpha + sm[i], d * beta + sm[j]
                    assert (exp_a, i) != (exp_b, j)
                    val -= min(exp_a, exp_b)
    return val


def prec(mu, nu, p: ChargeParams) -> bool:
    """Strict symbol-statistic comparison of equal-rank d-compositions.

    For d-partitions this is equivalent to a_value(mu) < a_value(nu).
    """
    mu = check_multicomposition(mu)
    nu = check_multicomposition(nu)
    if len(mu) != p.d or len(nu) != p.d:
        raise ValueError(f"expected {p.d} components")
    if rank(mu) != rank(nu):
        raise ValueError("prec compares multicompositions of equal rank")
    h = max(max((len(c) for c in mu), default=0),
            max((len(c) for c in nu), default=0))
    sym_mu = ordinary_symbol(mu, h - max((len(c) for c in mu), default=0))
    sym_nu = ordinary_symbol(nu, h - max((len(c) for c in nu), default=0))
    if sym_mu.height != sym_nu.height:
        raise ValueError("symbol heights disagree after normalization")
    return _scaled_stat(sym_mu, p) < _scaled_stat(sym_nu, p)


def format_rational(x) -> str:
    """Render a Fraction as 'p/q', or plain integer when q = 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

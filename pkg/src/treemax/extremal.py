"""Extremal graph families, their closed-form spanning-tree counts, the
theorem bounds, and numeric harnesses for the auxiliary inequalities.

Closed forms are evaluated in exact rational arithmetic because several
exponents (n2 - q - 1, a2 - 1, a5 - 1, ...) go negative on legal inputs; the
result is then checked to be a nonnegative integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import mpmath

from .graph import Graph, complete, empty, is_connected, join, make_graph, union
from .spanning import as_integer

_PREC_BITS = 256
_MARGIN = mpmath.mpf(2) ** -64


def _pow(base, exp: int) -> Fraction:
    base = Fraction(base)
    if base == 0 and exp < 0:
        raise ZeroDivisionError("zero base with negative exponent")
    return base ** exp


def _integral(x: Fraction) -> int:
    value = as_integer(Fraction(x))
    if value < 0:
        raise ArithmeticError(f"closed form produced a negative count {value}")
    return value


# -- K_s v (K_{n1} u ... u K_{nt}) -------------------------------------------

@dataclass(frozen=True)
class JoinParams:
    s: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.s < 0 or not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("need s >= 0 and at least one positive part")

    @property
    def n(self) -> int:
        return self.s + sum(self.parts)


def build_clique_join(p: JoinParams) -> Graph:
    inner = empty(0)
    for k in p.parts:
        inner = union(inner, complete(k))
    return join(complete(p.s), inner)


def tau_clique_join(p: JoinParams) -> int:
    if p.s == 0 and len(p.parts) > 1:
        raise ValueError("s = 0 with several parts is disconnected; closed form inapplicable")
    n, s, t = p.n, p.s, len(p.parts)
    value = _pow(n, s - 1) * _pow(s, t - 1) * prod((_pow(s + k, k - 1) for k in p.parts), start=Fraction(1))
    return _integral(value)


# -- M^q_{n1,n2} ---------------------------------------------------------------

@dataclass(frozen=True)
class MParams:
    n1: int
    n2: int
    q: int

    def __post_init__(self):
        if not (self.n1 >= self.n2 >= self.q >= 1):
            raise ValueError(f"need n1 >= n2 >= q >= 1, got {self}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2


def build_M(p: MParams) -> Graph:
    """K_{n1} on 0..n1-1, K_{n2} on n1..n-1, matching edges (i, n1 + i) for i < q."""
    edges = [(i, j) for i in range(p.n1) for j in range(i + 1, p.n1)]
    edges += [(p.n1 + i, p.n1 + j) for i in range(p.n2) for j in range(i + 1, p.n2)]
    edges += [(i, p.n1 + i) for i in range(p.q)]
    return make_graph(p.n, edges)


def tau_M(p: MParams) -> int:
    n1, n2, q, n = p.n1, p.n2, p.q, p.n
    value = q * _pow(n1, n1 - q - 1) * _pow(n2, n2 - q - 1) * _pow(n1 * n2 + n, q - 1)
    return _integral(value)


# -- B(a1, ..., a6) --------------------------------------------------------------

# adjacency between the six independent sets (0-based indices)
_B_PATTERN = ((0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5))


@dataclass(frozen=True)
class BParams:
    a: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != 6 or any(x < 0 for x in a):
            raise ValueError("B-graphs take six nonnegative class sizes")
        object.__setattr__(self, "a", a)

    @classmethod
    def of(cls, *a: int) -> "BParams":
        return cls(tuple(a))

    @property
    def n(self) -> int:
        return sum(self.a)


def b_classes(p: BParams) -> list[range]:
    out, start = [], 0
    for size in p.a:
        out.append(range(start, start + size))
        start += size
    return out


def build_B(p: BParams) -> Graph:
    sets = b_classes(p)
    edges = [(u, v) for i, j in _B_PATTERN for u in sets[i] for v in sets[j]]
    return make_graph(p.n, edges)


def tau_B_factors(p: BParams) -> tuple[Fraction, Fraction]:
    """(tau1, tau2) of the product formula for tau(B(a1..a6))."""
    a1, a2, a3, a4, a5, a6 = p.a
    tau1 = (_pow(a1 + a2 + a3, a5 - 1) * _pow(a4 + a5 + a6, a2 - 1)
            * _pow(a1 + a2, a4 - 1) * _pow(a2 + a3, a6 - 1)
            * _pow(a4 + a5, a1 - 1) * _pow(a5 + a6, a3 - 1))
    tau2 = Fraction(
        a2 ** 2 * a5 ** 2 + a2 ** 2 * a5 * (a4 + a6) + a2 * a5 ** 2 * (a1 + a3)
        + a2 ** 2 * a4 * a6 + a5 ** 2 * a1 * a3
        + a2 * a5 * (a1 + a3) * (a4 + a6) + a2 * a4 * a6 * (a1 + a3)
        + a5 * a1 * a3 * (a4 + a6))
    return tau1, tau2


def _degenerate_bipartite(p: BParams):
    """Sides (p, q) when a zero base meets a -1 exponent; those graphs are K_{p,q}."""
    a1, a2, a3, a4, a5, a6 = p.a
    if a1 == a2 == a4 == 0:
        return a3, a5 + a6
    if a2 == a3 == a6 == 0:
        return a1, a4 + a5
    if a4 == a5 == a1 == 0:
        return a2 + a3, a6
    if a5 == a6 == a3 == 0:
        return a1 + a2, a4
    return None


def tau_B(p: BParams) -> int:
    """tau(B(a1..a6)) from the tau1 * tau2 factorization; 0 when the graph is disconnected.

    Parameterizations in which a class pair vanishes against a -1 exponent are
    complete bipartite graphs; they are rewritten as B(0, p, 0, 0, q, 0), where
    every base is positive.
    """
    if p.n == 0 or not is_connected(build_B(p)):
        return 0
    if p.n == 1:
        return 1
    sides = _degenerate_bipartite(p)
    if sides is not None:
        p = BParams.of(0, sides[0], 0, 0, sides[1], 0)
    tau1, tau2 = tau_B_factors(p)
    return _integral(tau1 * tau2)


def tau_B_pendant_family(a3: int, r: int, a6: int) -> int:
    """tau(B(1, 0, a3, 0, r, a6)) = r a3^a6 (a3+1)^(r-1) (a6+r)^(a3-1), for a3 >= 1."""
    if a3 < 1 or r < 1 or a6 < 0:
        raise ValueError("need a3 >= 1, r >= 1, a6 >= 0")
    value = r * _pow(a3, a6) * _pow(a3 + 1, r - 1) * _pow(a6 + r, a3 - 1)
    return _integral(value)


def bip_extremal_params(n: int, r: int, variant: str = "a") -> BParams:
    if variant == "a":
        if r < 1 or n < 2 * r:
            raise ValueError(f"variant a needs r >= 1 and n >= 2r, got n={n}, r={r}")
        lo, hi = (n - 1) // 2, n // 2  # floor and ceil of (n-1)/2
        return BParams.of(1, 0, lo, 0, r, hi - r)
    if variant == "b":
        if r != 1 or n % 2 or n < 4:
            raise ValueError(f"variant b needs r = 1 and even n >= 4, got n={n}, r={r}")
        return BParams.of(1, 0, n // 2, 0, 1, n // 2 - 2)
    raise ValueError(f"unknown variant {variant!r}")


def build_bip_extremal(n: int, r: int, variant: str = "a") -> Graph:
    """Variant a: K_{floor((n-1)/2), ceil((n-1)/2)} plus a vertex on r vertices of the
    larger side. Variant b (r = 1, even n): K_{n/2-1, n/2} plus a pendant on the smaller side."""
    return build_B(bip_extremal_params(n, r, variant))


# -- theorem bounds --------------------------------------------------------------

def bound_conn(n: int, r: int) -> int:
    if r < 1 or n < r + 1:
        raise ValueError(f"need r >= 1 and n >= r + 1, got n={n}, r={r}")
    return _integral(r * _pow(n, r - 1) * _pow(n - 1, n - r - 2))


def bound_vconn_mindeg(n: int, r: int, delta: int) -> int:
    if r < 1 or delta < r or n < 2 * (delta + 1) - r:
        raise ValueError(f"need delta >= r >= 1 and n >= 2(delta+1) - r, got n={n}, r={r}, delta={delta}")
    value = r * _pow(n, r - 1) * _pow(delta + 1, delta - r) * _pow(r + n - delta - 1, n - delta - 2)
    return _integral(value)


def bound_econn_mindeg(n: int, r: int, delta: int) -> int:
    if r < 1 or delta <= r or n < 2 * delta + 2:
        raise ValueError(f"need delta > r >= 1 and n >= 2 delta + 2, got n={n}, r={r}, delta={delta}")
    value = (r * _pow(delta + 1, delta - r) * _pow(n - delta - 1, n - delta - r - 2)
             * _pow((delta + 1) * (n - delta - 1) + n, r - 1))
    return _integral(value)


def bound_bipartite(n: int, r: int) -> int:
    if r < 1 or n < 2 * r:
        raise ValueError(f"need r >= 1 and n >= 2r, got n={n}, r={r}")
    fl_up = (n + 1) // 2          # floor((n+1)/2)
    fl_dn = (n - 1) // 2          # floor((n-1)/2)
    ce_dn = n // 2                # ceil((n-1)/2)
    fl_3 = (n - 3) // 2           # floor((n-3)/2)
    value = r * _pow(fl_up, r - 1) * _pow(fl_dn, ce_dn - r) * _pow(ce_dn, fl_3)
    return _integral(value)


# -- extremal graphs for each bound --------------------------------------------

def conn_extremal(n: int, r: int) -> Graph:
    """(K_1 u K_{n-r-1}) v K_r."""
    parts = (1, n - r - 1) if n - r - 1 > 0 else (1,)
    return build_clique_join(JoinParams(r, parts))


def vconn_mindeg_extremal(n: int, r: int, delta: int) -> Graph:
    """K_r v (K_{delta-r+1} u K_{n-delta-1})."""
    return build_clique_join(JoinParams(r, (delta - r + 1, n - delta - 1)))


def econn_mindeg_extremal(n: int, r: int, delta: int) -> Graph:
    return build_M(MParams(n - delta - 1, delta + 1, r))


# -- auxiliary inequalities -------------------------------------------------------

def _is_int(x) -> bool:
    return Fraction(x).denominator == 1


def _mp(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _log_leq(lhs_terms, rhs_terms) -> bool:
    """sum e*ln(b) over lhs <= same over rhs, up to a 2^-64 margin, at 256-bit precision."""
    with mpmath.workprec(_PREC_BITS):
        lhs = mpmath.fsum(_mp(e) * mpmath.log(_mp(b)) for b, e in lhs_terms if e != 0)
        rhs = mpmath.fsum(_mp(e) * mpmath.log(_mp(b)) for b, e in rhs_terms if e != 0)
        return lhs <= rhs + _MARGIN * max(1, abs(rhs))


def _power_product(terms) -> Fraction:
    return prod((_pow(b, int(e)) for b, e in terms), start=Fraction(1))


def _leq(lhs_terms, rhs_terms) -> bool:
    if all(_is_int(e) for _, e in list(lhs_terms) + list(rhs_terms)):
        return _power_product(lhs_terms) <= _power_product(rhs_terms)
    return _log_leq(lhs_terms, rhs_terms)


def lemma_f(s, x) -> Fraction:
    """f(x) = (s+x+1)^x / (s+x)^(x-1) for integer x."""
    return _pow(Fraction(s) + x + 1, x) / _pow(Fraction(s) + x, x - 1)


def check_lemma_f(s, x) -> bool:
    """Whether f(x) < f(x+1), i.e. one step of the claimed strict growth of f."""
    s, x = Fraction(s), Fraction(x)
    if s < 0 or x < 2:
        raise ValueError("need s >= 0 and x >= 2")
    if _is_int(x):
        return lemma_f(s, int(x)) < lemma_f(s, int(x) + 1)
    with mpmath.workprec(_PREC_BITS):
        def logf(t):
            return t * mpmath.log(_mp(s) + t + 1) - (t - 1) * mpmath.log(_mp(s) + t)
        return logf(_mp(x)) < logf(_mp(x) + 1)


def check_ineq_1(alpha, beta, gamma) -> bool:
    """alpha^(beta-gamma) beta^(alpha-gamma) <= ((alpha+beta)/2)^(alpha+beta-2gamma)."""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if alpha <= 0 or beta <= 0 or alpha + beta <= gamma:
        raise ValueError("need alpha, beta > 0 and alpha + beta > gamma")
    lhs = [(alpha, beta - gamma), (beta, alpha - gamma)]
    rhs = [((alpha + beta) / 2, alpha + beta - 2 * gamma)]
    return _leq(lhs, rhs)


def check_ineq_2(alpha, beta, gamma, xi) -> bool:
    """alpha^(alpha-gamma) beta^(beta-gamma) <= xi^(xi-gamma) (alpha+beta-xi)^(alpha+beta-xi-gamma)."""
    alpha, beta, gamma, xi = (Fraction(t) for t in (alpha, beta, gamma, xi))
    if gamma <= 0 or xi <= 0 or alpha < xi or beta < xi:
        raise ValueError("need gamma, xi > 0 and alpha, beta >= xi")
    lhs = [(alpha, alpha - gamma), (beta, beta - gamma)]
    rhs = [(xi, xi - gamma), (alpha + beta - xi, alpha + beta - xi - gamma)]
    return _leq(lhs, rhs)


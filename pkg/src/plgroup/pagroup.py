"""The groups P^a for rational a > 1: slopes in a^Z, breaks anywhere.

Mirrors the F machinery with two changes: the two-segment connector
replaces dyadic bridges, and beta takes values ``xi`` in ``(1/a, 1]``.
The monitor intervals ``I_n`` and ``J_n`` both have length
``a**-n (1 - 1/a)``, so the unit-domain affine maps onto them share that
slope and the rescaled return map stays in P^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import Q, log_exact, xi_decompose
from .plmap import (
    IDENTITY,
    ONE,
    ZERO,
    Fragment,
    Interval,
    PLError,
    PLHomeo,
    compose,
    end_zones,
    extract,
    embed,
    invert,
    linear_fragment,
    moves_up,
    splice,
    support_within,
)
from .thompson import (
    AlphaPair,
    GammaData,
    GroupKind,
    WordCheck,
    _ceil_log,
    evaluate_word,
    graft_return_map,
    member,
    monitor_intervals,
    orbit_to_right_zone,
    return_map,
    zone_level,
)


@dataclass(frozen=True)
class PaContext:
    a: Fraction

    def __post_init__(self):
        a = Q(self.a)
        if a <= 1:
            raise PLError(f"base must exceed 1, got {a}", "E_BASE")
        object.__setattr__(self, "a", a)

    @property
    def kind(self) -> GroupKind:
        return GroupKind.Pa(self.a)


def _ctx(ctx) -> PaContext:
    return ctx if isinstance(ctx, PaContext) else PaContext(Q(ctx))


def connector_exponents(ctx, source: Interval, target: Interval) -> tuple[int, int]:
    """Least ``n, m >= 1`` with ``a**-m < |target|/|source| < a**n``."""
    a = _ctx(ctx).a
    ratio = target.length / source.length
    n = 1
    while a**n <= ratio:
        n += 1
    m = 1
    while a**-m >= ratio:
        m += 1
    return n, m


def connector_through(ctx, source: Interval, target: Interval, n: int, m: int) -> Fragment:
    """Two segments: slope ``a**n`` from the lower-left corner, ``a**-m`` into the upper-right."""
    a = _ctx(ctx).a
    p, q, r, s = source.lo, source.hi, target.lo, target.hi
    up, down = a**n, a ** (-m)
    x = (s - r + up * p - down * q) / (up - down)
    y = r + up * (x - p)
    if not (p < x < q and r < y < s):
        raise PLError(f"slopes a^{n}, a^-{m} do not meet inside {source} x {target}", "E_CONNECT")
    return ((p, r), (x, y), (q, s))


def pa_connect(ctx, source: Interval, target: Interval) -> Fragment:
    n, m = connector_exponents(ctx, source, target)
    return connector_through(ctx, source, target, n, m)


def alpha_a(ctx, f: PLHomeo) -> AlphaPair:
    a = _ctx(ctx).a
    z = end_zones(f)
    e0, e1 = log_exact(a, z.slope0), log_exact(a, z.slope1)
    if e0 is None or e1 is None:
        raise PLError(f"end slopes ({z.slope0}, {z.slope1}) are not powers of {a}", "E_PRECONDITION")
    return AlphaPair(e0, e1)


def is_Pa11(ctx, g: PLHomeo) -> bool:
    ctx = _ctx(ctx)
    return member(ctx.kind, g) and moves_up(g) and alpha_a(ctx, g) == (1, -1)


def beta_a(ctx, g: PLHomeo) -> Fraction:
    ctx = _ctx(ctx)
    if not is_Pa11(ctx, g):
        raise PLError(f"beta needs an element of P^{ctx.a}_(1,-1)", "E_PRECONDITION")
    start = ctx.a ** -_ceil_log(ctx.a, end_zones(g).left.hi)
    land = orbit_to_right_zone(g, start)
    return xi_decompose(ctx.a, ONE - land.landing)[0]


def gamma_a_data(ctx, g: PLHomeo, n: Optional[int] = None) -> GammaData:
    ctx = _ctx(ctx)
    if not is_Pa11(ctx, g):
        raise PLError(f"gamma needs an element of P^{ctx.a}_(1,-1)", "E_PRECONDITION")
    return return_map(g, zone_level(g, ctx.a) if n is None else n, ctx.a)


def gamma_a(ctx, g: PLHomeo, n: Optional[int] = None) -> PLHomeo:
    return gamma_a_data(ctx, g, n).value


def realize_beta_a(ctx, xi) -> PLHomeo:
    """Slope ``a`` near 0, slope ``1/a`` near 1, orbit ``u -> a u -> 1 - xi u``."""
    ctx = _ctx(ctx)
    a, xi = ctx.a, Q(xi)
    if not 1 / a < xi <= 1:
        raise PLError(f"xi must lie in (1/{a}, 1], got {xi}", "E_PRECONDITION")
    j = 1
    while a**j <= xi + a:
        j += 1
    u = a**-j
    v, w = a * u, ONE - xi * u
    z = ONE - xi * u / a
    g = splice(
        linear_fragment(Interval(ZERO, u), Interval(ZERO, v)),
        pa_connect(ctx, Interval(u, v), Interval(v, w)),
        pa_connect(ctx, Interval(v, w), Interval(w, z)),
        linear_fragment(Interval(w, ONE), Interval(z, ONE)),
    )
    if not is_Pa11(ctx, g) or beta_a(ctx, g) != xi:
        raise PLError(f"beta realiser failed its postcondition for xi={xi}", "E_POSTCONDITION")
    return g


def realize_gamma_a(ctx, target: PLHomeo, base_element: Optional[PLHomeo] = None) -> PLHomeo:
    ctx = _ctx(ctx)
    if not member(ctx.kind, target):
        raise PLError(f"gamma targets must lie in P^{ctx.a}", "E_PRECONDITION")
    g = realize_beta_a(ctx, 1) if base_element is None else base_element
    n = zone_level(g, ctx.a) + 1
    f0 = gamma_a(ctx, g, n)
    g1 = graft_return_map(g, compose(target, invert(f0)), n, ctx.a)
    if not (is_Pa11(ctx, g1) and beta_a(ctx, g1) == 1 and gamma_a(ctx, g1) == target):
        raise PLError("gamma realiser failed its postcondition", "E_POSTCONDITION")
    return g1


def word_identity_Pa(ctx, hatf: PLHomeo, h0: PLHomeo, n: Optional[int] = None) -> WordCheck:
    """Base-``a`` version of the F word identity on ``I_n = [a**-n-1, a**-n]``."""
    ctx = _ctx(ctx)
    a = ctx.a
    n = zone_level(h0, a) if n is None else n
    if gamma_a(ctx, h0, n) != IDENTITY:
        raise PLError("h0 must have gamma(h0) = id", "E_PRECONDITION")
    I_n, _ = monitor_intervals(n, a)
    if not support_within(hatf, I_n):
        raise PLError(f"hatf must be supported in I_{n} = {I_n}", "E_PRECONDITION")
    f = extract(hatf, I_n)
    h1 = realize_gamma_a(ctx, f)
    m = max(n + 1, zone_level(h1, a), zone_level(h0, a))
    d1, d0m = gamma_a_data(ctx, h1, m), gamma_a_data(ctx, h0, m)
    if d1.value != f or d0m.value != IDENTITY:
        raise PLError("gamma changed with the level; the return maps are inconsistent", "E_POSTCONDITION")
    word = [(h0, m - n), (h0, -d0m.exponent), (h1, d1.exponent), (h0, n - m)]
    value = evaluate_word(word)
    try:
        check = embed(extract(value, I_n), I_n) == hatf
    except PLError:
        check = False
    return WordCheck(word, value, check, {"n": n, "m": m, "N0": d0m.exponent, "N": d1.exponent})

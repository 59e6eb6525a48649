"""Thompson's group F: membership, dyadic bridges and the class functions.

``alpha`` reads the base-2 logarithms of the end slopes.  On the set
``F_{1,-1}`` of elements with end slopes (2, 1/2) lying strictly above the
diagonal, ``beta`` is the odd integer ``k`` such that the orbit of the
points ``2**-i`` near 0 lands on the points ``1 - k 2**-j`` near 1, and on
``beta == 1`` elements ``gamma`` is the rescaled return map
``psi_n^-1 g^N phi_n`` from ``I_n = [2**-n-1, 2**-n]`` onto
``J_n = [1 - 2**-n, 1 - 2**-n-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .exactnum import Q, is_dyadic, log_exact, odd_part
from .plmap import (
    IDENTITY,
    ONE,
    ZERO,
    Fragment,
    Interval,
    PLError,
    PLHomeo,
    compose,
    compose_all,
    conjugate,
    embed,
    end_zones,
    evaluate,
    extract,
    invert,
    linear_fragment,
    moves_up,
    orbit_transport,
    power,
    splice,
    support_within,
)

ITERATION_CAP = 10**6
HALF = Fraction(1, 2)
TWO = Fraction(2)


@dataclass(frozen=True)
class GroupKind:
    """Which of F, P^a, P^Q or P a pipeline works in."""

    tag: str
    base: Optional[Fraction] = None

    def __post_init__(self):
        if self.tag not in ("F", "Pa", "PQ", "P"):
            raise PLError(f"unknown group kind {self.tag!r}", "E_MODE")
        if self.tag == "Pa":
            if self.base is None or Q(self.base) <= 1:
                raise PLError(f"P^a needs a rational base a > 1, got {self.base}", "E_BASE")
            object.__setattr__(self, "base", Q(self.base))
        elif self.tag == "F":
            object.__setattr__(self, "base", TWO)

    @classmethod
    def F(cls) -> "GroupKind":
        return cls("F")

    @classmethod
    def Pa(cls, a) -> "GroupKind":
        return cls("Pa", Q(a))

    def __str__(self):
        return f"Pa({self.base})" if self.tag == "Pa" else self.tag


class AlphaPair(NamedTuple):
    at0: int
    at1: int

    def __str__(self):
        return f"({self.at0}, {self.at1})"


def member(kind: GroupKind, f: PLHomeo) -> bool:
    if kind.tag in ("P", "PQ"):
        # every stored coordinate is a Fraction, hence rational
        return all(isinstance(c, Fraction) for c in f.xs + f.ys)
    if not all(log_exact(kind.base, s) is not None for s in f.slopes()):
        return False
    if kind.tag == "F":
        return all(is_dyadic(c) for c in f.xs + f.ys)
    return True


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PLError(message, "E_PRECONDITION")


# dyadic bridges


def standard_pieces(lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Greedy split of a dyadic interval into maximal standard dyadic intervals."""
    pieces = []
    x = lo
    while x < hi:
        w = ONE
        while (x / w).denominator != 1 or x + w > hi:
            w /= 2
        pieces.append((x, x + w))
        x += w
    return pieces


def _split_widest(pieces: list) -> None:
    i = max(range(len(pieces)), key=lambda k: pieces[k][1] - pieces[k][0])
    lo, hi = pieces[i]
    mid = (lo + hi) / 2
    pieces[i : i + 1] = [(lo, mid), (mid, hi)]


def match_pieces(src: list, dst: list) -> Fragment:
    """Map the i-th piece of ``src`` linearly onto the i-th piece of ``dst``."""
    src, dst = list(src), list(dst)
    while len(src) < len(dst):
        _split_widest(src)
    while len(dst) < len(src):
        _split_widest(dst)
    pts = [(src[0][0], dst[0][0])]
    pts += [(s[1], d[1]) for s, d in zip(src, dst)]
    return tuple(pts)


def dyadic_bridge(source: Interval, target: Interval) -> Fragment:
    """A PL bijection ``source -> target`` with slopes in 2^Z and dyadic breaks.

    Both intervals are cut into standard dyadic pieces; the shorter list is
    refined by halving its widest piece until the counts agree, and pieces
    are matched in order.  Standard dyadic pieces have power-of-two lengths
    so every slope is a power of two.
    """
    for c in (source.lo, source.hi, target.lo, target.hi):
        if not is_dyadic(c):
            raise PLError(f"bridge endpoint {c} is not dyadic", "E_DYADIC")
    if source == target:
        return linear_fragment(source, target)
    return match_pieces(standard_pieces(source.lo, source.hi), standard_pieces(target.lo, target.hi))


# alpha and the F_{1,-1} family


def alpha(f: PLHomeo) -> AlphaPair:
    z = end_zones(f)
    e0, e1 = log_exact(2, z.slope0), log_exact(2, z.slope1)
    if e0 is None or e1 is None:
        raise PLError(f"end slopes ({z.slope0}, {z.slope1}) are not powers of 2", "E_PRECONDITION")
    return AlphaPair(e0, e1)


def is_F11(f: PLHomeo) -> bool:
    if not member(GroupKind.F(), f) or not moves_up(f):
        return False
    return alpha(f) == (1, -1)


def _ceil_log(base: Fraction, bound: Fraction) -> int:
    # least n >= 0 with base**-n <= bound
    n, w = 0, ONE
    while w > bound:
        w /= base
        n += 1
    return n


def zone_level(g: PLHomeo, base: Fraction = TWO) -> int:
    """Least ``n`` with ``[0, base**-n]`` and ``[1 - base**-n, 1]`` inside the end zones."""
    z = end_zones(g)
    return max(_ceil_log(base, z.left.hi), _ceil_log(base, ONE - z.right.lo), 1)


class OrbitLanding(NamedTuple):
    start: Fraction
    landing: Fraction
    steps: int


def orbit_to_right_zone(g: PLHomeo, start: Fraction, cap: int = ITERATION_CAP) -> OrbitLanding:
    """Iterate ``g`` from ``start`` until the point enters the maximal right end zone."""
    edge = end_zones(g).right.lo
    y, steps = start, 0
    while y < edge:
        y = evaluate(g, y)
        steps += 1
        if steps > cap:
            raise PLError(f"orbit of {start} did not reach the right end zone within {cap} steps", "E_ITERATION")
    return OrbitLanding(start, y, steps)


def beta_orbit(g: PLHomeo, start_level: Optional[int] = None) -> tuple[int, int, OrbitLanding]:
    """``(k, j, landing)`` with ``1 - landing = k 2**-j`` along the orbit of ``2**-i``."""
    _require(is_F11(g), "beta needs an element of F_{1,-1}")
    i = _ceil_log(TWO, end_zones(g).left.hi) if start_level is None else start_level
    start = Fraction(1, 2**i)
    _require(start <= end_zones(g).left.hi, f"2^-{i} lies outside the left end zone")
    land = orbit_to_right_zone(g, start)
    k, j = odd_part(ONE - land.landing)
    return k, j, land


def beta(g: PLHomeo, start_level: Optional[int] = None) -> int:
    return beta_orbit(g, start_level)[0]


def realize_beta(k: int) -> PLHomeo:
    """An element of F_{1,-1} with ``beta == k``.

    Slope 2 on ``[0, u]``, slope 1/2 on ``[w, 1]`` and two dyadic bridges
    ``[u, v] -> [v, w]`` and ``[v, w] -> [w, g(w)]`` in between, where
    ``u = 2**-j``, ``v = 2u`` and ``w = 1 - k u``.  The orbit of ``u`` is
    ``u, v, w`` so ``beta == k``; each bridge maps its domain onto the next
    interval to the right, which keeps the graph above the diagonal.
    """
    if not isinstance(k, int) or k < 1 or k % 2 == 0:
        raise PLError(f"beta values are odd positive integers, got {k}", "E_PRECONDITION")
    j = 1
    while 2**j <= k + 2:
        j += 1
    u = Fraction(1, 2**j)
    v, w = 2 * u, ONE - k * u
    z = ONE - k * u / 2
    g = splice(
        linear_fragment(Interval(ZERO, u), Interval(ZERO, v)),
        dyadic_bridge(Interval(u, v), Interval(v, w)),
        dyadic_bridge(Interval(v, w), Interval(w, z)),
        linear_fragment(Interval(w, ONE), Interval(z, ONE)),
    )
    if not is_F11(g) or beta(g) != k:
        raise PLError(f"beta realiser failed its postcondition for k={k}", "E_POSTCONDITION")
    return g


# gamma


def monitor_intervals(n: int, base: Fraction = TWO) -> tuple[Interval, Interval]:
    """``I_n = [b**-n-1, b**-n]`` and ``J_n = [1 - b**-n, 1 - b**-n-1]``."""
    hi = base**-n
    lo = hi / base
    return Interval(lo, hi), Interval(ONE - hi, ONE - lo)


class GammaData(NamedTuple):
    level: int
    exponent: int
    value: PLHomeo


def return_map(g: PLHomeo, n: int, base: Fraction = TWO) -> GammaData:
    """Find ``N`` with ``g^N(I_n) = J_n`` and rescale ``g^N`` between them."""
    if n < zone_level(g, base):
        raise PLError(f"level {n} is not inside both end linear zones", "E_PRECONDITION")
    I, J = monitor_intervals(n, base)
    land = orbit_to_right_zone(g, I.lo)
    y, steps = land.landing, land.steps
    while y < J.lo:
        y = evaluate(g, y)
        steps += 1
    if y != J.lo:
        raise PLError(f"orbit of {I.lo} misses {J.lo}: beta(g) != 1", "E_PRECONDITION")
    value, reached = orbit_transport(g, I, steps)
    if reached != J:
        raise PLError(f"g^{steps} carries {I} to {reached}, not {J}", "E_POSTCONDITION")
    return GammaData(n, steps, value)


def gamma_data(g: PLHomeo, n: Optional[int] = None) -> GammaData:
    _require(is_F11(g), "gamma needs an element of F_{1,-1}")
    return return_map(g, zone_level(g) if n is None else n)


def gamma(g: PLHomeo, n: Optional[int] = None) -> PLHomeo:
    return gamma_data(g, n).value


def graft_return_map(g: PLHomeo, f: PLHomeo, level: int, base: Fraction = TWO) -> PLHomeo:
    """``embed(f, J_level) o g``: replace ``g`` by ``f_hat g`` on ``J_{level-1}``."""
    _, J = monitor_intervals(level, base)
    return compose(embed(f, J), g)


def realize_gamma(target: PLHomeo, base_element: Optional[PLHomeo] = None) -> PLHomeo:
    """An element of F_{1,-1,1} whose gamma is ``target``.

    Start from ``g`` with ``beta(g) == 1`` and ``gamma(g) == f0`` at a level
    ``n`` one above the minimal one, so that ``g`` carries ``J_{n-1}`` onto
    ``J_n`` linearly.  Post-composing with ``target f0^-1`` grafted into
    ``J_n`` changes ``g`` only on ``J_{n-1}``, which the orbit of ``I_n``
    crosses exactly at its last step.
    """
    _require(member(GroupKind.F(), target), "gamma targets must lie in F")
    g = realize_beta(1) if base_element is None else base_element
    n = zone_level(g) + 1
    f0 = gamma(g, n)
    g1 = graft_return_map(g, compose(target, invert(f0)), n)
    if not (is_F11(g1) and beta(g1) == 1 and gamma(g1) == target):
        raise PLError("gamma realiser failed its postcondition", "E_POSTCONDITION")
    return g1


# the word identity


Word = list[tuple[PLHomeo, int]]


def evaluate_word(word: Word) -> PLHomeo:
    return compose_all(*(power(e, k) for e, k in word))


@dataclass
class WordCheck:
    word: Word
    value: PLHomeo
    check: bool
    levels: dict


def word_identity_F(hatf: PLHomeo, h0: PLHomeo, n: Optional[int] = None, h1_base: Optional[PLHomeo] = None) -> WordCheck:
    """Express ``hatf`` supported in ``I_n`` as a word in ``h0`` and a gamma-realiser.

    ``h0`` must have trivial gamma.  With ``f`` the rescaling of ``hatf``
    and ``h1`` realising ``gamma(h1) = f``, the word
    ``h0^(m-n) h0^-N0 h1^N h0^(n-m)`` at a common level ``m > n`` restricts
    to ``hatf`` on ``I_n``.
    """
    n = zone_level(h0) if n is None else n
    d0 = gamma_data(h0, n)
    _require(d0.value == IDENTITY, "h0 must have gamma(h0) = id")
    I_n, _ = monitor_intervals(n)
    _require(support_within(hatf, I_n), f"hatf must be supported in I_{n} = {I_n}")
    f = extract(hatf, I_n)
    h1 = realize_gamma(f, h1_base)
    m = max(n + 1, zone_level(h1), zone_level(h0))
    d1 = gamma_data(h1, m)
    d0m = gamma_data(h0, m)
    if d1.value != f or d0m.value != IDENTITY:
        raise PLError("gamma changed with the level; the return maps are inconsistent", "E_POSTCONDITION")
    word = [(h0, m - n), (h0, -d0m.exponent), (h1, d1.exponent), (h0, n - m)]
    value = evaluate_word(word)
    try:
        check = embed(extract(value, I_n), I_n) == hatf
    except PLError:
        check = False
    return WordCheck(word, value, check, {"n": n, "m": m, "N0": d0m.exponent, "N": d1.exponent})


# witnesses for class invariance: f carries orbit data of g to that of g^f


def _end_exponents(f: PLHomeo, base: Fraction) -> tuple[int, int]:
    z = end_zones(f)
    e0, e1 = log_exact(base, z.slope0), log_exact(base, z.slope1)
    if e0 is None or e1 is None:
        raise PLError(f"end slopes of the conjugator are not powers of {base}", "E_PRECONDITION")
    return e0, e1


def beta_conjugation_witness(g: PLHomeo, f: PLHomeo, conj=conjugate, base: Fraction = TWO) -> bool:
    """Check that ``f`` maps the beta-orbit of ``g`` onto an orbit of ``g^f``.

    With ``f`` of slope ``base**j0`` near 0 and ``base**j1`` near 1, the
    point ``x = base**-i`` goes to ``base**(j0 - i)`` and the landing point
    ``y`` near 1 goes to ``1 - base**j1 (1 - y)``, and ``(g^f)^M f(x) = f(y)``.
    """
    h = conj(g, f)
    j0, j1 = _end_exponents(f, base)
    zg, zf = end_zones(g), end_zones(f)
    i = _ceil_log(base, min(zg.left.hi, zf.left.hi))
    x = base**-i
    land = orbit_to_right_zone(g, x)
    y, steps = land.landing, land.steps
    while y < zf.right.lo:
        y, steps = evaluate(g, y), steps + 1
    fx, fy = evaluate(f, x), evaluate(f, y)
    if fx != base ** (j0 - i) or ONE - fy != base**j1 * (ONE - y):
        return False
    z = fx
    for _ in range(steps):
        z = evaluate(h, z)
    return z == fy


def gamma_conjugation_witness(g: PLHomeo, f: PLHomeo, conj=conjugate, base: Fraction = TWO) -> bool:
    """Check that ``(g^f)^N`` carries ``I_{n-j0}`` onto ``J_{n-j1}`` with the same rescaled map."""
    h = conj(g, f)
    j0, j1 = _end_exponents(f, base)
    n = max(zone_level(g, base), zone_level(f, base), j0 + 1, j1 + 1)
    d = return_map(g, n, base)
    I, _ = monitor_intervals(n - j0, base)
    _, J = monitor_intervals(n - j1, base)
    value, reached = orbit_transport(h, I, d.exponent)
    return reached == J and value == d.value

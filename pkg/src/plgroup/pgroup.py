"""The full group P and its rational twin P^Q: monitored information.

For ``g`` in ``P_{1,-1}`` (slope 2 at 0, slope 1/2 at 1, above the
diagonal) a fundamental domain ``I = [a, 2a]`` in the left end zone is
carried by some power ``g^N`` onto a fundamental domain
``J = [1 - 2b, 1 - b]`` in the right end zone.  The rescaled map
``phi_J^-1 g^N phi_I`` is the information monitored by ``(I, J)``.  The set
of all such informations is infinite, so everything here takes an explicit
basepoint ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import Q
from .plmap import (
    IDENTITY,
    ONE,
    ZERO,
    Interval,
    PLError,
    PLHomeo,
    compose,
    conjugate,
    embed,
    end_zones,
    evaluate,
    evaluate_inverse,
    extract,
    image,
    invert,
    moves_up,
    orbit_transport,
    support_within,
)
from .thompson import GroupKind, WordCheck, evaluate_word, member, orbit_to_right_zone

HALF = Fraction(1, 2)
G_STAR = PLHomeo([(0, 0), (Fraction(1, 4), HALF), (HALF, Fraction(3, 4)), (1, 1)])
G_STAR_BASEPOINT = Fraction(1, 16)


@dataclass(frozen=True)
class MonitorPair:
    I: Interval
    J: Interval
    N: int

    @property
    def a(self) -> Fraction:
        return self.I.lo

    @property
    def b(self) -> Fraction:
        return ONE - self.J.hi


@dataclass(frozen=True)
class MonitoredInfo:
    pair: MonitorPair
    info: PLHomeo


def is_P11(g: PLHomeo) -> bool:
    if not moves_up(g):
        return False
    z = end_zones(g)
    return z.slope0 == 2 and z.slope1 == HALF


def member_PQ(f: PLHomeo) -> bool:
    return member(GroupKind("PQ"), f)


def monitored_info(g: PLHomeo, basepoint) -> MonitoredInfo:
    """Information of ``g`` monitored from ``I = [a, 2a]``.

    The orbit of ``a`` is followed into the maximal right end zone; there
    ``g(x) = 1 - (1 - x)/2`` so ``J = [x_N, x_{N+1}]`` automatically has the
    shape ``[1 - 2b, 1 - b]``.
    """
    a = Q(basepoint)
    if not is_P11(g):
        raise PLError("monitored information needs an element of P_{1,-1}", "E_PRECONDITION")
    if not 0 < 2 * a <= end_zones(g).left.hi:
        raise PLError(f"[{a}, {2 * a}] is not inside the left end zone", "E_PRECONDITION")
    I = Interval(a, 2 * a)
    land = orbit_to_right_zone(g, a)
    info, J = orbit_transport(g, I, land.steps)
    return MonitoredInfo(MonitorPair(I, J, land.steps), info)


def shift_pair(g: PLHomeo, data: MonitoredInfo, depth: int) -> MonitoredInfo:
    """Monitor with ``(g^-d I, g^d J)`` and exponent ``N + 2d``, recomputing the information."""
    I = Interval(data.pair.I.lo / 2**depth, data.pair.I.hi / 2**depth)
    N = data.pair.N + 2 * depth
    info, J = orbit_transport(g, I, N)
    return MonitoredInfo(MonitorPair(I, J, N), info)


def realize_info(f: PLHomeo, base: Optional[tuple[PLHomeo, Fraction]] = None) -> tuple[PLHomeo, Fraction]:
    """An element of ``P_{1,-1}`` and a basepoint monitoring the information ``f``.

    Take a base element with monitor pair ``(I, J)`` and exponent ``N >= 2``
    and post-compose with ``f f0^-1`` grafted into ``J``, where ``f0`` is the
    base information.  Only ``g^-1(J) = g^(N-1)(I)`` is touched, and that
    interval sits strictly between the two end zones' monitor intervals.
    """
    g, a = (G_STAR, G_STAR_BASEPOINT) if base is None else (base[0], Q(base[1]))
    data = monitored_info(g, a)
    while data.pair.N < 2:
        a /= 2
        data = monitored_info(g, a)
    g1 = compose(embed(compose(f, invert(data.info)), data.pair.J), g)
    if not is_P11(g1) or monitored_info(g1, a).info != f:
        raise PLError("information realiser failed its postcondition", "E_POSTCONDITION")
    return g1, a


def conjugation_shift(g: PLHomeo, g1: PLHomeo, data: MonitoredInfo) -> int:
    """Least depth ``d`` pushing a monitor pair of ``g`` into ``g1``'s end zones.

    At depth ``d`` the pair is ``(g^-d I, g^d J)``; ``g1`` must be linear on
    ``[0, 4a_d]`` and on ``[1 - 2b_d, 1]`` so that it carries the pair to a
    monitor pair of ``g1 g g1^-1``.
    """
    z1 = end_zones(g1)
    a, b, d = data.pair.a, data.pair.b, 0
    while 4 * a > z1.left.hi or ONE - 2 * b < z1.right.lo:
        a, b, d = a / 2, b / 2, d + 1
    return d


@dataclass
class ConjugationCheck:
    holds: bool
    depth: int
    before: MonitoredInfo
    after: Optional[MonitoredInfo]
    reason: str = ""


def info_conjugation_check(g: PLHomeo, g1: PLHomeo, basepoint, conj=conjugate) -> ConjugationCheck:
    """Compare the information of ``g`` with that of ``g^g1`` at the carried pair.

    Two things are checked: ``g1(I), g1(J)`` monitor ``before.info`` for
    ``g^g1`` with the same exponent, and the information of ``g^g1`` read
    from the basepoint ``g1(a)`` is the same map.
    """
    start = monitored_info(g, basepoint)
    depth = conjugation_shift(g, g1, start)
    before = shift_pair(g, start, depth)
    if before.info != start.info:
        return ConjugationCheck(False, depth, before, None, "shifting the pair changed the information")
    h = conj(g, g1)
    I1, J1 = image(g1, before.pair.I), image(g1, before.pair.J)
    try:
        after = monitored_info(h, I1.lo)
        carried, reached = orbit_transport(h, I1, before.pair.N)
    except PLError as exc:
        return ConjugationCheck(False, depth, before, None, str(exc))
    if reached != J1 or carried != before.info:
        return ConjugationCheck(False, depth, before, after, "carried pair does not monitor the same information")
    if after.info != before.info:
        return ConjugationCheck(False, depth, before, after, "information differs")
    return ConjugationCheck(True, depth, before, after)


def info_conjugation_invariance(g: PLHomeo, g1: PLHomeo, basepoint) -> bool:
    return info_conjugation_check(g, g1, basepoint).holds


def realize_end_slopes(s0, s1) -> PLHomeo:
    """An element with end slopes ``s0`` at 0 and ``s1`` at 1.

    Linear pieces of width ``e = 1/(4 max(1, s0, s1))`` at both ends, joined
    by a straight segment; ``s0 e <= 1/4`` and ``1 - s1 e >= 3/4`` keep the
    middle slope positive.
    """
    s0, s1 = Q(s0), Q(s1)
    if s0 <= 0 or s1 <= 0:
        raise PLError("end slopes must be positive", "E_PRECONDITION")
    e = 1 / (4 * max(ONE, s0, s1))
    return PLHomeo([(ZERO, ZERO), (e, s0 * e), (1 - e, 1 - s1 * e), (ONE, ONE)])


def transitivity_point(h0: PLHomeo, h1: PLHomeo, n: int, m: int) -> Fraction:
    """``h0^(m-n) h1 h0^(n-m) (2**-n)``; equals ``h1'(0) 2**-n`` when the zones allow."""
    x = Fraction(1, 2**n)
    for _ in range(m - n):
        x = evaluate_inverse(h0, x)
    x = evaluate(h1, x)
    for _ in range(m - n):
        x = evaluate(h0, x)
    return x


@dataclass
class PWordCheck(WordCheck):
    edges: dict = field(default_factory=dict)
    letters_in_PQ: bool = True


def _push(g: PLHomeo, interval: Interval, k: int) -> Interval:
    lo, hi = interval.lo, interval.hi
    step = evaluate if k >= 0 else evaluate_inverse
    for _ in range(abs(k)):
        lo, hi = step(g, lo), step(g, hi)
    return Interval(lo, hi)


def word_identity_P(
    hatf: PLHomeo,
    h0: PLHomeo,
    basepoint,
    h1_base: Optional[tuple[PLHomeo, Fraction]] = None,
    mode: str = "P",
) -> PWordCheck:
    """Write ``hatf`` supported in ``I0`` as ``h0^(-N0-n) h2^-1 h1^(N1+2n) h2 h0^-n`` on ``I0``.

    ``h0`` monitors the identity from ``I0 = [a, 2a]`` to ``J0 = [1-2b, 1-b]``;
    ``h1`` monitors the rescaled ``hatf`` from ``[c, 2c]`` to ``[1-2d, 1-d]``;
    ``h2`` has end slopes ``c/a`` and ``d/b`` and matches the pushed pairs.
    """
    d0 = monitored_info(h0, basepoint)
    if d0.info != IDENTITY:
        raise PLError("h0 must monitor the identity at the given basepoint", "E_PRECONDITION")
    I0, J0, N0 = d0.pair.I, d0.pair.J, d0.pair.N
    if not support_within(hatf, I0):
        raise PLError(f"hatf must be supported in I0 = {I0}", "E_PRECONDITION")
    f = extract(hatf, I0)
    h1, c = realize_info(f, h1_base)
    d1 = monitored_info(h1, c)
    I1, J1, N1 = d1.pair.I, d1.pair.J, d1.pair.N
    a, b, d = d0.pair.a, d0.pair.b, d1.pair.b
    h2 = realize_end_slopes(c / a, d / b)
    z2 = end_zones(h2)
    n = 0
    while 2 * a / 2**n > z2.left.hi or ONE - 2 * b / 2**n < z2.right.lo:
        n += 1
    edges = {
        "h2(h0^-n I0) = h1^-n I1": _push(h2, _push(h0, I0, -n), 1) == _push(h1, I1, -n),
        "h2(h0^n J0) = h1^n J1": _push(h2, _push(h0, J0, n), 1) == _push(h1, J1, n),
    }
    for name, ok in edges.items():
        if not ok:
            raise PLError(f"diagram edge failed: {name}", "E_DIAGRAM")
    word = [(h0, -N0 - n), (h2, -1), (h1, N1 + 2 * n), (h2, 1), (h0, -n)]
    letters_ok = True
    if mode == "PQ":
        letters_ok = all(member_PQ(e) for e in (h0, h1, h2))
        if not letters_ok:
            raise PLError("a word letter left P^Q", "E_MEMBERSHIP")
    value = evaluate_word(word)
    try:
        check = embed(extract(value, I0), I0) == hatf
    except PLError:
        check = False
    levels = {"n": n, "N0": N0, "N1": N1, "a": a, "b": b, "c": c, "d": d}
    return PWordCheck(word, value, check, levels, edges, letters_ok)

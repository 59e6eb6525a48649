"""Random elements of F, P^a and P with bounded complexity.

All generators take a ``random.Random`` so callers control reproducibility.
The ``*_11`` generators build elements above the diagonal as a chain of
fundamental domains ``q0 < q1 < ... < q_{r+1}`` with ``[q_i, q_{i+1}]``
carried onto ``[q_{i+1}, q_{i+2}]``; the orbit of ``q0`` is then the chain
itself, which pins down beta.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import Q
from .pagroup import connector_exponents, connector_through
from .plmap import ONE, ZERO, Fragment, Interval, PLHomeo, embed, linear_fragment, splice
from .thompson import match_pieces, standard_pieces


@dataclass(frozen=True)
class RandomConfig:
    max_breaks: int = 8
    max_depth: int = 8
    max_den: int = 2**12
    chain_extra: int = 2
    bridge_splits: int = 2


DEFAULT = RandomConfig()


def _split_random(rng: random.Random, pieces: list, min_width: Fraction) -> None:
    wide = [i for i, (lo, hi) in enumerate(pieces) if hi - lo > min_width]
    i = rng.choice(wide) if wide else max(range(len(pieces)), key=lambda k: pieces[k][1] - pieces[k][0])
    lo, hi = pieces[i]
    mid = (lo + hi) / 2
    pieces[i : i + 1] = [(lo, mid), (mid, hi)]


def random_dyadic_partition(rng, lo, hi, count: int, cfg: RandomConfig = DEFAULT) -> list:
    pieces = standard_pieces(Q(lo), Q(hi))
    min_width = Fraction(1, 2**cfg.max_depth)
    while len(pieces) < count:
        _split_random(rng, pieces, min_width)
    return pieces


def random_F(rng: random.Random, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    """A random tree-pair style element: two random dyadic partitions of [0, 1]."""
    leaves = rng.randint(1, cfg.max_breaks + 1)
    src = random_dyadic_partition(rng, 0, 1, leaves, cfg)
    dst = random_dyadic_partition(rng, 0, 1, leaves, cfg)
    return splice(match_pieces(src, dst))


def random_dyadic_bridge(rng: random.Random, source: Interval, target: Interval, cfg: RandomConfig = DEFAULT) -> Fragment:
    src = standard_pieces(source.lo, source.hi)
    dst = standard_pieces(target.lo, target.hi)
    min_width = Fraction(1, 2**cfg.max_depth)
    for pieces in (src, dst):
        for _ in range(rng.randint(0, cfg.bridge_splits)):
            _split_random(rng, pieces, min_width)
    while len(src) < len(dst):
        _split_random(rng, src, min_width)
    while len(dst) < len(src):
        _split_random(rng, dst, min_width)
    return match_pieces(src, dst)


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int) -> Fraction:
    """A rational strictly inside (lo, hi) with a smallish denominator."""
    for _ in range(64):
        den = rng.randint(2, max_den)
        x = lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den)
        x = x.limit_denominator(max_den)
        if lo < x < hi:
            return x
    return (lo + hi) / 2


def random_points(rng, lo, hi, count: int, max_den: int) -> list[Fraction]:
    pts: set[Fraction] = set()
    while len(pts) < count:
        pts.add(random_rational(rng, lo, hi, max_den))
    return sorted(pts)


def random_P(rng: random.Random, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    k = rng.randint(0, cfg.max_breaks)
    den = rng.choice([8, 16, 64, cfg.max_den])
    xs = random_points(rng, ZERO, ONE, k, den)
    ys = random_points(rng, ZERO, ONE, k, den)
    return PLHomeo([(ZERO, ZERO), *zip(xs, ys), (ONE, ONE)])


def random_P_bridge(rng: random.Random, source: Interval, target: Interval, cfg: RandomConfig = DEFAULT) -> Fragment:
    k = rng.randint(0, 3)
    den = rng.choice([4, 16, 64])
    xs = [source.lo + source.length * t for t in random_points(rng, ZERO, ONE, k, den)]
    ys = [target.lo + target.length * t for t in random_points(rng, ZERO, ONE, k, den)]
    return ((source.lo, target.lo), *zip(xs, ys), (source.hi, target.hi))


def random_pa_bridge(
    rng: random.Random, a: Fraction, source: Interval, target: Interval, cfg: RandomConfig = DEFAULT, split: bool = True
) -> Fragment:
    """Optionally split the source at a random point and connect the halves with random exponents."""
    pieces = 2 if split and rng.random() >= 0.5 else 1
    if pieces == 2:
        s_mid = random_rational(rng, source.lo, source.hi, 8)
        t_mid = random_rational(rng, target.lo, target.hi, 8)
        src = [Interval(source.lo, s_mid), Interval(s_mid, source.hi)]
        dst = [Interval(target.lo, t_mid), Interval(t_mid, target.hi)]
    else:
        src, dst = [source], [target]
    pts: list = []
    for s, t in zip(src, dst):
        n, m = connector_exponents(a, s, t)
        frag = connector_through(a, s, t, n + rng.randint(0, 1), m + rng.randint(0, 1))
        pts.extend(frag if not pts else frag[1:])
    return tuple(pts)


def random_Pa(rng: random.Random, a, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    a = Q(a)
    # each bridge adds at most three interior breakpoints; stay within max_breaks
    k = rng.randint(0, max(0, min(2, (cfg.max_breaks - 1) // 2)))
    split = 4 * (k + 1) - 1 <= cfg.max_breaks
    xs = [ZERO, *random_points(rng, ZERO, ONE, k, 16), ONE]
    ys = [ZERO, *random_points(rng, ZERO, ONE, k, 16), ONE]
    frags = [
        random_pa_bridge(rng, a, Interval(xs[i], xs[i + 1]), Interval(ys[i], ys[i + 1]), cfg, split) for i in range(k + 1)
    ]
    return splice(*frags)


def _chain_element(rng, chain: list[Fraction], left_slope: Fraction, right_slope: Fraction, bridge) -> PLHomeo:
    u, w, z = chain[0], chain[-2], chain[-1]
    frags = [linear_fragment(Interval(ZERO, u), Interval(ZERO, chain[1]))]
    for i in range(len(chain) - 2):
        frags.append(bridge(Interval(chain[i], chain[i + 1]), Interval(chain[i + 1], chain[i + 2])))
    frags.append(linear_fragment(Interval(w, ONE), Interval(z, ONE)))
    g = splice(*frags)
    zones_ok = g.slopes()[0] == left_slope and g.slopes()[-1] == right_slope
    assert zones_ok, "chain construction broke an end slope"
    return g


def random_F11(rng: random.Random, k: Optional[int] = None, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    """Random element of F_{1,-1} with beta = k (random odd k <= 15 if None)."""
    if k is None:
        k = rng.randrange(1, 16, 2)
    j = rng.randint(2, 4)
    u = Fraction(1, 2**j)
    jr = j
    while ONE - k * Fraction(1, 2**jr) <= 2 * u:
        jr += 1
    jr += rng.randint(0, 1)
    w = ONE - k * Fraction(1, 2**jr)
    z = ONE - k * Fraction(1, 2 ** (jr + 1))
    inner = sorted({Fraction(rng.randint(1, 63), 64) for _ in range(rng.randint(0, cfg.chain_extra))})
    inner = [x for x in inner if 2 * u < x < w]
    chain = [u, 2 * u, *inner, w, z]
    return _chain_element(rng, chain, Fraction(2), Fraction(1, 2), lambda s, t: random_dyadic_bridge(rng, s, t, cfg))


def random_Pa11(rng: random.Random, a, xi=None, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    """Random element of P^a_{1,-1}; ``xi`` fixes beta (random if None)."""
    a = Q(a)
    if xi is None:
        xi = ONE if rng.random() < 0.2 else random_rational(rng, 1 / a, ONE, 16)
    xi = Q(xi)
    j = rng.randint(1, 3)
    while a ** (1 - j) >= Fraction(1, 2):
        j += 1
    u = a**-j
    jr = j
    while ONE - xi * a**-jr <= a * u:
        jr += 1
    jr += rng.randint(0, 1)
    w, z = ONE - xi * a**-jr, ONE - xi * a ** -(jr + 1)
    inner = [x for x in random_points(rng, a * u, w, rng.randint(0, cfg.chain_extra), 32)]
    chain = [u, a * u, *inner, w, z]
    return _chain_element(rng, chain, a, 1 / a, lambda s, t: random_pa_bridge(rng, a, s, t, cfg))


def random_P11(rng: random.Random, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    u = Fraction(1, rng.choice([8, 12, 16, 20, 32]))
    w = ONE - Fraction(1, rng.choice([4, 5, 6, 8, 10]))
    z = ONE - (ONE - w) / 2
    inner = random_points(rng, 2 * u, w, rng.randint(0, cfg.chain_extra), 32)
    chain = [u, 2 * u, *inner, w, z]
    return _chain_element(rng, chain, Fraction(2), Fraction(1, 2), lambda s, t: random_P_bridge(rng, s, t, cfg))


def random_supported(rng: random.Random, interval: Interval, kind: str = "F", a=None, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    """A random element with support inside ``interval``."""
    if kind == "F":
        f = random_F(rng, cfg)
    elif kind == "Pa":
        f = random_Pa(rng, a, cfg)
    else:
        f = random_P(rng, cfg)
    return embed(f, interval)


def random_element(rng: random.Random, mode: str, a=None, cfg: RandomConfig = DEFAULT) -> PLHomeo:
    if mode == "F":
        return random_F(rng, cfg)
    if mode == "Pa":
        return random_Pa(rng, a, cfg)
    return random_P(rng, cfg)

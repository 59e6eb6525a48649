"""Orientation-preserving PL homeomorphisms of [0, 1] with exact breakpoints.

An element is stored as its canonical breakpoint list: the graph vertices
``(x_i, y_i)`` from ``(0, 0)`` to ``(1, 1)`` with strictly increasing
coordinates and no interior vertex collinear with its neighbours.  Two
elements are equal exactly when their canonical lists agree, so ``==`` is
group-element equality.

Products follow function composition: ``f * g`` is ``f o g`` (apply ``g``
first).  Conjugation is ``h^g = g h g^-1``.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .exactnum import Q, RationalLike

ZERO = Fraction(0)
ONE = Fraction(1)

Point = tuple[Fraction, Fraction]


class PLError(ValueError):
    """Domain error in the PL layer; ``code`` is a short machine-readable tag."""

    def __init__(self, message: str, code: str = "E_DOMAIN"):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Q(self.lo))
        object.__setattr__(self, "hi", Q(self.hi))
        if not 0 <= self.lo < self.hi <= 1:
            raise PLError(f"bad interval [{self.lo}, {self.hi}]: need 0 <= lo < hi <= 1", "E_INTERVAL")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def inside(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class AffineMap:
    """Orientation-preserving affine bijection ``source -> target``."""

    source: Interval
    target: Interval

    @property
    def slope(self) -> Fraction:
        return self.target.length / self.source.length

    @property
    def offset(self) -> Fraction:
        return self.target.lo - self.slope * self.source.lo

    def __call__(self, t: RationalLike) -> Fraction:
        return self.offset + self.slope * Q(t)

    def inverse(self) -> "AffineMap":
        return AffineMap(self.target, self.source)


UNIT = Interval(ZERO, ONE)


def _collinear(p: Point, q: Point, r: Point) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


def _canonical(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> tuple[tuple, tuple]:
    out_x, out_y = [xs[0]], [ys[0]]
    for i in range(1, len(xs) - 1):
        if not _collinear((out_x[-1], out_y[-1]), (xs[i], ys[i]), (xs[i + 1], ys[i + 1])):
            out_x.append(xs[i])
            out_y.append(ys[i])
    out_x.append(xs[-1])
    out_y.append(ys[-1])
    return tuple(out_x), tuple(out_y)


def _validate(xs, ys, strict: bool) -> None:
    if len(xs) < 2:
        raise PLError("need at least the two endpoints (0,0) and (1,1)", "E_FORMAT")
    if (xs[0], ys[0]) != (ZERO, ZERO):
        raise PLError(f"breakpoint 0 is ({xs[0]}, {ys[0]}), expected (0, 0)", "E_ENDPOINT")
    if (xs[-1], ys[-1]) != (ONE, ONE):
        raise PLError(f"breakpoint {len(xs) - 1} is ({xs[-1]}, {ys[-1]}), expected (1, 1)", "E_ENDPOINT")
    for i in range(1, len(xs)):
        if not xs[i - 1] < xs[i]:
            raise PLError(f"breakpoint {i}: x-coordinates not strictly increasing", "E_MONOTONE")
        if not ys[i - 1] < ys[i]:
            raise PLError(f"breakpoint {i}: y-coordinates not strictly increasing", "E_MONOTONE")
    if strict:
        for i in range(1, len(xs) - 1):
            if _collinear((xs[i - 1], ys[i - 1]), (xs[i], ys[i]), (xs[i + 1], ys[i + 1])):
                raise PLError(f"breakpoint {i} is collinear with its neighbours (non-canonical)", "E_CANONICAL")


class PLHomeo:
    """An element of P, the group of orientation-preserving PL homeomorphisms."""

    __slots__ = ("xs", "ys", "_hash", "_sl")

    def __init__(self, points: Iterable[tuple[RationalLike, RationalLike]], strict: bool = False):
        pts = [(Q(x), Q(y)) for x, y in points]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        _validate(xs, ys, strict)
        self.xs, self.ys = _canonical(xs, ys)
        self._hash = self._sl = None

    @classmethod
    def _from_canonical(cls, xs, ys) -> "PLHomeo":
        obj = cls.__new__(cls)
        obj.xs, obj.ys = _canonical(xs, ys)
        obj._hash = obj._sl = None
        return obj

    @classmethod
    def identity(cls) -> "PLHomeo":
        return cls._from_canonical((ZERO, ONE), (ZERO, ONE))

    @property
    def points(self) -> list[Point]:
        return list(zip(self.xs, self.ys))

    @property
    def n_breaks(self) -> int:
        return len(self.xs) - 2

    def is_identity(self) -> bool:
        return len(self.xs) == 2

    def _slopes(self) -> tuple:
        if self._sl is None:
            xs, ys = self.xs, self.ys
            self._sl = tuple((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1))
        return self._sl

    def slopes(self) -> list[Fraction]:
        return list(self._slopes())

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __mul__(self, other: "PLHomeo") -> "PLHomeo":
        return compose(self, other)

    def __invert__(self) -> "PLHomeo":
        return invert(self)

    def __pow__(self, n: int) -> "PLHomeo":
        return power(self, n)

    def __eq__(self, other):
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.xs, self.ys))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({x}, {y})" for x, y in zip(self.xs, self.ys))
        return f"PLHomeo([{body}])"

    # serialisation

    def to_dict(self) -> dict:
        return {"breakpoints": [[str(x), str(y)] for x, y in zip(self.xs, self.ys)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "PLHomeo":
        if not isinstance(data, dict) or "breakpoints" not in data:
            raise PLError("expected an object with a 'breakpoints' list", "E_FORMAT")
        raw = data["breakpoints"]
        if not isinstance(raw, list):
            raise PLError("'breakpoints' must be a list", "E_FORMAT")
        pts = []
        for i, item in enumerate(raw):
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise PLError(f"breakpoint {i}: expected a pair of rationals", "E_FORMAT")
            try:
                pts.append((Q(str(item[0])), Q(str(item[1]))))
            except ValueError as exc:
                raise PLError(f"breakpoint {i}: {exc}", "E_FORMAT") from None
        return cls(pts, strict=True)

    @classmethod
    def from_json(cls, text: str) -> "PLHomeo":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PLError(f"malformed JSON: {exc}", "E_JSON") from None
        return cls.from_dict(data)


IDENTITY = PLHomeo.identity()


def _interp(xs, ys, x: Fraction, i: int) -> Fraction:
    x0, x1 = xs[i], xs[i + 1]
    if x == x0:
        return ys[i]
    if x == x1:
        return ys[i + 1]
    return ys[i] + (x - x0) * (ys[i + 1] - ys[i]) / (x1 - x0)


def evaluate(f: PLHomeo, x: RationalLike) -> Fraction:
    x = Q(x)
    if not 0 <= x <= 1:
        raise PLError(f"evaluation point {x} outside [0, 1]", "E_RANGE")
    i = min(bisect_right(f.xs, x) - 1, len(f.xs) - 2)
    return _interp(f.xs, f.ys, x, i)


def evaluate_inverse(f: PLHomeo, y: RationalLike) -> Fraction:
    y = Q(y)
    if not 0 <= y <= 1:
        raise PLError(f"evaluation point {y} outside [0, 1]", "E_RANGE")
    i = min(bisect_right(f.ys, y) - 1, len(f.ys) - 2)
    return _interp(f.ys, f.xs, y, i)


def _eval_sorted(xs, ys, ts):
    out = []
    i = 0
    last = len(xs) - 2
    for t in ts:
        while i < last and xs[i + 1] < t:
            i += 1
        out.append(_interp(xs, ys, t, i))
    return out


def compose(f: PLHomeo, g: PLHomeo) -> PLHomeo:
    """Return ``f o g``."""
    if g.is_identity():
        return f
    if f.is_identity():
        return g
    # walk the pieces of g (by image) and f (by domain) together; a vertex of
    # f o g is kept only where the product slope changes
    gx, gy, sg = g.xs, g.ys, g._slopes()
    fx, fy, sf = f.xs, f.ys, f._slopes()
    out_x, out_y = [ZERO], [ZERO]
    i = j = 0
    prev = sf[0] * sg[0]
    while True:
        t = gy[i + 1] if gy[i + 1] < fx[j + 1] else fx[j + 1]
        if t == ONE:
            break
        if gy[i + 1] == t:
            i += 1
        if fx[j + 1] == t:
            j += 1
        s = sf[j] * sg[i]
        if s != prev:
            out_x.append(gx[i] if gy[i] == t else gx[i] + (t - gy[i]) / sg[i])
            out_y.append(fy[j] if fx[j] == t else fy[j] + (t - fx[j]) * sf[j])
            prev = s
    out_x.append(ONE)
    out_y.append(ONE)
    obj = PLHomeo.__new__(PLHomeo)
    obj.xs, obj.ys, obj._hash, obj._sl = tuple(out_x), tuple(out_y), None, None
    return obj


def invert(f: PLHomeo) -> PLHomeo:
    out = PLHomeo.__new__(PLHomeo)
    out.xs, out.ys, out._hash = f.ys, f.xs, None
    out._sl = None if f._sl is None else tuple(1 / v for v in f._sl)
    return out


def power(f: PLHomeo, n: int) -> PLHomeo:
    if n < 0:
        f, n = invert(f), -n
    result = IDENTITY
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def compose_all(*elements: PLHomeo) -> PLHomeo:
    """Left-to-right product ``e0 o e1 o ... o ek``."""
    result = IDENTITY
    for e in elements:
        result = compose(result, e)
    return result


def conjugate(h: PLHomeo, g: PLHomeo) -> PLHomeo:
    """``h^g = g h g^-1``."""
    return compose(compose(g, h), invert(g))


def commutator(g: PLHomeo, f: PLHomeo) -> PLHomeo:
    """``[g, f] = g f g^-1 f^-1``."""
    return compose(compose(g, f), compose(invert(g), invert(f)))


def s_left(f: PLHomeo) -> Fraction:
    """Largest ``s`` with ``f`` the identity on ``[0, s]``."""
    if f.is_identity():
        return ONE
    if f.ys[1] == f.xs[1]:
        return f.xs[1]
    return ZERO


def s_right(f: PLHomeo) -> Fraction:
    """Smallest ``s`` with ``f`` the identity on ``[s, 1]``."""
    if f.is_identity():
        return ZERO
    if f.ys[-2] == f.xs[-2]:
        return f.xs[-2]
    return ONE


def support_within(f: PLHomeo, interval: Interval) -> bool:
    return s_left(f) >= interval.lo and s_right(f) <= interval.hi


def moves_up(f: PLHomeo) -> bool:
    """True iff ``f(x) > x`` for every ``x`` in (0, 1)."""
    if f.is_identity():
        return False
    s = f.slopes()
    if not (s[0] > 1 and s[-1] < 1):
        return False
    return all(y > x for x, y in zip(f.xs[1:-1], f.ys[1:-1]))


class EndZones(NamedTuple):
    left: Interval
    right: Interval
    slope0: Fraction
    slope1: Fraction


def end_zones(f: PLHomeo) -> EndZones:
    """Maximal end intervals on which ``f`` is linear, with the slopes there."""
    xs, ys = f.xs, f.ys
    return EndZones(
        Interval(ZERO, xs[1]),
        Interval(xs[-2], ONE),
        ys[1] / xs[1],
        (ONE - ys[-2]) / (ONE - xs[-2]),
    )


def affine(interval: Interval) -> AffineMap:
    """The orientation-preserving affine bijection ``[0, 1] -> interval``."""
    return AffineMap(UNIT, interval)


def embed(f: PLHomeo, interval: Interval) -> PLHomeo:
    """``phi f phi^-1`` on ``interval``, extended by the identity elsewhere."""
    lo, w = interval.lo, interval.length
    pts = [(ZERO, ZERO)] if lo > 0 else []
    pts += [(lo + x * w, lo + y * w) for x, y in zip(f.xs, f.ys)]
    if interval.hi < 1:
        pts.append((ONE, ONE))
    return PLHomeo._from_canonical([p[0] for p in pts], [p[1] for p in pts])


def transport(g: PLHomeo, source: Interval, target: Interval) -> PLHomeo:
    """``phi_target^-1 o g o phi_source`` as an element of P; needs ``g(source) = target``."""
    if evaluate(g, source.lo) != target.lo or evaluate(g, source.hi) != target.hi:
        raise PLError(
            f"map does not carry {source} onto {target} "
            f"(image is [{evaluate(g, source.lo)}, {evaluate(g, source.hi)}])",
            "E_TRANSPORT",
        )
    lo, w = source.lo, source.length
    inner = [x for x in g.xs if lo < x < source.hi]
    ts = [ZERO] + [(x - lo) / w for x in inner] + [ONE]
    ys = [target.lo] + [evaluate(g, x) for x in inner] + [target.hi]
    ys = [(y - target.lo) / target.length for y in ys]
    return PLHomeo._from_canonical(ts, ys)


def extract(g: PLHomeo, interval: Interval) -> PLHomeo:
    """Rescale ``g`` restricted to an invariant interval back to [0, 1]."""
    return transport(g, interval, interval)


def image(g: PLHomeo, interval: Interval) -> Interval:
    return Interval(evaluate(g, interval.lo), evaluate(g, interval.hi))


# fragments: partial PL bijections between subintervals, spliced into elements


Fragment = tuple[Point, ...]


def linear_fragment(source: Interval, target: Interval) -> Fragment:
    return ((source.lo, target.lo), (source.hi, target.hi))


def splice(*fragments: Fragment) -> PLHomeo:
    """Glue consecutive fragments covering [0, 1] into one element."""
    pts: list[Point] = []
    for frag in fragments:
        if pts:
            if frag[0] != pts[-1]:
                raise PLError(f"fragments do not meet: {pts[-1]} then {frag[0]}", "E_SPLICE")
            pts.extend(frag[1:])
        else:
            pts.extend(frag)
    return PLHomeo(pts)


def restrict_fragment(g: PLHomeo, source: Interval) -> Fragment:
    inner = [(x, y) for x, y in zip(g.xs, g.ys) if source.lo < x < source.hi]
    return ((source.lo, evaluate(g, source.lo)), *inner, (source.hi, evaluate(g, source.hi)))


def orbit_transport(g: PLHomeo, source: Interval, steps: int) -> tuple[PLHomeo, Interval]:
    """Rescaled ``g^steps`` on ``source`` and the image interval, one step at a time.

    Equivalent to ``transport(power(g, steps), source, image)`` but only
    tracks the breakpoints the orbit of ``source`` actually meets.
    """
    if steps < 0:
        g, steps = invert(g), -steps
    ts = [ZERO, ONE]
    ys = [source.lo, source.hi]
    for _ in range(steps):
        lo, hi = ys[0], ys[-1]
        inner = [x for x in g.xs if lo < x < hi]
        if inner:
            new_t = _eval_sorted(ys, ts, inner)
            merged = sorted(set(ts).union(new_t))
            ys = _eval_sorted(ts, ys, merged)
            ts = merged
        ys = _eval_sorted(g.xs, g.ys, ys)
    target = Interval(ys[0], ys[-1])
    w = target.length
    return PLHomeo._from_canonical(ts, [(y - target.lo) / w for y in ys]), target

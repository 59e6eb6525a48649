"""Seeded property suites over the group machinery.

Every case draws from its own ``random.Random`` keyed by
``(seed, suite, property, case index)``, so a suite's outcome does not
depend on execution order and any single case can be replayed.  A failing
case is shrunk greedily and reported with its serialised inputs.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import pagroup as pa
from . import pgroup as pg
from . import thompson as th
from .exactnum import log_exact, xi_decompose
from .plmap import (
    IDENTITY,
    Interval,
    PLError,
    PLHomeo,
    commutator,
    compose,
    conjugate,
    embed,
    end_zones,
    evaluate,
    invert,
)
from .randgen import (
    DEFAULT,
    RandomConfig,
    random_element,
    random_F,
    random_F11,
    random_P,
    random_P11,
    random_Pa,
    random_Pa11,
    random_rational,
    random_supported,
)

BASES = (Fraction(2), Fraction(3, 2), Fraction(5, 3))
MODES = [("F", None), *(("Pa", a) for a in BASES), ("P", None)]
X0 = PLHomeo([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])


@dataclass
class Env:
    """What a check may depend on besides its inputs; ``conj`` is swappable for mutation tests."""

    conj: Callable = conjugate
    cfg: RandomConfig = DEFAULT


@dataclass
class Property:
    name: str
    gen: Callable  # (rng, case_index) -> tuple of inputs
    check: Callable  # (env, *inputs) -> bool
    cases: Optional[int] = None  # fixed sweep size, else the suite's case count


@dataclass
class PropertyReport:
    name: str
    cases: int
    failures: int
    counterexample: Optional[list] = None
    error: Optional[str] = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    properties: list[PropertyReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> int:
        return sum(p.failures for p in self.properties)

    @property
    def cases_run(self) -> int:
        return sum(p.cases for p in self.properties)

    @property
    def counterexample(self) -> Optional[dict]:
        for p in self.properties:
            if p.counterexample is not None:
                return {"property": p.name, "inputs": p.counterexample, "error": p.error}
        return None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "properties": [asdict(p) for p in self.properties],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  seed={self.seed}  cases={self.cases}  elapsed={self.elapsed:.2f}s"]
        for p in self.properties:
            status = "PASS" if p.failures == 0 else "FAIL"
            lines.append(f"  {status}  {p.name:<44} {p.cases - p.failures}/{p.cases}")
            if p.counterexample is not None:
                lines.append(f"        counterexample: {json.dumps(p.counterexample)}")
                if p.error:
                    lines.append(f"        error: {p.error}")
        lines.append(f"  total failures: {self.failures}")
        return "\n".join(lines)


def serialise(value):
    if isinstance(value, PLHomeo):
        return value.to_dict()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Interval):
        return [str(value.lo), str(value.hi)]
    if isinstance(value, (list, tuple)):
        return [serialise(v) for v in value]
    return value


def case_rng(seed: int, suite: str, prop: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{prop}:{index}")


# shrinking


def _fails(check, env, inputs) -> bool:
    try:
        return not check(env, *inputs)
    except PLError as exc:
        # inputs that leave the property's domain do not count as failures
        return exc.code not in ("E_PRECONDITION", "E_ENDPOINT", "E_MONOTONE", "E_INTERVAL")
    except Exception:
        return True


def _candidates(f: PLHomeo):
    pts = f.points
    for i in range(1, len(pts) - 1):
        try:
            yield PLHomeo(pts[:i] + pts[i + 1 :])
        except PLError:
            pass
    for bound in (2, 4, 8, 16, 64, 256):
        simpler = [(x.limit_denominator(bound), y.limit_denominator(bound)) for x, y in pts]
        try:
            cand = PLHomeo(simpler)
        except PLError:
            continue
        if cand != f:
            yield cand


def _size(inputs) -> tuple:
    breaks = sum(v.n_breaks for v in inputs if isinstance(v, PLHomeo))
    dens = sum(max(c.denominator for c in v.xs + v.ys) for v in inputs if isinstance(v, PLHomeo))
    return breaks, dens


def shrink(inputs: tuple, still_fails: Callable[[tuple], bool], max_rounds: int = 200) -> tuple:
    """Greedily drop breakpoints and coarsen coordinates while the failure persists.

    Only candidates strictly smaller in (breakpoints, denominators) are
    accepted, so the loop terminates and a fixpoint is returned unchanged.
    """
    current = tuple(inputs)
    for _ in range(max_rounds):
        improved = False
        for pos, value in enumerate(current):
            if not isinstance(value, PLHomeo):
                continue
            for cand in _candidates(value):
                trial = current[:pos] + (cand,) + current[pos + 1 :]
                if _size(trial) < _size(current) and still_fails(trial):
                    current, improved = trial, True
                    break
            if improved:
                break
        if not improved:
            return current
    return current


# properties


def _gen_mode_triple(mode, a):
    def gen(rng, i):
        return tuple(random_element(rng, mode, a) for _ in range(3)) + (random_rational(rng, Fraction(0), Fraction(1), 97),)

    return gen


def _axioms(env, f, g, h, x):
    assoc = compose(compose(f, g), h) == compose(f, compose(g, h))
    ident = compose(f, IDENTITY) == f == compose(IDENTITY, f)
    inverse = compose(f, invert(f)) == IDENTITY == compose(invert(f), f)
    evals = evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x))
    canon = PLHomeo(compose(f, g).points) == compose(f, g)
    return assoc and ident and inverse and evals and canon


def _closed(mode, a):
    kind = th.GroupKind(mode, a) if mode == "Pa" else th.GroupKind(mode)

    def check(env, f, g, h, x):
        return _axioms(env, f, g, h, x) and th.member(kind, compose(f, g)) and th.member(kind, invert(h))

    return check


def _mode_label(mode, a):
    return f"Pa({a})" if mode == "Pa" else mode


def suite_group_axioms() -> list[Property]:
    return [Property(f"axioms[{_mode_label(m, a)}]", _gen_mode_triple(m, a), _closed(m, a)) for m, a in MODES]


def suite_commutator() -> list[Property]:
    def check(env, g, f, *_):
        z = end_zones(commutator(g, f))
        return z.slope0 == 1 and z.slope1 == 1

    return [Property(f"commutator_end_slopes[{_mode_label(m, a)}]", _gen_mode_triple(m, a), check) for m, a in MODES]


def suite_alpha() -> list[Property]:
    def gen_F(rng, i):
        return random_F(rng), random_F(rng)

    def check_F(env, f, g):
        af, ag, afg = th.alpha(f), th.alpha(g), th.alpha(compose(f, g))
        return afg == (af[0] + ag[0], af[1] + ag[1]) and th.alpha(env.conj(f, g)) == af

    props = [Property("alpha_hom_class[F]", gen_F, check_F)]
    for a in BASES:

        def gen(rng, i, a=a):
            return random_Pa(rng, a), random_Pa(rng, a)

        def check(env, f, g, a=a):
            af, ag, afg = pa.alpha_a(a, f), pa.alpha_a(a, g), pa.alpha_a(a, compose(f, g))
            return afg == (af[0] + ag[0], af[1] + ag[1]) and pa.alpha_a(a, env.conj(f, g)) == af

        props.append(Property(f"alpha_hom_class[Pa({a})]", gen, check))
    return props


def suite_beta() -> list[Property]:
    def gen_k(rng, i):
        return (2 * (i % 100) + 1,)

    def check_k(env, k):
        g = th.realize_beta(k)
        return th.is_F11(g) and th.beta(g) == k

    def gen_pair(rng, i):
        return random_F11(rng), random_F(rng)

    def check_class(env, g, f):
        return th.beta(env.conj(g, f)) == th.beta(g) and th.beta_conjugation_witness(g, f, env.conj)

    def check_starts(env, g, f):
        k, _, land = th.beta_orbit(g)
        i = land.start.denominator.bit_length() - 1
        return th.beta(g, i + 1) == k and th.beta(g, i + 2) == k

    return [
        Property("beta_realize_roundtrip(k<=199)", gen_k, check_k, cases=100),
        Property("beta_class_invariance", gen_pair, check_class),
        Property("beta_start_point_independence", gen_pair, check_starts),
    ]


def suite_gamma() -> list[Property]:
    def gen_pair(rng, i):
        return random_F11(rng, 1), random_F(rng)

    def check_levels(env, g, f):
        n = th.zone_level(g)
        values = [th.gamma(g, n + d) for d in range(4)]
        return all(v == values[0] for v in values) and th.member(th.GroupKind.F(), values[0])

    def check_class(env, g, f):
        return th.gamma(env.conj(g, f)) == th.gamma(g) and th.gamma_conjugation_witness(g, f, env.conj)

    def gen_target(rng, i):
        return (random_F(rng),)

    def check_realize(env, t):
        return th.gamma(th.realize_gamma(t)) == t

    return [
        Property("gamma_level_independence", gen_pair, check_levels),
        Property("gamma_class_invariance", gen_pair, check_class),
        Property("gamma_realize_roundtrip", gen_target, check_realize),
    ]


def _conjugated_gstar(env, f):
    return env.conj(pg.G_STAR, f)


def suite_word_F() -> list[Property]:
    def gen(rng, i):
        if i == 0:
            return embed(X0, th.monitor_intervals(2)[0]), pg.G_STAR, IDENTITY
        conj_by = random_F(rng)
        h0 = conjugate(pg.G_STAR, conj_by)
        n = th.zone_level(h0)
        return random_supported(rng, th.monitor_intervals(n)[0], "F"), pg.G_STAR, conj_by

    def check(env, hatf, g, conj_by):
        h0 = conjugate(g, conj_by)
        n = th.zone_level(h0)
        return th.word_identity_F(hatf, h0, n).check

    return [Property("word_identity_F", gen, check)]


def suite_pa() -> list[Property]:
    props = []
    for a in BASES:

        def gen_intervals(rng, i, a=a):
            p, q = sorted(random_rational(rng, Fraction(0), Fraction(1), 64) for _ in range(2))
            r, s = sorted(random_rational(rng, Fraction(0), Fraction(1), 64) for _ in range(2))
            if p == q:
                q = (q + 1) / 2
            if r == s:
                s = (s + 1) / 2
            return Interval(p, q), Interval(r, s)

        def check_connect(env, I, J, a=a):
            frag = pa.pa_connect(a, I, J)
            ends = frag[0] == (I.lo, J.lo) and frag[-1] == (I.hi, J.hi)
            slopes = [(frag[k + 1][1] - frag[k][1]) / (frag[k + 1][0] - frag[k][0]) for k in range(len(frag) - 1)]
            return ends and all(s > 0 and log_exact(a, s) is not None for s in slopes)

        def gen_pair(rng, i, a=a):
            return random_Pa11(rng, a), random_Pa(rng, a)

        def check_beta(env, g, f, a=a):
            xi = pa.beta_a(a, g)
            return (
                1 / a < xi <= 1
                and pa.beta_a(a, env.conj(g, f)) == xi
                and th.beta_conjugation_witness(g, f, env.conj, a)
            )

        def gen_pair1(rng, i, a=a):
            return random_Pa11(rng, a, 1), random_Pa(rng, a)

        def check_gamma(env, g, f, a=a):
            n = th.zone_level(g, a)
            v = pa.gamma_a(a, g)
            levels = all(pa.gamma_a(a, g, n + d) == v for d in range(1, 4))
            return (
                levels
                and pa.gamma_a(a, env.conj(g, f)) == v
                and th.gamma_conjugation_witness(g, f, env.conj, a)
            )

        def gen_grid(rng, i, a=a):
            lo = 1 / a
            return (lo + (1 - lo) * Fraction(i % 20 + 1, 20),)

        def check_grid(env, xi, a=a):
            return pa.beta_a(a, pa.realize_beta_a(a, xi)) == xi

        def gen_target(rng, i, a=a):
            return (random_Pa(rng, a),)

        def check_realize(env, t, a=a):
            return pa.gamma_a(a, pa.realize_gamma_a(a, t)) == t

        props += [
            Property(f"pa_connect_slopes[{a}]", gen_intervals, check_connect),
            Property(f"beta_a_range_class[{a}]", gen_pair, check_beta),
            Property(f"gamma_a_levels_class[{a}]", gen_pair1, check_gamma),
            Property(f"beta_a_realize_grid[{a}]", gen_grid, check_grid, cases=20),
            Property(f"gamma_a_realize_roundtrip[{a}]", gen_target, check_realize),
        ]

    def gen_coherence(rng, i):
        return (random_F11(rng),)

    def check_coherence(env, g):
        return pa.beta_a(2, g) == xi_decompose(2, Fraction(th.beta(g)) / 2 ** th.beta(g).bit_length())[0]

    props.append(Property("beta_a_vs_beta[2]", gen_coherence, check_coherence))
    return props


def _gen_p11_basepoint(rng, i):
    g = random_P11(rng)
    return g, end_zones(g).left.hi / rng.choice([2, 3, 4, 6])


def suite_pgroup() -> list[Property]:
    def check_shape(env, g, a):
        d = pg.monitored_info(g, a)
        x_n, x_n1 = d.pair.J.lo, d.pair.J.hi
        return 1 - x_n == 2 * (1 - x_n1) and d.pair.J.lo >= end_zones(g).right.lo

    def gen_golden(rng, i):
        return (pg.G_STAR, pg.G_STAR_BASEPOINT)

    def check_golden(env, g, a):
        d = pg.monitored_info(g, a)
        return d.info == IDENTITY and d.pair.N == 3 and d.pair.J == Interval(Fraction(1, 2), Fraction(3, 4))

    def check_shift(env, g, a):
        d = pg.monitored_info(g, a)
        same = all(pg.shift_pair(g, d, k).info == d.info for k in (1, 2, 3))
        return same and pg.monitored_info(g, evaluate(invert(g), a)).info == d.info

    def gen_target(rng, i):
        return (random_P(rng),)

    def check_realize(env, f):
        g, c = pg.realize_info(f)
        return pg.is_P11(g) and pg.monitored_info(g, c).info == f

    def gen_conj(rng, i):
        g, a = _gen_p11_basepoint(rng, i)
        return g, random_P(rng), a

    def check_conj(env, g, g1, a):
        return pg.info_conjugation_check(g, g1, a, env.conj).holds

    def gen_transitivity(rng, i):
        xi = random_rational(rng, Fraction(1, 2), Fraction(1), 64)
        return (pg.realize_end_slopes(xi, 1), xi, rng.randint(2, 4), rng.randint(1, 3))

    def check_transitivity(env, h1, xi, n, extra):
        m = max(n, th._ceil_log(Fraction(2), end_zones(h1).left.hi)) + extra
        return pg.transitivity_point(pg.G_STAR, h1, n, m) == xi / 2**n

    return [
        Property("monitor_shape_law", _gen_p11_basepoint, check_shape),
        Property("monitored_info_golden(g*,1/16)", gen_golden, check_golden, cases=1),
        Property("monitor_shift_invariance", _gen_p11_basepoint, check_shift),
        Property("realize_info_roundtrip", gen_target, check_realize),
        Property("info_conjugation_invariance", gen_conj, check_conj),
        Property("transitivity_point", gen_transitivity, check_transitivity),
    ]


def _gen_word_P(rng, i):
    if i == 0:
        return embed(X0, Interval(Fraction(1, 16), Fraction(1, 8))), IDENTITY, pg.G_STAR, pg.G_STAR_BASEPOINT
    conj_by = random_P(rng)
    start = pg.monitored_info(pg.G_STAR, pg.G_STAR_BASEPOINT)
    depth = pg.conjugation_shift(pg.G_STAR, conj_by, start)
    a = evaluate(conj_by, start.pair.a / 2**depth)
    hatf = random_supported(rng, Interval(a, 2 * a), "P")
    base, c = _gen_p11_basepoint(rng, i)
    return hatf, conj_by, base, c


def _word_P_check(mode):
    def check(env, hatf, conj_by, base, c):
        start = pg.monitored_info(pg.G_STAR, pg.G_STAR_BASEPOINT)
        depth = pg.conjugation_shift(pg.G_STAR, conj_by, start)
        a = evaluate(conj_by, start.pair.a / 2**depth)
        h0 = conjugate(pg.G_STAR, conj_by)
        res = pg.word_identity_P(hatf, h0, a, (base, c), mode=mode)
        return res.check and all(res.edges.values()) and res.letters_in_PQ

    return check


def suite_word_P() -> list[Property]:
    return [Property("word_identity_P", _gen_word_P, _word_P_check("P"))]


def suite_pq() -> list[Property]:
    def gen_target(rng, i):
        return (random_P(rng),)

    def check_realize(env, f):
        g, c = pg.realize_info(f)
        return pg.member_PQ(g) and pg.member_PQ(f) and pg.monitored_info(g, c).info == f

    return [
        Property("pq_word_identity_letters", _gen_word_P, _word_P_check("PQ")),
        Property("pq_realize_info_membership", gen_target, check_realize),
    ]


SUITES: dict[str, Callable[[], list[Property]]] = {
    "group_axioms": suite_group_axioms,
    "alpha": suite_alpha,
    "beta": suite_beta,
    "gamma": suite_gamma,
    "word_F": suite_word_F,
    "pa": suite_pa,
    "pgroup": suite_pgroup,
    "word_P": suite_word_P,
    "pq": suite_pq,
    "commutator": suite_commutator,
}


def run_property(prop: Property, suite: str, seed: int, cases: int, env: Env, do_shrink: bool = True) -> PropertyReport:
    n = prop.cases if prop.cases is not None else cases
    failures = 0
    first = None
    error = None
    for i in range(n):
        rng = case_rng(seed, suite, prop.name, i)
        try:
            inputs = prop.gen(rng, i)
        except Exception as exc:  # generator bugs are failures too
            failures += 1
            if first is None:
                first, error = [], f"generator: {type(exc).__name__}: {exc}"
            continue
        try:
            ok = bool(prop.check(env, *inputs))
            msg = None
        except Exception as exc:
            ok, msg = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            failures += 1
            if first is None:
                if do_shrink:
                    inputs = shrink(inputs, lambda t: _fails(prop.check, env, t))
                first, error = serialise(inputs), msg
    return PropertyReport(prop.name, n, failures, first, error)


def run_suite(name: str, seed: int = 42, cases: int = 100, conj: Callable = conjugate, do_shrink: bool = True) -> SuiteReport:
    """Run one named suite (or ``all``) and collect a deterministic report."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    names = list(SUITES) if name == "all" else [name]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)} or all")
    env = Env(conj=conj)
    report = SuiteReport(name, seed, cases)
    t0 = time.perf_counter()
    for suite in names:
        for prop in SUITES[suite]():
            label = prop.name if name != "all" else f"{suite}/{prop.name}"
            r = run_property(prop, suite, seed, cases, env, do_shrink)
            r.name = label
            report.properties.append(r)
    report.elapsed = time.perf_counter() - t0
    return report


def reversed_conjugate(h: PLHomeo, g: PLHomeo) -> PLHomeo:
    """``g^-1 h g``: the other conjugation convention, used as a mutant."""
    return compose(compose(invert(g), h), g)

"""Survey the invariants on random elements.

Prints how beta distributes over random F_{1,-1} elements, how the gamma
realiser grows breakpoints, and how long the word identities get.  Writes
a CSV per experiment under results/.
"""

import argparse
import collections
import csv
import pathlib
import random
import time
from fractions import Fraction

from plgroup import pgroup as pg
from plgroup import thompson as th
from plgroup.plmap import Interval, conjugate
from plgroup.randgen import random_F, random_F11, random_supported


def beta_histogram(rng, n):
    counts = collections.Counter()
    for _ in range(n):
        g = conjugate(random_F11(rng), random_F(rng))
        counts[th.beta(g)] += 1
    return sorted(counts.items())


def gamma_growth(rng, n):
    rows = []
    for _ in range(n):
        t = random_F(rng)
        t0 = time.perf_counter()
        g = th.realize_gamma(t)
        rows.append((t.n_breaks, g.n_breaks, th.gamma(g) == t, time.perf_counter() - t0))
    return rows


def word_lengths(rng, n):
    rows = []
    h0 = pg.G_STAR
    I0 = Interval(Fraction(1, 16), Fraction(1, 8))
    for _ in range(n):
        hatf = random_supported(rng, I0, "P")
        res = pg.word_identity_P(hatf, h0, pg.G_STAR_BASEPOINT)
        length = sum(abs(e) for _, e in res.word)
        rows.append((hatf.n_breaks, length, res.value.n_breaks, res.check))
    f_rows = []
    for _ in range(n):
        hatf = random_supported(rng, th.monitor_intervals(2)[0], "F")
        res = th.word_identity_F(hatf, pg.G_STAR)
        f_rows.append((hatf.n_breaks, sum(abs(e) for _, e in res.word), res.value.n_breaks, res.check))
    return rows, f_rows


def write(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)

    hist = beta_histogram(rng, args.n)
    write(out / "beta_histogram.csv", ["beta", "count"], hist)
    print("beta over conjugated random F_{1,-1} elements:", dict(hist))

    growth = gamma_growth(rng, args.n)
    write(out / "gamma_growth.csv", ["target_breaks", "realised_breaks", "roundtrip", "seconds"], growth)
    print(f"gamma realiser: mean breaks {sum(r[1] for r in growth) / len(growth):.1f}, "
          f"all round-trips exact: {all(r[2] for r in growth)}")

    p_rows, f_rows = word_lengths(rng, args.n // 4)
    write(out / "word_lengths_P.csv", ["hatf_breaks", "word_length", "value_breaks", "check"], p_rows)
    write(out / "word_lengths_F.csv", ["hatf_breaks", "word_length", "value_breaks", "check"], f_rows)
    print(f"word identities: P all exact {all(r[3] for r in p_rows)}, F all exact {all(r[3] for r in f_rows)}")


if __name__ == "__main__":
    main()

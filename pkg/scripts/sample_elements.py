"""Sample a few named elements to CSV for plotting elsewhere.

Writes x0, g*, realize_beta(k) for small k, and the gamma realiser of x0.
"""

import argparse
import io
import pathlib
from contextlib import redirect_stdout
from fractions import Fraction

from plgroup import thompson as th
from plgroup.cli import main as cli_main
from plgroup.pgroup import G_STAR
from plgroup.plmap import PLHomeo

X0 = PLHomeo([(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=257)
    ap.add_argument("--out", default="results/samples")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    named = {"x0": X0, "g_star": G_STAR, "gamma_realiser_x0": th.realize_gamma(X0)}
    named.update({f"beta_{k}": th.realize_beta(k) for k in (1, 3, 5, 7)})
    for name, f in named.items():
        src = out / f"{name}.json"
        src.write_text(f.to_json())
        with redirect_stdout(io.StringIO()):
            code = cli_main(["sample", str(src), "--points", str(args.points), "--csv", str(out / f"{name}.csv")])
        print(f"{name:<20} {f.n_breaks:>3} breaks  exit {code}")


if __name__ == "__main__":
    main()

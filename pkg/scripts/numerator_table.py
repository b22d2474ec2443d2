"""Print the numerators P_n and the first ideal counts as a LaTeX table.

    python scripts/numerator_table.py --n-max 4 --terms 8 [--q 3]
"""
import argparse

from quadzeta.base import CaseKind
from quadzeta.engine import closed_form, dirichlet_coeffs
from quadzeta.polyseries import render_xpoly, specialize_q


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--terms", type=int, default=8)
    ap.add_argument("--q", type=int, default=None)
    args = ap.parse_args()

    print(r"\begin{tabular}{llll}")
    print(r"case & $n$ & $P_n(X)$ & $a_0, a_1, \dots$ \\ \hline")
    for kind in CaseKind:
        for n in range(args.n_max + 1):
            P = render_xpoly(closed_form(kind, n).P, "latex")
            s = dirichlet_coeffs(kind, n, args.terms)
            counts = specialize_q(s, args.q) if args.q else [str(c) for c in s]
            print(f"{kind.value} & {n} & ${P}$ & ${', '.join(map(str, counts))}$ \\\\")
    print(r"\end{tabular}")


if __name__ == "__main__":
    main()

"""Measured gaps of Q against the main lower bound over random base graphs.

    python3 scripts/random_instances.py --count 20 --n 12 --t 3 --s 4 --H 2 --k 1
"""

import argparse

from hdxlab import closed_forms as cf
from hdxlab import graph as gr
from hdxlab import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--s", type=int, default=4)
    ap.add_argument("--H", type=int, default=2)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("seed,states,gap2_g,two_sided_gap_q,lower_bound,ratio")
    for seed in range(args.seed, args.seed + args.count):
        g = gr.random_regular_triangle_free(args.n, args.t, seed, connected=True)
        b = vf.Build(vf.Instance(f"seed{seed}", g, args.s, args.H, args.k, links=False))
        gap2 = b.g_spec.two_sided_gap
        got = b.q.two_sided_gap
        lower = cf.main_theorem_rhs(b.p, gap2)
        print(f"{seed},{b.q.n},{gap2:.6g},{got:.6g},{lower:.6g},{got / lower:.4g}")


if __name__ == "__main__":
    main()

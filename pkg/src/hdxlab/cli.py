"""Command-line front end.

    hdxlab gen-graph --n 20 --t 3 --seed 7 --out run/
    hdxlab verify --gen 20,3,7 --s 5 --H 3 --k 2 --out run/
    hdxlab mix --eps 0.05 --out run/

Without --graph or --gen the base graph is C_5. Exit codes: 0 all
required checks pass, 2 a required check failed, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import closed_forms as cf
from . import graph as gr
from . import markov as mk
from . import simplicial as sc
from . import verify as vf
from . import walks as wk
from .errors import GenerationError, HdxError, InputError
from .report import BoundReport

EXIT_OK, EXIT_BOUND, EXIT_INPUT = 0, 2, 3

log = logging.getLogger("hdxlab")


def _parse_gen(text: str) -> tuple[int, int, int]:
    try:
        n, t, seed = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,t,seed, got {text!r}")
    return n, t, seed


def _add_instance_args(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph", type=Path, help="base graph JSON file")
    src.add_argument("--gen", type=_parse_gen, metavar="N,T,SEED", help="random triangle-free regular base graph")
    p.add_argument("--s", type=int, default=4, help="vertices of the complete base complex")
    p.add_argument("--H", type=int, default=2, help="dimension of the base complex")
    p.add_argument("--k", type=int, default=1, help="walk level")
    p.add_argument("--tol-spec", type=float, default=1e-9)
    p.add_argument("--tol-balance", type=float, default=1e-12)
    p.add_argument("--eps", type=float, default=0.05)
    p.add_argument("--perturb-wj", type=float, default=0.0, metavar="DELTA",
                   help="add DELTA to w_J in every closed form (negative control)")
    p.add_argument("--no-links", action="store_true", help="skip the exhaustive link iteration")
    p.add_argument("--out", type=Path, help="output directory")


def _graph_from_args(args) -> tuple[gr.WeightedGraph, str]:
    if args.graph is not None:
        return gr.load_graph(args.graph), str(args.graph)
    if args.gen is not None:
        n, t, seed = args.gen
        return gr.random_regular_triangle_free(n, t, seed, connected=True), f"random(n={n},t={t},seed={seed})"
    return gr.cycle_graph(5), "C5"


def instance_from_args(args) -> vf.Instance:
    g, name = _graph_from_args(args)
    return vf.Instance(name, g, args.s, args.H, args.k, tol_spec=args.tol_spec, tol_balance=args.tol_balance,
                       eps=args.eps, w_J_shift=args.perturb_wj, links=not args.no_links)


def _out_dir(args) -> Path | None:
    if args.out is None:
        return None
    args.out.mkdir(parents=True, exist_ok=True)
    return args.out


def _write(out: Path | None, name: str, text: str):
    if out is not None:
        (out / name).write_text(text, encoding="utf-8")
        print(f"wrote {out / name}")


# ---------------------------------------------------------------------------
# commands


def cmd_gen_graph(args) -> int:
    try:
        g = gr.random_regular_triangle_free(args.n, args.t, args.seed, args.max_attempts, connected=True)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    spec = gr.spectrum(g)
    print(f"n={g.n} t={args.t} seed={args.seed} edges={len(g.edges)} girth={gr.girth(g)} "
          f"two_sided_gap={spec.two_sided_gap:.12g}")
    out = _out_dir(args)
    if out is not None:
        gr.save_graph(g, out / "graph.json")
        print(f"wrote {out / 'graph.json'}")
    return EXIT_OK


def cmd_build(args) -> int:
    b = vf.Build(instance_from_args(args))
    print(f"base graph: n={b.inst.graph.n} T={b.T} edges={len(b.dq.edges)}")
    print(f"complex: vertices={b.dq.complex.n} faces per dim={sc.face_vector(b.dq.complex)}")
    print(f"down-up chain on {b.k}-faces: {b.q.n} states; split chain: {b.split.n} states")
    out = _out_dir(args)
    if out is not None:
        sc.save_complex(b.dq.complex, out / "complex.json")
        mk.save_chain(b.q, out / "chain.json")
        mk.save_chain(b.split, out / "split_chain.json")
        print(f"wrote complex.json, chain.json, split_chain.json to {out}")
    return EXIT_OK


def _summary(spec: gr.SpectralSummary) -> dict:
    return {"one_sided_gap": spec.one_sided_gap, "two_sided_gap": spec.two_sided_gap,
            "second": spec.second, "smallest": spec.smallest, "size": len(spec.eigenvalues)}


def cmd_spectrum(args) -> int:
    b = vf.Build(instance_from_args(args))
    doc = {
        "graph": _summary(b.g_spec),
        "skeleton": _summary(gr.spectrum(sc.one_skeleton(b.dq.complex))),
        "down_up": _summary(b.q.spectrum),
        "split": _summary(b.split.spectrum),
        "outer_projection": _summary(b.outer.projection.spectrum),
    }
    for name, d in doc.items():
        print(f"{name:17} size={d['size']:5d} one_sided={d['one_sided_gap']:.12g} two_sided={d['two_sided_gap']:.12g}")
    _write(_out_dir(args), "spectrum.json", json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = vf.verify(instance_from_args(args))
    print(rep.format_table())
    _write(_out_dir(args), "report.json", rep.to_json())
    if not rep.passed:
        print("failing required entries: " + ", ".join(e.id for e in rep.failures), file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


def cmd_mix(args) -> int:
    inst = instance_from_args(args)
    b = vf.Build(inst)
    q = b.q
    gap = q.two_sided_gap
    spectral = mk.mixing_time_bound(q, inst.eps) if gap > 0 else math.inf
    corollary = cf.corollary_mixing_bound(b.p, b.g_spec.two_sided_gap, inst.eps)
    if gap <= 0:
        print("warning: non-positive two-sided gap, no spectral bound", file=sys.stderr)
    if args.start == "pi":
        start = q.pi.copy()
    elif args.start == "min":
        start = int(np.argmin(q.pi))
    else:
        start = int(args.start)
        if not 0 <= start < q.n:
            raise InputError(f"start state {start} outside 0..{q.n - 1}")
    t_max = args.t_max if args.t_max is not None else (int(math.ceil(spectral)) if math.isfinite(spectral) else 100)
    curve = mk.simulate_tv(q, start, t_max, args.trials, args.seed)
    rows = ["t,tv_exact,tv_sampled,l1_exact,spectral_bound,corollary_bound"]
    for i, t in enumerate(curve.t):
        samp = "" if curve.tv_sampled is None else f"{curve.tv_sampled[i]:.12g}"
        rows.append(f"{t},{curve.tv_exact[i]:.12g},{samp},{curve.l1_exact[i]:.12g},{spectral:.12g},{corollary:.12g}")
    text = "\n".join(rows) + "\n"
    hit = curve.first_below(inst.eps, l1=True)
    print(f"states={q.n} two_sided_gap={gap:.12g} spectral_bound={spectral:.6g} corollary_bound={corollary:.6g}")
    print(f"first t with L1 <= {inst.eps}: {hit if hit is not None else 'not reached'}")
    out = _out_dir(args)
    if out is None:
        sys.stdout.write(text)
    else:
        _write(out, "mix.csv", text)
    return EXIT_OK


def cmd_report(args) -> int:
    path = args.report if args.report is not None else (args.out or Path(".")) / "report.json"
    try:
        rep = BoundReport.from_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"cannot read report {path}: {exc}") from exc
    print(json.dumps(rep.meta, sort_keys=True))
    print(rep.format_table())
    return EXIT_OK if rep.passed else EXIT_BOUND


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 3), not bound failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hdxlab", description=__doc__.split("\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen-graph", help="random triangle-free regular graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=10_000)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_gen_graph)

    for name, func, text in (("build", cmd_build, "build the complex and chains"),
                             ("spectrum", cmd_spectrum, "spectral summaries"),
                             ("verify", cmd_verify, "run the verification ledger"),
                             ("mix", cmd_mix, "distance-to-stationarity curve")):
        p = sub.add_parser(name, help=text)
        _add_instance_args(p)
        p.set_defaults(func=func)
        if name == "mix":
            p.add_argument("--t-max", type=int)
            p.add_argument("--trials", type=int, default=0, help="Monte-Carlo walkers (0 = exact only)")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--start", default="min", help="state index, 'min' (argmin pi) or 'pi'")

    p = sub.add_parser("report", help="print a saved report")
    p.add_argument("report", nargs="?", type=Path)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HdxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())

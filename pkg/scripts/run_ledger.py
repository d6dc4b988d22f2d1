"""Write verification reports for the canonical and the random instances.

    python3 scripts/run_ledger.py --out runs/
"""

import argparse
import time
from pathlib import Path

from hdxlab import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--out", type=Path, default=Path("runs"))
    ap.add_argument("--links", action="store_true", help="also iterate links on the random instances")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    instances = [("canonical", vf.canonical_instance())]
    instances += [(f"random_k{k}", vf.random_instance(k, links=args.links)) for k in (1, 2)]
    for tag, inst in instances:
        t0 = time.perf_counter()
        rep = vf.verify(inst)
        path = args.out / f"{tag}.json"
        path.write_text(rep.to_json(), encoding="utf-8")
        informational = [e.id for e in rep.entries if not e.required and not e.passed]
        print(f"{tag}: {sum(e.passed for e in rep.entries if e.required)}/{sum(e.required for e in rep.entries)} "
              f"required pass in {time.perf_counter() - t0:.1f}s -> {path}")
        if rep.failures:
            print("  failing required: " + ", ".join(e.id for e in rep.failures))
        if informational:
            print("  informational mismatches: " + ", ".join(informational))


if __name__ == "__main__":
    main()

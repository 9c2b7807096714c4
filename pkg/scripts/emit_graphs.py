#!/usr/bin/env python3
"""Batch-export gamma graphs as DOT or JSON, one file per prime."""

import argparse
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kirch.graphs import build_gamma, emit_dot, gamma2, graph_json_dict


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("primes", nargs="*", type=int, default=None,
                    help="primes to export (default: 2 3 5 7 11 13 29 31)")
    ap.add_argument("--bounds", default="9,5",
                    help="max exponents 'i,j' for 2^i and p^j (default 9,5)")
    ap.add_argument("--format", choices=("dot", "json"), default="dot")
    ap.add_argument("--out", default="graphs", help="output directory")
    args = ap.parse_args()

    primes = args.primes or [2, 3, 5, 7, 11, 13, 29, 31]
    i, j = (int(s) for s in args.bounds.split(","))
    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    for p in primes:
        g = gamma2(i) if p == 2 else build_gamma(p, (i, j))
        if args.format == "dot":
            path = outdir / f"gamma_{p}.dot"
            path.write_text(emit_dot(g))
        else:
            path = outdir / f"gamma_{p}.json"
            path.write_text(json.dumps(graph_json_dict(g), indent=2) + "\n")
        print(f"{path}  {len(g.vertices)} vertices, {len(g.edges)} edges")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every operation is scriptable: data goes to stdout, diagnostics to
stderr, and the exit status is 0 for success, 1 for a verification
failure, 2 for unusable input. --format json emits one parseable
object per invocation with the same content as the text rendering.
"""

from __future__ import annotations

import argparse
import json
import sys

from .filters import (
    AlphaMap,
    FilterClass,
    FiniteSubset,
    PrimeSet,
    classify,
    descriptor,
    filter_leq,
    order_oracle,
    upset_in_fprime,
    realize,
)
from .graphs import build_gamma, emit_dot, gamma2, graph_json_dict
from .numtheory import classify_prime, fm_exponent
from .topology import Progression, Window, closure
from .verify import SuiteConfig, run_suite

_SUITE_NAMES = (
    "closure", "pair_formula", "order", "top", "classify", "realize",
    "ppix", "gamma", "gamma2", "zsigmondy", "mihailescu", "all",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirch",
        description="progressions, filters and prime-power graphs over the nonzero integers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument(
            "--format", choices=("text", "json", "dot"), default="text",
            help="output rendering (dot applies to gamma only)",
        )
        return p

    p = add("closure", "closure of the progression a + bZ")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--window", type=int, default=50,
                   help="half-width of the sample of members printed")

    p = add("ae", "invariants A, Pi and alpha of a finite set")
    p.add_argument("elements", type=int, nargs="+")

    p = add("cmp", "compare the filters of two sets, given as E ; F")
    p.add_argument("items", nargs="+",
                   help="elements of E, a literal ';', elements of F")
    p.add_argument("--l-bound", type=int, default=30)

    p = add("classify", "place a set's filter in the hierarchy")
    p.add_argument("elements", type=int, nargs="+")

    p = add("realize", "build a set with prescribed invariants")
    p.add_argument("--A", required=True, help="comma-separated primes, e.g. 2,5")
    p.add_argument("--alpha", required=True,
                   help="comma-separated residue choices, e.g. 2=1,5=2")

    p = add("gamma", "emit the prime-power graph (DOT by default)")
    p.add_argument("p", type=int)
    p.add_argument("--bounds", default="9,5",
                   help="exponent bounds i,j (for p=2 only i is used)")

    p = add("prime-class", "Fermat/Mersenne class of a prime")
    p.add_argument("p", type=int)

    p = add("verify", "run a verification suite")
    p.add_argument("suite", choices=_SUITE_NAMES)
    p.add_argument("--window", type=int, default=2000)
    p.add_argument("--bounds", default="9,5")
    p.add_argument("--l-bound", type=int, default=30)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-element", type=int, default=None)
    return parser


def _parse_bounds(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"bounds must be two integers i,j, got {text!r}")
    return int(parts[0]), int(parts[1])


def _emit(ns, payload: dict, text: str) -> None:
    if ns.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_closure(ns) -> int:
    prog = Progression(ns.a, ns.b)
    cs = closure(prog)
    w = Window(ns.window)
    sample = cs.sample(w)
    residues = {p: sorted(cs.residues_mod(p)) for p in cs.modulus_primes}
    lines = [str(cs)]
    for p in sorted(residues):
        lines.append(f"  mod {p}: {{{', '.join(map(str, residues[p]))}}}")
    shown = ", ".join(map(str, sample[:20]))
    more = ", ..." if len(sample) > 20 else ""
    lines.append(f"  members in [-{w.W}, {w.W}]: {shown}{more}")
    payload = {
        "a": prog.a,
        "b": prog.b,
        "primes": sorted(cs.modulus_primes),
        "residues": {str(p): rs for p, rs in residues.items()},
        "window": w.W,
        "sample": sample,
    }
    _emit(ns, payload, "\n".join(lines))
    return 0


def _cmd_ae(ns) -> int:
    d = descriptor(FiniteSubset.of(*ns.elements))
    _emit(ns, d.to_json_dict(), str(d))
    return 0


def _one_direction(E: FiniteSubset, F: FiniteSubset, l_bound: int) -> dict:
    holds = filter_leq(E, F)
    if min(len(E), len(F)) == 1:
        return {"holds": holds, "rule": "singleton containment", "witness": None}
    info = {"holds": holds, "rule": "descriptor comparison", "witness": None}
    if not holds:
        _, witness = order_oracle(E, F, l_bound, Window(10**9))
        if witness is not None:
            info["witness"] = {
                "prime": witness.prime,
                "element": witness.element,
                "reason": witness.reason,
            }
    return info


def _cmd_cmp(ns) -> int:
    items = list(ns.items)
    if ";" not in items:
        raise ValueError("separate the two sets with a literal ';'")
    cut = items.index(";")
    left, right = items[:cut], items[cut + 1:]
    if not left or not right or ";" in right:
        raise ValueError("usage: cmp e1 e2 ... ; f1 f2 ...")
    E = FiniteSubset.of(*[int(t) for t in left])
    F = FiniteSubset.of(*[int(t) for t in right])
    ef = _one_direction(E, F, ns.l_bound)
    fe = _one_direction(F, E, ns.l_bound)
    lines = [f"E={E} F={F}"]
    for tag, info in (("E <= F", ef), ("F <= E", fe)):
        note = f" (rule: {info['rule']})"
        if info["witness"]:
            wt = info["witness"]
            note = (
                f" (rule: {info['rule']}; {wt['reason']} at {wt['prime']};"
                f" escaping element {wt['element']})"
            )
        lines.append(f"{tag}: {str(info['holds']).lower()}{note}")
    payload = {
        "E": list(E.elements),
        "F": list(F.elements),
        "e_leq_f": ef,
        "f_leq_e": fe,
    }
    _emit(ns, payload, "\n".join(lines))
    return 0


def _cmd_classify(ns) -> int:
    E = FiniteSubset.of(*ns.elements)
    cls = classify(E)
    d = descriptor(E)
    payload = {"class": str(cls), "descriptor": d.to_json_dict(), "upset": None}
    lines = [str(cls), f"  {d}"]
    if cls is FilterClass.F_DOUBLE_PRIME:
        up = upset_in_fprime(E)
        payload["upset"] = [u.to_json_dict() for u in up]
        lines.append(f"  upset: {len(up)} descriptors")
        for u in up:
            lines.append(f"    {u}")
    _emit(ns, payload, "\n".join(lines))
    return 0


def _cmd_realize(ns) -> int:
    primes = [int(t) for t in ns.A.split(",") if t]
    entries = {}
    for part in ns.alpha.split(","):
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"alpha entries look like p=r, got {part!r}")
        p, r = part.split("=", 1)
        entries[int(p)] = int(r)
    E = realize(PrimeSet.of(*primes), AlphaMap.of(entries))
    payload = {
        "A": sorted(primes),
        "alpha": {str(p): r for p, r in entries.items()},
        "set": list(E.elements),
    }
    _emit(ns, payload, str(E))
    return 0


def _cmd_gamma(ns) -> int:
    bounds = _parse_bounds(ns.bounds)
    if ns.p == 2:
        g = gamma2(bounds[0])
    else:
        g = build_gamma(ns.p, bounds)
    if ns.format == "json":
        print(json.dumps(graph_json_dict(g), sort_keys=True))
    else:
        print(emit_dot(g), end="")
    return 0


def _cmd_prime_class(ns) -> int:
    cls = classify_prime(ns.p)
    m = fm_exponent(ns.p) if cls.is_fermat_mersenne else None
    text = str(cls) if m is None else f"{cls} (m={m})"
    payload = {
        "p": ns.p,
        "fermat": cls.is_fermat,
        "mersenne": cls.is_mersenne,
        "m": m,
    }
    _emit(ns, payload, text)
    return 0


def _cmd_verify(ns) -> int:
    cfg = SuiteConfig(
        suite=ns.suite,
        window=ns.window,
        max_element=ns.max_element,
        graph_bounds=_parse_bounds(ns.bounds),
        l_bound=ns.l_bound,
        seed=ns.seed,
    )
    report = run_suite(ns.suite, cfg)
    if ns.format == "json":
        print(json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
    else:
        print(report.render_text())
    return 0 if report.passed else 1


_COMMANDS = {
    "closure": _cmd_closure,
    "ae": _cmd_ae,
    "cmp": _cmd_cmp,
    "classify": _cmd_classify,
    "realize": _cmd_realize,
    "gamma": _cmd_gamma,
    "prime-class": _cmd_prime_class,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[ns.command](ns)
    except ValueError as e:
        print(f"kirch {ns.command}: {e}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())

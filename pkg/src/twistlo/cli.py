"""Command-line front end.

Exit status: 0 on success or a passing verification, 1 when a verification
finds violations, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from twistlo import glue
from twistlo.gamma import GammaGroup
from twistlo.twist import TwistKnotGroup
from twistlo.words import UnknownGenerator, WordSyntaxError

LEMMAS = ("meridian", "mu-delta", "interval", "cofinal", "property-s", "klein", "all")

DEFAULTS = {"rmax": 12, "smax": 12, "samples": 200, "glen": 10, "seed": 0}


class UsageError(Exception):
    pass


def _add_common(p, *, n=False, m=False, fmt=("text", "json")):
    if n:
        p.add_argument("--n", type=int, required=True, help="Navas parameter n >= 1")
    if m:
        p.add_argument("--m", type=int, required=True, help="twist parameter m (not 0 or -1)")
    p.add_argument("--format", choices=fmt, default=fmt[0])


def _add_sweep(p, cap=True):
    p.add_argument("--rmax", type=int, default=DEFAULTS["rmax"])
    p.add_argument("--smax", type=int, default=DEFAULTS["smax"])
    p.add_argument("--samples", type=int, default=DEFAULTS["samples"])
    p.add_argument("--glen", type=int, default=DEFAULTS["glen"], help="max random conjugator length")
    p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
    p.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical output)")
    if cap:
        p.add_argument("--max-violations", type=int, default=None, help="cap listed violations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistlo",
        description="Left-orderings of torus-knot and Klein-bottle groups; 4-surgery gluing checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="Navas normal form of a {b,c,d}-word")
    _add_common(p, n=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("sign", help="sign of a word under the Navas ordering")
    _add_common(p, n=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("compare", help="compare two words")
    _add_common(p, n=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("twist-sign", help="sign of an {a,b,c,d}-word under a conjugate ordering")
    _add_common(p, m=True)
    p.add_argument("--word", required=True)
    p.add_argument("--conjugator", default="1")

    p = sub.add_parser("verify", help="run a lemma check")
    _add_common(p, m=False)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--lemma", choices=LEMMAS, default="all")
    _add_sweep(p)
    p.set_defaults(rmax=None)

    p = sub.add_parser("compat", help="compatibility check of the gluing")
    _add_common(p, m=True)
    _add_sweep(p)

    p = sub.add_parser("cone-map", help="CSV table of boundary signs and their images")
    _add_common(p, m=True, fmt=("csv",))
    p.add_argument("--rmax", type=int, default=DEFAULTS["rmax"])
    p.add_argument("--smax", type=int, default=DEFAULTS["smax"])
    p.add_argument("--conjugator", default="1")

    p = sub.add_parser("presentation", help="presentation of the surgered manifold group")
    _add_common(p, m=True)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _twist(m: int) -> TwistKnotGroup:
    try:
        return TwistKnotGroup(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _gamma(n: int) -> GammaGroup:
    try:
        return GammaGroup(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_normalize(args, out) -> int:
    G = _gamma(args.n)
    w = G.word(args.word)
    s = G.syllable_form(w)
    f = G.navas_form(s)
    if args.format == "json":
        out.write(_dump({
            "n": G.n,
            "word": str(w),
            "navas": str(f),
            "ell": f.ell,
            "syllable": {"ell": s.ell, "head": s.head, "tail": list(s.tail)},
        }) + "\n")
    else:
        out.write(f"{f}\n")
    return 0


def cmd_sign(args, out) -> int:
    G = _gamma(args.n)
    sg = G.sign(args.word)
    if args.format == "json":
        out.write(_dump({"n": G.n, "word": str(G.word(args.word)), "sign": sg.symbol}) + "\n")
    else:
        out.write(f"{sg.label}\n")
    return 0


def cmd_compare(args, out) -> int:
    G = _gamma(args.n)
    c = G.compare(args.lhs, args.rhs)
    rel = {-1: ">", 0: "=", 1: "<"}[c]
    if args.format == "json":
        out.write(_dump({"n": G.n, "lhs": args.lhs, "rhs": args.rhs, "relation": rel}) + "\n")
    else:
        out.write(f"{G.word(args.lhs)} {rel} {G.word(args.rhs)}\n")
    return 0


def cmd_twist_sign(args, out) -> int:
    T = _twist(args.m)
    w = T.to_gamma(args.word)
    g = T.to_gamma(args.conjugator)
    sg = T.sign_conj(w, g)
    if args.format == "json":
        out.write(_dump({"m": T.m, "n": T.n, "word": str(w), "conjugator": str(g), "sign": sg.symbol}) + "\n")
    else:
        out.write(f"{sg.label}\n")
    return 0


def _verify_reports(args) -> list[glue.Report]:
    lemma = args.lemma
    if lemma != "klein" and args.m is None:
        raise UsageError(f"--m is required for lemma {lemma!r}")
    reports = []
    timing = args.timing
    if lemma in ("klein", "all"):
        reports.append(glue.verify_klein_normality(args.samples, args.seed, timing=timing))
    if lemma == "klein":
        return reports
    T = _twist(args.m)
    gs = glue.conjugators(args.seed, args.samples, args.glen)
    if lemma in ("meridian", "all"):
        reports.append(glue.verify_meridian(T, timing=timing))
    if lemma in ("mu-delta", "all"):
        reports.append(glue.verify_mu_delta(T, args.rmax if args.rmax is not None else 25, timing=timing))
    if lemma in ("interval", "all"):
        reports.append(glue.verify_interval(T, gs, args.rmax if args.rmax is not None else 10,
                                            seed=args.seed, timing=timing))
    if lemma in ("cofinal", "all"):
        cof_samples = args.samples if lemma == "cofinal" else max(args.samples, 1000)
        reports.append(glue.verify_cofinal(T, cof_samples, args.seed, timing=timing))
    if lemma in ("property-s", "all"):
        reports.append(glue.verify_property_s_sweep(T, gs, args.rmax if args.rmax is not None else 12,
                                                    args.smax, seed=args.seed, timing=timing))
    return reports


def cmd_verify(args, out) -> int:
    reports = _verify_reports(args)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = [r.to_dict(args.max_violations) for r in reports]
        out.write(_dump(payload[0] if len(payload) == 1 else payload) + "\n")
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            m = "" if r.m is None else f" m={r.m}"
            out.write(f"{status} {r.params['lemma']}{m} cases={r.cases} violations={len(r.violations)}\n")
            shown = r.violations if args.max_violations is None else r.violations[: args.max_violations]
            for v in shown:
                out.write(f"  g={v.g} r={v.r} s={v.s}: {v.detail}\n")
    return 0 if ok else 1


def cmd_compat(args, out) -> int:
    if args.rmax < 1 or args.smax < 1:
        raise UsageError("--rmax and --smax must be >= 1")
    T = _twist(args.m)
    gs = glue.conjugators(args.seed, args.samples, args.glen)
    rep = glue.run_compat(T, gs, args.rmax, args.smax, seed=args.seed,
                          params={"samples": args.samples, "glen": args.glen}, timing=args.timing)
    if args.format == "json":
        out.write(_dump(rep.to_dict(args.max_violations)) + "\n")
    else:
        status = "PASS" if rep.passed else "FAIL"
        out.write(f"{status} compat m={T.m} conjugators={len(gs)} cases={rep.cases} "
                  f"violations={len(rep.violations)}\n")
        out.write("branches: " + " ".join(f"{k}={v}" for k, v in rep.extra["branches"].items()) + "\n")
        shown = rep.violations if args.max_violations is None else rep.violations[: args.max_violations]
        for v in shown:
            out.write(f"  g={v.g} r={v.r} s={v.s}: {v.detail}\n")
    return 0 if rep.passed else 1


def cone_map(m: int, rmax: int, smax: int, conjugator: str = "1") -> str:
    if rmax < 1 or smax < 1:
        raise UsageError("--rmax and --smax must be >= 1")
    T = _twist(m)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["r", "s", "sign_H1", "klein_s", "klein_r", "sign_image"])
    for r, s, sg, image, sg_image in glue.cone_rows(T, T.to_gamma(conjugator), rmax, smax):
        writer.writerow([r, s, sg.symbol, image.s, image.r, sg_image.symbol])
    return buf.getvalue()


def cmd_cone_map(args, out) -> int:
    out.write(cone_map(args.m, args.rmax, args.smax, args.conjugator))
    return 0


def cmd_presentation(args, out) -> int:
    _twist(args.m)
    text = glue.pi1_presentation(args.m)
    if args.format == "json":
        out.write(_dump({"m": args.m, "presentation": text}) + "\n")
    else:
        out.write(text + "\n")
    return 0


COMMANDS = {
    "normalize": cmd_normalize,
    "sign": cmd_sign,
    "compare": cmd_compare,
    "twist-sign": cmd_twist_sign,
    "verify": cmd_verify,
    "compat": cmd_compat,
    "cone-map": cmd_cone_map,
    "presentation": cmd_presentation,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, WordSyntaxError, UnknownGenerator) as exc:
        err.write(f"twistlo {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

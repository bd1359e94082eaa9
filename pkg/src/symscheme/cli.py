"""``symscheme`` command-line front end.

Results go to stdout (or ``--out``) as JSON by default; ``--csv`` and
``--tex`` select tables where they make sense.  ``--manifest PATH`` writes a
run manifest holding the parameters and the sha256 of the emitted bytes.

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 enumeration
budget exceeded, 4 internal inconsistency.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field as dc_field

from . import __version__
from .acceptance import CHECKS, run_checks
from .construct import ConstructionParams, additive_dual, construct_Y, puncture, verify_code_parameters
from .dist import (
    Distribution,
    abcd,
    bounds_all,
    design_strength,
    dual_distribution,
    inner_distribution,
    is_t_design,
    minimum_rank,
)
from .errors import BudgetExceeded, InternalInconsistency, SymSchemeError
from .formset import FormSet
from .gf import default_tower
from .linalg import budget
from .hamming import (
    brute_force_enumerator,
    code_C1,
    code_C2,
    cyclic_zeros,
    enumerator_C1_formula,
    enumerator_C2_formula,
    min_distance_formulas,
)
from .lp import lp_bound, lp_certificate_check
from .scheme import (
    classes,
    q_numbers_charsum_oracle,
    q_numbers_explicit,
    q_numbers_recurrence,
    valency,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_INCONSISTENT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    field: dict | None = None
    seeds: dict = dc_field(default_factory=dict)
    budget: int | None = None
    version: str = __version__
    outputs: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# formatting helpers


def _label(c) -> str:
    return f"a_{{{c[0]},{c[1]:+d}}}" if c[0] else "a_{0}"


def _value_str(v) -> str:
    return v.tex() if hasattr(v, "tex") else str(v)


def dist_csv(a: Distribution, header: str = "count") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rank", "type", header])
    for c in a.labels:
        w.writerow([c[0], c[1], _value_str(a[c])])
    return buf.getvalue()


def dist_tex(a: Distribution) -> str:
    """One-row table in the column order ``(0),(1,+1),(1,-1),...``."""
    L = a.labels
    head = " & ".join(f"${_label(c)}$" for c in L)
    row = " & ".join(_value_str(a[c]) for c in L)
    return "\n".join([r"\begin{tabular}{" + "c" * len(L) + "}", r"\hline", head + r" \\ \hline", row + r" \\", r"\hline", r"\end{tabular}"]) + "\n"


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _fmt(args) -> str:
    if getattr(args, "tex", False):
        return "tex"
    if getattr(args, "csv", False):
        return "csv"
    return "json"


def _emit_dist(args, a: Distribution, extra: dict | None = None) -> str:
    fmt = _fmt(args)
    if fmt == "csv":
        return dist_csv(a)
    if fmt == "tex":
        return dist_tex(a)
    out = {"distribution": a.to_json()}
    out.update(extra or {})
    return _emit_json(out)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands; each returns the output text or (text, exit_code)


def cmd_qnumbers(args):
    if args.method == "charsum":
        M = q_numbers_charsum_oracle(args.m, args.q, seed=args.seed)
        L = classes(args.m)
        if _fmt(args) != "json":
            raise UsageError("charsum tables are numeric; only --json is supported")
        obj = {
            "m": args.m,
            "q": args.q,
            "method": "charsum",
            "rows": [list(c) for c in L],
            "cols": [list(c) for c in L],
            "entries": [[{"re": repr(float(z.real)), "im": repr(float(z.imag))} for z in row] for row in M],
        }
        return _emit_json(obj)
    T = (q_numbers_explicit if args.method == "explicit" else q_numbers_recurrence)(args.m, args.q)
    fmt = _fmt(args)
    if fmt == "tex":
        return T.to_tex() + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "eps", "i", "tau", "value"])
        for r in T.labels:
            for c in T.labels:
                w.writerow([r[0], r[1], c[0], c[1], T[r, c].tex()])
        return buf.getvalue()
    return _emit_json(T.to_json())


def cmd_valencies(args):
    a = Distribution(args.m, args.q, {c: valency(args.m, args.q, *c) for c in classes(args.m)})
    return _emit_dist(args, a, {"total": str(a.total())})


def _build(args):
    P = ConstructionParams(args.s, args.t, args.m, args.q)
    Y = construct_Y(P)
    if args.puncture:
        Y = puncture(Y)
    if args.dual:
        Y = additive_dual(Y)
    return P, Y


def cmd_construct(args):
    P, Y = _build(args)
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(json.dumps(Y.to_json(include_forms=not args.generators_only), sort_keys=True) + "\n")
    if args.dist or not args.emit:
        a = inner_distribution(Y)
        extra = {
            "params": {"s": P.s, "t": P.t, "m": P.m, "q": P.q},
            "size": str(len(Y)),
            "minimum_rank": minimum_rank(a),
        }
        if not (args.puncture or args.dual):
            rep = verify_code_parameters(Y, P, samples=args.samples, seed=args.seed)
            extra["report"] = {"passed": rep.passed, "meets_additive_bound": rep.meets_additive_bound,
                               "kernel_dims": rep.kernel_dims, "notes": rep.notes}
        return _emit_dist(args, a, extra)
    return _emit_json({"written": args.emit, "size": str(len(Y))})


def _read_distribution(path: str) -> Distribution:
    obj = _load_json(path)
    if "distribution" in obj:
        obj = obj["distribution"]
    if "counts" in obj:
        return Distribution.from_json(obj)
    return inner_distribution(FormSet.from_json(obj))


def cmd_dist(args):
    a = _read_distribution(args.input)
    extra: dict = {"minimum_rank": minimum_rank(a), "size": str(a.total())}
    shown = a
    if args.dual or args.check_design is not None:
        ad = dual_distribution(a)
        if args.dual:
            extra["dual"] = ad.to_json()
            shown = ad
        extra["design_strength"] = design_strength(ad)
        if args.check_design is not None:
            extra["is_design"] = is_t_design(ad, args.check_design)
    if args.abcd:
        P = abcd(a)
        extra["abcd"] = {k: [str(x) for x in getattr(P, k)] for k in "ABCD"}
    if _fmt(args) != "json":
        return _emit_dist(args, shown)
    return _emit_dist(args, a, extra)


def cmd_dual(args):
    obj = _load_json(args.input)
    if "counts" in obj or "distribution" in obj:
        a = _read_distribution(args.input)
        return _emit_dist(args, dual_distribution(a))
    Y = FormSet.from_json(obj)
    Z = additive_dual(Y)
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(json.dumps(Z.to_json(), sort_keys=True) + "\n")
    return _emit_dist(args, inner_distribution(Z), {"size": str(len(Z))})


def cmd_bounds(args):
    b = bounds_all(args.m, args.q, args.d)
    if not args.all_variants:
        key = "additive"
        return _emit_json({"m": args.m, "q": args.q, "d": args.d, "bound": str(b[key]), "variant": key})
    return _emit_json({"m": args.m, "q": args.q, "d": args.d, "bounds": {k: str(v) for k, v in sorted(b.items())}})


def cmd_lp(args):
    s = lp_bound(args.m, args.q, args.d)
    out = {
        "m": args.m,
        "q": args.q,
        "d": args.d,
        "value": str(s.value),
        "distribution": s.distribution.to_json(),
    }
    if args.certificate:
        ok = lp_certificate_check(s.instance, s)
        if not ok:
            raise InternalInconsistency("LP certificate failed")
        out["certificate"] = {
            "valid": ok,
            "duals": [str(y) for y in s.duals],
            "rows": [[list(r), kind] for r, kind in s.instance.row_labels],
        }
    return _emit_json(out)


def cmd_code(args):
    try:
        P = ConstructionParams.parse(args.construct)
    except ValueError as exc:
        raise UsageError(f"--construct expects s,t,m,q: {exc}") from exc
    which = args.which.upper()
    Y = construct_Y(P)
    a = inner_distribution(Y)
    out: dict = {"params": {"s": P.s, "t": P.t, "m": P.m, "q": P.q}, "which": which, "length": P.q**P.m - 1}
    formula = brute = None
    if args.enumerator in ("formula", "both"):
        formula = enumerator_C1_formula(a) if which == "C1" else enumerator_C2_formula(a)
        out["formula"] = formula.to_json()
    if args.enumerator in ("brute", "both"):
        C = code_C1(Y) if which == "C1" else code_C2(Y)
        brute = brute_force_enumerator(C)
        out["brute"] = brute.to_json()
    if formula is not None and brute is not None:
        out["agree"] = formula == brute
        if formula != brute:
            raise InternalInconsistency(f"{which} enumerator formula disagrees with enumeration")
    if args.zeros:
        out["zeros"] = cyclic_zeros(P, which)
    if args.mindist:
        e = formula or brute
        out["min_distance"] = {"enumerator": e.min_nonzero_weight(), "closed_form": min_distance_formulas(P, which)}
    return _emit_json(out)


def cmd_verify(args):
    numbers = set(args.criterion or [])
    tags = list(args.tag or [])
    if args.exhaustive_subspaces:
        if numbers:
            numbers.add(11)
        if tags:
            tags.append("exhaustive-subspaces")
    results = run_checks(tags=tags or None, numbers=numbers or None, include_optional=args.exhaustive_subspaces)
    if not results:
        raise UsageError("no acceptance checks selected")
    for r in results:
        print(r.line(), file=sys.stderr)
    text = _emit_json({"results": [r.to_json() for r in results], "passed": all(r.passed for r in results)})
    return text, (EXIT_OK if all(r.passed for r in results) else EXIT_FAIL)


COMMANDS = {
    "qnumbers": cmd_qnumbers,
    "valencies": cmd_valencies,
    "construct": cmd_construct,
    "dist": cmd_dist,
    "dual": cmd_dual,
    "bounds": cmd_bounds,
    "lp": cmd_lp,
    "code": cmd_code,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _formats(p, csv_ok=True, tex_ok=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output (default)")
    if csv_ok:
        g.add_argument("--csv", action="store_true", help="CSV table")
    if tex_ok:
        g.add_argument("--tex", action="store_true", help="TeX tabular")


def _mq(p, d=False):
    p.add_argument("--m", type=int, required=True, help="matrix size m")
    p.add_argument("--q", type=int, required=True, help="odd field order q")
    if d:
        p.add_argument("--d", type=int, required=True, help="minimum rank d")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--manifest", help="write a run manifest (parameters, sha256 of the output)")
    common.add_argument("--budget", type=int, help="enumeration budget (overrides SYMSCHEME_BUDGET)")
    common.add_argument("--threads", type=int, default=1, help="worker threads (results do not depend on it)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = _Parser(prog="symscheme", description="Association scheme of symmetric bilinear forms over F_q.")
    parser.add_argument("--version", action="version", version=f"symscheme {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("qnumbers", parents=[common], help="Q-number table")
    _mq(p)
    p.add_argument("--method", choices=["explicit", "recurrence", "charsum"], default="explicit")
    _formats(p)

    p = sub.add_parser("valencies", parents=[common], help="class sizes v(i,tau)")
    _mq(p)
    _formats(p)

    p = sub.add_parser("construct", parents=[common], help="build Y_s(t,m,q)")
    for name in ("s", "t", "m", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--puncture", action="store_true", help="restrict to the default hyperplane")
    p.add_argument("--dual", action="store_true", help="replace the set by its additive dual")
    p.add_argument("--emit", metavar="FORMS_JSON", help="write the form set to this file")
    p.add_argument("--generators-only", action="store_true", help="with --emit, omit the element list")
    p.add_argument("--dist", action="store_true", help="print the inner distribution")
    p.add_argument("--samples", type=int, default=10, help="random lambdas for the kernel check")
    _formats(p)

    p = sub.add_parser("dist", parents=[common], help="inner distribution of a form set or distribution file")
    p.add_argument("--input", required=True)
    p.add_argument("--dual", action="store_true", help="also compute the dual distribution")
    p.add_argument("--abcd", action="store_true", help="also report the A/B/C/D profile")
    p.add_argument("--check-design", type=int, metavar="T", help="test the t-design property")
    _formats(p)

    p = sub.add_parser("dual", parents=[common], help="dual distribution, or additive dual of a form set")
    p.add_argument("--input", required=True)
    p.add_argument("--emit", metavar="FORMS_JSON", help="write the dual form set here")
    _formats(p)

    p = sub.add_parser("bounds", parents=[common], help="upper bounds on d-codes")
    _mq(p, d=True)
    p.add_argument("--all-variants", action="store_true")

    p = sub.add_parser("lp", parents=[common], help="exact Delsarte LP bound")
    _mq(p, d=True)
    p.add_argument("--certificate", action="store_true", help="include and check dual multipliers")
    p.add_argument("--json", action="store_true", help="JSON output (default)")

    p = sub.add_parser("code", parents=[common], help="Hamming-metric codes C1/C2")
    p.add_argument("--construct", required=True, metavar="S,T,M,Q")
    p.add_argument("--which", choices=["c1", "c2"], default="c1")
    p.add_argument("--enumerator", choices=["formula", "brute", "both"], default="formula")
    p.add_argument("--zeros", action="store_true", help="list the cyclic-code zeros")
    p.add_argument("--mindist", action="store_true", help="minimum distance vs closed form")

    p = sub.add_parser("verify", parents=[common], help="run acceptance checks")
    p.add_argument("--tag", action="append", help="run checks with this tag (repeatable)")
    p.add_argument("--criterion", action="append", type=int, choices=sorted(CHECKS))
    p.add_argument("--exhaustive-subspaces", action="store_true", help="include the exhaustive X(4,3) subspace search")
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    saved = os.environ.get("SYMSCHEME_BUDGET")
    if args.budget is not None:
        os.environ["SYMSCHEME_BUDGET"] = str(args.budget)
    try:
        return _dispatch(args)
    finally:
        if saved is None:
            os.environ.pop("SYMSCHEME_BUDGET", None)
        else:
            os.environ["SYMSCHEME_BUDGET"] = saved


def _dispatch(args) -> int:
    try:
        res = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (SymSchemeError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = res if isinstance(res, tuple) else (res, EXIT_OK)
    data = text.encode()
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    if args.manifest:
        params = {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "manifest", "command")}
        field = None
        m, q = getattr(args, "m", None), getattr(args, "q", None)
        if m and q:
            try:
                field = default_tower(q, m).to_json()
            except SymSchemeError:
                field = None
        man = RunManifest(
            subcommand=args.command,
            parameters=params,
            field=field,
            seeds={"seed": args.seed},
            budget=budget(),
            outputs={"stdout" if not args.out else args.out: hashlib.sha256(data).hexdigest()},
        )
        with open(args.manifest, "w") as fh:
            fh.write(_emit_json(man.to_json()))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

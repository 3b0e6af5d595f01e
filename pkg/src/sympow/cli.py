"""Command line front end.

Every subcommand loads a session file, picks an ideal out of it and runs
one operation.  Reports are printed as text or, with --json, as a JSON
document whose "report" subtree is byte-stable across runs and cache
states; timings and cache counters live outside that subtree.

Exit codes: 0 success (and any asserted check passed), 1 a computed
check failed, 2 parse or usage error, 3 refused precondition, 4 timeout,
5 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from typing import Optional

from . import cache
from .errors import (
    ComputationTimeout,
    InternalError,
    ParseError,
    PreconditionError,
    SympowError,
)
from .fitting import check_assumptions, fitting_ideal
from .hilbert import initial_degree, multiplicity
from .ideals import Ideal
from .monomial import symbolic_power_monomial
from .parser import parse_polynomial, parse_session, render_poly
from .rings import GREVLEX, LEX
from .symbolic import (
    alpha_lower_bound,
    annihilator_quotient,
    conjecture_check,
    em_formula_check,
    multiplicity_certificate,
    symbolic_defect,
    symbolic_power,
)
from .timeout import deadline

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympow",
        description="symbolic powers of polynomial ideals via Fitting-ideal colons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, power=False, power_required=True):
        p.add_argument("session", help="session file, or the name of a bundled one")
        p.add_argument("--ideal", help="ideal name (default: first declared)")
        p.add_argument(
            "--order",
            choices=sorted(_ORDERS),
            default="grevlex",
            help="monomial order for the session ring",
        )
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--cache-dir", help="directory for the persistent basis cache")
        p.add_argument(
            "--timeout",
            type=float,
            default=600.0,
            help="wall-clock limit in seconds (default 600)",
        )
        p.add_argument(
            "--force",
            action="store_true",
            help="compute past failed preconditions where that is meaningful",
        )
        if power:
            p.add_argument(
                "-m",
                "--power",
                type=int,
                required=power_required,
                default=None,
                help="symbolic power exponent",
            )

    p = sub.add_parser("symbolic-power", help="compute I^(m)")
    common(p, power=True)
    p.add_argument(
        "--strategy",
        choices=("colon_power", "saturation"),
        default="colon_power",
    )

    p = sub.add_parser("fitting", help="a Fitting ideal of the presentation")
    common(p)
    p.add_argument("-j", "--index", type=int, default=None,
                   help="Fitting index (default: the height)")

    p = sub.add_parser("multiplicity", help="multiplicity of S/I^m")
    common(p, power=True, power_required=False)

    p = sub.add_parser("certify", help="multiplicity certificate for I^(m)")
    common(p, power=True)
    p.add_argument("--candidate", help="name of a declared candidate ideal")
    p.add_argument(
        "--strategy",
        choices=("colon_power", "saturation"),
        default="colon_power",
    )

    p = sub.add_parser("sdefect", help="minimal generators of I^(m)/I^m")
    common(p, power=True)

    p = sub.add_parser("annihilator", help="annihilator of I^(m)/I^m")
    common(p, power=True)

    p = sub.add_parser("em-check", help="compare the annihilator with its predicted power of the maximal ideal")
    common(p, power=True)

    p = sub.add_parser("alpha-bound", help="lower bound for the initial degree of I^(m)")
    common(p, power=True)
    p.add_argument("--t0", type=int, default=None, help="colon exponent (default m-1)")

    p = sub.add_parser("conjecture-check", help="Jacobian recovery of I from defect witnesses")
    common(p, power=True)
    p.add_argument("--witnesses", help="file with one witness polynomial per line")

    p = sub.add_parser("assumptions", help="report the formula hypotheses")
    common(p)

    p = sub.add_parser("oracle", help="combinatorial symbolic power, compared against the colon route")
    common(p, power=True)

    return parser


def _load_session_text(spec: str) -> str:
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError:
        pass
    if "/" not in spec and "\\" not in spec:
        name = spec if spec.endswith(".sess") else spec + ".sess"
        try:
            bundle = resources.files("sympow").joinpath("sessions", name)
            return bundle.read_text(encoding="utf-8")
        except (OSError, TypeError):
            pass
    raise ParseError(f"cannot open session {spec!r}", 0, 0)


def _ideal_payload(ideal: Ideal) -> dict:
    return {
        "generators": [render_poly(g) for g in ideal.gens],
        "groebner_basis": [render_poly(g) for g in ideal.gb.elements],
    }


def _pick_ideal(session, args) -> Ideal:
    names = list(session.ideals)
    if not names:
        raise PreconditionError("the session declares no ideal")
    name = args.ideal or names[0]
    if name not in session.ideals:
        raise PreconditionError(f"no ideal named {name!r} in the session")
    return Ideal(session.ring, session.ideals[name])


def _run(args) -> tuple:
    if args.cache_dir:
        cache.configure(args.cache_dir)
    text = _load_session_text(args.session)
    session = parse_session(text, order=_ORDERS[args.order])
    for w in session.warnings:
        print(f"warning: {w}", file=sys.stderr)
    ideal = _pick_ideal(session, args)
    attest_unmixed = "unmixed" in session.attestations
    attest_radical = "radical" in session.attestations
    attest = {"attest_unmixed": attest_unmixed, "attest_radical": attest_radical}

    command = args.command
    exit_code = 0

    if command == "symbolic-power":
        res = symbolic_power(ideal, args.power, strategy=args.strategy, **attest)
        report = {
            "power": args.power,
            "strategy": res.strategy,
            "exponent_used": res.exponent_used,
            "semantics": res.semantics,
            "assumptions": res.assumptions.as_dict(),
            "equals_ordinary": res.ideal.equal(ideal.power(args.power)),
            "ideal": _ideal_payload(res.ideal),
        }
        lines = [
            f"strategy {res.strategy}, exponent {res.exponent_used}, {res.semantics}",
            "basis: " + ", ".join(render_poly(g) for g in res.ideal.gb.elements),
        ]
    elif command == "fitting":
        j = args.index
        if j is None:
            report_a = check_assumptions(ideal, **attest)
            if report_a.height_c is None:
                raise PreconditionError("no height available; pass --index")
            j = report_a.height_c
        fj = fitting_ideal(ideal, j)
        report = {"index": j, "ideal": _ideal_payload(fj)}
        lines = [f"F_{j}: " + ", ".join(render_poly(g) for g in fj.gb.elements)]
    elif command == "multiplicity":
        m = args.power or 1
        target = ideal.power(m) if m > 1 else ideal
        e = multiplicity(target)
        report = {"power": m, "multiplicity": e}
        lines = [f"e = {e}"]
    elif command == "certify":
        candidate = None
        if args.candidate:
            if args.candidate not in session.ideals:
                raise PreconditionError(f"no ideal named {args.candidate!r}")
            candidate = Ideal(session.ring, session.ideals[args.candidate])
        res = multiplicity_certificate(
            ideal, args.power, candidate=candidate,
            strategy=args.strategy, **attest,
        )
        report = res.as_dict()
        lines = [f"verdict: {res.verdict}"]
        if res.lhs_multiplicity is not None:
            lines.append(f"multiplicity {res.lhs_multiplicity}, required {res.required}")
        if res.reason:
            lines.append(f"reason: {res.reason}")
        if res.verdict != "certified_equal":
            exit_code = 1
    elif command == "sdefect":
        count, witnesses = symbolic_defect(ideal, args.power, **attest)
        report = {
            "power": args.power,
            "sdefect": count,
            "witness_degrees": sorted(w.total_degree() for w in witnesses),
            "witnesses": [render_poly(w) for w in witnesses],
        }
        lines = [
            f"sdefect = {count}",
            "witness degrees: "
            + ", ".join(str(w.total_degree()) for w in witnesses),
        ]
    elif command == "annihilator":
        ann = annihilator_quotient(ideal, args.power, **attest)
        report = {"power": args.power, "ideal": _ideal_payload(ann)}
        lines = ["annihilator: " + ", ".join(render_poly(g) for g in ann.gb.elements)]
    elif command == "em-check":
        res = em_formula_check(ideal, args.power, force=args.force, **attest)
        report = {
            "power": args.power,
            "passed": res.passed,
            "exponent": res.exponent,
            "annihilator": _ideal_payload(res.annihilator),
        }
        lines = [
            ("matches" if res.passed else "does not match")
            + f" the predicted power {res.exponent} of the maximal ideal"
        ]
        if not res.passed:
            exit_code = 1
    elif command == "alpha-bound":
        res = alpha_lower_bound(ideal, args.power, t0=args.t0)
        report = res.as_dict()
        lines = [
            f"alpha(I^({res.m})) >= {res.bound}"
            f"  (alpha(I) = {res.alpha_base}, alpha(F_c) = {res.alpha_fitting}, t0 = {res.t0})"
        ]
    elif command == "conjecture-check":
        witnesses = None
        if args.witnesses:
            witnesses = []
            with open(args.witnesses, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line and not line.startswith("#"):
                        witnesses.append(parse_polynomial(line, session.ring))
        res = conjecture_check(ideal, args.power, witnesses=witnesses, **attest)
        report = {
            "power": args.power,
            "sdefect": res.sdefect,
            "witnesses": [render_poly(w) for w in res.witnesses],
            "jacobian_sum": _ideal_payload(res.jacobian_sum),
            "radical_equal": res.radical_equal,
            "containment_zn": list(res.containment_zn),
        }
        lines = [
            f"sdefect = {res.sdefect}",
            f"radical of the Jacobian sum equals rad(I): {res.radical_equal}",
            "all partials inside I per witness: "
            + ", ".join(str(b) for b in res.containment_zn),
        ]
    elif command == "assumptions":
        res = check_assumptions(ideal, **attest)
        report = res.as_dict()
        lines = [
            f"height {res.height_c}, mu {res.mu}, Fitting height {res.fitting_height}",
            f"generically CI proxy: {res.generically_ci_proxy}",
            f"unmixed: {res.unmixed_status}; radical: {res.radical_status}",
        ]
    elif command == "oracle":
        oracle = symbolic_power_monomial(ideal, args.power)
        colon = symbolic_power(ideal, args.power, **attest)
        agree = oracle.equal(colon.ideal)
        report = {
            "power": args.power,
            "ideal": _ideal_payload(oracle),
            "matches_colon": agree,
        }
        lines = [
            "oracle basis: " + ", ".join(render_poly(g) for g in oracle.gb.elements),
            f"matches the colon route: {agree}",
        ]
        if not agree:
            exit_code = 1
    else:  # pragma: no cover - argparse enforces the choices
        raise InternalError(f"unhandled command {command!r}")

    return exit_code, report, lines


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    cache.reset_counters()
    try:
        with deadline(args.timeout):
            exit_code, report, lines = _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ComputationTimeout:
        print("timed out", file=sys.stderr)
        return 4
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 5
    except SympowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - last resort
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 5

    if args.json:
        doc = {
            "schema": "sympow-report/1",
            "command": args.command,
            "report": report,
            "timings": {"total_s": round(time.monotonic() - started, 3)},
            "cache": cache.counters(),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Batch command-line interface.

Subcommands:
    classify       distinction verdicts from a parameter file (generic or
                   unitary mode; unitary block input also reports the block
                   formulation, the agreement flag, and the exceptional flag)
    ktype          lowest and minimal even K-types, optional oracle search
    derive         highest-derivative stages and the necessity test
    eps            central-point factor of a parameter for a given twist
    cosets         involutions, double-coset classes, orbit dimensions
    verify-kernel  quadrature vs closed-form report for the kernel pairings
    selftest       run the acceptance suite

Exit codes: 0 success, 1 parse error, 2 precondition violation, 3 numeric
failure.  All machine output is JSON; the default rendering is plain text.

Input files: {"type": "langlands", "characters": [{"m": 1, "s": {"re":
"1/2", "im": "0"}}, ...]} or {"type": "unitary", "blocks": [{"kind":
"char", "n": 2, "k": 1, "u": {...}} | {"kind": "comp", "m": 1, "k": 0,
"u": {...}, "t": "1/2"}, ...]}; the derive subcommand takes {"type":
"monomial", "blocks": [{"k": 1, "s": {...}, "size": 2}, ...]}.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .cosets import (
    Composition,
    enumerate_involutions,
    orbit_dimension,
    parabolic_classes,
    verify_representative,
)
from .derivatives import MonomialRep, derivative_necessity_test, highest_derivative
from .distinction import (
    check_condition_i,
    has_exceptional_factor,
    is_distinguished_blocks,
    is_distinguished_generic,
    is_distinguished_unitary,
)
from .errors import PreconditionError, QuadratureError
from .exactnum import GaussianRational
from .factors import AdditiveCharacterSpec, eps_rep
from .kernelnum import (
    QuadratureConfig,
    case1_displayed_form,
    case2_displayed_form,
    kernel_case1,
    kernel_case2,
)
from .ktypes import (
    NotDistinguishedError,
    distinguished_minimal_ktype,
    is_o_distinguished,
    lowest_ktype,
    minimal_distinguished_ktype_oracle,
)
from .params import LanglandsParameter, UnitaryRep, parse_parameter_file, to_langlands
from .selftest import run_all

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_NUMERIC = 3


class ParseFailure(Exception):
    pass


def _load_input(args) -> dict:
    if getattr(args, "inline", None):
        text = args.inline
        source = "<inline>"
    elif getattr(args, "input", None):
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise ParseFailure(f"cannot read {args.input}: {exc}") from exc
        source = args.input
    else:
        raise ParseFailure("one of --input PATH or --inline JSON is required")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"invalid JSON in {source} at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _report(subcommand: str, inputs: dict, results: dict, criteria: list) -> dict:
    return {
        "subcommand": subcommand,
        "inputs": inputs,
        "results": results,
        "criteria": criteria,
    }


def _emit(report: dict, args, text_lines) -> None:
    payload = json.dumps(report, indent=2)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    if getattr(args, "json", False):
        print(payload)
    else:
        for line in text_lines:
            print(line)


def _parse_twist(spec: str) -> GaussianRational:
    try:
        re_part, im_part = spec.split(",")
        return GaussianRational(Fraction(re_part.strip()), Fraction(im_part.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseFailure(
            f'--b expects "re,im" with rational parts, e.g. "0,1" for i: {exc}'
        ) from exc


def _as_parameter(data) -> LanglandsParameter:
    return data if isinstance(data, LanglandsParameter) else to_langlands(data)


def cmd_classify(args) -> int:
    obj = _load_input(args)
    try:
        data = parse_parameter_file(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseFailure(f"bad parameter file: {exc}") from exc
    param = _as_parameter(data)
    inputs = {"mode": args.mode, "parameter": param.to_json()}
    if isinstance(data, UnitaryRep):
        inputs["blocks"] = data.to_json()

    if args.mode == "generic":
        verdict = is_distinguished_generic(param)
        results = {
            "verdict": verdict.to_json(),
            "appears_in_induced_trivial_branching": verdict.distinguished,
        }
        criteria = ["pairing-criterion", "induced-trivial-branching-alias"]
        lines = [
            f"generic mode on a parameter of size {param.n}",
            f"distinguished: {verdict.distinguished}",
            f"pairing condition (i): {verdict.condition_i}",
        ]
        if verdict.witness:
            lines.append(
                f"witness pairs {list(verdict.witness.pairs)}, fixed {list(verdict.witness.fixed)}"
            )
    else:
        verdict = is_distinguished_unitary(param)
        results = {"verdict": verdict.to_json()}
        criteria = ["pairing-criterion", "even-multiplicity-criterion"]
        lines = [
            f"unitary mode on a parameter of size {param.n}",
            f"distinguished: {verdict.distinguished}",
            f"condition (i): {verdict.condition_i}, condition (ii): {verdict.condition_ii}",
        ]
        if isinstance(data, UnitaryRep):
            block_verdict = is_distinguished_blocks(data)
            agreement = block_verdict.distinguished == verdict.distinguished
            results["block_verdict"] = block_verdict.to_json()
            results["formulations_agree"] = agreement
            results["exceptional_factor"] = has_exceptional_factor(data)
            criteria += ["block-formulation-equivalence", "exceptional-family-flag"]
            lines.append(
                f"block formulation: {block_verdict.distinguished} (agreement: {agreement})"
            )
            lines.append(f"exceptional factor present: {results['exceptional_factor']}")
    _emit(_report("classify", inputs, results, criteria), args, lines)
    return EXIT_OK


def cmd_ktype(args) -> int:
    obj = _load_input(args)
    try:
        data = parse_parameter_file(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseFailure(f"bad parameter file: {exc}") from exc
    param = _as_parameter(data)
    inputs = {"parameter": param.to_json()}
    low = lowest_ktype(param)
    minimal = distinguished_minimal_ktype(param)
    results = {
        "lowest_ktype": low.to_json(),
        "distinguished_minimal_ktype": minimal.to_json(),
        "minimal_is_even": is_o_distinguished(minimal),
    }
    criteria = ["evenness-criterion", "minimal-even-ktype-construction"]
    lines = [
        f"lowest K-type: {tuple(low)}",
        f"distinguished minimal K-type: {tuple(minimal)}",
    ]
    if args.radius is not None:
        inputs["radius"] = args.radius
        oracle = minimal_distinguished_ktype_oracle(param, args.radius)
        results["oracle_minimizers"] = sorted(w.to_json() for w in oracle)
        results["oracle_agrees"] = oracle == {minimal}
        criteria.append("torus-weight-oracle")
        lines.append(
            f"oracle minimizers (radius {args.radius}): {sorted(tuple(w) for w in oracle)}"
        )
    _emit(_report("ktype", inputs, results, criteria), args, lines)
    return EXIT_OK


def cmd_derive(args) -> int:
    obj = _load_input(args)
    if obj.get("type") != "monomial":
        raise ParseFailure('derive expects {"type": "monomial", "blocks": [...]}')
    try:
        mono = MonomialRep.parse(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseFailure(f"bad monomial file: {exc}") from exc
    if mono.is_empty():
        raise ParseFailure("derive expects at least one block")
    inputs = {"monomial": mono.to_json()}
    stages = []
    current = mono
    while not current.is_empty():
        ok, _ = check_condition_i(current.parameter())
        stages.append(
            {
                "blocks": [b.to_json() for b in current.blocks],
                "total_size": current.total_size,
                "condition_i": ok,
            }
        )
        current = highest_derivative(current)
    passes, failing = derivative_necessity_test(mono)
    results = {
        "depth": mono.depth,
        "stages": stages,
        "passes": passes,
        "failing_stage": failing,
    }
    lines = [f"depth {mono.depth}, {len(stages)} stages"]
    for i, st in enumerate(stages):
        lines.append(f"stage {i}: size {st['total_size']}, pairing condition {st['condition_i']}")
    lines.append(
        "necessity test passes" if passes else f"necessity test fails at stage {failing} (certifies non-distinction)"
    )
    _emit(
        _report("derive", inputs, results, ["highest-derivative-recursion", "derivative-necessity-test"]),
        args,
        lines,
    )
    return EXIT_OK


def cmd_eps(args) -> int:
    obj = _load_input(args)
    try:
        data = parse_parameter_file(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseFailure(f"bad parameter file: {exc}") from exc
    param = _as_parameter(data)
    psi = AdditiveCharacterSpec(_parse_twist(args.b))
    factor = eps_rep(param, psi)
    exact = factor.exact_value()
    results = {
        "factor": factor.to_json(),
        "exactly_one": factor.is_one(),
        "psi_trivial_on_r": psi.trivial_on_r,
    }
    inputs = {"parameter": param.to_json(), "b": args.b}
    lines = [
        f"central-point factor for b = {psi.b}: "
        + (f"exact {exact}" if exact is not None else f"numeric {factor.numeric():.12g}"),
        f"exactly 1: {factor.is_one()}",
    ]
    _emit(
        _report("eps", inputs, results, ["central-value-product-formula", "distinguished-triviality"]),
        args,
        lines,
    )
    return EXIT_OK


def cmd_cosets(args) -> int:
    involutions = enumerate_involutions(args.n)
    inputs = {"n": args.n}
    # Exact verification of all representatives is cheap up to 7 letters;
    # beyond that it is skipped (reported as null).
    verified = (
        all(verify_representative(w) for w in involutions) if args.n <= 7 else None
    )
    results = {
        "count": len(involutions),
        "involutions": [w.to_json() for w in involutions],
        "representatives_verified": verified,
    }
    criteria = ["involution-count-recurrence", "twisted-conjugation-check"]
    lines = [f"{len(involutions)} involutions on {args.n} letters, representatives verified: {verified}"]
    if args.comp:
        parts = tuple(int(x) for x in args.comp.split(","))
        comp = Composition(parts)
        if comp.n != args.n:
            raise ParseFailure(f"--comp {args.comp} does not sum to n = {args.n}")
        classes = parabolic_classes(args.n, comp)
        dims = [orbit_dimension(cls[0], comp) for cls in classes]
        full = 2 * args.n * args.n
        results["composition"] = list(parts)
        results["classes"] = [[w.to_json() for w in cls] for cls in classes]
        results["class_dimensions"] = dims
        results["open_classes"] = sum(1 for d in dims if d == full)
        inputs["comp"] = list(parts)
        criteria += ["young-double-cosets", "open-orbit-dimension"]
        lines.append(f"{len(classes)} double-coset classes for composition {parts}")
        for cls, d in zip(classes, dims):
            tag = " (open)" if d == full else ""
            lines.append(f"  class of {cls[0].perm}: {len(cls)} involutions, orbit dimension {d}{tag}")
    _emit(_report("cosets", inputs, results, criteria), args, lines)
    return EXIT_OK


def _parse_samples(spec: str):
    out = []
    for piece in spec.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            out.append(complex(piece))
        except ValueError as exc:
            raise ParseFailure(f"bad sample {piece!r}: {exc}") from exc
    if not out:
        raise ParseFailure("--samples needs at least one complex number")
    return out


def _c2(z: complex) -> list:
    return [z.real, z.imag]


def cmd_verify_kernel(args) -> int:
    samples = _parse_samples(args.samples)
    cfg = QuadratureConfig(
        abs_tol=1e-10, rel_tol=1e-8, max_subdivisions=600, radial_cutoff=1000.0
    )
    rows = []
    lines = []
    for s in samples:
        for label, case, displayed in (
            ("case1", kernel_case1, case1_displayed_form),
            ("case2", kernel_case2, case2_displayed_form),
        ):
            numeric, reference = case(s, cfg)
            rel = abs(numeric - reference) / abs(reference)
            ratio = numeric / displayed(s, cfg)
            expected = 2.0 ** (-(1.0 + s))
            if label == "case2":
                expected = expected / (s + 1.0)
            rows.append(
                {
                    "s": _c2(s),
                    "case": label,
                    "numeric": _c2(numeric),
                    "reference": _c2(reference),
                    "rel_err": rel,
                    "normalization_ratio": _c2(ratio),
                    "expected_normalization_ratio": _c2(expected),
                }
            )
            lines.append(
                f"{label} s={s}: rel err {rel:.2e}, normalization ratio {ratio:.9g} (expected {expected:.9g})"
            )
    _emit(
        _report(
            "verify-kernel",
            {"samples": [str(s) for s in samples]},
            {"table": rows},
            ["beta-substitution-reference", "normalization-ratio"],
        ),
        args,
        lines,
    )
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_all()
    ok = all(r.passed and r.within_budget for r in results)
    print("selftest:", "all criteria passed" if ok else "FAILURES above")
    return EXIT_OK if ok else 1


class _Parser(argparse.ArgumentParser):
    """Flag errors are parse errors (exit 1), not argparse's default 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseFailure(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="glcdist",
        description="Distinction toolkit: classification, K-types, factors, cosets, kernel checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_io(p, with_mode=False):
        p.add_argument("--input", help="path to a JSON input file")
        p.add_argument("--inline", help="inline JSON input")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--output", help="also write the JSON report to this path")
        if with_mode:
            p.add_argument(
                "--mode", choices=("generic", "unitary"), default="unitary",
                help="which classification applies (caller asserts the hypothesis)",
            )

    p = sub.add_parser("classify", help="distinction verdicts")
    add_io(p, with_mode=True)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("ktype", help="lowest and minimal even K-types")
    add_io(p)
    p.add_argument("--radius", type=int, help="run the brute-force oracle to this radius")
    p.set_defaults(fn=cmd_ktype)

    p = sub.add_parser("derive", help="highest-derivative stages and necessity test")
    add_io(p)
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("eps", help="central-point factor of a parameter")
    add_io(p)
    p.add_argument("--b", default="0,1", help='twist b as "re,im" rationals (default "0,1" = i)')
    p.set_defaults(fn=cmd_eps)

    p = sub.add_parser("cosets", help="involutions, classes, orbit dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--comp", help='composition, e.g. "2,2"')
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_cosets)

    p = sub.add_parser("verify-kernel", help="kernel quadrature vs closed forms")
    p.add_argument("--samples", default="0,0.2,0.4,0.2+0.3j", help="comma-separated complex samples")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_verify_kernel)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotDistinguishedError as exc:
        print(f"precondition violated (even-multiplicity hypothesis): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except QuadratureError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

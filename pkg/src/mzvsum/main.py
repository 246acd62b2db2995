import argparse
import sys
import typing

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

from mzvsum import utils
from mzvsum import verification
from mzvsum.algebra import expansions
from mzvsum.combinatorics import identities
from mzvsum.combinatorics import numbers
from mzvsum.config import settings
from mzvsum.models import Composition
from mzvsum.models import EvalConfig
from mzvsum.models import ProductKind
from mzvsum.models import Report
from mzvsum.models import Status
from mzvsum.models import ZetaKind
from mzvsum.numeric import evaluators

PROG = "mzv"

EVAL_KINDS: dict[str, ZetaKind] = {
    "zeta": ZetaKind.MZV,
    "zetastar": ZetaKind.MZSV,
    "hurwitz": ZetaKind.HURWITZ_MZV,
    "hurwitzstar": ZetaKind.HURWITZ_MZSV,
    "t": ZetaKind.T,
    "tstar": ZetaKind.T_STAR,
}

# per target values for --n, --k and --depth when the flag is omitted
VERIFY_DEFAULTS: dict[verification.Target, dict[str, int]] = {
    verification.Target.PROPOSITION: {"n": 2, "k": 4},
    verification.Target.LEMMA: {"n": 2},
    verification.Target.MAIN: {"n": 2, "k": 2},
    verification.Target.HURWITZ: {"n": 2, "k": 2},
    verification.Target.TVALUES: {"n": 2, "k": 2},
    verification.Target.THEOREM3: {"k": 10},
    verification.Target.COROLLARY: {"k": 7},
    verification.Target.SUMFORMULA: {"k": 4, "depth": 2},
}


# Output models
class ExpandOutput(BaseModel):
    """
    The schema for the JSON output of `mzv expand`.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    command: str = "expand"
    inputs: dict[str, typing.Any] = Field(description="An echo of the parsed parameters")
    terms: list[dict] = Field(
        description="The expansion as word/coefficient records in canonical word order"
    )


class EvalOutput(BaseModel):
    """
    The schema for the JSON output of `mzv eval`.  Floats are rendered with 17
    significant digits.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    command: str = "eval"
    inputs: dict[str, typing.Any] = Field(description="An echo of the parsed parameters")
    value: str = Field(description="The truncated nested sum")
    tail_bound: str = Field(description="The estimated truncation error")


class LayerCount(BaseModel):
    """
    One r -> r! S(k, r) row of `mzv count`.
    """

    r: int
    count: str = Field(description="r! S(k, r) as a decimal string")


class CountOutput(BaseModel):
    """
    The schema for the JSON output of `mzv count`.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    command: str = "count"
    inputs: dict[str, typing.Any] = Field(description="An echo of the parsed parameters")
    layers: list[LayerCount] = Field(description="The depth layers of the expansion of z_n^k")
    total: str = Field(description="The Fubini number F(k) as a decimal string")
    decomposition: typing.Optional[list[identities.DecompositionRow]] = Field(
        description="The (p, q) terms of the split double sum, when --ell is given",
        default=None,
    )
    lhs: typing.Optional[str] = Field(description="F(k), when --ell is given", default=None)
    rhs: typing.Optional[str] = Field(
        description="The sum of the decomposition contributions, when --ell is given",
        default=None,
    )


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def _eval_config(args: argparse.Namespace) -> EvalConfig:
    return EvalConfig(truncation=args.trunc, shift=args.x)


def cmd_expand(args: argparse.Namespace) -> int:
    """
    Print the closed form expansion of z_n^k.
    """
    kind = ProductKind(args.kind)
    poly = expansions.expand_power_closed_form(args.n, args.k, kind)
    if args.format == "json":
        output = ExpandOutput(
            inputs={"n": args.n, "k": args.k, "kind": str(kind)}, terms=poly.to_records()
        )
        print(output.model_dump_json(by_alias=True, indent=2))
    else:
        print(poly)
    return 0


def _run_verification(args: argparse.Namespace) -> Report:
    target = verification.Target(args.target)
    params = {**VERIFY_DEFAULTS[target]}
    params.update({k: getattr(args, k) for k in ("n", "k", "depth") if getattr(args, k)})
    kind = ProductKind(args.kind) if args.kind else None
    cfg = _eval_config(args)
    workers = settings.max_workers

    if target is verification.Target.PROPOSITION:
        return verification.verify_proposition(params["n"], params["k"], kind)
    if target is verification.Target.LEMMA:
        return verification.verify_lemma(
            params["n"], samples=args.samples, seed=args.seed, kind=kind
        )
    if target is verification.Target.MAIN:
        return verification.verify_main(
            params["n"], params["k"], cfg, args.tol, args.parallel, workers
        )
    if target is verification.Target.HURWITZ:
        return verification.verify_hurwitz(
            params["n"], params["k"], cfg, args.tol, args.parallel, workers
        )
    if target is verification.Target.TVALUES:
        return verification.verify_tvalues(
            params["n"], params["k"], cfg, args.tol, args.parallel, workers
        )
    if target is verification.Target.THEOREM3:
        return verification.verify_theorem3(params["k"], args.ell)
    if target is verification.Target.COROLLARY:
        return verification.verify_corollary(params["k"])
    return verification.verify_sum_formula(params["k"], params["depth"], cfg, args.tol)


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Run one verification suite and print its report.  A failing report also
    names the worst check on stderr.
    """
    report = _run_verification(args)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.render_text())
    if report.status is Status.PASS:
        return 0
    worst = report.worst()
    if worst is None:
        print(f"{PROG}: {report.command} failed, no checks were run", file=sys.stderr)
    else:
        print(
            f"{PROG}: {report.command} failed, worst check {worst.name}: "
            f"difference {worst.difference}, tolerance {worst.tolerance}",
            file=sys.stderr,
        )
    return 1


def cmd_eval(args: argparse.Namespace) -> int:
    """
    Print the value and tail estimate of a single nested sum.
    """
    alpha = Composition.parse(args.alpha)
    kind = EVAL_KINDS[args.kind]
    cfg = _eval_config(args)
    result = evaluators.evaluate(alpha, kind, cfg)
    value = utils.format_float(result.value)
    tail = utils.format_float(result.tail_bound)
    if args.format == "json":
        inputs: dict[str, typing.Any] = {
            "kind": args.kind,
            "alpha": list(alpha.parts),
            "trunc": cfg.truncation,
        }
        if kind in (ZetaKind.HURWITZ_MZV, ZetaKind.HURWITZ_MZSV):
            inputs["x"] = cfg.shift
        output = EvalOutput(inputs=inputs, value=value, tail_bound=tail)
        print(output.model_dump_json(by_alias=True, indent=2))
    else:
        print(f"value = {value}")
        print(f"tail_bound = {tail}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    """
    Print the layer counts r! S(k, r), their total F(k) and, for a split ell,
    the Delannoy weighted decomposition of F(k).
    """
    layers = identities.layer_counts(args.k)
    total = numbers.fubini(args.k)
    rows = identities.theorem3_decomposition(args.k, args.ell) if args.ell else None
    rhs = sum(row.contribution for row in rows) if rows is not None else None

    if args.format == "json":
        output = CountOutput(
            inputs={"k": args.k, "ell": args.ell},
            layers=[LayerCount(r=r, count=str(c)) for r, c in layers.items()],
            total=str(total),
            decomposition=rows,
            lhs=str(total) if rows is not None else None,
            rhs=str(rhs) if rhs is not None else None,
        )
        print(output.model_dump_json(by_alias=True, indent=2))
    else:
        print("r\tr!S(k,r)")
        for r, count in layers.items():
            print(f"{r}\t{count}")
        print(f"total F({args.k}) = {total}")
        if rows is not None:
            print("p\tq\tp!S(l,p)\tq!S(k-l,q)\tD(p,q)\tcontribution")
            for row in rows:
                print(
                    f"{row.p}\t{row.q}\t{row.left_count}\t{row.right_count}\t"
                    f"{row.delannoy}\t{row.contribution}"
                )
            print(f"lhs = {total}")
            print(f"rhs = {rhs}")
    return 0 if rhs is None or rhs == total else 1


def build_parser() -> argparse.ArgumentParser:
    """
    Build the `mzv` argument parser with one subcommand per operation.
    """
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Expand powers in the harmonic algebra, verify the multinomial "
        "sum formulas and evaluate multiple zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_numeric(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--trunc",
            type=_positive_int,
            default=settings.default_truncation,
            help="The summation limit N",
        )
        p.add_argument(
            "--x",
            type=_positive_float,
            default=settings.default_shift,
            help="The Hurwitz shift",
        )

    expand = sub.add_parser("expand", help="Print the closed form expansion of z_n^k")
    expand.add_argument("--n", type=_positive_int, required=True)
    expand.add_argument("--k", type=_positive_int, required=True)
    expand.add_argument("--kind", choices=[str(k) for k in ProductKind], default="harmonic")
    add_format(expand)
    expand.set_defaults(func=cmd_expand)

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("target", choices=[str(t) for t in verification.Target])
    verify.add_argument("--n", type=_positive_int, default=None)
    verify.add_argument("--k", type=_positive_int, default=None, help="The exponent, or weight")
    verify.add_argument("--ell", type=_positive_int, default=None, help="The theorem3 split")
    verify.add_argument("--depth", type=_positive_int, default=None, help="The sumformula depth")
    verify.add_argument("--kind", choices=[str(k) for k in ProductKind], default=None)
    verify.add_argument(
        "--tol",
        type=_nonnegative_float,
        default=settings.default_tolerance,
        help="The absolute tolerance of numeric checks",
    )
    verify.add_argument("--samples", type=_positive_int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--parallel", action="store_true", help="Evaluate words in a process pool"
    )
    add_numeric(verify)
    add_format(verify)
    verify.set_defaults(func=cmd_verify)

    evaluate = sub.add_parser("eval", help="Evaluate a single nested sum")
    evaluate.add_argument("kind", choices=list(EVAL_KINDS))
    evaluate.add_argument("alpha", help="A comma separated composition, e.g. 2,3")
    add_numeric(evaluate)
    add_format(evaluate)
    evaluate.set_defaults(func=cmd_eval)

    count = sub.add_parser("count", help="Print the layer counts and Fubini decomposition")
    count.add_argument("--k", type=_positive_int, required=True)
    count.add_argument("--ell", type=_positive_int, default=None)
    add_format(count)
    count.set_defaults(func=cmd_count)
    return parser


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Entry point of the `mzv` console script.  Returns 0 on success, 1 when a
    verification fails and 2 on a usage error.
    """
    utils.configure_logging(settings.log_config, settings.log_level)
    if settings.trace_spans:
        utils.configure_tracing()

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"{PROG} {args.command}: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""
mzvsum.verification
~~~~~~~~~~~~~~~~~~~

This module runs the verification suites behind `mzv verify`.  Each suite
compares two independent computations of the same quantity and returns a
Report with one CheckRecord per comparison:

* symbolic suites compare word polynomials term by term;
* exact suites compare big integers;
* numeric suites compare truncated nested sums within an absolute tolerance.
"""

import enum
import logging
import random
import typing

from opentelemetry import trace

from mzvsum.algebra import expansions
from mzvsum.algebra import products
from mzvsum.combinatorics import identities
from mzvsum.models import CheckRecord
from mzvsum.models import EvalConfig
from mzvsum.models import EvalResult
from mzvsum.models import ProductKind
from mzvsum.models import Report
from mzvsum.models import ValueKind
from mzvsum.models import Word
from mzvsum.models import ZetaKind
from mzvsum.numeric import evaluators

LOGGER = logging.getLogger(__name__)
TRACER = trace.get_tracer(__name__)


class Target(enum.Enum):
    """
    Enum for the identities that `mzv verify` can check.
    """

    PROPOSITION = "proposition"
    LEMMA = "lemma"
    MAIN = "main"
    THEOREM3 = "theorem3"
    COROLLARY = "corollary"
    HURWITZ = "hurwitz"
    TVALUES = "tvalues"
    SUMFORMULA = "sumformula"

    def __str__(self):
        """
        Return the value of the enum as a string.
        """
        return self.value


def _kinds(kind: typing.Optional[ProductKind]) -> list[ProductKind]:
    return [kind] if kind else list(ProductKind)


def _record(report: Report, check: CheckRecord) -> None:
    with TRACER.start_as_current_span("verify.check"):
        report.details.append(check)
        if check.passed:
            LOGGER.info("%s: %s passed", report.command, check.name)
        else:
            LOGGER.warning(
                "%s: %s failed, difference %s exceeds %s",
                report.command,
                check.name,
                check.difference,
                check.tolerance,
            )


def verify_proposition(n: int, k: int, kind: typing.Optional[ProductKind] = None) -> Report:
    """
    Compare the closed form expansion of z_n^k with the iterated product,
    exactly and term by term, for every exponent 1..k.
    """
    report = Report(
        command=f"verify {Target.PROPOSITION}",
        inputs={"n": n, "k": k, "kind": str(kind) if kind else "both"},
    )
    with TRACER.start_as_current_span("verify.proposition"):
        for product_kind in _kinds(kind):
            for exponent in range(1, k + 1):
                _record(
                    report,
                    CheckRecord.symbolic(
                        f"{product_kind} n={n} k={exponent}",
                        expansions.expand_power_closed_form(n, exponent, product_kind),
                        products.power(n, exponent, product_kind),
                    ),
                )
    return report


def random_word(rng: random.Random, n: int, max_depth: int, max_multiple: int = 4) -> Word:
    """
    A random word of depth 0..max_depth whose subscripts are n times 1..max_multiple.
    """
    depth = rng.randint(0, max_depth)
    return Word.trusted(tuple(n * rng.randint(1, max_multiple) for _ in range(depth)))


def verify_lemma(
    n: int,
    samples: int = 200,
    max_depth: int = 5,
    seed: int = 0,
    kind: typing.Optional[ProductKind] = None,
) -> Report:
    """
    Compare the positional expansion of w . z_n with the generic product for
    seeded random words w with subscripts in n*Z.
    """
    report = Report(
        command=f"verify {Target.LEMMA}",
        inputs={"n": n, "samples": samples, "max_depth": max_depth, "seed": seed},
    )
    rng = random.Random(seed)
    generator = Word.trusted((n,))
    with TRACER.start_as_current_span("verify.lemma"):
        for _ in range(samples):
            word = random_word(rng, n, max_depth)
            for product_kind in _kinds(kind):
                _record(
                    report,
                    CheckRecord.symbolic(
                        f"{product_kind} w=({','.join(map(str, word.parts))})",
                        products.lemma1_step(word, n, product_kind),
                        products.product(word, generator, product_kind),
                    ),
                )
    return report


def _numeric(
    report: Report, name: str, lhs: EvalResult, rhs: EvalResult, tolerance: float
) -> None:
    _record(report, CheckRecord.numeric(name, lhs.value, rhs.value, tolerance))


def _power_sum_checks(
    report: Report,
    n: int,
    k: int,
    cfg: EvalConfig,
    tolerance: float,
    plain: ZetaKind,
    star: ZetaKind,
    parallel: bool,
    workers: typing.Optional[int],
) -> None:
    """
    Evaluate both closed form expansions of z_n^k and compare them with the
    k-th power of the single value of z_n.
    """
    single = Word.trusted((n,))
    for product_kind, zeta_kind in ((ProductKind.HARMONIC, plain), (ProductKind.STAR, star)):
        expansion = expansions.expand_power_closed_form(n, k, product_kind)
        lhs = evaluators.evaluate_poly(expansion, zeta_kind, cfg, workers, parallel)
        rhs = evaluators.evaluate(single, zeta_kind, cfg).power(k)
        _numeric(report, f"{zeta_kind} n={n} k={k}", lhs, rhs, tolerance)


def verify_main(
    n: int,
    k: int,
    cfg: EvalConfig,
    tolerance: float,
    parallel: bool = False,
    workers: typing.Optional[int] = None,
) -> Report:
    """
    Check zeta(n)^k against the multinomial sum of zeta(n alpha) and the signed
    multinomial sum of zeta-star(n alpha).
    """
    report = Report(
        command=f"verify {Target.MAIN}",
        inputs={"n": n, "k": k, "trunc": cfg.truncation, "tol": tolerance},
    )
    with TRACER.start_as_current_span("verify.main"):
        _power_sum_checks(
            report, n, k, cfg, tolerance, ZetaKind.MZV, ZetaKind.MZSV, parallel, workers
        )
    return report


def verify_hurwitz(
    n: int,
    k: int,
    cfg: EvalConfig,
    tolerance: float,
    parallel: bool = False,
    workers: typing.Optional[int] = None,
) -> Report:
    """
    The same sum formulas for the Hurwitz values at the shift cfg.shift.  At
    x = 1 the Hurwitz values are additionally compared with the plain ones,
    which must agree exactly.
    """
    report = Report(
        command=f"verify {Target.HURWITZ}",
        inputs={"n": n, "k": k, "x": cfg.shift, "trunc": cfg.truncation, "tol": tolerance},
    )
    with TRACER.start_as_current_span("verify.hurwitz"):
        _power_sum_checks(
            report,
            n,
            k,
            cfg,
            tolerance,
            ZetaKind.HURWITZ_MZV,
            ZetaKind.HURWITZ_MZSV,
            parallel,
            workers,
        )
        if cfg.shift == 1.0:
            for alpha in expansions.compositions(k):
                word = alpha.scaled(n)
                for hurwitz, plain in (
                    (evaluators.hurwitz_mzv, evaluators.mzv),
                    (evaluators.hurwitz_mzsv, evaluators.mzsv),
                ):
                    _numeric(
                        report,
                        f"{hurwitz.__name__} = {plain.__name__} at x=1 "
                        f"({','.join(map(str, word.parts))})",
                        hurwitz(word, cfg),
                        plain(word, cfg),
                        0.0,
                    )
    return report


def verify_tvalues(
    n: int,
    k: int,
    cfg: EvalConfig,
    tolerance: float,
    parallel: bool = False,
    workers: typing.Optional[int] = None,
) -> Report:
    """
    Check t(n)^k against the multinomial sums of t-values and t-star values,
    and the t-values of every word n*alpha against the direct odd
    denominator sums.
    """
    report = Report(
        command=f"verify {Target.TVALUES}",
        inputs={"n": n, "k": k, "trunc": cfg.truncation, "tol": tolerance},
    )
    with TRACER.start_as_current_span("verify.tvalues"):
        _power_sum_checks(
            report, n, k, cfg, tolerance, ZetaKind.T, ZetaKind.T_STAR, parallel, workers
        )
        for alpha in expansions.compositions(k):
            word = alpha.scaled(n)
            for value_kind in ValueKind:
                _numeric(
                    report,
                    f"t {value_kind} direct ({','.join(map(str, word.parts))})",
                    evaluators.t_value(word, value_kind, cfg),
                    evaluators.t_value_direct(word, value_kind, cfg),
                    tolerance,
                )
    return report


def verify_theorem3(k: int, ell: typing.Optional[int] = None) -> Report:
    """
    Compare F(k) with the Delannoy weighted double sum, exactly, for the
    given split or for every 1 <= ell < k.
    """
    if k < 2:
        raise ValueError(f"Invalid k: {k}, the split identity needs k >= 2")
    splits = [ell] if ell is not None else list(range(1, k))
    report = Report(
        command=f"verify {Target.THEOREM3}",
        inputs={"k": k, "ell": ell if ell is not None else "all"},
    )
    with TRACER.start_as_current_span("verify.theorem3"):
        for split in splits:
            check = identities.verify_theorem3(k, split)
            _record(report, CheckRecord.exact(f"k={k} ell={split}", check.lhs, check.rhs))
    return report


def verify_corollary(k: int) -> Report:
    """
    Compare F(2j) with the balanced double sum for every j in 1..k.
    """
    report = Report(command=f"verify {Target.COROLLARY}", inputs={"k": k})
    with TRACER.start_as_current_span("verify.corollary"):
        for j in range(1, k + 1):
            check = identities.verify_corollary(j)
            _record(report, CheckRecord.exact(f"k={j}", check.lhs, check.rhs))
    return report


def verify_sum_formula(weight: int, depth: int, cfg: EvalConfig, tolerance: float) -> Report:
    """
    Check the classical sum formula: the zeta values of all admissible
    compositions of the given weight and depth add up to zeta(weight).
    """
    if not 1 <= depth < weight:
        raise ValueError(
            f"Invalid sum formula: expected 1 <= depth < weight, got depth={depth}, "
            f"weight={weight}"
        )
    report = Report(
        command=f"verify {Target.SUMFORMULA}",
        inputs={"weight": weight, "depth": depth, "trunc": cfg.truncation, "tol": tolerance},
    )
    with TRACER.start_as_current_span("verify.sumformula"):
        total = EvalResult(value=0.0, tail_bound=0.0)
        for alpha in expansions.compositions_of_depth(weight, depth):
            if alpha.is_admissible():
                total = total + evaluators.mzv(alpha, cfg)
        _numeric(
            report,
            f"weight={weight} depth={depth}",
            total,
            evaluators.mzv(Word.trusted((weight,)), cfg),
            tolerance,
        )
    return report

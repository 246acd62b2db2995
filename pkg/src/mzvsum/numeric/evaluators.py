"""
mzvsum.numeric.evaluators
~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains the floating point evaluation of truncated nested sums

    sum over b_{k_1}^{-a_1} ... b_{k_r}^{-a_r},   k_1 < ... < k_r  (or <=)

for the bases b_i = i + x (Hurwitz, i = 0..N-1), which covers the multiple
zeta values (x = 1), the Hurwitz values and, with b_i = 2i + 1, the multiple
t-values.

Every series is computed with a prefix sum dynamic program.  Layer j holds
P_j(m), the depth j sum whose largest index is at most m, so the layer is one
pass over the indices and a depth r value costs O(r * N) operations.
"""

import concurrent.futures
import itertools
import logging
import typing

from opentelemetry import trace

from mzvsum.models import Composition
from mzvsum.models import EvalConfig
from mzvsum.models import EvalResult
from mzvsum.models import InadmissibleError
from mzvsum.models import ValueKind
from mzvsum.models import Word
from mzvsum.models import WordPoly
from mzvsum.models import ZetaKind

from .summation import CompensatedSum
from .summation import running_sums

LOGGER = logging.getLogger(__name__)
TRACER = trace.get_tracer(__name__)

# safety factor applied to the integral comparison tail estimate
TAIL_SAFETY = 2.0

CompositionLike = typing.Union[Composition, typing.Sequence[int]]


def _as_composition(alpha: CompositionLike) -> Composition:
    if isinstance(alpha, Composition):
        return alpha
    return Composition(parts=tuple(alpha))


def _check_admissible(alpha: Composition) -> None:
    if not alpha.depth or not alpha.is_admissible():
        raise InadmissibleError(alpha)


def _nested_sum(
    parts: typing.Sequence[int], bases: typing.Sequence[float], step: float, strict: bool
) -> EvalResult:
    """
    Evaluate the nested sum of parts over the given increasing bases.

    The tail estimate bounds the outermost sum beyond the last base by the
    integral of (b + step*t)^(-a) times the inner depth r-1 sum at N, with
    the TAIL_SAFETY factor.
    """
    with TRACER.start_as_current_span("evaluate.nested_sum"):
        prefix: typing.Optional[list[float]] = None
        inner = 1.0
        for a in parts:
            powers = [b**-a for b in bases]
            if prefix is None:
                terms = powers
            elif strict:
                terms = [0.0, *(w * p for w, p in zip(powers[1:], prefix))]
            else:
                terms = [w * p for w, p in zip(powers, prefix)]
            inner = prefix[-1] if prefix is not None else 1.0
            prefix = running_sums(terms)
        assert prefix is not None, "nested sum needs at least one part"
        last = parts[-1]
        tail = TAIL_SAFETY * inner * bases[-1] ** (1 - last) / (step * (last - 1))
        return EvalResult(value=prefix[-1], tail_bound=tail)


def _hurwitz(
    alpha: CompositionLike,
    cfg: typing.Optional[EvalConfig],
    strict: bool,
    x: typing.Optional[float] = None,
) -> EvalResult:
    alpha = _as_composition(alpha)
    _check_admissible(alpha)
    cfg = cfg or EvalConfig()
    shift = cfg.shift if x is None else x
    if shift <= 0:
        raise ValueError(f"Invalid shift: {shift}, expected a positive real")
    LOGGER.debug(
        "nested sum %s strict=%s N=%d x=%s", alpha.parts, strict, cfg.truncation, shift
    )
    bases = [i + shift for i in range(cfg.truncation)]
    return _nested_sum(alpha.parts, bases, 1.0, strict)


def mzv(alpha: CompositionLike, cfg: typing.Optional[EvalConfig] = None) -> EvalResult:
    """
    Returns the truncated multiple zeta value, the sum of
    k_1^{-a_1} ... k_r^{-a_r} over 1 <= k_1 < ... < k_r <= N.

    :param alpha: An admissible composition (last part >= 2).
    :param cfg: The truncation; the shift is ignored.
    :raises InadmissibleError: when the series diverges.
    """
    return _hurwitz(alpha, cfg, strict=True, x=1.0)


def mzsv(alpha: CompositionLike, cfg: typing.Optional[EvalConfig] = None) -> EvalResult:
    """
    Returns the truncated multiple zeta-star value, indices 1 <= k_1 <= ... <= k_r <= N.
    """
    return _hurwitz(alpha, cfg, strict=False, x=1.0)


def hurwitz_mzv(alpha: CompositionLike, cfg: typing.Optional[EvalConfig] = None) -> EvalResult:
    """
    Returns the truncated multiple Hurwitz zeta value, the sum of
    (k_1 + x)^{-a_1} ... (k_r + x)^{-a_r} over 0 <= k_1 < ... < k_r <= N - 1.
    At x = 1 this is exactly `mzv` at the same truncation.
    """
    return _hurwitz(alpha, cfg, strict=True)


def hurwitz_mzsv(alpha: CompositionLike, cfg: typing.Optional[EvalConfig] = None) -> EvalResult:
    """
    Returns the truncated multiple Hurwitz zeta-star value, indices
    0 <= k_1 <= ... <= k_r <= N - 1.
    """
    return _hurwitz(alpha, cfg, strict=False)


def t_value(
    alpha: CompositionLike,
    kind: ValueKind = ValueKind.PLAIN,
    cfg: typing.Optional[EvalConfig] = None,
) -> EvalResult:
    """
    Returns the multiple t-value (or t-star value) as 2^{-|alpha|} times the
    Hurwitz value at x = 1/2.
    """
    alpha = _as_composition(alpha)
    result = _hurwitz(alpha, cfg, strict=kind is ValueKind.PLAIN, x=0.5)
    return result.scaled(2.0**-alpha.weight)


def t_value_direct(
    alpha: CompositionLike,
    kind: ValueKind = ValueKind.PLAIN,
    cfg: typing.Optional[EvalConfig] = None,
) -> EvalResult:
    """
    Returns the multiple t-value summed directly over odd denominators,
    (2k_1 - 1)^{-a_1} ... (2k_r - 1)^{-a_r} with 1 <= k_1 < ... < k_r <= N
    (<= for the star variant).
    """
    alpha = _as_composition(alpha)
    _check_admissible(alpha)
    cfg = cfg or EvalConfig()
    bases = [2.0 * i + 1.0 for i in range(cfg.truncation)]
    return _nested_sum(alpha.parts, bases, 2.0, strict=kind is ValueKind.PLAIN)


EVALUATORS: dict[ZetaKind, typing.Callable[..., EvalResult]] = {
    ZetaKind.MZV: mzv,
    ZetaKind.MZSV: mzsv,
    ZetaKind.HURWITZ_MZV: hurwitz_mzv,
    ZetaKind.HURWITZ_MZSV: hurwitz_mzsv,
    ZetaKind.T: lambda alpha, cfg=None: t_value(alpha, ValueKind.PLAIN, cfg),
    ZetaKind.T_STAR: lambda alpha, cfg=None: t_value(alpha, ValueKind.STAR, cfg),
}


def evaluate(
    alpha: CompositionLike, kind: ZetaKind, cfg: typing.Optional[EvalConfig] = None
) -> EvalResult:
    """
    Evaluate a single composition with the evaluator for kind.  The empty
    composition evaluates to 1 with no truncation error.
    """
    alpha = _as_composition(alpha)
    if not alpha.depth:
        return EvalResult(value=1.0, tail_bound=0.0)
    return EVALUATORS[kind](alpha, cfg)


def evaluate_poly(
    p: WordPoly,
    kind: ZetaKind,
    cfg: typing.Optional[EvalConfig] = None,
    workers: typing.Optional[int] = None,
    parallel: bool = False,
) -> EvalResult:
    """
    Evaluate a word polynomial linearly: the sum of coeff * eval(word), with
    tail estimate sum |coeff| * tail(word).

    :param p: A polynomial whose words are all admissible.
    :param kind: Which nested series the words denote.
    :param cfg: The truncation and shift.
    :param workers: The number of worker processes when parallel is set.
    :param parallel: Evaluate the words in a process pool.  Results are
        combined in canonical word order regardless of completion order.
    :raises InadmissibleError: naming the first inadmissible word.
    """
    cfg = cfg or EvalConfig()
    terms = p.terms()
    for word, _ in terms:
        if word.depth and not word.is_admissible():
            raise InadmissibleError(word)
    words: list[Word] = [w for w, _ in terms]
    LOGGER.debug("evaluating %d words as %s with N=%d", len(words), kind, cfg.truncation)
    if parallel and len(words) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(evaluate, words, itertools.repeat(kind), itertools.repeat(cfg))
            )
    else:
        results = [evaluate(w, kind, cfg) for w in words]
    value = CompensatedSum()
    tail = CompensatedSum()
    for (_, coeff), result in zip(terms, results):
        value.add(float(coeff) * result.value)
        tail.add(abs(float(coeff)) * result.tail_bound)
    return EvalResult(value=value.value, tail_bound=tail.value)

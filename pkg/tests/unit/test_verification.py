"""
unit.test_verification.py
~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains the unit tests for the mzvsum.verification module.
"""

import random

import pytest

from mzvsum import verification
from mzvsum.models import EvalConfig
from mzvsum.models import InadmissibleError
from mzvsum.models import ProductKind
from mzvsum.models import Status


@pytest.fixture
def cfg():
    return EvalConfig(truncation=20_000)


class TestTarget:
    def test_values(self):
        assert [str(t) for t in verification.Target] == [
            "proposition",
            "lemma",
            "main",
            "theorem3",
            "corollary",
            "hurwitz",
            "tvalues",
            "sumformula",
        ]


class TestVerifyProposition:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_passes(self, n):
        report = verification.verify_proposition(n, 6)
        assert report.status == Status.PASS
        assert len(report.details) == 12
        assert report.command == "verify proposition"
        assert report.inputs == {"n": n, "k": 6, "kind": "both"}

    def test_single_kind(self):
        report = verification.verify_proposition(3, 4, ProductKind.STAR)
        assert report.status == Status.PASS
        assert [c.name for c in report.details] == [f"star n=3 k={k}" for k in range(1, 5)]
        assert report.details[-1].difference == "0"


class TestVerifyLemma:
    def test_random_word(self):
        rng = random.Random(3)
        for _ in range(50):
            word = verification.random_word(rng, 3, 5)
            assert word.depth <= 5
            assert all(s % 3 == 0 and 3 <= s <= 12 for s in word.parts)

    def test_passes(self):
        report = verification.verify_lemma(2, samples=200)
        assert report.status == Status.PASS
        assert len(report.details) == 400

    def test_deterministic(self):
        first = verification.verify_lemma(3, samples=20, seed=7)
        second = verification.verify_lemma(3, samples=20, seed=7)
        assert first.to_json() == second.to_json()


class TestVerifyMain:
    def test_passes(self, cfg):
        report = verification.verify_main(2, 2, cfg, 1e-3)
        assert report.status == Status.PASS
        assert [c.name for c in report.details] == ["mzv n=2 k=2", "mzsv n=2 k=2"]

    def test_requires_admissible_expansion(self, cfg):
        with pytest.raises(InadmissibleError):
            verification.verify_main(1, 2, cfg, 1e-3)


class TestVerifyHurwitz:
    @pytest.mark.parametrize("x", [0.5, 1.0, 1.5])
    def test_passes(self, x):
        cfg = EvalConfig(truncation=20_000, shift=x)
        report = verification.verify_hurwitz(2, 2, cfg, 1e-3)
        assert report.status == Status.PASS
        assert report.inputs["x"] == x

    def test_plain_agreement_at_one(self, cfg):
        report = verification.verify_hurwitz(2, 3, cfg, 1e-3)
        exact = [c for c in report.details if "at x=1" in c.name]
        # two kinds for each of the four compositions of 3
        assert len(exact) == 8
        assert all(c.difference == "0" for c in exact)


class TestVerifyTValues:
    def test_passes(self, cfg):
        report = verification.verify_tvalues(2, 2, cfg, 1e-3)
        assert report.status == Status.PASS
        assert len(report.details) == 2 + 2 * 2


class TestVerifyTheorem3:
    def test_single_split(self):
        report = verification.verify_theorem3(10, 4)
        assert report.status == Status.PASS
        (check,) = report.details
        assert check.lhs == check.rhs == "102247563"

    def test_every_split(self):
        report = verification.verify_theorem3(14)
        assert report.status == Status.PASS
        assert len(report.details) == 13
        assert report.inputs == {"k": 14, "ell": "all"}

    def test_invalid_split(self):
        with pytest.raises(ValueError):
            verification.verify_theorem3(4, 4)

    @pytest.mark.parametrize("k", [0, 1])
    def test_too_small_to_split(self, k):
        with pytest.raises(ValueError, match="k >= 2"):
            verification.verify_theorem3(k)


class TestVerifyCorollary:
    def test_passes(self):
        report = verification.verify_corollary(7)
        assert report.status == Status.PASS
        assert [c.name for c in report.details] == [f"k={k}" for k in range(1, 8)]


class TestVerifySumFormula:
    @pytest.mark.parametrize("weight, depth", [(3, 1), (3, 2), (4, 2), (5, 3)])
    def test_passes(self, weight, depth):
        cfg = EvalConfig(truncation=50_000)
        report = verification.verify_sum_formula(weight, depth, cfg, 1e-3)
        assert report.status == Status.PASS

    @pytest.mark.parametrize("weight, depth", [(3, 3), (3, 0), (2, 4)])
    def test_invalid(self, weight, depth, cfg):
        with pytest.raises(ValueError):
            verification.verify_sum_formula(weight, depth, cfg, 1e-3)

"""
mzvsum.models.word
~~~~~~~~~~~~~~~~~~

This module contains the value types of the harmonic algebra: compositions, the
words z_{s_1}z_{s_2}...z_{s_r} they encode and finite rational linear
combinations of those words.
"""

import enum
import fractions
import typing

import pydantic

Scalar = typing.Union[int, fractions.Fraction]


class ProductKind(enum.Enum):
    """
    Enum for the two quasi-shuffle products on words.
    """

    HARMONIC = "harmonic"
    STAR = "star"

    def __str__(self):
        """
        Return the value of the enum as a string.
        """
        return self.value

    @property
    def merge_sign(self) -> int:
        """
        The sign carried by the merged letter z_{j+k} in the product rule.
        """
        return 1 if self is ProductKind.HARMONIC else -1


class Composition(pydantic.BaseModel):
    """
    An ordered tuple of positive integers.  The same value is used as the
    argument list of a multiple zeta value, as an exponent pattern and as the
    word z_{s_1}...z_{s_r} of the subscripts.  The empty composition is the
    empty word.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    parts: typing.Tuple[pydantic.PositiveInt, ...] = ()

    @classmethod
    def of(cls, *parts: int) -> typing.Self:
        """
        Build a composition from its parts, e.g. ``Composition.of(2, 3)``.
        """
        return cls(parts=parts)

    @classmethod
    def trusted(cls, parts: typing.Tuple[int, ...]) -> typing.Self:
        """
        Build a composition without validation.  Only for tuples produced by
        the algebra itself, where every part is already known to be positive.
        """
        return cls.model_construct(parts=parts)

    @classmethod
    def parse(cls, text: str) -> typing.Self:
        """
        Parse a comma separated list of positive integers, such as "2,3" or
        " 2 , 3 ".  Whitespace is ignored.
        """
        tokens = [t.strip() for t in text.split(",")]
        if any(not t for t in tokens):
            raise ValueError(f"Invalid composition: {text!r}")
        try:
            parts = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"Invalid composition: {text!r}") from None
        try:
            return cls(parts=parts)
        except pydantic.ValidationError:
            raise ValueError(f"Invalid composition: {text!r}") from None

    @classmethod
    def from_xy(cls, text: str) -> typing.Self:
        """
        Decode a word over the alphabet {x, y} where z_s = x^(s-1) y.  Words
        that do not end in y lie outside the subalgebra and are rejected.
        """
        if set(text) - {"x", "y"}:
            raise ValueError(f"Invalid letters in word: {text!r}")
        if text and not text.endswith("y"):
            raise ValueError(f"Word does not end in y: {text!r}")
        return cls(parts=tuple(len(block) + 1 for block in text.split("y")[:-1]))

    @property
    def weight(self) -> int:
        """
        The sum of the parts.
        """
        return sum(self.parts)

    @property
    def depth(self) -> int:
        """
        The number of parts.
        """
        return len(self.parts)

    def is_admissible(self) -> bool:
        """
        Whether the zeta series of this composition converges, ie the last
        part is at least 2.  The empty word is admissible.
        """
        return not self.parts or self.parts[-1] >= 2

    def scaled(self, n: int) -> typing.Self:
        """
        Multiply every part by n, mapping alpha to n*alpha.
        """
        if n < 1:
            raise ValueError(f"Invalid scale factor: {n}")
        return self.trusted(tuple(n * p for p in self.parts))

    def to_xy(self) -> str:
        """
        Encode the word over the alphabet {x, y}.
        """
        return "".join("x" * (s - 1) + "y" for s in self.parts)

    def sort_key(self) -> typing.Tuple[int, int, typing.Tuple[int, ...]]:
        """
        The canonical ordering key: weight ascending, then deeper words first,
        then lexicographic by parts.
        """
        return (self.weight, -self.depth, self.parts)

    def __str__(self):
        """
        Render the word as "z2 z3", or "1" for the empty word.
        """
        if not self.parts:
            return "1"
        return " ".join(f"z{s}" for s in self.parts)


Word = Composition


def repeat(a: int, k: int) -> Composition:
    """
    The composition {a}^k, ie k repetitions of a.
    """
    if k < 0:
        raise ValueError(f"Invalid repetition count: {k}")
    return Composition(parts=(a,) * k)


class WordPoly:
    """
    A finite linear combination of words with exact rational coefficients.
    Values are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: typing.Union[
            typing.Mapping[Word, Scalar], typing.Iterable[typing.Tuple[Word, Scalar]]
        ] = (),
    ):
        items = terms.items() if isinstance(terms, typing.Mapping) else terms
        collected: dict[Word, fractions.Fraction] = {}
        for word, coeff in items:
            collected[word] = collected.get(word, 0) + fractions.Fraction(coeff)
        self._terms: dict[Word, fractions.Fraction] = {
            w: c for w, c in collected.items() if c != 0
        }

    @classmethod
    def zero(cls) -> "WordPoly":
        """
        The empty combination.
        """
        return cls()

    @classmethod
    def unit(cls) -> "WordPoly":
        """
        The polynomial 1 times the empty word.
        """
        return cls({Word.trusted(()): 1})

    @classmethod
    def monomial(cls, word: Word, coeff: Scalar = 1) -> "WordPoly":
        """
        A single word with the given coefficient.
        """
        return cls({word: coeff})

    @classmethod
    def from_counts(cls, counts: typing.Mapping[typing.Tuple[int, ...], Scalar]) -> "WordPoly":
        """
        Build a polynomial from raw subscript tuples, as produced by the product
        recursions.
        """
        return cls((Word.trusted(parts), c) for parts, c in counts.items())

    @classmethod
    def from_records(cls, records: typing.Iterable[dict]) -> "WordPoly":
        """
        Parse the serialized form produced by `to_records`.
        """
        terms = []
        for record in records:
            coeff = record["coeff"]
            terms.append(
                (
                    Word(parts=tuple(record["word"])),
                    fractions.Fraction(int(coeff["num"]), int(coeff["den"])),
                )
            )
        return cls(terms)

    def coefficient(self, word: Word) -> fractions.Fraction:
        """
        The coefficient of word, zero when absent.
        """
        return self._terms.get(word, fractions.Fraction(0))

    def terms(self) -> list[typing.Tuple[Word, fractions.Fraction]]:
        """
        The (word, coefficient) pairs in canonical word order.
        """
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def words(self) -> list[Word]:
        """
        The words in canonical order.
        """
        return [w for w, _ in self.terms()]

    def coefficient_sum(self) -> fractions.Fraction:
        """
        The sum of all coefficients.
        """
        return sum(self._terms.values(), fractions.Fraction(0))

    def depth_sums(self) -> dict[int, fractions.Fraction]:
        """
        The sum of the coefficients of the words of each depth.
        """
        sums: dict[int, fractions.Fraction] = {}
        for word, coeff in self._terms.items():
            sums[word.depth] = sums.get(word.depth, fractions.Fraction(0)) + coeff
        return dict(sorted(sums.items()))

    def weights(self) -> set[int]:
        """
        The set of word weights present.
        """
        return {w.weight for w in self._terms}

    def is_homogeneous(self) -> bool:
        """
        Whether all words share one weight.
        """
        return len(self.weights()) <= 1

    def to_records(self) -> list[dict]:
        """
        Serialize into records of the form
        {"word": [s_1, ..., s_r], "coeff": {"num": "2", "den": "1"}}.
        """
        return [
            {
                "word": list(word.parts),
                "coeff": {"num": str(coeff.numerator), "den": str(coeff.denominator)},
            }
            for word, coeff in self.terms()
        ]

    def __add__(self, other: "WordPoly") -> "WordPoly":
        """
        Termwise sum.
        """
        if not isinstance(other, WordPoly):
            return NotImplemented
        return WordPoly([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "WordPoly":
        """
        Negate every coefficient.
        """
        return WordPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        """
        Termwise difference.
        """
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "WordPoly":
        """
        Multiply by a rational scalar.
        """
        if not isinstance(scalar, (int, fractions.Fraction)):
            return NotImplemented
        return WordPoly({w: c * scalar for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        """
        Term by term coefficient equality.
        """
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        """
        Hash of the term map.
        """
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        """
        The number of stored terms.
        """
        return len(self._terms)

    def __bool__(self) -> bool:
        """
        False for the zero combination.
        """
        return bool(self._terms)

    def __iter__(self) -> typing.Iterator[Word]:
        """
        Iterate over the words in canonical order.
        """
        return iter(self.words())

    def __contains__(self, word: object) -> bool:
        """
        Whether word has a nonzero coefficient.
        """
        return word in self._terms

    def __str__(self):
        """
        Render as "2*z2 z2 + 1*z4", terms in canonical order.
        """
        if not self._terms:
            return "0"
        out = []
        for index, (word, coeff) in enumerate(self.terms()):
            if index == 0:
                out.append(f"{coeff}*{word}")
            elif coeff < 0:
                out.append(f" - {-coeff}*{word}")
            else:
                out.append(f" + {coeff}*{word}")
        return "".join(out)

    def __repr__(self):
        """
        Debug representation using the text rendering.
        """
        return f"WordPoly({str(self)!r})"

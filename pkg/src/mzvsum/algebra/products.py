"""
mzvsum.algebra.products
~~~~~~~~~~~~~~~~~~~~~~~

This module contains the harmonic product * and the star product on words
z_{s_1}...z_{s_r}, their bilinear extension to word polynomials, powers of a
single generator z_n and the positional expansion of w * z_n for words whose
subscripts are multiples of n.

Both products follow the recursive rule

    z_j u . z_k v = z_j (u . z_k v) + z_k (z_j u . v) + sign * z_{j+k} (u . v)

with sign +1 for the harmonic product and -1 for the star product, and the
empty word as unit.
"""

import collections
import typing

from mzvsum.models import ProductKind
from mzvsum.models import Word
from mzvsum.models import WordPoly

Counts = typing.Dict[typing.Tuple[int, ...], int]


def _quasi_shuffle(u: typing.Tuple[int, ...], v: typing.Tuple[int, ...], sign: int) -> Counts:
    """
    Structural recursion on the first letters of u and v.  Terminates since
    depth(u) + depth(v) strictly decreases in every branch.
    """
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    j, k = u[0], v[0]
    result: Counts = collections.defaultdict(int)
    for word, count in _quasi_shuffle(u[1:], v, sign).items():
        result[(j,) + word] += count
    for word, count in _quasi_shuffle(u, v[1:], sign).items():
        result[(k,) + word] += count
    for word, count in _quasi_shuffle(u[1:], v[1:], sign).items():
        result[(j + k,) + word] += sign * count
    return result


def product(u: Word, v: Word, kind: ProductKind) -> WordPoly:
    """
    Returns the product of two words under the chosen quasi-shuffle product.

    :param u: The left word.
    :param v: The right word.
    :param kind: HARMONIC for *, STAR for the star product.
    :return: A word polynomial whose words all have weight |u| + |v|.
    """
    return WordPoly.from_counts(_quasi_shuffle(u.parts, v.parts, kind.merge_sign))


def harmonic_product(u: Word, v: Word) -> WordPoly:
    """
    Returns the harmonic (stuffle) product u * v.
    """
    return product(u, v, ProductKind.HARMONIC)


def star_product(u: Word, v: Word) -> WordPoly:
    """
    Returns the star product of u and v, whose merge terms carry a minus sign.
    """
    return product(u, v, ProductKind.STAR)


def poly_product(a: WordPoly, b: WordPoly, kind: ProductKind) -> WordPoly:
    """
    Returns the bilinear extension of the word product to word polynomials.
    """
    sign = kind.merge_sign
    terms: list[typing.Tuple[Word, typing.Any]] = []
    for u, cu in a.terms():
        for v, cv in b.terms():
            scale = cu * cv
            for parts, count in _quasi_shuffle(u.parts, v.parts, sign).items():
                terms.append((Word.trusted(parts), scale * count))
    return WordPoly(terms)


def power(n: int, k: int, kind: ProductKind) -> WordPoly:
    """
    Returns the k-fold product z_n . z_n . ... . z_n.  k = 0 gives the unit
    polynomial.
    """
    if n < 1:
        raise ValueError(f"Invalid generator subscript: {n}")
    if k < 0:
        raise ValueError(f"Invalid exponent: {k}")
    generator = WordPoly.monomial(Word.trusted((n,)))
    result = WordPoly.unit()
    for _ in range(k):
        result = poly_product(result, generator, kind)
    return result


def lemma1_step(w: Word, n: int, kind: ProductKind) -> WordPoly:
    """
    Returns w . z_n built positionally for a word w = z_{n a_1}...z_{n a_r}:
    the r + 1 words with z_n inserted in each gap, plus (harmonic) or minus
    (star) the r words with one subscript raised by n.

    :param w: A word whose subscripts are all multiples of n.
    :param n: The generator subscript.
    :param kind: The product to expand.
    :return: The expansion, equal to product(w, z_n, kind).
    """
    if n < 1:
        raise ValueError(f"Invalid generator subscript: {n}")
    parts = w.parts
    if any(s % n for s in parts):
        raise ValueError(f"Invalid word {w}: subscripts must be multiples of {n}")
    sign = kind.merge_sign
    terms: Counts = collections.defaultdict(int)
    for i in range(len(parts) + 1):
        terms[parts[:i] + (n,) + parts[i:]] += 1
    for i in range(len(parts)):
        terms[parts[:i] + (parts[i] + n,) + parts[i + 1 :]] += sign
    return WordPoly.from_counts(terms)

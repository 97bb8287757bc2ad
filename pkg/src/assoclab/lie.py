"""Free Lie algebra bases via Lyndon words.

A Lyndon word is strictly smaller than all of its proper suffixes; the
standard bracketings of the Lyndon words of length d form a basis of the
degree-d part of the free Lie algebra.
"""

from functools import lru_cache

from .rings import RATIONALS
from .series import Series


def lyndon_words(num_letters, length):
    """All Lyndon words of exactly the given length, lexicographically."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            out.append(tuple(w))
        while len(w) < length:
            w.append(w[-m])
        while w and w[-1] == num_letters - 1:
            w.pop()
    return [u for u in out if len(u) == length]


def standard_factorization(word):
    """Split a Lyndon word as u.v with v its smallest proper suffix."""
    best = 1
    for i in range(2, len(word)):
        if word[i:] < word[best:]:
            best = i
    return word[:best], word[best:]


@lru_cache(maxsize=None)
def bracketing(word):
    """Standard bracketing of a Lyndon word, expanded as word -> int."""
    if len(word) == 1:
        return {word: 1}
    u, v = standard_factorization(word)
    a, b = bracketing(u), bracketing(v)
    out = {}
    for x, m in a.items():
        for y, n in b.items():
            out[x + y] = out.get(x + y, 0) + m * n
            out[y + x] = out.get(y + x, 0) - m * n
    return {w: c for w, c in out.items() if c}


def lie_basis(alphabet, degree, trunc, ring=RATIONALS):
    """The Lyndon basis of the degree-d free Lie part, as Series elements.

    Only unweighted alphabets are meaningful here (word length = degree).
    """
    out = []
    for lw in lyndon_words(len(alphabet), degree):
        terms = {w: ring.embed(c) for w, c in bracketing(lw).items()}
        out.append((lw, Series(alphabet, trunc, ring, terms, _clean=True)))
    return out


def lie_bracket(a, b):
    return a.mul(b).sub(b.mul(a))

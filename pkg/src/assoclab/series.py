"""Truncated non-commutative formal power series over an exact coefficient ring.

The letters of the alphabet are primitive for the coproduct, which makes
this the shuffle Hopf algebra; the product stored on `Series` itself is
concatenation (the ambient ring multiplication).
"""

from functools import lru_cache

from .rationals import qq, format_rational, parse_rational
from .rings import RATIONALS
from .words import Alphabet, shuffle_words


class AlgebraError(ValueError):
    pass


class AlphabetMismatch(AlgebraError):
    pass


class TruncationMismatch(AlgebraError):
    pass


class ConstantTermError(AlgebraError):
    pass


class Series:
    """Sparse map word -> coefficient, truncated at a fixed total degree."""

    __slots__ = ("alphabet", "trunc", "ring", "terms")

    def __init__(self, alphabet, trunc, ring, terms=None, _clean=False):
        self.alphabet = alphabet
        self.trunc = trunc
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            deg = alphabet.degree
            self.terms = {
                w: c
                for w, c in terms.items()
                if deg(w) <= trunc and not ring.is_zero(c)
            }

    # -- basic queries ------------------------------------------------

    def coefficient(self, word):
        return self.terms.get(word, self.ring.zero)

    def constant_term(self):
        return self.terms.get((), self.ring.zero)

    def support(self):
        return sorted(self.terms, key=self.alphabet.word_key)

    def degree_part(self, d):
        deg = self.alphabet.degree
        return Series(
            self.alphabet,
            self.trunc,
            self.ring,
            {w: c for w, c in self.terms.items() if deg(w) == d},
            _clean=True,
        )

    def truncated(self, n):
        """The same series re-truncated at n <= current truncation."""
        if n > self.trunc:
            raise TruncationMismatch("cannot raise truncation degree")
        deg = self.alphabet.degree
        return Series(
            self.alphabet,
            n,
            self.ring,
            {w: c for w, c in self.terms.items() if deg(w) <= n},
            _clean=True,
        )

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.alphabet == other.alphabet
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __repr__(self):
        parts = []
        for w in self.support()[:8]:
            parts.append("%r: %s" % (self.alphabet.format_word(w), self.terms[w]))
        more = "" if len(self.terms) <= 8 else ", ..."
        return "Series({%s%s}, N=%d)" % (", ".join(parts), more, self.trunc)

    # -- linear structure ---------------------------------------------

    def _check_compatible(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("series live over different alphabets")
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                "truncation degrees differ: %d vs %d" % (self.trunc, other.trunc)
            )

    def add(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        ring = self.ring
        for w, c in other.terms.items():
            s = out.get(w, ring.zero) + c
            if ring.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
        return Series(self.alphabet, self.trunc, ring, out, _clean=True)

    def neg(self):
        return Series(
            self.alphabet,
            self.trunc,
            self.ring,
            {w: -c for w, c in self.terms.items()},
            _clean=True,
        )

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        if self.ring.is_zero(c):
            return Series(self.alphabet, self.trunc, self.ring)
        return Series(
            self.alphabet,
            self.trunc,
            self.ring,
            {w: c * x for w, x in self.terms.items()},
        )

    def scale_q(self, q):
        return self.scale(self.ring.embed(q))

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        return self.mul(other)

    # -- products -----------------------------------------------------

    def mul(self, other):
        """Concatenation product, truncated."""
        self._check_compatible(other)
        ring = self.ring
        deg = self.alphabet.degree
        out = {}
        right = sorted(other.terms.items(), key=lambda it: deg(it[0]))
        for u, a in self.terms.items():
            du = deg(u)
            for v, b in right:
                if du + deg(v) > self.trunc:
                    break
                w = u + v
                s = out.get(w, ring.zero) + a * b
                if ring.is_zero(s):
                    out.pop(w, None)
                else:
                    out[w] = s
        return Series(self.alphabet, self.trunc, ring, out, _clean=True)

    def shuffle_mul(self, other):
        """Shuffle product (sum over interleavings), truncated."""
        self._check_compatible(other)
        ring = self.ring
        deg = self.alphabet.degree
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                if deg(u) + deg(v) > self.trunc:
                    continue
                ab = a * b
                for w, m in shuffle_words(u, v).items():
                    s = out.get(w, ring.zero) + ab * ring.embed(m)
                    if ring.is_zero(s):
                        out.pop(w, None)
                    else:
                        out[w] = s
        return Series(self.alphabet, self.trunc, ring, out, _clean=True)

    # -- exp / log / inverse ------------------------------------------

    def exp(self):
        if not self.ring.is_zero(self.constant_term()):
            raise ConstantTermError("exp needs zero constant term")
        out = one(self.alphabet, self.trunc, self.ring)
        power = out
        for k in range(1, self.trunc + 1):
            power = power.mul(self).scale_q(qq(1, k))
            if power.is_zero():
                break
            out = out.add(power)
        return out

    def log(self):
        if self.constant_term() != self.ring.one:
            raise ConstantTermError("log needs constant term 1")
        u = self.sub(one(self.alphabet, self.trunc, self.ring))
        out = zero(self.alphabet, self.trunc, self.ring)
        power = one(self.alphabet, self.trunc, self.ring)
        for k in range(1, self.trunc + 1):
            power = power.mul(u)
            if power.is_zero():
                break
            out = out.add(power.scale_q(qq(-1 if k % 2 == 0 else 1, k)))
        return out

    def inverse(self):
        """Multiplicative inverse for constant term 1."""
        if self.constant_term() != self.ring.one:
            raise ConstantTermError("inverse needs constant term 1")
        u = one(self.alphabet, self.trunc, self.ring).sub(self)
        out = one(self.alphabet, self.trunc, self.ring)
        power = one(self.alphabet, self.trunc, self.ring)
        for _ in range(self.trunc):
            power = power.mul(u)
            if power.is_zero():
                break
            out = out.add(power)
        return out


class TensorSeries:
    """Sparse table (word, word) -> coefficient with combined degree bound."""

    __slots__ = ("alphabet", "trunc", "ring", "terms")

    def __init__(self, alphabet, trunc, ring, terms=None, _clean=False):
        self.alphabet = alphabet
        self.trunc = trunc
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            deg = alphabet.degree
            self.terms = {
                p: c
                for p, c in terms.items()
                if deg(p[0]) + deg(p[1]) <= trunc and not ring.is_zero(c)
            }

    def coefficient(self, u, v):
        return self.terms.get((u, v), self.ring.zero)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorSeries)
            and self.alphabet == other.alphabet
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def add(self, other):
        out = dict(self.terms)
        ring = self.ring
        for p, c in other.terms.items():
            s = out.get(p, ring.zero) + c
            if ring.is_zero(s):
                out.pop(p, None)
            else:
                out[p] = s
        return TensorSeries(self.alphabet, self.trunc, ring, out, _clean=True)

    def sub(self, other):
        return self.add(other.scale(-self.ring.one))

    def scale(self, c):
        if self.ring.is_zero(c):
            return TensorSeries(self.alphabet, self.trunc, self.ring)
        return TensorSeries(
            self.alphabet,
            self.trunc,
            self.ring,
            {p: c * x for p, x in self.terms.items()},
        )

    def mul(self, other):
        ring = self.ring
        deg = self.alphabet.degree
        out = {}
        for (u1, u2), a in self.terms.items():
            d1 = deg(u1) + deg(u2)
            for (v1, v2), b in other.terms.items():
                if d1 + deg(v1) + deg(v2) > self.trunc:
                    continue
                p = (u1 + v1, u2 + v2)
                s = out.get(p, ring.zero) + a * b
                if ring.is_zero(s):
                    out.pop(p, None)
                else:
                    out[p] = s
        return TensorSeries(self.alphabet, self.trunc, ring, out, _clean=True)


# -- constructors -----------------------------------------------------


def zero(alphabet, trunc, ring=RATIONALS):
    return Series(alphabet, trunc, ring)


def one(alphabet, trunc, ring=RATIONALS):
    return Series(alphabet, trunc, ring, {(): ring.one}, _clean=True)


def letter(alphabet, trunc, name, ring=RATIONALS):
    i = alphabet.index(name)
    return Series(alphabet, trunc, ring, {(i,): ring.one}, _clean=True)


def from_word(alphabet, trunc, word, ring=RATIONALS, coeff=None):
    return Series(alphabet, trunc, ring, {tuple(word): coeff or ring.one})


def tensor_one(alphabet, trunc, ring=RATIONALS):
    return TensorSeries(alphabet, trunc, ring, {((), ()): ring.one}, _clean=True)


class SeriesAlgebra:
    """The free (concatenation) algebra as a substitution target."""

    def __init__(self, alphabet, trunc, ring=RATIONALS):
        self.alphabet = alphabet
        self.trunc = trunc
        self.ring = ring

    def one(self):
        return one(self.alphabet, self.trunc, self.ring)

    def zero(self):
        return zero(self.alphabet, self.trunc, self.ring)

    def letter(self, name):
        return letter(self.alphabet, self.trunc, name, self.ring)

    def mul(self, a, b):
        return a.mul(b)


# -- Hopf structure ---------------------------------------------------


@lru_cache(maxsize=None)
def _word_coproduct(alphabet, trunc, word):
    """Coproduct of a single word, all letters primitive; word -> pair table."""
    if not word:
        return {((), ()): 1}
    head = word[:-1]
    i = word[-1]
    out = {}
    for (u, v), m in _word_coproduct(alphabet, trunc, head).items():
        for p in ((u + (i,), v), (u, v + (i,))):
            out[p] = out.get(p, 0) + m
    return out


def coproduct(s):
    """Algebra-map extension of letter primitivity, as a TensorSeries."""
    ring = s.ring
    out = {}
    for w, c in s.terms.items():
        for p, m in _word_coproduct(s.alphabet, s.trunc, w).items():
            v = out.get(p, ring.zero) + c * ring.embed(m)
            if ring.is_zero(v):
                out.pop(p, None)
            else:
                out[p] = v
    return TensorSeries(s.alphabet, s.trunc, ring, out, _clean=True)


def tensor_square(s):
    """s (x) s as a TensorSeries."""
    ring = s.ring
    deg = s.alphabet.degree
    out = {}
    for u, a in s.terms.items():
        for v, b in s.terms.items():
            if deg(u) + deg(v) > s.trunc:
                continue
            c = a * b
            if not ring.is_zero(c):
                out[(u, v)] = c
    return TensorSeries(s.alphabet, s.trunc, ring, out, _clean=True)


def _nonempty_word_pairs(alphabet, trunc):
    for d1 in range(1, trunc):
        for u in alphabet.words_of_degree(d1):
            for d2 in range(1, trunc - d1 + 1):
                for v in alphabet.words_of_degree(d2):
                    yield u, v


def is_group_like(s):
    """Delta(phi) == phi (x) phi with constant term 1.

    Both the coproduct test and the equivalent shuffle coefficient test
    are evaluated; disagreement is a bug and raises.
    """
    ring = s.ring
    by_coproduct = s.constant_term() == ring.one and coproduct(s) == tensor_square(s)
    by_shuffle = s.constant_term() == ring.one
    if by_shuffle:
        for u, v in _nonempty_word_pairs(s.alphabet, s.trunc):
            lhs = s.coefficient(u) * s.coefficient(v)
            rhs = ring.zero
            for w, m in shuffle_words(u, v).items():
                rhs = rhs + s.coefficient(w) * ring.embed(m)
            if lhs != rhs:
                by_shuffle = False
                break
    if by_coproduct != by_shuffle:
        raise AssertionError("group-like tests disagree")
    return by_coproduct


def is_lie(s):
    """Primitivity up to the truncation degree, with the Friedrichs cross-check."""
    ring = s.ring
    if not ring.is_zero(s.constant_term()):
        return False
    expected = TensorSeries(
        s.alphabet,
        s.trunc,
        ring,
        {
            **{((), w): c for w, c in s.terms.items() if w},
            **{(w, ()): c for w, c in s.terms.items() if w},
        },
    )
    by_coproduct = coproduct(s) == expected
    by_friedrichs = True
    for u, v in _nonempty_word_pairs(s.alphabet, s.trunc):
        c = ring.zero
        for w, m in shuffle_words(u, v).items():
            c = c + s.coefficient(w) * ring.embed(m)
        if not ring.is_zero(c):
            by_friedrichs = False
            break
    if by_coproduct != by_friedrichs:
        raise AssertionError("primitivity tests disagree")
    return by_coproduct


# -- homomorphisms ----------------------------------------------------


def substitute(s, images, algebra):
    """Apply the algebra homomorphism sending letter i to images[i].

    `algebra` provides one() and mul(); the images must have zero constant
    term so that grading (and hence truncation) is respected.
    """
    if len(images) != len(s.alphabet):
        raise AlgebraError("one image per alphabet letter required")
    for img in images:
        ct = img.constant_term()
        if not img.ring.is_zero(ct):
            raise ConstantTermError("letter image must have zero constant term")
    cache = {(): algebra.one()}

    def image(word):
        try:
            return cache[word]
        except KeyError:
            val = algebra.mul(image(word[:-1]), images[word[-1]])
            cache[word] = val
            return val

    out = algebra.one().scale(s.ring.zero)
    for w in s.support():
        out = out.add(image(w).scale(s.terms[w]))
    return out


def abelianize(s, comm_ring=None):
    """Send each word to the commutative monomial of its letter counts.

    Only two-letter alphabets are supported (the target is QQ[[x0, x1]]).
    """
    from .rings import CommSeriesRing, CommSeries

    if len(s.alphabet) != 2:
        raise AlgebraError("abelianization targets two commuting variables")
    ring = comm_ring or CommSeriesRing(s.trunc)
    out = {}
    for w, c in s.terms.items():
        m = (sum(1 for i in w if i == 0), sum(1 for i in w if i == 1))
        out[m] = out.get(m, qq(0)) + c
    return CommSeries(out, ring.trunc)


# -- text format ------------------------------------------------------


def to_text(s):
    """Series text format; exact round-trip, rational coefficients only."""
    lines = [
        "alphabet: %s" % " ".join(s.alphabet.names),
        "degree: %d" % s.trunc,
    ]
    for w in s.support():
        lines.append('"%s" %s' % (s.alphabet.format_word(w), format_rational(s.terms[w])))
    return "\n".join(lines) + "\n"


def from_text(text, weights=None):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("alphabet:") or not lines[1].startswith("degree:"):
        raise AlgebraError("malformed series file: missing header")
    names = tuple(lines[0].split(":", 1)[1].split())
    if weights is None and all(n[:1] == "Y" and n[1:].isdigit() for n in names):
        weights = tuple(int(n[1:]) for n in names)
    alphabet = Alphabet(names, weights)
    trunc = int(lines[1].split(":", 1)[1])
    terms = {}
    for ln in lines[2:]:
        if not ln.startswith('"'):
            raise AlgebraError("malformed term line: %r" % ln)
        wtext, _, ctext = ln[1:].partition('"')
        terms[alphabet.parse_word(wtext)] = parse_rational(ctext.strip())
    return Series(alphabet, trunc, RATIONALS, terms)

"""Bar-construction elements on the genus-zero moduli spaces.

Bar elements are linear combinations of tensor words in logarithmic
1-forms: a0 = dx/x, a1 = dx/(1-x), b0 = dy/y, b1 = dy/(1-y) and
g = (y dx + x dy)/(1-xy) on the two-variable space, or w0 = dz/z and
w1 = dz/(z-1) on the one-variable space.  Words are stored left to
right, [w_{i_m}|...|w_{i_1}], matching the left-to-right order of the
dual monomials.

Every 1-form is represented exactly as a pair of polynomial numerators
(P, Q) with form = (P dx + Q dy)/D over the common denominator
D = xy(1-x)(1-y)(1-xy), so wedge products and the integrability
condition reduce to polynomial identities.

The l-elements of the one- and two-variable multiple polylogarithms are
built from their differential equations; the pairing with group-like
elements of the five-strand braid enveloping algebra is through the
connection form Omega_5 = X12 dx/x + X23 dx/(x-1) + X45 dy/y
+ X34 dy/(y-1) + X24 (y dx + x dy)/(xy-1), whose dual-basis sign table
is derived from the coordinate expressions at import time.
"""

from .rationals import ONE as Q_ONE, qq
from .words import shuffle_words
from .yside import stuffle_terms

A0, A1, B0, B1, G = range(5)
W0, W1 = range(2)

M05_NAMES = ("a0", "a1", "b0", "b1", "g")
M04_NAMES = ("w0", "w1")


class BarError(ValueError):
    pass


# -- exact two-variable polynomials ------------------------------------


class Poly2:
    """Sparse polynomial in x, y with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {k: v for k, v in (c or {}).items() if v != 0}

    def add(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return Poly2(out)

    def neg(self):
        return Poly2({k: -v for k, v in self.c.items()})

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        out = {}
        for (i, j), v in self.c.items():
            for (p, q), w in other.c.items():
                k = (i + p, j + q)
                s = out.get(k, 0) + v * w
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return Poly2(out)

    def scale(self, s):
        return Poly2({k: s * v for k, v in self.c.items()})

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))


def _poly_prod(*ps):
    out = Poly2({(0, 0): 1})
    for p in ps:
        out = out.mul(p)
    return out


_PX = Poly2({(1, 0): 1})
_PY = Poly2({(0, 1): 1})
_P1 = Poly2({(0, 0): 1})
_OMX = _P1.sub(_PX)
_OMY = _P1.sub(_PY)
_OMXY = _P1.sub(_PX.mul(_PY))

# (P, Q) numerators of each letter over D = xy(1-x)(1-y)(1-xy).
FORM_NUMERATORS = {
    A0: (_poly_prod(_PY, _OMX, _OMY, _OMXY), Poly2()),
    A1: (_poly_prod(_PX, _PY, _OMY, _OMXY), Poly2()),
    B0: (Poly2(), _poly_prod(_PX, _OMX, _OMY, _OMXY)),
    B1: (Poly2(), _poly_prod(_PX, _PY, _OMX, _OMXY)),
    G: (
        _poly_prod(_PX, _PY, _PY, _OMX, _OMY),
        _poly_prod(_PX, _PX, _PY, _OMX, _OMY),
    ),
}


def wedge(i, j):
    """Numerator of form_i ^ form_j over D^2, as a multiple of dx^dy."""
    pi, qi = FORM_NUMERATORS[i]
    pj, qj = FORM_NUMERATORS[j]
    return pi.mul(qj).sub(qi.mul(pj))


WEDGE = {(i, j): wedge(i, j) for i in range(5) for j in range(5)}


def _derive_dual_table():
    """Match each letter against the coefficient forms of Omega_5.

    Omega_5 = X12 dx/x + X23 dx/(x-1) + X45 dy/y + X34 dy/(y-1)
            + X24 (y dx + x dy)/(xy-1), with the model letter order
    X34, X45, X24, X12, X23.  Each coefficient form is +-1 times one of
    the five letters; the table records (model letter index, sign).
    """
    # Coefficient forms in model letter order: index -> (P, Q) over D.
    omega = {
        0: (Poly2(), _poly_prod(_PX, _PY, _OMX, _OMXY).neg()),  # X34: dy/(y-1)
        1: (Poly2(), _poly_prod(_PX, _OMX, _OMY, _OMXY)),  # X45: dy/y
        2: (  # X24: (y dx + x dy)/(xy-1)
            _poly_prod(_PX, _PY, _PY, _OMX, _OMY).neg(),
            _poly_prod(_PX, _PX, _PY, _OMX, _OMY).neg(),
        ),
        3: (_poly_prod(_PY, _OMX, _OMY, _OMXY), Poly2()),  # X12: dx/x
        4: (_poly_prod(_PX, _PY, _OMY, _OMXY).neg(), Poly2()),  # X23: dx/(x-1)
    }
    table = {}
    for letter in range(5):
        p, q = FORM_NUMERATORS[letter]
        hits = []
        for model_letter, (op, oq) in omega.items():
            if p == op and q == oq:
                hits.append((model_letter, 1))
            elif p == op.neg() and q == oq.neg():
                hits.append((model_letter, -1))
        if len(hits) != 1:
            raise BarError("dual table derivation is ambiguous")
        table[letter] = hits[0]
    return table


M05_DUAL = _derive_dual_table()


# -- bar elements -------------------------------------------------------


class BarElement:
    """Linear combination of tensor words in logarithmic 1-forms."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None, _clean=False):
        if space not in ("m04", "m05"):
            raise BarError("unknown space %r" % space)
        self.space = space
        if _clean:
            self.terms = terms
        else:
            self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    def add(self, other):
        if self.space != other.space:
            raise BarError("space mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return BarElement(self.space, out, _clean=True)

    def neg(self):
        return BarElement(
            self.space, {w: -c for w, c in self.terms.items()}, _clean=True
        )

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, s):
        if s == 0:
            return BarElement(self.space, {}, _clean=True)
        return BarElement(
            self.space, {w: s * c for w, c in self.terms.items()}, _clean=True
        )

    def shuffle(self, other):
        """Product dual to deconcatenation: shuffle of the tensor words."""
        if self.space != other.space:
            raise BarError("space mismatch")
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                c = cu * cv
                for w, m in shuffle_words(u, v).items():
                    s = out.get(w, 0) + c * m
                    if s == 0:
                        out.pop(w, None)
                    else:
                        out[w] = s
        return BarElement(self.space, out, _clean=True)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, BarElement)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __repr__(self):
        return "BarElement(%r, %d terms)" % (self.space, len(self.terms))


def bar_zero(space="m05"):
    return BarElement(space, {}, _clean=True)


def bar_one(space="m05"):
    return BarElement(space, {(): Q_ONE}, _clean=True)


def format_bar(e):
    """One line per term: `coeff [letter|letter|...]`, deterministic order."""
    names = M05_NAMES if e.space == "m05" else M04_NAMES
    lines = []
    for w in sorted(e.terms, key=lambda w: (len(w), w)):
        body = "|".join(names[i] for i in w)
        lines.append("%s [%s]" % (e.terms[w], body))
    return "\n".join(lines)


def parse_bar(text, space="m05"):
    from .rationals import parse_rational

    names = M05_NAMES if space == "m05" else M04_NAMES
    index = {n: i for i, n in enumerate(names)}
    terms = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        ctext, wtext = ln.split(None, 1)
        wtext = wtext.strip()
        if not (wtext.startswith("[") and wtext.endswith("]")):
            raise BarError("malformed bar term %r" % ln)
        body = wtext[1:-1]
        w = tuple(index[n] for n in body.split("|")) if body else ()
        terms[w] = terms.get(w, 0) + parse_rational(ctext)
    return BarElement(space, terms)


# -- integrability ------------------------------------------------------


def check_integrability(e):
    """Slot-wise vanishing of the adjacent wedge contractions.

    For each slot j the sum of c_I [..|w_{i_{j+1}} ^ w_{i_j}|..] must be
    zero; terms are grouped by slot position and surrounding word and
    the wedge numerators summed exactly.  The one-variable space has no
    nonzero 2-forms, so every element there is integrable.
    """
    if e.space == "m04":
        return True
    acc = {}
    for w, c in e.terms.items():
        for pos in range(len(w) - 1):
            key = (pos, w[:pos], w[pos + 2 :])
            cur = acc.get(key, Poly2())
            acc[key] = cur.add(WEDGE[(w[pos], w[pos + 1])].scale(c))
    return all(p.is_zero() for p in acc.values())


# -- l-elements from the differential equations -------------------------


def _omega_word(a):
    """The word X0^{a_k-1} X1 ... X0^{a_1-1} X1 over letters 0, 1."""
    w = []
    for n in reversed(a):
        w.extend([0] * (n - 1))
        w.append(1)
    return tuple(w)


_ONE_VAR_SUB = {
    "x": {0: (A0,), 1: (A1,)},
    "y": {0: (B0,), 1: (B1,)},
    "xy": {0: (A0, B0), 1: (G,)},
}


def build_l(a, tag):
    """Bar element of the one-variable polylogarithm Li_a in x, y or xy.

    The sign (-1)^{dp(a)} of the coefficient functional l_a is carried
    by the pairing (each letter dual to X23, X34 or X24 contributes a
    minus sign), so the element itself has positive coefficients.
    """
    a = tuple(a)
    try:
        sub = _ONE_VAR_SUB[tag]
    except KeyError:
        raise BarError("unknown tag %r" % tag)
    words = {(): Q_ONE}
    for ch in _omega_word(a):
        nxt = {}
        for w, c in words.items():
            for letter in sub[ch]:
                nxt[w + (letter,)] = c
        words = nxt
    return BarElement("m05", words, _clean=True)


def build_l_m04(a):
    """Bar element of l_a on the one-variable space, with the (-1)^{dp} sign."""
    a = tuple(a)
    sign = qq(-1 if len(a) % 2 else 1)
    return BarElement("m04", {_omega_word(a): sign}, _clean=True)


def _prepend(heads, e):
    """Sum of sign * [letter| e ] over (letter, sign) pairs."""
    terms = {}
    for letter, sign in heads:
        for w, c in e.terms.items():
            key = (letter,) + w
            s = terms.get(key, 0) + sign * c
            if s == 0:
                terms.pop(key, None)
            else:
                terms[key] = s
    return BarElement("m05", terms, _clean=True)


_L2_CACHE = {}


def build_l2(a, b):
    """Bar element of the two-variable polylogarithm Li_{a,b}(x, y).

    Built from the differential equations: the d/dx part dispatches on
    whether a_k = 1 and whether a or b is exhausted, the d/dy part on
    b_l; each case prepends the corresponding 1-form and recurses.
    """
    a, b = tuple(a), tuple(b)
    if not a or not b:
        raise BarError("both indices must be nonempty")
    key = (a, b)
    try:
        return _L2_CACHE[key]
    except KeyError:
        pass
    k, l = len(a), len(b)
    e = bar_zero()
    # terms with dx: d/dx Li_{a,b}
    if a[-1] != 1:
        e = e.add(_prepend(((A0, 1),), build_l2(a[:-1] + (a[-1] - 1,), b)))
    else:
        first = build_l2(a[:-1], b) if k > 1 else build_l(b, "y")
        e = e.add(_prepend(((A1, 1),), first))
        merged = a[:-1] + (b[0],)
        second = build_l2(merged, b[1:]) if l > 1 else build_l(merged, "xy")
        e = e.add(_prepend(((A0, -1), (A1, -1)), second))
    # terms with dy: d/dy Li_{a,b}
    if b[-1] != 1:
        e = e.add(_prepend(((B0, 1),), build_l2(a, b[:-1] + (b[-1] - 1,))))
    elif l > 1:
        e = e.add(_prepend(((B1, 1),), build_l2(a, b[:-1])))
    else:
        e = e.add(_prepend(((B1, 1),), build_l(a, "xy")))
    if not check_integrability(e):
        raise BarError("two-variable element failed integrability: %r" % (key,))
    _L2_CACHE[key] = e
    return e


_SWAP = {A0: B0, A1: B1, B0: A0, B1: A1, G: G}


def swap_xy(e):
    """Exchange the roles of the two coordinates: a-letters <-> b-letters."""
    if e.space != "m05":
        raise BarError("swap_xy acts on the two-variable space")
    return BarElement(
        "m05",
        {tuple(_SWAP[i] for i in w): c for w, c in e.terms.items()},
        _clean=True,
    )


def build_l2_yx(a, b):
    """Bar element of Li_{a,b}(y, x), by exchanging coordinates."""
    return swap_xy(build_l2(a, b))


# -- the series shuffle formula -----------------------------------------


def series_shuffle_rhs(a, b):
    """Right-hand side of the series shuffle formula for l^x_a . l^y_b."""
    rhs = bar_zero()
    for (pair, tag, full) in stuffle_terms(a, b):
        if tag == "xy":
            rhs = rhs.add(build_l(full, "xy"))
        elif tag == "x,y":
            rhs = rhs.add(build_l2(pair[0], pair[1]))
        else:
            rhs = rhs.add(build_l2_yx(pair[0], pair[1]))
    return rhs


def check_series_shuffle_bar(a, b):
    """l^x_a . l^y_b equals the ordered-stuffle sum, as exact bar elements."""
    lhs = build_l(a, "x").shuffle(build_l(b, "y"))
    return lhs == series_shuffle_rhs(a, b)


# -- pairing with group-like series -------------------------------------


def pair_p5(e, g):
    """Pair a two-variable bar element with a five-strand model series.

    The model series (taken in its straightened normal form, which is a
    particular lift to the free algebra) is read against the dual basis
    of the letters X34, X45, X24, X12, X23 with the signs derived from
    the connection form.  Integrability of e makes the value independent
    of the lift.
    """
    if e.space != "m05":
        raise BarError("pair_p5 expects a two-variable element")
    ring = g.ring
    total = ring.zero
    for w, c in e.terms.items():
        word = tuple(M05_DUAL[i][0] for i in w)
        coef = g.coefficient(word)
        if ring.is_zero(coef):
            continue
        sign = 1
        for i in w:
            sign *= M05_DUAL[i][1]
        total = total + coef * ring.embed(c * sign)
    return total


def pair_m04(e, g):
    """Pair a one-variable bar element with a series over X0, X1."""
    if e.space != "m04":
        raise BarError("pair_m04 expects a one-variable element")
    ring = g.ring
    total = ring.zero
    for w, c in e.terms.items():
        coef = g.coefficient(w)
        if ring.is_zero(coef):
            continue
        total = total + coef * ring.embed(c)
    return total

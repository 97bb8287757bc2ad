"""The Lie-algebra side of the double shuffle relations.

A Lie series psi over X0, X1 with c_{X0} = c_{X1} = c_{X0X1} = 0 belongs
to the double shuffle Lie algebra when its star regularization
psi_* = psi_corr + pi_Y(psi) is primitive for the quasi-shuffle
coproduct.  This module provides the membership test, a degreewise
solver, the Ihara bracket, and the operator calculus (the derivations
d_psi and D_f, the left-multiplication-plus-derivation maps s_f and
their Y-side companions) together with exact checks of the identities
that drive the bracket-closure proof.
"""

from itertools import combinations

from .rationals import binomial, qq
from .rings import RATIONALS
from .lie import lie_basis
from .series import (
    Series,
    SeriesAlgebra,
    abelianize,
    is_lie,
    one,
    substitute,
    zero,
)
from .words import X_ALPHABET, y_alphabet
from .lab import _solve_affine
from . import yside
from .yside import (
    delta_star,
    embed_y,
    pi_y,
    psi_star,
    reverse_y,
)


# -- derivations and the Ihara bracket ----------------------------------


def _leibniz(v, images):
    """Extend letter -> series assignments as a derivation and apply to v.

    Letters absent from the table map to zero.
    """
    ring = v.ring
    out = {}
    for w, c in v.terms.items():
        for i, ch in enumerate(w):
            img = images.get(ch)
            if img is None:
                continue
            for u, cu in img.terms.items():
                word = w[:i] + u + w[i + 1 :]
                if len(word) > v.trunc:
                    continue
                s = out.get(word, ring.zero) + c * cu
                if ring.is_zero(s):
                    out.pop(word, None)
                else:
                    out[word] = s
    return Series(v.alphabet, v.trunc, ring, out, _clean=True)


def d_psi(psi, v):
    """The derivation with X0 -> 0 and X1 -> [X1, psi], applied to v."""
    x1 = Series(psi.alphabet, psi.trunc, psi.ring, {(1,): psi.ring.one})
    bracket = x1.mul(psi).sub(psi.mul(x1))
    return _leibniz(v, {1: bracket})


def big_d(f, v):
    """The derivation with X0 -> [f, X0] and X1 -> 0, applied to v."""
    x0 = Series(f.alphabet, f.trunc, f.ring, {(0,): f.ring.one})
    bracket = f.mul(x0).sub(x0.mul(f))
    return _leibniz(v, {0: bracket})


def ihara_bracket(psi1, psi2):
    """{psi1, psi2} = d_{psi2}(psi1) - d_{psi1}(psi2) - [psi1, psi2]."""
    comm = psi1.mul(psi2).sub(psi2.mul(psi1))
    out = d_psi(psi2, psi1).sub(d_psi(psi1, psi2)).sub(comm)
    if not is_lie(out):
        raise AssertionError("Ihara bracket left the Lie algebra")
    return out


def s_f(f, v):
    """s_f(v) = f v + d_f(v)."""
    if not f.ring.is_zero(f.constant_term()):
        raise ValueError("s_f requires zero constant term")
    return f.mul(v).add(d_psi(f, v))


def s_f_y(f, w):
    """The Y-side companion of s_f, with pi_Y s_f = s^Y_f pi_Y.

    s_f preserves the span of words ending in X0, so it descends along
    pi_Y; the value on a Y-series is computed through the standard lift.
    """
    return pi_y(s_f(f, embed_y(w)))


def big_d_y(f, w):
    """D^Y_f(w) = s^Y_f(w) - w pi_Y(f), a derivation of the Y-algebra."""
    return s_f_y(f, w).sub(w.mul(pi_y(f)))


# -- membership and the solver ------------------------------------------


def is_dmr0(psi):
    """Lie series with vanishing depth-one start whose star part is primitive."""
    ring = psi.ring
    if not is_lie(psi):
        return False
    for w in ((0,), (1,), (0, 1)):
        if not ring.is_zero(psi.coefficient(w)):
            return False
    return yside.is_primitive_star(psi_star(psi))


def solve_dmr0(degree):
    """Basis of the homogeneous membership solutions at the given degree.

    The constraints are linear in psi: c_{X0X1}(psi) = 0 plus the
    non-primitive part of Delta_*(psi_*).  Returns a list of Lie series
    (the nullspace in Lyndon coordinates, free variables set to one).
    """
    basis = lie_basis(X_ALPHABET, degree, degree, RATIONALS)
    columns = []
    for _, e in basis:
        col = {}
        c2 = e.coefficient((0, 1))
        if c2 != 0:
            col[("c",)] = c2
        star = psi_star(e)
        diff = delta_star(star)
        prim = {}
        for w, c in star.terms.items():
            if w:
                prim[((), w)] = c
                prim[(w, ())] = c
        for p, c in diff.terms.items():
            got = c - prim.pop(p, qq(0))
            if got != 0:
                col[("t",) + p] = got
        for p, c in prim.items():
            col[("t",) + p] = -c
        columns.append(col)
    solved = _solve_affine(columns, {}, len(basis))
    _, kernel = solved
    out = []
    for vec in kernel:
        s = zero(X_ALPHABET, degree, RATIONALS)
        for coeff, (_, e) in zip(vec, basis):
            if coeff != 0:
                s = s.add(e.scale(coeff))
        out.append(s)
    return out


# -- the X0-power decomposition -----------------------------------------


def x_decomposition(f):
    """Write homogeneous f as sum_i f_i X0^i with each f_i in the Y-algebra.

    Returns (p, [f_0, ..., f_p]) with the components as Y-series; the
    weight of f_i is p - i.
    """
    degs = {len(w) for w in f.terms}
    if len(degs) > 1:
        raise ValueError("decomposition requires homogeneous input")
    p = degs.pop() if degs else 0
    parts = [{} for _ in range(p + 1)]
    for w, c in f.terms.items():
        i = 0
        while i < len(w) and w[len(w) - 1 - i] == 0:
            i += 1
        parts[i][w[: len(w) - i]] = c
    comps = []
    for part in parts:
        xs = Series(f.alphabet, f.trunc, f.ring, part, _clean=True)
        comps.append(pi_y(xs))
    return p, comps


def _recompose(p, comps, trunc, ring=RATIONALS):
    x0 = Series(X_ALPHABET, trunc, ring, {(0,): ring.one})
    out = zero(X_ALPHABET, trunc, ring)
    power = one(X_ALPHABET, trunc, ring)
    for i in range(p + 1):
        out = out.add(embed_y(comps[i]).mul(power))
        power = power.mul(x0)
    return out


def _y_letter(n, trunc, ring=RATIONALS):
    return Series(y_alphabet(trunc), trunc, ring, {(n - 1,): ring.one})


def f_pair(p, comps, i, j, trunc):
    """f_{i,j} = f_i Y_j + Y_j fbar_i with fbar_i = (-1)^p R_Y(f_i)."""
    fi = comps[i]
    fbar = reverse_y(fi).scale(fi.ring.embed(-1 if p % 2 else 1))
    if j == 0:
        return fi.add(fbar)
    yj = _y_letter(j, trunc, fi.ring)
    return fi.mul(yj).add(yj.mul(fbar))


# -- the three operator identities --------------------------------------


def lemma_derivation_check(f, n):
    """D^Y_f(Y_n) = X0^{n-1} f X1 - f X0^{n-1} X1 = sum_i f_{i,i+n}.

    Requires S_X(f) = -f (in particular f Lie); compares both printed
    forms exactly, the middle one through the standard embedding.
    """
    if yside.antipode_x(f) != f.neg():
        raise ValueError("hypothesis S_X(f) = -f fails")
    trunc = f.trunc
    ring = f.ring
    lhs = big_d_y(f, _y_letter(n, trunc, ring))
    word = Series(X_ALPHABET, trunc, ring, {(0,) * (n - 1) + (1,): ring.one})
    x_side = Series(
        X_ALPHABET, trunc, ring, {(0,) * (n - 1): ring.one}
    ).mul(f).mul(Series(X_ALPHABET, trunc, ring, {(1,): ring.one}))
    x_side = x_side.sub(f.mul(word))
    p, comps = x_decomposition(f)
    total = zero(y_alphabet(trunc), trunc, ring)
    for i in range(p + 1):
        total = total.add(f_pair(p, comps, i, i + n, trunc))
    return embed_y(lhs) == x_side and lhs == total


def lemma_coproduct_check(g, n):
    """The coboundary of D^Y_f on Y_n for f = sec(g), g in the Y Lie algebra.

    Delta_*(D^Y_f(Y_n)) - (id (x) D^Y_f + D^Y_f (x) id)(Delta_*(Y_n))
    equals sum_{k=0}^p sum_{i=k}^p (f_{i,i-k} (x) Y_{n+k}
    + Y_{n+k} (x) f_{i,i-k}).

    Requires g primitive for Delta_* and S_X(f) = -f; the second
    hypothesis is what reduces D^Y_f(Y_m) to the pairing sums and
    without it the identity fails (g = Y_2 - Y_1^2/2, n = 1 is a
    counterexample).
    """
    trunc = g.trunc
    ring = g.ring
    if not yside.is_primitive_star(g):
        raise ValueError("hypothesis: g must be primitive for the coproduct")
    f = yside.sec(g)
    if yside.antipode_x(f) != f.neg():
        raise ValueError("hypothesis S_X(sec g) = -sec g fails")
    p, comps = x_decomposition(f)
    yn = _y_letter(n, trunc, ring)
    lhs = delta_star(big_d_y(f, yn))
    for (u, v), c in delta_star(yn).terms.items():
        us = Series(y_alphabet(trunc), trunc, ring, {u: ring.one})
        vs = Series(y_alphabet(trunc), trunc, ring, {v: ring.one})
        left = big_d_y(f, us).scale(c)
        right = big_d_y(f, vs).scale(c)
        lhs = lhs.sub(_tensor(left, vs)).sub(_tensor(us, right))
    rhs_terms = {}
    for k in range(p + 1):
        part = zero(y_alphabet(trunc), trunc, ring)
        for i in range(k, p + 1):
            part = part.add(f_pair(p, comps, i, i - k, trunc))
        ynk = _y_letter(n + k, trunc, ring)
        for t in (_tensor(part, ynk), _tensor(ynk, part)):
            for key, c in t.terms.items():
                s = rhs_terms.get(key, ring.zero) + c
                if ring.is_zero(s):
                    rhs_terms.pop(key, None)
                else:
                    rhs_terms[key] = s
    from .series import TensorSeries

    rhs = TensorSeries(y_alphabet(trunc), trunc, ring, rhs_terms, _clean=True)
    return lhs == rhs


def _tensor(a, b):
    """Elementary tensor of two Y-series as a TensorSeries."""
    from .series import TensorSeries

    ring = a.ring
    alpha = a.alphabet
    out = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            if alpha.degree(u) + alpha.degree(v) > a.trunc:
                continue
            c = cu * cv
            if not ring.is_zero(c):
                out[(u, v)] = c
    return TensorSeries(alpha, a.trunc, ring, out, _clean=True)


def lemma_telescoping_check(g, k):
    """The k-th diagonal sum of the pairings collapses to a single letter.

    For g in the Y Lie algebra with f = sec(g) satisfying S_X(f) = -f:
    sum_{i=k}^p f_{i,i-k} equals
    (-1)^{p-k-1} C(p-1, k) (1 + (-1)^p) c_{X0^{p-1}X1}(g) Y_{p-k}
    for k <= p-1, and 0 for k = p.
    """
    trunc = g.trunc
    ring = g.ring
    if not yside.is_primitive_star(g):
        raise ValueError("hypothesis: g must be primitive for the coproduct")
    f = yside.sec(g)
    if yside.antipode_x(f) != f.neg():
        raise ValueError("hypothesis S_X(f) = -f fails")
    p, comps = x_decomposition(f)
    total = zero(y_alphabet(trunc), trunc, ring)
    for i in range(k, p + 1):
        total = total.add(f_pair(p, comps, i, i - k, trunc))
    if k == p:
        return total.is_zero()
    c = embed_y(g).coefficient((0,) * (p - 1) + (1,))
    scalar = (
        qq(-1 if (p - k - 1) % 2 else 1)
        * binomial(p - 1, k)
        * qq(1 + (-1) ** p)
        * c
    )
    expected = _y_letter(p - k, trunc, ring).scale(ring.embed(scalar))
    return total == expected


def coderivation_check(psi, max_weight=None):
    """s^Y_f for f = sec(psi_*) is a coderivation of the Y Hopf algebra.

    Also checks the building block sec(psi_*) = psi + psi_corr (the
    correction sum embedded in U<<X0, X1>>) and S_X(sec psi_*) = -sec psi_*.
    Verified on all Y-words up to max_weight (default: everything the
    truncation allows).
    """
    trunc = psi.trunc
    ring = psi.ring
    star = psi_star(psi)
    f = yside.sec(star)
    section = psi.add(embed_y(yside.correction_exponent(psi)))
    if f != section:
        return False
    if yside.antipode_x(f) != f.neg():
        return False
    degs = sorted({len(w) for w in psi.terms})
    dmin = degs[0] if degs else trunc
    top = max_weight if max_weight is not None else trunc - dmin
    ya = y_alphabet(trunc)
    for wgt in range(0, top + 1):
        for w in ya.words_of_degree(wgt):
            ws = Series(ya, trunc, ring, {w: ring.one})
            lhs = delta_star(s_f_y(f, ws))
            rhs_terms = {}
            for (u, v), c in delta_star(ws).terms.items():
                us = Series(ya, trunc, ring, {u: ring.one})
                vs = Series(ya, trunc, ring, {v: ring.one})
                for t in (
                    _tensor(s_f_y(f, us).scale(c), vs),
                    _tensor(us, s_f_y(f, vs).scale(c)),
                ):
                    for key, cc in t.terms.items():
                        s = rhs_terms.get(key, ring.zero) + cc
                        if ring.is_zero(s):
                            rhs_terms.pop(key, None)
                        else:
                            rhs_terms[key] = s
            from .series import TensorSeries

            if lhs != TensorSeries(ya, trunc, ring, rhs_terms, _clean=True):
                return False
    return True


# -- the exponential map -------------------------------------------------


def exp_dmr(psi):
    """Exp(psi) = sum_i (1/i!) (mu_psi + d_psi)^i (1), with s = mu + d."""
    out = one(psi.alphabet, psi.trunc, psi.ring)
    term = out
    for i in range(1, psi.trunc + 1):
        term = s_f(psi, term).scale_q(qq(1, i))
        if term.is_zero():
            break
        out = out.add(term)
    return out


# -- change of generators ------------------------------------------------


def u_generators(trunc, ring=RATIONALS):
    """U_1, ..., U_trunc: the graded parts of log(1 + Y1 + Y2 + ...)."""
    ya = y_alphabet(trunc)
    total = Series(
        ya, trunc, ring, {(i,): ring.one for i in range(len(ya))}
    )
    logarithm = one(ya, trunc, ring).add(total).log()
    return [logarithm.degree_part(i) for i in range(1, trunc + 1)]


def partial_u(i, w):
    """Coefficient of the single generator U_i in the expansion of w.

    The Y-letters are rewritten through 1 + sum Y_n = exp(sum U_n) and
    the coefficient of the length-one word U_i is read off.
    """
    trunc = w.trunc
    ring = w.ring
    ya = y_alphabet(trunc)
    expo = Series(ya, trunc, ring, {(j,): ring.one for j in range(len(ya))})
    expanded = expo.exp()
    images = [expanded.degree_part(n) for n in range(1, trunc + 1)]
    target = SeriesAlgebra(ya, trunc, ring)
    rewritten = substitute(w, images, target)
    return rewritten.coefficient((i - 1,))


def _weighted_lyndon(weight):
    """Lyndon words over the letters 1, 2, ... with the given total weight."""
    out = []

    def rec(acc, left):
        if left == 0:
            w = tuple(acc)
            if len(w) == 1 or all(w < w[i:] for i in range(1, len(w))):
                out.append(w)
            return
        for n in range(1, left + 1):
            rec(acc + [n], left - n)

    rec([], weight)
    out.sort()
    return out


def lie_y_basis(weight, trunc, ring=RATIONALS):
    """Basis of the weight-w part of the Lie algebra on the U generators.

    The primitives of the quasi-shuffle Hopf algebra form the free Lie
    algebra on U_1, U_2, ...; the basis elements are the standard
    bracketings of the weighted Lyndon words.
    """
    from .lie import bracketing

    us = u_generators(trunc, ring)
    ya = y_alphabet(trunc)
    out = []
    for lw in _weighted_lyndon(weight):
        s = zero(ya, trunc, ring)
        for word, m in bracketing(lw).items():
            prod = one(ya, trunc, ring)
            for i in word:
                prod = prod.mul(us[i - 1])
            s = s.add(prod.scale(ring.embed(m)))
        out.append(s)
    return out


def qualifying_basis(weight, trunc, ring=RATIONALS):
    """Primitive Y-series g of the given weight with S_X(sec g) = -sec g.

    These are exactly the inputs meeting the hypotheses of the pairing
    identities; the subspace is cut out of lie_y_basis by one linear
    condition per X-word.
    """
    basis = lie_y_basis(weight, trunc, ring)
    columns = []
    for g in basis:
        f = yside.sec(g)
        columns.append(dict(yside.antipode_x(f).add(f).terms))
    _, kernel = _solve_affine(columns, {}, len(basis))
    out = []
    for vec in kernel:
        s = zero(y_alphabet(trunc), trunc, ring)
        for c, g in zip(vec, basis):
            if c != 0:
                s = s.add(g.scale(ring.embed(c)))
        out.append(s)
    return out


# -- depth-graded sums and the meta-abelian image ------------------------


def _compositions(weight, depth):
    for cuts in combinations(range(1, weight), depth - 1):
        prev = 0
        parts = []
        for c in cuts + (weight,):
            parts.append(c - prev)
            prev = c
        yield tuple(parts)


def check_binomial_sums(psi):
    """Depth-graded sums of the coefficient functionals collapse.

    For every weight w <= trunc and depth m: the sum of l_a(psi) over
    all indices of weight w and depth m equals
    (-1)^{m-1} C(w, m) l_w(psi) / w for m < w, and 0 for m = w.
    """
    for w in range(2, psi.trunc + 1):
        lw = yside.l_value_x((w,), psi)
        for m in range(1, w + 1):
            total = qq(0)
            for a in _compositions(w, m):
                total = total + yside.l_value_x(a, psi)
            if m == w:
                expected = qq(0)
            else:
                expected = (
                    qq(-1 if m % 2 == 0 else 1) * binomial(w, m) * lw / w
                )
            if total != expected:
                return False
    return True


def gamma_image_check(psi):
    """The abelianized X1-part of psi has the three-term gamma shape.

    M(psi) = (psi_{X1} X1)^ab must equal g(x0) + g(x1) - g(x0 + x1) for
    a one-variable series g with coefficients read off the x0^{n-1} x1
    line.  Returns (flag, coefficient table).
    """
    from .rings import CommSeries

    terms = {w: c for w, c in psi.terms.items() if w and w[-1] == 1}
    m = abelianize(Series(psi.alphabet, psi.trunc, psi.ring, terms, _clean=True))
    trunc = psi.trunc
    coeffs = {n: -m.coefficient(n - 1, 1) / n for n in range(2, trunc + 1)}
    expected = {}
    for n, d in coeffs.items():
        if d == 0:
            continue
        expected[(n, 0)] = expected.get((n, 0), qq(0)) + d
        expected[(0, n)] = expected.get((0, n), qq(0)) + d
        for i in range(n + 1):
            key = (i, n - i)
            expected[key] = expected.get(key, qq(0)) - d * binomial(n, i)
    ok = m == CommSeries(expected, trunc)
    return ok, coeffs

"""The quasi-shuffle (harmonic) side of the double shuffle relations.

Series over the alphabet Y1, Y2, ... (letter Yn has weight n) carry the
coproduct Delta_* with Delta_*(Yn) = sum_{i+j=n} Yi (x) Yj, Y0 = 1.  The
projection pi_Y and the correction term turn a group-like series over
X0, X1 into its star-regularization, whose group-likeness for Delta_* is
the generalized double shuffle relation.
"""

from functools import lru_cache

from .rationals import qq
from .series import Series, TensorSeries, one, tensor_square
from .words import y_alphabet


# -- projection and embedding -----------------------------------------


def pi_y(s):
    """Kill words ending in X0; X0^{n_m-1}X1...X0^{n_1-1}X1 -> (-1)^m Ynm...Yn1."""
    ya = y_alphabet(s.trunc)
    ring = s.ring
    out = {}
    for w, c in s.terms.items():
        letters = []
        run = 0
        for ch in w:
            if ch == 0:
                run += 1
            else:
                letters.append(run)
                run = 0
        if run:
            continue
        yw = tuple(letters)
        sign = ring.embed(-1 if len(yw) % 2 else 1)
        v = out.get(yw, ring.zero) + sign * c
        if ring.is_zero(v):
            out.pop(yw, None)
        else:
            out[yw] = v
    return Series(ya, s.trunc, ring, out, _clean=True)


def embed_y(s, x_alphabet=None):
    """Algebra map Yn -> -X0^{n-1}X1, inverse to pi_y on its image."""
    from .words import X_ALPHABET

    xa = x_alphabet or X_ALPHABET
    ring = s.ring
    out = {}
    for w, c in s.terms.items():
        xw = []
        for i in w:
            xw.extend([0] * i)
            xw.append(1)
        xw = tuple(xw)
        sign = ring.embed(-1 if len(w) % 2 else 1)
        v = out.get(xw, ring.zero) + sign * c
        if ring.is_zero(v):
            out.pop(xw, None)
        else:
            out[xw] = v
    return Series(xa, s.trunc, ring, out, _clean=True)


# -- the quasi-shuffle coproduct --------------------------------------


@lru_cache(maxsize=None)
def _y_word_delta(trunc, word):
    """Delta_* of a Y-word (letter indices), as a pair-of-words -> int table."""
    if not word:
        return {((), ()): 1}
    head = word[:-1]
    n = word[-1] + 1
    out = {}
    for (u, v), m in _y_word_delta(trunc, head).items():
        for i in range(n + 1):
            left = u if i == 0 else u + (i - 1,)
            right = v if i == n else v + (n - i - 1,)
            p = (left, right)
            out[p] = out.get(p, 0) + m
    return out


def delta_star(s):
    """Delta_*(Yn) = sum_{i=0}^n Yi (x) Y_{n-i}, extended as an algebra map."""
    ring = s.ring
    out = {}
    for w, c in s.terms.items():
        for p, m in _y_word_delta(s.trunc, w).items():
            v = out.get(p, ring.zero) + c * ring.embed(m)
            if ring.is_zero(v):
                out.pop(p, None)
            else:
                out[p] = v
    return TensorSeries(s.alphabet, s.trunc, ring, out, _clean=True)


# -- star regularization ----------------------------------------------


def correction_exponent(phi):
    """sum_{n>=1} (-1)^n/n c_{X0^{n-1}X1}(phi) Y1^n, as a Y-series."""
    ya = y_alphabet(phi.trunc)
    ring = phi.ring
    out = {}
    for n in range(1, phi.trunc + 1):
        c = phi.coefficient((0,) * (n - 1) + (1,))
        if ring.is_zero(c):
            continue
        out[(0,) * n] = c * ring.embed(qq(-1 if n % 2 else 1, n))
    return Series(ya, phi.trunc, ring, out, _clean=True)


def phi_star(phi):
    """exp(correction) * pi_Y(phi), the group-like star regularization."""
    return correction_exponent(phi).exp().mul(pi_y(phi))


def psi_star(psi):
    """correction + pi_Y(psi), the Lie-algebra star regularization."""
    return correction_exponent(psi).add(pi_y(psi))


def is_group_like_star(g):
    return g.constant_term() == g.ring.one and delta_star(g) == tensor_square(g)


def is_primitive_star(g):
    ring = g.ring
    if not ring.is_zero(g.constant_term()):
        return False
    expected = TensorSeries(
        g.alphabet,
        g.trunc,
        ring,
        {
            **{((), w): c for w, c in g.terms.items() if w},
            **{(w, ()): c for w, c in g.terms.items() if w},
        },
    )
    return delta_star(g) == expected


def check_double_shuffle(phi):
    """Group-likeness on both sides: shuffle for phi, quasi-shuffle for phi_*."""
    from .series import is_group_like

    return is_group_like(phi) and is_group_like_star(phi_star(phi))


# -- indices ----------------------------------------------------------


def index_weight(a):
    return sum(a)


def index_depth(a):
    return len(a)


def is_admissible(a):
    return bool(a) and a[-1] > 1


def index_to_word(a):
    """Index (a1,...,ak) as the Y-word Yak...Ya1 (letter indices)."""
    return tuple(n - 1 for n in reversed(a))


def word_to_index(w):
    return tuple(i + 1 for i in reversed(w))


def l_value(a, g):
    """Coefficient functional l_a on a Y-series."""
    return g.coefficient(index_to_word(a))


def l_value_x(a, phi):
    """l_a(phi) = (-1)^k c_{X0^{ak-1}X1...X0^{a1-1}X1}(phi) on an X-series."""
    w = []
    for n in reversed(a):
        w.extend([0] * (n - 1))
        w.append(1)
    sign = phi.ring.embed(-1 if len(a) % 2 else 1)
    return sign * phi.coefficient(tuple(w))


# -- ordered shuffles with merges -------------------------------------


@lru_cache(maxsize=None)
def merge_patterns(k, l):
    """All interleavings-with-merges of k 'a'-slots and l 'b'-slots.

    Each pattern is a tuple of slots ('a', s), ('b', t) or ('m', s, t)
    with both subsequences increasing; these enumerate the surjections
    sigma: {1..k+l} -> {1..N} monotone on each block.
    """
    if k == 0:
        return (tuple(("b", t) for t in range(1, l + 1)),)
    if l == 0:
        return (tuple(("a", s) for s in range(1, k + 1)),)
    out = []

    def rec(i, j, acc):
        if i > k and j > l:
            out.append(tuple(acc))
            return
        if i <= k:
            rec(i + 1, j, acc + [("a", i)])
        if j <= l:
            rec(i, j + 1, acc + [("b", j)])
        if i <= k and j <= l:
            rec(i + 1, j + 1, acc + [("m", i, j)])

    rec(1, 1, [])
    return tuple(out)


def stuffle_terms(a, b):
    """The quasi-shuffle expansion of l_a . l_b as [(pair, tag, full index)].

    pair is ((c_1..c_j), (c_{j+1}..c_N)); the tag records which variable
    pattern the term carries: "xy" when the last slot merges the ends of
    both indices, "x,y" when the last slot ends b, "y,x" when it ends a.
    """
    k, l = len(a), len(b)
    out = []
    for pattern in merge_patterns(k, l):
        n = len(pattern)
        c = []
        pos_a = pos_b = None
        for idx, slot in enumerate(pattern, start=1):
            if slot[0] == "a":
                c.append(a[slot[1] - 1])
                if slot[1] == k:
                    pos_a = idx
            elif slot[0] == "b":
                c.append(b[slot[1] - 1])
                if slot[1] == l:
                    pos_b = idx
            else:
                c.append(a[slot[1] - 1] + b[slot[2] - 1])
                if slot[1] == k:
                    pos_a = idx
                if slot[2] == l:
                    pos_b = idx
        c = tuple(c)
        if pos_a == n and pos_b == n:
            out.append(((c, ()), "xy", c))
        elif pos_b == n:
            j = pos_a
            out.append(((c[:j], c[j:]), "x,y", c))
        else:
            j = pos_b
            out.append(((c[:j], c[j:]), "y,x", c))
    return out


@lru_cache(maxsize=None)
def _word_stuffle(u, v):
    """Quasi-shuffle of two weight words: word -> multiplicity."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    for w, m in _word_stuffle(u[1:], v).items():
        w = (u[0],) + w
        out[w] = out.get(w, 0) + m
    for w, m in _word_stuffle(u, v[1:]).items():
        w = (v[0],) + w
        out[w] = out.get(w, 0) + m
    for w, m in _word_stuffle(u[1:], v[1:]).items():
        w = (u[0] + v[0],) + w
        out[w] = out.get(w, 0) + m
    return out


def stuffle(a, b):
    """Quasi-shuffle product of two indices, as an index -> multiplicity table."""
    out = {}
    for w, m in _word_stuffle(tuple(reversed(a)), tuple(reversed(b))).items():
        c = tuple(reversed(w))
        out[c] = out.get(c, 0) + m
    return out


# -- plumbing between the X and Y pictures ----------------------------


def partial0(s):
    """Derivation of the X-series algebra with X0 -> 1, X1 -> 0."""
    ring = s.ring
    out = {}
    for w, c in s.terms.items():
        for i, ch in enumerate(w):
            if ch != 0:
                continue
            v = w[:i] + w[i + 1 :]
            x = out.get(v, ring.zero) + c
            if ring.is_zero(x):
                out.pop(v, None)
            else:
                out[v] = x
    return Series(s.alphabet, s.trunc, ring, out, _clean=True)


def antipode_x(s):
    """Anti-automorphism with X0 -> -X0, X1 -> -X1 (word reversal and sign)."""
    ring = s.ring
    return Series(
        s.alphabet,
        s.trunc,
        ring,
        {
            w[::-1]: (c if len(w) % 2 == 0 else -c)
            for w, c in s.terms.items()
        },
        _clean=True,
    )


def reverse_y(s):
    """Anti-automorphism of Y-series fixing every letter (word reversal)."""
    return Series(
        s.alphabet, s.trunc, s.ring, {w[::-1]: c for w, c in s.terms.items()}, _clean=True
    )


def sec(g):
    """Right inverse of pi_Y with image in ker(partial0).

    Input is a Y-series; sec(g) = sum_i (-1)^i/i! partial0^i(g~) X0^i where
    g~ is the embedded X-series of g.
    """
    f = embed_y(g)
    from .series import letter

    x0 = letter(f.alphabet, f.trunc, "X0", f.ring)
    out = f
    term = f
    power = one(f.alphabet, f.trunc, f.ring)
    for i in range(1, f.trunc + 1):
        term = partial0(term).scale_q(qq(-1, i))
        power = power.mul(x0)
        piece = term.mul(power)
        if piece.is_zero():
            break
        out = out.add(piece)
    return out

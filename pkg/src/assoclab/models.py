"""Fast PBW models of the two braid enveloping algebras.

Both algebras split as (free fiber Lie algebra) acted on by a free base
Lie algebra, plus (for the four-strand algebra) a central element.  The
normal-form basis is fiber-word . base-word . center-power and the only
rewriting rule moves a base letter right past a fiber letter:

    u.v -> v.u + [u, v]        ([u, v] lands in the fiber)

with the central letter commuting with everything.  Straightening is
memoized per model and shared across coefficient rings because all
bracket coefficients are integers.

The four-strand model uses fiber t14, t24, t34, base t12, t23 and the
central sum c of all six generators.  The five-strand model uses fiber
X34, X45, X24 and base X12, X23; the remaining generators are linear
combinations of these five.
"""

from .rationals import qq
from .rings import RATIONALS, QuadraticExtension
from .series import Series, one, zero, substitute
from .words import Alphabet, X_ALPHABET

FIBER, BASE, CENTER = 0, 1, 2

_STRAIGHTEN_CACHES = {}


class PBWModel:
    """Quotient algebra with a straightening normal form."""

    def __init__(self, name, letter_names, classes, brackets, trunc, ring=RATIONALS):
        self.name = name
        self.alphabet = Alphabet(tuple(letter_names))
        self.classes = tuple(classes)
        self.brackets = brackets
        self.trunc = trunc
        self.ring = ring
        self._cache = _STRAIGHTEN_CACHES.setdefault(name, {})

    # -- straightening --------------------------------------------------

    def _straighten(self, word):
        """Expand a word in the normal basis; integer coefficients."""
        try:
            return self._cache[word]
        except KeyError:
            pass
        cls = self.classes
        for i in range(len(word) - 1):
            u, v = word[i], word[i + 1]
            if cls[u] <= cls[v]:
                continue
            out = {}
            swapped = word[:i] + (v, u) + word[i + 2 :]
            for w, m in self._straighten(swapped).items():
                out[w] = out.get(w, 0) + m
            if cls[u] == BASE and cls[v] == FIBER:
                for mid, m in self.brackets.get((u, v), {}).items():
                    rep = word[:i] + mid + word[i + 2 :]
                    for w, m2 in self._straighten(rep).items():
                        out[w] = out.get(w, 0) + m * m2
            out = {w: m for w, m in out.items() if m}
            self._cache[word] = out
            return out
        self._cache[word] = {word: 1}
        return self._cache[word]

    def is_normal(self, word):
        cls = self.classes
        return all(cls[word[i]] <= cls[word[i + 1]] for i in range(len(word) - 1))

    def normalize(self, s):
        ring = self.ring
        out = {}
        for w, c in s.terms.items():
            if self.is_normal(w):
                v = out.get(w, ring.zero) + c
                if ring.is_zero(v):
                    out.pop(w, None)
                else:
                    out[w] = v
                continue
            for u, m in self._straighten(w).items():
                v = out.get(u, ring.zero) + c * ring.embed(m)
                if ring.is_zero(v):
                    out.pop(u, None)
                else:
                    out[u] = v
        return Series(self.alphabet, s.trunc, ring, out, _clean=True)

    # -- algebra protocol -----------------------------------------------

    def one(self):
        return one(self.alphabet, self.trunc, self.ring)

    def zero(self):
        return zero(self.alphabet, self.trunc, self.ring)

    def letter(self, name):
        i = self.alphabet.index(name)
        return Series(self.alphabet, self.trunc, self.ring, {(i,): self.ring.one})

    def combo(self, coeffs):
        """Degree-1 element from a name -> rational table."""
        terms = {}
        for name, c in coeffs.items():
            terms[(self.alphabet.index(name),)] = self.ring.embed(c)
        return Series(self.alphabet, self.trunc, self.ring, terms)

    def mul(self, a, b):
        return self.normalize(a.mul(b))

    def exp(self, s):
        out = self.one()
        power = out
        for k in range(1, self.trunc + 1):
            power = self.mul(power, s).scale_q(qq(1, k))
            if power.is_zero():
                break
            out = out.add(power)
        return out

    def inverse(self, s):
        u = self.one().sub(s)
        out = self.one()
        power = out
        for _ in range(self.trunc):
            power = self.mul(power, u)
            if power.is_zero():
                break
            out = out.add(power)
        return out

    def evaluate(self, phi, g0, g1):
        """phi(g0, g1) for a series phi over X0, X1."""
        return substitute(phi, [g0, g1], self)


# -- the four-strand model ---------------------------------------------

A4_LETTERS = ("t14", "t24", "t34", "t12", "t23", "c")
A4_CLASSES = (FIBER, FIBER, FIBER, BASE, BASE, CENTER)
# [t12, t14] = t14 t24 - t24 t14 and so on; derived from the defining
# relations [t_ij, t_ik + t_jk] = 0 and the disjoint commutators.
A4_BRACKETS = {
    (3, 0): {(0, 1): 1, (1, 0): -1},
    (3, 1): {(1, 0): 1, (0, 1): -1},
    (3, 2): {},
    (4, 0): {},
    (4, 1): {(1, 2): 1, (2, 1): -1},
    (4, 2): {(2, 1): 1, (1, 2): -1},
}


def a4_model(trunc, ring=RATIONALS):
    return PBWModel("a4", A4_LETTERS, A4_CLASSES, A4_BRACKETS, trunc, ring)


def a4_generators(model):
    """Images of all six t_ij and the central sum c in the model."""
    g = {name: model.letter(name) for name in ("t12", "t14", "t23", "t24", "t34", "c")}
    g["t13"] = model.combo(
        {"c": 1, "t14": -1, "t24": -1, "t34": -1, "t12": -1, "t23": -1}
    )
    return g


# -- the five-strand model ---------------------------------------------

P5_LETTERS = ("X34", "X45", "X24", "X12", "X23")
P5_CLASSES = (FIBER, FIBER, FIBER, BASE, BASE)
# [X12, X24] = [X34, X24] + [X45, X24], [X23, X34] = [X34, X24],
# [X23, X24] = [X24, X34]; everything else commutes.
P5_BRACKETS = {
    (3, 0): {},
    (3, 1): {},
    (3, 2): {(0, 2): 1, (2, 0): -1, (1, 2): 1, (2, 1): -1},
    (4, 0): {(0, 2): 1, (2, 0): -1},
    (4, 1): {},
    (4, 2): {(2, 0): 1, (0, 2): -1},
}


def p5_model(trunc, ring=RATIONALS):
    return PBWModel("p5", P5_LETTERS, P5_CLASSES, P5_BRACKETS, trunc, ring)


def p5_generators(model):
    """Images of all ten X_ij in the model letters."""
    g = {name: model.letter(name) for name in P5_LETTERS}
    g["X13"] = model.combo({"X45": 1, "X12": -1, "X23": -1})
    g["X14"] = model.combo({"X24": -1, "X34": -1, "X45": -1})
    g["X15"] = model.combo({"X23": 1, "X24": 1, "X34": 1})
    g["X25"] = model.combo({"X12": -1, "X23": -1, "X24": -1})
    g["X35"] = model.combo({"X12": 1, "X34": -1, "X45": -1})
    g["X51"] = g["X15"]
    return g


# -- ring lifting -------------------------------------------------------


def lift_series(s, ring):
    """Re-embed a rational-coefficient series into a larger ring."""
    return Series(
        s.alphabet, s.trunc, ring, {w: ring.embed(c) for w, c in s.terms.items()}
    )


# -- equation checkers --------------------------------------------------


def check_pentagon(phi, model=None):
    """LHS - RHS of the pentagon equation in the four-strand model."""
    m = model or a4_model(phi.trunc, phi.ring)
    g = a4_generators(m)
    f1 = m.evaluate(phi, g["t12"], g["t23"].add(g["t24"]))
    f2 = m.evaluate(phi, g["t13"].add(g["t23"]), g["t34"])
    f3 = m.evaluate(phi, g["t23"], g["t34"])
    f4 = m.evaluate(phi, g["t12"].add(g["t13"]), g["t24"].add(g["t34"]))
    f5 = m.evaluate(phi, g["t12"], g["t23"])
    return m.mul(f1, f2).sub(m.mul(m.mul(f3, f4), f5))


def check_5cycle(phi, model=None):
    """Residual of phi_345 phi_512 phi_234 phi_451 phi_123 - 1."""
    m = model or p5_model(phi.trunc, phi.ring)
    g = p5_generators(m)
    fs = [
        m.evaluate(phi, g["X34"], g["X45"]),
        m.evaluate(phi, g["X51"], g["X12"]),
        m.evaluate(phi, g["X23"], g["X34"]),
        m.evaluate(phi, g["X45"], g["X51"]),
        m.evaluate(phi, g["X12"], g["X23"]),
    ]
    prod = fs[0]
    for f in fs[1:]:
        prod = m.mul(prod, f)
    return prod.sub(m.one())


def check_hexagons(phi):
    """Residuals of the two hexagon equations over QQ[mu]/(mu^2 - 24 c_{X0X1})."""
    ring = QuadraticExtension(phi.coefficient((0, 1)) * 24)
    mu_half = ring.mu * ring.embed(qq(1, 2))
    m = a4_model(phi.trunc, ring)
    g = a4_generators(m)
    phi = lift_series(phi, ring)

    def half_exp(t):
        return m.exp(t.scale(mu_half))

    t12, t13, t23 = g["t12"], g["t13"], g["t23"]
    lhs1 = half_exp(t13.add(t23))
    rhs1 = m.evaluate(phi, t13, t12)
    rhs1 = m.mul(rhs1, half_exp(t13))
    rhs1 = m.mul(rhs1, m.inverse(m.evaluate(phi, t13, t23)))
    rhs1 = m.mul(rhs1, half_exp(t23))
    rhs1 = m.mul(rhs1, m.evaluate(phi, t12, t23))
    lhs2 = half_exp(t12.add(t13))
    rhs2 = m.inverse(m.evaluate(phi, t23, t13))
    rhs2 = m.mul(rhs2, half_exp(t13))
    rhs2 = m.mul(rhs2, m.evaluate(phi, t12, t13))
    rhs2 = m.mul(rhs2, half_exp(t12))
    rhs2 = m.mul(rhs2, m.inverse(m.evaluate(phi, t12, t23)))
    return lhs1.sub(rhs1), lhs2.sub(rhs2)


# -- homomorphisms between the five-strand algebra and U<<X0,X1>> -------


def projection_images(which, trunc, ring=RATIONALS):
    """Images of the model letters X34, X45, X24, X12, X23 under p2, p3, p4."""
    from .series import letter

    x0 = letter(X_ALPHABET, trunc, "X0", ring)
    x1 = letter(X_ALPHABET, trunc, "X1", ring)
    z = zero(X_ALPHABET, trunc, ring)
    if which == "p4":
        return [z, z, z, x0, x1]
    if which == "p2":
        return [x1, x0, z, z, z]
    if which == "p3":
        return [z, x0, x1, x0, z]
    raise ValueError("unknown projection %r" % which)


def apply_projection(which, e, ring=RATIONALS):
    """Push a five-strand model series down to a series over X0, X1."""
    from .series import SeriesAlgebra

    target = SeriesAlgebra(X_ALPHABET, e.trunc, e.ring)
    images = projection_images(which, e.trunc, e.ring)
    return substitute(e, images, target)


def embedding_images(which, model):
    """Images of X0, X1 under i123, i451, i432, i215 in the five-strand model."""
    g = p5_generators(model)
    if which == "i123":
        return [g["X12"], g["X23"]]
    if which == "i451":
        return [g["X45"], g["X51"]]
    if which == "i432":
        return [g["X34"], g["X23"]]
    if which == "i215":
        return [g["X12"], g["X15"]]
    raise ValueError("unknown embedding %r" % which)


def apply_embedding(which, phi, model=None):
    m = model or p5_model(phi.trunc, phi.ring)
    g0, g1 = embedding_images(which, m)
    return m.evaluate(phi, g0, g1)


def tau_images(p5m):
    """Images of the four-strand model letters under tau in the five-strand model."""
    g = p5_generators(p5m)
    return [g["X14"], g["X24"], g["X34"], g["X12"], g["X23"], p5m.zero()]


def apply_tau(e, p5m=None):
    m = p5m or p5_model(e.trunc, e.ring)
    return substitute(e, tau_images(m), m)

"""Coefficient rings for series coefficients.

Every ring here is an exact commutative ring containing the rationals:
plain rationals, univariate polynomials over the rationals, a quadratic
extension adjoining mu with mu^2 = q, and truncated commutative power
series in two variables.  Ring elements support +, -, *, unary - and ==;
a ring object knows its zero/one and how to embed a rational.
"""

from .rationals import QQ, qq, format_rational


class RationalField:
    """The field of exact rationals."""

    name = "QQ"

    def __init__(self):
        self.zero = qq(0)
        self.one = qq(1)

    def embed(self, c):
        return QQ(c)

    def is_zero(self, x):
        return x == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / QQ(a)

    def format(self, x):
        return format_rational(x)


class PrimeField:
    """F_p for a large prime, used for fast dimension certificates."""

    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1

    def embed(self, c):
        c = QQ(c)
        num = int(c.numerator) % self.p
        den = int(c.denominator) % self.p
        return num * pow(den, self.p - 2, self.p) % self.p

    def is_zero(self, x):
        return x == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def format(self, x):
        return str(x)


class Poly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        n = len(coeffs)
        while n > 0 and coeffs[n - 1] == 0:
            n -= 1
        self.coeffs = tuple(coeffs[:n])

    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, n):
        return self.coeffs[n] if n < len(self.coeffs) else qq(0)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [qq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%r)" % (self.coeffs,)


class PolynomialRing:
    """QQ[var] for a named formal variable (e.g. the regularization parameter)."""

    def __init__(self, var="T"):
        self.var = var
        self.zero = Poly(())
        self.one = Poly((qq(1),))
        self.gen = Poly((qq(0), qq(1)))

    def embed(self, c):
        c = QQ(c)
        return Poly((c,)) if c != 0 else self.zero

    def is_zero(self, x):
        return not x.coeffs

    def format(self, x):
        if not x.coeffs:
            return "0"
        parts = []
        for n, c in enumerate(x.coeffs):
            if c == 0:
                continue
            if n == 0:
                parts.append(format_rational(c))
            else:
                parts.append("%s*%s^%d" % (format_rational(c), self.var, n))
        return " + ".join(parts)


class QuadElt:
    """a + b*mu with mu^2 = q."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q):
        self.a = a
        self.b = b
        self.q = q

    def __add__(self, other):
        return QuadElt(self.a + other.a, self.b + other.b, self.q)

    def __sub__(self, other):
        return QuadElt(self.a - other.a, self.b - other.b, self.q)

    def __neg__(self):
        return QuadElt(-self.a, -self.b, self.q)

    def __mul__(self, other):
        return QuadElt(
            self.a * other.a + self.q * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.q,
        )

    def __eq__(self, other):
        return isinstance(other, QuadElt) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return "QuadElt(%s, %s)" % (self.a, self.b)


class QuadraticExtension:
    """QQ[mu] / (mu^2 - q) for a fixed rational q."""

    def __init__(self, q):
        self.q = QQ(q)
        self.zero = QuadElt(qq(0), qq(0), self.q)
        self.one = QuadElt(qq(1), qq(0), self.q)
        self.mu = QuadElt(qq(0), qq(1), self.q)

    def embed(self, c):
        return QuadElt(QQ(c), qq(0), self.q)

    def is_zero(self, x):
        return x.a == 0 and x.b == 0

    def format(self, x):
        return "%s + %s*mu" % (format_rational(x.a), format_rational(x.b))


class CommSeries:
    """Truncated commutative power series in two variables."""

    __slots__ = ("terms", "trunc")

    def __init__(self, terms, trunc):
        self.trunc = trunc
        self.terms = {m: c for m, c in terms.items() if c != 0 and m[0] + m[1] <= trunc}

    def coefficient(self, i, j):
        return self.terms.get((i, j), qq(0))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, qq(0)) + c
        return CommSeries(out, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CommSeries({m: -c for m, c in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        out = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                if i + k + j + l > self.trunc:
                    continue
                m = (i + k, j + l)
                out[m] = out.get(m, qq(0)) + a * b
        return CommSeries(out, self.trunc)

    def __eq__(self, other):
        return isinstance(other, CommSeries) and self.terms == other.terms

    def __repr__(self):
        return "CommSeries(%r, trunc=%d)" % (self.terms, self.trunc)


class CommSeriesRing:
    """QQ[[x0, x1]] truncated at a fixed total degree."""

    def __init__(self, trunc, names=("x0", "x1")):
        self.trunc = trunc
        self.names = names
        self.zero = CommSeries({}, trunc)
        self.one = CommSeries({(0, 0): qq(1)}, trunc)
        self.x0 = CommSeries({(1, 0): qq(1)}, trunc)
        self.x1 = CommSeries({(0, 1): qq(1)}, trunc)

    def embed(self, c):
        return CommSeries({(0, 0): QQ(c)}, self.trunc)

    def is_zero(self, x):
        return not x.terms

    def format(self, x):
        if not x.terms:
            return "0"
        parts = []
        for (i, j) in sorted(x.terms):
            parts.append(
                "%s*%s^%d*%s^%d"
                % (format_rational(x.terms[(i, j)]), self.names[0], i, self.names[1], j)
            )
        return " + ".join(parts)


RATIONALS = RationalField()

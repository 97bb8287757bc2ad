"""Exact rational scalars, backed by gmpy2 when available."""

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


def qq(p, q=1):
    """Exact rational p/q."""
    return QQ(p, q)


ZERO = qq(0)
ONE = qq(1)


def format_rational(c):
    """Serialize as "p/q" (denominator always present)."""
    return "%d/%d" % (c.numerator, c.denominator)


def parse_rational(s):
    p, _, q = s.partition("/")
    return qq(int(p), int(q) if q else 1)


def binomial(n, k):
    if k < 0 or k > n:
        return ZERO
    out = ONE
    for i in range(k):
        out = out * qq(n - i, i + 1)
    return out

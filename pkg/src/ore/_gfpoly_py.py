"""Dense polynomial arithmetic over GF(p), pure Python backend.

Polynomials are tuples of ints in {0, ..., p-1}, little endian: index i
holds the coefficient of x^i.  The leading coefficient is nonzero; the
zero polynomial is the empty tuple.  These functions are the hot kernel
of the whole library; ore.gfpoly selects between this module and the
compiled twin at import time.
"""

BACKEND = "python"


def trim(c):
    """Drop trailing zero coefficients."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def deg(a):
    """Degree; -1 for the zero polynomial (kernel-level convention)."""
    return len(a) - 1


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return trim(out)


def neg(a, p):
    return tuple((p - x) % p for x in a)


def sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return trim(out)


def scale(a, c, p):
    c %= p
    if c == 0:
        return ()
    return trim([(x * c) % p for x in a])


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % p for v in out])


def divmod_(a, b, p):
    """Return (q, r) with a = q*b + r and deg r < deg b.  b must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = (rem[i + db] * inv_lead) % p
        if c:
            q[i] = c
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % p
    return trim(q), trim(rem[:db])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    """Scale to leading coefficient 1 (zero polynomial stays zero)."""
    if not a or a[-1] == 1:
        return tuple(a)
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a, b, p):
    """Monic greatest common divisor."""
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while b:
        q, r = divmod_(a, b, p)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if a and a[-1] != 1:
        c = pow(a[-1], p - 2, p)
        a, s0, t0 = scale(a, c, p), scale(s0, c, p), scale(t0, c, p)
    return a, s0, t0


def inv_mod(a, m, p):
    """Inverse of a modulo m; raises ZeroDivisionError if not coprime."""
    g, s, _ = xgcd(a, m, p)
    if len(g) != 1:
        raise ZeroDivisionError("element not invertible modulo m")
    return rem(s, m, p)


def mul_mod(a, b, m, p):
    return rem(mul(a, b, p), m, p)


def pow_mod(a, e, m, p):
    """a**e modulo m (e >= 0)."""
    result = rem((1,), m, p)
    a = rem(a, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, a, p), m, p)
        a = rem(mul(a, a, p), m, p)
        e >>= 1
    return result


def eval_at(a, x, p):
    """Evaluate at an integer point, mod p."""
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc

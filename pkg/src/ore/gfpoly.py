"""Polynomial arithmetic over GF(p): backend selection plus utilities.

The arithmetic kernel (add/mul/divmod/gcd on dense coefficient tuples)
exists twice: a compiled Cython module ore._gfpoly and the pure Python
twin ore._gfpoly_py.  The compiled one is preferred when importable;
set ORE_PURE_PYTHON=1 to force the fallback.  Everything above the
kernel (irreducibility, enumeration, p-th roots) lives here and is
backend independent.
"""

import itertools
import os

if os.environ.get("ORE_PURE_PYTHON"):
    from ore import _gfpoly_py as _impl
else:
    try:
        from ore import _gfpoly as _impl  # compiled kernel
    except ImportError:
        from ore import _gfpoly_py as _impl

BACKEND = _impl.BACKEND

trim = _impl.trim
deg = _impl.deg
add = _impl.add
neg = _impl.neg
sub = _impl.sub
scale = _impl.scale
mul = _impl.mul
divmod_ = _impl.divmod_
rem = _impl.rem
monic = _impl.monic
gcd = _impl.gcd
xgcd = _impl.xgcd
inv_mod = _impl.inv_mod
mul_mod = _impl.mul_mod
pow_mod = _impl.pow_mod
eval_at = _impl.eval_at

X = (0, 1)


def const(c, p):
    """Constant polynomial."""
    c %= p
    return (c,) if c else ()


def shift(a, k):
    """Multiply by x^k."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def pow_(a, e, p):
    """a**e without modular reduction (e >= 0)."""
    result = (1,)
    while e:
        if e & 1:
            result = mul(result, a, p)
        a = mul(a, a, p)
        e >>= 1
    return result


def monic_polys(degree, p):
    """All monic polynomials of exactly the given degree."""
    for lower in itertools.product(range(p), repeat=degree):
        yield tuple(lower) + (1,)


def all_polys(max_degree, p):
    """All polynomials of degree <= max_degree, zero included."""
    yield ()
    for d in range(max_degree + 1):
        for lower in itertools.product(range(p), repeat=d):
            for lead in range(1, p):
                yield tuple(lower) + (lead,)


def is_irreducible(a, p):
    """Trial division by every monic polynomial of degree <= deg(a)/2."""
    d = deg(a)
    if d < 1:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for b in monic_polys(k, p):
            if not rem(a, b, p):
                return False
    return True


def irreducibles(degree, p):
    """Monic irreducible polynomials of exactly the given degree, in
    lexicographic order of their coefficient tuples (constant term first)."""
    for a in monic_polys(degree, p):
        if is_irreducible(a, p):
            yield a


def smallest_irreducible(degree, p):
    """Deterministic modulus choice for extension field construction."""
    for a in irreducibles(degree, p):
        return a
    raise ValueError(f"no irreducible of degree {degree} over GF({p})")


def pth_power(a, p):
    """a(x)**p, which over GF(p) is just a(x**p)."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * p + 1)
    for i, c in enumerate(a):
        out[i * p] = c
    return tuple(out)


def pth_root(a, p):
    """Exact p-th root, or None.  Exists iff the support lies in p*Z."""
    if not a:
        return ()
    if (len(a) - 1) % p:
        return None
    out = [0] * ((len(a) - 1) // p + 1)
    for i, c in enumerate(a):
        if c:
            if i % p:
                return None
            out[i // p] = c
    return tuple(out)


def necklace_count(degree, p):
    """Number of monic irreducibles of the given degree (Moebius sum).

    Used as an independent oracle for the irreducible enumeration."""
    def moebius(n):
        result, k, m = 1, 2, n
        while k * k <= m:
            if m % k == 0:
                m //= k
                if m % k == 0:
                    return 0
                result = -result
            k += 1
        if m > 1:
            result = -result
        return result

    total = 0
    for d in range(1, degree + 1):
        if degree % d == 0:
            total += moebius(degree // d) * p**d
    return total // degree

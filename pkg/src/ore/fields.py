"""Field kernels of characteristic p.

Four kernels are supported, identified by a FieldDescriptor:

* ``prime``      GF(p), payload an int in {0, ..., p-1}
* ``extension``  GF(p^n) = GF(p)[a]/(modulus), payload a coefficient
                 tuple of degree < n (trimmed, little endian)
* ``ratfn``      GF(p)(t), payload a reduced fraction (num, den) of
                 GF(p)[t] polynomials with monic denominator
* ``laurent``    GF(p)((t)) truncated at a finite precision, payload a
                 LaurentSeries from ore.valued

All values are immutable and every operation is pure.  The perfect
kernels (prime, extension) admit p-th roots everywhere; for the other
two ``pth_root`` returns None when no root exists, which is semantic
information the skew-ring module consumes.
"""

import itertools
from dataclasses import dataclass, field

from ore import gfpoly
from ore.errors import DescriptorMismatch, DivisionByZero, InfiniteField

NEG_INFINITY = float("-inf")


def is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    p: int
    n: int = 1
    modulus: tuple = None
    ramification: int = 1
    precision: int = 40

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    @property
    def size(self):
        """Number of elements, or None for the infinite kernels."""
        if self.kind in ("prime", "extension"):
            return self.p**self.n
        return None

    @property
    def is_perfect(self):
        return self.kind in ("prime", "extension")

    def __str__(self):
        return render_descriptor(self)


def Fp(p):
    """The prime field GF(p)."""
    return FieldDescriptor("prime", p)


def Fq(p, n, modulus=None):
    """GF(p^n) with an explicit monic irreducible modulus.

    When no modulus is supplied the lexicographically smallest monic
    irreducible of degree n is used, so element encodings are
    reproducible across runs.
    """
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        modulus = gfpoly.smallest_irreducible(n, p)
    else:
        modulus = gfpoly.trim(modulus)
        if gfpoly.deg(modulus) != n or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not gfpoly.is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
    return FieldDescriptor("extension", p, n, modulus)


def RatFn(p):
    """The rational function field GF(p)(t)."""
    return FieldDescriptor("ratfn", p)


def Laurent(p, precision=40, ramification=1):
    """Truncated Laurent series GF(p)((t)) with a default working precision."""
    m = ramification
    while m % p == 0:
        m //= p
    if m != 1:
        raise ValueError("ramification must be a power of p")
    return FieldDescriptor("laurent", p, ramification=ramification, precision=precision)


def compatible(d1, d2):
    """Same kernel.  Laurent descriptors match on p alone; the series
    payloads carry their own precision and ramification."""
    if d1 is d2 or d1 == d2:
        return True
    return d1.kind == "laurent" and d2.kind == "laurent" and d1.p == d2.p


class FieldElement:
    """A value in one of the four kernels, carrying its descriptor."""

    __slots__ = ("descriptor", "payload")

    def __init__(self, descriptor, payload):
        self.descriptor = descriptor
        self.payload = payload

    def _check(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return element(self.descriptor, other)
            return None
        if not compatible(self.descriptor, other.descriptor):
            raise DescriptorMismatch(
                f"{render_descriptor(self.descriptor)} vs "
                f"{render_descriptor(other.descriptor)}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _sub(self, other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _sub(other, self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _div(self, other)

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return _div(other, self)

    def __neg__(self):
        return _neg(self)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = _div(one(self.descriptor), self)
            e = -e
        result = one(self.descriptor)
        while e:
            if e & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = element(self.descriptor, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            compatible(self.descriptor, other.descriptor)
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.descriptor.kind, self.descriptor.p, self.payload))

    def __bool__(self):
        return not is_zero(self)

    def __str__(self):
        from ore import syntax

        return syntax.render_element(self)

    def __repr__(self):
        return f"<{self} : {render_descriptor(self.descriptor)}>"


def element(d, value):
    """Coerce an int, coefficient tuple or payload into the kernel d."""
    if isinstance(value, FieldElement):
        if not compatible(value.descriptor, d):
            raise DescriptorMismatch("element belongs to a different kernel")
        return value
    if d.kind == "prime":
        return FieldElement(d, value % d.p)
    if d.kind == "extension":
        if isinstance(value, int):
            return FieldElement(d, gfpoly.const(value, d.p))
        payload = gfpoly.rem(gfpoly.trim(value), d.modulus, d.p)
        return FieldElement(d, payload)
    if d.kind == "ratfn":
        if isinstance(value, int):
            return FieldElement(d, (gfpoly.const(value, d.p), (1,)))
        num, den = value
        return FieldElement(d, _ratfn_normalize(gfpoly.trim(num), gfpoly.trim(den), d.p))
    if d.kind == "laurent":
        from ore import valued

        if isinstance(value, int):
            return FieldElement(d, valued.LaurentSeries.constant(value, d.p))
        if isinstance(value, valued.LaurentSeries):
            return FieldElement(d, value)
    raise ValueError(f"cannot build {d.kind} element from {value!r}")


def zero(d):
    return element(d, 0)


def one(d):
    return element(d, 1)


def gen(d):
    """Canonical generator: a for extensions, t for ratfn and laurent."""
    if d.kind == "extension":
        return element(d, (0, 1))
    if d.kind == "ratfn":
        return element(d, ((0, 1), (1,)))
    if d.kind == "laurent":
        from ore import valued

        return FieldElement(d, valued.LaurentSeries.monomial(1, 1, d.p))
    raise ValueError("prime fields have no distinguished generator")


def is_zero(a):
    if a.descriptor.kind == "prime":
        return a.payload == 0
    if a.descriptor.kind == "extension":
        return a.payload == ()
    if a.descriptor.kind == "ratfn":
        return a.payload[0] == ()
    return a.payload.is_zero()


def _ratfn_normalize(num, den, p):
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return ((), (1,))
    g = gfpoly.gcd(num, den, p)
    if len(g) > 1:
        num = gfpoly.divmod_(num, g, p)[0]
        den = gfpoly.divmod_(den, g, p)[0]
    lead = den[-1]
    if lead != 1:
        c = pow(lead, p - 2, p)
        num = gfpoly.scale(num, c, p)
        den = gfpoly.scale(den, c, p)
    return (num, den)


def _add(a, b):
    d, p = a.descriptor, a.descriptor.p
    if d.kind == "prime":
        return FieldElement(d, (a.payload + b.payload) % p)
    if d.kind == "extension":
        return FieldElement(d, gfpoly.add(a.payload, b.payload, p))
    if d.kind == "ratfn":
        n1, d1 = a.payload
        n2, d2 = b.payload
        num = gfpoly.add(gfpoly.mul(n1, d2, p), gfpoly.mul(n2, d1, p), p)
        return FieldElement(d, _ratfn_normalize(num, gfpoly.mul(d1, d2, p), p))
    return FieldElement(d, a.payload.add(b.payload))


def _neg(a):
    d, p = a.descriptor, a.descriptor.p
    if d.kind == "prime":
        return FieldElement(d, (-a.payload) % p)
    if d.kind == "extension":
        return FieldElement(d, gfpoly.neg(a.payload, p))
    if d.kind == "ratfn":
        num, den = a.payload
        return FieldElement(d, (gfpoly.neg(num, p), den))
    return FieldElement(d, a.payload.neg())


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    d, p = a.descriptor, a.descriptor.p
    if d.kind == "prime":
        return FieldElement(d, (a.payload * b.payload) % p)
    if d.kind == "extension":
        return FieldElement(d, gfpoly.rem(gfpoly.mul(a.payload, b.payload, p), d.modulus, p))
    if d.kind == "ratfn":
        n1, d1 = a.payload
        n2, d2 = b.payload
        # cross-cancel before multiplying to keep degrees down
        g1 = gfpoly.gcd(n1, d2, p)
        if len(g1) > 1:
            n1 = gfpoly.divmod_(n1, g1, p)[0]
            d2 = gfpoly.divmod_(d2, g1, p)[0]
        g2 = gfpoly.gcd(n2, d1, p)
        if len(g2) > 1:
            n2 = gfpoly.divmod_(n2, g2, p)[0]
            d1 = gfpoly.divmod_(d1, g2, p)[0]
        return FieldElement(
            d, _ratfn_normalize(gfpoly.mul(n1, n2, p), gfpoly.mul(d1, d2, p), p)
        )
    return FieldElement(d, a.payload.mul(b.payload))


def _div(a, b):
    d, p = a.descriptor, a.descriptor.p
    if is_zero(b):
        raise DivisionByZero("division by zero")
    if d.kind == "prime":
        return FieldElement(d, (a.payload * pow(b.payload, p - 2, p)) % p)
    if d.kind == "extension":
        inv = gfpoly.inv_mod(b.payload, d.modulus, p)
        return FieldElement(d, gfpoly.rem(gfpoly.mul(a.payload, inv, p), d.modulus, p))
    if d.kind == "ratfn":
        n2, d2 = b.payload
        return _mul(a, FieldElement(d, _ratfn_normalize(d2, n2, p)))
    return FieldElement(d, a.payload.div(b.payload))


def arith(a, b, op):
    """Spec-level dispatcher: op in {add, sub, mul, div}."""
    b = a._check(b)
    if op == "add":
        return _add(a, b)
    if op == "sub":
        return _sub(a, b)
    if op == "mul":
        return _mul(a, b)
    if op == "div":
        return _div(a, b)
    raise ValueError(f"unknown operation {op!r}")


def frobenius(a):
    """a^p, an endomorphism of every kernel."""
    d, p = a.descriptor, a.descriptor.p
    if d.kind == "prime":
        return a
    if d.kind == "extension":
        return FieldElement(d, gfpoly.pow_mod(a.payload, p, d.modulus, p))
    if d.kind == "ratfn":
        num, den = a.payload
        # coefficients are fixed points of x -> x^p, so f^p = f(t^p)
        return FieldElement(d, (gfpoly.pth_power(num, p), gfpoly.pth_power(den, p)))
    return FieldElement(d, a.payload.frobenius())


def pth_root(a):
    """The unique p-th root when it exists, else None.

    Perfect kernels always have one (computed as a^(p^(n-1))); over
    GF(p)(t) it exists iff numerator and denominator are p-th powers in
    GF(p)[t]; over the series kernel iff every supported exponent is
    divisible by p within the current ramification.
    """
    d, p = a.descriptor, a.descriptor.p
    if d.kind == "prime":
        return a
    if d.kind == "extension":
        out = a
        for _ in range(d.n - 1):
            out = frobenius(out)
        return out
    if d.kind == "ratfn":
        num, den = a.payload
        rn = gfpoly.pth_root(num, p)
        rd = gfpoly.pth_root(den, p)
        if rn is None or rd is None:
            return None
        return FieldElement(d, (rn, rd))
    root = a.payload.pth_root()
    return None if root is None else FieldElement(d, root)


def enumerate_elements(d):
    """Yield each element of a finite kernel exactly once, in the
    canonical order (base-p integer encoding, constant digit first)."""
    if d.kind == "prime":
        for v in range(d.p):
            yield FieldElement(d, v)
        return
    if d.kind == "extension":
        for coeffs in itertools.product(range(d.p), repeat=d.n):
            yield FieldElement(d, gfpoly.trim(coeffs))
        return
    raise InfiniteField(f"{d.kind} kernel is infinite")


def coords(a, n=None):
    """Coordinates in the power basis {1, a, ..., a^(n-1)} over GF(p)."""
    d = a.descriptor
    if d.kind == "prime":
        return (a.payload,)
    if d.kind == "extension":
        n = n or d.n
        return tuple(a.payload) + (0,) * (n - len(a.payload))
    raise ValueError("coordinates only defined for finite kernels")


def from_coords(d, vec):
    if d.kind == "prime":
        return FieldElement(d, vec[0] % d.p)
    return element(d, tuple(vec))


def sort_key(a):
    """Deterministic total order on elements of one kernel, used for
    canonical coset representatives and witness selection."""
    d = a.descriptor
    if d.kind == "prime":
        return a.payload
    if d.kind == "extension":
        value = 0
        for c in reversed(a.payload):
            value = value * d.p + c
        return value
    if d.kind == "ratfn":
        num, den = a.payload
        return (len(den), den, len(num), num)
    return a.payload.sort_key()


def render_descriptor(d):
    if d.kind == "prime":
        return f"fp:{d.p}"
    if d.kind == "extension":
        from ore import syntax

        mod = syntax.render_fp_poly(d.modulus, "a", d.p)
        return f"fq:{d.p}^{d.n}:mod={mod}"
    if d.kind == "ratfn":
        return f"ratfn:{d.p}"
    return f"laurent:{d.p}:prec={d.precision}:ram={d.ramification}"


def parse_descriptor(text):
    """Parse the descriptor syntax: fp:2, fq:2^2:mod=a^2+a+1, ratfn:3,
    laurent:2:prec=40:ram=1."""
    parts = text.strip().split(":")
    kind = parts[0]
    if kind == "fp":
        if len(parts) != 2:
            raise ValueError(f"bad prime field descriptor {text!r}")
        return Fp(int(parts[1]))
    if kind == "fq":
        if len(parts) < 2 or "^" not in parts[1]:
            raise ValueError(f"bad extension descriptor {text!r}")
        p_str, n_str = parts[1].split("^")
        p, n = int(p_str), int(n_str)
        modulus = None
        for opt in parts[2:]:
            if opt.startswith("mod="):
                from ore import syntax

                modulus = syntax.parse_fp_poly(opt[4:], "a", p)
            else:
                raise ValueError(f"unknown descriptor option {opt!r}")
        return Fq(p, n, modulus)
    if kind == "ratfn":
        if len(parts) != 2:
            raise ValueError(f"bad rational function descriptor {text!r}")
        return RatFn(int(parts[1]))
    if kind == "laurent":
        if len(parts) < 2:
            raise ValueError(f"bad laurent descriptor {text!r}")
        p = int(parts[1])
        prec, ram = 40, 1
        for opt in parts[2:]:
            if opt.startswith("prec="):
                prec = int(opt[5:])
            elif opt.startswith("ram="):
                ram = int(opt[4:])
            else:
                raise ValueError(f"unknown descriptor option {opt!r}")
        return Laurent(p, prec, ram)
    raise ValueError(f"unknown field kind {kind!r}")

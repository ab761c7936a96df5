"""Finite fields GF(p^e) and their quadratic extensions.

Elements are stored as plain integers: the coefficient vector
``(c_0, ..., c_{e-1})`` of a polynomial over GF(p), little-endian, maps to
``c_0 + c_1 p + ... + c_{e-1} p^{e-1}``.  :class:`FieldSpec` does arithmetic
on these integers directly; :class:`FieldElement` is a thin typed wrapper for
the public API.

The reduction modulus is always the lexicographically smallest monic
irreducible polynomial of the requested degree (coefficients compared
constant term first), so two constructions of the same field agree bit for
bit.  A quadratic extension GF(q^2) is built flat, as GF(p^{2e}), together
with an explicit embedding of GF(q).
"""

from __future__ import annotations

import functools
import itertools
import string
from dataclasses import dataclass

import sympy

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    NotPrime,
    NotPrimePower,
    NotQuadraticExtension,
    TooLarge,
)

DEFAULT_SIZE_CAP = 2**16
# log/antilog/Zech tables are built for fields of at most this order
TABLE_CAP = 2**16

_DIGITS = string.digits + string.ascii_lowercase


def factor_prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``, or raise :class:`NotPrimePower`."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return int(p), int(e)


def is_prime_power(q):
    try:
        factor_prime_power(q)
    except NotPrimePower:
        return False
    return True


def is_irreducible(coeffs, p):
    """Irreducibility over GF(p) of the little-endian coefficient list ``coeffs``."""
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(coeffs)), x, modulus=p).is_irreducible


def smallest_irreducible(p, degree):
    """Lexicographically smallest monic irreducible polynomial of ``degree`` over GF(p)."""
    # product() varies the last position fastest, so c_0 is the most significant key
    for low in itertools.product(range(p), repeat=degree):
        coeffs = (*low, 1)
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError(f"no irreducible polynomial of degree {degree} over GF({p})")


class FieldSpec:
    """The finite field GF(p^e) with a fixed reduction modulus.

    For a quadratic extension, ``base`` is the subfield GF(q) and
    :meth:`embed` maps its elements into this field.
    """

    def __init__(self, p, e, modulus, base=None, tables=None):
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = tuple(modulus)
        self.base = base
        if tables is None:
            tables = self.order <= TABLE_CAP
        self.tables = tables
        self._pow_p = [p**i for i in range(e)]
        self._key = (p, e, self.modulus, base._key if base is not None else None)

        self.generator = self._find_primitive()
        if tables:
            self._build_tables()
        self._embed = self._restrict = self._conj = None
        if base is not None:
            self._build_embedding()

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.base is not None:
            return f"GF({self.base.order}^2)"
        return f"GF({self.order})"

    def __reduce__(self):
        return (_rebuild, (self.p, self.e, self.modulus, self.base, self.tables))

    @property
    def q(self):
        """Order of the field (``p**e``)."""
        return self.order

    # -- coefficient vectors ---------------------------------------------

    def digits(self, x):
        p = self.p
        out = []
        for _ in range(self.e):
            x, c = divmod(x, p)
            out.append(c)
        return out

    def from_digits(self, coeffs):
        return sum(c * w for c, w in zip(coeffs, self._pow_p))

    def serialize(self, x):
        """Little-endian base-p digit string; dot-separated decimals when p > 36."""
        ds = self.digits(x)
        if self.p <= len(_DIGITS):
            return "".join(_DIGITS[c] for c in ds)
        return ".".join(str(c) for c in ds)

    def parse(self, text):
        """Inverse of :meth:`serialize`; raises ``ValueError`` on malformed input."""
        if not isinstance(text, str):
            raise ValueError(f"element must be a digit string, got {text!r}")
        if self.p <= len(_DIGITS):
            parts = list(text)
            try:
                coeffs = [_DIGITS.index(ch) for ch in parts]
            except ValueError:
                raise ValueError(f"invalid digit in {text!r}") from None
        else:
            try:
                coeffs = [int(part) for part in text.split(".")]
            except ValueError:
                raise ValueError(f"invalid digit in {text!r}") from None
        if len(coeffs) != self.e:
            raise ValueError(f"{text!r} has {len(coeffs)} digits, expected {self.e}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"digit out of range in {text!r}")
        return self.from_digits(coeffs)

    def sort_key(self, x):
        return tuple(self.digits(x))

    def ordered_elements(self):
        """All elements ordered by serialized digit string."""
        return sorted(range(self.order), key=self.sort_key)

    # -- slow polynomial arithmetic, used to seed the tables ---------------

    def _mul_poly(self, a, b):
        p, e, mod = self.p, self.e, self.modulus
        if e == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(e):
                    prod[k - e + j] -= c * mod[j]
        return self.from_digits([c % p for c in prod[:e]])

    def _add_poly(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _neg_poly(self, a):
        if self.p == 2:
            return a
        p = self.p
        return self.from_digits([(p - c) % p for c in self.digits(a)])

    def _pow_poly(self, a, k):
        result = 1
        while k:
            if k & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            k >>= 1
        return result

    def _find_primitive(self):
        n = self.order - 1
        if n == 1:
            return 1
        cofactors = [n // int(r) for r in sympy.factorint(n)]
        for g in range(2, self.order):
            if all(self._pow_poly(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group is not cyclic")

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for k in range(n):
            exp[k] = x
            log[x] = k
            x = self._mul_poly(x, self.generator)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        if self.p != 2 and self.e > 1:
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k == 0
            zech = [0] * n
            for k in range(n):
                s = self._add_poly(1, exp[k])
                zech[k] = log[s] if s else -1
            self._zech = zech

    # -- arithmetic on encoded integers -------------------------------------

    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % p
        if not self.tables:
            return self._add_poly(a, b)
        if not a:
            return b
        if not b:
            return a
        log, n = self._log, self.order - 1
        la = log[a]
        z = self._zech[(log[b] - la) % n]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a):
        if self.p == 2 or not a:
            return a
        if self.e == 1:
            return self.p - a
        if not self.tables:
            return self._neg_poly(a)
        return self._exp[self._log[a] + (self.order - 1) // 2]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self.tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_poly(a, b)

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"zero has no inverse in {self!r}")
        if self.tables:
            return self._exp[(self.order - 1) - self._log[a]]
        return self._pow_poly(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        if not a:
            return 1 if k == 0 else 0
        if self.tables:
            return self._exp[self._log[a] * k % (self.order - 1)]
        return self._pow_poly(a, k)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def conj(self, a):
        """``a ** q`` over the base field GF(q), by ``base.e`` Frobenius steps."""
        if self.base is None:
            raise NotQuadraticExtension(f"{self!r} is not a quadratic extension")
        if self._conj is not None:
            return self._conj[a]
        for _ in range(self.base.e):
            a = self.frobenius(a)
        return a

    # -- subfield ---------------------------------------------------------

    def _build_embedding(self):
        base = self.base
        q = base.order
        # the roots of the base modulus all lie in the subfield {x : x^q = x},
        # which is {0} together with the powers of g^(q+1)
        h = self.pow(self.generator, q + 1)
        subfield = [0]
        x = 1
        for _ in range(q - 1):
            subfield.append(x)
            x = self.mul(x, h)
        roots = [r for r in subfield if self._eval_base_modulus(r) == 0]
        root = min(roots, key=self.sort_key)
        powers = [1]
        for _ in range(base.e - 1):
            powers.append(self.mul(powers[-1], root))
        embed = []
        for b in range(q):
            acc = 0
            for c, w in zip(base.digits(b), powers):
                for _ in range(c):
                    acc = self.add(acc, w)
            embed.append(acc)
        self._embed = embed
        self._restrict = {v: b for b, v in enumerate(embed)}
        self.subfield_root = root
        if self.tables:
            conj = list(range(self.order))
            for _ in range(base.e):
                conj = [self.frobenius(a) for a in conj]
            self._conj = conj

    def _eval_base_modulus(self, r):
        acc = 0
        for c in reversed(self.base.modulus):
            acc = self.mul(acc, r)
            for _ in range(c):
                acc = self.add(acc, 1)
        return acc

    def embed(self, b):
        """Image in this field of the base-field element ``b``."""
        if self._embed is None:
            raise NotQuadraticExtension(f"{self!r} is not a quadratic extension")
        return self._embed[b]

    def restrict(self, a):
        """Base-field preimage of ``a``; ``KeyError`` if ``a`` is outside the subfield."""
        if self._restrict is None:
            raise NotQuadraticExtension(f"{self!r} is not a quadratic extension")
        return self._restrict[a]

    def in_subfield(self, a):
        return self.conj(a) == a

    def subfield_elements(self):
        """Embedded GF(q), ordered by serialized digit string in this field."""
        return sorted(self._embed, key=self.sort_key)

    # -- wrapped elements -------------------------------------------------

    def __call__(self, value):
        if isinstance(value, str):
            return FieldElement(self, self.parse(value))
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_digits(value))
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element encoding of {self!r}")
        return FieldElement(self, value)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.order)]


def _rebuild(p, e, modulus, base, tables):
    if base is None:
        return make_field(p, e, modulus=modulus, tables=tables)
    return quadratic_extension(base, modulus=modulus, tables=tables)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self):
        return tuple(self.field.digits(self.value))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p if self.field.e == 1 else self._small_int(other)
        return NotImplemented

    def _small_int(self, k):
        # integer k as k * 1 in characteristic p
        return self.field.from_digits([k % self.field.p] + [0] * (self.field.e - 1))

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __bool__(self):
        return self.value != 0

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def conj(self):
        return FieldElement(self.field, self.field.conj(self.value))

    def __str__(self):
        return self.field.serialize(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.field.serialize(self.value)!r})"


def _check(p, e, cap):
    if not isinstance(p, int) or not sympy.isprime(p):
        raise NotPrime(f"{p!r} is not prime")
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"extension degree must be a positive integer, got {e!r}")
    if p**e > cap:
        raise TooLarge(f"GF({p}^{e}) exceeds the size cap {cap}")


def _check_modulus(modulus, p, degree):
    modulus = tuple(modulus)
    if len(modulus) != degree + 1:
        raise InvalidModulus(f"modulus must have degree {degree}")
    if any(not isinstance(c, int) or not 0 <= c < p for c in modulus):
        raise InvalidModulus(f"modulus coefficients must lie in 0..{p - 1}")
    if modulus[-1] != 1:
        raise InvalidModulus("modulus must be monic")
    if not is_irreducible(modulus, p):
        raise InvalidModulus(f"modulus {modulus} is reducible over GF({p})")
    return modulus


@functools.lru_cache(maxsize=None)
def make_field(p, e=1, cap=DEFAULT_SIZE_CAP, modulus=None, tables=None):
    """GF(p^e) with the canonical modulus, or with ``modulus`` if one is given."""
    _check(p, e, cap)
    if modulus is None:
        modulus = smallest_irreducible(p, e)
    else:
        modulus = _check_modulus(modulus, p, e)
    return FieldSpec(p, e, modulus, tables=tables)


@functools.lru_cache(maxsize=None)
def quadratic_extension(base, cap=DEFAULT_SIZE_CAP, modulus=None, tables=None):
    """GF(q^2) as GF(p^{2e}), with an embedding of ``base`` = GF(q)."""
    if base.base is not None:
        raise ValueError(f"{base!r} is already a quadratic extension")
    if base.order > cap:
        raise TooLarge(f"base field of order {base.order} exceeds the size cap {cap}")
    p, e = base.p, 2 * base.e
    if modulus is None:
        modulus = smallest_irreducible(p, e)
    else:
        modulus = _check_modulus(modulus, p, e)
    return FieldSpec(p, e, modulus, base=base, tables=tables)


def hermitian_field(q, cap=DEFAULT_SIZE_CAP):
    """GF(q^2) over GF(q) for the prime power ``q``."""
    p, e = factor_prime_power(q)
    return quadratic_extension(make_field(p, e, cap=cap), cap=cap)


def _unwrap(x, y):
    if x.field != y.field:
        raise FieldMismatch(f"{x.field!r} vs {y.field!r}")
    return x.field, x.value, y.value


def add(x, y):
    f, a, b = _unwrap(x, y)
    return FieldElement(f, f.add(a, b))


def mul(x, y):
    f, a, b = _unwrap(x, y)
    return FieldElement(f, f.mul(a, b))


def neg(x):
    return FieldElement(x.field, x.field.neg(x.value))


def inv(x):
    return FieldElement(x.field, x.field.inv(x.value))


def conj(x):
    return FieldElement(x.field, x.field.conj(x.value))

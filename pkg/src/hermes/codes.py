"""F_q-linear Hermitian rank-metric codes: parameters, bounds and packing density.

Parameter-level checks (:func:`singleton_check`, :func:`sphere_packing_check`,
:func:`packing_density`) take a :class:`CodeParams` with an arbitrary integer
size ``M``, so hypothetical and nonlinear parameter sets can be screened.
Only :class:`LinearCode` ties parameters to an actual subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .counting import BoundBracket, ball_size, packing_radius
from .errors import (
    CodewordSpaceTooLarge,
    Degenerate,
    FieldMismatch,
    InvalidParameters,
    LinearDependence,
    ShapeMismatch,
    UnsupportedDistance,
)
from .hermitian import HermitianMatrix, rank_of_rows

DEFAULT_CODEWORD_CAP = 2**24


class LinearCode:
    """An F_q-subspace of H_n(q^2) spanned by ``basis``.

    The basis must be F_q-linearly independent; :class:`LinearDependence`
    names the first basis index that is not.
    """

    def __init__(self, field, n, basis):
        self.field = field
        self.n = n
        self.basis = tuple(basis)
        for i, b in enumerate(self.basis):
            if not isinstance(b, HermitianMatrix):
                raise TypeError(f"basis[{i}] is not a HermitianMatrix")
            if b.field != field:
                raise FieldMismatch(f"basis[{i}] lies over {b.field!r}, expected {field!r}")
            if b.n != n:
                raise ShapeMismatch(f"basis[{i}] has order {b.n}, expected {n}")
        self._theta = min(
            (x for x in range(field.order) if not field.in_subfield(x)), key=field.sort_key
        )
        self._delta_inv = field.inv(field.sub(self._theta, field.conj(self._theta)))
        vectors = []
        for i, b in enumerate(self.basis):
            vectors.append(self.coordinates(b))
            if rank_of_rows(vectors, field) < len(vectors):
                raise LinearDependence(i)

    @property
    def q(self):
        return self.field.base.order

    @property
    def k(self):
        return len(self.basis)

    @property
    def size(self):
        return self.q**self.k

    def coordinates(self, a):
        """The n^2 GF(q)-coordinates of ``a`` (as embedded elements).

        Diagonal entries come first; each strict-upper entry x contributes
        the pair (u, v) with x = u + v*theta, theta a fixed non-subfield element.
        """
        f = self.field
        out = [a.rows[i][i] for i in range(self.n)]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                x = a.rows[i][j]
                v = f.mul(f.sub(x, f.conj(x)), self._delta_inv)
                u = f.sub(x, f.mul(v, self._theta))
                out.extend((u, v))
        return out

    def _generators(self):
        # F_p-basis of the code: embed(p^j) * B_i, digit index i * e + j
        f = self.field
        units = [f.embed(f.base.p**j) for j in range(f.base.e)]
        gens = []
        for b in self.basis:
            for u in units:
                gens.append([[f.mul(u, x) for x in row] for row in b.rows])
        return gens

    def _gray_walk(self, start, stop):
        """Yield ``(index, rows)`` for codewords ``start..stop-1`` in modular Gray order.

        Consecutive codewords differ by one F_p-generator, so each step
        costs one matrix addition.
        """
        f = self.field
        p = f.p
        gens = self._generators()
        add = f.add
        n = self.n
        digits = []
        x = start
        for _ in gens:
            x, r = divmod(x, p)
            digits.append(r)
        digits.append(0)
        cur = [[0] * n for _ in range(n)]
        for j, g in enumerate(gens):
            for _ in range((digits[j] - digits[j + 1]) % p):
                cur = [[add(a, b) for a, b in zip(r, s)] for r, s in zip(cur, g)]
        for idx in range(start, stop):
            if idx > start:
                j, m = 0, idx
                while m % p == 0:
                    m //= p
                    j += 1
                g = gens[j]
                cur = [[add(a, b) for a, b in zip(r, s)] for r, s in zip(cur, g)]
            yield idx, cur

    def codewords(self, cap=DEFAULT_CODEWORD_CAP):
        self._check_cap(cap)
        for _, rows in self._gray_walk(0, self.size):
            yield HermitianMatrix(self.n, self.field, rows, check=False)

    def _check_cap(self, cap):
        if self.size > cap:
            raise CodewordSpaceTooLarge(f"{self.size} codewords exceed the cap {cap}")

    def min_rank_in_range(self, start, stop):
        """Least rank among nonzero codewords with Gray index in ``[start, stop)``, or None."""
        best = None
        for idx, rows in self._gray_walk(max(start, 0), stop):
            if idx == 0:
                continue
            r = rank_of_rows(rows, self.field)
            if best is None or r < best:
                best = r
                if r == 1:
                    break
        return best

    def params(self, cap=DEFAULT_CODEWORD_CAP):
        d = None if self.k == 0 else min_distance(self, cap)
        return CodeParams(self.q, self.n, self.size, d)


def min_distance(code, cap=DEFAULT_CODEWORD_CAP):
    """Least rank of a nonzero codeword."""
    if code.k == 0:
        raise Degenerate("the zero code has no minimum distance")
    code._check_cap(cap)
    return code.min_rank_in_range(1, code.size)


@dataclass(frozen=True)
class CodeParams:
    """Parameters ``(n, M, d)`` over GF(q^2).

    ``d`` may exceed ``n`` so that impossible hypotheticals can be screened;
    :func:`singleton_check` rejects them.
    """

    q: int
    n: int
    M: int
    d: int | None

    def __post_init__(self):
        if self.M < 1:
            raise InvalidParameters(f"code size must be positive, got {self.M}")
        if self.M == 1:
            if self.d is not None:
                raise InvalidParameters("a one-word code has no minimum distance")
        elif self.d is None or self.d < 1:
            raise InvalidParameters(f"minimum distance must be at least 1, got {self.d}")

    @property
    def t(self):
        if self.d is None:
            raise Degenerate("minimum distance undefined for a one-word code")
        return packing_radius(self.d)


def mrd_params(q, n, d):
    """Parameters of a hypothetical Hermitian MRD code (existence not implied)."""
    if not 1 <= d <= n:
        raise InvalidParameters(f"minimum distance {d} outside 1..{n}")
    return CodeParams(q, n, q ** (n * (n - d + 1)), d)


@dataclass(frozen=True)
class SingletonCheck:
    bound: int
    is_mrd: bool


@dataclass(frozen=True)
class PackingCheck:
    lhs: int
    rhs: int
    slack: int
    is_perfect: bool


def singleton_check(params):
    """Compare ``M`` with ``q^{n(n-d+1)}``."""
    if params.d is None:
        raise Degenerate("minimum distance undefined for a one-word code")
    if params.d > params.n:
        raise InvalidParameters(f"no code of order {params.n} has minimum distance {params.d}")
    bound = params.q ** (params.n * (params.n - params.d + 1))
    if params.M > bound:
        raise InvalidParameters(f"M = {params.M} exceeds the Singleton-like bound {bound}")
    return SingletonCheck(bound, params.M == bound)


def sphere_packing_check(params):
    """``M * B_t`` against ``q^{n^2}``; equality means perfect."""
    lhs = params.M * ball_size(params.q, params.n, params.t)
    rhs = params.q ** (params.n**2)
    if lhs > rhs:
        raise InvalidParameters(f"M * B_t = {lhs} exceeds |H_n(q^2)| = {rhs}")
    return PackingCheck(lhs, rhs, rhs - lhs, lhs == rhs)


def packing_density(params):
    """``M * B_t / q^{n^2}`` as an exact fraction."""
    check = sphere_packing_check(params)
    return Fraction(check.lhs, check.rhs)


def mrd_density(q, n, d):
    """``q^{n(n-d+1)} * B_t / q^{n^2}`` for the formal MRD size.

    Evaluated as arithmetic only, so it is defined even where the MRD size
    degenerates to a single word (d = n + 1).
    """
    t = packing_radius(d)
    if d > n + 1 or t > n:
        raise InvalidParameters(f"no MRD size for n = {n}, d = {d}")
    return Fraction(q ** (n * (n - d + 1)) * ball_size(q, n, t), q ** (n * n))


def _qpow(q, k):
    return Fraction(q) ** k


def density_bounds_mrd(q, n, d, clip=False):
    """Bracket for the density of an MRD code, by parity of ``d``.

    With ``clip`` the bracket is intersected with ``(0, 1]``.
    """
    if not 1 <= d <= n:
        raise InvalidParameters(f"minimum distance {d} outside 1..{n}")
    t = packing_radius(d)
    shift = 0 if d % 2 else -n
    bracket = BoundBracket(_qpow(q, shift - t * t - t), _qpow(q, shift - t * t + t + 3))
    return bracket.clipped() if clip else bracket


def _b2_closed(q, n):
    a = q ** (2 * n) - 1
    return 1 + Fraction(a, q + 1) + Fraction(q * a * (q ** (2 * n - 2) - 1), (q + 1) * (q * q - 1))


def density_upper_bound_general(q, n, d):
    """Upper bound on the density of any code with minimum distance d in 2..6."""
    if d not in (2, 3, 4, 5, 6):
        raise UnsupportedDistance(f"general bound only for d in 2..6, got {d}")
    if d > n:
        raise InvalidParameters(f"minimum distance {d} exceeds n = {n}")
    if d == 2:
        return 1 / _qpow(q, n)
    if d == 3:
        return (_qpow(q, 1 - 2 * n) + 1) / (q + 1)
    if d == 4:
        return (_qpow(q, 1 - 3 * n) + _qpow(q, -n)) / (q + 1)
    if d == 5:
        return _qpow(q, -4 * n) * _b2_closed(q, n)
    return _qpow(q, -5 * n) * _b2_closed(q, n)


@dataclass(frozen=True)
class DensityLimit:
    """Limit of MRD densities as n grows, for fixed q and d.

    ``value`` is the exact limit when known; ``bracket`` bounds it otherwise.
    """

    regime: str
    value: Fraction | None
    bracket: BoundBracket | None


def density_limit(q, d):
    if d < 1:
        raise InvalidParameters(f"minimum distance must be at least 1, got {d}")
    if d % 2 == 0:
        return DensityLimit("even", Fraction(0), None)
    t = packing_radius(d)
    bracket = BoundBracket(_qpow(q, -t * t - t), _qpow(q, -t * t + t + 3))
    value = None
    if d == 1:
        value = Fraction(1)
    elif d == 3:
        value = Fraction(1, q + 1)
    return DensityLimit("odd", value, bracket)


@dataclass(frozen=True)
class DensityReport:
    density: Fraction
    lower: Fraction
    upper: Fraction
    regime: str
    is_mrd: bool
    limit: DensityLimit

    @property
    def decimal(self):
        return render_decimal(self.density)


def density_report(params):
    """Density with the tightest applicable bracket.

    MRD parameters get the MRD bracket; any other code only an upper bound
    (the lower end is 0).
    """
    density = packing_density(params)
    sc = singleton_check(params)
    q, n, d = params.q, params.n, params.d
    bracket = density_bounds_mrd(q, n, d, clip=True)
    lower = bracket.lower if sc.is_mrd else Fraction(0)
    upper = bracket.upper
    if 2 <= d <= 6:
        upper = min(upper, density_upper_bound_general(q, n, d))
    return DensityReport(
        density, lower, upper, "odd" if d % 2 else "even", sc.is_mrd, density_limit(q, d)
    )


def render_decimal(value, digits=12):
    """Decimal string of a fraction to ``digits`` significant digits."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        dec = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{dec:.{digits}g}" if dec else "0"

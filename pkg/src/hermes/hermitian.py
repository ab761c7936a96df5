"""Hermitian matrices over GF(q^2), rank, rank distance, enumeration and sampling."""

from __future__ import annotations

import itertools
import os
import random

from .errors import EnumerationTooLarge, FieldMismatch, NotHermitian, NotQuadraticExtension, ShapeMismatch
from .field import FieldElement

DEFAULT_ENUM_CAP = 2**30


def enumeration_cap(cap=None):
    """Resolve an enumeration cap: explicit value, then ``HERMES_ENUM_CAP``, then the default."""
    if cap is not None:
        return cap
    env = os.environ.get("HERMES_ENUM_CAP")
    if env:
        return int(env)
    return DEFAULT_ENUM_CAP


def _require_extension(field):
    if field.base is None:
        raise NotQuadraticExtension(f"{field!r} is not a quadratic extension GF(q^2)")


def rank_of_rows(rows, field):
    """Rank of a rectangular matrix of encoded field elements.

    Fraction-free forward elimination; the pivot is the first nonzero entry
    of the current column.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    if not nrows:
        return 0
    add, mul, neg = field.add, field.mul, field.neg
    r = 0
    for c in range(len(m[0])):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                na = neg(a)
                m[i] = [add(mul(pv, x), mul(na, y)) for x, y in zip(row, prow)]
        r += 1
        if r == nrows:
            break
    return r


class HermitianMatrix:
    """An immutable n x n matrix A over GF(q^2) with A* = A.

    ``rows`` holds encoded integers; :attr:`entries` wraps them as
    :class:`~hermes.field.FieldElement`.
    """

    __slots__ = ("n", "field", "rows")

    def __init__(self, n, field, rows, check=True):
        self.n = n
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if check:
            _require_extension(field)
            if len(self.rows) != n or any(len(r) != n for r in self.rows):
                raise ShapeMismatch(f"expected a {n}x{n} matrix")
            bad = first_violation(self.rows, field)
            if bad is not None:
                raise NotHermitian(*bad)

    @property
    def entries(self):
        f = self.field
        return [[FieldElement(f, v) for v in row] for row in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        return (
            isinstance(other, HermitianMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"HermitianMatrix({self.field!r}, {self.to_json()})"

    def _compatible(self, other):
        if not isinstance(other, HermitianMatrix):
            raise TypeError(f"expected HermitianMatrix, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.n != other.n:
            raise ShapeMismatch(f"orders {self.n} and {other.n} differ")

    def __add__(self, other):
        self._compatible(other)
        add = self.field.add
        rows = [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return HermitianMatrix(self.n, self.field, rows, check=False)

    def __sub__(self, other):
        self._compatible(other)
        sub = self.field.sub
        rows = [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return HermitianMatrix(self.n, self.field, rows, check=False)

    def __neg__(self):
        neg = self.field.neg
        return HermitianMatrix(self.n, self.field, [[neg(a) for a in r] for r in self.rows], check=False)

    def scale(self, alpha):
        """``alpha * A``; raises :class:`NotHermitian` unless the result is Hermitian."""
        if isinstance(alpha, FieldElement):
            if alpha.field != self.field:
                raise FieldMismatch(f"{alpha.field!r} vs {self.field!r}")
            alpha = alpha.value
        mul = self.field.mul
        return HermitianMatrix(self.n, self.field, [[mul(alpha, a) for a in r] for r in self.rows])

    def rank(self):
        return rank_of_rows(self.rows, self.field)

    def to_json(self):
        s = self.field.serialize
        return [[s(v) for v in row] for row in self.rows]


def first_violation(rows, field):
    """First ``(i, j)`` in row-major order with ``rows[j][i] != conj(rows[i][j])``."""
    conj = field.conj
    n = len(rows)
    for i in range(n):
        for j in range(i, n):
            if rows[j][i] != conj(rows[i][j]):
                return i, j
    return None


def from_entries(n, field, entries):
    """Validate ``entries`` (FieldElements, encoded ints or digit strings) as a Hermitian matrix."""
    _require_extension(field)
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ShapeMismatch(f"expected a {n}x{n} matrix")
    rows = []
    for row in entries:
        out = []
        for x in row:
            if isinstance(x, FieldElement):
                if x.field != field:
                    raise FieldMismatch(f"entry over {x.field!r}, expected {field!r}")
                out.append(x.value)
            elif isinstance(x, str):
                out.append(field.parse(x))
            else:
                if not 0 <= x < field.order:
                    raise ValueError(f"{x} is not an element encoding of {field!r}")
                out.append(x)
        rows.append(out)
    return HermitianMatrix(n, field, rows)


def from_json(n, field, data):
    return from_entries(n, field, data)


def zero(n, field):
    return HermitianMatrix(n, field, [[0] * n for _ in range(n)], check=False)


def identity(n, field):
    return HermitianMatrix(n, field, [[int(i == j) for j in range(n)] for i in range(n)], check=False)


def diagonal(field, values):
    """Diagonal matrix with the given entries (encoded ints of the embedded subfield)."""
    n = len(values)
    return HermitianMatrix(n, field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def off_diagonal(n, field, i, j, value):
    """The matrix with ``value`` at (i, j), its conjugate at (j, i), zero elsewhere."""
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = value
    rows[j][i] = field.conj(value)
    return HermitianMatrix(n, field, rows)


def rank(a):
    return a.rank()


def distance(a, b):
    """Rank distance ``rk(a - b)``."""
    a._compatible(b)
    return (a - b).rank()


def space_size(n, field):
    return field.base.order ** (n * n)


def _assemble(n, conj, diag, upper):
    rows = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        rows[i][i] = diag[i]
        for j in range(i + 1, n):
            v = upper[k]
            rows[i][j] = v
            rows[j][i] = conj(v)
            k += 1
    return tuple(map(tuple, rows))


def iter_rows(n, field, cap=None, partition=None):
    """Raw row tuples of every matrix in H_n(q^2), in enumeration order.

    The order is lexicographic over the free entries: diagonal entries (in
    GF(q)) first, then the strict upper triangle row-major, each entry
    ordered by its digit string.  ``partition`` selects the slice whose
    first diagonal entry is the ``partition``-th subfield element, for
    ``0 <= partition < q``.
    """
    _require_extension(field)
    total = space_size(n, field)
    if total > enumeration_cap(cap):
        raise EnumerationTooLarge(f"|H_{n}({field.base.order}^2)| = {total} exceeds the enumeration cap")
    sub = field.subfield_elements()
    ext = field.ordered_elements()
    m = n * (n - 1) // 2
    first = sub if partition is None else [sub[partition]]
    conj = field.conj
    for head in first:
        for rest in itertools.product(sub, repeat=n - 1):
            diag = (head, *rest)
            for upper in itertools.product(ext, repeat=m):
                yield _assemble(n, conj, diag, upper)


def enumerate_hermitian(n, field, cap=None, partition=None):
    """Yield each matrix of H_n(q^2) exactly once, deterministically ordered."""
    for rows in iter_rows(n, field, cap, partition):
        yield HermitianMatrix(n, field, rows, check=False)


def num_partitions(field):
    return field.base.order


def sample(n, field, seed=None):
    """Uniform random element of H_n(q^2).

    ``seed`` is an int (reproducible) or a :class:`random.Random` to draw from.
    """
    _require_extension(field)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    sub = field.subfield_elements()
    ext_order = field.order
    diag = [rng.choice(sub) for _ in range(n)]
    upper = [rng.randrange(ext_order) for _ in range(n * (n - 1) // 2)]
    return HermitianMatrix(n, field, _assemble(n, field.conj, diag, upper), check=False)

"""Exact scalars and dense matrices over Q or a prime field F_p.

Entries are `fractions.Fraction` over Q and canonical ints in [0, p) over
F_p; no floating point exists anywhere in this package.  The Kronecker
convention is row-major:

    (A tensor B)[i1*rowsB + i2, j1*colsB + j2] = A[i1, j1] * B[i2, j2]

Rank and kernel go through fraction-free Bareiss elimination (rows are
cleared to integers first over Q, so intermediate growth stays polynomial);
inversion and reduced echelon use ordinary exact division.  Matrices
serialize to JSON as {"rows": r, "cols": c, "entries": [...]} with
decimal-free fraction strings.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class SingularMatrix(Exception):
    """Inversion was requested for a matrix without an inverse."""


class ShapeMismatch(Exception):
    """Operand shapes are incompatible for the requested operation."""


class RationalField:
    """The field Q with Fraction elements."""

    name = "q"
    characteristic = 0

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a):
        return str(a)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")


class PrimeField:
    """The field F_p for a prime p, elements stored as ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("modulus must be prime, got %r" % (p,))
        self.p = p
        self.name = "fp:%d" % p
        self.characteristic = p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a):
        return str(a)

    def __repr__(self):
        return "F_%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.name)


QQ = RationalField()

_current_field = QQ


def field_from_spec(spec):
    """Parse a field tag: "q" for the rationals, "fp:<p>" for F_p."""
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError("unknown field spec %r" % (spec,))


def set_field(field):
    """Install the session-wide default field; accepts a Field or a spec tag."""
    global _current_field
    if isinstance(field, str):
        field = field_from_spec(field)
    _current_field = field
    return field


def current_field():
    return _current_field


class ExactMatrix:
    """Dense matrix with exact field entries, stored row-major."""

    __slots__ = ("rows", "cols", "field", "data")

    def __init__(self, rows, cols, data, field=None):
        self.rows = rows
        self.cols = cols
        self.field = field if field is not None else current_field()
        if len(data) != rows * cols:
            raise ShapeMismatch(
                "data length %d does not fill %dx%d" % (len(data), rows, cols))
        self.data = data

    @classmethod
    def zeros(cls, rows, cols, field=None):
        fld = field if field is not None else current_field()
        z = fld.zero()
        return cls(rows, cols, [z] * (rows * cols), fld)

    @classmethod
    def identity(cls, n, field=None):
        fld = field if field is not None else current_field()
        m = cls.zeros(n, n, fld)
        one = fld.one()
        for i in range(n):
            m.data[i * n + i] = one
        return m

    @classmethod
    def from_rows(cls, rows, field=None):
        fld = field if field is not None else current_field()
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        data = []
        for r in rows:
            if len(r) != nc:
                raise ShapeMismatch("ragged rows")
            data.extend(fld.coerce(x) for x in r)
        return cls(nr, nc, data, fld)

    @classmethod
    def column(cls, entries, field=None):
        fld = field if field is not None else current_field()
        return cls(len(entries), 1, [fld.coerce(x) for x in entries], fld)

    @classmethod
    def row(cls, entries, field=None):
        fld = field if field is not None else current_field()
        return cls(1, len(entries), [fld.coerce(x) for x in entries], fld)

    @classmethod
    def basis_column(cls, n, i, field=None):
        m = cls.zeros(n, 1, field)
        m.data[i] = m.field.one()
        return m

    @classmethod
    def from_columns(cls, cols, nrows, field=None):
        """Assemble a matrix from an iterable of length-nrows column lists."""
        fld = field if field is not None else current_field()
        cols = list(cols)
        nc = len(cols)
        m = cls.zeros(nrows, nc, fld)
        for j, col in enumerate(cols):
            if len(col) != nrows:
                raise ShapeMismatch("column %d has length %d, want %d"
                                    % (j, len(col), nrows))
            for i, x in enumerate(col):
                m.data[i * nc + j] = fld.coerce(x)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.data[i * self.cols + j] = self.field.coerce(value)

    def row_list(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def column_list(self, j):
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def copy(self):
        return ExactMatrix(self.rows, self.cols, list(self.data), self.field)

    def _check_field(self, other):
        if self.field != other.field:
            raise ShapeMismatch("mixed fields %r and %r"
                                % (self.field, other.field))

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch("cannot compose %dx%d with %dx%d"
                                % (self.rows, self.cols, other.rows, other.cols))
        fld = self.field
        zero = fld.zero()
        out = ExactMatrix.zeros(self.rows, other.cols, fld)
        a, b, o = self.data, other.data, out.data
        n, m, k = self.rows, self.cols, other.cols
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for t in range(m):
                c = arow[t]
                if c == zero:
                    continue
                boff = t * k
                ooff = i * k
                for j in range(k):
                    o[ooff + j] = fld.add(o[ooff + j], fld.mul(c, b[boff + j]))
        return out

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, c):
        fld = self.field
        c = fld.coerce(c)
        return ExactMatrix(self.rows, self.cols,
                           [fld.mul(c, x) for x in self.data], fld)

    def __add__(self, other):
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("cannot add %dx%d and %dx%d"
                                % (self.rows, self.cols, other.rows, other.cols))
        fld = self.field
        return ExactMatrix(self.rows, self.cols,
                           [fld.add(x, y) for x, y in zip(self.data, other.data)],
                           fld)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        fld = self.field
        return ExactMatrix(self.rows, self.cols,
                           [fld.neg(x) for x in self.data], fld)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.field == other.field and self.data == other.data)

    def __ne__(self, other):
        return not self.__eq__(other)

    def is_zero(self):
        z = self.field.zero()
        return all(x == z for x in self.data)

    def transpose(self):
        out = ExactMatrix.zeros(self.cols, self.rows, self.field)
        for i in range(self.rows):
            for j in range(self.cols):
                out.data[j * self.rows + i] = self.data[i * self.cols + j]
        return out

    def tensor(self, other):
        """Kronecker product, row-major block convention."""
        self._check_field(other)
        fld = self.field
        zero = fld.zero()
        ra, ca, rb, cb = self.rows, self.cols, other.rows, other.cols
        out = ExactMatrix.zeros(ra * rb, ca * cb, fld)
        for i1 in range(ra):
            for j1 in range(ca):
                c = self.data[i1 * ca + j1]
                if c == zero:
                    continue
                for i2 in range(rb):
                    base = (i1 * rb + i2) * (ca * cb) + j1 * cb
                    boff = i2 * cb
                    for j2 in range(cb):
                        out.data[base + j2] = fld.mul(c, other.data[boff + j2])
        return out

    def invert(self):
        """Inverse by exact Gauss-Jordan; raises SingularMatrix."""
        if self.rows != self.cols:
            raise SingularMatrix("only square matrices invert")
        n = self.rows
        fld = self.field
        zero = fld.zero()
        a = [list(self.row_list(i)) + list(ExactMatrix.identity(n, fld).row_list(i))
             for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col] != zero:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrix("rank deficit at column %d" % col)
            a[col], a[piv] = a[piv], a[col]
            inv_p = fld.inv(a[col][col])
            a[col] = [fld.mul(inv_p, x) for x in a[col]]
            for r in range(n):
                if r == col or a[r][col] == zero:
                    continue
                c = a[r][col]
                a[r] = [fld.sub(x, fld.mul(c, y)) for x, y in zip(a[r], a[col])]
        data = []
        for i in range(n):
            data.extend(a[i][n:])
        return ExactMatrix(n, n, data, fld)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [self.field.fmt(x) for x in self.data]}

    @classmethod
    def from_json(cls, obj, field=None):
        fld = field if field is not None else current_field()
        rows, cols = int(obj["rows"]), int(obj["cols"])
        data = [fld.coerce(e) for e in obj["entries"]]
        return cls(rows, cols, data, fld)

    def pretty(self, max_rows=None, max_cols=None):
        nr = self.rows if max_rows is None else min(self.rows, max_rows)
        nc = self.cols if max_cols is None else min(self.cols, max_cols)
        cells = [[self.field.fmt(self[i, j]) for j in range(nc)] for i in range(nr)]
        widths = [max((len(cells[i][j]) for i in range(nr)), default=1)
                  for j in range(nc)]
        lines = []
        for i in range(nr):
            lines.append(" ".join(cells[i][j].rjust(widths[j]) for j in range(nc))
                         + ("  ..." if nc < self.cols else ""))
        if nr < self.rows:
            lines.append("...")
        return "\n".join(lines) if lines else "(empty %dx%d)" % (self.rows, self.cols)

    def __repr__(self):
        return "ExactMatrix(%dx%d over %r)" % (self.rows, self.cols, self.field)


def tens(*mats):
    """Kronecker product of several matrices, left to right."""
    out = mats[0]
    for m in mats[1:]:
        out = out.tensor(m)
    return out


def mul(*mats):
    """Composite  mats[0] * mats[1] * ... (leftmost applied last)."""
    out = mats[0]
    for m in mats[1:]:
        out = out * m
    return out


def _scaled_int_rows(m):
    """Rows of m scaled to integers (Q only); row scaling keeps row space."""
    out = []
    for i in range(m.rows):
        row = m.row_list(i)
        d = lcm(*[x.denominator for x in row]) if row else 1
        out.append([int(x * d) for x in row])
    return out


def _bareiss_echelon(int_rows, ncols):
    """Fraction-free row echelon over Z.

    Returns (rows, pivot_cols); rows[i] has its leading nonzero at
    pivot_cols[i].  Entry growth is bounded by Hadamard via the exact
    two-step division.
    """
    rows = [list(r) for r in int_rows]
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            if all(x == 0 for x in rows[i]):
                continue
            ric = rows[i][c]
            row = rows[i]
            top = rows[r]
            for j in range(ncols):
                row[j] = (row[j] * p - ric * top[j]) // prev
        prev = p
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivot_cols


def _gauss_echelon(m):
    """Plain field-arithmetic echelon; used over F_p where division is cheap."""
    fld = m.field
    zero = fld.zero()
    rows = [list(m.row_list(i)) for i in range(m.rows)]
    pivot_cols = []
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] == zero:
                continue
            f = fld.div(rows[i][c], rows[r][c])
            rows[i] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivot_cols


def _echelon(m):
    if isinstance(m.field, PrimeField):
        return _gauss_echelon(m)
    return _bareiss_echelon(_scaled_int_rows(m), m.cols)


def rank(m):
    rows, pivots = _echelon(m)
    return len(pivots)


def kernel(m):
    """Right kernel basis as the columns of a cols x k matrix."""
    fld = m.field
    rows, pivots = _echelon(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        x = [fld.zero()] * m.cols
        x[f] = fld.one()
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            s = fld.zero()
            for j in range(pc + 1, m.cols):
                xj = x[j]
                if xj == fld.zero():
                    continue
                s = fld.add(s, fld.mul(fld.coerce(rows[i][j]), xj))
            x[pc] = fld.neg(fld.div(s, fld.coerce(rows[i][pc])))
        basis.append(x)
    return ExactMatrix.from_columns(basis, m.cols, fld)


def rref(m):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    fld = m.field
    zero = fld.zero()
    rows = [list(m.row_list(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv_p = fld.inv(rows[r][c])
        rows[r] = [fld.mul(inv_p, x) for x in rows[r]]
        for i in range(len(rows)):
            if i == r or rows[i][c] == zero:
                continue
            f = rows[i][c]
            rows[i] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    flat = []
    for row in rows:
        flat.extend(row)
    return ExactMatrix(len(rows), m.cols, flat, fld), pivots


def random_matrix(rows, cols, rng, bound=5, field=None):
    fld = field if field is not None else current_field()
    if isinstance(fld, PrimeField):
        data = [rng.randrange(fld.p) for _ in range(rows * cols)]
    else:
        data = [Fraction(rng.randint(-bound, bound)) for _ in range(rows * cols)]
    return ExactMatrix(rows, cols, data, fld)


def random_invertible(n, rng, bound=5, field=None):
    """Random invertible n x n matrix with small entries."""
    while True:
        m = random_matrix(n, n, rng, bound, field)
        try:
            m.invert()
        except SingularMatrix:
            continue
        return m

"""Exact scalar arithmetic (rationals and prime fields) and the small dense
linear algebra used everywhere else.

No floats, no tolerances: equality of scalars, vectors and subspaces is
literal equality in the field.  Gaussian elimination pivots on the first
nonzero entry, so identical inputs give identical outputs bit for bit.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

MAX_PRIME = 2**31


class Rationals:
    """The field of rationals, backed by arbitrary-precision Fraction."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

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
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def parse(self, text):
        return Fraction(str(text))

    def show(self, a) -> str:
        return str(a)

    def describe(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Rationals()"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) for a prime p < 2**31; elements are ints in [0, p)."""

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME:
            raise ValueError(f"prime field modulus out of range: {p!r}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        # accepts "n" or "n/d" with d invertible
        s = str(text)
        if "/" in s:
            num, den = s.split("/", 1)
            return self.mul(int(num) % self.p, self.inv(int(den)))
        return int(s) % self.p

    def show(self, a) -> str:
        return str(a % self.p)

    def describe(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def field_from_spec(spec: dict):
    kind = spec.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(spec["p"])
    raise ValueError(f"unknown field kind: {spec!r}")


@dataclass
class Matrix:
    """Dense row-major matrix over an explicit field."""

    field: object
    rows: int
    cols: int
    entries: list = dc_field(default_factory=list)

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, field, rows):
        r = len(rows)
        c = len(rows[0]) if rows else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(field, r, c, flat)

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def mat_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        for i in range(self.rows):
            acc = F.zero
            base = i * self.cols
            for j in range(self.cols):
                e = self.entries[base + j]
                if e != F.zero and v[j] != F.zero:
                    acc = F.add(acc, F.mul(e, v[j]))
            out.append(acc)
        return out


def rref(m: Matrix):
    """Reduced row echelon form.  Returns (rows, pivot_cols)."""
    F = m.field
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c] != F.zero:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != F.zero:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix):
    """Basis of the right kernel, one vector per free column.

    A matrix with zero rows has the full space as kernel, so the result is
    the standard basis of K^cols.
    """
    F = m.field
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [F.zero] * m.cols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(rows[i][f])
        basis.append(v)
    return basis


def solve(m: Matrix, rhs):
    """One solution of m x = rhs (free variables zero), or None."""
    if len(rhs) != m.rows:
        raise ValueError("dimension mismatch")
    F = m.field
    aug = Matrix.from_rows(F, [m.row(i) + [rhs[i]] for i in range(m.rows)]) \
        if m.cols else Matrix.from_rows(F, [[rhs[i]] for i in range(m.rows)])
    rows, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [F.zero] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][m.cols]
    return x


class Echelon:
    """Incrementally reduced spanning set; the workhorse behind the
    subspace predicates."""

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []       # reduced, each with leading one
        self.pivots = []     # pivot index per row, strictly increasing order not required

    def reduce(self, v):
        F = self.field
        v = list(v)
        for piv, row in zip(self.pivots, self.rows):
            if v[piv] != F.zero:
                f = v[piv]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return all(x == self.field.zero for x in self.reduce(v))

    def add(self, v):
        """Insert v; returns True if it enlarged the span."""
        F = self.field
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        v = self.reduce(v)
        for j, x in enumerate(v):
            if x != F.zero:
                inv = F.inv(x)
                v = [F.mul(inv, y) for y in v]
                # back-substitute into existing rows
                for k, row in enumerate(self.rows):
                    if row[j] != F.zero:
                        f = row[j]
                        self.rows[k] = [F.sub(a, F.mul(f, b)) for a, b in zip(row, v)]
                self.rows.append(v)
                self.pivots.append(j)
                return True
        return False

    @property
    def rank(self):
        return len(self.rows)


def span_echelon(field, vectors, dim=None):
    if dim is None:
        if not vectors:
            raise ValueError("cannot infer dimension from an empty list")
        dim = len(vectors[0])
    ech = Echelon(field, dim)
    for v in vectors:
        ech.add(v)
    return ech


def _common_dim(a, b):
    dims = {len(v) for v in a} | {len(v) for v in b}
    if len(dims) > 1:
        raise ValueError("vectors of mixed dimension")
    return dims.pop() if dims else 0


def subspace_equal(field, a, b) -> bool:
    """span(a) == span(b), decided by rank comparisons."""
    dim = _common_dim(a, b)
    if dim == 0:
        return True
    ea = span_echelon(field, a, dim)
    eb = span_echelon(field, b, dim)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(v) for v in b)


def subspace_contains(field, space, v) -> bool:
    """v in span(space)."""
    dim = len(v)
    for w in space:
        if len(w) != dim:
            raise ValueError("vectors of mixed dimension")
    return span_echelon(field, space, dim).contains(v)

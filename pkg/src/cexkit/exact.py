"""Exact rational linear algebra and sparse multivariate polynomials.

Scalars are ``fractions.Fraction`` values.  Row reduction works on sparse
dict rows internally and always returns the reduced row-echelon basis, so two
subspaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Fraction

Number = Union[int, Fraction]


def scalar(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


def format_scalar(q) -> str:
    q = scalar(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Matrix


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols required for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        flat = tuple(scalar(x) for r in rows for x in r)
        return Matrix(len(rows), cols, flat)

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, (Fraction(0),) * (rows * cols))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @staticmethod
    def from_columns(columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [list(c) for c in columns]
        if rows is None:
            rows = len(cols[0]) if cols else 0
        return Matrix.from_rows([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> list:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return [sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0)) for i in range(self.rows)]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return row_reduce(self).dim

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ValueError when singular."""
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix.from_rows([row[n:] for row in aug])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


# ---------------------------------------------------------------------------
# Sparse row reduction


def _sparse(v: Iterable) -> dict:
    return {j: scalar(x) for j, x in enumerate(v) if x}


class _Echelon:
    """Incrementally maintained reduced echelon form over sparse rows.

    ``pivots`` maps pivot column to a row dict whose pivot entry is 1 and whose
    other pivot columns are zero.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        # eliminate pivot columns in increasing order; rows are fully reduced
        # so clearing column c never reintroduces an earlier pivot column
        for c in sorted(k for k in row if k in self.pivots):
            f = row.get(c)
            if not f:
                continue
            for k, v in self.pivots[c].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = 1 / Fraction(row[lead])
        row = {k: Fraction(v) * inv for k, v in row.items()}
        for c, prow in self.pivots.items():
            f = prow.get(lead)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[lead] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def rows(self, width: int) -> list:
        out = []
        for c in sorted(self.pivots):
            r = self.pivots[c]
            out.append(tuple(Fraction(r.get(j, 0)) for j in range(width)))
        return out


def _echelon_of(rows: Iterable[dict]) -> _Echelon:
    ech = _Echelon()
    for r in rows:
        ech.add(r)
    return ech


# ---------------------------------------------------------------------------
# Subspace


class Subspace:
    """Row span in canonical reduced row-echelon form."""

    __slots__ = ("ambient_dim", "basis", "_ech")

    def __init__(self, ambient_dim: int, basis: Matrix, _ech: _Echelon | None = None):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._ech = _ech

    @staticmethod
    def _from_echelon(ambient_dim: int, ech: _Echelon) -> "Subspace":
        rows = ech.rows(ambient_dim)
        return Subspace(ambient_dim, Matrix(len(rows), ambient_dim, tuple(x for r in rows for x in r)), ech)

    @staticmethod
    def span(vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
            vecs.append(_sparse(v))
        return Subspace._from_echelon(ambient_dim, _echelon_of(vecs))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix(0, ambient_dim, ()), _Echelon())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.span(Matrix.identity(ambient_dim).to_rows(), ambient_dim)

    def _echelon(self) -> _Echelon:
        if self._ech is None:
            self._ech = _echelon_of(_sparse(v) for v in self.vectors())
        return self._ech

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def pivots(self) -> list:
        out = []
        for v in self.vectors():
            out.append(next(j for j, x in enumerate(v) if x))
        return out

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        return self._echelon().contains(_sparse(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # x = sum a_i u_i = sum b_j w_j ; solve [U; -W]^T (a,b) = 0
        us, ws = self.vectors(), other.vectors()
        cols = [list(u) for u in us] + [[-x for x in w] for w in ws]
        m = Matrix.from_columns(cols, rows=self.ambient_dim)
        ns = nullspace(m)
        out = []
        for sol in ns.vectors():
            out.append([sum((sol[i] * us[i][k] for i in range(len(us)) if sol[i]), Fraction(0))
                        for k in range(self.ambient_dim)])
        return Subspace.span(out, self.ambient_dim)

    def coordinates(self, v: Sequence) -> list:
        """Coordinates of v in the echelon basis (v must lie in the span)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [scalar(v[p]) for p in self.pivots()]

    def complement_reps(self) -> list:
        """Standard basis vectors completing the echelon basis (non-pivot columns)."""
        piv = set(self.pivots())
        return [tuple(Fraction(int(i == j)) for i in range(self.ambient_dim))
                for j in range(self.ambient_dim) if j not in piv]

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis.entries))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def row_reduce(m: Matrix) -> Subspace:
    """Reduced row-echelon canonical basis of the row span of m."""
    return Subspace._from_echelon(m.cols, _echelon_of(_sparse(m.row(i)) for i in range(m.rows)))


def rref_rows(rows: Iterable[dict], width: int) -> Subspace:
    """Row-reduce rows given as sparse {column: value} dicts."""
    return Subspace._from_echelon(width, _echelon_of(rows))


def nullspace(m: Matrix) -> Subspace:
    """Basis of {v : m v = 0}."""
    return nullspace_sparse((_sparse(m.row(i)) for i in range(m.rows)), m.cols)


def nullspace_sparse(rows: Iterable[dict], width: int) -> Subspace:
    ech = _echelon_of(rows)
    piv = ech.pivots
    vecs = []
    for free in range(width):
        if free in piv:
            continue
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for c, r in piv.items():
            f = r.get(free)
            if f:
                v[c] = -Fraction(f)
        vecs.append(v)
    return Subspace.span(vecs, width)


def quotient_reps(whole: Subspace, sub: Subspace) -> list:
    """Vectors of ``whole`` whose classes form a basis of whole/sub.

    Walks the echelon basis of ``whole`` in order and keeps each vector that is
    independent of ``sub`` plus the vectors kept so far.
    """
    if whole.ambient_dim != sub.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    for v in sub.vectors():
        if not whole.contains(v):
            raise ValueError("quotient_reps: sub is not contained in whole")
    ech = _echelon_of(_sparse(v) for v in sub.vectors())
    reps = []
    for v in whole.vectors():
        if ech.add(_sparse(v)):
            reps.append(tuple(v))
    return reps


def solve(m: Matrix, b: Sequence) -> list | None:
    """One solution x of m x = b (free variables zero), or None."""
    rows = []
    for i in range(m.rows):
        r = _sparse(m.row(i))
        if b[i]:
            r[m.cols] = scalar(b[i])
        rows.append(r)
    ech = _echelon_of(rows)
    if m.cols in ech.pivots:
        return None
    x = [Fraction(0)] * m.cols
    for c, r in ech.pivots.items():
        x[c] = Fraction(r.get(m.cols, 0))
    return x


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials


def _grlex_key(exps: tuple):
    return (-sum(exps), tuple(-e for e in exps))


class ParamPoly:
    """Sparse polynomial with rational coefficients in named variables.

    ``variables`` is a sorted tuple of names and ``terms`` maps exponent
    vectors (aligned with ``variables``) to nonzero coefficients.  Variables
    that no longer occur are dropped, so equal polynomials have equal fields.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping | None = None):
        variables = tuple(variables)
        terms = dict(terms or {})
        if list(variables) != sorted(set(variables)):
            order = tuple(sorted(set(variables)))
            merged: dict = {}
            for e, c in terms.items():
                full = [0] * len(order)
                for v, k in zip(variables, e):
                    full[order.index(v)] += k
                key = tuple(full)
                merged[key] = merged.get(key, 0) + c
            variables, terms = order, merged
        self.variables, self.terms = _normalize(variables, terms)

    # construction helpers
    @staticmethod
    def const(c) -> "ParamPoly":
        c = scalar(c)
        return ParamPoly((), {(): c} if c else {})

    @staticmethod
    def var(name: str) -> "ParamPoly":
        return ParamPoly((name,), {(1,): Fraction(1)})

    @staticmethod
    def coerce(p) -> "ParamPoly":
        return p if isinstance(p, ParamPoly) else ParamPoly.const(p)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        if self.variables:
            raise ValueError("polynomial is not constant")
        return Fraction(self.terms.get((), 0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order (highest first)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    # arithmetic
    def _aligned(self, other: "ParamPoly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        allv = tuple(sorted(set(self.variables) | set(other.variables)))
        return allv, _embed(self, allv), _embed(other, allv)

    def __add__(self, other) -> "ParamPoly":
        other = ParamPoly.coerce(other)
        vs, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return _make(vs, out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return _make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ParamPoly":
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other) -> "ParamPoly":
        return ParamPoly.coerce(other) - self

    def __mul__(self, other) -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            c = scalar(other)
            if not c:
                return ParamPoly()
            return _make(self.variables, {e: v * c for e, v in self.terms.items()})
        if not self.terms or not other.terms:
            return ParamPoly()
        vs, a, b = self._aligned(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return _make(vs, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ParamPoly":
        if k < 0:
            raise ValueError("negative power")
        result = ParamPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c) -> "ParamPoly":
        c = scalar(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.const(other)
            except TypeError:
                return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def substitute(self, bindings: Mapping) -> "ParamPoly":
        return poly_substitute(self, bindings)

    def evaluate(self, bindings: Mapping) -> Fraction:
        return poly_substitute(self, bindings).constant_value()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            c = Fraction(c)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    __repr__ = __str__


def _embed(p: ParamPoly, allv: tuple) -> dict:
    pos = [allv.index(v) for v in p.variables]
    out = {}
    for e, c in p.terms.items():
        full = [0] * len(allv)
        for k, x in zip(pos, e):
            full[k] = x
        out[tuple(full)] = c
    return out


def _normalize(variables: tuple, terms: dict):
    terms = {tuple(e): Fraction(c) for e, c in terms.items() if c}
    used = [k for k in range(len(variables)) if any(e[k] for e in terms)]
    if len(used) != len(variables):
        variables = tuple(variables[k] for k in used)
        terms = {tuple(e[k] for k in used): c for e, c in terms.items()}
    return variables, terms


def _make(variables: tuple, terms: dict) -> ParamPoly:
    p = ParamPoly.__new__(ParamPoly)
    p.variables, p.terms = _normalize(variables, terms)
    return p


def poly_substitute(p: ParamPoly, bindings: Mapping) -> ParamPoly:
    """Substitute scalars or polynomials for variables, then normalize.

    Bindings for names that do not occur in ``p`` are ignored.
    """
    relevant = {k: v for k, v in bindings.items() if k in p.variables}
    if not relevant:
        return p
    keep = [k for k, v in enumerate(p.variables) if v not in relevant]
    keep_vars = tuple(p.variables[k] for k in keep)
    subs = [(k, ParamPoly.coerce(relevant[v])) for k, v in enumerate(p.variables) if v in relevant]
    # cache powers of substituted values
    cache: dict = {}

    def power(k, q, e):
        key = (k, e)
        if key not in cache:
            cache[key] = q ** e
        return cache[key]

    result = ParamPoly()
    for e, c in p.terms.items():
        term = _make(keep_vars, {tuple(e[k] for k in keep): c})
        for k, q in subs:
            if e[k]:
                term = term * power(k, q, e[k])
                if term.is_zero():
                    break
        result = result + term
    return result


def variables_of(polys: Iterable[ParamPoly]) -> set:
    out: set = set()
    for q in polys:
        out.update(q.variables)
    return out

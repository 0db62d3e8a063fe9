"""Second cohomology Z^2/B^2 with trivial one-dimensional coefficients.

A bilinear form θ is an n×n matrix with entry (i, j) = θ(e_i, e_j).  As a
vector it is flattened row-major, so θ_{ij} sits at index (i-1)*n + (j-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, FormatError
from .exact import (Matrix, ParamPoly, Subspace, format_scalar, nullspace_sparse, quotient_reps,
                    rref_rows, row_reduce, scalar, solve)


class CohomologyError(ValueError):
    pass


@dataclass(frozen=True)
class Cocycle:
    source_dim: int
    components: tuple

    def __post_init__(self):
        for c in self.components:
            if c.rows != self.source_dim or c.cols != self.source_dim:
                raise CohomologyError("cocycle component has wrong shape")

    @staticmethod
    def of(*forms: Matrix) -> "Cocycle":
        if not forms:
            raise CohomologyError("a cocycle needs at least one component")
        return Cocycle(forms[0].rows, tuple(forms))

    @property
    def s(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class CohomologyBasis:
    z2: Subspace
    b2: Subspace
    h2_reps: tuple

    @property
    def dims(self) -> tuple:
        return (self.z2.dim, self.b2.dim, len(self.h2_reps))


def form_to_vector(theta: Matrix) -> tuple:
    return theta.entries


def vector_to_form(v: Sequence, n: int) -> Matrix:
    return Matrix(n, n, tuple(scalar(x) for x in v))


def delta_form(n: int, i: int, j: int, c=1) -> Matrix:
    """c·Δ_{i,j} (1-based)."""
    entries = [Fraction(0)] * (n * n)
    entries[(i - 1) * n + (j - 1)] = scalar(c)
    return Matrix(n, n, tuple(entries))


def form_from_terms(n: int, terms) -> Matrix:
    """Sum of c·Δ_{i,j} for (i, j, c) in terms."""
    entries = [Fraction(0)] * (n * n)
    for i, j, c in terms:
        entries[(i - 1) * n + (j - 1)] += scalar(c)
    return Matrix(n, n, tuple(entries))


def delta(a: Algebra, f: Sequence) -> Matrix:
    """Coboundary δf(x, y) = f(xy)."""
    n = a.dim
    if len(f) != n:
        raise CohomologyError("functional length does not match algebra dimension")
    f = [scalar(x) for x in f]
    entries = [Fraction(0)] * (n * n)
    for (i, j, k), c in a.table.items():
        if f[k - 1]:
            entries[(i - 1) * n + (j - 1)] += c * f[k - 1]
    return Matrix(n, n, tuple(entries))


def _cocycle_constraints(a: Algebra) -> list:
    n = a.dim
    seen = set()
    rows = []
    for i in range(n):
        for j in range(n):
            pij = a.basis_product(i, j)
            for k in range(n):
                pjk = a.basis_product(j, k)
                if not pij and not pjk:
                    continue
                row: dict = {}
                for m, c in pij.items():
                    idx = m * n + k
                    row[idx] = row.get(idx, 0) + c
                for m, c in pjk.items():
                    idx = i * n + m
                    row[idx] = row.get(idx, 0) - c
                row = {key: v for key, v in row.items() if v}
                if row:
                    key = tuple(sorted(row.items()))
                    if key not in seen:
                        seen.add(key)
                        rows.append(row)
    return rows


def cocycle_space(a: Algebra) -> Subspace:
    """Z^2: all θ with θ(xy, z) = θ(x, yz)."""
    return nullspace_sparse(_cocycle_constraints(a), a.dim * a.dim)


def coboundary_space(a: Algebra) -> Subspace:
    """B^2: span of δ(e_k^*)."""
    n = a.dim
    rows: dict = {}
    for (i, j, k), c in a.table.items():
        rows.setdefault(k, {})[(i - 1) * n + (j - 1)] = c
    return rref_rows(rows.values(), n * n)


def cohomology_basis(a: Algebra) -> CohomologyBasis:
    z2 = cocycle_space(a)
    b2 = coboundary_space(a)
    reps = tuple(vector_to_form(v, a.dim) for v in quotient_reps(z2, b2))
    return CohomologyBasis(z2, b2, reps)


def cohomology_dims(a: Algebra) -> tuple:
    z = cocycle_space(a).dim
    b = coboundary_space(a).dim
    return (z, b, z - b)


def is_cocycle(a: Algebra, theta: Matrix) -> bool:
    v = theta.entries
    for row in _cocycle_constraints(a):
        if sum((c * v[idx] for idx, c in row.items()), Fraction(0)):
            return False
    return True


def cocycle_violations(a: Algebra, theta: Matrix) -> list:
    """Basis triples (1-based) where θ(e_ie_j, e_k) != θ(e_i, e_je_k)."""
    n = a.dim
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum((c * theta[m, k] for m, c in a.basis_product(i, j).items()), Fraction(0))
                rhs = sum((c * theta[i, m] for m, c in a.basis_product(j, k).items()), Fraction(0))
                if lhs != rhs:
                    bad.append((i + 1, j + 1, k + 1))
    return bad


class ClassReducer:
    """Coordinates of cocycle classes with respect to chosen H^2 representatives.

    Works for scalar and for polynomial entries: it picks coordinates S on
    which the stacked basis [B^2 ; reps] is invertible and reads the class
    coordinates off a linear functional of the entries at S.
    """

    def __init__(self, a: Algebra, reps: Sequence[Matrix] | None = None):
        self.algebra = a
        n = a.dim
        self.n = n
        self.z2 = cocycle_space(a)
        self.b2 = coboundary_space(a)
        if reps is None:
            reps = [vector_to_form(v, n) for v in quotient_reps(self.z2, self.b2)]
        self.reps = tuple(reps)
        for r in self.reps:
            if not self.z2.contains(r.entries):
                raise CohomologyError("representative is not a cocycle")
        stacked = list(self.b2.vectors()) + [r.entries for r in self.reps]
        if row_reduce(Matrix(len(stacked), n * n, tuple(x for v in stacked for x in v))).dim != len(stacked) \
                or len(stacked) != self.z2.dim:
            raise CohomologyError("representatives do not form a basis of H^2")
        self.stacked = stacked
        span = row_reduce(Matrix(len(stacked), n * n, tuple(x for v in stacked for x in v)))
        self.cols = span.pivots()
        sub = Matrix.from_rows([[v[c] for c in self.cols] for v in stacked]) if stacked else None
        # lambda = v[S] · sub^{-1}
        self.inv = sub.inverse() if sub is not None else None
        self.nb = self.b2.dim

    def coefficients(self, v: Sequence) -> list:
        """All coefficients (coboundary part first, then class part) of v."""
        if self.inv is None:
            return []
        r = len(self.stacked)
        vs = [v[c] for c in self.cols]
        out = []
        for k in range(r):
            acc = None
            for s, val in enumerate(vs):
                m = self.inv[s, k]
                if m and not _is_zero(val):
                    term = val * m
                    acc = term if acc is None else acc + term
            out.append(acc if acc is not None else _zero_like(v))
        return out

    def residual(self, v: Sequence, coeffs: Sequence) -> list:
        res = list(v)
        for lam, row in zip(coeffs, self.stacked):
            if _is_zero(lam):
                continue
            for idx, x in enumerate(row):
                if x:
                    res[idx] = res[idx] - lam * x
        return res

    def coords(self, theta, check: bool = True) -> list:
        """H^2 coordinates of θ (matrix or flat vector)."""
        v = theta.entries if isinstance(theta, Matrix) else tuple(theta)
        if len(v) != self.n * self.n:
            raise CohomologyError("form has wrong size")
        coeffs = self.coefficients(v)
        if check and any(not _is_zero(x) for x in self.residual(v, coeffs)):
            raise CohomologyError("form is not a cocycle")
        return coeffs[self.nb:]

    def coboundary_part(self, theta) -> list:
        """A functional f with θ - Σ coords_i·reps_i = δf."""
        v = theta.entries if isinstance(theta, Matrix) else tuple(theta)
        c = self.coords(v)
        n = self.n
        target = list(v)
        for lam, rep in zip(c, self.reps):
            if lam:
                target = [t - lam * x for t, x in zip(target, rep.entries)]
        cols = [delta(self.algebra, [int(i == k) for i in range(n)]).entries for k in range(n)]
        sol = solve(Matrix.from_columns(cols, rows=n * n), target)
        if sol is None:
            raise CohomologyError("coboundary part could not be solved")
        return sol


def _is_zero(x) -> bool:
    if isinstance(x, ParamPoly):
        return x.is_zero()
    return not x


def _zero_like(v):
    for x in v:
        if isinstance(x, ParamPoly):
            return ParamPoly()
    return Fraction(0)


def reduce_mod_b2(a: Algebra, theta: Matrix, basis: Sequence[Matrix] | None = None) -> list:
    """Coordinates of [θ] in the given representatives (default: echelon-first reps)."""
    if not is_cocycle(a, theta):
        raise CohomologyError("form is not a cocycle")
    return ClassReducer(a, basis).coords(theta)


def cocycle_annihilator(a: Algebra, theta) -> Subspace:
    """Ann(θ) = {x : θ(x, A) + θ(A, x) = 0}, intersected over components."""
    n = a.dim
    comps = theta.components if isinstance(theta, Cocycle) else (
        (theta,) if isinstance(theta, Matrix) else tuple(theta))
    rows = []
    for m in comps:
        for j in range(n):
            r = {i: m[i, j] for i in range(n) if m[i, j]}  # θ(x, e_j)
            if r:
                rows.append(r)
            r = {i: m[j, i] for i in range(n) if m[j, i]}  # θ(e_j, x)
            if r:
                rows.append(r)
    return nullspace_sparse(rows, n)


# ---------------------------------------------------------------------------
# text format


def cocycle_to_text(theta: Cocycle) -> str:
    n = theta.source_dim
    comps = []
    for m in theta.components:
        entries = [[i + 1, j + 1, format_scalar(m[i, j])] for i in range(n) for j in range(n) if m[i, j]]
        comps.append("    [" + ", ".join(json.dumps(e) for e in entries) + "]")
    return '{\n  "dim": %d,\n  "components": [\n%s\n  ]\n}\n' % (n, ",\n".join(comps))


def cocycle_from_text(text: str) -> Cocycle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"cocycle file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "components" not in doc:
        raise FormatError("cocycle file needs fields 'dim' and 'components'")
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("'dim' must be a non-negative integer")
    comps = doc["components"]
    if not isinstance(comps, list) or not comps:
        raise FormatError("'components' must be a non-empty list")
    forms = []
    for comp in comps:
        if not isinstance(comp, list):
            raise FormatError("each component must be a list of [i, j, value]")
        entries = [Fraction(0)] * (n * n)
        seen = set()
        for e in comp:
            if not (isinstance(e, list) and len(e) == 3):
                raise FormatError(f"bad component entry {e!r}")
            i, j, c = e
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)) \
                    or not (1 <= i <= n and 1 <= j <= n):
                raise FormatError(f"bad indices in {e!r}")
            if (i, j) in seen:
                raise FormatError(f"duplicate entry ({i},{j})")
            seen.add((i, j))
            try:
                entries[(i - 1) * n + (j - 1)] = scalar(c)
            except (TypeError, ValueError, ZeroDivisionError):
                raise FormatError(f"bad coefficient in {e!r}") from None
        forms.append(Matrix(n, n, tuple(entries)))
    return Cocycle(n, tuple(forms))

"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import (Matrix, Subspace, format_scalar, nullspace_sparse, rref_rows, scalar, _Echelon)


class AlgebraError(ValueError):
    pass


class PropagationError(AlgebraError):
    """Generator images do not extend to an isomorphism."""


class Algebra:
    """Structure constants c_{ij}^k with e_i e_j = sum_k c_{ij}^k e_k (1-based)."""

    __slots__ = ("dim", "table", "_mult")

    def __init__(self, dim: int, table: Mapping | None = None):
        if dim < 0:
            raise AlgebraError("dimension must be non-negative")
        clean = {}
        for (i, j, k), c in (table or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise AlgebraError(f"index out of range in ({i},{j},{k}) for dim {dim}")
            c = scalar(c)
            if c:
                clean[(i, j, k)] = c
        self.dim = dim
        self.table = dict(sorted(clean.items()))
        mult: dict = {}
        for (i, j, k), c in self.table.items():
            mult.setdefault((i - 1, j - 1), {})[k - 1] = c
        self._mult = mult

    @staticmethod
    def from_products(dim: int, products: Mapping) -> "Algebra":
        """Build from {(i, j): {k: c}} or {(i, j): vector} with 1-based i, j, k."""
        table = {}
        for (i, j), val in products.items():
            if isinstance(val, Mapping):
                items = val.items()
            else:
                items = ((k + 1, c) for k, c in enumerate(val))
            for k, c in items:
                if c:
                    table[(i, j, k)] = table.get((i, j, k), 0) + scalar(c)
        return Algebra(dim, table)

    def basis_product(self, i: int, j: int) -> dict:
        """Sparse 0-based product e_{i+1} e_{j+1} as {k: c}."""
        return self._mult.get((i, j), {})

    def unit(self, i: int) -> list:
        """The 1-based basis vector e_i."""
        v = [Fraction(0)] * self.dim
        v[i - 1] = Fraction(1)
        return v

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.dim == other.dim and self.table == other.table

    def __hash__(self):
        return hash((self.dim, tuple(self.table.items())))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, nonzero={len(self.table)})"

    def describe(self) -> str:
        lines = []
        for (i, j), prod in sorted(self._mult.items()):
            terms = []
            for k, c in sorted(prod.items()):
                if c == 1:
                    terms.append(f"e{k + 1}")
                else:
                    terms.append(f"{c}*e{k + 1}")
            lines.append(f"e{i + 1}*e{j + 1} = " + " + ".join(terms))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# products


def _check_len(a: Algebra, v: Sequence):
    if len(v) != a.dim:
        raise AlgebraError(f"vector of length {len(v)} for algebra of dim {a.dim}")


def _sparse_product(a: Algebra, u: dict, v: dict) -> dict:
    out: dict = {}
    mult = a._mult
    for i, x in u.items():
        for j, y in v.items():
            prod = mult.get((i, j))
            if prod:
                xy = x * y
                for k, c in prod.items():
                    out[k] = out.get(k, 0) + xy * c
    return {k: c for k, c in out.items() if c}


def product(a: Algebra, u: Sequence, v: Sequence) -> list:
    """Bilinear product of coordinate vectors u and v."""
    _check_len(a, u)
    _check_len(a, v)
    su = {i: scalar(x) for i, x in enumerate(u) if x}
    sv = {j: scalar(y) for j, y in enumerate(v) if y}
    w = _sparse_product(a, su, sv)
    return [Fraction(w.get(k, 0)) for k in range(a.dim)]


def check_associative(a: Algebra) -> list:
    """All basis triples (i, j, k) (1-based) with (e_i e_j) e_k != e_i (e_j e_k)."""
    bad = []
    n = a.dim
    for i in range(n):
        for j in range(n):
            left_ij = a._mult.get((i, j), {})
            for k in range(n):
                lhs = _sparse_product(a, left_ij, {k: Fraction(1)}) if left_ij else {}
                jk = a._mult.get((j, k), {})
                rhs = _sparse_product(a, {i: Fraction(1)}, jk) if jk else {}
                if lhs != rhs:
                    bad.append((i + 1, j + 1, k + 1))
    return bad


def is_associative(a: Algebra) -> bool:
    return not check_associative(a)


# ---------------------------------------------------------------------------
# filtration and annihilators


def _sparse_rows(s: Subspace) -> list:
    return [{j: x for j, x in enumerate(v) if x} for v in s.vectors()]


def subspace_product(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    """Span of all products x y with x in u and y in w."""
    rows = []
    wr = _sparse_rows(w)
    for x in _sparse_rows(u):
        for y in wr:
            p = _sparse_product(a, x, y)
            if p:
                rows.append(p)
    return rref_rows(rows, a.dim)


def power_filtration(a: Algebra) -> list:
    """A^1 ⊇ A^2 ⊇ ... ending at the zero space or where the chain stabilizes."""
    powers = [Subspace.full(a.dim)]
    if a.dim == 0:
        return powers
    while powers[-1].dim > 0:
        i = len(powers)  # computing A^{i+1}
        total = Subspace.zero(a.dim)
        for k in range(1, i + 1):
            total = total + subspace_product(a, powers[k - 1], powers[i - k])
        if total == powers[-1]:
            break
        powers.append(total)
    return powers


def power_dims(a: Algebra) -> tuple:
    return tuple(s.dim for s in power_filtration(a))


def nilpotency_class(a: Algebra):
    """Smallest i with A^i = 0, or the string "not nilpotent"."""
    powers = power_filtration(a)
    if powers[-1].dim == 0:
        return len(powers) if a.dim > 0 else 1
    return "not nilpotent"


def is_nilpotent(a: Algebra) -> bool:
    return nilpotency_class(a) != "not nilpotent"


def _left_constraints(a: Algebra) -> list:
    # x e_j = 0 for all j: sum_i x_i c_{ij}^k = 0
    rows: dict = {}
    for (i, j), prod in a._mult.items():
        for k, c in prod.items():
            rows.setdefault((j, k), {})[i] = c
    return list(rows.values())


def _right_constraints(a: Algebra) -> list:
    # e_i x = 0 for all i: sum_j x_j c_{ij}^k = 0
    rows: dict = {}
    for (i, j), prod in a._mult.items():
        for k, c in prod.items():
            rows.setdefault((i, k), {})[j] = c
    return list(rows.values())


def annihilator(a: Algebra):
    """(two_sided, left, right) with left = {x : xA = 0}, right = {x : Ax = 0}."""
    lc, rc = _left_constraints(a), _right_constraints(a)
    left = nullspace_sparse(lc, a.dim)
    right = nullspace_sparse(rc, a.dim)
    both = nullspace_sparse(lc + rc, a.dim)
    return both, left, right


def shape_classify(a: Algebra) -> str:
    """One of "null-filiform", "filiform", "quasi-filiform", "other"."""
    powers = power_filtration(a)
    if powers[-1].dim != 0:
        raise AlgebraError("shape_classify requires a nilpotent algebra")
    n = a.dim

    def d(i):
        return powers[i - 1].dim if i <= len(powers) else 0

    if all(d(i) == n + 1 - i for i in range(1, n + 2)):
        return "null-filiform"
    if n >= 2 and all(d(i) == n - i for i in range(2, n + 1)):
        return "filiform"
    if n >= 3 and d(n - 2) != 0 and d(n - 1) == 0:
        return "quasi-filiform"
    return "other"


def graded_basis(a: Algebra):
    """Basis adapted to the power filtration: (vectors, grades), ordered by pivot."""
    powers = power_filtration(a)
    if powers[-1].dim != 0:
        raise AlgebraError("graded_algebra requires a nilpotent algebra")
    chosen = []
    for g in range(1, len(powers)):
        ech = _Echelon()
        for r in _sparse_rows(powers[g]):
            ech.add(r)
        for v in powers[g - 1].vectors():
            if ech.add({j: x for j, x in enumerate(v) if x}):
                chosen.append((next(j for j, x in enumerate(v) if x), tuple(v), g))
    chosen.sort()
    return [c[1] for c in chosen], [c[2] for c in chosen]


def graded_algebra(a: Algebra) -> Algebra:
    """gr A on the filtration-adapted basis with products projected by grade."""
    return graded_algebra_with_grades(a)[0]


def graded_algebra_with_grades(a: Algebra):
    vecs, grades = graded_basis(a)
    n = a.dim
    if n == 0:
        return Algebra(0), []
    p = Matrix.from_columns(vecs, rows=n)
    pinv = p.inverse()
    table = {}
    for i in range(n):
        for j in range(n):
            w = product(a, vecs[i], vecs[j])
            if not any(w):
                continue
            coords = pinv.apply(w)
            target = grades[i] + grades[j]
            for k, c in enumerate(coords):
                if c and grades[k] == target:
                    table[(i + 1, j + 1, k + 1)] = c
    return Algebra(n, table), grades


# ---------------------------------------------------------------------------
# basis changes and homomorphisms


def _columns(p: Matrix) -> list:
    return [p.column(j) for j in range(p.cols)]


def transport(a: Algebra, p: Matrix) -> Algebra:
    """Algebra b with b(u, v) = p^{-1} a(p u, p v)."""
    if p.rows != a.dim or p.cols != a.dim:
        raise AlgebraError("transport matrix has wrong shape")
    try:
        pinv = p.inverse()
    except ValueError:
        raise AlgebraError("transport matrix is singular") from None
    cols = _columns(p)
    table = {}
    for i in range(a.dim):
        for j in range(a.dim):
            w = product(a, cols[i], cols[j])
            if any(w):
                for k, c in enumerate(pinv.apply(w)):
                    if c:
                        table[(i + 1, j + 1, k + 1)] = c
    return Algebra(a.dim, table)


def is_hom_witness(a: Algebra, b: Algebra, p: Matrix) -> bool:
    """True iff the linear map with columns p(e_i) is multiplicative from a to b."""
    if p.rows != b.dim or p.cols != a.dim:
        raise AlgebraError("witness matrix has wrong shape")
    cols = _columns(p)
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = p.apply(product(a, a.unit(i + 1), a.unit(j + 1)))
            rhs = product(b, cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def is_iso_witness(a: Algebra, b: Algebra, p: Matrix) -> bool:
    if a.dim != b.dim or p.rows != p.cols or p.rows != a.dim:
        return False
    return p.is_invertible() and is_hom_witness(a, b, p)


def generated_subspace(a: Algebra, gens: Sequence[Sequence]) -> Subspace:
    """Subalgebra generated by gens (as a subspace)."""
    ech = _Echelon()
    frontier = []
    for g in gens:
        _check_len(a, g)
        r = {j: scalar(x) for j, x in enumerate(g) if x}
        if ech.add(r):
            frontier.append(r)
    basis = list(frontier)
    while frontier:
        new = []
        for u in basis:
            for v in frontier:
                for w in (_sparse_product(a, u, v), _sparse_product(a, v, u)):
                    if w and ech.add(w):
                        new.append(w)
        basis.extend(new)
        frontier = new
    return rref_rows(basis, a.dim)


def extend_generator_images(a: Algebra, gens: Sequence[Sequence], images: Sequence[Sequence],
                            b: Algebra) -> Matrix:
    """Extend gens -> images multiplicatively to an isomorphism a -> b.

    Raises PropagationError when propagation is inconsistent or the images do
    not generate b, and AlgebraError when gens do not generate a.
    """
    if len(gens) != len(images):
        raise AlgebraError("gens and images differ in length")
    n, m = a.dim, b.dim
    if generated_subspace(a, gens).dim != n:
        raise AlgebraError("gens do not generate the algebra")
    # pairs (u, phi(u)) as sparse dicts over n + m coordinates
    ech = _Echelon()
    pairs = []

    def add(u: dict, w: dict) -> bool:
        row = dict(u)
        for k, c in w.items():
            row[n + k] = c
        if not row:
            return False
        if ech.add(row):
            pairs.append((u, w))
            return True
        return False

    for g, im in zip(gens, images):
        _check_len(a, g)
        _check_len(b, im)
        add({j: scalar(x) for j, x in enumerate(g) if x}, {j: scalar(x) for j, x in enumerate(im) if x})
    frontier = list(pairs)
    while frontier:
        snapshot = list(pairs)
        new = []
        for (u1, w1) in snapshot:
            for (u2, w2) in frontier:
                for (uu, ww) in ((_sparse_product(a, u1, u2), _sparse_product(b, w1, w2)),
                                 (_sparse_product(a, u2, u1), _sparse_product(b, w2, w1))):
                    if add(uu, ww):
                        new.append(pairs[-1])
        frontier = new
    pivots = ech.pivots
    if any(c >= n for c in pivots):
        raise PropagationError("inconsistent propagation: a relation of the source fails in the target")
    if len(pivots) != n:
        raise PropagationError("propagation did not reach full dimension")
    cols = []
    for i in range(n):
        r = pivots[i]
        cols.append([Fraction(r.get(n + k, 0)) for k in range(m)])
    p = Matrix.from_columns(cols, rows=m)
    if not (m == n and p.is_invertible()):
        raise PropagationError("images do not generate the target (closure dimension too small)")
    return p


def algebra_generators(a: Algebra) -> list:
    """Basis vectors of the echelon complement of A^2 (1-based indices)."""
    sq = power_filtration(a)
    square = sq[1] if len(sq) > 1 else sq[0]
    return [i + 1 for i in range(a.dim) if i not in set(square.pivots())]


# ---------------------------------------------------------------------------
# fingerprint


@dataclass(frozen=True)
class Fingerprint:
    power_dims: tuple
    ann_dim: int
    left_ann_dim: int
    right_ann_dim: int
    square_dim: int
    comm_rank: int
    cohom_dims: tuple

    def as_dict(self) -> dict:
        return {
            "power_dims": list(self.power_dims),
            "ann_dim": self.ann_dim,
            "left_ann_dim": self.left_ann_dim,
            "right_ann_dim": self.right_ann_dim,
            "square_dim": self.square_dim,
            "comm_rank": self.comm_rank,
            "cohom_dims": list(self.cohom_dims),
        }


def commutator_rank(a: Algebra) -> int:
    rows = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            d = dict(a._mult.get((i, j), {}))
            for k, c in a._mult.get((j, i), {}).items():
                d[k] = d.get(k, 0) - c
            d = {k: c for k, c in d.items() if c}
            if d:
                rows.append(d)
    return rref_rows(rows, a.dim).dim


def fingerprint(a: Algebra) -> Fingerprint:
    from .cohomology import cohomology_dims

    powers = power_filtration(a)
    two, left, right = annihilator(a)
    return Fingerprint(
        power_dims=tuple(s.dim for s in powers),
        ann_dim=two.dim,
        left_ann_dim=left.dim,
        right_ann_dim=right.dim,
        square_dim=powers[1].dim if len(powers) > 1 else powers[0].dim,
        comm_rank=commutator_rank(a),
        cohom_dims=cohomology_dims(a),
    )


# ---------------------------------------------------------------------------
# text format


def algebra_to_text(a: Algebra) -> str:
    entries = [[i, j, k, format_scalar(c)] for (i, j, k), c in sorted(a.table.items())]
    body = ",\n".join("    " + json.dumps(e) for e in entries)
    if entries:
        return '{\n  "dim": %d,\n  "table": [\n%s\n  ]\n}\n' % (a.dim, body)
    return '{\n  "dim": %d,\n  "table": []\n}\n' % a.dim


class FormatError(ValueError):
    pass


def algebra_from_text(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"algebra file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "table" not in doc:
        raise FormatError("algebra file needs fields 'dim' and 'table'")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise FormatError("'dim' must be a non-negative integer")
    table = {}
    for entry in doc["table"]:
        if not (isinstance(entry, list) and len(entry) == 4):
            raise FormatError(f"bad table entry {entry!r}")
        i, j, k, c = entry
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise FormatError(f"bad indices in {entry!r}")
        try:
            val = scalar(c) if isinstance(c, (str, int)) and not isinstance(c, bool) else None
        except (ValueError, ZeroDivisionError):
            val = None
        if val is None:
            raise FormatError(f"bad coefficient in {entry!r}")
        if (i, j, k) in table:
            raise FormatError(f"duplicate entry for ({i},{j},{k})")
        table[(i, j, k)] = val
    try:
        return Algebra(dim, table)
    except AlgebraError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# refined invariants


def left_quotient(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    """{x : x·u ⊆ w}."""
    return _quotient(a, u, w, left=True)


def right_quotient(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    """{x : u·x ⊆ w}."""
    return _quotient(a, u, w, left=False)


def _quotient(a: Algebra, u: Subspace, w: Subspace, left: bool) -> Subspace:
    n = a.dim
    # functionals vanishing on w
    wperp = nullspace_sparse(_sparse_rows(w), n) if w.dim else Subspace.full(n)
    rows = []
    for y in _sparse_rows(u):
        # the map x -> x*y (or y*x) as an n x n matrix; impose f(x*y) = 0
        images = []
        for i in range(n):
            e = {i: Fraction(1)}
            images.append(_sparse_product(a, e, y) if left else _sparse_product(a, y, e))
        for f in wperp.vectors():
            r = {}
            for i, img in enumerate(images):
                s = sum((c * f[k] for k, c in img.items() if f[k]), Fraction(0))
                if s:
                    r[i] = s
            if r:
                rows.append(r)
    return nullspace_sparse(rows, n)


def _bracket_span(a: Algebra, sign: int) -> Subspace:
    """Span of e_ie_j + sign·e_je_i."""
    rows = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            r = dict(a.basis_product(i, j))
            for k, c in a.basis_product(j, i).items():
                r[k] = r.get(k, 0) + sign * c
            r = {k: c for k, c in r.items() if c}
            if r:
                rows.append(r)
    return rref_rows(rows, a.dim)


def center(a: Algebra) -> Subspace:
    """{x : xy = yx for all y}."""
    rows: dict = {}
    for (i, j), prod in a._mult.items():
        for k, c in prod.items():
            # x e_j - e_j x: contributes c at x_i for (i,j) and -c at x_j for (j,i) with i,j swapped
            rows.setdefault((j, k), {})[i] = rows.get((j, k), {}).get(i, 0) + c
            rows.setdefault((i, k), {})[j] = rows.get((i, k), {}).get(j, 0) - c
    return nullspace_sparse([{q: c for q, c in r.items() if c} for r in rows.values()], a.dim)


def derivation_dim(a: Algebra) -> int:
    """Dimension of Der(A) = {D : D(xy) = D(x)y + xD(y)}."""
    n = a.dim
    rows = []
    # unknown D[m][k] at index m*n + k: D(e_k) = sum_m D[m][k] e_m
    for i in range(n):
        for j in range(n):
            row: dict = {}

            def add(out, var, c):
                r = row.setdefault(out, {})
                r[var] = r.get(var, 0) + c

            for k, c in a.basis_product(i, j).items():
                for m in range(n):
                    add(m, m * n + k, c)
            for k in range(n):
                for m, c in a.basis_product(k, j).items():
                    add(m, k * n + i, -c)
                for m, c in a.basis_product(i, k).items():
                    add(m, k * n + j, -c)
            for r in row.values():
                r = {kk: v for kk, v in r.items() if v}
                if r:
                    rows.append(r)
    return nullspace_sparse(rows, n * n).dim


def invariant_signature(a: Algebra, rounds: int = 2, cap: int = 40) -> tuple:
    """Isomorphism invariant built from a canonical lattice of subspaces.

    Starting from the power filtration, subspaces are generated by canonical
    operations (left/right annihilators, products, intersections, sums,
    left/right quotients).  Every generated subspace is defined by the
    multiplication alone, so the sequence of dimensions in discovery order and
    the table recording which operation yields which entry are the same for
    isomorphic algebras.  The derivation algebra dimension is appended.
    """
    n = a.dim
    full = Subspace.full(n)
    found: list = []
    record: list = []

    def intern(s: Subspace) -> int:
        for idx, t in enumerate(found):
            if t == s:
                return idx
        if len(found) >= cap:
            return -1
        found.append(s)
        return len(found) - 1

    for p in power_filtration(a):
        intern(p)
    intern(Subspace.zero(n))
    intern(_bracket_span(a, -1))
    intern(_bracket_span(a, 1))
    intern(center(a))
    for _ in range(rounds):
        current = list(found)
        for u in current:
            for op, val in (("lann", left_quotient(a, u, Subspace.zero(n))),
                            ("rann", right_quotient(a, u, Subspace.zero(n))),
                            ("ua", subspace_product(a, u, full)),
                            ("au", subspace_product(a, full, u)),
                            ("uu", subspace_product(a, u, u))):
                record.append((op, intern(val)))
        for i, u in enumerate(current):
            for j, w in enumerate(current):
                if i == j:
                    continue
                record.append(("prod", intern(subspace_product(a, u, w))))
                if i < j:
                    record.append(("cap", intern(u.intersect(w))))
                    record.append(("sum", intern(u + w)))
                record.append(("lq", intern(left_quotient(a, u, w))))
                record.append(("rq", intern(right_quotient(a, u, w))))
    return (tuple(s.dim for s in found), tuple(record), derivation_dim(a))

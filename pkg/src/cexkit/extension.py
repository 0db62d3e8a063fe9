"""Central extensions A_θ and their reconstruction from annihilators."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, annihilator, power_filtration
from .cohomology import (ClassReducer, Cocycle, cocycle_annihilator, cocycle_space, delta, is_cocycle)
from .exact import Matrix, Subspace, row_reduce, scalar


class ExtensionError(ValueError):
    pass


def _as_cocycle(theta, n: int) -> Cocycle:
    if isinstance(theta, Cocycle):
        return theta
    if isinstance(theta, Matrix):
        return Cocycle(n, (theta,))
    return Cocycle(n, tuple(theta))


def central_extend(a: Algebra, theta) -> Algebra:
    """A ⊕ V with e_i e_j gaining θ_t(e_i, e_j) on the new vector e_{n+t}."""
    n = a.dim
    theta = _as_cocycle(theta, n)
    if theta.source_dim != n:
        raise ExtensionError("cocycle dimension does not match the algebra")
    z2 = cocycle_space(a)
    table = dict(a.table)
    for t, comp in enumerate(theta.components):
        if not z2.contains(comp.entries):
            raise ExtensionError(f"component {t + 1} is not a cocycle")
        for i in range(n):
            for j in range(n):
                c = comp[i, j]
                if c:
                    table[(i + 1, j + 1, n + t + 1)] = c
    return Algebra(n + theta.s, table)


def class_rank(a: Algebra, theta) -> int:
    """Rank of the classes [θ_1], ..., [θ_s] in H^2."""
    theta = _as_cocycle(theta, a.dim)
    red = ClassReducer(a)
    coords = [red.coords(c) for c in theta.components]
    if not red.reps:
        return 0
    return row_reduce(Matrix.from_rows(coords, cols=len(red.reps))).dim


def radical_meet(a: Algebra, theta) -> Subspace:
    """Ann(θ) ∩ Ann(A)."""
    return cocycle_annihilator(a, _as_cocycle(theta, a.dim)).intersect(annihilator(a)[0])


def check_ts(a: Algebra, theta) -> bool:
    """Classes independent in H^2 and Ann(θ) ∩ Ann(A) = 0."""
    theta = _as_cocycle(theta, a.dim)
    for c in theta.components:
        if not is_cocycle(a, c):
            raise ExtensionError("component is not a cocycle")
    if class_rank(a, theta) != theta.s:
        return False
    return radical_meet(a, theta).dim == 0


def has_annihilator_component(a: Algebra, theta) -> bool:
    """For Ann(θ) ∩ Ann(A) = 0: true iff the classes are linearly dependent."""
    theta = _as_cocycle(theta, a.dim)
    if radical_meet(a, theta).dim != 0:
        raise ExtensionError("requires Ann(θ) ∩ Ann(A) = 0")
    return class_rank(a, theta) < theta.s


def is_split(b: Algebra) -> bool:
    """True iff b has an annihilator component, i.e. Ann(b) ⊄ b^2."""
    ann = annihilator(b)[0]
    powers = power_filtration(b)
    square = powers[1] if len(powers) > 1 else powers[0]
    return not square.contains_subspace(ann)


def ann_extension_decomposition(a: Algebra, theta):
    """(Ann(A_θ), (Ann(θ) ∩ Ann(A)) ⊕ V, equal)."""
    theta = _as_cocycle(theta, a.dim)
    n, s = a.dim, theta.s
    ext = central_extend(a, theta)
    lhs = annihilator(ext)[0]
    meet = radical_meet(a, theta)
    vecs = [list(v) + [Fraction(0)] * s for v in meet.vectors()]
    for t in range(s):
        v = [Fraction(0)] * (n + s)
        v[n + t] = Fraction(1)
        vecs.append(v)
    rhs = Subspace.span(vecs, n + s)
    return lhs, rhs, lhs == rhs


def reconstruct(b: Algebra):
    """(A', θ, witness) with witness an isomorphism b -> central_extend(A', θ).

    A' lives on the echelon complement of Ann(b) (standard basis vectors at
    non-pivot positions, in index order) and θ collects the Ann(b)
    components of products of complement vectors.
    """
    ann = annihilator(b)[0]
    if ann.dim == 0:
        raise ExtensionError("algebra has zero annihilator")
    n, m = b.dim, ann.dim
    comp = ann.complement_reps()
    cols = [list(v) for v in comp] + [list(v) for v in ann.vectors()]
    p = Matrix.from_columns(cols, rows=n)  # basis of the extension -> b
    pinv = p.inverse()
    k = n - m
    table = {}
    forms = [[Fraction(0)] * (k * k) for _ in range(m)]
    from .algebra import product
    for i in range(k):
        for j in range(k):
            w = product(b, comp[i], comp[j])
            if not any(w):
                continue
            coords = pinv.apply(w)
            for r in range(k):
                if coords[r]:
                    table[(i + 1, j + 1, r + 1)] = coords[r]
            for t in range(m):
                if coords[k + t]:
                    forms[t][i * k + j] = coords[k + t]
    a_prime = Algebra(k, table)
    theta = Cocycle(k, tuple(Matrix(k, k, tuple(f)) for f in forms))
    return a_prime, theta, pinv


def coboundary_shift_witness(a: Algebra, theta, functionals: Sequence[Sequence]) -> Matrix:
    """Isomorphism A_θ -> A_{θ + δf}, x ↦ x + Σ_t f_t(x) v_t, v_t ↦ v_t."""
    theta = _as_cocycle(theta, a.dim)
    n, s = a.dim, theta.s
    if len(functionals) != s:
        raise ExtensionError("need one functional per component")
    rows = []
    for r in range(n + s):
        row = []
        for c in range(n + s):
            if r < n:
                row.append(Fraction(int(r == c)))
            elif c < n:
                row.append(scalar(functionals[r - n][c]))
            else:
                row.append(Fraction(int(r == c)))
        rows.append(row)
    return Matrix.from_rows(rows)


def shifted_cocycle(a: Algebra, theta, functionals: Sequence[Sequence]) -> Cocycle:
    """θ + δf componentwise."""
    theta = _as_cocycle(theta, a.dim)
    return Cocycle(a.dim, tuple(c + delta(a, f) for c, f in zip(theta.components, functionals)))

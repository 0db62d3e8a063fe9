"""Automorphism actions on H^2, orbit-case checks, theorem matching and a
finite-field isomorphism oracle."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import Algebra, fingerprint, invariant_signature, is_iso_witness
from .catalog import (ALPHA_FAMILIES, FAMILIES, FILIFORM_BASES, CatalogError, automorphism_template,
                      catalog_algebra, display_name, family_minimum, family_table, nabla_basis)
from .cohomology import ClassReducer, Cocycle
from .exact import Matrix, ParamPoly, Subspace, nullspace, scalar, solve
from .extension import central_extend, radical_meet, reconstruct
from .quadratic import (QuadraticNumber, field_inverse, field_matmul, field_rank, field_rref, field_solve,
                        split_parts)


class OrbitError(ValueError):
    pass


ALPHA = tuple(f"alpha{i}" for i in range(1, 5))
GRID_VARS = {"mu0": ("x",), "mu1_1": ("x", "y"), "mu1_2": ("x",), "mu1_3": ("x",), "mu1_4": ()}
DEFAULTS = {"x": Fraction(1), "y": Fraction(1), "z": Fraction(0), "w": Fraction(0)}


@dataclass(frozen=True)
class ActionFormula:
    family: str
    n: int
    coefficients: tuple  # ParamPoly per ∇ index

    def evaluate(self, alphas: Sequence, point: dict) -> list:
        bind = dict(point)
        for name, val in zip(ALPHA, alphas):
            bind[name] = scalar(val)
        for name in ALPHA[len(alphas):]:
            bind[name] = Fraction(0)
        return [c.substitute(bind) for c in self.coefficients]

    def describe(self) -> list:
        return [f"∇{i + 1}: {c}" for i, c in enumerate(self.coefficients)]


def _check_family(family: str, n: int):
    if family not in FILIFORM_BASES:
        raise OrbitError(f"no action formula for family {family!r}")
    if n < family_minimum(family):
        raise OrbitError(f"{family} needs n >= {family_minimum(family)}")
    if family == "mu1_2" and n % 2 == 0:
        raise OrbitError("μ1,2 actions are only supported for odd n")


@lru_cache(maxsize=None)
def _reducer(family: str, n: int) -> ClassReducer:
    return ClassReducer(family_table(family, n), nabla_basis(family, n))


@lru_cache(maxsize=None)
def parametric_action(family: str, n: int) -> ActionFormula:
    """φ^T M(α) φ over the automorphism template, in ∇ coordinates."""
    _check_family(family, n)
    try:
        tmpl = automorphism_template(family, n)
    except CatalogError as exc:
        raise OrbitError(str(exc)) from None
    forms = nabla_basis(family, n)
    m = [[ParamPoly() for _ in range(n)] for _ in range(n)]
    for name, form in zip(ALPHA, forms):
        a = ParamPoly.var(name)
        for i in range(n):
            for j in range(n):
                if form[i, j]:
                    m[i][j] = m[i][j] + a * form[i, j]
    phi = tmpl.entries
    # (φ^T M φ)_{ij} = Σ_{k,l} φ_{ki} M_{kl} φ_{lj}
    mphi = [[ParamPoly() for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for l in range(n):
            if m[k][l].is_zero():
                continue
            for j in range(n):
                if not phi[l][j].is_zero():
                    mphi[k][j] = mphi[k][j] + m[k][l] * phi[l][j]
    out = []
    for i in range(n):
        for j in range(n):
            acc = ParamPoly()
            for k in range(n):
                if not phi[k][i].is_zero() and not mphi[k][j].is_zero():
                    acc = acc + phi[k][i] * mphi[k][j]
            out.append(acc)
    coords = _reducer(family, n).coords(out, check=True)
    return ActionFormula(family, n, tuple(ParamPoly.coerce(c) for c in coords))


def paper_action(family: str, n: int) -> ActionFormula:
    """The displayed action formulas, entered by hand."""
    _check_family(family, n)
    x, y, z, w = (ParamPoly.var(v) for v in "xyzw")
    a1, a2, a3, a4 = (ParamPoly.var(v) for v in ALPHA)
    if family == "mu0":
        coeffs = (a1 * x ** (n + 1),)
    elif family == "mu1_1":
        coeffs = (a1 * x ** n, a2 * x * y + a1 * x * z + a4 * w * y,
                  a3 * x * y + a1 * x * z + a4 * w * y, a4 * y ** 2)
    elif family == "mu1_2":
        h = x ** ((n - 1) // 2)
        coeffs = (h * (a1 * x + a3 * z), h * (a2 * x + a3 * z), a3 * x ** (n - 1))
    elif family == "mu1_3":
        coeffs = (a1 * x ** (n - 1) + a3 * x ** (n - 2) * z, a2 * x ** (n - 1) + a3 * x ** (n - 2) * z,
                  a3 * x ** (2 * n - 4))
    else:
        coeffs = (a1 + a3 * z, a2 + a3 * z, a3)
    return ActionFormula(family, n, coeffs)


@dataclass
class ActionReport:
    family: str
    n: int
    computed: list
    expected: list
    mismatches: list

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list:
        out = [f"action {display_name(self.family)} n={self.n}: {'pass' if self.ok else 'FAIL'}"]
        for i, (c, e) in enumerate(zip(self.computed, self.expected)):
            flag = "" if c == e else "   <-- differs"
            out.append(f"  ∇{i + 1}: computed {c} | displayed {e}{flag}")
        return out


def verify_action(family: str, n: int) -> ActionReport:
    comp = parametric_action(family, n).coefficients
    exp = paper_action(family, n).coefficients
    bad = [i + 1 for i, (c, e) in enumerate(zip(comp, exp)) if c != e]
    if len(comp) != len(exp):
        bad.append("length")
    return ActionReport(family, n, list(comp), list(exp), bad)


def template_point(family: str, n: int, partial: dict) -> dict:
    """Complete a partial {x, y, z, w} assignment with defaults for the template."""
    tmpl = automorphism_template(family, n)
    point = {}
    for v in tmpl.variables():
        point[v] = scalar(partial[v]) if v in partial else DEFAULTS.get(v, Fraction(0))
    return point


def numeric_action(family: str, n: int, alphas: Sequence, partial: dict) -> list:
    """∇ coordinates of φ^T θ φ for θ = Σ α_i ∇_i and φ the instantiated template."""
    tmpl = automorphism_template(family, n)
    phi = tmpl.instantiate(template_point(family, n, partial))
    forms = nabla_basis(family, n)
    theta = Matrix.zeros(n, n)
    for a, f in zip(alphas, forms):
        if a:
            theta = theta + f.scale(scalar(a))
    return _reducer(family, n).coords(phi.transpose() @ theta @ phi)


# ---------------------------------------------------------------------------
# exact roots and small helpers


def root(q, k: int) -> Fraction:
    """The rational k-th root of q; raises OrbitError when it is not rational."""
    q = scalar(q)
    if k <= 0:
        raise OrbitError("root index must be positive")
    if q == 0:
        return Fraction(0)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            raise OrbitError(f"{q} has no real {k}-th root")
        sign, q = -1, -q
    num, den = _int_root(q.numerator, k), _int_root(q.denominator, k)
    if num is None or den is None:
        raise OrbitError(f"{q} is not a perfect {k}-th power")
    return sign * Fraction(num, den)


def _int_root(m: int, k: int):
    lo, hi = 0, 1 << (m.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == m else None


def _rank(rows: list, width: int) -> int:
    return Subspace.span(rows, width).dim if rows else 0


def _span(rows: list, width: int) -> Subspace:
    return Subspace.span(rows, width)


def rref_transform(rows: list, width: int):
    """(P, R) with P invertible and P·rows = R in reduced echelon form (zero rows last)."""
    m = len(rows)
    aug = [[scalar(x) for x in r] + [Fraction(int(i == j)) for j in range(m)] for i, r in enumerate(rows)]
    piv_row = 0
    for col in range(width):
        sel = next((r for r in range(piv_row, m) if aug[r][col]), None)
        if sel is None:
            continue
        aug[piv_row], aug[sel] = aug[sel], aug[piv_row]
        inv = 1 / aug[piv_row][col]
        aug[piv_row] = [v * inv for v in aug[piv_row]]
        for r in range(m):
            if r != piv_row and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[piv_row])]
        piv_row += 1
        if piv_row == m:
            break
    p = Matrix.from_rows([r[width:] for r in aug], cols=m)
    rr = [r[:width] for r in aug]
    return p, rr


# ---------------------------------------------------------------------------
# expected subspaces with one free parameter t


T_VAR = "t"


def parse_span(text: str, h: int) -> list:
    """Rows from text such as "n1+t*n3, n4" (n_i stands for ∇_i)."""
    rows = []
    for part in text.split(","):
        row = [ParamPoly() for _ in range(h)]
        for term in part.replace(" ", "").replace("-", "+-").split("+"):
            if not term:
                continue
            coef, _, idx = term.rpartition("n")
            coef = coef.rstrip("*")
            if coef in ("", "+"):
                c = ParamPoly.const(1)
            elif coef == "-":
                c = ParamPoly.const(-1)
            elif coef.lstrip("-") == T_VAR:
                c = ParamPoly.var(T_VAR) * (-1 if coef.startswith("-") else 1)
            else:
                c = ParamPoly.const(scalar(coef))
            i = int(idx) - 1
            if not 0 <= i < h:
                raise OrbitError(f"∇ index out of range in {text!r}")
            row[i] = row[i] + c
        rows.append(row)
    return rows


def format_span(rows: list) -> str:
    parts = []
    for r in rows:
        text = ""
        for i, c in enumerate(r):
            c = ParamPoly.coerce(c)
            if c.is_zero():
                continue
            s = str(c)
            if " " in s:
                term = f"({s})∇{i + 1}"
            elif c == 1:
                term = f"∇{i + 1}"
            elif c == -1:
                term = f"-∇{i + 1}"
            else:
                term = f"{s}∇{i + 1}"
            text += term if not text or term.startswith("-") else "+" + term
        parts.append(text or "0")
    return "⟨" + ", ".join(parts) + "⟩"


def _has_t(rows) -> bool:
    return any(T_VAR in ParamPoly.coerce(c).variables for r in rows for c in r)


def _at_t(rows, t) -> list:
    return [[ParamPoly.coerce(c).substitute({T_VAR: t}).constant_value() for c in r] for r in rows]


def _t_parts(rows, h):
    """Split rows into fixed rows W0 and the single t-row u0 + t u1."""
    fixed, moving = [], []
    for r in rows:
        polys = [ParamPoly.coerce(c) for c in r]
        if any(T_VAR in p.variables for p in polys):
            if any(p.degree() > 1 for p in polys):
                raise OrbitError("expected span must be affine in t")
            u0 = [p.substitute({T_VAR: 0}).constant_value() for p in polys]
            u1 = [p.substitute({T_VAR: 1}).constant_value() - a for p, a in zip(polys, u0)]
            moving.append((u0, u1))
        else:
            fixed.append([p.constant_value() for p in polys])
    if len(moving) > 1:
        raise OrbitError("at most one row may depend on t")
    return fixed, moving


def match_span(rows_numeric: list, expected, h: int, excluded=()):
    """t (or True) if span(rows_numeric) equals the expected span for some allowed t, else None."""
    target_dim = _rank(rows_numeric, h)
    if not _has_t(expected):
        exp = _at_t(expected, 0)
        if _rank(exp, h) == target_dim and _span(exp, h) == _span(rows_numeric, h):
            return True
        return None
    fixed, moving = _t_parts(expected, h)
    (u0, u1), = moving
    big = _span(fixed + [u0, u1], h)
    tsp = _span(rows_numeric, h)
    if not big.contains_subspace(tsp):
        return None
    # find v in T with v = (W0 part) + u0 + t u1
    basis_t = tsp.vectors()
    cols = [list(v) for v in basis_t] + [[-x for x in f] for f in fixed] + [[-x for x in u1]]
    if not cols:
        return None
    sol = solve(Matrix.from_columns(cols, rows=h), u0)
    cands = []
    if sol is not None:
        cands.append(sol[-1])
    cands += [Fraction(v) for v in (0, 1, -1, 2, Fraction(1, 2), 3, -2)]
    for t in cands:
        if t in excluded:
            continue
        exp = _at_t(expected, t)
        if _rank(exp, h) == target_dim and _span(exp, h) == tsp:
            return t
    return None


# ---------------------------------------------------------------------------
# orbit search


GRID = tuple(Fraction(v) for v in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3,
                                    Fraction(1, 3), Fraction(-1, 3), 4, -4, Fraction(1, 4),
                                    Fraction(-1, 4), Fraction(3, 2), Fraction(-3, 2),
                                    Fraction(2, 3), Fraction(-2, 3)))


def _linear_parts(p: ParamPoly, names: tuple):
    """(constant, {name: coefficient}) for p of degree <= 1 in names."""
    const = Fraction(0)
    lin = {}
    for e, c in p.terms.items():
        deg = sum(e)
        if deg == 0:
            const += c
        elif deg == 1:
            lin[p.variables[e.index(1)]] = lin.get(p.variables[e.index(1)], 0) + c
        else:
            raise OrbitError("action is not linear in the solved parameters")
    return const, lin


T_GRID = tuple(Fraction(v) for v in (0, 1, -1, 2, Fraction(1, 2), -2, Fraction(-1, 2), 3, -3,
                                      Fraction(1, 3), Fraction(-1, 3)))


def _dot(f, row):
    acc = ParamPoly()
    for c, fv in zip(row, f):
        if fv:
            acc = acc + c * fv
    return acc


def _solve_concrete(rows, target: list, names: tuple, h: int):
    """Values of names making span(rows) equal span(target), or None."""
    big = _span(target, h)
    perp = nullspace(Matrix.from_rows(big.vectors(), cols=h)) if big.dim else Subspace.full(h)
    eqs, rhs = [], []
    for r in rows:
        for f in perp.vectors():
            const, lin = _linear_parts(_dot(f, r), names)
            eqs.append([lin.get(v, Fraction(0)) for v in names])
            rhs.append(-const)
    if names:
        if eqs:
            m = Matrix.from_rows(eqs, cols=len(names))
            sol = solve(m, rhs)
            if sol is None:
                return None
            kernel = nullspace(m).vectors()
        else:
            sol = [Fraction(0)] * len(names)
            kernel = [[Fraction(int(i == j)) for j in range(len(names))] for i in range(len(names))]
        trials = [sol] + [[a + b for a, b in zip(sol, k)] for k in kernel]
    else:
        if any(rhs):
            return None
        trials = [[]]
    for vals in trials:
        point = dict(zip(names, vals))
        numeric = [[c.substitute(point).constant_value() for c in r] for r in rows]
        if _rank(numeric, h) == big.dim and _span(numeric, h) == big:
            return point, numeric
    return None


def _t_candidates(rows, alt, names, h):
    """Values of t suggested by equations that do not involve the solved parameters."""
    fixed, moving = _t_parts(alt, h)
    (u0, u1), = moving
    # functionals p, q vanishing on W0 with p(u0)=1, p(u1)=0, q(u0)=0, q(u1)=1
    w0perp = nullspace(Matrix.from_rows(fixed, cols=h)).vectors() if fixed else \
        [[Fraction(int(i == j)) for j in range(h)] for i in range(h)]
    a = [[sum(f[k] * u0[k] for k in range(h)), sum(f[k] * u1[k] for k in range(h))] for f in w0perp]
    out, pq = [], []
    for target in ([1, 0], [0, 1]):
        sol = solve(Matrix.from_rows([[r[0] for r in a], [r[1] for r in a]], cols=len(a)), target)
        if sol is None:
            return list(T_GRID)
        pq.append([sum(c * f[k] for c, f in zip(sol, w0perp)) for k in range(h)])
    p, q = pq
    for r in rows:
        pr, qr = _dot(p, r), _dot(q, r)
        if pr.is_constant() and qr.is_constant() and pr.constant_value():
            t = qr.constant_value() / pr.constant_value()
            if t not in out:
                out.append(t)
    return out + [t for t in T_GRID if t not in out]


def orbit_search(formula: ActionFormula, source: list, expected_alts: list, excluded=(), grid=GRID):
    """Find a template point φ with span(φ·source) equal to one expected span.

    Parameters listed in GRID_VARS are taken from the grid; the remaining
    ones enter the action linearly and are solved for.  A free parameter t
    in an expected span is tried at the values forced by equations free of
    the solved parameters, then on a small grid.  Returns a dict with the
    point, the matched alternative index and t, or None.
    """
    fam, n = formula.family, formula.n
    h = len(formula.coefficients)
    gvars = GRID_VARS[fam]
    tmpl_vars = set(automorphism_template(fam, n).variables())
    gvals = [v for v in grid if v != 0]
    for combo in itertools.product(gvals, repeat=len(gvars)):
        bind = dict(zip(gvars, combo))
        rows = [formula.evaluate(src, bind) for src in source]
        names = tuple(sorted({v for r in rows for c in r for v in c.variables}))
        for ai, alt in enumerate(expected_alts):
            if _has_t(alt):
                tries = [(t, _at_t(alt, t)) for t in _t_candidates(rows, alt, names, h) if t not in excluded]
            else:
                tries = [(None, _at_t(alt, 0))]
            for t, target in tries:
                if _rank(target, h) != len(target):
                    continue
                found = _solve_concrete(rows, target, names, h)
                if found is not None:
                    point, numeric = found
                    point.update(bind)
                    full = {v: point.get(v, DEFAULTS.get(v, Fraction(0))) for v in sorted(tmpl_vars)}
                    return {"point": full, "alt": ai, "t": t, "rows": numeric}
    return None


# ---------------------------------------------------------------------------
# orbit cases


@dataclass
class PointResult:
    values: dict
    ok: bool
    route: str
    point: dict | None = None
    computed: list | None = None
    matched: str = ""
    t: Fraction | None = None
    displayed_note: str = ""
    dual_ok: bool | None = None


@dataclass
class CaseReport:
    family: str
    s: int
    case_id: str
    n: int
    conditions: tuple
    expected: tuple
    note: str
    points: list = field(default_factory=list)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and len(self.points) >= 2 and all(p.ok for p in self.points)

    @property
    def displayed_failures(self) -> list:
        return [p for p in self.points if p.displayed_note]

    def lines(self) -> list:
        head = f"case {display_name(self.family)} n={self.n} {self.case_id}: {'pass' if self.ok else 'FAIL'}"
        out = [head, f"  conditions: {', '.join(self.conditions) or 'none'}",
               "  expected: " + " | ".join(f"{lab + ' ' if lab else ''}{txt}" for lab, txt in self.expected)]
        if self.note:
            out.append(f"  note: {self.note}")
        if self.error:
            out.append(f"  error: {self.error}")
        for p in self.points:
            vals = ", ".join(f"{k}={v}" for k, v in p.values.items() if k != "rows") or str(p.values.get("rows"))
            out.append(f"  at {vals}: {'pass' if p.ok else 'FAIL'} via {p.route}")
            if p.displayed_note:
                out.append(f"    displayed choice: {p.displayed_note}")
            if p.point is not None:
                out.append("    parameters: " + ", ".join(f"{k}={v}" for k, v in sorted(p.point.items())))
            if p.computed is not None:
                out.append(f"    transformed: {format_span(p.computed)}"
                           + (f"  matched {p.matched}" if p.matched else "")
                           + (f"  t={p.t}" if p.t is not None else ""))
            if p.dual_ok is not None:
                out.append(f"    numeric transport agrees: {p.dual_ok}")
        return out


def _check_template(family: str, n: int, partial: dict):
    tmpl = automorphism_template(family, n)
    point = template_point(family, n, partial)
    tmpl.check_point(point)
    if family == "mu1_1" and point.get("y") == 0:
        raise OrbitError("y must be nonzero")
    return point


def verify_case(case, n: int) -> CaseReport:
    from .cases import check_condition
    fam = case.family
    rep = CaseReport(fam, case.s, case.case_id, n, case.conditions, case.expected, case.note)
    try:
        _check_family(fam, n)
    except OrbitError as exc:
        rep.error = str(exc)
        return rep
    h = len(nabla_basis(fam, n))
    displayed = paper_action(fam, n)
    alts_all = [parse_span(txt, h) for _, txt in case.expected]
    for values in case.points(n):
        rows = case.rows(values)
        bad = [c for c in case.conditions if not check_condition(c, values)]
        if bad or _rank(rows, h) != case.s:
            why = f"conditions fail: {bad}" if bad else "generators are dependent"
            rep.points.append(PointResult(values, False, "invalid witness point", displayed_note=why))
            continue
        alts = alts_all
        if case.t_value is not None:
            t0 = case.t_value(values, n)
            alts = [[[ParamPoly.coerce(c).substitute({T_VAR: t0}) for c in r] for r in alt] for alt in alts_all]
        res = None
        note = ""
        if case.substitution is not None:
            try:
                partial = case.substitution(values, n)
                point = _check_template(fam, n, partial)
                comp = [[c.constant_value() for c in displayed.evaluate(r, point)] for r in rows]
                for ai, alt in enumerate(alts):
                    t = match_span(comp, alt, h, case.excluded)
                    if t is not None:
                        res = PointResult(values, True, "displayed choice", point, comp,
                                          case.expected[ai][0], None if t is True else t)
                        break
                if res is None:
                    note = f"gives {format_span(comp)}, not the stated orbit"
            except (OrbitError, CatalogError, ZeroDivisionError) as exc:
                note = f"not usable here ({exc})"
        if res is None:
            found = orbit_search(displayed, rows, alts, case.excluded)
            if found is not None:
                route = "search" if case.substitution is None else "search (displayed choice failed)"
                res = PointResult(values, True, route, found["point"], found["rows"],
                                  case.expected[found["alt"]][0], found["t"])
            else:
                res = PointResult(values, False, "no witness found")
        res.displayed_note = note
        if res.point is not None:
            numeric = [numeric_action(fam, n, r, res.point) for r in rows]
            res.dual_ok = numeric == res.computed
            res.ok = res.ok and res.dual_ok
        rep.points.append(res)
    return rep


# ---------------------------------------------------------------------------
# matching extensions with named algebras


def forms_from_coords(family: str, n: int, row: Sequence) -> Matrix:
    """Σ c_i ∇_i as an explicit bilinear form."""
    out = Matrix.zeros(n, n)
    for form, c in zip(nabla_basis(family, n), row):
        if c:
            out = out + form.scale(scalar(c))
    return out


def extension_from_coords(family: str, n: int, rows: Sequence) -> Algebra:
    forms = tuple(forms_from_coords(family, n, r) for r in rows)
    return central_extend(family_table(family, n), Cocycle(n, forms))


def identify_base(q: Algebra):
    """Name of the filiform family whose table is exactly q, or None."""
    for fam in FILIFORM_BASES:
        if q.dim < family_minimum(fam) or (fam == "mu1_2" and q.dim % 2 == 0):
            continue
        if family_table(fam, q.dim).table == q.table:
            return fam
    return None


@dataclass
class Reduction:
    """b ≅ central_extend(quotient, theta) with quotient = b/Ann(b) a catalog base."""
    algebra: Algebra
    quotient: Algebra
    family: str
    theta: tuple
    coords: list
    witness: Matrix  # b -> central_extend(quotient, theta)


def reduce_extension(b: Algebra) -> Reduction:
    q, theta, w = reconstruct(b)
    fam = identify_base(q)
    if fam is None:
        raise OrbitError("b/Ann(b) is not a catalog table in this basis")
    red = _reducer(fam, q.dim)
    return Reduction(b, q, fam, theta.components, [red.coords(c) for c in theta.components], w)


def _row_basis(rows: list, width: int) -> list:
    _, rr = rref_transform(rows, width)
    return [r for r in rr if any(r)]


def _rows(m: Matrix) -> list:
    return [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]


def _field_coords(red: ClassReducer, flat: list) -> list:
    """Class coordinates of a form with entries in Q or Q(√d) (the reducer is Q-linear)."""
    if not any(isinstance(v, QuadraticNumber) for v in flat):
        return list(red.coords(flat))
    d = next(v.d for v in flat if isinstance(v, QuadraticNumber))
    ca = red.coords([split_parts(v)[0] for v in flat])
    cb = red.coords([split_parts(v)[1] for v in flat])
    return [QuadraticNumber(a, b, d) if b else a for a, b in zip(ca, cb)]


def _field_coboundary(red: ClassReducer, flat: list) -> list:
    if not any(isinstance(v, QuadraticNumber) for v in flat):
        return list(red.coboundary_part(flat))
    d = next(v.d for v in flat if isinstance(v, QuadraticNumber))
    ga = red.coboundary_part([split_parts(v)[0] for v in flat])
    gb = red.coboundary_part([split_parts(v)[1] for v in flat])
    return [QuadraticNumber(a, b, d) if b else a for a, b in zip(ga, gb)]


def field_is_iso(a: Algebra, b: Algebra, p: list) -> bool:
    """is_iso_witness for a matrix (list of rows) with entries in Q or Q(√d)."""
    n = a.dim
    if b.dim != n or len(p) != n or any(len(r) != n for r in p):
        return False
    if field_rank(p, n) != n:
        return False
    cols = [[p[i][j] for i in range(n)] for j in range(n)]

    def mul(alg, u, v):
        out = [Fraction(0)] * n
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                for k, c in alg.basis_product(i, j).items():
                    out[k] = out[k] + x * y * c
        return out

    for i in range(n):
        for j in range(n):
            img = [Fraction(0)] * n
            for k, c in a.basis_product(i, j).items():
                img = [s + c * t for s, t in zip(img, cols[k])]
            if img != mul(b, cols[i], cols[j]):
                return False
    return True


def assemble_field_witness(e: Reduction, x: Reduction, phi: list):
    """Isomorphism x -> e (rows of a matrix over Q or Q(√d)) from an automorphism φ
    of the common quotient, or None.

    φ must carry span[θ_E] onto span[θ_X].  With coords(φ^Tθ_Eφ) = M·coords(θ_X)
    and φ^Tθ_E,tφ - Σ M_tt' θ_X,t' = δg_t, the map x ↦ φx + Σ g_t(x) v_t,
    v'_t' ↦ Σ_t M_tt' v_t is an isomorphism of the two extensions.
    """
    fam, k = e.family, e.quotient.dim
    m = len(e.theta)
    h = len(nabla_basis(fam, k))
    red = _reducer(fam, k)
    if field_rank(phi, k) != k:
        return None
    phit = [[phi[j][i] for j in range(k)] for i in range(k)]
    pulled = [field_matmul(field_matmul(phit, _rows(c)), phi) for c in e.theta]
    ce = [_field_coords(red, [v for row in pb for v in row]) for pb in pulled]
    te, re_, _ = field_rref(ce, h)
    tx, rx, _ = field_rref(x.coords, h)
    if re_ != rx:
        return None
    mm = field_matmul(field_inverse(te), tx)
    gs = []
    for t in range(m):
        diff = [v for row in pulled[t] for v in row]
        for tp in range(m):
            if mm[t][tp]:
                diff = [u - mm[t][tp] * w for u, w in zip(diff, x.theta[tp].entries)]
        gs.append(_field_coboundary(red, diff))
    size = k + m
    psi = [[Fraction(0)] * size for _ in range(size)]
    for j in range(k):
        for i in range(k):
            psi[i][j] = phi[i][j]
        for t in range(m):
            psi[k + t][j] = gs[t][j]
    for tp in range(m):
        for t in range(m):
            psi[k + t][k + tp] = mm[t][tp]
    return field_matmul(field_matmul(_rows(e.witness.inverse()), psi), _rows(x.witness))


def assemble_witness(e: Reduction, x: Reduction, point: dict):
    """Rational isomorphism x -> e as a Matrix, or None (see assemble_field_witness)."""
    phi = automorphism_template(e.family, e.quotient.dim).instantiate(point)
    rows = assemble_field_witness(e, x, _rows(phi))
    return None if rows is None else Matrix.from_rows(rows)


QUAD_DS = (-1, 2, -2, 3, -3, 6, -6)


@dataclass
class Witness:
    """Matrix (rows) over Q, or over Q(√d) when d is set; columns are images of basis vectors."""
    rows: list
    d: int | None = None

    @property
    def field(self) -> str:
        if self.d is None:
            return "Q"
        return "Q(i)" if self.d == -1 else f"Q(√{self.d})"

    def matrix(self) -> Matrix:
        if self.d is not None:
            raise OrbitError("witness is not rational")
        return Matrix.from_rows(self.rows)

    def lines(self) -> list:
        return [" ".join(str(v) for v in r) for r in self.rows]


def _qeval(p: ParamPoly, point: dict):
    acc = Fraction(0)
    for exps, c in p.terms.items():
        term = c
        for var, e in zip(p.variables, exps):
            if e:
                term = term * point[var] ** e
        acc = acc + term
    return acc


def orbit_search_quadratic(formula: ActionFormula, source: list, target: list, ds=QUAD_DS, grid=GRID):
    """Like orbit_search for a fixed target, with grid parameters allowed in Q(√d).

    Grid parameters run over q and q·√d (q from the grid, at least one
    irrational); the remaining parameters are solved for over Q(√d).
    Returns (point, d) or None.
    """
    fam, n = formula.family, formula.n
    gvars = GRID_VARS[fam]
    if not gvars:
        return None
    h = len(formula.coefficients)
    big = _span(target, h)
    perp = nullspace(Matrix.from_rows(big.vectors(), cols=h)).vectors() if big.dim else []
    polys = [formula.evaluate(src, {}) for src in source]
    names = tuple(sorted({v for r in polys for c in r for v in c.variables} - set(gvars)))
    gvals = [v for v in grid if v != 0]
    tmpl_vars = set(automorphism_template(fam, n).variables())
    for d in ds:
        choices = gvals + [QuadraticNumber(0, q, d) for q in gvals]
        for combo in itertools.product(choices, repeat=len(gvars)):
            if not any(isinstance(v, QuadraticNumber) for v in combo):
                continue
            bind = dict(zip(gvars, combo))
            zero = dict(bind, **{v: Fraction(0) for v in names})
            consts, lins = [], []
            for r in polys:
                c0 = [_qeval(c, zero) for c in r]
                consts.append(c0)
                lins.append({v: [_qeval(c, dict(zero, **{v: Fraction(1)})) - a for c, a in zip(r, c0)]
                             for v in names})
            eqs, rhs = [], []
            for ri in range(len(polys)):
                for f in perp:
                    eqs.append([sum((f[k] * lins[ri][v][k] for k in range(h)), Fraction(0)) for v in names])
                    rhs.append(-sum((f[k] * consts[ri][k] for k in range(h)), Fraction(0)))
            if names:
                sol, kernel = field_solve(eqs, rhs, len(names)) if eqs else \
                    ([Fraction(0)] * len(names), [[Fraction(int(i == j)) for j in range(len(names))]
                                                  for i in range(len(names))])
                if sol is None:
                    continue
                trials = [sol] + [[a + b for a, b in zip(sol, kv)] for kv in kernel]
            else:
                if any(rhs):
                    continue
                trials = [[]]
            for vals in trials:
                point = dict(bind, **dict(zip(names, vals)))
                numeric = [[a + sum((lins[ri][v][k] * point[v] for v in names), Fraction(0))
                            for k, a in enumerate(consts[ri])] for ri in range(len(polys))]
                if field_rank(numeric, h) == big.dim and field_rank(numeric + list(target), h) == big.dim:
                    full = {v: point.get(v, DEFAULTS.get(v, Fraction(0))) for v in sorted(tmpl_vars)}
                    return full, d
    return None


def _template_rows(family: str, n: int, point: dict) -> list:
    tmpl = automorphism_template(family, n)
    tmpl.check_point({k: v for k, v in point.items() if not isinstance(v, QuadraticNumber)})
    return [[_qeval(p, point) for p in row] for row in tmpl.entries]


def find_witness(e: Algebra, x: Algebra, reductions=None, quadratic: bool = True):
    """(Witness x -> e, note) through the common quotient by the annihilator.

    Rational automorphisms of the quotient are tried first; with quadratic
    set, grid parameters in Q(√d) for d in QUAD_DS are tried next.
    """
    if e.dim != x.dim:
        return None, "dimensions differ"
    re_, rx = reductions or (reduce_extension(e), reduce_extension(x))
    if re_.quotient.table != rx.quotient.table or re_.quotient.dim != rx.quotient.dim:
        return None, "quotients by the annihilator differ"
    h = len(rx.coords[0]) if rx.coords else 0
    if _rank(re_.coords, h) != _rank(rx.coords, h):
        return None, "class ranks differ"
    formula = parametric_action(re_.family, re_.quotient.dim)
    target = _row_basis(rx.coords, h)
    found = orbit_search(formula, re_.coords, [target])
    if found is not None:
        p = assemble_witness(re_, rx, found["point"])
        if p is not None and is_iso_witness(x, e, p):
            return Witness(_rows(p)), ""
        return None, "assembled map is not an isomorphism"
    if not quadratic:
        return None, "no rational automorphism found on the search grid"
    qfound = orbit_search_quadratic(formula, re_.coords, target)
    if qfound is None:
        return None, "no automorphism found on the rational or quadratic grids"
    point, d = qfound
    rows = assemble_field_witness(re_, rx, _template_rows(re_.family, re_.quotient.dim, point))
    if rows is None or not field_is_iso(x, e, rows):
        return None, "assembled map is not an isomorphism"
    return Witness(rows, d), ""


def find_alpha_witness(e: Algebra, name: str, dim: int, probes=(Fraction(2), Fraction(3))):
    """(α, witness X(α) -> e, note) for a one-parameter family X(α).

    The annihilator reduction of X(α) at two probe values gives class
    coordinates affine in α; the orbit search then treats α as the free
    parameter t, and the result is re-verified against the actual X(α).
    """
    ra, rb = (reduce_extension(catalog_algebra(name, dim, a)) for a in probes)
    if ra.quotient.table != rb.quotient.table or ra.witness != rb.witness:
        return None, None, "reduction depends on α"
    re_ = reduce_extension(e)
    if re_.quotient.table != ra.quotient.table or re_.quotient.dim != ra.quotient.dim:
        return None, None, "quotients by the annihilator differ"
    a0, a1 = probes
    tv = ParamPoly.var(T_VAR)
    rows = []
    for ua, ub in zip(ra.coords, rb.coords):
        row = []
        for va, vb in zip(ua, ub):
            slope = (vb - va) / (a1 - a0)
            row.append(ParamPoly.const(va - slope * a0) + tv * slope)
        rows.append(row)
    h = len(rows[0])
    if _rank(re_.coords, h) != len(rows):
        return None, None, "class ranks differ"
    try:
        found = orbit_search(parametric_action(re_.family, re_.quotient.dim), re_.coords, [rows])
    except OrbitError as exc:
        return None, None, str(exc)
    if found is None or found["t"] is None:
        return None, None, "no automorphism found on the search grid"
    alpha = found["t"]
    x = catalog_algebra(name, dim, alpha)
    p, note = find_witness(e, x)
    if p is None:
        return None, None, note
    return alpha, p, ""


# ---------------------------------------------------------------------------
# finite-field isomorphism oracle

FF_MAX_DIM = 5
FF_PRIMES = (2, 3)
PARALLEL_THRESHOLD = 20000


def _mod_table(a: Algebra, p: int) -> tuple:
    d = a.dim
    prod = [[[0] * d for _ in range(d)] for _ in range(d)]
    for (i, j, k), c in a.table.items():
        c = Fraction(c)
        if c.denominator % p == 0:
            raise OrbitError(f"structure constant {c} has a denominator divisible by {p}")
        prod[i - 1][j - 1][k - 1] = c.numerator * pow(c.denominator, -1, p) % p
    return tuple(tuple(tuple(v) for v in row) for row in prod)


def _ff_mul(prod, u, v, p: int) -> tuple:
    d = len(u)
    out = [0] * d
    for i in range(d):
        if not u[i]:
            continue
        for j in range(d):
            if not v[j]:
                continue
            c = u[i] * v[j]
            for k, x in enumerate(prod[i][j]):
                if x:
                    out[k] += c * x
    return tuple(x % p for x in out)


class _FFEchelon:
    """Incremental row echelon form over F_p."""

    def __init__(self, p: int):
        self.p = p
        self.rows = {}  # pivot -> normalised row

    def reduce(self, v) -> list:
        v = list(v)
        for piv, r in self.rows.items():
            if v[piv]:
                c = v[piv]
                v = [(a - c * b) % self.p for a, b in zip(v, r)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, self.p)
        v = [x * inv % self.p for x in v]
        for q, r in list(self.rows.items()):
            if r[piv]:
                c = r[piv]
                self.rows[q] = [(a - c * b) % self.p for a, b in zip(r, v)]
        self.rows[piv] = v
        return True

    def copy(self) -> "_FFEchelon":
        e = _FFEchelon(self.p)
        e.rows = {k: list(v) for k, v in self.rows.items()}
        return e

    @property
    def dim(self) -> int:
        return len(self.rows)


def _ff_square(prod, d: int, p: int) -> _FFEchelon:
    ech = _FFEchelon(p)
    for i in range(d):
        for j in range(d):
            ech.add(prod[i][j])
    return ech


def _ff_inverse(cols: list, p: int):
    """Inverse of the d×d matrix with the given columns, as a list of rows, or None."""
    d = len(cols)
    aug = [[cols[c][r] for c in range(d)] + [int(r == c) for c in range(d)] for r in range(d)]
    for col in range(d):
        sel = next((r for r in range(col, d) if aug[r][col] % p), None)
        if sel is None:
            return None
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(a - c * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


@dataclass
class _WordPlan:
    gens: list  # indices of generator basis vectors
    words: list  # ("g", i) or ("m", a, b) over earlier words
    vinv: list  # inverse of the matrix whose columns are the word vectors


def _word_plan(prod, d: int, p: int):
    """Generators (complement of A^2) and product words spanning A, or None if they do not span."""
    square = _ff_square(prod, d, p)
    ech = square.copy()
    gens = [i for i in range(d) if ech.add(tuple(int(k == i) for k in range(d)))]
    span = _FFEchelon(p)
    words, vecs = [], []
    for gi, i in enumerate(gens):
        v = tuple(int(k == i) for k in range(d))
        span.add(v)
        words.append(("g", gi))
        vecs.append(v)
    grew = True
    while span.dim < d and grew:
        grew = False
        for a in range(len(vecs)):
            for b in range(len(vecs)):
                v = _ff_mul(prod, vecs[a], vecs[b], p)
                if span.add(v):
                    words.append(("m", a, b))
                    vecs.append(v)
                    grew = True
    if span.dim < d:
        return None
    return _WordPlan(gens, words, _ff_inverse(vecs, p))


def _check_images(pa, pb, plan: _WordPlan, images: tuple, p: int, d: int):
    imgs = []
    for w in plan.words:
        imgs.append(images[w[1]] if w[0] == "g" else _ff_mul(pb, imgs[w[1]], imgs[w[2]], p))
    # φ = I · V^{-1}; column j of φ is Σ_k I_k (V^{-1})_{k j}
    cols = []
    for j in range(d):
        col = [0] * d
        for k in range(d):
            c = plan.vinv[k][j]
            if c:
                for r in range(d):
                    col[r] += c * imgs[k][r]
        cols.append(tuple(x % p for x in col))
    for i in range(d):
        for j in range(d):
            lhs = [0] * d
            for k, c in enumerate(pa[i][j]):
                if c:
                    for r in range(d):
                        lhs[r] += c * cols[k][r]
            if tuple(x % p for x in lhs) != _ff_mul(pb, cols[i], cols[j], p):
                return None
    if _ff_inverse(cols, p) is None:
        return None
    return cols


def _image_candidates(d: int, p: int) -> list:
    return list(itertools.product(range(p), repeat=d))


def _search_chunk(args):
    pa, pb, plan, p, d, first_images, b_square_rows = args
    cands = _image_candidates(d, p)
    r = len(plan.gens)
    base = _FFEchelon(p)
    base.rows = {k: list(v) for k, v in b_square_rows.items()}
    examined = 0

    def rec(chosen, ech):
        nonlocal examined
        if len(chosen) == r:
            examined += 1
            return _check_images(pa, pb, plan, tuple(chosen), p, d)
        pool = first_images if not chosen else cands
        for v in pool:
            e2 = ech.copy()
            if not e2.add(v):
                continue
            out = rec(chosen + [v], e2)
            if out is not None:
                return out
        return None

    return rec([], base), examined


def _full_search(pa, pb, p: int, d: int):
    """Column-by-column enumeration with partial product checks (fallback)."""
    cands = _image_candidates(d, p)
    examined = 0

    def ok_upto(cols, m):
        for i in range(m):
            for j in range(m):
                vec = pa[i][j]
                if any(c and k >= m for k, c in enumerate(vec)):
                    continue
                lhs = [0] * d
                for k, c in enumerate(vec):
                    if c:
                        for r in range(d):
                            lhs[r] += c * cols[k][r]
                if tuple(x % p for x in lhs) != _ff_mul(pb, cols[i], cols[j], p):
                    return False
        return True

    def rec(cols, ech):
        nonlocal examined
        m = len(cols)
        if m == d:
            examined += 1
            return list(cols)
        for v in cands:
            e2 = ech.copy()
            if not e2.add(v):
                continue
            cols.append(v)
            if ok_upto(cols, m + 1):
                out = rec(cols, e2)
                if out is not None:
                    return out
            cols.pop()
        return None

    return rec([], _FFEchelon(p)), examined


def worker_count() -> int:
    env = os.environ.get("CEXKIT_THREADS")
    cpus = os.cpu_count() or 1
    if env is None:
        return cpus
    try:
        k = int(env)
    except ValueError:
        raise OrbitError("CEXKIT_THREADS must be a positive integer") from None
    if k < 1:
        raise OrbitError("CEXKIT_THREADS must be a positive integer")
    return min(k, cpus)


@dataclass
class FFResult:
    p: int
    dim: int
    witness: list | None  # rows of the matrix over F_p (columns are images)
    examined: int
    route: str

    @property
    def found(self) -> bool:
        return self.witness is not None

    def lines(self) -> list:
        if self.found:
            return [f"witness over F_{self.p} ({self.route}, {self.examined} candidates):"] + \
                ["  " + " ".join(str(x) for x in row) for row in self.witness]
        return [f"none over F_{self.p} ({self.route}, {self.examined} candidates); "
                f"evidence, not proof, of non-isomorphism over Q"]


def ff_iso_search(a: Algebra, b: Algebra, p: int, workers: int | None = None) -> FFResult:
    """Exhaustive search for an isomorphism a -> b after reducing both tables mod p.

    An isomorphism of nilpotent algebras is fixed by the images of generators
    chosen as a complement of a^2; those images must be independent modulo
    b^2.  Candidates are enumerated in lexicographic order of the generator
    images, so the first witness found (also across workers) is the smallest.
    """
    if a.dim != b.dim:
        raise OrbitError("algebras have different dimensions")
    if a.dim > FF_MAX_DIM:
        raise OrbitError(f"finite-field search is limited to dimension <= {FF_MAX_DIM}")
    if p not in FF_PRIMES:
        raise OrbitError(f"finite-field search supports p in {FF_PRIMES}")
    d = a.dim
    pa, pb = _mod_table(a, p), _mod_table(b, p)
    plan = _word_plan(pa, d, p)
    if plan is None:
        out, examined = _full_search(pa, pb, p, d)
        return FFResult(p, d, _rows_of(out, d), examined, "full enumeration")
    sq_b = _ff_square(pb, d, p)
    sq_a = _ff_square(pa, d, p)
    if sq_a.dim != sq_b.dim:
        return FFResult(p, d, None, 0, "squares differ in dimension")
    cands = _image_candidates(d, p)
    r = len(plan.gens)
    workers = worker_count() if workers is None else max(1, workers)
    total = len(cands) ** r
    if workers == 1 or total < PARALLEL_THRESHOLD or r == 0:
        out, examined = _search_chunk((pa, pb, plan, p, d, cands, sq_b.rows))
        return FFResult(p, d, _rows_of(out, d), examined, "generator images")
    from concurrent.futures import ProcessPoolExecutor
    size = -(-len(cands) // workers)
    chunks = [cands[i:i + size] for i in range(0, len(cands), size)]
    jobs = [(pa, pb, plan, p, d, ch, sq_b.rows) for ch in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_search_chunk, jobs))
    examined = sum(e for _, e in results)
    witness = next((w for w, _ in results if w is not None), None)
    return FFResult(p, d, _rows_of(witness, d), examined, f"generator images, {len(chunks)} workers")


def _rows_of(cols, d: int):
    if cols is None:
        return None
    return [[cols[j][i] for j in range(d)] for i in range(d)]


# ---------------------------------------------------------------------------
# theorem reproduction

T_SAMPLES = tuple(Fraction(v) for v in (0, 1, -1, 2, Fraction(1, 2), -2, 3))
PREFILTER_ALPHAS = tuple(Fraction(v) for v in (0, 1, -1, 2, 3, Fraction(1, 2), -2, Fraction(-1, 2)))
TRUNCATION_DIM = 5


def _label(name: str, alpha) -> str:
    return display_name(name) + (f"({alpha})" if alpha is not None else "")


@dataclass
class SampleMatch:
    entry: str
    t: Fraction | None
    rows: list
    literal_ts: bool
    name: str | None = None
    alpha: Fraction | None = None
    witness: Witness | None = None
    rejected: list = field(default_factory=list)  # (label, reason)
    outside: bool = False  # matched a catalog algebra the theorem does not name

    @property
    def sample_label(self) -> str:
        return format_span(self.rows) if self.t is None else f"{format_span(self.rows)} (t={self.t})"

    @property
    def instance(self):
        return (self.name, self.alpha)


@dataclass
class TListReport:
    family: str
    n: int
    s: int
    cases: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    problems: list = field(default_factory=list)
    separated: list = field(default_factory=list)
    unseparated: list = field(default_factory=list)
    coverage: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and not self.problems and all(c.ok for c in self.cases)

    def lines(self, verbose: bool = False) -> list:
        out = [f"T_{self.s}({display_name(self.family)}^{self.n}): {'pass' if self.ok else 'FAIL'}"]
        if self.error:
            out.append(f"  error: {self.error}")
        if self.cases:
            bad = [c for c in self.cases if not c.ok]
            out.append(f"  orbit cases: {len(self.cases) - len(bad)}/{len(self.cases)} pass")
            for c in (self.cases if verbose else bad):
                out += ["  " + line for line in c.lines()]
        lit = sum(1 for m in self.samples if not m.literal_ts)
        if lit:
            out.append(f"  {lit} of {len(self.samples)} samples have Ann(θ)∩Ann(A) ≠ 0 "
                       f"(matched through the quotient by the full annihilator)")
        out.append("  matches:")
        for m in self.samples:
            if m.name is None:
                out.append(f"    {m.sample_label} -> no catalog algebra matched")
            elif m.outside:
                out.append(f"    {m.sample_label} -> {_label(m.name, m.alpha)}, not named in the theorem  "
                           f"(witness over {m.witness.field} verified)")
            else:
                out.append(f"    {m.sample_label} -> {_label(m.name, m.alpha)}  "
                           f"(witness over {m.witness.field} verified)")
                if verbose:
                    out += ["      " + line for line in m.witness.lines()]
            if verbose:
                out += [f"      not {lab}: {why}" for lab, why in m.rejected]
        out.append("  named algebras covered:")
        for label, hits in self.coverage.items():
            out.append(f"    {label}: " + (", ".join(hits) if hits else "NOT REACHED"))
        if self.separated:
            out.append(f"  distinct names separated by invariants: {len(self.separated)} pairs")
            if verbose:
                out += ["    " + s for s in self.separated]
        for u in self.unseparated:
            out.append(f"  not separated by this engine: {u}")
        for note in self.notes:
            out.append(f"  note: {note}")
        for p in self.problems:
            out.append(f"  problem: {p}")
        return out


@lru_cache(maxsize=None)
def _named(name: str, dim: int, alpha=None) -> Algebra:
    return catalog_algebra(name, dim, alpha)


@lru_cache(maxsize=None)
def _invariants(name: str, dim: int, alpha=None):
    a = _named(name, dim, alpha)
    return fingerprint(a), invariant_signature(a)


@lru_cache(maxsize=None)
def truncation_evidence(name: str, a1: Fraction, a2: Fraction) -> str:
    """Finite-field comparison of the dimension-5 truncations at two parameter values."""
    for p in FF_PRIMES[::-1]:
        if a1.denominator % p == 0 or a2.denominator % p == 0:
            continue
        if (a1.numerator * pow(a1.denominator, -1, p) - a2.numerator * pow(a2.denominator, -1, p)) % p == 0:
            continue
        res = ff_iso_search(family_table(name, TRUNCATION_DIM, a1), family_table(name, TRUNCATION_DIM, a2), p)
        verdict = "witness found" if res.found else "none (evidence of non-isomorphism)"
        return f"F_{p} search on the {TRUNCATION_DIM}-dimensional truncations: {verdict}"
    return "no prime in {2, 3} distinguishes the two values"


def _match_sample(e: Algebra, names: tuple, dim: int, m: SampleMatch):
    fp_e = fingerprint(e)
    sig_e = None
    plain = [nm for nm, rule in names if rule is None]
    para = [nm for nm, rule in names if rule is not None]
    for nm in plain:
        inv = _invariants(nm, dim)
        if inv[0] != fp_e:
            m.rejected.append((display_name(nm), "fingerprint differs"))
            continue
        sig_e = sig_e or invariant_signature(e)
        if inv[1] != sig_e:
            m.rejected.append((display_name(nm), "refined invariants differ"))
            continue
        p, note = find_witness(e, _named(nm, dim))
        if p is not None:
            m.name, m.witness = nm, p
            return
        m.rejected.append((display_name(nm), note))
    for nm in dict.fromkeys(para):
        if all(_invariants(nm, dim, a)[0] != fp_e for a in PREFILTER_ALPHAS):
            m.rejected.append((display_name(nm) + "(α)", "fingerprint differs at every sampled α"))
            continue
        alpha, p, note = find_alpha_witness(e, nm, dim)
        if p is not None:
            m.name, m.alpha, m.witness = nm, alpha, p
            return
        m.rejected.append((display_name(nm) + "(α)", note))


def verify_t_list(family: str, n: int, s: int, samples=T_SAMPLES, run_cases: bool = True,
                  evidence: bool = True) -> TListReport:
    """Orbit cases, entry-to-name matching by witnesses, and distinctness of the names."""
    from .cases import THEOREM_NAMES, T_EXCLUDED, T_LISTS, cases_for, rule_allows, rule_text
    rep = TListReport(family, n, s)
    key = (family, s)
    if key not in T_LISTS:
        rep.error = f"no listed orbits for {display_name(family)} in dimension {s}"
        return rep
    try:
        _check_family(family, n)
    except OrbitError as exc:
        rep.error = str(exc)
        return rep
    if run_cases:
        rep.cases = [verify_case(c, n) for c in cases_for(family, s)]
    names = THEOREM_NAMES[key]
    dim = n + s
    h = len(nabla_basis(family, n))
    base = family_table(family, n)
    for entry in T_LISTS[key]:
        rows = parse_span(entry, h)
        excluded = T_EXCLUDED.get((family, s, entry), ())
        ts = [t for t in samples if t not in excluded] if _has_t(rows) else [None]
        for t in ts:
            coords = _at_t(rows, t if t is not None else 0)
            if _rank(coords, h) != s:
                rep.problems.append(f"{entry} at t={t}: generators are dependent")
                continue
            forms = Cocycle(n, tuple(forms_from_coords(family, n, r) for r in coords))
            m = SampleMatch(entry, t, coords, radical_meet(base, forms).dim == 0)
            e = central_extend(base, forms)
            _match_sample(e, names, dim, m)
            if m.name is None:
                others = tuple((nm, "any" if nm in ALPHA_FAMILIES else None) for nm in FAMILIES
                               if family_minimum(nm) <= dim and nm not in {x for x, _ in names})
                _match_sample(e, others, dim, m)
                m.outside = m.name is not None
            rep.samples.append(m)
            if m.name is None:
                rep.problems.append(f"{m.sample_label}: no catalog algebra matched")
            elif m.outside:
                rep.problems.append(f"{m.sample_label}: matched {_label(m.name, m.alpha)}, "
                                    f"which the theorem does not name")
            else:
                rule = next((r for nm, r in names if nm == m.name and rule_allows(r, m.alpha)), "missing")
                if rule == "missing":
                    rep.problems.append(f"{m.sample_label}: matched {_label(m.name, m.alpha)}, "
                                        f"outside the parameter range the theorem names")
    # coverage of the named list
    for nm, rule in names:
        label = display_name(nm) + rule_text(rule)
        hits = [m.sample_label for m in rep.samples
                if m.name == nm and not m.outside and rule_allows(rule, m.alpha)]
        rep.coverage[label] = hits
        if not hits:
            rep.problems.append(f"{label} is not reached by any listed entry")
    # different samples must give different algebras
    by_instance: dict = {}
    for m in rep.samples:
        if m.name is not None:
            by_instance.setdefault(m.instance, []).append(m)
    for inst, group in by_instance.items():
        entries = list(dict.fromkeys(m.entry for m in group))
        if len(entries) > 1:
            rep.problems.append(f"entries {', '.join(entries)} all give {_label(*inst)}")
        elif len(group) > 1:
            text = (f"{entries[0]} at t={', '.join(str(m.t) for m in group)} gives "
                    f"the same algebra {_label(*inst)}")
            # a parameter-free name absorbing a t-family is what the theorem states
            # once Ann(θ)∩Ann(A) ≠ 0 lets distinct orbits give isomorphic algebras
            if inst[1] is None and not any(m.literal_ts for m in group):
                rep.notes.append(text + " (the theorem names it without a parameter)")
            else:
                rep.problems.append(text)
    # distinctness of the matched algebras
    insts = list(by_instance)
    for i, a in enumerate(insts):
        for b in insts[i + 1:]:
            if a[0] == b[0]:
                continue
            ia, ib = _invariants(a[0], dim, a[1]), _invariants(b[0], dim, b[1])
            if ia[0] != ib[0]:
                rep.separated.append(f"{_label(*a)} vs {_label(*b)}: fingerprint")
            elif ia[1] != ib[1]:
                rep.separated.append(f"{_label(*a)} vs {_label(*b)}: refined invariants")
            else:
                rep.problems.append(f"{_label(*a)} and {_label(*b)} are not separated by the invariants")
    for nm in dict.fromkeys(nm for nm, rule in names if rule is not None):
        alphas = sorted({m.alpha for m in rep.samples if m.name == nm})
        if len(alphas) < 2:
            continue
        text = f"{display_name(nm)}(α) at α = {', '.join(str(a) for a in alphas)}"
        if evidence:
            pairs = list(zip(alphas, alphas[1:]))[:3]
            text += "; " + "; ".join(f"{a} vs {b}: {truncation_evidence(nm, a, b)}" for a, b in pairs)
        rep.unseparated.append(text)
    return rep

"""Named null-filiform, filiform and quasi-filiform families.

Family names use ASCII keys: ``mu0``, ``mu1_1`` .. ``mu1_4``, ``mu2_1`` ..
``mu2_10``, ``mu3_1`` .. ``mu3_7``, ``mu4_1`` .. ``mu4_4``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra
from .cohomology import form_from_terms
from .exact import Matrix, ParamPoly, scalar


class CatalogError(ValueError):
    pass


# chain bound offset c: e_i e_j = e_{i+j} for 2 <= i+j <= n - c
_LEVEL_MIN = {0: 1, 1: 4, 2: 6, 3: 7, 4: 8}

# extra products as (i, j, [(k, coeff)]) with indices given as offsets from n
# (0 means n, -1 means n-1, ...) or absolute positive index 1.  "a" stands for
# the alpha parameter.
_EXTRAS = {
    "mu0": [],
    "mu1_1": [],
    "mu1_2": [("n", "n", [("n-1", 1)])],
    "mu1_3": [(1, "n", [("n-1", 1)])],
    "mu1_4": [(1, "n", [("n-1", 1)]), ("n", "n", [("n-1", 1)])],
    "mu2_1": [("n-1", 1, [("n", 1)])],
    "mu2_2": [(1, "n-1", [("n", 1)]), ("n-1", 1, [("n", "a")])],
    "mu2_3": [("n-1", "n-1", [("n", 1)])],
    "mu2_4": [(1, "n-1", [("n", 1)]), ("n-1", "n-1", [("n", 1)])],
    "mu2_5": [(1, "n-1", [("n-2", 1), ("n", 1)]), ("n-1", 1, [("n", 1)])],
    "mu2_6": [(1, "n-1", [("n-2", 1)]), ("n-1", 1, [("n", 1)]), ("n-1", "n-1", [("n", 1)])],
    "mu2_7": [(1, "n-1", [("n-2", 1)]), ("n-1", "n-1", [("n", 1)])],
    "mu2_8": [(1, "n-1", [("n-2", 1), ("n", 1)]), ("n-1", 1, [("n", 1)]), ("n-1", "n-1", [("n-2", 1)])],
    "mu2_9": [(1, "n-1", [("n", 1)]), ("n-1", 1, [("n", "a")]), ("n-1", "n-1", [("n-2", 1)])],
    "mu2_10": [("n-1", 1, [("n", 1)]), ("n-1", "n-1", [("n-2", 1)])],
    "mu3_1": [(1, "n-2", [("n-1", 1)]), ("n-2", 1, [("n", 1)])],
    "mu3_2": [(1, "n-2", [("n-1", 1)]), ("n-2", 1, [("n-1", 1), ("n", 1)]), ("n-2", "n-2", [("n", 1)])],
    "mu3_3": [(1, "n-2", [("n-1", 1)]), ("n-2", 1, [("n-1", "a")]), ("n-2", "n-2", [("n", 1)])],
    "mu3_4": [("n-2", 1, [("n-1", 1)]), ("n-2", "n-2", [("n", 1)])],
    "mu3_5": [(1, "n-2", [("n-3", 1), ("n-1", 1)]), ("n-2", 1, [("n-1", 1)]), ("n-2", "n-2", [("n", 1)])],
    "mu3_6": [(1, "n-2", [("n-3", 1), ("n-1", 1)]), ("n-2", 1, [("n-1", 1), ("n", 1)]),
              ("n-2", "n-2", [("n", 1)])],
    "mu3_7": [(1, "n-2", [("n-1", 1)]), ("n-2", 1, [("n", 1)]), ("n-2", "n-2", [("n-3", 1)])],
    "mu4_1": [(1, "n-3", [("n-2", 1)]), ("n-3", 1, [("n-1", 1)]), ("n-3", "n-3", [("n", 1)])],
    "mu4_2": [(1, "n-3", [("n-2", 1)]), ("n-3", 1, [("n-1", 1)]), ("n-3", "n-3", [("n-4", 1), ("n", 1)])],
    "mu4_3": [(1, "n-3", [("n-4", 1), ("n-2", 1)]), ("n-3", 1, [("n-1", 1)]), ("n-3", "n-3", [("n", 1)])],
    "mu4_4": [(1, "n-3", [("n-4", 1), ("n-2", 1)]), ("n-3", 1, [("n-1", 1)]),
              ("n-3", "n-3", [("n-4", 1), ("n", 1)])],
}

ALPHA_FAMILIES = frozenset({"mu2_2", "mu2_9", "mu3_3"})
FAMILIES = tuple(_EXTRAS)
FILIFORM_BASES = ("mu0", "mu1_1", "mu1_2", "mu1_3", "mu1_4")


def family_level(name: str) -> int:
    if name not in _EXTRAS:
        raise CatalogError(f"unknown family {name!r}")
    return 0 if name == "mu0" else int(name[2])


def family_minimum(name: str) -> int:
    return _LEVEL_MIN[family_level(name)]


def display_name(name: str) -> str:
    if name == "mu0":
        return "μ0"
    lvl, k = name[2:].split("_")
    return f"μ{lvl},{k}"


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.name not in _EXTRAS:
            raise CatalogError(f"unknown family {self.name!r}")
        if self.n < family_minimum(self.name):
            raise CatalogError(f"{self.name} needs n >= {family_minimum(self.name)}, got {self.n}")
        if self.name in ALPHA_FAMILIES and self.alpha is None:
            raise CatalogError(f"{self.name} needs an alpha parameter")
        if self.name not in ALPHA_FAMILIES and self.alpha is not None:
            raise CatalogError(f"{self.name} takes no alpha parameter")

    def label(self) -> str:
        s = f"{display_name(self.name)}^{self.n}"
        if self.alpha is not None:
            s += f"({self.alpha})"
        return s

    def to_text(self) -> str:
        s = f"{self.name}:{self.n}"
        if self.alpha is not None:
            s += f":alpha={self.alpha.numerator}/{self.alpha.denominator}"
        return s


_SPEC_RE = re.compile(r"^(mu[0-9_]+):(\d+)(?::alpha=([-+]?\d+(?:/\d+)?))?$")


def parse_spec(text: str) -> FamilySpec:
    """Parse ``<family>:<n>[:alpha=<num/den>]``."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise CatalogError(f"malformed catalog spec {text!r}; expected <family>:<n>[:alpha=<num/den>]")
    name, n, alpha = m.group(1), int(m.group(2)), m.group(3)
    if name not in _EXTRAS:
        raise CatalogError(f"unknown family {name!r}")
    return FamilySpec(name, n, Fraction(alpha) if alpha is not None else None)


def _resolve(idx, n: int) -> int:
    if isinstance(idx, int):
        return idx
    if idx == "n":
        return n
    m = re.fullmatch(r"n-(\d+)", idx)
    return n - int(m.group(1))


def family_table(name: str, n: int, alpha=None) -> Algebra:
    """Structure constants of a family at any n where all indices are valid.

    Unlike make_algebra this does not enforce the family minimum; it is used
    for small truncations fed to the finite-field oracle.
    """
    lvl = family_level(name)
    if name in ALPHA_FAMILIES:
        if alpha is None:
            raise CatalogError(f"{name} needs an alpha parameter")
        alpha = scalar(alpha)
    table: dict = {}
    bound = n - lvl
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if 2 <= i + j <= bound:
                table[(i, j, i + j)] = Fraction(1)
    for (i, j, terms) in _EXTRAS[name]:
        ii, jj = _resolve(i, n), _resolve(j, n)
        for k, c in terms:
            kk = _resolve(k, n)
            if not (1 <= ii <= n and 1 <= jj <= n and 1 <= kk <= n):
                raise CatalogError(f"{name} is not defined at n={n}")
            c = alpha if c == "a" else Fraction(c)
            table[(ii, jj, kk)] = table.get((ii, jj, kk), 0) + c
    return Algebra(n, table)


def make_algebra(spec: FamilySpec) -> Algebra:
    return family_table(spec.name, spec.n, spec.alpha)


def catalog_algebra(name: str, n: int, alpha=None) -> Algebra:
    return make_algebra(FamilySpec(name, n, None if alpha is None else scalar(alpha)))


# ---------------------------------------------------------------------------
# ∇ bases


def nabla_basis(family: str, n: int) -> list:
    """Named H^2 representatives as explicit forms."""
    if family not in FILIFORM_BASES:
        raise CatalogError(f"no ∇ basis for family {family!r}")
    if n < family_minimum(family):
        raise CatalogError(f"{family} needs n >= {family_minimum(family)}")
    if family == "mu0":
        return [form_from_terms(n, [(j, n + 1 - j, 1) for j in range(1, n + 1)])]
    tail = [form_from_terms(n, [(1, n, 1)]), form_from_terms(n, [(n, 1, 1)]), form_from_terms(n, [(n, n, 1)])]
    if family == "mu1_1":
        return [form_from_terms(n, [(j, n - j, 1) for j in range(1, n)])] + tail
    return tail


# ---------------------------------------------------------------------------
# automorphism templates


@dataclass
class ParamMatrix:
    entries: list
    constraints: list = field(default_factory=list)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def variables(self) -> list:
        out: set = set()
        for row in self.entries:
            for p in row:
                out.update(p.variables)
        return sorted(out)

    def instantiate(self, point) -> Matrix:
        self.check_point(point)
        return Matrix.from_rows([[p.evaluate(point) for p in row] for row in self.entries])

    def check_point(self, point):
        for kind, sym, *rest in self.constraints:
            if kind == "nonzero" and sym in point and scalar(point[sym]) == 0:
                raise CatalogError(f"constraint violated: {sym} must be nonzero")
            if kind == "equals" and sym in point and scalar(point[sym]) != rest[0]:
                raise CatalogError(f"constraint violated: {sym} must equal {rest[0]}")

    def random_point(self, rng: random.Random, span: int = 5) -> dict:
        point = {}
        for v in self.variables():
            num = 0
            while num == 0:
                num = rng.randint(-span, span)
            point[v] = Fraction(num, rng.randint(1, span))
        return point

    def describe_constraints(self) -> list:
        out = []
        for kind, sym, *rest in self.constraints:
            out.append(f"{sym} != 0" if kind == "nonzero" else f"{sym} = {rest[0]}")
        return out


def _poly_product(a: Algebra, u: list, v: list) -> list:
    out = [ParamPoly() for _ in range(a.dim)]
    for i, x in enumerate(u):
        if x.is_zero():
            continue
        for j, y in enumerate(v):
            if y.is_zero():
                continue
            prod = a.basis_product(i, j)
            if prod:
                xy = x * y
                for k, c in prod.items():
                    out[k] = out[k] + xy * c
    return out


def first_column_names(family: str, n: int) -> list:
    """Parameter names of φ(e_1) by row."""
    names = ["x"] + [f"a{i}_1" for i in range(2, n + 1)]
    if family == "mu1_1":
        names[n - 1] = "w"
    elif family in ("mu1_2", "mu1_3", "mu1_4"):
        names[n - 1] = "z"
    return names


def automorphism_template(family: str, n: int) -> ParamMatrix:
    """Parametric automorphism matrix (columns are images of basis vectors)."""
    if family not in FILIFORM_BASES:
        raise CatalogError(f"no automorphism template for family {family!r}")
    if n < family_minimum(family):
        raise CatalogError(f"{family} needs n >= {family_minimum(family)}")
    if family == "mu1_2" and n % 2 == 0:
        raise CatalogError("the μ1,2 template involves a_{1,1}^{(n-1)/2}; only odd n is supported")
    a = family_table(family, n)
    names = first_column_names(family, n)
    col1 = [ParamPoly.var(v) for v in names]
    x = ParamPoly.var("x")
    if family == "mu1_4":
        col1[0] = ParamPoly.const(1)
        x = ParamPoly.const(1)
    top = n if family == "mu0" else n - 1
    cols = [col1]
    for _ in range(2, top + 1):
        cols.append(_poly_product(a, cols[-1], col1))
    constraints = [("nonzero", "x")]
    if family != "mu0":
        last = [ParamPoly() for _ in range(n)]
        y, z = ParamPoly.var("y"), ParamPoly.var("z")
        if family == "mu1_1":
            last[n - 2] = z
            last[n - 1] = y
            constraints.append(("nonzero", "y"))
        elif family == "mu1_2":
            last[n - 3] = -ParamPoly.var("z") * x ** ((n - 3) // 2)
            last[n - 2] = y
            last[n - 1] = x ** ((n - 1) // 2)
        elif family == "mu1_3":
            last[n - 2] = y
            last[n - 1] = x ** (n - 2)
        else:
            last[n - 3] = -ParamPoly.var("z")
            last[n - 2] = y
            last[n - 1] = ParamPoly.const(1)
            constraints = [("equals", "x", Fraction(1))]
        cols.append(last)
    entries = [[cols[j][i] for j in range(n)] for i in range(n)]
    return ParamMatrix(entries, constraints)

"""Orbit cases of the filiform extension analyses, as checkable data.

Each case lists its conditions on the coefficients of the generating
cocycles θ_1 = Σ α_i∇_i, θ_2 = Σ β_i∇_i, θ_3 = Σ γ_i∇_i (keys a1.., b1..,
c1..), rational witness points that satisfy them, the displayed choice of
automorphism parameters (when one is displayed) and the stated orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable

from .orbitlab import OrbitError, root

NABLA_COUNT = {"mu0": 1, "mu1_1": 4, "mu1_2": 3, "mu1_3": 3, "mu1_4": 3}


@dataclass(frozen=True)
class OrbitCase:
    family: str
    s: int
    case_id: str
    conditions: tuple
    points: Callable  # n -> list of value dicts
    expected: tuple  # (label, span text) alternatives
    substitution: Callable | None = None  # (values, n) -> {x, y, z, w}
    t_value: Callable | None = None  # (values, n) -> t for the stated representative
    excluded: tuple = ()
    note: str = ""

    def rows(self, values: dict) -> list:
        return case_rows(self.family, self.s, values)


def case_rows(family: str, s: int, v: dict) -> list:
    h = NABLA_COUNT[family]
    if "rows" in v:
        return [[F(x) for x in r] for r in v["rows"]]
    out = []
    for key in "abc"[:s]:
        out.append([F(v.get(f"{key}{i}", 0)) for i in range(1, h + 1)])
    return out


def pt(a=(), b=(), c=(), rows=None) -> dict:
    if rows is not None:
        return {"rows": rows}
    out = {}
    for key, vals in (("a", a), ("b", b), ("c", c)):
        for i, x in enumerate(vals, 1):
            out[f"{key}{i}"] = F(x)
    return out


def check_condition(cond: str, v: dict) -> bool:
    for op in ("!=", "="):
        if op in cond:
            lhs, rhs = (side.strip() for side in cond.split(op))
            lv = v.get(lhs, F(0)) if not _is_num(lhs) else F(lhs)
            rv = v.get(rhs, F(0)) if not _is_num(rhs) else F(rhs)
            return (lv != rv) if op == "!=" else (lv == rv)
    raise OrbitError(f"cannot parse condition {cond!r}")


def _is_num(s: str) -> bool:
    try:
        F(s)
        return True
    except ValueError:
        return False


def _undefined(name):
    def sub(v, n):
        raise OrbitError(f"the displayed choice uses {name}, which is not defined in this case")
    return sub


CASES: list = []


def case(*args, **kw):
    CASES.append(OrbitCase(*args, **kw))


# μ0: the only class
case("mu0", 1, "1dim", ("a1!=0",), lambda n: [pt(a=(1,)), pt(a=(2 ** (n + 1),))],
     (("", "n1"),), substitution=lambda v, n: {"x": 1 / root(v["a1"], n + 1)})

# ---------------------------------------------------------------------------
# μ1,1, one-dimensional

K = "mu1_1"
case(K, 1, "1dim/a/1", ("a1=0", "a4=0", "a2=0", "a3!=0"),
     lambda n: [pt(a=(0, 0, 1, 0)), pt(a=(0, 0, 2, 0))], (("", "n3"),),
     substitution=lambda v, n: {"x": 1 / v["a3"], "y": 1})
case(K, 1, "1dim/a/2", ("a1=0", "a4=0", "a2!=0"),
     lambda n: [pt(a=(0, 1, 2, 0)), pt(a=(0, 2, -1, 0))], (("", "n2+t*n3"),),
     substitution=lambda v, n: {"x": 1 / v["a2"], "y": 1}, t_value=lambda v, n: v["a3"] / v["a2"])
case(K, 1, "1dim/a/3", ("a1=0", "a4!=0", "a2=a3"),
     lambda n: [pt(a=(0, 1, 1, 1)), pt(a=(0, 2, 2, 4))], (("", "n4"),),
     substitution=lambda v, n: {"y": 1 / root(v["a4"], 2), "w": -v["a2"] / v["a4"], "x": 1})
case(K, 1, "1dim/a/4", ("a1=0", "a4!=0", "a2!=a3"),
     lambda n: [pt(a=(0, 1, 2, 1)), pt(a=(0, 3, 1, 4))], (("", "n3+n4"),),
     substitution=lambda v, n: {"x": root(v["a4"], 2) / (v["a2"] - v["a3"]), "y": 1 / root(v["a4"], 2),
                                "w": v["a3"] / (root(v["a4"], 2) * (v["a3"] - v["a2"]))})
case(K, 1, "1dim/b/1", ("a1!=0", "a4=0", "a2=a3"),
     lambda n: [pt(a=(1, 2, 2, 0)), pt(a=(2 ** n, 1, 1, 0))], (("", "n1"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n), "y": 1, "z": -v["a2"] / v["a1"]})
case(K, 1, "1dim/b/2", ("a1!=0", "a4=0", "a2!=a3"),
     lambda n: [pt(a=(1, 0, 1, 0)), pt(a=(2 ** n, 1, 3, 0))], (("", "n1+n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n), "y": root(v["a1"], n) / (v["a3"] - v["a2"]),
                                "z": -v["a2"] / v["a1"]})
case(K, 1, "1dim/b/3", ("a1!=0", "a4!=0", "a2=a3"),
     lambda n: [pt(a=(1, 1, 1, 1)), pt(a=(2 ** n, 2, 2, 4))], (("", "n1+n4"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n), "y": 1 / root(v["a4"], 2),
                                "z": -v["a3"] / (v["a1"] * root(v["a4"], 2)), "w": 0})


def _b4(v, n):
    r = root((v["a3"] - v["a2"]) ** 2 / (v["a1"] * v["a4"]), n - 2)
    return {"x": r, "y": (v["a3"] - v["a2"]) / v["a4"] * r,
            "z": -v["a2"] * (v["a3"] - v["a2"]) / (v["a1"] * v["a4"]) * r, "w": 0}


case(K, 1, "1dim/b/4", ("a1!=0", "a4!=0", "a2!=a3"),
     lambda n: [pt(a=(1, 0, 1, 1)), pt(a=(F(2) ** (4 - n), 0, 2, 1))], (("", "n1+n3+n4"),),
     substitution=_b4, note="the representative carries a scalar prefactor; compared projectively")

# ---------------------------------------------------------------------------
# μ1,1, two-dimensional

case(K, 2, "2dim/a/1", ("a4!=0", "a1=0", "b1!=0", "a2=a3", "b2=b3"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(1, 2, 2)), pt(a=(0, 0, 0, 4), b=(2 ** n, 1, 1))], (("", "n1, n4"),),
     substitution=lambda v, n: {"x": 1 / root(v["b1"], n), "y": 1 / root(v["a4"], 2),
                                "z": -v["b2"] / (v["b1"] * root(v["a4"], 2)),
                                "w": -v["a2"] / (v["a4"] * root(v["b1"], n))})
case(K, 2, "2dim/a/2", ("a4!=0", "a1=0", "b1=0", "a2=a3", "b2=b3", "b2!=0"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(0, 1, 1)), pt(a=(0, 2, 2, 3), b=(0, -1, -1))],
     (("", "n2+n3, n4"),), substitution=lambda v, n: {})
case(K, 2, "2dim/a/3", ("a4!=0", "a1=0", "b1!=0", "a2!=a3", "b2=b3"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(1, 0, 0)), pt(a=(0, 1, 3, 2), b=(2, 1, 1))], (("", "n1, n3+n4"),),
     substitution=_undefined("β4"))
case(K, 2, "2dim/a/4", ("a4!=0", "a1=0", "b1=0", "a2!=a3", "b2=b3", "b2!=0"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(0, 1, 1)), pt(a=(0, 2, 1, 3), b=(0, 2, 2))],
     (("", "n2+n3, n3+n4"),),
     substitution=lambda v, n: {"x": 1, "y": (v["a3"] - v["a2"]) / v["a4"], "w": -v["a2"] / v["a4"]})
case(K, 2, "2dim/a/5", ("a4!=0", "a1=0", "b1=0", "a2=a3", "b2=0", "b3!=0"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(0, 0, 1)), pt(a=(0, 2, 2, 4), b=(0, 0, 3))], (("", "n3, n4"),),
     substitution=lambda v, n: {"x": 1, "y": 1 / root(v["a4"], 2), "w": -v["a2"] / v["a4"]})
case(K, 2, "2dim/a/6", ("a4!=0", "a1=0", "b1=0", "a2=a3", "b2!=0", "b2!=b3"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(0, 1, 2)), pt(a=(0, 2, 2, 3), b=(0, 2, 0))],
     (("", "n2+t*n3, n4"),), substitution=lambda v, n: {"x": 1, "w": -v["a2"] / v["a4"]},
     t_value=lambda v, n: v["b3"] / v["b2"], excluded=(F(1),))
case(K, 2, "2dim/a/7", ("a4!=0", "a1=0", "b1!=0", "a2=a3", "b2!=b3"),
     lambda n: [pt(a=(0, 0, 0, 1), b=(1, 1, 0)), pt(a=(0, 1, 1, 2), b=(2, 3, 1))],
     (("", "n1+n2, n4"),),
     substitution=lambda v, n: {"x": 1, "y": v["b1"] / (v["b2"] - v["b3"]), "z": -v["b3"] / v["b1"],
                                "w": -v["a2"] / v["a4"]})
case(K, 2, "2dim/a/8", ("a4!=0", "a1=0", "b1=0", "a2!=a3", "b2!=b3"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(0, 1, 0)), pt(a=(0, 1, 2, 1), b=(0, 2, 1))],
     (("as (a.5)", "n3, n4"), ("as (a.6)", "n2+t*n3, n4")), excluded=(F(1),))


def _a9(v, n):
    x = root((v["b2"] - v["b3"]) * (v["a3"] - v["a2"]) / (v["a4"] * v["b1"]), n - 2)
    return {"x": x, "y": (v["a3"] - v["a2"]) / v["a4"] * x,
            "z": -v["b3"] * (v["a3"] - v["a2"]) / (v["b1"] * v["a4"]) * x, "w": -v["a4"] / v["a2"] * x}


case(K, 2, "2dim/a/9", ("a4!=0", "a1=0", "b1!=0", "a2!=a3", "b2!=b3"),
     lambda n: [pt(a=(0, 1, 2, 1), b=(1, 1, 0)), pt(a=(0, 2, 3, 1), b=(1, 3, 2))],
     (("", "n1+n2, n3+n4"),), substitution=_a9)
case(K, 2, "2dim/a/10", ("a4!=0", "a1!=0", "b1=0", "a2=a3", "b2=0", "b3!=0"),
     lambda n: [pt(a=(1, 1, 1, 1), b=(0, 0, 1)), pt(a=(2 ** n, 1, 1, 4), b=(0, 0, 2))],
     (("", "n1+n4, n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n), "y": 1 / root(v["a4"], 2),
                                "z": -v["a2"] / (v["a4"] * root(v["a4"], 2)), "w": 0})
case(K, 2, "2dim/a/11", ("a4!=0", "a1!=0", "b1=0", "a2=a3", "b2!=0"),
     lambda n: [pt(a=(1, 1, 1, 1), b=(0, 1, 2)), pt(a=(2 ** n, 0, 0, 4), b=(0, 2, 2))],
     (("", "n1+n4, n2+t*n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n), "y": 1 / root(v["a4"], 2),
                                "z": -v["a2"] / (v["a4"] * root(v["a4"], 2)), "w": 0},
     t_value=lambda v, n: v["b3"] / v["b2"])


def _a12(v, n):
    # the displayed radicand divides by (α_n)^2; α_4 is used, as in the next line
    x = root((v["a2"] - v["a3"]) ** 2 / v["a4"] ** 2, n - 2)
    return {"x": x, "y": (v["a2"] - v["a3"]) / v["a4"] * x, "z": 0, "w": -v["a3"] / v["a4"] * x}


case(K, 2, "2dim/a/12", ("a4!=0", "a1!=0", "b1=0", "a2!=a3", "b2=b3", "b2!=0"),
     lambda n: [pt(a=(1, 2, 1, 1), b=(0, 1, 1)), pt(a=(2, 3, 1, 2), b=(0, 1, 1)),
                pt(a=(1, 3, 1, 4), b=(0, 1, 1))],
     (("", "n1+n2+n4, n2+n3"),), substitution=_a12,
     note="radicand read with α4 in place of the displayed α_n")
case(K, 2, "2dim/a/13", ("a4!=0", "a1!=0", "b1=0", "a2!=a3", "b2!=b3"),
     lambda n: [pt(a=(1, 0, 1, 1), b=(0, 1, 0)), pt(a=(1, 2, 1, 1), b=(0, 1, 3))],
     (("as (a.1)", "n1, n4"), ("as (a.11)", "n1+n4, n2+t*n3")))
case(K, 2, "2dim/b/1", ("a4=0", "b3=0", "a1!=0", "b1=0", "a2=a3"),
     lambda n: [pt(a=(1, 1, 1, 0), b=(0, 1, 0)), pt(a=(2, 0, 0, 0), b=(0, 3, 0))],
     (("", "n1, n3"), ("", "n1, n2+t*n3")))
case(K, 2, "2dim/b/2", ("a4=0", "b3=0", "a1!=0", "b1=0", "a2!=a3", "b2!=b3"),
     lambda n: [pt(a=(1, 1, 0, 0), b=(0, 1, 0)), pt(a=(1, 0, 2, 0), b=(0, 2, 0))],
     (("as (b.1)", "n1, n3"), ("as (b.1)", "n1, n2+t*n3")))
case(K, 2, "2dim/b/3", ("a4=0", "a1!=0", "b1=0", "a2!=a3", "b2=b3", "b2!=0"),
     lambda n: [pt(a=(1, 1, 0, 0), b=(0, 1, 1)), pt(a=(2, 3, 1, 0), b=(0, 2, 2))],
     (("", "n1+n2, n2+n3"),),
     note="with β3 = 0 from the case header, β2 = β3 forces θ2 = 0; the header condition β3 = 0 is dropped")
case(K, 2, "2dim/b/4", ("a4=0", "b3=0", "a1=0", "b1=0"),
     lambda n: [pt(a=(0, 0, 1, 0), b=(0, 1, 0)), pt(a=(0, 2, 3, 0), b=(0, 1, 0))],
     (("", "n2, n3"),))
case(K, 2, "2dim/b/5", ("a4=0", "b3=0", "a3=0"),
     lambda n: [pt(a=(1, 2, 0, 0), b=(0, 1, 0)), pt(a=(2, 1, 0, 0), b=(1, 3, 0))],
     (("as (b.1)", "n1, n3"), ("as (b.1)", "n1, n2+t*n3")))

# ---------------------------------------------------------------------------
# μ1,1, three- and four-dimensional

A1 = ("", "n1+n2, t*n2+n3, n3+n4")
A3 = ("", "n1+n2, n2+n3, n4")
A4 = ("", "n1+n3, n2, n4")
A6 = ("", "n1+n4, n2, n3")
B2 = ("", "n1, n2+n3, n3+n4")
B3 = ("", "n1, n2+n3, n4")
case(K, 3, "3dim/a/1", ("a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2!=a3"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(0, 0, 1), c=(1, 1)), pt(a=(0, 1, 2, 1), b=(0, 1, 2), c=(2, 1))], (A1,))
case(K, 3, "3dim/a/2", ("a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2!=b3"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(0, 0, 1), c=(1, 1)), pt(a=(0, 0, 0, 2), b=(0, 1, 2), c=(1, 2))],
     (("as (a.1)",) + A1[1:],))
case(K, 3, "3dim/a/3", ("a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2=b3"),
     lambda n: [pt(a=(0, 1, 1, 1), b=(0, 1, 1), c=(1, 1)), pt(a=(0, 0, 0, 1), b=(0, 2, 2), c=(3, 1))], (A3,))
case(K, 3, "3dim/a/4", ("a4!=0", "b3!=0", "c2!=0", "a1=0", "b1!=0", "c1=0", "a2=a3"),
     lambda n: [pt(a=(0, 0, 0, 1), b=(1, 0, 1), c=(0, 1)), pt(a=(0, 1, 1, 2), b=(1, 1, 2), c=(0, 3))], (A4,))
case(K, 3, "3dim/a/5", ("a4!=0", "b3!=0", "c2!=0", "a1=0", "b1!=0", "c1=0", "a2!=a3"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(1, 0, 1), c=(0, 1)), pt(a=(0, 2, 1, 1), b=(2, 1, 3), c=(0, 1))],
     (("as (a.4)",) + A4[1:],))
case(K, 3, "3dim/a/6", ("a4!=0", "b3!=0", "c2!=0", "a1!=0", "b1=0", "c1=0"),
     lambda n: [pt(a=(1, 0, 0, 1), b=(0, 0, 1), c=(0, 1)), pt(a=(1, 1, 3, 1), b=(0, 1, 1), c=(0, 2))], (A6,))
case(K, 3, "3dim/b/1", ("a4!=0", "b3!=0", "c2=0", "b2!=b3"),
     lambda n: [pt(a=(0, 0, 0, 1), b=(0, 1, 2), c=(1, 0)), pt(a=(1, 0, 0, 1), b=(0, 0, 1), c=(1, 0))],
     (("as (a)",) + A1[1:], ("as (a)",) + A3[1:], ("as (a)",) + A4[1:], ("as (a)",) + A6[1:]))
case(K, 3, "3dim/b/2", ("a4!=0", "b3!=0", "c2=0", "a1=0", "b1=0", "c1!=0", "a2!=a3", "b2=b3"),
     lambda n: [pt(a=(0, 0, 1, 1), b=(0, 1, 1), c=(1, 0)), pt(a=(0, 2, 1, 1), b=(0, 3, 3), c=(2, 0))], (B2,))
case(K, 3, "3dim/b/3", ("a4!=0", "b3!=0", "c2=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2=b3"),
     lambda n: [pt(a=(0, 0, 0, 1), b=(0, 1, 1), c=(1, 0)), pt(a=(0, 1, 1, 2), b=(0, 2, 2), c=(1, 0))], (B3,))
case(K, 3, "3dim/c/1", ("a4!=0", "b3=0", "c2=0"),
     lambda n: [pt(a=(0, 0, 0, 1), b=(0, 1, 0), c=(1, 0)), pt(a=(0, 1, 2, 1), b=(1, 1, 0), c=(1, 0))],
     tuple(("as (a) or (b)",) + e[1:] for e in (A1, A3, A4, A6, B2, B3)))
case(K, 3, "3dim/d", ("a4=0", "b3=0", "c2=0"),
     lambda n: [pt(a=(0, 0, 1, 0), b=(0, 1, 0), c=(1, 0)), pt(a=(1, 1, 1, 0), b=(1, 2, 0), c=(3, 0))],
     (("", "n1, n2, n3"),))
case(K, 4, "4dim", (),
     lambda n: [pt(rows=[(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
                pt(rows=[(1, 2, 0, 1), (0, 1, 3, 0), (1, 0, 1, 1), (0, 0, 2, 5)])],
     (("", "n1, n2, n3, n4"),))

# ---------------------------------------------------------------------------
# μ1,2 (odd n)

K = "mu1_2"
case(K, 1, "1dim/a/1", ("a3=0", "a1=0", "a2!=0"),
     lambda n: [pt(a=(0, 1, 0)), pt(a=(0, 2 ** ((n + 1) // 2), 0))], (("", "n2"),),
     substitution=lambda v, n: {"x": 1 / root(v["a2"] ** 2, n + 1)})
case(K, 1, "1dim/a/2", ("a3=0", "a1!=0"),
     lambda n: [pt(a=(1, 2, 0)), pt(a=(2 ** ((n + 1) // 2), 1, 0))], (("", "n1+t*n2"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"] ** 2, n + 1)}, t_value=lambda v, n: v["a2"] / v["a1"])
case(K, 1, "1dim/b/1", ("a3!=0", "a1=a2"),
     lambda n: [pt(a=(1, 1, 1)), pt(a=(1, 1, 2 ** (n - 1)))], (("", "n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["a3"], n - 1), "z": -v["a1"] / root(v["a3"] ** n, n - 1)})
case(K, 1, "1dim/b/2", ("a3!=0", "a1!=a2"),
     lambda n: [pt(a=(1, 0, 1)), pt(a=(2, 1, 1))], (("", "n1+n3"),),
     substitution=lambda v, n: {"x": root((v["a1"] - v["a2"]) ** 2 / v["a3"] ** 2, n - 3),
                                "z": -v["a2"] * root((v["a1"] - v["a2"]) ** 2 / v["a3"] ** (n - 1), n - 3)})
case(K, 2, "2dim/a/1", ("a3!=0", "a1=a2", "b1!=0"),
     lambda n: [pt(a=(1, 1, 1), b=(1, 2)), pt(a=(0, 0, 3), b=(2 ** ((n + 1) // 2), 1))],
     (("", "n1+t*n2, n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["b1"] ** 2, n + 1),
                                "z": -v["a1"] / (v["a3"] * root(v["b1"] ** 2, n + 1))},
     t_value=lambda v, n: v["b2"] / v["b1"])
case(K, 2, "2dim/a/2", ("a3!=0", "a1=a2", "b1=0", "b2!=0"),
     lambda n: [pt(a=(1, 1, 1), b=(0, 1)), pt(a=(2, 2, 1), b=(0, 2 ** ((n + 1) // 2)))],
     (("", "n2, n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["b2"] ** 2, n + 1),
                                "z": -v["a1"] / (v["a3"] * root(v["b2"] ** 2, n + 1))})
case(K, 2, "2dim/a/3", ("a3!=0", "a1!=a2", "b1!=0", "b1!=b2"),
     lambda n: [pt(a=(1, 0, 1), b=(1, 0)), pt(a=(2, 1, 1), b=(1, 3))], (("as (a.1)", "n1+t*n2, n3"),))
case(K, 2, "2dim/a/4", ("a3!=0", "a1!=a2", "b1!=0", "b1=b2"),
     lambda n: [pt(a=(0, 1, 1), b=(1, 1)), pt(a=(1, 2, 1), b=(2, 2))], (("", "n1+n2, n2+n3"),),
     substitution=lambda v, n: {"x": root((v["a2"] - v["a1"]) ** 2 / v["a3"] ** 2, n - 3),
                                "z": -v["a1"] * root((v["a2"] - v["a1"]) ** 2 / v["a3"] ** (n - 1), n - 3)})
case(K, 2, "2dim/a/5", ("a3!=0", "a1!=a2", "b1=0", "b2!=0"),
     lambda n: [pt(a=(1, 0, 1), b=(0, 1)), pt(a=(3, 1, 2), b=(0, 1))], (("as (a.2)", "n2, n3"),))
case(K, 2, "2dim/b", ("a3=0",),
     lambda n: [pt(a=(1, 0, 0), b=(0, 1)), pt(a=(1, 2, 0), b=(3, 1))], (("", "n1, n2"),))
case(K, 3, "3dim", (),
     lambda n: [pt(rows=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]), pt(rows=[(1, 1, 0), (0, 2, 1), (3, 0, 1)])],
     (("", "n1, n2, n3"),))

# ---------------------------------------------------------------------------
# μ1,3

K = "mu1_3"
case(K, 1, "1dim/a/1", ("a3=0", "a1=0", "a2!=0"),
     lambda n: [pt(a=(0, 1, 0)), pt(a=(0, 2 ** (n - 1), 0))], (("", "n2"),),
     substitution=lambda v, n: {"x": 1 / root(v["a2"], n - 1)})
case(K, 1, "1dim/a/2", ("a3=0", "a1!=0"),
     lambda n: [pt(a=(1, 2, 0)), pt(a=(2 ** (n - 1), 1, 0))], (("", "n1+t*n2"),),
     substitution=lambda v, n: {"x": 1 / root(v["a1"], n - 1)}, t_value=lambda v, n: v["a2"] / v["a1"])
case(K, 1, "1dim/b/1", ("a3!=0", "a1=a2"),
     lambda n: [pt(a=(1, 1, 1)), pt(a=(1, 1, 2 ** (2 * n - 4)))], (("", "n3"),),
     substitution=lambda v, n: {"x": 1 / root(v["a3"], 2 * n - 4),
                                "z": -v["a1"] / root(v["a3"] ** (n - 1), n - 2)})
case(K, 1, "1dim/b/2", ("a3!=0", "a1!=a2"),
     lambda n: [pt(a=(1, 0, 1)), pt(a=(3, 1, 2))], (("", "n1+n3"),),
     substitution=lambda v, n: {"x": root((v["a1"] - v["a2"]) / v["a3"], n - 3),
                                "z": -v["a2"] * root((v["a1"] - v["a2"]) / v["a3"] ** (n - 2), n - 3)})
case(K, 2, "2dim/a/1", ("a3!=0", "a1=a2", "b1!=0"),
     lambda n: [pt(a=(1, 1, 1), b=(1, 2)), pt(a=(0, 0, 2), b=(3, 1))], (("", "n1+t*n2, n3"),))
case(K, 2, "2dim/a/2", ("a3!=0", "a1=a2", "b1=0", "b2!=0"),
     lambda n: [pt(a=(1, 1, 1), b=(0, 1)), pt(a=(2, 2, 3), b=(0, 5))], (("", "n2, n3"),))
case(K, 2, "2dim/a/3", ("a3!=0", "a1!=a2", "b1!=0", "b1!=b2"),
     lambda n: [pt(a=(1, 0, 1), b=(1, 0)), pt(a=(2, 1, 3), b=(1, 2))], (("as (a.1)", "n1+t*n2, n3"),))
case(K, 2, "2dim/a/4", ("a3!=0", "a1!=a2", "b1!=0", "b1=b2"),
     lambda n: [pt(a=(0, 1, 1), b=(1, 1)), pt(a=(1, 3, 2), b=(2, 2))],
     (("case text", "n1+n2, n2+n3"), ("theorem list", "n1+n2, n1+n3")),
     note="the case derives ⟨∇1+∇2, ∇2+∇3⟩ while the list shows ⟨∇1+∇2, ∇1+∇3⟩")
case(K, 2, "2dim/a/5", ("a3!=0", "a1!=a2", "b1=0", "b2!=0"),
     lambda n: [pt(a=(1, 0, 1), b=(0, 1)), pt(a=(3, 1, 2), b=(0, 2))], (("as (a.2)", "n2, n3"),))
case(K, 2, "2dim/b", ("a3=0",),
     lambda n: [pt(a=(1, 0, 0), b=(0, 1)), pt(a=(1, 2, 0), b=(3, 1))], (("", "n1, n2"),))
case(K, 3, "3dim", (),
     lambda n: [pt(rows=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]), pt(rows=[(1, 1, 0), (0, 2, 1), (3, 0, 1)])],
     (("", "n1, n2, n3"),))

# ---------------------------------------------------------------------------
# μ1,4

K = "mu1_4"
case(K, 1, "1dim/a/1", ("a3=0", "a1=0", "a2!=0"),
     lambda n: [pt(a=(0, 1, 0)), pt(a=(0, 3, 0))], (("", "n2"),))
case(K, 1, "1dim/a/2", ("a3=0", "a1!=0"),
     lambda n: [pt(a=(1, 2, 0)), pt(a=(2, 0, 0))], (("", "n1+t*n2"),))
case(K, 1, "1dim/b", ("a3!=0",),
     lambda n: [pt(a=(2, 0, 1)), pt(a=(1, 3, 2))], (("", "t*n1+n3"),))
case(K, 2, "2dim/a", ("a3!=0", "b1!=0", "a1!=a2", "b1=b2"),
     lambda n: [pt(a=(2, 1, 1), b=(1, 1)), pt(a=(3, 0, 1), b=(2, 2))], (("", "n1+n2, t*n1+n3"),),
     substitution=lambda v, n: {"z": -v["a2"] / v["a3"]},
     t_value=lambda v, n: (v["a1"] - v["a2"]) / v["a3"], excluded=(F(0),))
case(K, 2, "2dim/b", ("a3!=0", "b1!=0", "b1!=b2"),
     lambda n: [pt(a=(0, 0, 1), b=(1, 2)), pt(a=(1, 2, 3), b=(2, 1))], (("", "n1+t*n2, n3"),),
     substitution=lambda v, n: {"z": (v["a1"] * v["b2"] - v["a2"] * v["b1"]) / ((v["b1"] - v["b2"]) * v["a3"])},
     t_value=lambda v, n: v["b2"] / v["b1"])
case(K, 2, "2dim/d", ("a3!=0", "b1=0", "b2!=0"),
     lambda n: [pt(a=(1, 0, 1), b=(0, 1)), pt(a=(2, 3, 5), b=(0, 2))], (("", "n2, n3"),))
case(K, 2, "2dim/e", ("a3=0",),
     lambda n: [pt(a=(1, 0, 0), b=(0, 1)), pt(a=(1, 2, 0), b=(3, 1))], (("", "n1, n2"),))
case(K, 3, "3dim", (),
     lambda n: [pt(rows=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]), pt(rows=[(1, 1, 0), (0, 2, 1), (3, 0, 1)])],
     (("", "n1, n2, n3"),))


def cases_for(family: str, s: int | None = None) -> list:
    return [c for c in CASES if c.family == family and (s is None or c.s == s)]


# ---------------------------------------------------------------------------
# listed orbit representatives and the algebras named for them
#
# A named algebra is (family, rule) where rule is None for unparametrised
# families, "any" for an arbitrary α, "ne1" for α ≠ 1, or a fixed value.

T_LISTS = {
    ("mu0", 1): ("n1",),
    ("mu1_1", 1): ("n1", "n1+n3", "n1+n3+n4", "n1+n4", "n2+t*n3", "n3", "n3+n4", "n4"),
    ("mu1_1", 2): ("n1, n2+t*n3", "n1, n3", "n1, n3+n4", "n1, n4", "n1+n2, n2+n3", "n1+n2, n3+n4",
                   "n1+n2, n4", "n1+n2+n4, n2+n3", "n1+n4, n2+t*n3", "n1+n4, n3", "n2, n3",
                   "n2+n3, n3+n4", "n2+t*n3, n4", "n3, n4"),
    ("mu1_1", 3): ("n1, n2, n3", "n1, n2+n3, n4", "n1, n2+n3, n3+n4", "n1+n2, n2+n3, n4",
                   "n1+n2, t*n2+n3, n3+n4", "n1+n3, n2, n4", "n1+n4, n2, n3"),
    ("mu1_1", 4): ("n1, n2, n3, n4",),
    ("mu1_2", 1): ("n1+t*n2", "n1+n3", "n2", "n3"),
    ("mu1_2", 2): ("n1, n2", "n1+n2, n2+n3", "n1+t*n2, n3", "n2, n3"),
    ("mu1_2", 3): ("n1, n2, n3",),
    ("mu1_3", 1): ("n1+t*n2", "n1+n3", "n2", "n3"),
    ("mu1_3", 2): ("n1, n2", "n1+n2, n1+n3", "n1+t*n2, n3", "n2, n3"),
    ("mu1_3", 3): ("n1, n2, n3",),
    ("mu1_4", 1): ("n1+t*n2", "t*n1+n3", "n2"),
    ("mu1_4", 2): ("n1, n2", "n1+t*n2, n3", "n1+n2, t*n1+n3", "n2, n3"),
    ("mu1_4", 3): ("n1, n2, n3",),
}

# parameter values left out of a listed entry
T_EXCLUDED = {("mu1_4", 2, "n1+n2, t*n1+n3"): (F(0),)}


def _names(*items):
    return tuple(item if isinstance(item, tuple) else (item, None) for item in items)


THEOREM_NAMES = {
    ("mu0", 1): _names("mu0"),
    ("mu1_1", 1): _names("mu1_1", "mu1_2", "mu1_3", "mu1_4", "mu2_1", ("mu2_2", "any"), "mu2_3", "mu2_4"),
    ("mu1_1", 2): _names("mu2_1", ("mu2_2", "any"), "mu2_3", "mu2_4", "mu2_5", "mu2_6", "mu2_7", "mu2_8",
                         ("mu2_9", "any"), "mu2_10", "mu3_1", "mu3_2", ("mu3_3", "any"), "mu3_4"),
    ("mu1_1", 3): _names("mu3_1", "mu3_2", ("mu3_3", "any"), "mu3_4", "mu3_5", "mu3_6", "mu3_7"),
    ("mu1_1", 4): _names("mu4_1"),
    ("mu1_2", 1): _names("mu2_3", "mu2_6", ("mu2_9", "any"), "mu2_10"),
    ("mu1_2", 2): _names(("mu3_3", "any"), "mu3_4", "mu3_6", "mu3_7"),
    ("mu1_2", 3): _names("mu4_2"),
    ("mu1_3", 1): _names("mu2_1", ("mu2_2", "ne1"), "mu2_5", "mu2_6", "mu2_7"),
    ("mu1_3", 2): _names("mu3_1", ("mu3_3", "ne1"), "mu3_4", "mu3_5", "mu3_6"),
    ("mu1_3", 3): _names("mu4_3"),
    ("mu1_4", 1): _names(("mu2_2", F(1)), "mu2_7", "mu2_8", ("mu2_9", "ne1"), "mu2_10"),
    ("mu1_4", 2): _names("mu3_2", ("mu3_3", "ne1"), "mu3_4", "mu3_5", "mu3_6", "mu3_7"),
    ("mu1_4", 3): _names("mu4_4"),
}


def rule_allows(rule, alpha) -> bool:
    if rule is None or rule == "any":
        return True
    if rule == "ne1":
        return alpha != 1
    return alpha == rule


def rule_text(rule) -> str:
    """Suffix describing the parameter range, e.g. "(α), α≠1"."""
    if rule is None:
        return ""
    if rule == "any":
        return "(α)"
    if rule == "ne1":
        return "(α), α≠1"
    return f"({rule})"

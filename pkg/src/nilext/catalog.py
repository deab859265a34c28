"""Built-in catalog of one-generated nilpotent bicommutative algebras,
dimensions 2 through 6.

Each entry records the multiplication table (possibly parametric in lambda,
mu), and where applicable:

* a distinguished basis of H^2 written in the D(i,j) syntax (`h2_basis`);
* the parametrized automorphism matrix family (`aut`) and the induced
  coordinate action on H^2 (`h2_action`, formulas in a1..a3 and the
  automorphism parameters);
* construction provenance (`provenance`): the parent entry, its parameter
  bindings, and the defining cocycles, either as coefficient rows over the
  parent's `h2_basis` or as explicit D(i,j) forms.

Reconstruction from provenance is bit-exact: the central extension of the
instantiated parent by the instantiated cocycles equals the entry's own
table in the same basis order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import exprs
from .algebra import Algebra
from .bilinear import BilinearForm, parse_form
from .extensions import ExtensionSpec, central_extension
from .fields import Field, QQ
from .fileformat import ParametricTable, parse_product_line
from .morphisms import AutFamily


class CatalogError(KeyError):
    pass


class ConstraintViolation(ValueError):
    pass


@dataclass(frozen=True)
class Provenance:
    parent: str
    parent_bindings: tuple  # ((param, expr_text), ...)
    kind: str  # "h2": rows over the parent's h2_basis; "delta": explicit forms
    cocycles: tuple

    @property
    def s(self):
        return len(self.cocycles)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    table: tuple
    params: tuple = ()
    nonzero: tuple = ()  # parameters that must not vanish
    h2_basis: tuple | None = None
    h2_action: tuple | None = None
    aut: AutFamily | None = None
    special_bindings: tuple | None = None  # bindings under which h2/aut data hold
    provenance: Provenance | None = None


def _aut(parent, params, rows, nonzero=()):
    return AutFamily(parent, tuple(params), tuple(tuple(r) for r in rows), tuple(nonzero))


_ENTRIES = [
    # ---- dimension 2 ----------------------------------------------------------
    CatalogEntry(
        name="B2_01",
        dim=2,
        table=("e1 e1 = e2",),
        h2_basis=("D(1,2)", "D(2,1)"),
    ),
    # ---- dimension 3 ----------------------------------------------------------
    CatalogEntry(
        name="B3_01",
        dim=3,
        table=("e1 e1 = e2", "e2 e1 = e3"),
        provenance=Provenance("B2_01", (), "delta", ("D(2,1)",)),
    ),
    CatalogEntry(
        name="B3_02",
        dim=3,
        params=("lambda",),
        table=("e1 e1 = e2", "e1 e2 = e3", "e2 e1 = lambda e3"),
        provenance=Provenance("B2_01", (), "delta", ("D(1,2) + lambda*D(2,1)",)),
    ),
    # ---- dimension 4 ----------------------------------------------------------
    CatalogEntry(
        name="B4_01",
        dim=4,
        table=("e1 e1 = e2", "e1 e2 = e4", "e2 e1 = e3"),
        h2_basis=("D(1,4)", "D(3,1)", "D(1,3) + D(4,1) + D(2,2)"),
        h2_action=("x^4*a1", "x^4*a2", "x^4*a3"),
        aut=_aut(
            "B4_01",
            ("x", "y", "z", "t"),
            (
                ("x", "0", "0", "0"),
                ("y", "x^2", "0", "0"),
                ("z", "x*y", "x^3", "0"),
                ("t", "x*y", "0", "x^3"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance("B2_01", (), "delta", ("D(2,1)", "D(1,2)")),
    ),
    CatalogEntry(
        name="B4_02",
        dim=4,
        table=("e1 e1 = e2", "e1 e2 = e4", "e2 e1 = e3", "e3 e1 = e4"),
        h2_basis=("D(3,1)", "D(1,3) + D(2,2) + D(4,1)"),
        h2_action=("a1 - x*a2", "a2"),
        aut=_aut(
            "B4_02",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0"),
                ("x", "1", "0", "0"),
                ("y", "x", "1", "0"),
                ("z", "x+y", "x", "1"),
            ),
        ),
        provenance=Provenance("B3_01", (), "delta", ("D(1,2) + D(3,1)",)),
    ),
    CatalogEntry(
        name="B4_03",
        dim=4,
        table=("e1 e1 = e2", "e2 e1 = e3", "e3 e1 = e4"),
        h2_basis=("D(1,2)", "D(4,1)"),
        h2_action=("x^3*a1", "x^5*a2"),
        aut=_aut(
            "B4_03",
            ("x", "y", "z", "t"),
            (
                ("x", "0", "0", "0"),
                ("y", "x^2", "0", "0"),
                ("z", "x*y", "x^3", "0"),
                ("t", "x*z", "x^2*y", "x^4"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance("B3_01", (), "delta", ("D(3,1)",)),
    ),
    CatalogEntry(
        name="B4_04",
        dim=4,
        table=("e1 e1 = e2", "e1 e2 = e3", "e1 e3 = e4", "e2 e1 = e4"),
        h2_basis=("D(2,1)", "D(1,4) + D(2,2) + D(3,1)"),
        h2_action=("a1 + x*a2", "a2"),
        aut=_aut(
            "B4_04",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0"),
                ("x", "1", "0", "0"),
                ("y", "x", "1", "0"),
                ("z", "x+y", "x", "1"),
            ),
        ),
        provenance=Provenance(
            "B3_02", (("lambda", "0"),), "delta", ("D(1,3) + D(2,1)",)
        ),
    ),
    CatalogEntry(
        name="B4_05",
        dim=4,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e2 e1 = e3 + e4",
            "e2 e2 = e4",
            "e3 e1 = e4",
        ),
        h2_basis=(
            "D(2,1)",
            "D(1,4) + D(2,2) + D(2,3) + D(3,1) + D(3,2) + D(4,1)",
        ),
        h2_action=("a1 - 2*x*a2", "a2"),
        aut=_aut(
            "B4_05",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0"),
                ("x", "1", "0", "0"),
                ("y", "2*x", "1", "0"),
                ("z", "x^2+x+2*y", "3*x", "1"),
            ),
        ),
        provenance=Provenance(
            "B3_02",
            (("lambda", "1"),),
            "delta",
            ("D(1,3) + D(2,1) + D(2,2) + D(3,1)",),
        ),
    ),
    CatalogEntry(
        name="B4_06",
        dim=4,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e2 e1 = lambda e3",
            "e2 e2 = lambda e4",
            "e3 e1 = lambda e4",
        ),
        h2_basis=(
            "D(2,1)",
            "D(1,4) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(4,1)",
        ),
        h2_action=("x^3*a1 + (1-lambda)*lambda*x^2*y*a2", "x^5*a2"),
        aut=_aut(
            "B4_06",
            ("x", "y", "z"),
            (
                ("x", "0", "0", "0"),
                ("0", "x^2", "0", "0"),
                ("y", "0", "x^3", "0"),
                ("z", "(1+lambda)*x*y", "0", "x^4"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance(
            "B3_02",
            (("lambda", "lambda"),),
            "delta",
            ("D(1,3) + lambda*D(2,2) + lambda*D(3,1)",),
        ),
    ),
    # ---- dimension 5 ----------------------------------------------------------
    CatalogEntry(
        name="B5_01",
        dim=5,
        table=("e1 e1 = e2", "e1 e2 = e4", "e2 e1 = e3", "e3 e1 = e5"),
        h2_basis=("D(1,4)", "D(5,1)", "D(1,3) + D(2,2) + D(4,1)"),
        h2_action=("x^4*a1", "x^5*a2", "x^4*a3"),
        aut=_aut(
            "B5_01",
            ("x", "y", "z", "t", "s"),
            (
                ("x", "0", "0", "0", "0"),
                ("y", "x^2", "0", "0", "0"),
                ("z", "x*y", "x^3", "0", "0"),
                ("t", "x*y", "0", "x^3", "0"),
                ("s", "x*z", "x^2*y", "0", "x^4"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance("B3_01", (), "delta", ("D(1,2)", "D(3,1)")),
    ),
    CatalogEntry(
        name="B5_02",
        dim=5,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e5",
            "e2 e1 = lambda e3 + e4",
            "e2 e2 = lambda e5",
            "e3 e1 = lambda e5",
        ),
        h2_basis=(
            "D(4,1)",
            "D(1,4) + D(2,2) + D(3,1)",
            "D(1,5) + lambda*D(2,3) + lambda*D(3,2) + lambda*D(5,1)",
        ),
        h2_action=(
            "x^4*a1 + (1-lambda)*lambda^2*x^3*y*a3",
            "x^4*a2 + (1-lambda)*lambda*x^3*y*a3",
            "x^5*a3",
        ),
        aut=_aut(
            "B5_02",
            ("x", "y", "z", "t", "s"),
            (
                ("x", "0", "0", "0", "0"),
                ("y", "x^2", "0", "0", "0"),
                ("z", "(1+lambda)*x*y", "x^3", "0", "0"),
                ("t", "x*y", "0", "x^3", "0"),
                (
                    "s",
                    "lambda*y^2+(1+lambda)*x*z",
                    "(1+2*lambda)*x^2*y",
                    "lambda*(1-lambda)*x^2*y",
                    "x^4",
                ),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance(
            "B3_02",
            (("lambda", "lambda"),),
            "delta",
            ("D(2,1)", "D(1,3) + lambda*D(2,2) + lambda*D(3,1)"),
        ),
    ),
    CatalogEntry(
        name="B5_03",
        dim=5,
        params=("lambda", "mu"),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e1 e4 = lambda e5",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e3 e1 = mu e5",
            "e4 e1 = e5",
        ),
        # the cohomology data below holds on the mu = 1/lambda stratum only
        special_bindings=(("mu", "1/lambda"),),
        h2_basis=(
            "D(1,4)",
            "D(3,1)",
            "lambda*D(1,5) + D(2,3) + lambda*D(2,4) + D(3,2) + lambda*D(4,2) + D(5,1)",
        ),
        h2_action=(
            "x^4*a1 + (1-lambda)*lambda*x^3*y*a3",
            "x^4*a2 + (1-1/lambda)*x^3*y*a3",
            "x^5*a3",
        ),
        aut=_aut(
            "B5_03",
            ("x", "y", "z", "t", "s"),
            (
                ("x", "0", "0", "0", "0"),
                ("y", "x^2", "0", "0", "0"),
                ("z", "x*y", "x^3", "0", "0"),
                ("t", "x*y", "0", "x^3", "0"),
                (
                    "s",
                    "(1+1/lambda)*x*z+(1+lambda)*x*t+y^2",
                    "(2+1/lambda)*x^2*y",
                    "(2+lambda)*x^2*y",
                    "x^4",
                ),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance(
            "B4_01", (), "h2", (("lambda", "mu", "1"),)
        ),
    ),
    CatalogEntry(
        name="B5_04",
        dim=5,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e4 = e5",
            "e2 e1 = e3",
            "e3 e1 = lambda e5",
        ),
        provenance=Provenance("B4_01", (), "h2", (("1", "lambda", "0"),)),
    ),
    CatalogEntry(
        name="B5_05",
        dim=5,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e3 e1 = e4",
            "e4 e1 = e5",
        ),
        h2_basis=("D(3,1)", "D(1,4) + D(2,3) + D(3,2) + D(5,1)"),
        h2_action=("a1 - x*a2", "a2"),
        aut=_aut(
            "B5_05",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0", "0"),
                ("0", "1", "0", "0", "0"),
                ("x", "0", "1", "0", "0"),
                ("y", "x", "0", "1", "0"),
                ("z", "x+y", "x", "0", "1"),
            ),
        ),
        provenance=Provenance("B4_02", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B5_06",
        dim=5,
        table=("e1 e1 = e2", "e1 e2 = e5", "e2 e1 = e3", "e3 e1 = e4", "e4 e1 = e5"),
        h2_basis=("D(4,1)", "D(1,3) + D(2,2) + D(5,1)"),
        h2_action=("a1 - x*a2", "a2"),
        aut=_aut(
            "B5_06",
            ("x", "y", "z", "t"),
            (
                ("1", "0", "0", "0", "0"),
                ("x", "1", "0", "0", "0"),
                ("y", "x", "1", "0", "0"),
                ("z", "y", "x", "1", "0"),
                ("t", "x+z", "y", "x", "1"),
            ),
        ),
        provenance=Provenance("B4_03", (), "h2", (("1", "1"),)),
    ),
    CatalogEntry(
        name="B5_07",
        dim=5,
        table=("e1 e1 = e2", "e2 e1 = e3", "e3 e1 = e4", "e4 e1 = e5"),
        h2_basis=("D(1,2)", "D(5,1)"),
        h2_action=("x^3*a1", "x^6*a2"),
        aut=_aut(
            "B5_07",
            ("x", "y", "z", "t", "s"),
            (
                ("x", "0", "0", "0", "0"),
                ("y", "x^2", "0", "0", "0"),
                ("z", "x*y", "x^3", "0", "0"),
                ("t", "x*z", "x^2*y", "x^4", "0"),
                ("s", "x*t", "x^2*z", "x^3*y", "x^5"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance("B4_03", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B5_08",
        dim=5,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e2 e1 = e4",
            "e2 e2 = e5",
            "e3 e1 = e5",
        ),
        h2_basis=("D(2,1)", "D(1,5) + D(2,3) + D(3,2) + D(4,1)"),
        h2_action=("a1 + x*a2", "a2"),
        aut=_aut(
            "B5_08",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0", "0"),
                ("0", "1", "0", "0", "0"),
                ("x", "0", "1", "0", "0"),
                ("y", "x", "0", "1", "0"),
                ("z", "x+y", "x", "0", "1"),
            ),
        ),
        provenance=Provenance("B4_04", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B5_09",
        dim=5,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e2 e1 = e3 + e4",
            "e2 e2 = e4 + e5",
            "e2 e3 = e5",
            "e3 e1 = e4 + e5",
            "e3 e2 = e5",
            "e4 e1 = e5",
        ),
        h2_basis=(
            "D(2,1)",
            "D(1,5) + D(2,3) + D(2,4) + D(3,2) + D(3,3) + D(4,1) + D(4,2) + D(5,1)",
        ),
        h2_action=("a1 - 2*x*a2", "a2"),
        aut=_aut(
            "B5_09",
            ("x", "y", "z"),
            (
                ("1", "0", "0", "0", "0"),
                ("0", "1", "0", "0", "0"),
                ("x", "0", "1", "0", "0"),
                ("y", "2*x", "0", "1", "0"),
                ("z", "x+2*y", "3*x", "0", "1"),
            ),
        ),
        provenance=Provenance("B4_05", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B5_10",
        dim=5,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e2 e1 = lambda e3",
            "e2 e2 = lambda e4",
            "e2 e3 = lambda e5",
            "e3 e1 = lambda e4",
            "e3 e2 = lambda e5",
            "e4 e1 = lambda e5",
        ),
        h2_basis=(
            "D(2,1)",
            "D(1,5) + lambda*D(2,4) + lambda*D(3,3) + lambda*D(4,2) + lambda*D(5,1)",
        ),
        h2_action=("x^3*a1 + (1-lambda)*lambda*x^2*y*a2", "x^6*a2"),
        aut=_aut(
            "B5_10",
            ("x", "y", "z"),
            (
                ("x", "0", "0", "0", "0"),
                ("0", "x^2", "0", "0", "0"),
                ("0", "0", "x^3", "0", "0"),
                ("y", "0", "0", "x^4", "0"),
                ("z", "(1+lambda)*x*y", "0", "0", "x^5"),
            ),
            nonzero=("x",),
        ),
        provenance=Provenance("B4_06", (("lambda", "lambda"),), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B5_11",
        dim=5,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e2 e1 = e5",
        ),
        h2_basis=("D(2,1)", "D(1,5) + D(2,2) + D(3,1)"),
        h2_action=("a1 + x*a2", "a2"),
        aut=_aut(
            "B5_11",
            ("x", "y", "z", "t"),
            (
                ("1", "0", "0", "0", "0"),
                ("x", "1", "0", "0", "0"),
                ("y", "x", "1", "0", "0"),
                ("z", "y", "x", "1", "0"),
                ("t", "x+z", "y", "x", "1"),
            ),
        ),
        provenance=Provenance("B4_06", (("lambda", "0"),), "h2", (("1", "1"),)),
    ),
    CatalogEntry(
        name="B5_12",
        dim=5,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e2 e1 = e3 + e5",
            "e2 e2 = e4",
            "e2 e3 = e5",
            "e3 e1 = e4",
            "e3 e2 = e5",
            "e4 e1 = e5",
        ),
        h2_basis=(
            "D(2,1)",
            "D(1,5) + D(2,2) + D(2,4) + D(3,1) + D(3,3) + D(4,2) + D(5,1)",
        ),
        h2_action=("a1 - 3*x*a2", "a2"),
        aut=_aut(
            "B5_12",
            ("x", "y", "z", "t"),
            (
                ("1", "0", "0", "0", "0"),
                ("x", "1", "0", "0", "0"),
                ("y", "2*x", "1", "0", "0"),
                ("z", "x^2+2*y", "3*x", "1", "0"),
                ("t", "x*(1+2*y)+2*z", "3*x^2+3*y", "4*x", "1"),
            ),
        ),
        provenance=Provenance("B4_06", (("lambda", "1"),), "h2", (("1", "1"),)),
    ),
    # ---- dimension 6 ----------------------------------------------------------
    CatalogEntry(
        name="B6_01",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e4 = e5",
            "e2 e1 = e3",
            "e3 e1 = e6",
        ),
        provenance=Provenance("B4_01", (), "h2", (("1", "0", "0"), ("0", "1", "0"))),
    ),
    CatalogEntry(
        name="B6_02",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e6",
            "e1 e4 = e5",
            "e2 e1 = e3",
            "e2 e2 = e6",
            "e3 e1 = lambda e6",
            "e4 e1 = e6",
        ),
        provenance=Provenance(
            "B4_01", (), "h2", (("1", "0", "0"), ("0", "lambda", "1"))
        ),
    ),
    CatalogEntry(
        name="B6_03",
        dim=6,
        params=("lambda", "mu"),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e6",
            "e1 e4 = lambda e5 + mu e6",
            "e2 e1 = e3",
            "e2 e2 = e6",
            "e3 e1 = e5",
            "e4 e1 = e6",
        ),
        provenance=Provenance(
            "B4_01", (), "h2", (("lambda", "1", "0"), ("mu", "0", "1"))
        ),
    ),
    CatalogEntry(
        name="B6_04",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e6",
            "e2 e1 = e3",
            "e2 e2 = e6",
            "e3 e1 = e4 + e5",
            "e4 e1 = e6",
        ),
        provenance=Provenance("B4_02", (), "h2", (("1", "0"), ("0", "1"))),
    ),
    CatalogEntry(
        name="B6_05",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e5",
            "e2 e1 = e3",
            "e3 e1 = e4",
            "e4 e1 = e6",
        ),
        provenance=Provenance("B4_03", (), "h2", (("1", "0"), ("0", "1"))),
    ),
    CatalogEntry(
        name="B6_06",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e6",
            "e2 e1 = e4 + e5",
            "e2 e2 = e6",
            "e3 e1 = e6",
        ),
        provenance=Provenance("B4_04", (), "h2", (("1", "0"), ("0", "1"))),
    ),
    CatalogEntry(
        name="B6_07",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e6",
            "e2 e1 = e3 + e4 + e5",
            "e2 e2 = e4 + e6",
            "e2 e3 = e6",
            "e3 e1 = e4 + e6",
            "e3 e2 = e6",
            "e4 e1 = e6",
        ),
        provenance=Provenance("B4_05", (), "h2", (("1", "0"), ("0", "1"))),
    ),
    CatalogEntry(
        name="B6_08",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e6",
            "e2 e1 = lambda e3 + e5",
            "e2 e2 = lambda e4",
            "e2 e3 = lambda e6",
            "e3 e1 = lambda e4",
            "e3 e2 = lambda e6",
            "e4 e1 = lambda e6",
        ),
        provenance=Provenance(
            "B4_06", (("lambda", "lambda"),), "h2", (("1", "0"), ("0", "1"))
        ),
    ),
    CatalogEntry(
        name="B6_09",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e6",
            "e1 e4 = lambda e6",
            "e2 e1 = e3",
            "e2 e2 = e6",
            "e3 e1 = e5",
            "e4 e1 = e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_01", (), "h2", (("lambda", "1", "1"),)),
    ),
    CatalogEntry(
        name="B6_10",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e4 = e6",
            "e2 e1 = e3",
            "e3 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_01", (), "h2", (("1", "1", "0"),)),
    ),
    CatalogEntry(
        name="B6_11",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e2 e1 = e3",
            "e3 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_01", (), "h2", (("0", "1", "0"),)),
    ),
    CatalogEntry(
        name="B6_12",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e5",
            "e1 e5 = e6",
            "e2 e1 = lambda e3 + e4",
            "e2 e2 = lambda e5",
            "e2 e3 = lambda e6",
            "e3 e1 = lambda e5",
            "e3 e2 = lambda e6",
            "e5 e1 = lambda e6",
        ),
        provenance=Provenance(
            "B5_02", (("lambda", "lambda"),), "h2", (("0", "0", "1"),)
        ),
    ),
    CatalogEntry(
        name="B6_13",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e5",
            "e1 e5 = e6",
            "e2 e1 = lambda e3 + e4",
            "e2 e2 = lambda e5",
            "e2 e3 = lambda e6",
            "e3 e1 = lambda e5",
            "e3 e2 = lambda e6",
            "e4 e1 = e6",
            "e5 e1 = lambda e6",
        ),
        provenance=Provenance(
            "B5_02", (("lambda", "lambda"),), "h2", (("1", "0", "1"),)
        ),
    ),
    CatalogEntry(
        name="B6_14",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e5",
            "e1 e4 = e6",
            "e1 e5 = e6",
            "e2 e1 = e4",
            "e2 e2 = e6",
            "e3 e1 = e6",
            "e4 e1 = lambda e6",
        ),
        provenance=Provenance(
            "B5_02", (("lambda", "0"),), "h2", (("lambda", "1", "1"),)
        ),
    ),
    CatalogEntry(
        name="B6_15",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e5",
            "e1 e4 = e6",
            "e1 e5 = e6",
            "e2 e1 = e3 + e4",
            "e2 e2 = e5 + e6",
            "e2 e3 = e6",
            "e3 e1 = e5 + e6",
            "e3 e2 = e6",
            "e4 e1 = lambda e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance(
            "B5_02", (("lambda", "1"),), "h2", (("lambda", "1", "1"),)
        ),
    ),
    CatalogEntry(
        name="B6_16",
        dim=6,
        params=("lambda",),
        nonzero=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e1 e4 = lambda e5",
            "e1 e5 = lambda e6",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e2 e3 = e6",
            "e2 e4 = lambda e6",
            "e3 e1 = 1/lambda e5",
            "e3 e2 = e6",
            "e4 e1 = e5",
            "e4 e2 = lambda e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance(
            "B5_03",
            (("lambda", "lambda"), ("mu", "1/lambda")),
            "h2",
            (("0", "0", "1"),),
        ),
    ),
    CatalogEntry(
        name="B6_17",
        dim=6,
        params=("lambda",),
        nonzero=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e1 e4 = lambda e5 + e6",
            "e1 e5 = lambda e6",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e2 e3 = e6",
            "e2 e4 = lambda e6",
            "e3 e1 = 1/lambda e5",
            "e3 e2 = e6",
            "e4 e1 = e5",
            "e4 e2 = lambda e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance(
            "B5_03",
            (("lambda", "lambda"), ("mu", "1/lambda")),
            "h2",
            (("1", "0", "1"),),
        ),
    ),
    CatalogEntry(
        name="B6_18",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e1 e4 = e5 + lambda e6",
            "e1 e5 = e6",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e2 e3 = e6",
            "e2 e4 = e6",
            "e3 e1 = e5 + e6",
            "e3 e2 = e6",
            "e4 e1 = e5",
            "e4 e2 = e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance(
            "B5_03",
            (("lambda", "1"), ("mu", "1")),
            "h2",
            (("lambda", "1", "1"),),
        ),
    ),
    CatalogEntry(
        name="B6_19",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e4",
            "e1 e3 = e5",
            "e1 e4 = e6",
            "e2 e1 = e3",
            "e2 e2 = e5",
            "e2 e3 = e6",
            "e3 e1 = e4",
            "e3 e2 = e6",
            "e4 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_05", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_20",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e5",
            "e1 e3 = e6",
            "e2 e1 = e3",
            "e2 e2 = e6",
            "e3 e1 = e4",
            "e4 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_06", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_21",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e6",
            "e2 e1 = e3",
            "e3 e1 = e4",
            "e4 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_07", (), "h2", (("1", "1"),)),
    ),
    CatalogEntry(
        name="B6_22",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e2 e1 = e3",
            "e3 e1 = e4",
            "e4 e1 = e5",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_07", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_23",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e4",
            "e2 e2 = e5",
            "e2 e3 = e6",
            "e3 e1 = e5",
            "e3 e2 = e6",
            "e4 e1 = e6",
        ),
        provenance=Provenance("B5_08", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_24",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e3 + e4",
            "e2 e2 = e4 + e5",
            "e2 e3 = e5 + e6",
            "e2 e4 = e6",
            "e3 e1 = e4 + e5",
            "e3 e2 = e5 + e6",
            "e3 e3 = e6",
            "e4 e1 = e5 + e6",
            "e4 e2 = e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_09", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_25",
        dim=6,
        params=("lambda",),
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = lambda e3",
            "e2 e2 = lambda e4",
            "e2 e3 = lambda e5",
            "e2 e4 = lambda e6",
            "e3 e1 = lambda e4",
            "e3 e2 = lambda e5",
            "e3 e3 = lambda e6",
            "e4 e1 = lambda e5",
            "e4 e2 = lambda e6",
            "e5 e1 = lambda e6",
        ),
        provenance=Provenance(
            "B5_10", (("lambda", "lambda"),), "h2", (("0", "1"),)
        ),
    ),
    CatalogEntry(
        name="B6_26",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e6",
        ),
        provenance=Provenance("B5_10", (("lambda", "0"),), "h2", (("1", "1"),)),
    ),
    CatalogEntry(
        name="B6_27",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e3 + e6",
            "e2 e2 = e4",
            "e2 e3 = e5",
            "e2 e4 = e6",
            "e3 e1 = e4",
            "e3 e2 = e5",
            "e3 e3 = e6",
            "e4 e1 = e5",
            "e4 e2 = e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_10", (("lambda", "1"),), "h2", (("1", "1"),)),
    ),
    CatalogEntry(
        name="B6_28",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e5",
            "e2 e2 = e6",
            "e3 e1 = e6",
        ),
        provenance=Provenance("B5_11", (), "h2", (("0", "1"),)),
    ),
    CatalogEntry(
        name="B6_29",
        dim=6,
        table=(
            "e1 e1 = e2",
            "e1 e2 = e3",
            "e1 e3 = e4",
            "e1 e4 = e5",
            "e1 e5 = e6",
            "e2 e1 = e3 + e5",
            "e2 e2 = e4 + e6",
            "e2 e3 = e5",
            "e2 e4 = e6",
            "e3 e1 = e4 + e6",
            "e3 e2 = e5",
            "e3 e3 = e6",
            "e4 e1 = e5",
            "e4 e2 = e6",
            "e5 e1 = e6",
        ),
        provenance=Provenance("B5_12", (), "h2", (("0", "1"),)),
    ),
]

_BY_NAME = {e.name: e for e in _ENTRIES}
assert len(_BY_NAME) == 50


def list_entries(dim=None):
    names = [e.name for e in _ENTRIES if dim is None or e.dim == dim]
    return sorted(names)


def get(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise CatalogError(f"no catalog entry named {name!r}")


@lru_cache(maxsize=None)
def _parsed_table(name: str):
    entry = get(name)
    return ParametricTable(
        entry.name,
        entry.dim,
        None,
        entry.params,
        [parse_product_line(line, entry.dim) for line in entry.table],
    )


def _check_bindings(entry: CatalogEntry, bindings, field):
    bound = {k: field.of(v) for k, v in (bindings or {}).items()}
    missing = [p for p in entry.params if p not in bound]
    if missing:
        raise ConstraintViolation(
            f"{entry.name}: unbound parameters {', '.join(missing)}"
        )
    extra = [b for b in bound if b not in entry.params]
    if extra:
        raise ConstraintViolation(f"{entry.name}: unknown parameters {', '.join(extra)}")
    for p in entry.nonzero:
        if bound[p] == field.zero:
            raise ConstraintViolation(f"{entry.name}: parameter {p} must be nonzero")
    return bound


def instantiate(name: str, bindings=None, field: Field = QQ) -> Algebra:
    entry = get(name)
    bound = _check_bindings(entry, bindings, field)
    try:
        return _parsed_table(name).instantiate(field, bound)
    except ZeroDivisionError:
        raise ConstraintViolation(
            f"{name}: parameter values make a table coefficient undefined"
        )


def h2_basis_forms(name: str, field: Field, bindings=None):
    """The entry's distinguished H^2 basis as concrete bilinear forms."""
    entry = get(name)
    if entry.h2_basis is None:
        raise CatalogError(f"{name} carries no H^2 basis data")
    bound = _check_bindings(entry, bindings, field)
    return [parse_form(field, entry.dim, text, bound) for text in entry.h2_basis]


def special_bindings(name: str, field: Field, bindings=None):
    """Bindings at which the entry's cohomology/automorphism data applies
    (e.g. the mu = 1/lambda stratum); defaults to the given bindings."""
    entry = get(name)
    bound = dict(bindings or {})
    for param, expr_text in entry.special_bindings or ():
        bound[param] = exprs.evaluate_str(expr_text, field, bound)
    return bound


def provenance_spec(name: str, bindings=None, field: Field = QQ) -> ExtensionSpec:
    """The parent algebra and cocycles reconstructing this entry."""
    entry = get(name)
    if entry.provenance is None:
        raise CatalogError(f"{name} carries no provenance data")
    bound = _check_bindings(entry, bindings, field)
    prov = entry.provenance
    try:
        parent_bound = {
            param: exprs.evaluate_str(text, field, bound)
            for param, text in prov.parent_bindings
        }
        parent = instantiate(prov.parent, parent_bound, field)
        if prov.kind == "delta":
            forms = [
                parse_form(field, parent.dim, text, bound) for text in prov.cocycles
            ]
        else:
            basis = h2_basis_forms(prov.parent, field, parent_bound)
            forms = []
            for row in prov.cocycles:
                form = BilinearForm.zero(field, parent.dim)
                for coeff_text, base in zip(row, basis):
                    c = exprs.evaluate_str(coeff_text, field, bound)
                    if c != field.zero:
                        form = form.add(base.scale(c))
                forms.append(form)
    except ZeroDivisionError:
        raise ConstraintViolation(f"{name}: provenance undefined at these parameters")
    return ExtensionSpec(parent, tuple(forms))


def provenance_check(name: str, bindings=None, field: Field = QQ) -> bool:
    """Bit-exact reconstruction: the central extension of the provenance
    parent equals the instantiated entry in the same basis order."""
    spec = provenance_spec(name, bindings, field)
    return central_extension(spec) == instantiate(name, bindings, field)


_Q_SINGLE = ("0", "1", "-1", "2", "1/2")
_Q_PAIRS = (("0", "1"), ("1", "1"), ("-1", "2"), ("2", "1/2"), ("1/2", "-1"))


def sample_bindings(name: str, field: Field = QQ):
    """Deterministic constraint-valid parameter samples for an entry: the
    standard five rational points over Q, all residues over GF(p)."""
    entry = get(name)
    if not entry.params:
        return [{}]
    if field.kind == "GF":
        values = [field.of(v) for v in field.elements()]
    else:
        values = [field.parse(v) for v in _Q_SINGLE]
    out = []
    if len(entry.params) == 1:
        candidates = [{entry.params[0]: v} for v in values]
    else:
        if field.kind == "GF":
            candidates = [
                {entry.params[0]: a, entry.params[1]: b} for a in values for b in values
            ]
        else:
            candidates = [
                {entry.params[0]: field.parse(a), entry.params[1]: field.parse(b)}
                for a, b in _Q_PAIRS
            ]
    for bindings in candidates:
        try:
            _check_bindings(entry, bindings, field)
        except ConstraintViolation:
            continue
        out.append(bindings)
    return out

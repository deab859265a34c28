"""Machine verification of the built-in catalog against its source data:
cohomology dimension tables, construction provenance, automorphism families,
cohomology action formulas, pairwise distinctness over prime fields, and the
brute-force cross-validation.

Each check returns a CheckResult with one report line per item; the CLI's
verify-paper subcommand and the acceptance test suite both drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import catalog, exprs
from .bilinear import cohomology
from .extensions import central_extension
from .fields import GF, QQ, PrimeField
from .linalg import inverse, mat_vec
from .morphisms import (
    Morphism,
    _random_scalar,
    act_on_class,
    canonical_generator_tensor,
    enumerate_automorphisms,
    is_isomorphic,
    verify_aut_family,
)
from .bilinear import CohomologyClass
from .oracle import cross_validate


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    lines: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def item(self, ok: bool, text: str):
        self.lines.append(("ok   " if ok else "FAIL ") + text)
        if not ok:
            self.passed = False

    def note(self, text: str):
        self.lines.append("note " + text)

    def format(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return "\n".join([f"[{self.name}]"] + self.lines + [f"{status} {self.name}"])


# Expected (dim Z^2, dim B^2, dim H^2) per entry.  B5_03 splits into the
# generic stratum and the mu = 1/lambda stratum; the B5_04 row holds for
# lambda != 0 only (at lambda = 0 the algebra coincides with B5_02(0), a
# family collision verified by check_distinctness, and the B5_02 row applies).
DIM4_TABLE = {
    "B4_01": (6, 3, 3),
    "B4_02": (5, 3, 2),
    "B4_03": (5, 3, 2),
    "B4_04": (5, 3, 2),
    "B4_05": (5, 3, 2),
    "B4_06": (5, 3, 2),
}

DIM5_TABLE = {
    "B5_01": (7, 4, 3),
    "B5_02": (7, 4, 3),
    "B5_04": (6, 4, 2),
    "B5_05": (6, 4, 2),
    "B5_06": (6, 4, 2),
    "B5_07": (6, 4, 2),
    "B5_08": (6, 4, 2),
    "B5_09": (6, 4, 2),
    "B5_10": (6, 4, 2),
    "B5_11": (6, 4, 2),
    "B5_12": (6, 4, 2),
}
B5_03_GENERIC = (6, 4, 2)
B5_03_SPECIAL = (7, 4, 3)
B5_04_AT_ZERO = (7, 4, 3)  # = the B5_02(0) row; documented family collision


def _dims(name, bindings, field=QQ):
    space = cohomology(catalog.instantiate(name, bindings, field))
    return (space.dim_z2, space.dim_b2, space.dim_h2)


def _fmt_bindings(bindings):
    if not bindings:
        return ""
    return "(" + ", ".join(f"{k}={v}" for k, v in sorted(bindings.items())) + ")"


def check_cohomology_dim4() -> CheckResult:
    res = CheckResult("cohomology tables, dimension 4")
    for name, expected in DIM4_TABLE.items():
        for bindings in catalog.sample_bindings(name, QQ):
            got = _dims(name, bindings)
            res.item(
                got == expected,
                f"{name}{_fmt_bindings(bindings)}: computed {got}, table {expected}",
            )
    return res


def check_cohomology_dim5() -> CheckResult:
    res = CheckResult("cohomology tables, dimension 5")
    for name, expected in DIM5_TABLE.items():
        for bindings in catalog.sample_bindings(name, QQ):
            got = _dims(name, bindings)
            exp = expected
            suffix = ""
            if name == "B5_04" and bindings["lambda"] == 0:
                exp = B5_04_AT_ZERO
                suffix = " [lambda=0: algebra equals B5_02(0); its row applies]"
            res.item(
                got == exp,
                f"{name}{_fmt_bindings(bindings)}: computed {got}, table {exp}{suffix}",
            )
    # B5_03 case split
    generic = [("0", "1"), ("1", "2"), ("2", "0"), ("-1", "1"), ("1/2", "1")]
    for a, b in generic:
        bindings = {"lambda": QQ.parse(a), "mu": QQ.parse(b)}
        got = _dims("B5_03", bindings)
        res.item(
            got == B5_03_GENERIC,
            f"B5_03{_fmt_bindings(bindings)} generic: computed {got}, table {B5_03_GENERIC}",
        )
    for a in ("1", "2", "-1", "1/2", "-2"):
        lam = QQ.parse(a)
        bindings = {"lambda": lam, "mu": QQ.div(QQ.one, lam)}
        got = _dims("B5_03", bindings)
        res.item(
            got == B5_03_SPECIAL,
            f"B5_03{_fmt_bindings(bindings)} special: computed {got}, table {B5_03_SPECIAL}",
        )
    return res


def check_catalog() -> CheckResult:
    res = CheckResult("catalog well-formedness")
    count = 0
    for name in catalog.list_entries():
        for bindings in catalog.sample_bindings(name, QQ):
            A = catalog.instantiate(name, bindings, QQ)
            ok = A.is_bicommutative() and A.is_nilpotent() and A.is_one_generated()
            count += 1
            if not ok:
                res.item(False, f"{name}{_fmt_bindings(bindings)}: predicate failure")
    res.item(count > 0, f"all {count} sampled instantiations pass "
                        "bicommutative + nilpotent + one-generated")
    return res


def check_provenance() -> CheckResult:
    res = CheckResult("provenance reconstruction")
    for name in catalog.list_entries():
        entry = catalog.get(name)
        if entry.provenance is None:
            continue
        all_ok = True
        tested = 0
        for bindings in catalog.sample_bindings(name, QQ):
            tested += 1
            if not catalog.provenance_check(name, bindings, QQ):
                all_ok = False
                res.item(False, f"{name}{_fmt_bindings(bindings)}: reconstruction differs")
        if all_ok:
            res.item(
                True,
                f"{name}: bit-exact from {entry.provenance.parent} at {tested} parameter points",
            )
    return res


def _data_bindings(name, field):
    """Parameter samples at which an entry's h2/aut data applies."""
    entry = catalog.get(name)
    if not entry.params:
        return [{}]
    out = []
    for bindings in catalog.sample_bindings(name, field):
        if entry.special_bindings:
            try:
                bindings = catalog.special_bindings(name, field, {
                    k: v for k, v in bindings.items()
                    if k not in dict(entry.special_bindings)
                })
            except ZeroDivisionError:
                continue
        key = tuple(sorted(bindings.items()))
        if key not in {tuple(sorted(b.items())) for b in out}:
            out.append(bindings)
    return out


def families():
    return [n for n in catalog.list_entries() if catalog.get(n).aut is not None]


# Combos where the displayed matrix family is a proper subgroup of the full
# automorphism group: the lambda in {0, 1} degenerations (the same ones the
# (1-lambda)*lambda factors in the action formulas point at) and torsion that
# only exists in small characteristic
# the characteristic-zero display omits.  At these parameters the check
# demands strict containment plus a direct certificate for every extra map.
DEGENERATE_AUT_COMBOS = {
    ("B4_06", (("lambda", 0),), 2),
    ("B4_06", (("lambda", 1),), 2),
    ("B4_06", (("lambda", 0),), 3),
    ("B4_06", (("lambda", 1),), 3),
    ("B5_10", (("lambda", 0),), 2),
    ("B5_10", (("lambda", 1),), 2),
    ("B5_10", (("lambda", 0),), 3),
    ("B5_10", (("lambda", 1),), 3),
    ("B5_06", (), 3),
    ("B5_09", (), 2),
    ("B5_11", (), 3),
    ("B5_12", (), 3),
}


def check_aut_families(samples: int = 10, seed: int = 20240817) -> CheckResult:
    res = CheckResult("automorphism families")
    rng = random.Random(seed)
    for name in families():
        entry = catalog.get(name)
        # random instantiations over Q
        for bindings in _data_bindings(name, QQ)[:3]:
            parent = catalog.instantiate(name, bindings, QQ)
            report = verify_aut_family(entry.aut, parent, bindings, samples, rng)
            res.item(
                report["ok"],
                f"{name}{_fmt_bindings(bindings)}: {report['samples']} random "
                f"instantiations over Q are automorphisms",
            )
        # exhaustive comparison over GF(2) and GF(3)
        for p in (2, 3):
            field = GF(p)
            for bindings in _data_bindings(name, field):
                parent = catalog.instantiate(name, bindings, field)
                enumerated = {m.matrix for m in enumerate_automorphisms(parent)}
                pattern = entry.aut.enumerate_instances(parent, bindings)
                combo = (name, tuple(sorted(bindings.items())), p)
                where = f"{name}{_fmt_bindings(bindings)} over GF({p})"
                if not pattern <= enumerated:
                    res.item(False, f"{where}: pattern contains non-automorphisms")
                    continue
                if enumerated == pattern:
                    res.item(
                        combo not in DEGENERATE_AUT_COMBOS,
                        f"{where}: enumerated automorphisms equal pattern "
                        f"instantiations ({len(enumerated)})",
                    )
                    continue
                extras = enumerated - pattern
                genuine = all(
                    Morphism(parent, parent, [list(r) for r in m]).is_automorphism()
                    for m in extras
                )
                res.item(
                    genuine and combo in DEGENERATE_AUT_COMBOS,
                    f"{where}: pattern is a proper subgroup "
                    f"({len(pattern)} of {len(enumerated)}); all "
                    f"{len(extras)} extra maps certified as automorphisms "
                    f"[documented degeneration]",
                )
    return res


def _nabla_coords(space, nabla_forms):
    """Change of coordinates: canonical H^2 coords -> the entry's basis."""
    cols = []
    for form in nabla_forms:
        coords = space.class_coords(form)
        if coords is None:
            raise ValueError("distinguished basis form is not a cocycle")
        cols.append(list(coords))
    n = len(cols)
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    inv = inverse(space.algebra.field, mat)
    if inv is None:
        raise ValueError("distinguished H^2 basis is degenerate")

    def to_nabla(coords):
        return mat_vec(space.algebra.field, inv, list(coords))

    return to_nabla


def check_action_formulas(samples: int = 10, seed: int = 20240818) -> CheckResult:
    res = CheckResult("H^2 action formulas")
    rng = random.Random(seed)
    for name in families():
        entry = catalog.get(name)
        if entry.h2_action is None:
            continue
        asts = [exprs.parse(text) for text in entry.h2_action]
        for bindings in _data_bindings(name, QQ)[:3]:
            parent = catalog.instantiate(name, bindings, QQ)
            space = cohomology(parent)
            nabla = catalog.h2_basis_forms(name, QQ, bindings)
            if len(nabla) != space.dim_h2:
                res.item(False, f"{name}: distinguished basis size mismatch")
                continue
            to_nabla = _nabla_coords(space, nabla)
            ok = True
            for _ in range(samples):
                phi_bindings = dict(bindings)
                for pname in entry.aut.param_names:
                    nonzero = pname in entry.aut.nonzero
                    phi_bindings[pname] = _random_scalar(QQ, rng, nonzero=nonzero)
                phi = entry.aut.instantiate(parent, phi_bindings)
                alphas = [QQ.of(rng.randint(-4, 4)) for _ in nabla]
                theta = None
                for a, form in zip(alphas, nabla):
                    scaled = form.scale(a)
                    theta = scaled if theta is None else theta.add(scaled)
                cls = CohomologyClass.of_form(space, theta)
                moved = act_on_class(phi, cls)
                got = to_nabla(moved.coords)
                env = dict(phi_bindings)
                for i, a in enumerate(alphas, 1):
                    env[f"a{i}"] = a
                want = [exprs.evaluate(ast, QQ, env) for ast in asts]
                if list(got) != list(want):
                    ok = False
                    res.item(
                        False,
                        f"{name}{_fmt_bindings(bindings)}: action mismatch at "
                        f"{_fmt_bindings(phi_bindings)}: got {got}, formulas {want}",
                    )
                    break
            if ok:
                res.item(
                    True,
                    f"{name}{_fmt_bindings(bindings)}: {samples} sampled automorphisms "
                    f"act per the stated formulas",
                )
    return res


def dimension5_instances(field: PrimeField):
    """All dimension-5 entries at all constraint-valid parameter values."""
    out = []
    for name in catalog.list_entries(5):
        for bindings in catalog.sample_bindings(name, field):
            out.append((name, bindings, catalog.instantiate(name, bindings, field)))
    return out


def check_distinctness(primes=(7, 11)) -> CheckResult:
    """Pairwise isomorphism analysis of the dimension-5 list over GF(p).

    Every coincidence (an isomorphism between differently-labelled
    instances) is verified with an explicit witness and logged; the check
    fails only on unverifiable results, never on logged coincidences.
    """
    res = CheckResult("distinctness of the dimension-5 list over prime fields")
    coincidences = []
    for p in primes:
        field = GF(p)
        instances = dimension5_instances(field)
        by_invariant = {}
        for name, bindings, alg in instances:
            by_invariant.setdefault(alg.invariant_vector(), []).append(
                (name, bindings, alg)
            )
        groups = 0
        for group in by_invariant.values():
            if len(group) == 1:
                continue
            groups += 1
            by_tensor = {}
            for name, bindings, alg in group:
                by_tensor.setdefault(canonical_generator_tensor(alg), []).append(
                    (name, bindings, alg)
                )
            for members in by_tensor.values():
                if len(members) == 1:
                    continue
                base = members[0]
                for other in members[1:]:
                    verdict = is_isomorphic(base[2], other[2])
                    witness_ok = (
                        bool(verdict)
                        and verdict.witness.is_homomorphism()
                        and verdict.witness.is_invertible()
                    )
                    label = (
                        f"GF({p}): {base[0]}{_fmt_bindings(base[1])} ~ "
                        f"{other[0]}{_fmt_bindings(other[1])}"
                    )
                    coincidences.append(label)
                    res.item(witness_ok, f"parameter coincidence logged: {label}")
        res.item(
            True,
            f"GF({p}): {len(instances)} instances, all pairs compared via canonical "
            f"generator tensors ({groups} invariant-coincident groups searched exhaustively)",
        )
    res.details["coincidences"] = coincidences
    return res


def check_oracle(threads: int = 1, checkpoint=None) -> CheckResult:
    res = CheckResult("brute-force cross-validation over GF(2)")
    for dim in (1, 2, 3):
        report = cross_validate(dim, GF(2), threads=threads, checkpoint=checkpoint)
        res.item(
            report.ok,
            f"dim {dim}: oracle {len(report.oracle_classes)} classes, "
            f"pipeline {len(report.pipeline_classes)}, matched {len(report.matched)}",
        )
        res.details[f"dim{dim}"] = report
    return res


SCOPES = {
    "cohomology": lambda **kw: [check_cohomology_dim4(), check_cohomology_dim5()],
    "catalog": lambda **kw: [check_catalog()],
    "provenance": lambda **kw: [check_provenance()],
    "autfamilies": lambda **kw: [check_aut_families(), check_action_formulas()],
    "distinctness": lambda **kw: [
        check_distinctness(primes=tuple(kw.get("primes") or (7, 11)))
    ],
    "oracle": lambda **kw: [check_oracle(threads=kw.get("threads", 1))],
}


def run_scopes(scopes, **kw):
    results = []
    for scope in scopes:
        results.extend(SCOPES[scope](**kw))
    return results

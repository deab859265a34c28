"""The compiled kernels and the pure-Python fallback implement one contract;
these tests pin them against each other on small inputs."""

import pytest

from nilext import _pyfallback as pure
from nilext import catalog, core
from nilext.fields import GF

compiled = pytest.importorskip("nilext._speedups")


def flats(name, p, **params):
    return catalog.instantiate(name, params or None, GF(p)).flat_sc()


def test_backend_names():
    assert pure.BACKEND == "pure"
    assert compiled.BACKEND == "compiled"
    assert core.backend_name() in ("pure", "compiled")


def test_scan_tables_agree():
    for n, p in ((1, 2), (2, 2), (2, 3)):
        total = p ** (n**3)
        for flags in ((True, True, True), (True, False, False), (False, True, False)):
            a = compiled.scan_tables(n, p, 0, total, *flags)
            b = pure.scan_tables(n, p, 0, total, *flags)
            assert list(a) == list(b)


def test_decode_table_agree():
    for idx in (0, 1, 100, 255):
        assert compiled.decode_table(idx, 2, 2) == pure.decode_table(idx, 2, 2)


def test_canonical_form_agree_on_catalog():
    cases = [("B2_01", 3, {}), ("B3_01", 3, {}), ("B3_02", 3, {"lambda": 2}),
             ("B4_03", 2, {}), ("B4_01", 2, {}), ("B4_06", 3, {"lambda": 1}),
             ("B5_07", 2, {})]
    for name, p, params in cases:
        sc = flats(name, p, **params)
        n = catalog.get(name).dim
        assert compiled.canonical_form(n, p, sc) == pure.canonical_form(n, p, sc)


def test_automorphisms_agree():
    for name, p in (("B2_01", 3), ("B3_01", 2), ("B4_03", 2), ("B3_02", 3)):
        entry = catalog.get(name)
        params = {"lambda": 1} if entry.params else {}
        sc = flats(name, p, **params)
        assert compiled.automorphisms(entry.dim, p, sc) == pure.automorphisms(
            entry.dim, p, sc
        )


def test_iso_search_agree():
    a = flats("B3_01", 3)
    b = flats("B3_02", 3, **{"lambda": 0})
    assert compiled.iso_search(3, 3, a, b) is None
    assert pure.iso_search(3, 3, a, b) is None
    assert compiled.iso_search(3, 3, a, a) == pure.iso_search(3, 3, a, a)


def test_hom_from_generator_agree():
    a = flats("B4_03", 3)
    for v in ((1, 0, 0, 0), (2, 1, 0, 0), (0, 1, 0, 0)):
        assert compiled.hom_from_generator(4, 4, 3, a, a, v) == pure.hom_from_generator(
            4, 4, 3, a, a, v
        )


def test_canonical_form_gl_agree():
    for name, p in (("B2_01", 2), ("B3_01", 2), ("B3_02", 2)):
        entry = catalog.get(name)
        params = {"lambda": 1} if entry.params else {}
        sc = flats(name, p, **params)
        assert compiled.canonical_form_gl(entry.dim, p, sc) == pure.canonical_form_gl(
            entry.dim, p, sc
        )


def test_canonical_form_is_basis_change_invariant():
    import random

    from nilext.algebra import Algebra

    F = GF(3)
    A = catalog.instantiate("B4_03", {}, F)
    rng = random.Random(42)
    ca = compiled.canonical_form(4, 3, A.flat_sc())
    for _ in range(10):
        # random invertible change of basis: f_a = sum_i g[i][a] e_i
        while True:
            g = [[rng.randrange(3) for _ in range(4)] for _ in range(4)]
            cols = [[g[i][a] for i in range(4)] for a in range(4)]
            ginv = pure._inverse(cols, 4, 3)
            if ginv is not None:
                break
        sc = []
        for a in range(4):
            for b in range(4):
                prod = A.multiply(cols[a], cols[b])
                for c in range(4):
                    sc.append(sum(ginv[c][k] * prod[k] for k in range(4)) % 3)
        B = Algebra.from_flat(F, 4, sc)
        assert compiled.canonical_form(4, 3, B.flat_sc())[0] == ca[0]


def test_force_pure_env(monkeypatch):
    import importlib

    monkeypatch.setenv("NILEXT_FORCE_PURE", "1")
    import nilext.core as core_mod

    importlib.reload(core_mod)
    assert core_mod.backend_name() == "pure"
    monkeypatch.delenv("NILEXT_FORCE_PURE")
    importlib.reload(core_mod)

"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line with its runtime. Run with
``pytest tests/test_acceptance.py -v`` (the lines bypass output capture).
"""

import random
import time
from contextlib import contextmanager

import pytest

from tnormint import (
    LUKASIEWICZ,
    MINIMUM,
    PRODUCT,
    GenSubspace,
    SubspaceElement,
    check_axioms,
    counterexample_functional,
    element_to_fnvec,
    enumerate_capacities,
    eval_subspace_functional,
    extend_one_step,
    integral_functional,
    is_comonotone,
    level_raise,
    monotone_chain,
    random_capacity,
    squeeze_witness,
    tnormed_integral,
    tnormed_integral_grid,
    value_grid,
    verify_characterization,
    verify_sugeno_simplification,
    well_definedness_check,
)
from tnormint.extension import axiom_sweep, canonical_subspace, literal_subspace
from tnormint.functional import WEDGE_HOMOGENEOUS

OPS = [MINIMUM, PRODUCT, LUKASIEWICZ]
TOL = 1e-9


@contextmanager
def criterion(pytestconfig, label, budget):
    """Time the block, print one verdict line and enforce the runtime budget."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < budget
        capman = pytestconfig.pluginmanager.getplugin("capturemanager")
        with capman.global_and_fixture_disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label} ({elapsed:.2f}s / budget {budget}s)")
    assert elapsed < budget, f"{label} exceeded {budget}s: {elapsed:.1f}s"


def test_c01_counterexample_values(pytestconfig):
    with criterion(pytestconfig, "C1 counterexample regression", 1):
        S, mu = counterexample_functional()
        phi1, phi2, _ = S.generators
        assert phi1 == (0.0, 1 / 2, 2 / 3) and phi2 == (1 / 3, 1 / 3, 1.0)
        joined = tuple(max(a, b) for a, b in zip(phi1, phi2))
        assert abs(mu(phi1) - 1 / 3) <= 1e-12
        assert abs(mu(phi2) - 1 / 3) <= 1e-12
        assert abs(mu(joined) - 1 / 2) <= 1e-12
        assert is_comonotone(phi1, phi2)
        assert max(mu(phi1), mu(phi2)) != mu(joined)


def test_c02_counterexample_axiom_sweep(pytestconfig):
    with criterion(pytestconfig, "C2 counterexample axiom sweep, grid 1/60", 60):
        report = axiom_sweep(canonical_subspace(), 60, tol=TOL)
        assert report["membership"].samples == 61 * 61 * 3
        for name in ("monotone", "vee_homogeneous", "star_homogeneous[product]"):
            assert report.verdict(name).value == "pass", report[name].to_dict()
            assert report[name].violations == 0
        assert report["monotone"].samples > 0


def test_c03_literal_values_break_well_definedness(pytestconfig):
    with criterion(pytestconfig, "C3 literal phi1(2)=1/3 not well defined", 10):
        L = literal_subspace()
        assert L.generators[2] == L.generators[1]
        e3, e2 = SubspaceElement(0, 1, 2), SubspaceElement(0, 1, 1)
        assert element_to_fnvec(L, e3) == element_to_fnvec(L, e2)
        assert abs(eval_subspace_functional(L, e3) - 1 / 2) <= TOL
        assert abs(eval_subspace_functional(L, e2) - 1 / 3) <= TOL
        assert well_definedness_check(L, 60, TOL).verdict("well_defined").value == "fail"


def _all_capacities():
    for n in (1, 2, 3):
        yield from enumerate_capacities(n, value_grid(4))


def test_c04_characterization_roundtrip(pytestconfig):
    with criterion(pytestconfig, "C4 characterization round trip n<=3, grid 1/4", 300):
        count = 0
        for nu in _all_capacities():
            for op in OPS:
                res = verify_characterization(nu, op, samples=500, tol=TOL)
                assert res["passed"], res
                assert all(a["samples"] >= 1 for a in res["axioms"].values())
                count += 1
        assert count == 3 * (1 + 25 + 1884)


def test_c05_sugeno_simplification(pytestconfig):
    with criterion(pytestconfig, "C5 Sugeno two-homogeneity characterization", 120):
        for nu in _all_capacities():
            res = verify_sugeno_simplification(nu, samples=500, tol=TOL)
            assert res["passed"], res
        witnesses = 0
        for nu in enumerate_capacities(2, value_grid(4)):
            if nu((0,)) == 0.5:
                rep = check_axioms(integral_functional(nu, PRODUCT), [WEDGE_HOMOGENEOUS], samples=500)
                if rep.verdict(WEDGE_HOMOGENEOUS.key).value == "fail":
                    witnesses += 1
        assert witnesses >= 1


def test_c06_exact_vs_oracle(pytestconfig):
    with criterion(pytestconfig, "C6 exact vs grid oracle, 10000 triples", 30):
        rng = random.Random(2024)
        for k in range(10_000):
            n = rng.randint(1, 5)
            nu = random_capacity(n, value_grid(20), k)
            f = tuple(rng.random() for _ in range(n))
            op = rng.choice(OPS)
            exact = tnormed_integral(nu, f, op)
            oracle = tnormed_integral_grid(nu, f, op, 1e-3)
            assert oracle <= exact + TOL and exact <= oracle + 1e-3 + TOL, (nu, f, op)


def _below_pair(rng, n):
    phi = tuple(rng.random() for _ in range(n))
    psi = tuple(min(p, rng.random()) for p in phi)
    return psi, phi


def _leq(f, g):
    return all(a <= b for a, b in zip(f, g))


def test_c07_comonotone_chain(pytestconfig):
    with criterion(pytestconfig, "C7 comonotone chain suite", 30):
        rng = random.Random(7)
        for _ in range(1000):
            psi, phi = _below_pair(rng, rng.randint(2, 6))
            seq = [psi] + monotone_chain(psi, phi) + [phi]
            for a, b in zip(seq, seq[1:]):
                assert _leq(a, b) and is_comonotone(a, b)
        for k in range(100):
            n = rng.randint(2, 6)
            I = integral_functional(random_capacity(n, value_grid(20), k), rng.choice(OPS))
            for _ in range(10):
                psi, phi = _below_pair(rng, n)
                vals = [I(f) for f in [psi] + monotone_chain(psi, phi) + [phi]]
                assert all(a <= b for a, b in zip(vals, vals[1:])), vals


def test_c08_level_raise(pytestconfig):
    with criterion(pytestconfig, "C8 level-raise suite", 10):
        rng = random.Random(8)
        for _ in range(1000):
            n = rng.randint(1, 6)
            phi = tuple(rng.choice([rng.random(), 0.0, 1.0]) for _ in range(n))
            delta = rng.uniform(0, 0.95)
            xi = rng.uniform(delta, 1)
            if not delta < xi < 1:
                continue
            psi = level_raise(phi, delta, xi)
            assert all(q == 1.0 for p, q in zip(phi, psi) if p >= xi)
            assert all(q == p for p, q in zip(phi, psi) if p <= delta)
            assert is_comonotone(phi, psi)
        psi = level_raise((0.2, 0.5, 0.9), 0.3, 0.6)
        assert abs(psi[1] - 13 / 18) <= 1e-12 and psi[0] == 0.2 and psi[2] == 1.0


def test_c09_squeeze_witness(pytestconfig):
    with criterion(pytestconfig, "C9 squeeze-witness suite", 10):
        rng = random.Random(9)
        for _ in range(1000):
            psi, phi = _below_pair(rng, rng.randint(1, 6))
            c = rng.random()
            d = rng.uniform(c, 1)
            if not c < d:
                continue
            xi = squeeze_witness(phi, psi, c, d)
            assert [min(v, c) for v in xi] == [min(v, c) for v in phi]
            assert [max(v, d) for v in xi] == [max(v, d) for v in psi]


def test_c10_extension_operator(pytestconfig):
    with criterion(pytestconfig, "C10 one-step extension", 120):
        step = 1 / 60
        rng = random.Random(10)
        constants = GenSubspace(3)
        for _ in range(100):
            phi = tuple(rng.random() for _ in range(3))
            ext = extend_one_step(constants, phi, 60)
            assert abs(ext.m[-1] - max(phi)) <= step
        H = canonical_subspace()
        fresh = tuple(rng.random() for _ in range(3))
        H2 = extend_one_step(H, fresh, 60)
        assert H2.k == 4 and H2.m[:3] == H.m
        report = axiom_sweep(H2, 60, tol=TOL, value_tol=2 * step)
        for name in ("membership", "well_defined", "monotone"):
            assert report.verdict(name).value == "pass", report[name].to_dict()

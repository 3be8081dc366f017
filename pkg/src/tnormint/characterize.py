"""Recovering a capacity from a functional and round-trip checks."""

import random

from ._common import TOL, value_grid
from .capacity import Capacity, characteristic, enumerate_capacities, validate
from .functional import (
    COMONOTONE_MAXITIVE,
    DEFAULT_DENOMINATOR,
    DEFAULT_SAMPLES,
    NORMED,
    VEE_HOMOGENEOUS,
    WEDGE_HOMOGENEOUS,
    check_axioms,
    star_homogeneous,
)
from .integral import integral_functional, tnormed_integral
from .tnorm import MINIMUM


def in_upsilon(f, subset):
    """True iff ``f`` equals 1 on every point of ``subset`` (always true for the empty set)."""
    return all(f[i] == 1.0 for i in subset)


def reconstruct_capacity(I):
    """``nu(A) = I(chi_A)`` for nonempty ``A`` and ``nu(empty) = 0``.

    On a finite discrete space ``chi_A`` is the pointwise least function that
    equals 1 on ``A``, so for monotone ``I`` the infimum of ``I`` over that
    family is attained there. Returns ``(capacity, validation report)``.
    """
    vals = [0.0] + [I(characteristic(mask, I.n)) for mask in range(1, 1 << I.n)]
    nu = Capacity(I.n, tuple(vals))
    return nu, validate(nu)


def _compare(nu, rebuilt, tol):
    diffs = [
        (mask, a, b)
        for mask, (a, b) in enumerate(zip(nu.values, rebuilt.values))
        if abs(a - b) > tol
    ]
    return {"equal": not diffs, "mismatches": [list(d) for d in diffs[:5]]}


def _resample(nu, rebuilt, op, denominator, seed, samples, tol):
    rng = random.Random(f"{seed}:recompute")
    grid = value_grid(denominator)
    worst = 0.0
    for _ in range(samples):
        f = tuple(rng.choice(grid) for _ in range(nu.n))
        worst = max(worst, abs(tnormed_integral(nu, f, op) - tnormed_integral(rebuilt, f, op)))
    return {"samples": samples, "max_error": worst, "ok": worst <= tol}


def verify_characterization(
    nu, op, denominator=DEFAULT_DENOMINATOR, seed=0, samples=DEFAULT_SAMPLES, tol=TOL
):
    """Integral functional of ``nu`` is normed, comonotone maxitive and
    ``op``-homogeneous, and its reconstructed capacity is ``nu`` again."""
    I = integral_functional(nu, op)
    axioms = check_axioms(
        I, [NORMED, COMONOTONE_MAXITIVE, star_homogeneous(op)], denominator, seed, samples, tol
    )
    rebuilt, rebuilt_report = reconstruct_capacity(I)
    recon = _compare(nu, rebuilt, tol)
    recompute = _resample(nu, rebuilt, op, denominator, seed, samples, tol)
    ok = axioms.passed and recon["equal"] and recompute["ok"] and rebuilt_report.passed
    return {
        "capacity": list(nu.values),
        "tnorm": op.kind,
        "axioms": axioms.to_dict()["axioms"],
        "reconstruction": recon,
        "recompute": recompute,
        "passed": ok,
    }


def verify_sugeno_simplification(
    nu, denominator=DEFAULT_DENOMINATOR, seed=0, samples=DEFAULT_SAMPLES, tol=TOL
):
    """Only max- and min-homogeneity are checked for the Sugeno functional;
    normedness is then implied and checked as a consequence."""
    I = integral_functional(nu, MINIMUM)
    axioms = check_axioms(
        I, [VEE_HOMOGENEOUS, WEDGE_HOMOGENEOUS], denominator, seed, samples, tol
    )
    implied = check_axioms(I, [NORMED], denominator, seed, samples, tol)
    rebuilt, rebuilt_report = reconstruct_capacity(I)
    recon = _compare(nu, rebuilt, tol)
    ok = axioms.passed and implied.passed and recon["equal"] and rebuilt_report.passed
    return {
        "capacity": list(nu.values),
        "axioms": axioms.to_dict()["axioms"],
        "implied": implied.to_dict()["axioms"],
        "reconstruction": recon,
        "passed": ok,
    }


def roundtrip(n, denominator, op, seed=0, samples=DEFAULT_SAMPLES, tol=TOL):
    """Run :func:`verify_characterization` over every enumerated capacity."""
    total = failed = 0
    first_failure = None
    for nu in enumerate_capacities(n, value_grid(denominator)):
        total += 1
        res = verify_characterization(nu, op, DEFAULT_DENOMINATOR, seed, samples, tol)
        if not res["passed"]:
            failed += 1
            if first_failure is None:
                first_failure = res
    return {
        "n": n,
        "grid": denominator,
        "tnorm": op.kind,
        "capacities": total,
        "failed": failed,
        "passed": failed == 0 and total > 0,
        "first_failure": first_failure,
    }

"""Finitely generated (max, product)-subspaces and functionals on them.

A :class:`GenSubspace` with generators ``g_0..g_{k-1}`` and assigned values
``m_0..m_{k-1}`` contains every function ``d v (c * g_i)`` with ``d, c`` in
[0, 1] (constants are the ``c = 0`` elements). The functional on it sends that
element to ``d v (c * m_i)``.

Membership of an arbitrary vector is decided algebraically: if
``f = d v (c * g)`` then ``d`` can be taken to be ``min f`` and ``c`` is fixed by
any point where ``f`` exceeds that minimum.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ._common import TOL, InputError, fnvec, join, value_grid
from .integral import Functional
from .report import AxiomReport
from .tnorm import PRODUCT

log = logging.getLogger(__name__)

DEFAULT_DENOMINATOR = 60
_CHUNK = 128


@dataclass(frozen=True)
class SubspaceElement:
    d: float
    c: float
    i: int | None = None


@dataclass(frozen=True)
class GenSubspace:
    n: int
    generators: tuple = ()
    m: tuple = ()

    def __post_init__(self):
        gens = tuple(fnvec(g, self.n) for g in self.generators)
        m = tuple(float(v) for v in self.m)
        if len(gens) != len(m):
            raise InputError(f"{len(gens)} generators but {len(m)} assigned values")
        for v in m:
            if not 0.0 <= v <= 1.0:
                raise InputError(f"assigned value {v} outside [0, 1]")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "m", m)

    @property
    def k(self):
        return len(self.generators)

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["n"]), tuple(data["generators"]), tuple(data["m"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed subspace JSON: {exc}") from exc

    def to_json(self):
        return {"n": self.n, "generators": [list(g) for g in self.generators], "m": list(self.m)}


def _check_element(S, e):
    if e.i is None:
        if e.c != 0.0:
            raise InputError("an element with c > 0 needs a generator index")
    elif not 0 <= e.i < S.k:
        raise InputError(f"generator index {e.i} out of range (k={S.k})")
    if not (0.0 <= e.d <= 1.0 and 0.0 <= e.c <= 1.0):
        raise InputError("element coefficients must lie in [0, 1]")


def element_to_fnvec(S, e):
    _check_element(S, e)
    if e.i is None:
        return (float(e.d),) * S.n
    return tuple(max(e.d, e.c * g) for g in S.generators[e.i])


def eval_subspace_functional(S, e):
    _check_element(S, e)
    if e.i is None:
        return float(e.d)
    return max(e.d, e.c * S.m[e.i])


def resolve_many(S, F, tol=TOL):
    """Vectorised membership: return ``(d, c, index)`` arrays for the rows of ``F``.

    Index ``-1`` marks a constant row and ``-2`` a row outside the subspace.
    The first matching generator wins.
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    rows = F.shape[0]
    lo = F.min(axis=1)
    d = lo.copy()
    c = np.zeros(rows)
    idx = np.full(rows, -2, dtype=int)
    const = F.max(axis=1) - lo <= tol
    idx[const] = -1
    above = F > lo[:, None] + tol
    for gi, g in enumerate(S.generators):
        todo = idx == -2
        if not todo.any():
            break
        g = np.asarray(g)
        # the point with the largest generator value among the raised points
        weight = np.where(above, g[None, :], -1.0)
        pick = weight.argmax(axis=1)
        gpick = g[pick]
        fpick = F[np.arange(rows), pick]
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = np.where(gpick > 0, fpick / gpick, np.inf)
        ok = todo & (cand <= 1.0 + tol)
        cand = np.clip(cand, 0.0, 1.0)
        rebuilt = np.maximum(lo[:, None], cand[:, None] * g[None, :])
        ok &= np.abs(rebuilt - F).max(axis=1) <= tol
        idx[ok] = gi
        c[ok] = cand[ok]
    return d, c, idx


def values_of(S, d, c, idx):
    m = np.asarray(S.m + (0.0,), dtype=float)
    return np.where(idx >= 0, np.maximum(d, c * m[np.where(idx >= 0, idx, -1)]), d)


def resolve(S, f, tol=TOL):
    """Return a SubspaceElement realising ``f`` or None."""
    f = fnvec(f, S.n)
    d, c, idx = resolve_many(S, [f], tol)
    if idx[0] == -2:
        return None
    return SubspaceElement(float(d[0]), float(c[0]), None if idx[0] == -1 else int(idx[0]))


def subspace_functional(S, label="subspace functional", sample_denominator=20, tol=TOL):
    """Wrap the functional on ``S`` as a partial-domain Functional."""
    grid = value_grid(sample_denominator)

    def evaluator(f):
        e = resolve(S, f, tol)
        if e is None:
            raise InputError(f"{list(f)} is not in the subspace")
        return eval_subspace_functional(S, e)

    def domain(f):
        return resolve(S, f, tol) is not None

    def sampler(rng):
        if S.k == 0:
            return (rng.choice(grid),) * S.n
        e = SubspaceElement(rng.choice(grid), rng.choice(grid), rng.randrange(S.k))
        return element_to_fnvec(S, e)

    return Functional(
        evaluator=evaluator,
        n=S.n,
        domain=domain,
        label=label,
        sampler=sampler,
        anchors=S.generators,
    )


PHI1 = (0.0, 1 / 2, 2 / 3)
PHI1_LITERAL = (0.0, 1 / 3, 2 / 3)
PHI2 = (1 / 3, 1 / 3, 1.0)
M_CANONICAL = (1 / 3, 1 / 3, 1 / 2)


def canonical_subspace(phi1=PHI1):
    """Three-point subspace spanned by ``phi1``, ``phi2`` and ``phi1 v phi2``."""
    return GenSubspace(3, (phi1, PHI2, join(phi1, PHI2)), M_CANONICAL)


def literal_subspace():
    """Same construction with ``phi1(x_2) = 1/3``; it is not well defined."""
    return canonical_subspace(PHI1_LITERAL)


def counterexample_functional():
    S = canonical_subspace()
    return S, subspace_functional(S, label="counterexample on H")


def element_grid(S, denominator):
    """All grid elements: arrays ``(F, d, c, idx)`` with ``F`` the realised functions."""
    grid = np.asarray(value_grid(denominator))
    if S.k == 0:
        d = grid.copy()
        c = np.zeros_like(d)
        idx = np.full(len(d), -1)
        return np.repeat(d[:, None], S.n, axis=1), d, c, idx
    dd, cc, ii = np.meshgrid(grid, grid, np.arange(S.k), indexing="ij")
    d, c, idx = dd.ravel(), cc.ravel(), ii.ravel()
    G = np.asarray(S.generators)
    F = np.maximum(d[:, None], c[:, None] * G[idx])
    return F, d, c, idx


def _pairwise(F, v, predicate, res, tol, value_tol, describe):
    """Scan all ordered pairs in chunks, recording violations of ``predicate``."""
    N = len(F)
    for start in range(0, N, _CHUNK):
        Fi, vi = F[start:start + _CHUNK], v[start:start + _CHUNK]
        bad, relevant = predicate(
            Fi[:, None, :], F[None, :, :], vi[:, None], v[None, :], tol, value_tol
        )
        res.samples += int(relevant.sum())
        nbad = int(bad.sum())
        if nbad:
            res.violations += nbad
            if res.witness is None:
                a, b = np.argwhere(bad)[0]
                res.witness = describe(start + a, b)


def _pairwise_equal(F, v, res, tol, value_tol, describe):
    """Find pairs realising the same function (within ``tol``) whose values differ.

    Rows are sorted by their first coordinate so each block of rows is only
    compared with the window of rows whose first coordinate is within ``tol``.
    """
    order = np.argsort(F[:, 0], kind="stable")
    Fs, vs = F[order], v[order]
    key = Fs[:, 0]
    lo = np.searchsorted(key, key - tol, side="left")
    hi = np.searchsorted(key, key + tol, side="right")
    for start in range(0, len(Fs), _CHUNK):
        stop = min(start + _CHUNK, len(Fs))
        a, b = lo[start], hi[stop - 1]
        Fi, Fw = Fs[start:stop], Fs[a:b]
        same = np.abs(Fi[:, None, :] - Fw[None, :, :]).max(axis=2) <= tol
        bad = same & (np.abs(vs[start:stop, None] - vs[None, a:b]) > value_tol)
        res.samples += int(same.sum())
        nbad = int(bad.sum())
        if nbad:
            res.violations += nbad
            if res.witness is None:
                i, j = np.argwhere(bad)[0]
                res.witness = describe(order[start + i], order[a + j])


def _ordered(Fi, Fj, vi, vj, tol, value_tol):
    below = (Fi <= Fj + tol).all(axis=2)
    return below & (vi > vj + value_tol), below


def well_definedness_check(S, denominator=DEFAULT_DENOMINATOR, tol=TOL, value_tol=None):
    """Elements realising the same function (within ``tol``) must get the same
    value (within ``value_tol``, default ``tol``)."""
    value_tol = tol if value_tol is None else value_tol
    F, d, c, idx = element_grid(S, denominator)
    v = values_of(S, d, c, idx)
    report = AxiomReport(f"subspace(k={S.k}) grid 1/{denominator}")
    res = report.add("well_defined")
    _pairwise_equal(F, v, res, tol, value_tol, _describe(F, d, c, idx, v))
    return report


def _describe(F, d, c, idx, v):
    def describe(a, b):
        return {
            "first": {"d": float(d[a]), "c": float(c[a]), "i": int(idx[a]),
                      "f": F[a].tolist(), "value": float(v[a])},
            "second": {"d": float(d[b]), "c": float(c[b]), "i": int(idx[b]),
                       "f": F[b].tolist(), "value": float(v[b])},
        }

    return describe


def axiom_sweep(S, denominator=DEFAULT_DENOMINATOR, tol=TOL, value_tol=None):
    """Exhaustive grid verification of the functional on ``S``.

    Values come from resolving each realised function (the evaluator path),
    so the sweep also exercises membership. Checks well-definedness,
    monotonicity over all comparable pairs, and max/product homogeneity for
    every grid constant. ``tol`` is used for function equality and order,
    ``value_tol`` (default ``tol``) for comparing functional values.
    """
    value_tol = tol if value_tol is None else value_tol
    F, d0, c0, i0 = element_grid(S, denominator)
    d, c, idx = resolve_many(S, F, tol)
    report = AxiomReport(f"subspace(k={S.k}) grid 1/{denominator}")

    closed = report.add("membership")
    missing = np.flatnonzero(idx == -2)
    closed.samples = len(F)
    closed.violations = len(missing)
    if len(missing):
        closed.witness = {"f": F[missing[0]].tolist()}
    v = values_of(S, d, c, idx)

    formula = values_of(S, d0, c0, i0)
    wd = report.add("well_defined")
    _pairwise_equal(F, formula, wd, tol, value_tol, _describe(F, d0, c0, i0, formula))

    mono = report.add("monotone")
    _pairwise(F, v, _ordered, mono, tol, value_tol, _describe(F, d, c, idx, v))

    for name, combine in (("vee_homogeneous", np.maximum), (f"star_homogeneous[{PRODUCT.kind}]", np.multiply)):
        res = report.add(name)
        for k in value_grid(denominator):
            Fk = combine(k, F)
            dk, ck, ik = resolve_many(S, Fk, tol)
            vk = values_of(S, dk, ck, ik)
            expect = combine(k, v)
            ok = (ik != -2) & (np.abs(vk - expect) <= value_tol)
            res.samples += len(F)
            nbad = int((~ok).sum())
            res.violations += nbad
            if nbad and res.witness is None:
                j = int(np.flatnonzero(~ok)[0])
                res.witness = {"k": k, "f": F[j].tolist(), "I(k o f)": float(vk[j]),
                               "k o I(f)": float(expect[j]), "in_domain": bool(ik[j] != -2)}
    return report


def extension_value(S, phi, denominator=DEFAULT_DENOMINATOR):
    """Grid infimum of ``I(psi) / s`` over grid elements ``psi >= s * phi``.

    For a fixed element the ratio decreases in ``s``, so ``s`` is taken as the
    largest feasible scale ``min(1, min_x psi(x) / phi(x))`` exactly; only the
    element coefficients are gridded. The result is an upper bound on the true
    infimum that can only decrease under grid refinement.
    """
    phi = np.asarray(fnvec(phi, S.n))
    if denominator < 1:
        raise InputError("degenerate grid")
    pos = phi > 0
    if not pos.any():
        return 0.0
    F, d, c, idx = element_grid(S, denominator)
    v = values_of(S, d, c, idx)
    scale = np.minimum(1.0, (F[:, pos] / phi[pos]).min(axis=1))
    feasible = scale > 0
    if not feasible.any():
        return 1.0
    ratio = v[feasible] / scale[feasible]
    return float(np.clip(ratio.min(), 0.0, 1.0))


def extend_one_step(S, phi, denominator=DEFAULT_DENOMINATOR, refine=True, tol=TOL):
    """Append ``phi`` as a generator with value ``a = inf H``; no-op if ``phi`` is in ``S``."""
    if denominator < 2:
        raise InputError("degenerate grid")
    phi = fnvec(phi, S.n)
    if resolve(S, phi, tol) is not None:
        return S
    a = extension_value(S, phi, denominator)
    if refine:
        fine = extension_value(S, phi, 2 * denominator)
        if a - fine > 1.0 / denominator:
            log.warning("extension value moved from %.6f to %.6f under refinement", a, fine)
        a = fine
    return GenSubspace(S.n, S.generators + (phi,), S.m + (a,))


def random_function(n, rng, denominator=DEFAULT_DENOMINATOR):
    grid = value_grid(denominator)
    return tuple(rng.choice(grid) for _ in range(n))


def run_counterexample(denominator=DEFAULT_DENOMINATOR, seed=0, samples=500, tol=TOL):
    """Full verification of the three-point counterexample.

    Expected outcome: monotone, max-homogeneous and product-homogeneous on the
    exhaustive grid; comonotone maxitivity fails at ``phi1, phi2``; the
    literal variant is not well defined.
    """
    from .comonotone import is_comonotone
    from .functional import (
        COMONOTONE_MAXITIVE,
        MONOTONE,
        VEE_HOMOGENEOUS,
        check_axioms,
        star_homogeneous,
    )

    S, mu = counterexample_functional()
    phi1, phi2, phi3 = S.generators
    values = {"mu(phi1)": mu(phi1), "mu(phi2)": mu(phi2), "mu(phi1 v phi2)": mu(join(phi1, phi2))}
    comon = is_comonotone(phi1, phi2)
    sweep = axiom_sweep(S, denominator, tol)
    sampled = check_axioms(
        mu, [MONOTONE, VEE_HOMOGENEOUS, star_homogeneous(PRODUCT), COMONOTONE_MAXITIVE],
        seed=seed, samples=samples, tol=tol,
    )
    literal = well_definedness_check(literal_subspace(), denominator, tol)
    maxitive_fails = (
        abs(values["mu(phi1)"] - 1 / 3) <= tol
        and abs(values["mu(phi2)"] - 1 / 3) <= tol
        and abs(values["mu(phi1 v phi2)"] - 1 / 2) <= tol
        and comon
    )
    expected = (
        maxitive_fails
        and sweep.passed
        and sampled.verdict(COMONOTONE_MAXITIVE.key).value == "fail"
        and all(sampled.verdict(a.key).value == "pass"
                for a in (MONOTONE, VEE_HOMOGENEOUS, star_homogeneous(PRODUCT)))
        and literal.verdict("well_defined").value == "fail"
    )
    return {
        "subspace": S.to_json(),
        "values": values,
        "comonotone(phi1, phi2)": comon,
        "comonotone_maxitivity_fails": maxitive_fails,
        "sweep": sweep.to_dict(),
        "sampled": sampled.to_dict(),
        "literal_well_definedness": literal.to_dict(),
        "as_expected": expected,
    }

"""Sampled verification of axiom systems for functionals on ``[0,1]^n``.

Verdicts are three-valued: an axiom with no usable sample (every candidate
fell outside a partial domain) is ``inconclusive``, never ``pass``.
"""

import random
from dataclasses import dataclass
from typing import Optional

from ._common import TOL, constant, join, leq, meet, value_grid
from .capacity import characteristic
from .comonotone import is_comonotone, random_comonotone_pair, squeeze_witness
from .report import AxiomReport
from .tnorm import TNorm

DEFAULT_SAMPLES = 500
DEFAULT_DENOMINATOR = 20


@dataclass(frozen=True)
class Axiom:
    name: str
    op: Optional[TNorm] = None

    @property
    def key(self):
        return f"{self.name}[{self.op.kind}]" if self.op is not None else self.name

    def __str__(self):
        return self.key


NORMED = Axiom("normed")
MONOTONE = Axiom("monotone")
COMONOTONE_MAXITIVE = Axiom("comonotone_maxitive")
VEE_HOMOGENEOUS = Axiom("vee_homogeneous")
WEDGE_HOMOGENEOUS = Axiom("wedge_homogeneous")


def star_homogeneous(op):
    return Axiom("star_homogeneous", op)


def star_char_homogeneous(op):
    return Axiom("star_char_homogeneous", op)


def _vec(f):
    return [float(v) for v in f]


class _Sampler:
    def __init__(self, I, grid, rng):
        self.I = I
        self.grid = grid
        self.rng = rng

    def uniform(self):
        return tuple(self.rng.choice(self.grid) for _ in range(self.I.n))

    def draw(self):
        if self.I.sampler is not None:
            return tuple(self.I.sampler(self.rng))
        return self.uniform()

    def const(self):
        return self.rng.choice(self.grid)


def _evaluate(I, *fs):
    """Evaluate ``I`` on every function, or return None if any is out of domain."""
    if not all(I.in_domain(f) for f in fs):
        return None
    return [I(f) for f in fs]


def _check_normed(I, res, tol, **_):
    one = constant(1.0, I.n)
    vals = _evaluate(I, one)
    if vals is not None:
        res.record(abs(vals[0] - 1.0) <= tol, {"f": _vec(one), "I(f)": vals[0]})


def _check_monotone(I, res, tol, samp, samples):
    def test(f, g):
        vals = _evaluate(I, f, g)
        if vals is None:
            return
        res.record(
            vals[0] <= vals[1] + tol,
            {"f": _vec(f), "g": _vec(g), "I(f)": vals[0], "I(g)": vals[1]},
        )

    for f in I.anchors:
        for g in I.anchors:
            if f != g and leq(f, g, 0.0):
                test(f, g)
    for _ in range(samples):
        g = samp.draw()
        f = meet(g, samp.uniform())
        if not I.in_domain(f):
            f = samp.draw()
            if leq(g, f, 0.0):
                f, g = g, f
            elif not leq(f, g, 0.0):
                continue
        test(f, g)


def _check_comonotone_maxitive(I, res, tol, samp, samples):
    def test(f, g):
        fg = join(f, g)
        vals = _evaluate(I, f, g, fg)
        if vals is None:
            return
        rhs = max(vals[0], vals[1])
        res.record(
            abs(vals[2] - rhs) <= tol,
            {
                "f": _vec(f),
                "g": _vec(g),
                "I(f)": vals[0],
                "I(g)": vals[1],
                "I(f v g)": vals[2],
                "I(f) v I(g)": rhs,
            },
        )

    anchors = I.anchors
    for i, f in enumerate(anchors):
        for g in anchors[i + 1:]:
            if is_comonotone(f, g):
                test(f, g)
    for _ in range(samples):
        if I.sampler is None:
            f, g = random_comonotone_pair(I.n, samp.grid, samp.rng)
        else:
            f, g = samp.draw(), samp.draw()
            if not is_comonotone(f, g):
                continue
        test(f, g)


def _homogeneity(combine, label):
    def check(I, res, tol, samp, samples):
        def test(c, f):
            cf = tuple(combine(c, v) for v in f)
            vals = _evaluate(I, f, cf)
            if vals is None:
                return
            rhs = combine(c, vals[0])
            res.record(
                abs(vals[1] - rhs) <= tol,
                {"c": c, "f": _vec(f), f"I(c {label} f)": vals[1], f"c {label} I(f)": rhs},
            )

        for f in I.anchors:
            for c in samp.grid:
                test(c, f)
        for _ in range(samples):
            test(samp.const(), samp.draw())

    return check


def _check_star_char(op):
    def check(I, res, tol, samp, samples):
        for mask in range(1 << I.n):
            chi = characteristic(mask, I.n)
            for c in samp.grid:
                cf = tuple(op.func(c, v) for v in chi)
                vals = _evaluate(I, chi, cf)
                if vals is None:
                    continue
                rhs = op.func(c, vals[0])
                res.record(
                    abs(vals[1] - rhs) <= tol,
                    {"c": c, "A": mask, "I(c * chi_A)": vals[1], "c * I(chi_A)": rhs},
                )

    return check


def _checker(axiom):
    if axiom.name == "normed":
        return _check_normed
    if axiom.name == "monotone":
        return _check_monotone
    if axiom.name == "comonotone_maxitive":
        return _check_comonotone_maxitive
    if axiom.name == "vee_homogeneous":
        return _homogeneity(max, "v")
    if axiom.name == "wedge_homogeneous":
        return _homogeneity(min, "^")
    if axiom.name == "star_homogeneous":
        return _homogeneity(axiom.op.func, "*")
    if axiom.name == "star_char_homogeneous":
        return _check_star_char(axiom.op)
    raise ValueError(f"unknown axiom {axiom!r}")


def check_axioms(
    I,
    axioms,
    denominator=DEFAULT_DENOMINATOR,
    seed=0,
    samples=DEFAULT_SAMPLES,
    tol=TOL,
):
    """Sample-check each requested axiom on ``I`` and return an AxiomReport.

    Functions are drawn from the value grid ``{k/denominator}`` (or from
    ``I.sampler`` for partial-domain functionals). Each axiom gets its own RNG
    seeded from ``(seed, axiom)``, so verdicts do not depend on which other
    axioms were requested.
    """
    grid = value_grid(denominator)
    report = AxiomReport(I.label or "functional")
    for axiom in axioms:
        rng = random.Random(f"{seed}:{axiom.key}")
        res = report.add(axiom.key)
        _checker(axiom)(I, res, tol, samp=_Sampler(I, grid, rng), samples=samples)
    return report


def lemma_mon_demo(I, denominator=DEFAULT_DENOMINATOR, seed=0, samples=DEFAULT_SAMPLES, tol=TOL):
    """Relate max/min-homogeneity to monotonicity on samples.

    If a monotonicity violation ``f <= g`` with ``I(f) = a > b = I(g)`` turns
    up, the squeeze function ``xi`` for levels ``b < c < d < a`` is built. Under
    min-homogeneity ``I(xi)`` would be forced to ``b`` and under
    max-homogeneity to ``a``; both forced values and the actual ``I(xi)`` are
    reported.
    """
    report = check_axioms(
        I, [VEE_HOMOGENEOUS, WEDGE_HOMOGENEOUS, MONOTONE], denominator, seed, samples, tol
    )
    homogeneous = report[VEE_HOMOGENEOUS.key].verdict.value == "pass" and (
        report[WEDGE_HOMOGENEOUS.key].verdict.value == "pass"
    )
    monotone = report[MONOTONE.key].verdict.value == "pass"
    out = {
        "axioms": report.to_dict()["axioms"],
        "two_homogeneous": homogeneous,
        "monotone": monotone,
        "consistent": monotone or not homogeneous,
    }
    witness = report[MONOTONE.key].witness
    if witness is not None:
        psi, phi = tuple(witness["f"]), tuple(witness["g"])
        a, b = witness["I(f)"], witness["I(g)"]
        c, d = b + (a - b) / 3, b + 2 * (a - b) / 3
        xi = squeeze_witness(phi, psi, c, d)
        n = len(xi)
        out["squeeze"] = {
            "phi": _vec(phi),
            "psi": _vec(psi),
            "a": a,
            "b": b,
            "c": c,
            "d": d,
            "xi": _vec(xi),
            "I(xi)": I(xi),
            "I(xi ^ c)": I(meet(xi, constant(c, n))),
            "I(phi ^ c)": I(meet(phi, constant(c, n))),
            "I(xi v d)": I(join(xi, constant(d, n))),
            "I(psi v d)": I(join(psi, constant(d, n))),
            "forced_by_wedge": b,
            "forced_by_vee": a,
        }
    return out

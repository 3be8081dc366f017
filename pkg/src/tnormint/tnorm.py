"""Continuous t-norms and a sampled axiom checker."""

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable

from ._common import TOL, InputError, value_grid
from .report import AxiomReport


def _minimum(a, b):
    return a if a <= b else b


def _product(a, b):
    return a * b


def _lukasiewicz(a, b):
    # keep the unit law exact in floating point
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    s = a + b - 1.0
    return s if s > 0.0 else 0.0


@dataclass(frozen=True)
class TNorm:
    """A binary operation on [0, 1] used as a t-norm.

    Built-ins are ``minimum``, ``product`` and ``lukasiewicz``. Anything else is
    ``custom`` and should be run through :func:`check_tnorm_axioms` before use.
    """

    kind: str
    func: Callable[[float, float], float]

    def __call__(self, a, b):
        if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise InputError(f"t-norm arguments must lie in [0, 1], got ({a}, {b})")
        return self.func(a, b)

    @property
    def builtin(self):
        return self.kind in BUILTINS

    def __repr__(self):
        return f"TNorm({self.kind})"


MINIMUM = TNorm("minimum", _minimum)
PRODUCT = TNorm("product", _product)
LUKASIEWICZ = TNorm("lukasiewicz", _lukasiewicz)

BUILTINS = {t.kind: t for t in (MINIMUM, PRODUCT, LUKASIEWICZ)}


def get_tnorm(name):
    try:
        return BUILTINS[name]
    except KeyError:
        raise InputError(
            f"unknown t-norm {name!r}; choose from {sorted(BUILTINS)}"
        ) from None


def custom(func, name="custom"):
    return TNorm(name if name not in BUILTINS else "custom", func)


def apply(op, a, b):
    return op(a, b)


def check_tnorm_axioms(op, denominator=20, tol=TOL):
    """Exhaustively test the t-norm axioms on the grid ``{k/denominator}``.

    Besides the four defining axioms this checks distributivity over max and
    records a sampled continuity modulus, i.e. the largest jump between
    grid-adjacent arguments. The modulus is informational; continuity cannot be
    decided from samples.
    """
    if denominator < 9:
        raise InputError("grid must split [0, 1] into at least 10 points")
    grid = value_grid(denominator)
    f = op.func
    table = [[f(a, b) for b in grid] for a in grid]
    report = AxiomReport(f"tnorm:{op.kind}")

    rng = report.add("range")
    for (i, a), (j, b) in cartesian(enumerate(grid), repeat=2):
        v = table[i][j]
        rng.record(-tol <= v <= 1 + tol, {"a": a, "b": b, "value": v})

    unit = report.add("unit")
    for i, s in enumerate(grid):
        left, right = table[-1][i], table[i][-1]
        unit.record(
            abs(left - s) <= tol and abs(right - s) <= tol,
            {"a": s, "b": 1.0, "value": right, "expected": s},
        )

    comm = report.add("commutativity")
    for i, j in cartesian(range(len(grid)), repeat=2):
        if i < j:
            comm.record(
                abs(table[i][j] - table[j][i]) <= tol,
                {"a": grid[i], "b": grid[j], "ab": table[i][j], "ba": table[j][i]},
            )

    assoc = report.add("associativity")
    for a, b, c in cartesian(grid, repeat=3):
        lhs, rhs = f(a, f(b, c)), f(f(a, b), c)
        assoc.record(
            abs(lhs - rhs) <= tol,
            {"a": a, "b": b, "c": c, "a(bc)": lhs, "(ab)c": rhs},
        )

    mono = report.add("monotonicity")
    m = len(grid)
    for i, j in cartesian(range(m), repeat=2):
        v = table[i][j]
        if i + 1 < m:
            mono.record(
                v <= table[i + 1][j] + tol,
                {"a": grid[i], "a'": grid[i + 1], "b": grid[j]},
            )
        if j + 1 < m:
            mono.record(
                v <= table[i][j + 1] + tol,
                {"a": grid[i], "b": grid[j], "b'": grid[j + 1]},
            )

    dist = report.add("distributivity")
    for t, s, l in cartesian(grid, repeat=3):
        lhs = f(max(t, s), l)
        rhs = max(f(t, l), f(s, l))
        dist.record(
            abs(lhs - rhs) <= tol,
            {"t": t, "s": s, "l": l, "lhs": lhs, "rhs": rhs},
        )

    cont = report.add("continuity")
    modulus = 0.0
    for i, j in cartesian(range(m), repeat=2):
        if i + 1 < m:
            modulus = max(modulus, abs(table[i + 1][j] - table[i][j]))
        if j + 1 < m:
            modulus = max(modulus, abs(table[i][j + 1] - table[i][j]))
    # a continuous operation on [0,1]^2 is uniformly continuous; on the grid a
    # jump larger than a few grid steps is the sampled signature of a break
    step = 1.0 / denominator
    cont.info["modulus"] = modulus
    cont.info["step"] = step
    cont.record(modulus <= 2 * step + tol, {"modulus": modulus, "step": step})
    return report

"""t-normed integrals on finite spaces and functionals ``[0,1]^n -> [0,1]``."""

from dataclasses import dataclass, field
from typing import Callable, Optional

from ._common import InputError, fnvec
from .capacity import level_mask, validate


@dataclass(frozen=True)
class Functional:
    """A black-box evaluator on functions over ``n`` points.

    ``domain`` restricts where the evaluator may be called (total when None).
    ``sampler(rng)`` draws in-domain functions for sampled axiom checks and
    ``anchors`` are functions that the checks always try first.
    """

    evaluator: Callable
    n: int
    domain: Optional[Callable] = None
    label: str = ""
    sampler: Optional[Callable] = None
    anchors: tuple = field(default=())

    def __call__(self, f):
        return self.evaluator(f)

    def in_domain(self, f):
        return self.domain is None or bool(self.domain(f))

    @property
    def total(self):
        return self.domain is None


def _check_dims(nu, f):
    f = fnvec(f)
    if len(f) != nu.n:
        raise InputError(f"function has {len(f)} points, capacity has {nu.n}")
    return f


def tnormed_integral(nu, f, op):
    """Exact ``max_t op(nu(f_t), t)``.

    ``nu(f_t)`` is a step function of ``t`` that only changes right after a
    value of ``f``, and ``op`` is monotone, so the sup over ``[0, 1]`` is
    attained on the value set of ``f`` (``t = 0`` contributes 0).
    """
    f = _check_dims(nu, f)
    vals, func = nu.values, op.func
    best = 0.0
    mask = 0
    # sweep values top-down; the level set grows by the points at each value
    order = sorted(range(len(f)), key=f.__getitem__, reverse=True)
    for pos, i in enumerate(order):
        mask |= 1 << i
        t = f[i]
        if pos + 1 < len(order) and f[order[pos + 1]] == t:
            continue
        v = func(vals[mask], t)
        if v > best:
            best = v
    return best


def tnormed_integral_grid(nu, f, op, step):
    """Oracle: the same max taken over ``t`` in ``{0, step, 2 step, ..., 1}``."""
    if not 0.0 < step <= 0.1:
        raise InputError(f"grid step must lie in (0, 0.1], got {step}")
    f = _check_dims(nu, f)
    vals = nu.values
    count = int(round(1.0 / step))
    ts = [min(1.0, k * step) for k in range(count + 1)]
    if ts[-1] < 1.0:
        ts.append(1.0)
    return max(op.func(vals[level_mask(f, t)], t) for t in ts)


def sugeno_integral(nu, f):
    """Classical Sugeno integral, written independently of the t-norm path."""
    f = _check_dims(nu, f)
    return max((min(nu.values[level_mask(f, t)], t) for t in set(f)), default=0.0)


def integral_functional(nu, op):
    report = validate(nu)
    if not report.passed:
        raise InputError(f"invalid capacity: {report.failures()}")
    return Functional(
        evaluator=lambda f: tnormed_integral(nu, f, op),
        n=nu.n,
        label=f"integral[{op.kind}] of capacity {list(nu.values)}",
    )

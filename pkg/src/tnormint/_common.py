"""Shared primitives: errors, tolerances, value grids and function vectors."""

from fractions import Fraction

TOL = 1e-9


class InputError(ValueError):
    """Malformed or out-of-range input."""


class PreconditionError(ValueError):
    """An operation was called outside its documented precondition."""


def value_grid(denominator):
    """Return ``[0, 1/den, ..., 1]`` as floats."""
    den = int(denominator)
    if den < 1:
        raise InputError(f"grid denominator must be >= 1, got {denominator!r}")
    return [k / den for k in range(den + 1)]


def fnvec(values, n=None):
    """Validate a function on a finite point space and return it as a tuple."""
    try:
        out = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise InputError(f"not a numeric vector: {values!r}") from exc
    if not out:
        raise InputError("function vector must have at least one point")
    if n is not None and len(out) != n:
        raise InputError(f"expected {n} values, got {len(out)}")
    for v in out:
        if not 0.0 <= v <= 1.0:
            raise InputError(f"function value {v} outside [0, 1]")
    return out


def constant(c, n):
    return (float(c),) * n


def join(f, g):
    return tuple(max(a, b) for a, b in zip(f, g))


def meet(f, g):
    return tuple(min(a, b) for a, b in zip(f, g))


def leq(f, g, tol=TOL):
    """Pointwise ``f <= g`` up to ``tol``."""
    return all(a <= b + tol for a, b in zip(f, g))


def close(f, g, tol=TOL):
    return len(f) == len(g) and all(abs(a - b) <= tol for a, b in zip(f, g))


def as_fraction(x, max_den=1000):
    """Pretty rational rendering of a float, e.g. ``0.5 -> '1/2'``."""
    return str(Fraction(x).limit_denominator(max_den))

"""Capacities on the subset lattice of a finite point space.

Subsets of ``{0, ..., n-1}`` are encoded as bitmasks: point ``i`` belongs to
the subset ``m`` iff ``m >> i & 1``. A capacity stores one value per mask.
"""

import random
from dataclasses import dataclass

from ._common import TOL, InputError, fnvec
from .report import AxiomReport

MAX_ENUM_N = 4
MAX_RANDOM_N = 12


def to_mask(subset, n=None):
    """Convert an iterable of point indices (or an int mask) to a bitmask."""
    if isinstance(subset, int):
        mask = subset
        if mask < 0 or (n is not None and mask >= 1 << n):
            raise InputError(f"subset mask {mask} out of range for n={n}")
        return mask
    mask = 0
    for i in subset:
        i = int(i)
        if i < 0 or (n is not None and i >= n):
            raise InputError(f"point index {i} out of range for n={n}")
        mask |= 1 << i
    return mask


def from_mask(mask, n):
    return tuple(i for i in range(n) if mask >> i & 1)


@dataclass(frozen=True)
class Capacity:
    n: int
    values: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InputError("capacity needs at least one point")
        vals = tuple(float(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise InputError(
                f"capacity on {self.n} points needs {1 << self.n} values, got {len(vals)}"
            )
        for v in vals:
            if not 0.0 <= v <= 1.0:
                raise InputError(f"capacity value {v} outside [0, 1]")
        object.__setattr__(self, "values", vals)

    def __call__(self, subset):
        return self.values[to_mask(subset, self.n)]

    @property
    def full(self):
        return (1 << self.n) - 1

    @classmethod
    def from_mapping(cls, n, mapping):
        """Build from ``{subset: value}`` where subsets are index iterables or masks."""
        vals = [None] * (1 << n)
        for subset, v in mapping.items():
            vals[to_mask(subset, n)] = v
        missing = [from_mask(m, n) for m, v in enumerate(vals) if v is None]
        if missing:
            raise InputError(f"missing capacity values for subsets {missing}")
        return cls(n, tuple(vals))

    @classmethod
    def from_json(cls, data):
        try:
            n = int(data["n"])
            entries = data["values"]
            mapping = {}
            for entry in entries:
                mask = to_mask(entry["subset"], n)
                if mask in mapping:
                    raise InputError(f"duplicate subset {entry['subset']}")
                mapping[mask] = entry["value"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed capacity JSON: {exc}") from exc
        return cls.from_mapping(n, mapping)

    def to_json(self):
        return {
            "n": self.n,
            "values": [
                {"subset": list(from_mask(m, self.n)), "value": v}
                for m, v in enumerate(self.values)
            ],
        }


def validate(nu, tol=TOL):
    """Check boundary conditions and monotonicity on covering pairs."""
    report = AxiomReport(f"capacity(n={nu.n})")
    boundary = report.add("boundary")
    boundary.record(
        abs(nu.values[0]) <= tol, {"subset": [], "value": nu.values[0], "expected": 0.0}
    )
    boundary.record(
        abs(nu.values[nu.full] - 1.0) <= tol,
        {"subset": list(range(nu.n)), "value": nu.values[nu.full], "expected": 1.0},
    )
    mono = report.add("monotonicity")
    for mask in range(1 << nu.n):
        for i in range(nu.n):
            if mask >> i & 1:
                continue
            sup = mask | 1 << i
            mono.record(
                nu.values[mask] <= nu.values[sup] + tol,
                {
                    "smaller": list(from_mask(mask, nu.n)),
                    "larger": list(from_mask(sup, nu.n)),
                    "values": [nu.values[mask], nu.values[sup]],
                },
            )
    return report


def upper_level_set(f, t):
    """Indices ``x`` with ``f(x) >= t``."""
    return frozenset(i for i, v in enumerate(f) if v >= t)


def level_mask(f, t):
    mask = 0
    for i, v in enumerate(f):
        if v >= t:
            mask |= 1 << i
    return mask


def characteristic(subset, n):
    mask = to_mask(subset, n)
    return tuple(1.0 if mask >> i & 1 else 0.0 for i in range(n))


def _check_enum_args(n, grid, limit=MAX_ENUM_N):
    if n < 1:
        raise InputError("n must be >= 1")
    if n > limit:
        raise InputError(f"limited to n <= {limit}, got {n}")
    grid = sorted(set(float(g) for g in grid))
    if not grid or grid[0] != 0.0 or grid[-1] != 1.0:
        raise InputError("value grid must contain 0 and 1")
    return grid


def enumerate_capacities(n, grid):
    """Yield every monotone grid-valued capacity on ``n`` points.

    Order is lexicographic in (subset mask, grid index): the stream matches a
    filtered ``itertools.product`` over the interior masks, with backtracking
    pruning applied as each mask is assigned.
    """
    grid = _check_enum_args(n, grid)
    full = (1 << n) - 1
    vals = [0.0] * (1 << n)
    vals[full] = 1.0

    def lower_bound(mask):
        lo = 0.0
        for i in range(n):
            if mask >> i & 1:
                lo = max(lo, vals[mask & ~(1 << i)])
        return lo

    def fill(mask):
        if mask == full:
            # X is fixed to 1; its subsets all carry grid values <= 1
            yield Capacity(n, tuple(vals))
            return
        lo = lower_bound(mask)
        for v in grid:
            if v < lo:
                continue
            vals[mask] = v
            yield from fill(mask + 1)
        vals[mask] = 0.0

    if n == 1:
        yield Capacity(1, (0.0, 1.0))
        return
    yield from fill(1)


def random_capacity(n, grid, seed):
    """Random monotone grid-valued capacity, deterministic in ``seed``.

    Masks are visited in increasing order, so every proper subset of a mask is
    already assigned; each value is drawn uniformly among the grid values not
    below the largest value of its covered subsets.
    """
    grid = _check_enum_args(n, grid, MAX_RANDOM_N)
    rng = random.Random(seed)
    full = (1 << n) - 1
    vals = [0.0] * (1 << n)
    vals[full] = 1.0
    for mask in range(1, full):
        lo = max(vals[mask & ~(1 << i)] for i in range(n) if mask >> i & 1)
        vals[mask] = rng.choice([v for v in grid if v >= lo])
    return Capacity(n, tuple(vals))


def function_from_json(data, n=None):
    try:
        values = data["values"] if isinstance(data, dict) else data
    except KeyError as exc:
        raise InputError("function JSON needs a 'values' list") from exc
    return fnvec(values, n)

"""Comonotonicity and the constructive gadgets built on it.

* :func:`monotone_chain` - comonotone steps from ``psi`` up to ``phi >= psi``,
  which is why a comonotonically maxitive functional on a finite space is
  monotone.
* :func:`level_raise` - a comonotone lift of ``phi`` that equals 1 above a level.
* :func:`squeeze_witness` - the interpolating function used to show that
  max- and min-homogeneity together force monotonicity.
"""

import random

from ._common import TOL, InputError, PreconditionError, fnvec, leq


def is_comonotone(f, g, tol=0.0):
    if len(f) != len(g):
        raise InputError(f"length mismatch: {len(f)} vs {len(g)}")
    n = len(f)
    for i in range(n):
        for j in range(i + 1, n):
            if (f[i] - f[j]) * (g[i] - g[j]) < -tol:
                return False
    return True


def random_comonotone_pair(n, grid, seed):
    """Two functions nondecreasing along one shared random ordering of the points.

    ``seed`` may also be a ``random.Random`` instance, which is then advanced.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pair = []
    for _ in range(2):
        vals = sorted(rng.choice(grid) for _ in range(n))
        f = [0.0] * n
        for rank, point in enumerate(order):
            f[point] = vals[rank]
        pair.append(tuple(f))
    return pair[0], pair[1]


def monotone_chain(psi, phi, tol=TOL):
    """Return ``[psi_1, ..., psi_{n-1}]`` with ``psi <= psi_1 <= ... <= phi``.

    Points are sorted so that ``phi`` is nondecreasing (stable sort, ties by
    index). In sorted coordinates ``psi_1 = psi v psi(x_1)`` and step ``i+1``
    keeps the first ``i`` coordinates and joins the rest with
    ``psi_i(x_{i+1})``. Results are returned in the original indexing.
    """
    psi, phi = fnvec(psi), fnvec(phi, len(psi))
    if not leq(psi, phi, tol):
        raise PreconditionError("monotone_chain requires psi <= phi pointwise")
    n = len(psi)
    if n == 1:
        return []
    order = sorted(range(n), key=lambda i: (phi[i], i))
    cur = [psi[i] for i in order]
    head = cur[0]
    cur = [max(v, head) for v in cur]
    steps = [list(cur)]
    for i in range(1, n - 1):
        pivot = cur[i]
        cur = cur[:i] + [max(pivot, v) for v in cur[i:]]
        steps.append(list(cur))
    chain = []
    for s in steps:
        out = [0.0] * n
        for rank, point in enumerate(order):
            out[point] = s[rank]
        chain.append(tuple(out))
    return chain


def level_raise(phi, delta, xi):
    """Comonotone lift of ``phi``: unchanged up to ``delta``, equal to 1 from ``xi``.

    On ``[delta, xi]`` the value is ``kappa(t) * t`` with ``kappa`` affine,
    ``kappa(delta) = 1`` and ``kappa(xi) = 1/xi``, which keeps the lift
    continuous at both ends.
    """
    phi = fnvec(phi)
    if not 0.0 <= delta < xi < 1.0:
        raise PreconditionError(f"need 0 <= delta < xi < 1, got delta={delta}, xi={xi}")
    slope = (1.0 / xi - 1.0) / (xi - delta)

    def h(t):
        if t <= delta:
            return t
        if t >= xi:
            return 1.0
        return min(1.0, (1.0 + (t - delta) * slope) * t)

    return tuple(h(t) for t in phi)


def squeeze_witness(phi, psi, c, d, tol=TOL):
    """Function agreeing with ``phi`` below ``c`` and with ``psi`` above ``d``.

    Requires ``psi <= phi`` and ``c < d``; in between the value is
    ``min(phi(x), d)``, which lies in ``[c, d]``. Then exactly
    ``xi ^ c = phi ^ c`` and ``xi v d = psi v d``.
    """
    phi, psi = fnvec(phi), fnvec(psi)
    if len(phi) != len(psi):
        raise InputError("length mismatch")
    if not c < d:
        raise PreconditionError(f"need c < d, got c={c}, d={d}")
    if not leq(psi, phi, tol):
        raise PreconditionError("squeeze_witness requires psi <= phi pointwise")
    out = []
    for p, q in zip(phi, psi):
        if p <= c:
            out.append(p)
        elif q >= d:
            out.append(q)
        else:
            out.append(min(p, d))
    return tuple(out)

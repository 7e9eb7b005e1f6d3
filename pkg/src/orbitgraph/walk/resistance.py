"""Effective resistance from the root to shorted boundary spheres of a ball,
solved with preconditioned conjugate gradients on the graph Laplacian.

Unit conductance per edge copy; parallel edges add conductance, loops carry
no current and are ignored.  Shorting the sphere at radius r merges it into a
single terminal, so R_eff(r) is nondecreasing in r (Rayleigh monotonicity of
the exhaustion), which doubles as a solver sanity check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import LinearOperator, cg

from ..errors import SolverError
from ..graphs import Ball


@dataclass(frozen=True)
class ResistanceReport:
    radii: tuple
    r_eff: tuple
    residuals: tuple

    def csv(self) -> str:
        lines = ["radius,r_eff,residual"]
        for r, v, res in zip(self.radii, self.r_eff, self.residuals):
            lines.append(f"{r},{v!r},{res!r}")
        return "\n".join(lines) + "\n"


def _solve_radius(ball: Ball, radius: int, tol: float, maxiter: int):
    keep = {v: d for v, d in ball.dist.items() if d <= radius}
    inner = sorted(v for v, d in keep.items() if d < radius)
    index = {v: i for i, v in enumerate(inner)}
    short = len(inner)  # all sphere-(radius) vertices collapse onto this node
    n = short + 1
    rows, cols, vals = [], [], []
    diag = np.zeros(n)

    def node(v):
        return index[v] if keep[v] < radius else short

    for (u, v), m in ball.edges.items():
        if u == v or u not in keep or v not in keep:
            continue
        a, b = node(u), node(v)
        if a == b:
            continue  # both ends shorted together
        rows += [a, b]
        cols += [b, a]
        vals += [-float(m), -float(m)]
        diag[a] += m
        diag[b] += m
    rows += list(range(n))
    cols += list(range(n))
    vals += list(diag)
    lap = csr_matrix((vals, (rows, cols)), shape=(n, n))

    # ground the shorted terminal: drop its row/column, inject 1 A at root
    sub = lap[:short, :short]
    b = np.zeros(short)
    b[index[ball.root]] = 1.0
    d = sub.diagonal()
    if (d <= 0).any():
        raise SolverError("isolated vertex inside the network")
    precond = LinearOperator((short, short), matvec=lambda x: x / d)
    x, info = cg(sub, b, x0=np.zeros(short), rtol=tol, atol=0.0,
                 maxiter=maxiter, M=precond)
    residual = float(np.linalg.norm(sub @ x - b))
    if info != 0:
        raise SolverError(
            f"conjugate gradients did not reach {tol} at radius {radius}; "
            f"residual {residual}")
    return float(x[index[ball.root]]), residual


def effective_resistance(ball: Ball, radii=None, tol: float = 1e-8,
                         maxiter: int | None = None) -> ResistanceReport:
    """R_eff between the root and the shorted sphere at each radius.

    Radii default to 1..ball.radius; radii whose sphere is empty (the graph
    ended earlier) are skipped.
    """
    if radii is None:
        radii = range(1, ball.radius + 1)
    radii = [int(r) for r in radii]
    if any(r < 1 or r > ball.radius for r in radii):
        raise ValueError("radii must lie in [1, ball.radius]")
    sphere_sizes = {}
    for v, d in ball.dist.items():
        sphere_sizes[d] = sphere_sizes.get(d, 0) + 1
    out_r, out_v, out_res = [], [], []
    for r in radii:
        if sphere_sizes.get(r, 0) == 0:
            continue
        cap = maxiter if maxiter is not None else max(1000, 20 * len(ball.dist))
        val, res = _solve_radius(ball, r, tol, cap)
        out_r.append(r)
        out_v.append(val)
        out_res.append(res)
    return ResistanceReport(radii=tuple(out_r), r_eff=tuple(out_v),
                            residuals=tuple(out_res))

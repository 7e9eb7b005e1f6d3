"""Breadth-first enumeration of a group orbit in hyperbolic space with
scale-aware deduplication and displacement pruning.

States are orbit points, discovered by applying generators on the left.
Dedup keys quantize the hyperboloid coordinates of a point at resolution
``dedup_tol * exp(displacement)``: the float error of coordinates of size
e^d scales the same way, while genuinely distinct points of a discrete orbit
keep a displacement-independent coordinate gap, so the scheme identifies
equal points without merging distinct ones as long as the scaled cell stays
below the minimal orbit separation.

A word is pruned once its displacement exceeds t_max + slack, where the
slack is the largest generator displacement: one more letter changes the
displacement by at most that much, so points at distance <= t_max are never
lost to pruning.  The orbit is flagged complete when BFS stops because the
frontier emptied (and not because a cap was hit).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .models import HyperbolicModel, Isometry


@dataclass
class Orbit:
    """Deduplicated orbit points in BFS (shortest-word) discovery order."""

    model: HyperbolicModel
    displacements: np.ndarray
    parents: np.ndarray  # index of the point this one was discovered from
    letters: np.ndarray  # generator index applied, -1 at the root
    word_lengths: np.ndarray
    gen_names: list
    t_max: float
    slack: float
    dedup_tol: float
    complete: bool
    provable_t: float
    theta: np.ndarray | None = None
    collisions: int = 0

    def __len__(self):
        return len(self.displacements)

    def word(self, i: int) -> list:
        """Discovery word of point i in product order: the point is
        word[0] . word[1] . ... applied to the base point."""
        out = []
        while i > 0:
            out.append(self.gen_names[self.letters[i]])
            i = int(self.parents[i])
        return out

    def count_within(self, t: float) -> int:
        return int((self.displacements <= t).sum())


def _quantized_keys(points: np.ndarray, disps: np.ndarray, tol: float):
    h = tol * np.exp(disps)
    return np.round(points / h[:, None]).astype(np.int64)


def _as_matrix_stack(generators, model):
    mats = np.stack([g.matrix if isinstance(g, Isometry) else g
                     for g in generators])
    return mats.astype(model.identity().dtype)


def symmetrize_generators(generators, model, theta=None):
    """Close a generator list under inverses, dropping duplicates.

    Returns (matrix stack, names, theta rows or None).  Duplicates (an
    involution's inverse, or a repeated generator) are detected by the
    quantized coordinates of their base-point images together with matrix
    proximity.
    """
    mats = _as_matrix_stack(generators, model)
    n_in = len(mats)
    if theta is not None:
        theta = np.atleast_2d(np.asarray(theta, dtype=np.int64))
        if len(theta) != n_in:
            raise ValueError("one theta row per input generator is required")
    all_mats = [model.canonicalize(m) for m in mats]
    names = [f"g{i}" for i in range(n_in)]
    rows = list(theta) if theta is not None else None
    for i in range(n_in):
        inv = model.canonicalize(model.inverse(all_mats[i]))
        all_mats.append(inv)
        names.append(f"g{i}~")
        if rows is not None:
            rows.append(-rows[i])
    stack = np.stack(all_mats)
    # drop exact-duplicate actions (projective equality for 2x2 models)
    keep = []
    for i in range(len(stack)):
        dup = False
        for j in keep:
            diff = min(float(np.abs(stack[i] - stack[j]).max()),
                       float(np.abs(stack[i] + stack[j]).max()))
            if diff < 1e-12:
                dup = True
                break
        if not dup:
            keep.append(i)
    stack = stack[keep]
    names = [names[i] for i in keep]
    if rows is not None:
        rows = np.stack([rows[i] for i in keep])
    return stack, names, rows


def enumerate_orbit(generators, t_max: float, model: HyperbolicModel | None = None,
                    max_word_length: int | None = None,
                    dedup_tol: float = 1e-7, theta=None,
                    max_points: int = 5_000_000,
                    drift_threshold: float = 1e-10) -> Orbit:
    """Enumerate the orbit of the base point under the generated group.

    ``generators`` may be Isometry objects (model inferred) or raw matrices
    with an explicit model; the list is auto-symmetrized.  ``theta`` gives an
    integer abelianization row per input generator; on every deduplication
    the images of the colliding words are compared, and a mismatch raises
    (a genuinely distinct pair of points fell into one dedup cell, or theta
    is not well defined on the group).
    """
    if model is None:
        if not generators or not isinstance(generators[0], Isometry):
            raise ValueError("model required unless generators are Isometry")
        model = generators[0].model
    gens, names, theta_rows = symmetrize_generators(generators, model, theta)
    gen_disp = model.displacements(gens)
    slack = float(gen_disp.max()) if len(gens) else 0.0
    prune_at = t_max + slack

    disps = [0.0]
    parents = [np.int64(-1)]
    letters = [np.int64(-1)]
    levels = [np.int64(0)]
    theta_list = [np.zeros(theta_rows.shape[1], dtype=np.int64)] if theta_rows is not None else None

    root = model.identity()[None]
    root_pt = model.points(root)
    seen = {_quantized_keys(root_pt, np.array([0.0]), dedup_tol)[0].tobytes(): 0}
    frontier = root
    frontier_idx = np.array([0], dtype=np.int64)
    complete = True
    collisions = 0
    min_frontier_disp = np.inf
    level = 0

    while len(frontier):
        level += 1
        if max_word_length is not None and level > max_word_length:
            complete = False
            min_frontier_disp = float(model.displacements(frontier).min())
            break
        cand = np.einsum("gij,fjk->fgik", gens, frontier).reshape(
            (-1,) + model.matrix_shape())
        if model.drift(cand) > drift_threshold:
            cand = model.project(cand)
        cand_parent = np.repeat(frontier_idx, len(gens))
        cand_letter = np.tile(np.arange(len(gens), dtype=np.int64),
                              len(frontier))
        pts = model.points(cand)
        dd = np.arccosh(np.clip(pts[..., -1], 1.0, None))
        keep = dd <= prune_at
        cand, cand_parent, cand_letter = cand[keep], cand_parent[keep], cand_letter[keep]
        pts, dd = pts[keep], dd[keep]
        keys = _quantized_keys(pts, dd, dedup_tol)
        new_rows = []
        for i in range(len(cand)):
            kb = keys[i].tobytes()
            idx = seen.get(kb)
            if idx is None:
                seen[kb] = len(disps)
                new_rows.append(i)
                disps.append(float(dd[i]))
                parents.append(cand_parent[i])
                letters.append(cand_letter[i])
                levels.append(np.int64(level))
                if theta_list is not None:
                    theta_list.append(theta_list[cand_parent[i]]
                                      + theta_rows[cand_letter[i]])
            elif theta_list is not None:
                incoming = theta_list[cand_parent[i]] + theta_rows[cand_letter[i]]
                if not np.array_equal(incoming, theta_list[idx]):
                    collisions += 1
                    raise ValueError(
                        "theta images disagree on a deduplicated point: "
                        f"stored {theta_list[idx].tolist()} vs incoming "
                        f"{incoming.tolist()} (letter {names[cand_letter[i]]}); "
                        "either theta is ill-defined on the group or the dedup "
                        "tolerance merged distinct points; refine dedup_tol")
        if len(disps) > max_points:
            complete = False
            min_frontier_disp = float(dd.min()) if len(dd) else t_max
            warnings.warn("orbit enumeration stopped at the point budget; "
                          "result flagged incomplete")
            break
        frontier = cand[new_rows]
        frontier_idx = np.arange(len(disps) - len(new_rows), len(disps),
                                 dtype=np.int64)

    provable_t = t_max if complete else max(0.0, min_frontier_disp - slack)
    return Orbit(model=model,
                 displacements=np.array(disps),
                 parents=np.array(parents, dtype=np.int64),
                 letters=np.array(letters, dtype=np.int64),
                 word_lengths=np.array(levels, dtype=np.int64),
                 gen_names=names, t_max=t_max, slack=slack,
                 dedup_tol=dedup_tol, complete=complete,
                 provable_t=provable_t,
                 theta=np.stack(theta_list) if theta_list is not None else None,
                 collisions=collisions)

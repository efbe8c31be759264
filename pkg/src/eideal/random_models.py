"""Seeded samplers for G(n,p) and Galton-Watson trees, plus p(n) schedules.

Every sampler is a pure function of (parameters, seed): substream seeds are
derived by hashing, so parallel trials are order-independent and replays are
bit-identical on every platform.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .graph_core import Graph

SCHEDULE_KINDS = ("sparse", "power", "complement_power", "window_sparse",
                  "window_dense", "constant")


@dataclass(frozen=True)
class ParamSchedule:
    """Symbolic edge-probability schedule p(n).

    kinds:
      sparse(lam):            p = min(lam/n, 1)
      power(c, alpha):        p = c * n**-alpha
      complement_power(c, alpha): p = 1 - c * n**-alpha
      window_sparse(lam):     p = sqrt(lam) / n**2   (so (n(1-p))^4 p^2 -> lam, p -> 0)
      window_dense(lam):      p = 1 - lam**0.25 / n  (so (n(1-p))^4 p^2 -> lam, p -> 1)
      constant(p):            p fixed
    """

    kind: str
    lam: float | None = None
    c: float | None = None
    alpha: float | None = None
    p: float | None = None

    @classmethod
    def sparse(cls, lam: float) -> "ParamSchedule":
        return cls("sparse", lam=lam)

    @classmethod
    def power(cls, c: float, alpha: float) -> "ParamSchedule":
        return cls("power", c=c, alpha=alpha)

    @classmethod
    def complement_power(cls, c: float, alpha: float) -> "ParamSchedule":
        return cls("complement_power", c=c, alpha=alpha)

    @classmethod
    def window_sparse(cls, lam: float) -> "ParamSchedule":
        return cls("window_sparse", lam=lam)

    @classmethod
    def window_dense(cls, lam: float) -> "ParamSchedule":
        return cls("window_dense", lam=lam)

    @classmethod
    def constant(cls, p: float) -> "ParamSchedule":
        return cls("constant", p=p)

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.kind in ("sparse", "window_sparse", "window_dense"):
            obj["lambda"] = self.lam
        elif self.kind in ("power", "complement_power"):
            obj["c"] = self.c
            obj["alpha"] = self.alpha
        elif self.kind == "constant":
            obj["p"] = self.p
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "ParamSchedule":
        kind = obj.get("kind")
        if kind not in SCHEDULE_KINDS:
            raise ValueError(f"unknown schedule kind {kind!r}; "
                             f"expected one of {SCHEDULE_KINDS}")
        if kind in ("sparse", "window_sparse", "window_dense"):
            if "lambda" not in obj:
                raise ValueError(f"schedule kind {kind!r} needs 'lambda'")
            return cls(kind, lam=float(obj["lambda"]))
        if kind in ("power", "complement_power"):
            if "c" not in obj or "alpha" not in obj:
                raise ValueError(f"schedule kind {kind!r} needs 'c' and 'alpha'")
            return cls(kind, c=float(obj["c"]), alpha=float(obj["alpha"]))
        if "p" not in obj:
            raise ValueError("schedule kind 'constant' needs 'p'")
        return cls(kind, p=float(obj["p"]))

    def describe(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.to_json().items())


def _clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def schedule_p(s: ParamSchedule, n: int) -> float:
    """Evaluate the schedule at graph size n, clamped to [0, 1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if s.kind == "sparse":
        return _clamp01(s.lam / n)
    if s.kind == "power":
        return _clamp01(s.c * n ** -s.alpha)
    if s.kind == "complement_power":
        return _clamp01(1.0 - s.c * n ** -s.alpha)
    if s.kind == "window_sparse":
        return _clamp01(math.sqrt(s.lam) / n ** 2)
    if s.kind == "window_dense":
        return _clamp01(1.0 - s.lam ** 0.25 / n)
    return _clamp01(s.p)


def substream_seed(*parts) -> int:
    """Stable 64-bit substream seed from a mixed tuple of ints/strings."""
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        if isinstance(part, str):
            h.update(b"s" + part.encode())
        elif isinstance(part, float) and not part.is_integer():
            h.update(b"f" + part.hex().encode())
        else:
            h.update(b"i" + int(part).to_bytes(16, "little", signed=True))
    return int.from_bytes(h.digest(), "little")


def rng_for(*parts) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(substream_seed(*parts)))


_SPARSE_GNP_THRESHOLD = 0.05


def _pair_endpoints(n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Row offsets of the lexicographic pair order: offset(u) = u*n - u(u+1)/2.
    us = np.arange(n, dtype=np.int64)
    offsets = us * n - us * (us + 1) // 2
    u = np.searchsorted(offsets, idx, side="right") - 1
    v = idx - offsets[u] + u + 1
    return u, v


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample: each of the n(n-1)/2 pairs kept with probability p.

    Sparse p uses geometric index skipping, dense p per-pair Bernoulli; the
    two paths realize the same distribution, not the same stream.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    rng = rng_for(seed)
    m = n * (n - 1) // 2
    adj = [0] * n
    if m == 0 or p == 0.0:
        return Graph(n, tuple(adj))
    if p == 1.0:
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    if p < _SPARSE_GNP_THRESHOLD:
        chunks = []
        pos = -1
        while True:
            expect = max(16, int((m - pos) * p * 1.3) + 16)
            steps = rng.geometric(p, size=expect)
            idx = pos + np.cumsum(steps)
            keep = idx[idx < m]
            chunks.append(keep)
            if len(keep) < len(idx):
                break
            pos = int(idx[-1])
        hits = np.concatenate(chunks)
        if len(hits):
            us, vs = _pair_endpoints(n, hits)
            for u, v in zip(us.tolist(), vs.tolist()):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return Graph(n, tuple(adj))
    # Dense path: vectorized Bernoulli over the full upper triangle, packed
    # into bitmask rows via numpy.
    flat = rng.random(m) < p
    mat = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    mat[iu] = flat
    mat |= mat.T
    packed = np.packbits(mat, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(packed[v].tobytes(), "little") for v in range(n))
    return Graph(n, rows)


@dataclass(frozen=True)
class GwSample:
    """A sampled Galton-Watson tree; censored when the size cap was hit."""

    tree: Graph
    censored: bool

    @property
    def size(self) -> int:
        return self.tree.n


def sample_gw_tree(lam: float, cap: int, seed: int) -> GwSample:
    """Breadth-first Galton-Watson tree with Poisson(lam) offspring.

    Generation stops at extinction or when adding a child would exceed
    ``cap`` vertices; the latter sets the censored flag and consumers must
    exclude (and count) the sample.
    """
    if lam < 0:
        raise ValueError("offspring rate must be >= 0")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    rng = rng_for(seed)
    parents = [0]  # parent of vertex i (root's entry unused)
    count = 1
    frontier = [0]
    censored = False
    while frontier and not censored:
        offspring = rng.poisson(lam, size=len(frontier))
        next_frontier = []
        for v, k in zip(frontier, offspring.tolist()):
            for _ in range(k):
                if count >= cap:
                    censored = True
                    break
                parents.append(v)
                next_frontier.append(count)
                count += 1
            if censored:
                break
        frontier = next_frontier
    adj = [0] * count
    for child in range(1, count):
        par = parents[child]
        adj[child] |= 1 << par
        adj[par] |= 1 << child
    return GwSample(Graph(count, tuple(adj)), censored)

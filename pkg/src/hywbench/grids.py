"""Uniform grids, sampled test functions, weighted norms, and fixture I/O.

Quadrature convention: every grid point carries the mass of the cell of width
`spacing` centered on it (a midpoint rule on the half-open interval [lo, hi)).
Grids are laid out FFT-style, points lo + j*spacing for j = 0..n-1, so that
differences of H-grid points land back on the integer lattice of the grid;
that is what lets group translations act by index shifts.

Sampled functions always store complex128 values with axes (n_1, ..., n_d, h).
The weighted norms on the full group include the modular density on H, i.e.

    ||g||_p^p = sum |g|^p * w_N(n) * Delta_G(h) * w_H(h).

Binary fixture format (one function per file):

    HYW1 <counts> <extents> <seed>\n

followed by the raw little-endian complex128 array in C order.  counts is a
comma list over axes (N axes then H), extents a comma list of lo:hi pairs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .groups import GroupExtensionModel

__all__ = [
    "Grid1D",
    "make_grids",
    "TestFunctionSpec",
    "SampledFunction",
    "sample",
    "sample_from_callable",
    "lp_norm_G",
    "save_sampled",
    "load_sampled",
    "fixture_checksum",
]


@dataclass(frozen=True)
class Grid1D:
    """n uniformly spaced points on [lo, hi), each weighted by the spacing."""

    lo: float
    hi: float
    n: int

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi) and self.hi > self.lo):
            raise ValueError("need finite extents with hi > lo")
        if self.n < 2:
            raise ValueError("need at least two grid points")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / self.n

    @property
    def nyquist(self) -> float:
        """Band edge of the sampled model; beyond it samples alias."""
        return 0.5 / self.spacing

    def points(self) -> np.ndarray:
        return self.lo + self.spacing * np.arange(self.n)

    def weights(self) -> np.ndarray:
        return np.full(self.n, self.spacing)

    @property
    def origin_index(self) -> int:
        """Index of the origin, required to be a grid point (for index shifts)."""
        idx = -self.lo / self.spacing
        j = int(round(idx))
        if abs(idx - j) > 1e-9 or not 0 <= j < self.n:
            raise ValueError("grid does not contain the origin as a point")
        return j

    def refine(self, factor: int = 2) -> "Grid1D":
        """Same extents, factor times the points (spacing divided by factor)."""
        return Grid1D(self.lo, self.hi, self.n * factor)

    def balanced_refine(self) -> "Grid1D":
        """Double the points and widen extents by sqrt(2).

        Shrinks the spacing and pushes out the truncation boundary at the same
        time, so every quadrature error source decreases at once.
        """
        s = np.sqrt(2.0)
        return Grid1D(self.lo * s, self.hi * s, self.n * 2)

    def reciprocal(self) -> "Grid1D":
        """The frequency grid (k - n/2) / (n * spacing), FFT layout."""
        return Grid1D(-self.nyquist, self.nyquist, self.n)


def make_grids(
    n_counts: Sequence[int],
    n_extents: Sequence[tuple],
    h_count: int,
    h_extent: tuple,
):
    """Build the N-axis grids and the H grid; the H grid must hold the origin."""
    if len(n_counts) != len(n_extents):
        raise ValueError("n_counts and n_extents must have equal length")
    n_grids = tuple(Grid1D(lo, hi, c) for c, (lo, hi) in zip(n_counts, n_extents))
    h_grid = Grid1D(h_extent[0], h_extent[1], h_count)
    h_grid.origin_index  # raises if misaligned
    return n_grids, h_grid


@dataclass(frozen=True)
class TestFunctionSpec:
    """Recipe for a deterministic test function.

    kind is one of:

    * "gaussian":  exp(-sum_i (n_i - c_i)^2 / (2 s_i^2)) * exp(-(t - c_h)^2 / (2 s_h^2)),
      widths broadcast from a scalar;
    * "bump": compactly supported product bump, width = support radius per axis;
    * "random-bandlimited": a Gaussian envelope times a low-frequency random
      trigonometric polynomial drawn reproducibly from `seed`.
    """

    __test__ = False  # not a pytest class, despite the name

    kind: str
    center_n: tuple = (0.0,)
    center_h: float = 0.0
    width_n: tuple = (1.0,)
    width_h: float = 1.0
    seed: int = 0
    n_modes: int = 6

    def __post_init__(self):
        if self.kind not in ("gaussian", "bump", "random-bandlimited"):
            raise ValueError(f"unknown test function kind {self.kind!r}")
        object.__setattr__(self, "center_n", tuple(float(c) for c in np.atleast_1d(self.center_n)))
        object.__setattr__(self, "width_n", tuple(float(w) for w in np.atleast_1d(self.width_n)))

    def key(self) -> str:
        return repr((self.kind, self.center_n, self.center_h, self.width_n, self.width_h, self.seed, self.n_modes))


@dataclass(frozen=True)
class SampledFunction:
    """Complex samples of a function on the (N..., H) grid, with its group model."""

    model: GroupExtensionModel
    n_grids: tuple
    h_grid: Grid1D
    values: np.ndarray
    spec: TestFunctionSpec | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        expected = tuple(g.n for g in self.n_grids) + (self.h_grid.n,)
        if v.shape != expected:
            raise ValueError(f"values shape {v.shape} does not match grids {expected}")
        if not np.all(np.isfinite(v.view(float))):
            raise ValueError("sampled values must be finite")
        object.__setattr__(self, "values", v)

    @property
    def dim_N(self) -> int:
        return len(self.n_grids)

    def n_weight_flat(self) -> np.ndarray:
        w = np.array([1.0])
        for g in self.n_grids:
            w = np.multiply.outer(w, g.weights()).ravel()
        return w

    def modular_h(self) -> np.ndarray:
        """Delta_G at every H-grid point (the Haar density against dn dt)."""
        par, mod = self.model.h_parametrization, self.model.modular_on_H
        return np.array([mod(par(t)) for t in self.h_grid.points()])

    def h_measure(self) -> np.ndarray:
        """Quadrature weights on H including the modular density."""
        return self.h_grid.weights() * self.modular_h()

    def flat_n(self) -> np.ndarray:
        """Values reshaped to (N-flat, H)."""
        return self.values.reshape(-1, self.h_grid.n)

    def boundary_mass_ratio(self) -> float:
        """Fraction of the weighted L1 mass sitting on the outermost cells."""
        absv = np.abs(self.values)
        w = self.n_weight_flat()[:, None] * self.h_measure()[None, :]
        total = float((absv.reshape(-1, self.h_grid.n) * w).sum())
        if total == 0.0:
            return 0.0
        shell = np.zeros(self.values.shape, dtype=bool)
        for ax in range(self.values.ndim):
            idx_lo = [slice(None)] * self.values.ndim
            idx_hi = [slice(None)] * self.values.ndim
            idx_lo[ax] = 0
            idx_hi[ax] = -1
            shell[tuple(idx_lo)] = True
            shell[tuple(idx_hi)] = True
        edge = float(((absv * shell).reshape(-1, self.h_grid.n) * w).sum())
        return edge / total


def _axis_profiles(spec: TestFunctionSpec, n_grids, h_grid):
    widths = np.broadcast_to(np.asarray(spec.width_n, dtype=float), (len(n_grids),))
    centers = np.broadcast_to(np.asarray(spec.center_n, dtype=float), (len(n_grids),))
    return widths, centers


def _bump(x, center, radius):
    r = (x - center) / radius
    out = np.zeros_like(x)
    inside = np.abs(r) < 1.0
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - r[inside] ** 2))
    return out


def sample(spec: TestFunctionSpec, n_grids, h_grid, model) -> SampledFunction:
    """Evaluate the test function described by spec on the grids."""
    widths, centers = _axis_profiles(spec, n_grids, h_grid)
    axes = [g.points() for g in n_grids] + [h_grid.points()]

    if spec.kind in ("gaussian", "random-bandlimited"):
        profs = [
            np.exp(-((x - c) ** 2) / (2.0 * s**2))
            for x, c, s in zip(axes[:-1], centers, widths)
        ]
        profs.append(np.exp(-((axes[-1] - spec.center_h) ** 2) / (2.0 * spec.width_h**2)))
    elif spec.kind == "bump":
        profs = [_bump(x, c, s) for x, c, s in zip(axes[:-1], centers, widths)]
        profs.append(_bump(axes[-1], spec.center_h, spec.width_h))

    env = profs[0]
    for p in profs[1:]:
        env = np.multiply.outer(env, p)
    values = env.astype(np.complex128)

    if spec.kind == "random-bandlimited":
        # Low-frequency random modulation under the Gaussian envelope.  Mode
        # numbers are kept small so the sampled model stays far inside the
        # band the dual-side quadrature can resolve.
        rng = np.random.default_rng(spec.seed)
        lengths = [g.hi - g.lo for g in n_grids] + [h_grid.hi - h_grid.lo]
        max_k = [2] * len(n_grids) + [3]
        mesh = np.meshgrid(*axes, indexing="ij")
        total = np.zeros(values.shape, dtype=np.complex128)
        for j in range(spec.n_modes):
            ks = [int(rng.integers(-m, m + 1)) for m in max_k]
            c = (rng.standard_normal() + 1j * rng.standard_normal()) * 0.7**j
            phase = np.zeros(values.shape)
            for x, k, length in zip(mesh, ks, lengths):
                phase = phase + (k / length) * x
            total += c * np.exp(2j * np.pi * phase)
        values = values * total

    return SampledFunction(model=model, n_grids=tuple(n_grids), h_grid=h_grid, values=values, spec=spec)


def sample_from_callable(fn: Callable, n_grids, h_grid, model) -> SampledFunction:
    """Sample fn(*n_coords, t) (vectorized, complex ok) on the grids."""
    axes = [g.points() for g in n_grids] + [h_grid.points()]
    mesh = np.meshgrid(*axes, indexing="ij")
    return SampledFunction(
        model=model,
        n_grids=tuple(n_grids),
        h_grid=h_grid,
        values=np.asarray(fn(*mesh), dtype=np.complex128),
    )


def lp_norm_G(g: SampledFunction, p: float) -> float:
    """Weighted L^p norm on the group: quadrature includes Delta_G(h) w_H(h)."""
    p = float(p)
    if not (np.isfinite(p) and p >= 1.0):
        raise ValueError("lp_norm_G needs a finite exponent p >= 1")
    per_h = (np.abs(g.flat_n()) ** p * g.n_weight_flat()[:, None]).sum(axis=0)
    return float((per_h @ g.h_measure()) ** (1.0 / p))


# -- fixture I/O ----------------------------------------------------------------


def _header(g: SampledFunction) -> bytes:
    counts = ",".join(str(gr.n) for gr in (*g.n_grids, g.h_grid))
    extents = ",".join(f"{gr.lo:.17g}:{gr.hi:.17g}" for gr in (*g.n_grids, g.h_grid))
    seed = g.spec.seed if g.spec is not None else 0
    return f"HYW1 {counts} {extents} {seed}\n".encode("ascii")


def save_sampled(g: SampledFunction, path) -> None:
    """Write one function: header line, then raw little-endian complex128."""
    data = np.ascontiguousarray(g.values.astype("<c16")).tobytes()
    with open(path, "wb") as fh:
        fh.write(_header(g))
        fh.write(data)


def load_sampled(path, model) -> SampledFunction:
    with open(path, "rb") as fh:
        header = fh.readline().decode("ascii").strip()
        body = fh.read()
    parts = header.split(" ")
    if len(parts) != 4 or parts[0] != "HYW1":
        raise ValueError(f"not a HYW1 fixture: header {header!r}")
    counts = [int(c) for c in parts[1].split(",")]
    extents = [tuple(float(v) for v in e.split(":")) for e in parts[2].split(",")]
    if len(counts) != len(extents) or len(counts) < 2:
        raise ValueError("malformed HYW1 header")
    grids = [Grid1D(lo, hi, c) for c, (lo, hi) in zip(counts, extents)]
    values = np.frombuffer(body, dtype="<c16")
    if values.size != int(np.prod(counts)):
        raise ValueError("HYW1 payload size does not match the header counts")
    values = values.reshape(counts).astype(np.complex128)
    return SampledFunction(
        model=model, n_grids=tuple(grids[:-1]), h_grid=grids[-1], values=values
    )


def fixture_checksum(g: SampledFunction) -> str:
    """sha256 over the serialized bytes; used to freeze generated fixtures."""
    h = hashlib.sha256()
    h.update(_header(g))
    h.update(np.ascontiguousarray(g.values.astype("<c16")).tobytes())
    return h.hexdigest()

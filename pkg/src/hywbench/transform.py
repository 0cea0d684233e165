"""The operator-valued Fourier transform on a gridded group extension.

At an induced representation with orbit parameter sigma0, the transform of a
sampled function g is the integral operator on L2 of the quotient grid with
kernel

    k(xi, gamma) = pair(g(., xi gamma^-1); xi.sigma0) * Delta(xi gamma^-1),

where pair(g(., h); omega) integrates the h-slice of g against the character
chi_omega over the N grid, and Delta is the modular function.  The exponent-q
transform appends the column factor Delta(gamma)^(1/q), the 1/q power of the
formal dimension operator (multiplication by Delta on the quotient); at
q = 2 this is exactly the correction that makes the direct-integral identity

    ||g||_2^2 = sum_sigma nu(sigma) ||k_sigma||_{S2}^2

hold with constant one on both shipped groups.

Band discipline: pair() returns 0 for frequencies beyond the per-axis band
edge of the N grids.  A uniform grid carries no information there and the
aliased value it would produce is order-one garbage, while the true value for
the shipped fixture families is below roundoff.  Pointwise character values
(induced_rep_apply) are exact evaluations, not quadratures, so no band
restriction applies to them.

Index bookkeeping: quotient translations act by index shifts, so the kernel
only ever reads g at h-differences that land back on the quotient grid;
entries whose difference falls off the grid vanish, consistent with treating
g as supported on its grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grids import Grid1D, SampledFunction
from .groups import (
    DualOrbitModel,
    DualSamplingConfig,
    GroupElement,
    GroupExtensionModel,
    character_value,
)
from .schatten import (
    WeightedKernel,
    conjugate_exponent,
    schatten_norm,
    weighted_operator_matrix,
)

__all__ = [
    "FormalDimensionOperator",
    "CharacterSlice",
    "fourier_along_N",
    "pair_rows",
    "kernel_from_pair_table",
    "assemble_kernel",
    "FourierField",
    "fourier_transform_p",
    "bq_oplus_norm",
    "induced_rep_apply",
    "induced_rep_matrix",
]


@dataclass(frozen=True)
class FormalDimensionOperator:
    """Multiplication by the modular function on the quotient grid.

    Positive and diagonal in this realization.  Conjugating it by the induced
    representation scales it by the reciprocal modular function of the group
    element; its 1/q power is the density correction used by the exponent-q
    transform.  On a unimodular group it is the identity.
    """

    h_grid: Grid1D
    values: np.ndarray

    @classmethod
    def from_model(cls, model: GroupExtensionModel, h_grid: Grid1D):
        par, mod = model.h_parametrization, model.modular_on_H
        vals = np.array([mod(par(t)) for t in h_grid.points()])
        return cls(h_grid=h_grid, values=vals)

    def power(self, exponent: float) -> np.ndarray:
        return self.values**exponent

    def matrix(self, exponent: float = 1.0) -> np.ndarray:
        return np.diag(self.values**exponent)


class CharacterSlice:
    """Slice-by-slice character pairings of a sampled function.

    pair(omegas) returns a (rows, h) table whose row r, column j entry is

        sum_n g(n, h_j) exp(+2 pi i <omega_r, n>) * w_N(n),

    i.e. the transform of the slice at the reflected frequency.  Rows whose
    frequency leaves the band of the N grids on any axis are zero (see the
    module docstring).  Rows that share their trailing frequency components
    are contracted together, which is what keeps the two-step groups fast:
    the center frequency is constant along each dual orbit.
    """

    def __init__(self, g: SampledFunction):
        self.g = g
        self.n_grids = g.n_grids
        self.h_grid = g.h_grid
        self.band = np.array([gr.nyquist for gr in g.n_grids])
        self._pts = [gr.points() for gr in g.n_grids]
        self._n_weight = float(np.prod([gr.spacing for gr in g.n_grids]))

    def in_band(self, omegas) -> np.ndarray:
        om = np.atleast_2d(np.asarray(omegas, dtype=float))
        return np.all(np.abs(om) <= self.band[None, :] * (1 + 1e-12), axis=1)

    def pair(self, omegas) -> np.ndarray:
        om = np.atleast_2d(np.asarray(omegas, dtype=float))
        if om.shape[1] != len(self.n_grids):
            raise ValueError("frequency dimension does not match the N grids")
        out = np.zeros((om.shape[0], self.h_grid.n), dtype=np.complex128)
        rows = np.nonzero(self.in_band(om))[0]
        if rows.size == 0:
            return out

        # group in-band rows by their trailing frequencies (axes 1..d-1);
        # each group costs one staged contraction plus one matmul
        groups: dict = {}
        for r in rows:
            groups.setdefault(tuple(om[r, 1:].tolist()), []).append(r)
        for tail, members in groups.items():
            arr = self.g.values
            for ax in range(len(self.n_grids) - 1, 0, -1):
                ph = np.exp(2j * np.pi * tail[ax - 1] * self._pts[ax])
                arr = np.tensordot(arr, ph, axes=([ax], [0]))
            lead = np.exp(2j * np.pi * np.outer(om[members, 0], self._pts[0]))
            out[members] = lead @ arr
        return out * self._n_weight

    def transform(self, omegas) -> np.ndarray:
        """Standard-sign transform of every slice: pair at the reflected frequency."""
        return self.pair(-np.atleast_2d(np.asarray(omegas, dtype=float)))

    def transform_reciprocal(self):
        """Transform of every slice on the full reciprocal grid, via the FFT.

        Returns (reciprocal grids, values) with values indexed like g but with
        each N axis replaced by its reciprocal grid.
        """
        vals = np.array(self.g.values, dtype=np.complex128, copy=True)
        grids = []
        for ax, gr in enumerate(self.n_grids):
            rgrid = gr.reciprocal()
            grids.append(rgrid)
            shape = [1] * vals.ndim
            shape[ax] = gr.n
            # fold the grid offset into pre and post phases around a plain FFT
            pre = (-1.0) ** np.arange(gr.n)
            post = gr.spacing * np.exp(-2j * np.pi * rgrid.points() * gr.lo)
            vals = np.fft.fft(vals * pre.reshape(shape), axis=ax) * post.reshape(shape)
        return tuple(grids), vals


def fourier_along_N(g: SampledFunction) -> CharacterSlice:
    return CharacterSlice(g)


def _as_slice(g) -> CharacterSlice:
    return g if isinstance(g, CharacterSlice) else CharacterSlice(g)


def pair_rows(slice_like, dual: DualOrbitModel, sigma0):
    """Dual parameters at every quotient point, and the full pairing table.

    Row s of the table pairs every h-slice of g with the character at
    h(t_s).sigma0.  The same table backs both the operator kernel (rows are
    the kernel's left variable) and the disintegrated majorant of the norm
    chain (columns are the slice variable).
    """
    cs = _as_slice(slice_like)
    model = dual.group
    sigma0 = np.atleast_1d(np.asarray(sigma0, dtype=float))
    omegas = np.stack(
        [model.dual_action(model.h_parametrization(t), sigma0) for t in cs.h_grid.points()]
    )
    return omegas, cs.pair(omegas)


def _modular_on_grid(model: GroupExtensionModel, h_grid: Grid1D) -> np.ndarray:
    par, mod = model.h_parametrization, model.modular_on_H
    return np.array([mod(par(t)) for t in h_grid.points()])


def kernel_from_pair_table(
    P: np.ndarray,
    h_grid: Grid1D,
    delta_h: np.ndarray,
    dimension_exponent: float = 0.0,
) -> WeightedKernel:
    """Turn a pairing table into the operator kernel.

    P[s, j] pairs slice j with the dual parameter of row s; the kernel entry
    (i, m) reads the table at slice index i - m + origin, scaled by the
    modular function at that difference.  Differences off the quotient grid
    give zero entries.
    """
    n, i0 = h_grid.n, h_grid.origin_index
    idx = np.arange(n)
    D = idx[:, None] - idx[None, :] + i0
    valid = (D >= 0) & (D < n)
    Dc = np.clip(D, 0, n - 1)
    vals = np.take_along_axis(P, Dc, axis=1) * delta_h[Dc] * valid
    if dimension_exponent:
        vals = vals * delta_h[None, :] ** dimension_exponent
    pts = h_grid.points()
    return WeightedKernel(
        values=vals,
        xi_weights=h_grid.weights(),
        gamma_weights=h_grid.weights(),
        xi_points=pts,
        gamma_points=pts,
    )


def assemble_kernel(
    g_or_slice,
    dual: DualOrbitModel,
    sigma0,
    dimension_exponent: float = 0.0,
) -> WeightedKernel:
    """Kernel of the transform at one induced representation.

    With dimension_exponent = 1/q the column factor Delta(gamma)^(1/q) is
    folded in, giving the exponent-q transform; 0 gives the bare operator.
    """
    cs = _as_slice(g_or_slice)
    omegas, P = pair_rows(cs, dual, sigma0)
    delta_h = _modular_on_grid(dual.group, cs.h_grid)
    return kernel_from_pair_table(P, cs.h_grid, delta_h, dimension_exponent)


@dataclass(frozen=True)
class FourierField:
    """The transform of one function, sampled across the dual transversal."""

    group: GroupExtensionModel
    dual: DualOrbitModel
    p: float
    q: float
    sigma_params: np.ndarray
    nu_weights: np.ndarray
    kernels: tuple
    h_grid: Grid1D

    def operator_matrices(self):
        return [weighted_operator_matrix(k) for k in self.kernels]


def fourier_transform_p(
    g: SampledFunction,
    dual: DualOrbitModel,
    p: float,
    config: DualSamplingConfig | None = None,
) -> FourierField:
    """Exponent-q transform of g at every transversal point.

    Requires 1 < p <= 2; the kernels carry the Delta^(1/q) column factor so
    that their weighted S_q norms aggregate directly into the direct-integral
    norm (bq_oplus_norm).
    """
    p = float(p)
    if not 1.0 < p <= 2.0:
        raise ValueError("need 1 < p <= 2")
    q = conjugate_exponent(p)
    cs = _as_slice(g)
    params, nu = dual.transversal(config)
    kernels = tuple(
        assemble_kernel(cs, dual, s, dimension_exponent=1.0 / q) for s in params
    )
    return FourierField(
        group=dual.group,
        dual=dual,
        p=p,
        q=q,
        sigma_params=np.asarray(params, dtype=float),
        nu_weights=np.asarray(nu, dtype=float),
        kernels=kernels,
        h_grid=cs.h_grid,
    )


def bq_oplus_norm(field: FourierField, q: float | None = None) -> float:
    """Direct-integral Schatten norm: (sum_sigma nu ||k_sigma||_{S_q}^q)^(1/q)."""
    q = field.q if q is None else float(q)
    acc = 0.0
    for nu, k in zip(field.nu_weights, field.kernels):
        acc += nu * schatten_norm(weighted_operator_matrix(k), q) ** q
    return float(acc ** (1.0 / q))


def induced_rep_matrix(
    model: GroupExtensionModel, sigma0, x: GroupElement, h_grid: Grid1D
) -> np.ndarray:
    """Matrix of the induced representation of x on the quotient grid.

    (rep(x) f)(xi) = chi_{xi.sigma0}(n_x) f(h_x^{-1} xi): a diagonal phase
    times an index shift.  x must translate the quotient grid onto its own
    lattice; rows shifted off the grid are zero.
    """
    sigma0 = np.atleast_1d(np.asarray(sigma0, dtype=float))
    t_x = model.h_coordinate(x.h)
    s = t_x / h_grid.spacing
    si = int(round(s))
    if abs(s - si) > 1e-9:
        raise ValueError("group element must shift the quotient grid onto itself")
    ts = h_grid.points()
    chi = np.array(
        [
            character_value(model.dual_action(model.h_parametrization(t), sigma0), x.n)
            for t in ts
        ]
    )
    n = h_grid.n
    a = np.zeros((n, n), dtype=np.complex128)
    rows = np.arange(max(0, si), min(n, n + si))
    a[rows, rows - si] = chi[rows]
    return a


def induced_rep_apply(
    model: GroupExtensionModel, sigma0, x: GroupElement, f: np.ndarray, h_grid: Grid1D
) -> np.ndarray:
    """Apply the induced representation of x to a vector over the quotient grid."""
    f = np.asarray(f, dtype=np.complex128)
    if f.shape != (h_grid.n,):
        raise ValueError("vector length must match the quotient grid")
    return induced_rep_matrix(model, sigma0, x, h_grid) @ f

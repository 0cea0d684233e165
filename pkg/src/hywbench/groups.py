"""Group-extension models: the affine ax+b group and the 3-D Heisenberg group.

Both are semidirect products N x| H with N and H abelian and unimodular.
Elements live in cross-section coordinates (n, h), n a vector in R^dim_N and
h the quotient coordinate, with multiplication

    (n1, h1) (n2, h2) = (n1 + h1.n2, h1 h2)

where h.n is conjugation of N by the cross-section alpha(h).  Everything that
makes G nonunimodular is carried by the modular function restricted to H.

On the dual side, characters of N are chi_omega(n) = exp(2 pi i <omega, n>)
and H acts on the parameter omega through

    (h.chi)(n) = chi(alpha(h)^{-1} n alpha(h)),

which for a linear conjugation action is multiplication by the transpose of
the linearized action of h^{-1}.  A DualOrbitModel supplies a transversal of
the generic orbits together with quadrature weights for the measure that
makes the operator-valued Plancherel identity hold with constant one:

* ax+b: two orbit atoms (sign of the frequency), each of weight 1;
* Heisenberg: the center frequency lambda with density |lambda| d lambda,
  sampled symmetrically outside a small exclusion window around 0.

Grid coordinates: H is always gridded uniformly in a coordinate t where the
Haar measure of H is dt.  For ax+b that is t = log a; for Heisenberg, t = x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "GroupElement",
    "GroupExtensionModel",
    "DualOrbitModel",
    "DualSamplingConfig",
    "character_value",
    "make_axb",
    "make_heisenberg",
    "make_group",
    "GROUP_NAMES",
]


@dataclass(frozen=True)
class GroupElement:
    """A group element in cross-section coordinates (n, h)."""

    n: np.ndarray
    h: float

    def __post_init__(self):
        object.__setattr__(self, "n", np.atleast_1d(np.asarray(self.n, dtype=float)))
        object.__setattr__(self, "h", float(self.h))

    def close_to(self, other, tol=1e-12):
        return (
            np.max(np.abs(self.n - other.n)) <= tol
            and abs(self.h - other.h) <= tol
        )


@dataclass(frozen=True)
class GroupExtensionModel:
    """A semidirect product N x| H in cross-section coordinates.

    The quotient H is described abstractly by its identity, multiplication and
    inverse, plus the parametrization h = h_parametrization(t) mapping the
    uniform grid coordinate t (where Haar measure of H is dt) to H itself.
    """

    name: str
    dim_N: int
    unimodular: bool
    h_identity: float
    h_multiply: Callable[[float, float], float]
    h_inverse: Callable[[float], float]
    h_parametrization: Callable[[float], float]
    h_coordinate: Callable[[float], float]
    conjugation_action: Callable[[float, np.ndarray], np.ndarray]
    modular_on_H: Callable[[float], float]

    # -- element construction -------------------------------------------------

    def identity(self) -> GroupElement:
        return GroupElement(np.zeros(self.dim_N), self.h_identity)

    def alpha(self, h) -> GroupElement:
        """Cross-section H -> G, h |-> (0, h)."""
        return GroupElement(np.zeros(self.dim_N), h)

    def embed_n(self, n) -> GroupElement:
        return GroupElement(n, self.h_identity)

    # -- group operations ------------------------------------------------------

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return GroupElement(
            x.n + self.conjugation_action(x.h, y.n),
            self.h_multiply(x.h, y.h),
        )

    def inverse(self, x: GroupElement) -> GroupElement:
        hinv = self.h_inverse(x.h)
        return GroupElement(-self.conjugation_action(hinv, x.n), hinv)

    def modular(self, x) -> float:
        """Modular function of G; constant on cosets of N."""
        h = x.h if isinstance(x, GroupElement) else float(x)
        return float(self.modular_on_H(h))

    def cocycle(self, gamma_h: float, xi_h: float) -> GroupElement:
        """Cross-section cocycle alpha(xi)^-1 alpha(gamma) alpha(gamma^-1 xi).

        Identity for both shipped instances because their cross-sections are
        homomorphisms; kept explicit so induced-representation code states its
        dependency on that fact.
        """
        pre = self.h_multiply(self.h_inverse(gamma_h), xi_h)
        out = self.multiply(
            self.multiply(self.inverse(self.alpha(xi_h)), self.alpha(gamma_h)),
            self.alpha(pre),
        )
        return out

    # -- dual action -----------------------------------------------------------

    def conjugation_matrix(self, h) -> np.ndarray:
        """Matrix of n |-> alpha(h) n alpha(h)^-1 on N (exact: actions are linear)."""
        cols = [self.conjugation_action(h, e) for e in np.eye(self.dim_N)]
        return np.stack(cols, axis=1)

    def dual_action(self, h, omega) -> np.ndarray:
        """Parameter of the character chi_omega composed with conjugation by h^-1."""
        a = self.conjugation_matrix(self.h_inverse(h))
        return a.T @ np.atleast_1d(np.asarray(omega, dtype=float))

    # -- measures ---------------------------------------------------------------

    def haar_weight(self, n, t) -> float:
        """Left Haar density of G at (n, t) against the coordinate measure dn dt."""
        return float(self.modular_on_H(self.h_parametrization(t)))


def character_value(omega, n):
    """chi_omega(n) = exp(2 pi i <omega, n>), vectorized over leading axes of n."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    n = np.asarray(n, dtype=float)
    return np.exp(2j * np.pi * (n @ omega if n.ndim > 1 else float(np.dot(n, omega))))


@dataclass(frozen=True)
class DualSamplingConfig:
    """How to sample the orbit transversal (only Heisenberg has knobs).

    lambda_min excludes a symmetric window around the degenerate frequency 0;
    the window is sized so the Plancherel mass it removes stays below 1e-3 of
    the squared norm for the shipped fixture families.
    """

    lambda_points: int = 64
    lambda_min: float = 2.5e-4
    lambda_max: float = 1.5

    def __post_init__(self):
        if self.lambda_points < 2 or self.lambda_points % 2:
            raise ValueError("lambda_points must be a positive even integer")
        if not 0 < self.lambda_min < self.lambda_max:
            raise ValueError("need 0 < lambda_min < lambda_max")


@dataclass(frozen=True)
class DualOrbitModel:
    """Transversal of the generic dual orbits plus the orbit-space measure.

    psi is the density tying Lebesgue measure on the dual of N to the product
    of Haar on H with the orbit-space measure; it coincides with the modular
    function on H, and is identically 1 exactly when G is unimodular.

    metadata records measurability assumptions (standard quotient, co-null
    generic orbits, trivial stabilizers).  They hold for both instances and
    are never checked at runtime.
    """

    name: str
    group: GroupExtensionModel
    transversal_fn: Callable
    metadata: dict = field(default_factory=dict)

    def psi(self, h) -> float:
        return self.group.modular(h)

    def orbit_point(self, h, sigma0) -> np.ndarray:
        """The character h.sigma0 reached from the transversal point sigma0."""
        return self.group.dual_action(h, sigma0)

    def transversal(self, config: DualSamplingConfig | None = None):
        """Sample points sigma0 and their orbit-space quadrature weights."""
        return self.transversal_fn(config)


def _axb_transversal(config):
    params = np.array([[1.0], [-1.0]])
    weights = np.array([1.0, 1.0])
    return params, weights


def _heisenberg_transversal(config):
    config = config or DualSamplingConfig()
    m = config.lambda_points // 2
    step = (config.lambda_max - config.lambda_min) / m
    lam = config.lambda_min + (np.arange(m) + 0.5) * step
    lam = np.concatenate([-lam[::-1], lam])
    params = np.stack([np.zeros_like(lam), lam], axis=1)
    weights = np.abs(lam) * step
    return params, weights


def make_axb():
    """The affine group of the line: N = R (translations), H = R_+ (dilations).

    (b, a)(b', a') = (b + a b', a a'), modular function 1/a, H gridded in
    t = log a.  The dual orbits of H on R-hat \\ {0} are the two frequency
    rays; each carries orbit weight 1.
    """
    model = GroupExtensionModel(
        name="axb",
        dim_N=1,
        unimodular=False,
        h_identity=1.0,
        h_multiply=lambda a, b: a * b,
        h_inverse=lambda a: 1.0 / a,
        h_parametrization=math.exp,
        h_coordinate=math.log,
        conjugation_action=lambda a, n: a * np.asarray(n, dtype=float),
        modular_on_H=lambda a: 1.0 / a,
    )
    dual = DualOrbitModel(
        name="axb-dual",
        group=model,
        transversal_fn=_axb_transversal,
        metadata={
            "orbits_conull": True,
            "orbit_space_standard": True,
            "stabilizers_trivial": True,
            "type_I": True,
        },
    )
    return model, dual


def _heis_conjugation(x, n):
    n = np.asarray(n, dtype=float)
    return np.array([n[0], n[1] + x * n[0]])


def make_heisenberg():
    """The 3-D Heisenberg group in coordinates (n, h) = ((y, z), x).

    Triple product (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y'); N is the
    abelian normal subgroup {(0, y, z)} and the cross-section is x |-> (x,0,0).
    Unimodular.  Generic dual orbits are the horizontal lines of fixed center
    frequency lambda != 0, with orbit-space density |lambda| d lambda.
    """
    model = GroupExtensionModel(
        name="heisenberg",
        dim_N=2,
        unimodular=True,
        h_identity=0.0,
        h_multiply=lambda x, y: x + y,
        h_inverse=lambda x: -x,
        h_parametrization=lambda t: t,
        h_coordinate=lambda h: h,
        conjugation_action=_heis_conjugation,
        modular_on_H=lambda x: 1.0,
    )
    dual = DualOrbitModel(
        name="heisenberg-dual",
        group=model,
        transversal_fn=_heisenberg_transversal,
        metadata={
            "orbits_conull": True,
            "orbit_space_standard": True,
            "stabilizers_trivial": True,
            "type_I": True,
        },
    )
    return model, dual


GROUP_NAMES = ("axb", "heisenberg")


def make_group(name: str):
    """Build (GroupExtensionModel, DualOrbitModel) by name."""
    if name == "axb":
        return make_axb()
    if name == "heisenberg":
        return make_heisenberg()
    raise ValueError(f"unknown group {name!r}; expected one of {GROUP_NAMES}")

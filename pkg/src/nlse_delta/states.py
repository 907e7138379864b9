"""Solution containers shared by the delta-well and delta-shell modules.

Everything here is a plain record of real parameters plus closed-form
evaluators; the physics that *produces* the parameters lives in the
solver modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import csch, sech
from .elliptic import complete_K, jacobi

__all__ = [
    "BRIGHT_SECH",
    "COSECH",
    "LINEAR_EXP",
    "CRITICAL_RATIONAL",
    "CN",
    "SN",
    "SolitonState",
    "PeriodicWave",
    "make_periodic_wave",
]

# Localized-state families.  The wavefunction is symmetric under x -> -x,
# so evaluators are written in |x|.
BRIGHT_SECH = "bright_sech"        # (k/sqrt|g|) sech(k(|x| - x0)), g < 0
COSECH = "cosech"                  # (k/sqrt g) csch(k(|x| - x0)), g > 0, x0 < 0
LINEAR_EXP = "linear_exp"          # sqrt(-lam) exp(lam |x|), g = 0, lam < 0
CRITICAL_RATIONAL = "critical_rational"  # 1/(sqrt(g) (|x| - x0)), the k -> 0 limit

# Periodic-wave kinds.
CN = "cn"
SN = "sn"


@dataclass(frozen=True)
class SolitonState:
    """A normalized localized state of the single-delta problem.

    mu      chemical potential (energy for g = 0)
    k       decay scale, k = sqrt(-2 mu)
    x0      center offset of the x > 0 branch (NaN when not meaningful)
    lam     delta strength
    g       nonlinearity
    family  one of BRIGHT_SECH, COSECH, LINEAR_EXP, CRITICAL_RATIONAL
    """

    mu: float
    k: float
    x0: float
    lam: float
    g: float
    family: str

    def psi(self, x):
        """Wavefunction at x (scalar or array); symmetric in x."""
        r = np.abs(np.asarray(x, dtype=float))
        if self.family == BRIGHT_SECH:
            amp = self.k / math.sqrt(-self.g)
            out = amp * sech(self.k * (r - self.x0))
        elif self.family == COSECH:
            amp = self.k / math.sqrt(self.g)
            out = amp * csch(self.k * (r - self.x0))
        elif self.family == LINEAR_EXP:
            out = math.sqrt(-self.lam) * np.exp(self.lam * r)
        elif self.family == CRITICAL_RATIONAL:
            out = 1.0 / (math.sqrt(self.g) * (r - self.x0))
        else:
            raise ValueError(f"unknown family {self.family!r}")
        return float(out) if np.ndim(x) == 0 else out

    def dpsi(self, x):
        """d psi / dx away from the delta (sign(x) factors the symmetry)."""
        xarr = np.asarray(x, dtype=float)
        r = np.abs(xarr)
        s = np.sign(xarr)
        if self.family == BRIGHT_SECH:
            amp = self.k / math.sqrt(-self.g)
            z = self.k * (r - self.x0)
            out = -amp * self.k * sech(z) * np.tanh(z) * s
        elif self.family == COSECH:
            amp = self.k / math.sqrt(self.g)
            z = self.k * (r - self.x0)
            out = -amp * self.k * csch(z) / np.tanh(z) * s
        elif self.family == LINEAR_EXP:
            out = self.lam * s * math.sqrt(-self.lam) * np.exp(self.lam * r)
        elif self.family == CRITICAL_RATIONAL:
            out = -s / (math.sqrt(self.g) * (r - self.x0) ** 2)
        else:
            raise ValueError(f"unknown family {self.family!r}")
        return float(out) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class PeriodicWave:
    """One elliptic-function branch A f(4K(p)(x - x0)/L | p), f = cn or sn.

    kind       CN or SN
    amplitude  A
    period     L (the real period of the wave)
    x0         shift: psi(x) = A f(4K(p)(x - x0)/L | p)
    p          elliptic modulus
    mu         chemical potential: 8(1-2p)K^2/L^2 (cn), 8(1+p)K^2/L^2 (sn)
    g          nonlinearity; cn requires g < 0, sn requires g > 0
    """

    kind: str
    amplitude: float
    period: float
    x0: float
    p: float
    mu: float
    g: float

    @property
    def alpha(self) -> float:
        """Argument scale 4K(p)/L."""
        return 4.0 * complete_K(self.p) / self.period

    def phase(self, x):
        return self.alpha * (np.asarray(x, dtype=float) - self.x0)

    def psi(self, x):
        sn, cn, _ = jacobi(self.phase(x), self.p)
        out = self.amplitude * (cn if self.kind == CN else sn)
        return float(out) if np.ndim(x) == 0 else out

    def dpsi(self, x):
        sn, cn, dn = jacobi(self.phase(x), self.p)
        if self.kind == CN:
            out = -self.amplitude * self.alpha * sn * dn
        else:
            out = self.amplitude * self.alpha * cn * dn
        return float(out) if np.ndim(x) == 0 else out


def make_periodic_wave(kind: str, p: float, mu: float, g: float, x0: float) -> PeriodicWave:
    """Build the wave whose period and amplitude follow from (kind, p, mu, g).

    The dispersion relations fix L and A:

        cn:  mu = 8(1-2p)K^2/L^2,  A = 4 sqrt(p) K / (sqrt|g| L),  g < 0
        sn:  mu = 8(1+p)K^2/L^2,   A = 4 sqrt(p) K / (sqrt g L),   g > 0

    For the cn kind, mu and (1-2p) must share a sign for L to be real.
    """
    if kind == CN:
        if g >= 0.0:
            raise ValueError("cn waves require g < 0")
        factor = 1.0 - 2.0 * p
    elif kind == SN:
        if g <= 0.0:
            raise ValueError("sn waves require g > 0")
        if mu <= 0.0:
            raise ValueError("sn waves require mu > 0")
        factor = 1.0 + p
    else:
        raise ValueError(f"unknown wave kind {kind!r}")
    if not 0.0 <= p < 1.0:
        raise ValueError(f"modulus out of range: {p!r}")
    ratio = 8.0 * factor / mu
    if ratio <= 0.0:
        raise ValueError(f"no real period for kind={kind}, p={p}, mu={mu}")
    K = complete_K(p)
    L = math.sqrt(ratio) * K
    A = 4.0 * math.sqrt(p) * K / (math.sqrt(abs(g)) * L)
    return PeriodicWave(kind=kind, amplitude=A, period=L, x0=x0, p=p, mu=mu, g=g)

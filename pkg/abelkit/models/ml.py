import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional

import mpmath
import numpy as np
import pandas as pd
from tqdm import tqdm

from ..data.catalog import BaseFunction, get_function
from ..errors import InsufficientSamples, OutOfBasin
from ..series import LogMultiple
from ..utils.formatting import to_mpf
from .abel import abel_value
from .ej import abel_series

__all__ = [
    "DeltaReport",
    "MLFormula",
    "MLValue",
    "delta_estimate",
    "delta_hypothesis",
    "limit_fit",
    "make_terms",
    "ml_sequence",
    "ml_value",
    "sample_grid",
]

logger = logging.getLogger(__name__)

default_cfg = {
    "n_max": 2**16,
    "dps": 80,
    "model_order": 4,
    "octaves": 6,
    "samples_per_octave": 8,
    "progress": True,
}

FORMS = ("direct", "reciprocal")


def _frac_text(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"({q})"


def _power_text(var: str, q: Fraction) -> str:
    if q == 1:
        return var
    return f"{var}^{q}" if q.denominator == 1 else f"{var}^({q})"


@dataclass(frozen=True)
class MLFormula:
    """``-tau n^((tau+1)/tau) (x_n/s - n^(-1/tau) + kappa ln(n) n^(-(tau+1)/tau))``.

    ``s = (-gamma tau)^(-1/tau)`` is stored through ``scale_base = -gamma tau``.
    """

    tau: int
    prefactor: Fraction
    scale_base: Fraction
    log_kappa: Fraction

    @classmethod
    def from_function(cls, fn, K: Optional[int] = None) -> "MLFormula":
        fn = get_function(fn)
        B = abel_series(fn, K).log
        return cls(fn.tau, Fraction(fn.tau), -fn.gamma * fn.tau, B / fn.tau**2)

    @property
    def growth(self) -> Fraction:
        return Fraction(self.tau + 1, self.tau)

    def scale(self):
        """``s`` at the working precision."""
        return to_mpf(self.scale_base) ** (-mpmath.mpf(1) / self.tau)

    def evaluate(self, xn, n: int, form: str = "direct"):
        n = mpmath.mpf(n)
        s = self.scale()
        kappa = to_mpf(self.log_kappa)
        if form == "direct":
            growth = n ** (mpmath.mpf(self.tau + 1) / self.tau)
            bracket = xn / s - n ** (-mpmath.mpf(1) / self.tau) + kappa * mpmath.log(n) / growth
            return -to_mpf(self.prefactor) * growth * bracket
        if form == "reciprocal":
            # X_n = 1/x_n; for y/(1+y^2) this is the orbit of x + 1/x
            root = n ** (mpmath.mpf(1) / self.tau)
            head = n ** (mpmath.mpf(self.tau - 1) / self.tau) * (s / xn - root)
            return to_mpf(self.prefactor) * head - to_mpf(self.prefactor) * kappa * mpmath.log(n)
        raise ValueError(f"unknown form {form!r}; choose from {FORMS}")

    def to_text(self, form: str = "direct") -> str:
        tau = self.tau
        scaled = "x_n" if self.scale_base == 1 else f"{_frac_text(self.scale_base)}^(1/{tau}) x_n"
        if tau == 1 and self.scale_base != 1:
            scaled = f"{_frac_text(self.scale_base)} x_n"
        if form == "reciprocal":
            lead = "" if tau == 1 else f"{tau}{_power_text('n', Fraction(tau - 1, tau))}"
            inverse = "X_n" if self.scale_base == 1 else f"{_frac_text(self.scale_base)}^(-1/{tau}) X_n"
            text = f"{lead}({inverse} - {_power_text('n', Fraction(1, tau))})"
            shift = self.prefactor * self.log_kappa
            if shift:
                coefficient = "" if abs(shift) == 1 else _frac_text(abs(shift))
                text += f" {'-' if shift > 0 else '+'} {coefficient}ln(n)"
            return text
        lead = "-" if tau == 1 else f"-{tau}"
        growth = _power_text("n", self.growth)
        parts = [scaled, f"- 1/{_power_text('n', Fraction(1, tau))}"]
        if self.log_kappa:
            sign = "+" if self.log_kappa > 0 else "-"
            kappa = abs(self.log_kappa)
            coefficient = "" if kappa == 1 else _frac_text(kappa)
            parts.append(f"{sign} {coefficient}ln(n)/{growth}")
        return f"{lead}{growth}({' '.join(parts)})"


class MLValue(NamedTuple):
    estimate: mpmath.mpf
    error: mpmath.mpf
    n_max: int
    model_order: int
    samples: int


@dataclass(frozen=True)
class DeltaReport:
    fn: str
    x: str
    ej_value: mpmath.mpf
    ml_value: mpmath.mpf
    delta_estimate: mpmath.mpf
    error_bar: mpmath.mpf
    delta_conjectured: Optional[mpmath.mpf]
    delta_hypothesis: mpmath.mpf
    hypothesis_exact: LogMultiple
    conjecture_exact: Optional[LogMultiple]
    n_max: int

    @property
    def discrepancy_conjectured(self):
        if self.delta_conjectured is None:
            return None
        return abs(self.delta_estimate - self.delta_conjectured)

    @property
    def discrepancy_hypothesis(self):
        return abs(self.delta_estimate - self.delta_hypothesis)

    def to_frame(self, digits: int = 12) -> pd.DataFrame:
        def show(v):
            return "" if v is None else mpmath.nstr(v, digits)

        rows = [
            ("EJ value", show(self.ej_value), ""),
            ("ML value", show(self.ml_value), ""),
            ("delta (estimate)", show(self.delta_estimate), f"+/- {mpmath.nstr(self.error_bar, 3)}"),
            ("delta (hypothesis)", show(self.delta_hypothesis), str(self.hypothesis_exact)),
            ("delta (conjectured)", show(self.delta_conjectured), "" if self.conjecture_exact is None else str(self.conjecture_exact)),
            ("|estimate - hypothesis|", show(self.discrepancy_hypothesis), ""),
            ("|estimate - conjectured|", show(self.discrepancy_conjectured), ""),
        ]
        return pd.DataFrame(rows, columns=["quantity", "value", "exact"])


def _config(cfg: Optional[dict]) -> dict:
    return {**default_cfg, **(cfg or {})}


def sample_grid(n_max: int, octaves: int, samples_per_octave: int) -> np.ndarray:
    """Geometric grid of orbit indices in ``[n_max / 2^octaves, n_max]``."""
    steps = np.arange(octaves * samples_per_octave + 1)
    grid = np.round(n_max * 2.0 ** (-steps / samples_per_octave)).astype(np.int64)
    return np.unique(grid[grid >= 2])


def _orbit_samples(fn: BaseFunction, x, indices, progress: bool = False) -> dict:
    wanted = set(int(i) for i in indices)
    last = max(wanted)
    out = {}
    for n in tqdm(range(1, last + 1), desc=f"{fn.name} orbit", disable=None if progress else True, leave=False):
        x = fn.forward(x)
        if n in wanted:
            out[n] = x
    return out


def ml_sequence(fn, x, n: int, form: str = "direct", dps: Optional[int] = None, K: Optional[int] = None):
    """``s_n``, the ``n``-th element of the limit sequence for the principal Abel value."""
    fn = get_function(fn)
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    formula = MLFormula.from_function(fn, K)
    with mpmath.workdps(dps or default_cfg["dps"]):
        x = to_mpf(x)
        if not fn.in_basin(x):
            raise OutOfBasin(f"{fn.name}: {mpmath.nstr(x, 15)} is outside the basin")
        xn = _orbit_samples(fn, x, [n])[n]
        return formula.evaluate(xn, n, form)


def make_terms(model_order: int) -> List:
    """Basis ``ln(n)^j / n^i`` for ``0 <= j <= i <= model_order``; the constant comes first."""
    terms = []
    for i in range(model_order + 1):
        for j in range(i + 1):
            terms.append(lambda n, i=i, j=j: mpmath.log(n) ** j / mpmath.mpf(n) ** i)
    return terms


def limit_fit(ns, values, model_order: int):
    terms = make_terms(model_order)
    if len(ns) < len(terms):
        raise InsufficientSamples(f"{len(ns)} samples for {len(terms)} unknowns")
    A = mpmath.matrix([[t(n) for t in terms] for n in ns])
    b = mpmath.matrix(list(values))
    coeffs, residual = mpmath.qr_solve(A, b)
    return coeffs[0], residual


def ml_value(fn, x, n_max: Optional[int] = None, model_order: Optional[int] = None, cfg: Optional[dict] = None, form: str = "direct") -> MLValue:
    """Principal Abel value by least-squares extrapolation of ``s_n`` to ``n -> oo``.

    The error bar is the change in the limit when the top correction order is dropped.
    """
    fn = get_function(fn)
    cfg = _config(cfg)
    n_max = int(n_max or cfg["n_max"])
    model_order = int(model_order if model_order is not None else cfg["model_order"])
    if n_max < 64:
        raise InsufficientSamples(f"n_max must be at least 64, got {n_max}")
    if model_order < 1:
        raise ValueError(f"model_order must be at least 1, got {model_order}")
    formula = MLFormula.from_function(fn)
    ns = [int(n) for n in sample_grid(n_max, cfg["octaves"], cfg["samples_per_octave"])]
    with mpmath.workdps(cfg["dps"]):
        x = to_mpf(x)
        if not fn.in_basin(x):
            raise OutOfBasin(f"{fn.name}: {mpmath.nstr(x, 15)} is outside the basin")
        orbit = _orbit_samples(fn, x, ns, cfg["progress"])
        values = [formula.evaluate(orbit[n], n, form) for n in ns]
        estimate, residual = limit_fit(ns, values, model_order)
        lower, _ = limit_fit(ns, values, model_order - 1)
        error = abs(estimate - lower)
        logger.info(f"ML {fn.name}({mpmath.nstr(x, 10)}): {mpmath.nstr(estimate, 15)} +/- {mpmath.nstr(error, 3)}, residual {mpmath.nstr(residual, 3)}")
        return MLValue(+estimate, +error, n_max, model_order, len(ns))


def delta_hypothesis(fn, K: Optional[int] = None) -> LogMultiple:
    """``-(B/tau) ln(-gamma tau)`` with ``B`` the log coefficient of the Abel expansion."""
    fn = get_function(fn)
    B = abel_series(fn, K).log
    return LogMultiple(-B / fn.tau, -fn.gamma * fn.tau)


def delta_estimate(fn, x, n_max: Optional[int] = None, digits: int = 30, cfg: Optional[dict] = None, form: str = "direct") -> DeltaReport:
    """EJ value minus extrapolated principal value, next to the closed forms."""
    fn = get_function(fn)
    cfg = _config(cfg)
    hypothesis = delta_hypothesis(fn)
    with mpmath.workdps(max(digits, cfg["dps"])):
        ej = abel_value(fn, x, digits).value
        ml = ml_value(fn, x, n_max, cfg=cfg, form=form)
        estimate = ej - ml.estimate
        conjecture = fn.delta_conjecture
        report = DeltaReport(
            fn=fn.name,
            x=str(x),
            ej_value=ej,
            ml_value=ml.estimate,
            delta_estimate=estimate,
            error_bar=ml.error,
            delta_conjectured=None if conjecture is None else conjecture.evaluate(mpmath.mp.dps),
            delta_hypothesis=hypothesis.evaluate(mpmath.mp.dps),
            hypothesis_exact=hypothesis,
            conjecture_exact=conjecture,
            n_max=ml.n_max,
        )
    logger.info(f"delta {fn.name}: {mpmath.nstr(estimate, 12)} +/- {mpmath.nstr(ml.error, 3)}")
    return report

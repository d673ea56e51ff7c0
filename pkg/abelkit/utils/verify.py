"""Regression harness against the published series tables and 100-digit constants."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Dict, Iterable, List, Optional

import mpmath
import pandas as pd
from tqdm import tqdm

from ..data import reference
from ..data.catalog import REGISTRY, BaseFunction, get_function
from ..errors import AbelKitError
from ..models.abel import abel_value, half_iterate
from ..models.ej import julia_coefficients_direct, julia_residual, julia_series
from ..models.ml import delta_hypothesis
from .formatting import format_truncated, matched_digits

logger = logging.getLogger(__name__)

default_cfg = {
    "K": 32,
    "digits": 50,
    "max_digits": 60,
    "guard_digits": 5,
}

COLUMNS = ["name", "expected", "computed", "matched", "status"]


def _row(name: str, expected: str, computed: str, matched: int, ok: bool) -> Dict:
    return {"name": name, "expected": expected, "computed": computed, "matched": matched, "status": "PASS" if ok else "FAIL"}


def _compare(name: str, table: Dict[int, object], lookup) -> Dict:
    """One row per printed table; ``matched`` counts the agreeing coefficients."""
    matched, last, computed_last = 0, None, None
    for exponent, expected in sorted(table.items()):
        try:
            computed = lookup(exponent)
        except AbelKitError as e:
            computed = f"error: {e}"
        last, computed_last = expected, computed
        if computed == expected:
            matched += 1
    return _row(name, str(last), str(computed_last), matched, matched == len(table))


def series_rows(fn: BaseFunction, K: Optional[int] = None) -> List[Dict]:
    """Exact checks for one catalog entry: printed tables, Julia identity and the direct solve."""
    K = K or default_cfg["K"]
    name = fn.name
    rows = []
    result = julia_series(fn, K)

    if name in reference.LAMBDA:
        rows.append(_compare(f"lambda[{name}]", reference.LAMBDA[name], result.julia.coefficient_at))
    if name in reference.RECIPROCAL:
        rows.append(_compare(f"g'[{name}]", reference.RECIPROCAL[name], result.reciprocal.coefficient_at))
    if name in reference.ABEL:
        table = reference.ABEL[name]
        printed = {-fn.tau: table.pole, 0: table.log}
        printed.update({m: t for m, t in enumerate(table.terms, start=1)})

        def abel_term(m):
            if m == -fn.tau:
                return result.abel.pole
            if m == 0:
                return result.abel.log
            return result.abel.coefficient(m)

        rows.append(_compare(f"g[{name}]", printed, abel_term))

    residual = julia_residual(fn, K)
    nonzero = [n for n, c in residual.items() if c]
    rows.append(
        _row(
            f"julia-identity[{name}]",
            f"0 + O(x^{residual.order + 1})",
            "0" if not nonzero else f"x^{nonzero[0]}: {residual.coefficient_at(nonzero[0])}",
            residual.order if not nonzero else nonzero[0] - 1,
            not nonzero,
        )
    )

    direct = julia_coefficients_direct(fn, K)
    agree = sum(a == b for a, b in zip(direct, result.v))
    rows.append(_row(f"oracle[{name}]", f"{len(result.v)} coefficients", f"{agree} agree", agree, agree == len(result.v) == len(direct)))
    return rows


def _constant_job(kind: str, function: str, argument: str, digits: int) -> str:
    """Decimal string of one constant with ``digits`` digits after the point."""
    with mpmath.workdps(digits + 10):
        if kind == "ej":
            value = abel_value(function, argument, digits).value
        elif kind == "ml":
            value = abel_value(function, argument, digits).value - delta_hypothesis(function).evaluate(digits + 10)
        elif kind == "half":
            value = half_iterate(function, argument, digits)
        else:
            raise ValueError(f"unknown constant kind {kind!r}")
        return format_truncated(value, digits)


def constant_jobs(kinds: Iterable[str] = ("ej", "ml", "half")):
    tables = {"ej": reference.EJ_VALUES, "ml": reference.ML_VALUES, "half": reference.HALF_ITERATES}
    for kind in kinds:
        for constant in tables[kind]:
            yield kind, constant


def num_workers() -> int:
    """Worker processes for the constant checks, capped by ``ABELKIT_THREADS``."""
    workers = os.cpu_count() or 1
    if "ABELKIT_THREADS" in os.environ:
        workers = min(workers, max(1, int(os.environ["ABELKIT_THREADS"])))
    return workers


def constant_rows(digits: int, kinds: Iterable[str] = ("ej", "ml", "half"), workers: Optional[int] = None) -> List[Dict]:
    jobs = list(constant_jobs(kinds))
    work = digits + default_cfg["guard_digits"]
    workers = workers or num_workers()
    computed = {}

    def record(index, text):
        computed[index] = text

    if workers == 1:
        for i, (kind, c) in enumerate(tqdm(jobs, desc="verify", disable=None, leave=False)):
            try:
                record(i, _constant_job(kind, c.function, c.argument, work))
            except AbelKitError as e:
                record(i, f"error: {type(e).__name__}")
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_constant_job, kind, c.function, c.argument, work): i for i, (kind, c) in enumerate(jobs)}
            for future in tqdm(as_completed(futures), total=len(futures), desc="verify", disable=None, leave=False):
                i = futures[future]
                try:
                    record(i, future.result())
                except AbelKitError as e:
                    record(i, f"error: {type(e).__name__}")

    rows = []
    for i, (kind, c) in enumerate(jobs):
        text = computed[i]
        matched = matched_digits(text, c.digits) if not text.startswith("error") else 0
        head, _, tail = c.digits.partition(".")
        expected = f"{head}.{tail[:digits]}"
        rows.append(_row(c.name, expected, text, matched, matched >= digits))
        logger.debug(f"{c.name}: {matched} digits")
    return rows


def verify(
    digits: Optional[int] = None,
    functions: Optional[Iterable] = None,
    constants: bool = True,
    workers: Optional[int] = None,
) -> pd.DataFrame:
    """Report with columns ``name, expected, computed, matched, status``.

    Series rows come first, in catalog order, then the constants in table order.
    """
    digits = default_cfg["digits"] if digits is None else int(digits)
    if digits < 1 or digits > default_cfg["max_digits"]:
        raise ValueError(f"digits must be in [1, {default_cfg['max_digits']}], got {digits}")
    functions = [get_function(f) for f in (functions if functions is not None else REGISTRY.values())]

    rows = []
    for fn in tqdm(functions, desc="series", disable=None, leave=False):
        rows.extend(series_rows(fn))
    if constants:
        rows.extend(constant_rows(digits, workers=workers))
    report = pd.DataFrame(rows, columns=COLUMNS)
    failed = int((report["status"] == "FAIL").sum())
    logger.info(f"verify: {len(report) - failed}/{len(report)} PASS")
    return report


def all_passed(report: pd.DataFrame) -> bool:
    return bool((report["status"] == "PASS").all())

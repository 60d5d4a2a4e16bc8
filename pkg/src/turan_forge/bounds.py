"""Closed-form upper and lower bounds for ex(n, n, n; K_{2,t})."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from .errors import InvalidParameterError

CSV_COLUMNS = ("t", "p", "n", "lower", "upper", "normalized_lower", "sandwich_ratio")


def _check_nt(n: int, t: int) -> None:
    if n < 1:
        raise InvalidParameterError("n must be at least 1")
    if t < 2:
        raise InvalidParameterError("t must be at least 2")


def pair_sum_bound(n: int, t: int) -> float:
    """Largest edge count between one part and the union of the other two."""
    _check_nt(n, t)
    return n * (1 + math.sqrt(2 * (t - 1) * (n - 1) + 1))


def upper_bound(n: int, t: int) -> float:
    """``(3/2) n (1 + sqrt(2(t-1)(n-1) + 1))``."""
    return 1.5 * pair_sum_bound(n, t)


def upper_bound_floor(n: int, t: int) -> int:
    """Exact integer floor of :func:`upper_bound`, computed without floats."""
    _check_nt(n, t)
    disc = 2 * (t - 1) * (n - 1) + 1
    # floor((3n + sqrt(9 n^2 disc)) / 2); the isqrt floor is exact even when
    # the root is irrational because 3n + r and 3n + sqrt(.) share a floor/2
    return (3 * n + math.isqrt(9 * n * n * disc)) // 2


def lower_bound_formula(p: int, t: int) -> int:
    """Edge count ``3p(p-1)^2 / (4(t-1))`` of the construction."""
    if t < 2 or t % 2:
        raise InvalidParameterError("t must be an even integer >= 2")
    if p < 3 or (p - 1) % (t - 1):
        raise InvalidParameterError(f"(t-1) must divide (p-1); got t={t}, p={p}")
    num = 3 * p * (p - 1) ** 2
    den = 4 * (t - 1)
    if num % den:
        raise InvalidParameterError(f"formula is not integral for t={t}, p={p}")
    return num // den


def asymptotic_constants(t: int) -> tuple[float, float]:
    """Leading constants ``(3 sqrt((t-1)/2), sqrt((t-1)/6))``.

    The first normalises by ``n^{3/2}`` with n the part size, the second by
    ``N^{3/2}`` with ``N = 3n`` the total vertex count.
    """
    if t < 2:
        raise InvalidParameterError("t must be at least 2")
    return 3 * math.sqrt((t - 1) / 2), math.sqrt((t - 1) / 6)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    t: int
    upper: float
    upper_floor: int
    asymptotic_constant: float
    chi3_constant: float
    normalized_upper: float
    p: Optional[int] = None
    lower: Optional[int] = None
    normalized_lower: Optional[float] = None
    predicted_normalized_lower: Optional[float] = None
    sandwich_ratio: Optional[float] = None

    def to_dict(self) -> dict:
        return {"schema": "v1", **asdict(self)}

    def csv_row(self) -> dict:
        return {k: getattr(self, k) for k in CSV_COLUMNS}


def bounds_report(n: int, t: int) -> BoundsReport:
    """Upper bound and constants for a bare part size, without a construction."""
    up = upper_bound(n, t)
    tri, chi3 = asymptotic_constants(t)
    return BoundsReport(
        n=n,
        t=t,
        upper=up,
        upper_floor=upper_bound_floor(n, t),
        asymptotic_constant=tri,
        chi3_constant=chi3,
        normalized_upper=up / n**1.5,
    )


def sandwich_report(t: int, p: int) -> BoundsReport:
    """Compare the construction's edge count with the upper bound at ``n = p(p-1)/(2(t-1))``.

    ``predicted_normalized_lower`` is ``3 sqrt((t-1)/2) sqrt(1 - 1/p)``, which
    ``lower / n^{3/2}`` must equal identically.
    """
    lower = lower_bound_formula(p, t)
    n = p * (p - 1) // (2 * (t - 1))
    base = bounds_report(n, t)
    return BoundsReport(
        **{
            **asdict(base),
            "p": p,
            "lower": lower,
            "normalized_lower": lower / n**1.5,
            "predicted_normalized_lower": base.asymptotic_constant * math.sqrt(1 - 1 / p),
            "sandwich_ratio": base.upper / lower,
        }
    )


def write_csv(reports: Iterable[BoundsReport], fh=None) -> str:
    """Write grid rows with the fixed column set; returns the text."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in r.csv_row().items()})
    text = buf.getvalue()
    if fh is not None:
        fh.write(text)
    return text

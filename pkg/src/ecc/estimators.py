"""Peaks-over-threshold estimators of extremal dependence between paired curves.

Given index-aligned samples (x_i, y_i) with radii R_i = ||x_i|| v ||y_i|| and
the k-th largest radius R_(k), the exceedance set is {i : R_i >= R_(k)} and

    sigma_hat = (1/k) sum_exc <x_i, y_i> / R_(k)^2
    rho_hat   = sum_exc <x_i, y_i> / sqrt(sum_exc ||x_i||^2 * sum_exc ||y_i||^2)
    gamma_hat = (1/k) sum_exc <x_i/R_i, y_i/R_i>

Ties at R_(k) all enter the sums while sigma_hat and gamma_hat keep k as the
divisor. rho_hat restricts numerator and both denominator sums to the same
exceedance set, which keeps it in [-1, 1] by Cauchy-Schwarz; it is clamped to
that interval to absorb last-ulp rounding.

``estimate_pipeline`` wraps the full workflow: optional centering, marginal
tail-index fits, a power transformation when the margins are not tail
equivalent, k-selection on the radii, and the three estimates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import center, check_paired, inner_products, norms
from .errors import DegenerateSampleError, DegenerateTailError, DomainError, GridMismatchError
from .tail import HillSeries, TailFit, hill, hill_series, select_k_mindist, select_k_ks
from .transform import power_transform


@dataclass(frozen=True)
class EccReport:
    """The three extremal-dependence estimates plus the selection metadata."""

    sigma_xy: float
    rho_xy: float
    gamma_xy: float
    k: int
    r_k: float
    exceedance_indices: np.ndarray


@dataclass(frozen=True)
class PipelineReport:
    """Everything the estimation pipeline computed along the way."""

    ecc: EccReport
    k_method: str
    centered: bool
    tail_x: TailFit
    tail_y: TailFit
    hill_x: HillSeries | None
    hill_y: HillSeries | None
    transformed: bool
    alpha_target: float
    tau: float


def order_statistic(values, k: int) -> float:
    """The k-th largest value, k = 1..n, duplicates counted with multiplicity."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise DomainError("values must be a 1-d sequence")
    if not 1 <= k <= arr.size:
        raise DomainError(f"k={k} out of range [1, {arr.size}]")
    return float(np.sort(arr, kind="stable")[::-1][k - 1])


def _exceedance_stats(x, y, k: int):
    xs, ys = check_paired(x, y)
    radii = np.maximum(norms(xs), norms(ys))
    r_k = order_statistic(radii, k)
    if r_k <= 0.0:
        raise DegenerateSampleError(f"fewer than k={k} pairs with a nonzero curve")
    idx = np.flatnonzero(radii >= r_k)
    return xs, ys, radii, r_k, idx


def extremal_covariance(x, y, k: int) -> float:
    """sigma_hat: mean scaled inner product over the k largest pairs."""
    xs, ys, _, r_k, idx = _exceedance_stats(x, y, k)
    ips = inner_products(xs[idx], ys[idx])
    return float(ips.sum() / (k * r_k * r_k))


def extremal_correlation(x, y, k: int) -> float:
    """rho_hat: correlation-normalized inner products over the k largest pairs."""
    xs, ys, _, _, idx = _exceedance_stats(x, y, k)
    sum_ip = float(inner_products(xs[idx], ys[idx]).sum())
    sum_x2 = float(np.sum(norms(xs[idx]) ** 2))
    sum_y2 = float(np.sum(norms(ys[idx]) ** 2))
    if sum_x2 <= 0.0 or sum_y2 <= 0.0:
        raise DegenerateSampleError("a margin is identically zero on the exceedance set")
    return float(np.clip(sum_ip / np.sqrt(sum_x2 * sum_y2), -1.0, 1.0))


def angular_dependence(x, y, k: int) -> float:
    """gamma_hat: mean inner product of radius-normalized pairs over the exceedances."""
    xs, ys, radii, _, idx = _exceedance_stats(x, y, k)
    terms = inner_products(xs[idx], ys[idx]) / radii[idx] ** 2
    return float(terms.sum() / k)


def ecc_report(x, y, k: int) -> EccReport:
    """All three estimates on one exceedance set."""
    xs, ys, radii, r_k, idx = _exceedance_stats(x, y, k)
    ips = inner_products(xs[idx], ys[idx])
    sum_x2 = float(np.sum(norms(xs[idx]) ** 2))
    sum_y2 = float(np.sum(norms(ys[idx]) ** 2))
    if sum_x2 <= 0.0 or sum_y2 <= 0.0:
        raise DegenerateSampleError("a margin is identically zero on the exceedance set")
    return EccReport(
        sigma_xy=float(ips.sum() / (k * r_k * r_k)),
        rho_xy=float(np.clip(float(ips.sum()) / np.sqrt(sum_x2 * sum_y2), -1.0, 1.0)),
        gamma_xy=float(np.sum(ips / radii[idx] ** 2) / k),
        k=k,
        r_k=r_k,
        exceedance_indices=idx,
    )


def _select_k(values, k_method: str, k: int | None) -> TailFit:
    if k_method == "fixed":
        if k is None:
            raise DomainError("k_method='fixed' requires k")
        return hill(values, k)
    if k_method == "mindist":
        return select_k_mindist(values)
    if k_method == "ks":
        return select_k_ks(values)
    raise DomainError(f"unknown k_method {k_method!r}")


def estimate_pipeline(
    x,
    y,
    k: int | None = None,
    k_method: str = "mindist",
    alpha_target: float = 3.0,
    tau: float = 0.5,
    do_center: bool = True,
    attach_hill: bool = True,
) -> PipelineReport:
    """Run the full estimation workflow on a paired sample.

    Steps: (1) center both margins around their sample mean curves; (2) fit a
    marginal tail index to each margin's norms, with k chosen by ``k_method``
    (pass ``k`` to fix it); (3) if the marginal indexes differ by more than
    ``tau``, power-transform both margins to ``alpha_target``; (4) choose k on
    the pair radii by the same method and compute the three estimators.

    Hill series for both margins are attached for visual regular-variation
    checks; nothing is auto-rejected on their account.
    """
    if alpha_target <= 0:
        raise DomainError("alpha_target must be positive")
    if tau < 0:
        raise DomainError("tau must be nonnegative")
    if k_method == "fixed" and k is None:
        raise DomainError("k_method='fixed' requires k")
    if k is not None:
        k_method = "fixed"

    xs, ys = check_paired(x, y)
    if do_center:
        xs = center(xs)
        ys = center(ys)

    nx = norms(xs)
    ny = norms(ys)
    tail_x = _select_k(nx, k_method, k)
    tail_y = _select_k(ny, k_method, k)

    hx = hy = None
    if attach_hill:
        hx = _hill_series_or_none(nx)
        hy = _hill_series_or_none(ny)

    transformed = abs(tail_x.alpha_hat - tail_y.alpha_hat) > tau
    if transformed:
        xs = power_transform(xs, tail_x.alpha_hat, alpha_target)
        ys = power_transform(ys, tail_y.alpha_hat, alpha_target)

    radii = np.maximum(norms(xs), norms(ys))
    fit_r = _select_k(radii, k_method, k)
    report = ecc_report(xs, ys, fit_r.k)
    return PipelineReport(
        ecc=report,
        k_method=k_method,
        centered=do_center,
        tail_x=tail_x,
        tail_y=tail_y,
        hill_x=hx,
        hill_y=hy,
        transformed=transformed,
        alpha_target=alpha_target,
        tau=tau,
    )


def _hill_series_or_none(values) -> HillSeries | None:
    # advisory attachment: a series that cannot be computed is simply omitted
    v = np.asarray(values, dtype=float)
    k_max = min(v.size - 1, int(np.sum(v > 0)) - 1)
    if k_max < 2:
        return None
    try:
        return hill_series(v, k_max)
    except (DomainError, DegenerateTailError):
        return None


def pairwise_matrix(samples, return_reports: bool = False, **options):
    """Pairwise rho_hat matrix across m functional samples.

    Entry (a, b) runs ``estimate_pipeline`` on the pair; the result is exactly
    symmetric (the radii and all sums are), so each pair is computed once. The
    diagonal is 1 by definition. With ``return_reports=True`` also returns a
    dict mapping (a, b), a < b, to the PipelineReport.
    """
    arrs = [np.asarray(s, dtype=float) for s in samples]
    if len(arrs) < 2:
        raise DomainError("need at least two samples")
    shape = arrs[0].shape
    for i, a in enumerate(arrs):
        if a.ndim != 2 or a.shape != shape:
            raise GridMismatchError(f"sample {i} has shape {a.shape}, expected {shape}")
    m = len(arrs)
    out = np.eye(m)
    reports: dict[tuple[int, int], PipelineReport] = {}
    for a in range(m):
        for b in range(a + 1, m):
            rep = estimate_pipeline(arrs[a], arrs[b], **options)
            out[a, b] = out[b, a] = rep.ecc.rho_xy
            reports[(a, b)] = rep
    if return_reports:
        return out, reports
    return out

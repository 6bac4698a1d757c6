"""Power transformation driving a sample's norm tail index to a target value.

Each curve x maps to x / ||x||^(1 - alpha_source/alpha_target). The direction
x/||x|| is untouched; only the scale changes, so ||g(x)|| = ||x||^(alpha_source/
alpha_target) and a Pareto(alpha_source) norm becomes Pareto(alpha_target).
Zero curves map to zero curves (continuous extension of the 0/0 case).
"""
from __future__ import annotations

import numpy as np

from .curves import as_sample, norms
from .errors import DomainError


def power_transform(s, alpha_source: float, alpha_target: float) -> np.ndarray:
    """Rescale every curve so the norm tail index moves from alpha_source to alpha_target."""
    if alpha_source <= 0 or alpha_target <= 0:
        raise DomainError("tail indexes must be positive")
    arr = as_sample(s)
    r = norms(arr)
    with np.errstate(divide="ignore"):
        factor = np.where(r > 0, r ** (alpha_source / alpha_target - 1.0), 0.0)
    return arr * factor[:, None]

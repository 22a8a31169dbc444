"""Certified enclosures of Stirling-type log mismatches and bound verification."""

from ._core import (
    DomainError,
    Enclosure,
    EnclosureResult,
    __version__,
    bound_enclosure,
    bound_info,
    bound_value,
    bounds,
    figure_csv,
    figures,
    iota,
    iota_ref,
    lgamma_ref,
    log_factorial_hat,
    log_pi,
    log_s,
    m,
    m_ref,
    mhat,
    mhat_ref,
    sawtooth,
    scan_bound,
    scan_conjecture,
)

__all__ = [
    "DomainError",
    "Enclosure",
    "EnclosureResult",
    "__version__",
    "bound_enclosure",
    "bound_info",
    "bound_value",
    "bounds",
    "figure_csv",
    "figures",
    "iota",
    "iota_ref",
    "lgamma_ref",
    "log_factorial_hat",
    "log_pi",
    "log_s",
    "m",
    "m_ref",
    "mhat",
    "mhat_ref",
    "sawtooth",
    "scan_bound",
    "scan_conjecture",
]

"""Mutual information, discord and redundancy for a qubit decohered by a
symmetric environment of qubits."""

from ._core import (
    EnvQubit,
    IdentityCheck,
    InfoPoint,
    ModelParams,
    RedundancyResult,
    SystemQubit,
    __version__,
    asymptotic_deviation,
    binary_entropy,
    check_identities,
    discord,
    discord_approx,
    env_state_for_haziness,
    fragment_entropy,
    fragment_spectrum,
    haziness,
    limiting_redundancy,
    make_env_state,
    misalignment_capacity,
    mutual_information,
    plateau_deviation,
    redundancy,
    scaling_hazy,
    scaling_misaligned,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

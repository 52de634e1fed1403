"""FSS earth-station to 5G UE interference engine (C++ core)."""

from ._core import (
    CarrierSpec,
    EsClass,
    EsEmitter,
    Lobe,
    Scenario,
    SeparationResult,
    ValidationError,
    VictimUe,
    dbm_to_mw,
    eirp_table,
    es_eirp_dbm,
    fspl_db,
    interference_dbm,
    mw_to_dbm,
    separation_distance,
    separation_distance_bisection,
    separation_table,
    sinr_db,
    sweep,
    sweep_csv,
    thermal_noise_dbm,
)

__all__ = [
    "CarrierSpec",
    "EsClass",
    "EsEmitter",
    "Lobe",
    "Scenario",
    "SeparationResult",
    "ValidationError",
    "VictimUe",
    "dbm_to_mw",
    "eirp_table",
    "es_eirp_dbm",
    "fspl_db",
    "interference_dbm",
    "mw_to_dbm",
    "separation_distance",
    "separation_distance_bisection",
    "separation_table",
    "sinr_db",
    "sweep",
    "sweep_csv",
    "thermal_noise_dbm",
]

"""Brute-force ground truth over small prime fields."""
from quiverfan.oracle.linalg import FIELDS
from quiverfan.oracle.reps import (
    BridgeResult,
    OracleHomExt,
    OracleStability,
    Rep,
    brute_generic_homext,
    ext_dim,
    hom_dim,
    oracle_stability,
    rep_stability,
    schofield_det,
    stability_bridge,
    subrep_dim_vectors,
)

__all__ = [
    "FIELDS", "BridgeResult", "OracleHomExt", "OracleStability", "Rep", "brute_generic_homext",
    "ext_dim", "hom_dim", "oracle_stability", "rep_stability", "schofield_det", "stability_bridge",
    "subrep_dim_vectors",
]

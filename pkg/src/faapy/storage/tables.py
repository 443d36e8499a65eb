"""
Tabular views of a run trace.
"""

from typing import List

import pandas as pd

from faapy.models.trace import RunTrace

# Fixed column order of the per-iteration CSV
CSV_COLUMNS: List[str] = ["k", "residual", "theta", "cond_F", "m_k", "cs", "beta", "kept_mask"]

EXTENDED_COLUMNS: List[str] = CSV_COLUMNS + [
    "sigma_min",
    "dropped_length",
    "dropped_angle",
    "tsvd_rank",
    "elapsed_s",
]


def trace_frame(trace: RunTrace, extended: bool = False) -> pd.DataFrame:
    """
    One row per iteration record.

    kept_mask is a 0/1 string with the newest column leftmost. The extended
    frame adds filter telemetry and wall-clock time, which is not
    reproducible between runs.
    """
    rows = []
    for record in trace.records:
        row = {
            "k": record.k,
            "residual": record.residual_norm,
            "theta": record.theta,
            "cond_F": record.cond_F,
            "m_k": record.m_k,
            "cs": record.cs_used,
            "beta": record.beta_used,
            "kept_mask": record.mask_string,
        }
        if extended:
            row.update({
                "sigma_min": record.sigma_min,
                "dropped_length": record.dropped_length,
                "dropped_angle": record.dropped_angle,
                "tsvd_rank": record.tsvd_rank,
                "elapsed_s": record.elapsed_s,
            })
        rows.append(row)

    columns = EXTENDED_COLUMNS if extended else CSV_COLUMNS
    frame = pd.DataFrame(rows, columns=columns)
    if extended:
        frame["sigma_min"] = frame["sigma_min"].astype("float64")
        frame["tsvd_rank"] = frame["tsvd_rank"].astype("Int64")
    return frame

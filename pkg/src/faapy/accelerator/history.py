"""
Sliding window of paired difference columns.
"""

from typing import List, Sequence, Tuple

import numpy as np


class ColumnHistory:
    """
    Paired columns of E (iterate differences) and F (residual differences).

    Columns are stored newest first. Column i of E and column i of F come
    from the same iteration and are only ever removed together.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError(f"History capacity must be nonnegative, got {capacity}")
        self.capacity = capacity
        self.E_columns: List[np.ndarray] = []
        self.F_columns: List[np.ndarray] = []

    def __len__(self) -> int:
        return len(self.F_columns)

    def __bool__(self) -> bool:
        return len(self.F_columns) > 0

    def push(self, e: np.ndarray, f: np.ndarray, depth_cap: int) -> None:
        """
        Prepend a new column pair and drop the oldest pairs beyond the cap.

        Args:
            e: x_k - x_{k-1}.
            f: w_{k+1} - w_k.
            depth_cap: Current depth cap, itself clipped to the capacity.
        """
        if e.shape != f.shape:
            raise ValueError(f"Column shapes differ: {e.shape} vs {f.shape}")
        self.E_columns.insert(0, e)
        self.F_columns.insert(0, f)
        self.truncate(depth_cap)

    def truncate(self, depth_cap: int) -> None:
        """Drop the oldest pairs so that at most min(depth_cap, capacity) remain."""
        limit = max(0, min(depth_cap, self.capacity))
        del self.E_columns[limit:]
        del self.F_columns[limit:]

    def apply_mask(self, kept_mask: Sequence[bool]) -> None:
        """Keep the pairs flagged in kept_mask (newest first)."""
        if len(kept_mask) != len(self):
            raise ValueError(f"Mask of length {len(kept_mask)} for {len(self)} columns")
        self.E_columns = [e for e, keep in zip(self.E_columns, kept_mask) if keep]
        self.F_columns = [f for f, keep in zip(self.F_columns, kept_mask) if keep]

    def clear(self) -> None:
        self.E_columns.clear()
        self.F_columns.clear()

    def matrices(self) -> Tuple[np.ndarray, np.ndarray]:
        """E and F as n x m arrays."""
        if not self:
            raise ValueError("History is empty")
        return np.column_stack(self.E_columns), np.column_stack(self.F_columns)

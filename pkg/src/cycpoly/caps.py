"""Enumeration and search budgets.

``CYC_MAX_CELLS`` in the environment overrides the cycle-enumeration cap
(an absolute count of cycles, default ``2**20``).
"""

import os

MAX_GROUND = 64
MAX_KERNEL_DIM = 20
MAX_CIRCUIT_DUAL_GROUND = 16
MAX_ISO_GROUND = 64
SEARCH_FRONTIER = 100_000
RETRACT_MAX_CIRCUIT = 6
DEFAULT_DEGREE_CAP = 8
MAX_FIBER_MONOMIALS = 5_000_000
AFFINE_SEARCH_BUDGET = 2_000_000


def max_cycles() -> int:
    raw = os.environ.get("CYC_MAX_CELLS")
    if raw:
        return int(raw)
    return 1 << MAX_KERNEL_DIM

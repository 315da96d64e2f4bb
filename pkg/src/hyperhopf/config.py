"""Enumeration caps and the exceptions raised when they are exceeded.

Defaults can be overridden through environment variables::

    HYPERHOPF_MAX_VERTICES              partitions / subsets / canonical forms (10)
    HYPERHOPF_MAX_ORIENTATION_VERTICES  quasi-order enumeration (7)
    HYPERHOPF_MAX_MC_VERTICES           multi-complex canonical forms (6)
    HYPERHOPF_MAX_MC_INSTANCES          multi-complex canonical forms (6)
    HYPERHOPF_WORK_BOUND                brute-force oracles, spanning subsets (10**7)
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class ResourceCapError(RuntimeError):
    """An enumeration would exceed a configured cap."""


class HyperhopfError(ValueError):
    """Invalid input to a structural operation."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value <= 0:
        raise HyperhopfError(f"{name} must be positive, got {value}")
    return value


@dataclass
class Caps:
    max_vertices: int = 10
    max_orientation_vertices: int = 7
    max_mc_vertices: int = 6
    max_mc_instances: int = 6
    work_bound: int = 10**7

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            max_vertices=_env_int("HYPERHOPF_MAX_VERTICES", 10),
            max_orientation_vertices=_env_int("HYPERHOPF_MAX_ORIENTATION_VERTICES", 7),
            max_mc_vertices=_env_int("HYPERHOPF_MAX_MC_VERTICES", 6),
            max_mc_instances=_env_int("HYPERHOPF_MAX_MC_INSTANCES", 6),
            work_bound=_env_int("HYPERHOPF_WORK_BOUND", 10**7),
        )


caps = Caps.from_env()


def check_vertices(n: int, what: str = "enumeration") -> None:
    if n > caps.max_vertices:
        raise ResourceCapError(
            f"{what} on {n} vertices exceeds the vertex cap {caps.max_vertices}"
        )


def check_work(amount: int, what: str) -> None:
    if amount > caps.work_bound:
        raise ResourceCapError(
            f"{what} needs {amount} steps, above the work bound {caps.work_bound}"
        )

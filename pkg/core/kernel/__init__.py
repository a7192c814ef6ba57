"""Kernelizer: pendant-tree pruning, degree-2 path shortening and layout lifting."""
from core.graph import DegreeTwoPath, maximal_degree_two_paths
from .kernel import (
    Kernel,
    KernelBound,
    PathRecord,
    kernel_1page,
    kernel_2page_crossed,
    kernel_2page_crossings,
    shorten_paths,
)
from .lift import lift_layout

__all__ = [
    "DegreeTwoPath", "maximal_degree_two_paths",
    "Kernel", "KernelBound", "PathRecord",
    "kernel_1page", "kernel_2page_crossed", "kernel_2page_crossings", "shorten_paths",
    "lift_layout",
]

"""Graph kernel, singular-copy detection, constructions, formulas and exact search"""
from core.graph import Graph, PartSizes
from core.patterns import PatternGraph, pattern
from core.singular import check_worm, find_singular_copy, find_worm_coloring, is_singular_free

__all__ = [
    "Graph",
    "PartSizes",
    "PatternGraph",
    "pattern",
    "check_worm",
    "find_singular_copy",
    "find_worm_coloring",
    "is_singular_free",
]

"""Certified (1,1,2,2)-packing colorings of claw-free cubic graphs."""

from ._core import (
    Graph,
    NotClawFreeError,
    NotCubicError,
    PackfourError,
    SSpecError,
    StuckError,
    bfs_distances,
    break_triangles,
    claw_free_corpus,
    color,
    complete_k4,
    cycle_graph,
    diamond_necklace,
    exists_spacking,
    experiment_problem2,
    find_claw,
    inflate,
    is_cubic,
    k33,
    list_triangles,
    named_graph,
    parse_edge_list,
    parse_graph6,
    petersen,
    prism,
    random_cubic,
    shortest_odd_cycle,
    verify_certificate,
    verify_spacking,
    write_edge_list,
    write_graph6,
)

CLASS_NAMES = ("1a", "1b", "2a", "2b")

__all__ = [name for name in dir() if not name.startswith("_")]

"""Quantum-walk transition matrices, graph zeta functions and their determinant identities."""

import json

from ._core import (
    ROOK_4X4_GRAPH6,
    SHRIKHANDE_GRAPH6,
    Error,
    Graph,
    HypothesisError,
    IdentityViolation,
    ParseError,
    ResourceGuard,
    _distinguish_json,
    _verify_json,
    _zeta_json,
    charpoly,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    spectrum,
)

__all__ = [
    "Error", "Graph", "HypothesisError", "IdentityViolation", "ParseError", "ResourceGuard",
    "ROOK_4X4_GRAPH6", "SHRIKHANDE_GRAPH6", "charpoly", "distinguish", "encode_graph6",
    "parse_edge_list", "parse_graph6", "spectrum", "verify", "zeta",
]


def zeta(graph, order=8):
    """Edge and vertex forms of 1/zeta plus the zeta series to `order`."""
    return json.loads(_zeta_json(graph, order))


def verify(seed=42, trials=10):
    """Run the identity suite over the built-in corpus."""
    return json.loads(_verify_json(seed, trials))


def distinguish(first, second):
    """First level among A, U+, (U^2)+, (U^3)+ whose char polys differ."""
    return json.loads(_distinguish_json(first, second))

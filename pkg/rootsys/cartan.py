"""Cartan matrices for D_n and E_6, E_7, E_8.

Node numbering:
    D_n: chain 1-2-...-(n-2), with n-1 and n both attached to n-2.
    E_r: chain 1-3-4-5-...-r, with 2 attached to 4.
"""

from typing import List, Tuple

from .types import SimpleType


def dynkin_edges(t: SimpleType) -> List[Tuple[int, int]]:
    n = t.rank
    if t.family == 'D':
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
        return edges
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, n)]
    return edges


def cartan_matrix(t: SimpleType) -> Tuple[Tuple[int, ...], ...]:
    """Symmetric Cartan matrix, 0-based rows/columns for nodes 1..rank."""
    n = t.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in dynkin_edges(t):
        m[a - 1][b - 1] = -1
        m[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in m)

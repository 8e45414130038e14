# src/pgl3/cluster/quiver.py
"""Canonical labels of seeds up to vertex relabeling.

Color refinement on signed weighted neighbourhoods, then individualization of
the first non-singleton cell; the label is the least epsilon matrix over all
leaves. Vertices that can be swapped by a transposition automorphism are
branched on once.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from pgl3.cluster.seed import Seed
from pgl3.core.config import settings
from pgl3.core.exceptions import SizeBoundExceededError


Label = Tuple[int, Tuple[int, ...]]


def _refine(colors: Dict[str, int], seed: Seed) -> Dict[str, int]:
    table = seed.table
    cells = len(set(colors.values()))
    while True:
        signatures = {
            v: (colors[v], tuple(sorted((e, colors[u]) for u, e in table[v].items())))
            for v in colors
        }
        ranking = {s: r for r, s in enumerate(sorted(set(signatures.values())))}
        refined = {v: ranking[signatures[v]] for v in colors}
        if len(ranking) == cells:
            return refined
        colors, cells = refined, len(ranking)


def _swappable(seed: Seed, u: str, v: str) -> bool:
    if seed.eps(u, v) != 0:
        return False
    row_u, row_v = seed.table[u], seed.table[v]
    return row_u == row_v


def _label(seed: Seed, order: Sequence[str]) -> Tuple[int, ...]:
    return tuple(seed.eps(i, j) for i in order for j in order)


def _search(seed: Seed, colors: Dict[str, int]) -> Tuple[Tuple[int, ...], List[str]]:
    colors = _refine(colors, seed)
    cells: Dict[int, List[str]] = {}
    for v, c in colors.items():
        cells.setdefault(c, []).append(v)
    open_cells = [cells[c] for c in sorted(cells) if len(cells[c]) > 1]
    if not open_cells:
        order = sorted(colors, key=colors.get)
        return _label(seed, order), order
    cell = sorted(open_cells[0])
    branches = cell
    if all(_swappable(seed, cell[0], v) for v in cell[1:]):
        branches = cell[:1]
    best: Optional[Tuple[Tuple[int, ...], List[str]]] = None
    for v in branches:
        individual = {u: (2 * c + (0 if u == v else 1)) for u, c in colors.items()}
        candidate = _search(seed, individual)
        if best is None or candidate[0] < best[0]:
            best = candidate
    return best


def canonical_order(seed: Seed, bound: Optional[int] = None) -> List[str]:
    bound = settings.QUIVER_SIZE_BOUND if bound is None else bound
    if len(seed.vertices) > bound:
        raise SizeBoundExceededError(
            f"seed has {len(seed.vertices)} vertices, bound is {bound}"
        )
    if not seed.vertices:
        return []
    return _search(seed, {v: 0 for v in seed.vertices})[1]


def quiver_canonical_form(seed: Seed, bound: Optional[int] = None) -> Label:
    order = canonical_order(seed, bound)
    return len(order), _label(seed, order)


def is_isomorphic(first: Seed, second: Seed, bound: Optional[int] = None) -> bool:
    return quiver_canonical_form(first, bound) == quiver_canonical_form(second, bound)

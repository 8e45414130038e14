# src/pgl3/cluster/finite_type.py
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from pgl3.cluster.mutation import mutate_epsilon
from pgl3.cluster.quiver import Label, quiver_canonical_form
from pgl3.cluster.seed import Quiver, Seed
from pgl3.core.config import settings
from pgl3.core.exceptions import InvalidInputError, SearchCapExceededError
from pgl3.services.workers import run_parallel


logger = logging.getLogger(__name__)

DYNKIN_NAME = re.compile(r"([ADE])_?(\d+)\Z")


def parse_dynkin(name: str) -> Tuple[str, int]:
    match = DYNKIN_NAME.match(name.strip().upper())
    if not match:
        raise InvalidInputError(f"unknown Dynkin diagram {name!r}")
    family, rank = match.group(1), int(match.group(2))
    if rank < 1 or (family == "D" and rank < 4) or (family == "E" and rank not in (6, 7, 8)):
        raise InvalidInputError(f"unknown Dynkin diagram {name!r}")
    return family, rank


def dynkin_graph(name: str) -> nx.Graph:
    family, n = parse_dynkin(name)
    if family == "A":
        return nx.path_graph(n)
    if family == "D":
        graph = nx.path_graph(n - 1)
        graph.add_edge(n - 3, n - 1)
        return graph
    graph = nx.path_graph(n - 1)
    graph.add_edge(2, n - 1)
    return graph


def dynkin_names(rank: int) -> List[str]:
    names = [f"A{rank}"]
    if rank >= 4:
        names.append(f"D{rank}")
    if rank in (6, 7, 8):
        names.append(f"E{rank}")
    return names


def dynkin_seed(name: str) -> Seed:
    """Alternating orientation of the diagram, vertices ``v0 .. v{n-1}``."""
    graph = dynkin_graph(name)
    colouring = nx.bipartite.color(graph)
    entries = []
    for a, b in graph.edges():
        i, j = (a, b) if colouring[a] == 0 else (b, a)
        entries.append((f"v{i}", f"v{j}", 1))
    return Seed.from_entries([f"v{i}" for i in sorted(graph.nodes)], entries)


def is_dynkin_orientation(seed: Seed, name: str) -> bool:
    if any(v > 1 for _, _, v in seed.arrows):
        return False
    target = dynkin_graph(name)
    if len(seed.vertices) != target.number_of_nodes():
        return False
    underlying = Quiver.from_seed(seed).underlying_graph()
    return nx.is_tree(underlying) and nx.is_isomorphic(underlying, target)


@dataclass
class SearchResult:
    found: bool
    target: Optional[str]
    sequence: List[str] = field(default_factory=list)
    endpoint: Optional[Seed] = None
    states: int = 0
    depth: int = 0
    exhausted: bool = False

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "target": self.target,
            "witness": self.sequence if self.found else "NOT_FOUND",
            "endpoint": self.endpoint.to_dict() if self.endpoint is not None else None,
            "states": self.states,
            "depth": self.depth,
            "class_exhausted": self.exhausted,
        }


def _expand(state: Tuple[Seed, Optional[int]]) -> List[Tuple[str, Seed, Label]]:
    seed, bound = state
    result = []
    for k in seed.vertices:
        child = mutate_epsilon(seed, k)
        result.append((k, child, quiver_canonical_form(child, bound)))
    return result


def _bfs(
    seed: Seed,
    targets: Sequence[str],
    depth_limit: Optional[int],
    cap: Optional[int],
    jobs: Optional[int],
    bound: Optional[int],
    stop_on_hit: bool = True,
) -> SearchResult:
    cap = settings.SEARCH_STATE_CAP if cap is None else cap
    for name in targets:
        if is_dynkin_orientation(seed, name):
            return SearchResult(True, name, [], seed, states=1, depth=0)
    start = quiver_canonical_form(seed, bound)
    visited = {start}
    frontier: List[Tuple[Seed, List[str]]] = [(seed, [])]
    depth = 0
    while frontier:
        if depth_limit is not None and depth >= depth_limit:
            return SearchResult(False, None, states=len(visited), depth=depth)
        depth += 1
        expansions = run_parallel(_expand, [(s, bound) for s, _ in frontier], jobs)
        next_frontier: List[Tuple[Seed, List[str]]] = []
        for (parent, path), children in zip(frontier, expansions):
            for k, child, label in children:
                if label in visited:
                    continue
                visited.add(label)
                if len(visited) > cap:
                    raise SearchCapExceededError(
                        "mutation class exceeds the state cap",
                        states=len(visited),
                        depth=depth,
                        cap=cap,
                    )
                child_path = path + [k]
                if stop_on_hit:
                    for name in targets:
                        if is_dynkin_orientation(child, name):
                            logger.info(
                                "reached %s after %d mutations, %d states",
                                name,
                                len(child_path),
                                len(visited),
                            )
                            return SearchResult(
                                True, name, child_path, child, len(visited), depth
                            )
                next_frontier.append((child, child_path))
        logger.debug("depth %d: %d new states", depth, len(next_frontier))
        frontier = next_frontier
    return SearchResult(False, None, states=len(visited), depth=depth - 1, exhausted=True)


def mutation_class_search(
    seed: Seed,
    target: str,
    depth_limit: Optional[int] = None,
    cap: Optional[int] = None,
    jobs: Optional[int] = None,
    bound: Optional[int] = None,
) -> SearchResult:
    """Breadth-first search for a mutation sequence reaching an orientation of ``target``."""
    parse_dynkin(target)
    return _bfs(seed, [target], depth_limit, cap, jobs, bound)


def classify_finite_type(
    seed: Seed,
    depth_limit: Optional[int] = None,
    cap: Optional[int] = None,
    jobs: Optional[int] = None,
) -> SearchResult:
    return _bfs(seed, dynkin_names(len(seed.vertices)), depth_limit, cap, jobs, None)


@dataclass(frozen=True)
class ClassStatistics:
    size: int
    depth: int


def mutation_class(
    seed: Seed, cap: Optional[int] = None, jobs: Optional[int] = None
) -> ClassStatistics:
    """Size of the whole mutation class modulo isomorphism."""
    result = _bfs(seed, [], None, cap, jobs, None, stop_on_hit=False)
    return ClassStatistics(result.states, result.depth)

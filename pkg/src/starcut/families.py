"""Named graph families used by tests and the command line."""
from __future__ import annotations

from .graph import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def book_b5() -> Graph:
    """Five vertices: 0 and 1 each adjacent to all of {2, 3, 4}, plus edges
    2-3 and 3-4.  Its only 3-cut separating 0 from 1 is {2, 3, 4}, yet the
    single star centered at 3 already disconnects it."""
    return Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def build(name: str, param: str | None = None) -> Graph:
    """Build a named family member; param is the family's size argument."""
    name = name.lower().replace("-", "_")
    if name == "b5":
        return book_b5()
    if name == "petersen":
        return petersen()
    if param is None:
        raise ValueError(f"family {name!r} needs --param")
    if name == "complete_bipartite":
        parts = param.split(",")
        if len(parts) != 2:
            raise ValueError("complete_bipartite takes --param A,B")
        return complete_bipartite(int(parts[0]), int(parts[1]))
    builders = {"cycle": cycle, "path": path_graph, "complete": complete}
    if name not in builders:
        raise ValueError(f"unknown family {name!r}")
    return builders[name](int(param))

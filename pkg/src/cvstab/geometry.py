"""L x L torus cell complex: vertices, oriented edges, plaquettes, homology.

Conventions (fixed once, used everywhere):
- vertex v(i,j); horizontal edge h(i,j) runs v(i,j) -> v(i+1,j); vertical edge
  v(i,j) runs v(i,j) -> v(i,j+1); indices are periodic mod L.
- plaquette p(i,j) has corners v(i,j), v(i+1,j), v(i+1,j+1), v(i,j+1); its
  boundary circulates counterclockwise: +h(i,j), +v(i+1,j), -h(i,j+1), -v(i,j).
- the star of a vertex signs edges + when oriented out of the vertex.
- the "southeast" corner of p(i,j) is v(i+1,j) (charge-attachment convention).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Edge:
    orientation: str  # "h" or "v"
    i: int
    j: int

    def __str__(self):
        return f"{self.orientation}({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Vertex:
    i: int
    j: int

    def __str__(self):
        return f"v({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Plaquette:
    i: int
    j: int

    def __str__(self):
        return f"p({self.i},{self.j})"


class Torus:
    """Periodic L x L square lattice, L >= 2."""

    def __init__(self, L: int):
        if L < 2:
            raise ValueError("torus size must be at least 2")
        self.L = L
        self.vertices = [Vertex(i, j) for j in range(L) for i in range(L)]
        self.plaquettes = [Plaquette(i, j) for j in range(L) for i in range(L)]
        self.edges = [Edge(o, i, j) for j in range(L) for i in range(L) for o in ("h", "v")]

    def edge(self, orientation: str, i: int, j: int) -> Edge:
        return Edge(orientation, i % self.L, j % self.L)

    def vertex(self, i: int, j: int) -> Vertex:
        return Vertex(i % self.L, j % self.L)

    def plaquette(self, i: int, j: int) -> Plaquette:
        return Plaquette(i % self.L, j % self.L)

    def endpoints(self, e: Edge) -> tuple[Vertex, Vertex]:
        """(tail, head) of the oriented edge."""
        if e.orientation == "h":
            return self.vertex(e.i, e.j), self.vertex(e.i + 1, e.j)
        return self.vertex(e.i, e.j), self.vertex(e.i, e.j + 1)

    def star(self, v: Vertex) -> list[tuple[Edge, int]]:
        """Incident edges, signed + when oriented out of v."""
        return [
            (self.edge("h", v.i, v.j), +1),
            (self.edge("v", v.i, v.j), +1),
            (self.edge("h", v.i - 1, v.j), -1),
            (self.edge("v", v.i, v.j - 1), -1),
        ]

    def boundary(self, p: Plaquette) -> list[tuple[Edge, int]]:
        """Counterclockwise boundary circulation of p."""
        return [
            (self.edge("h", p.i, p.j), +1),
            (self.edge("v", p.i + 1, p.j), +1),
            (self.edge("h", p.i, p.j + 1), -1),
            (self.edge("v", p.i, p.j), -1),
        ]

    def adjacent_plaquettes(self, e: Edge) -> list[tuple[Plaquette, int]]:
        """The two plaquettes containing e, signed by e's coefficient in their
        boundaries."""
        if e.orientation == "h":
            return [(self.plaquette(e.i, e.j), +1), (self.plaquette(e.i, e.j - 1), -1)]
        return [(self.plaquette(e.i - 1, e.j), +1), (self.plaquette(e.i, e.j), -1)]

    def southeast(self, p: Plaquette) -> Vertex:
        return self.vertex(p.i + 1, p.j)

    def northwest_plaquette(self, v: Vertex) -> Plaquette:
        return self.plaquette(v.i - 1, v.j)

    def translate_edge(self, e: Edge, di: int, dj: int) -> Edge:
        return self.edge(e.orientation, e.i + di, e.j + dj)


def boundary_of_boundary_is_zero(geom: Torus) -> bool:
    """Every plaquette boundary is a closed chain (each vertex hit +1 and -1)."""
    for p in geom.plaquettes:
        count: dict[Vertex, int] = {}
        for e, sign in geom.boundary(p):
            tail, head = geom.endpoints(e)
            count[head] = count.get(head, 0) + sign
            count[tail] = count.get(tail, 0) - sign
        if any(c != 0 for c in count.values()):
            return False
    return True


@dataclass(frozen=True)
class HomologyBasis:
    """Fundamental cycle/cocycle pairs on the torus.

    eta1: direct cycle of horizontal edges in row j0; gamma1: dual cycle
    crossing the horizontal edges of column i0. eta2/gamma2 likewise with the
    roles of the directions swapped. Intersection numbers I(eta_i, gamma_j)
    form the identity matrix.
    """

    geometry: Torus
    i0: int = 0
    j0: int = 0

    def eta1(self) -> list[Edge]:
        g = self.geometry
        return [g.edge("h", i, self.j0) for i in range(g.L)]

    def gamma1_crossed(self) -> list[Edge]:
        g = self.geometry
        return [g.edge("h", self.i0, j) for j in range(g.L)]

    def eta2(self) -> list[Edge]:
        g = self.geometry
        return [g.edge("v", self.i0, j) for j in range(g.L)]

    def gamma2_crossed(self) -> list[Edge]:
        g = self.geometry
        return [g.edge("v", i, self.j0) for i in range(g.L)]

    def intersection_matrix(self) -> list[list[int]]:
        cycles = [self.eta1(), self.eta2()]
        cocycles = [self.gamma1_crossed(), self.gamma2_crossed()]
        return [[len(set(c) & set(g)) for g in cocycles] for c in cycles]

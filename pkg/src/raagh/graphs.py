"""Finite simple graphs as presentations of right-angled Artin groups.

Vertices are 0..n-1.  Edges are stored as a lexicographically sorted tuple of
(u, v) pairs with u < v, which fixes the edge/clique numbering used by every
other module: the k-cliques of a graph are always enumerated in lexicographic
order of their (strictly increasing) vertex tuples.

The module also houses the graph family generators (edgeless, complete,
clique edge-strings, face-strings, grids, hex thick triangles), the structural
recognizer for a subset of those families, and the three text formats
(edge list, adjacency CSV, JSON).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations


class ParseError(ValueError):
    """Raised for malformed graph input; message carries line/position info."""


# --------------------------------------------------------------------------
# core types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyCertificate:
    """Names a catalog family and its parameters.

    Only ``generate_family`` attaches certificates; ``recognize_family``
    re-derives them structurally.  ``family`` is one of:

    - "edgeless"      (n)
    - "complete"      (n)
    - "clique-string" (clique_size in 4..7, count = number of cliques)
    - "face-string"   (count = number of 4-cliques)
    - "grid"          (cells = tuple of (x, y) lattice cells)
    - "hex-triangle"  (side)
    """

    family: str
    n: int | None = None
    clique_size: int | None = None
    count: int | None = None
    cells: tuple[tuple[int, int], ...] | None = None
    side: int | None = None

    @classmethod
    def edgeless(cls, n: int) -> "FamilyCertificate":
        return cls("edgeless", n=n)

    @classmethod
    def complete(cls, n: int) -> "FamilyCertificate":
        return cls("complete", n=n)

    @classmethod
    def clique_string(cls, clique_size: int, count: int) -> "FamilyCertificate":
        return cls("clique-string", clique_size=clique_size, count=count)

    @classmethod
    def face_string(cls, count: int) -> "FamilyCertificate":
        return cls("face-string", count=count)

    @classmethod
    def grid(cls, cells) -> "FamilyCertificate":
        return cls("grid", cells=tuple(sorted(set((int(x), int(y)) for x, y in cells))))

    @classmethod
    def hex_triangle(cls, side: int) -> "FamilyCertificate":
        return cls("hex-triangle", side=side)

    def to_dict(self) -> dict:
        out = {"family": self.family}
        for key in ("n", "clique_size", "count", "side"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.cells is not None:
            out["cells"] = [list(c) for c in self.cells]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "FamilyCertificate":
        if not isinstance(data, dict) or "family" not in data:
            raise ParseError("certificate must be an object with a 'family' key")
        kwargs = {}
        for key in ("n", "clique_size", "count", "side"):
            if data.get(key) is not None:
                kwargs[key] = int(data[key])
        if data.get("cells") is not None:
            kwargs["cells"] = tuple(sorted((int(x), int(y)) for x, y in data["cells"]))
        return cls(str(data["family"]), **kwargs)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  ``edges`` is lex-sorted with u < v throughout."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    certificate: FamilyCertificate | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range or not ordered")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if tuple(sorted(self.edges)) != self.edges:
            raise ValueError("edges must be lexicographically sorted")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must equal vertex count")

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks (bit v of adjacency[u] = edge u~v)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def make_graph(n, edges, labels=None, certificate=None) -> Graph:
    """Build a Graph from any iterable of (u, v) pairs, normalizing order."""
    norm = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        norm.add((min(u, v), max(u, v)))
    return Graph(int(n), tuple(sorted(norm)),
                 labels=tuple(labels) if labels is not None else None,
                 certificate=certificate)


@dataclass(frozen=True)
class CliqueIndex:
    """All k-cliques of a graph in lexicographic order, with position lookup."""

    k: int
    cliques: tuple[tuple[int, ...], ...]

    @cached_property
    def position(self) -> dict:
        return {c: i for i, c in enumerate(self.cliques)}

    def __len__(self) -> int:
        return len(self.cliques)


# --------------------------------------------------------------------------
# clique enumeration and Betti numbers
# --------------------------------------------------------------------------

def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_cliques(g: Graph, k: int) -> CliqueIndex:
    """All k-cliques in lexicographic vertex-tuple order.

    Ordered DFS extension: each clique is grown by vertices larger than its
    last member that are adjacent to every current member, so the output
    order matches sorted(itertools.combinations) restricted to cliques.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = g.adjacency
    out: list[tuple[int, ...]] = []
    if k == 1:
        return CliqueIndex(1, tuple((v,) for v in range(g.n)))

    def extend(prefix: list[int], allowed: int, depth: int):
        if depth == k:
            out.append(tuple(prefix))
            return
        for v in _mask_bits(allowed):
            prefix.append(v)
            extend(prefix, allowed & adj[v] & ~((1 << (v + 1)) - 1), depth + 1)
            prefix.pop()

    full = (1 << g.n) - 1
    for v in range(g.n):
        extend([v], adj[v] & full & ~((1 << (v + 1)) - 1), 1)
    return CliqueIndex(k, tuple(out))


def max_clique_size(g: Graph) -> int:
    """Clique number; 0 for the empty graph."""
    size = 1 if g.n else 0
    while size >= 1 and len(enumerate_cliques(g, size + 1)) > 0:
        size += 1
    return size


def betti(g: Graph) -> tuple[int, ...]:
    """Cohomology ranks of the associated group: b_k = number of k-cliques
    for k >= 1, and b_0 = number of connected components."""
    b0 = len(connected_components(g))
    out = [b0]
    k = 1
    while True:
        count = len(enumerate_cliques(g, k))
        if count == 0:
            break
        out.append(count)
        k += 1
    return tuple(out)


def maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Maximal cliques via Bron-Kerbosch (ascending candidate order)."""
    adj = g.adjacency
    out: list[tuple[int, ...]] = []

    def bk(r: list[int], p: int, x: int):
        if p == 0 and x == 0:
            out.append(tuple(sorted(r)))
            return
        # pivot on the candidate with most neighbours in p to prune branches
        pivot, best = -1, -1
        for u in _mask_bits(p | x):
            score = (p & adj[u]).bit_count()
            if score > best:
                pivot, best = u, score
        for v in _mask_bits(p & ~adj[pivot]):
            r.append(v)
            bk(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    bk([], (1 << g.n) - 1, 0)
    return tuple(sorted(out))


# --------------------------------------------------------------------------
# connectivity
# --------------------------------------------------------------------------

def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the map new-index -> original vertex."""
    vmap = tuple(sorted(set(vertices)))
    back = {v: i for i, v in enumerate(vmap)}
    edges = [(back[u], back[v]) for u, v in g.edges if u in back and v in back]
    labels = tuple(g.label(v) for v in vmap) if g.labels is not None else None
    return make_graph(len(vmap), edges, labels=labels), vmap


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components as (subgraph, vertex map) pairs, ordered by least vertex."""
    seen = [False] * g.n
    parts = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, part = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            part.append(u)
            for v in _mask_bits(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        parts.append(induced_subgraph(g, part))
    return parts


def articulation_points(g: Graph) -> tuple[int, ...]:
    """Cut vertices of g (iterative lowlink DFS), sorted."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cut = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(_mask_bits(g.adjacency[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, iter(_mask_bits(g.adjacency[v]))))
                    advanced = True
                    break
                elif v != parent[u]:
                    low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return tuple(sorted(cut))


def biconnected_blocks(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the biconnected components (blocks), i.e. the maximal
    pieces that share at most an articulation point.  Isolated vertices do
    not appear in any block.  Ordered by least contained edge."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    blocks: list[tuple[int, ...]] = []
    edge_stack: list[tuple[int, int]] = []

    def pop_block(u, v):
        verts = set()
        while edge_stack:
            a, b = edge_stack.pop()
            verts.update((a, b))
            if (a, b) == (u, v):
                break
        blocks.append(tuple(sorted(verts)))

    for root in range(g.n):
        if disc[root] != -1 or g.adjacency[root] == 0:
            continue
        stack = [(root, iter(_mask_bits(g.adjacency[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, iter(_mask_bits(g.adjacency[v]))))
                    advanced = True
                    break
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        pop_block(p, u)
    return blocks


def classify_edges(g: Graph) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Partition edges into (in some 4-clique, in no 4-clique)."""
    in4 = set()
    for c in enumerate_cliques(g, 4).cliques:
        for u, v in combinations(c, 2):
            in4.add((u, v))
    covered = tuple(e for e in g.edges if e in in4)
    free = tuple(e for e in g.edges if e not in in4)
    return covered, free


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices renumbered block by block."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return make_graph(offset, edges)


# --------------------------------------------------------------------------
# family generators
# --------------------------------------------------------------------------

def generate_family(cert: FamilyCertificate) -> Graph:
    """Build the graph a certificate describes, with the certificate attached.

    Vertex numbering per family:

    - edgeless/complete: vertices 0..n-1.
    - clique-string(s, k): clique j (0-based) is {(s-2)j, ..., (s-2)j+s-1};
      consecutive cliques share their two overlapping vertices (an edge).
    - face-string(k): vertices 0..k+2, edge iff |i-j| <= 3 (each window of
      four consecutive vertices is one of the k 4-cliques).
    - grid(cells): unit lattice cells; corners sorted lexicographically by
      (x, y); each cell contributes its four sides and both diagonals.
    - hex-triangle(t): triangular patch with rows i = 0..t (row i holds
      t+1-i vertices), vertices sorted by (row, index); all unit edges plus
      one long diagonal across every interior unit edge.
    """
    fam = cert.family
    if fam == "edgeless":
        _require(cert.n is not None and cert.n >= 0, "edgeless: n must be >= 0")
        return Graph(cert.n, (), certificate=cert)
    if fam == "complete":
        _require(cert.n is not None and cert.n >= 0, "complete: n must be >= 0")
        return make_graph(cert.n, combinations(range(cert.n), 2), certificate=cert)
    if fam == "clique-string":
        s, k = cert.clique_size, cert.count
        _require(s is not None and s in (4, 5, 6, 7), "clique-string: size must be in 4..7")
        _require(k is not None and k >= 1, "clique-string: count must be >= 1")
        n = (s - 2) * k + 2
        edges = set()
        for j in range(k):
            block = range((s - 2) * j, (s - 2) * j + s)
            edges.update(combinations(block, 2))
        return make_graph(n, edges, certificate=cert)
    if fam == "face-string":
        k = cert.count
        _require(k is not None and k >= 1, "face-string: count must be >= 1")
        n = k + 3
        edges = [(i, j) for i in range(n) for j in range(i + 1, min(i + 4, n))]
        return make_graph(n, edges, certificate=cert)
    if fam == "grid":
        return _generate_grid(cert)
    if fam == "hex-triangle":
        return _generate_hex_triangle(cert)
    raise ValueError(f"unknown family {fam!r}")


def _require(cond, message):
    if not cond:
        raise ValueError(message)


def _generate_grid(cert: FamilyCertificate) -> Graph:
    cells = cert.cells
    _require(cells, "grid: cell set must be non-empty")
    cellset = set(cells)
    # require side-connectivity so the generated graph is one 2-connected piece
    seen = {cells[0]}
    frontier = [cells[0]]
    while frontier:
        x, y = frontier.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    _require(seen == cellset, "grid: cells must be connected through shared sides")

    corners = sorted({(x + dx, y + dy) for x, y in cells for dx in (0, 1) for dy in (0, 1)})
    index = {c: i for i, c in enumerate(corners)}
    edges = set()
    for x, y in cells:
        quad = [index[(x, y)], index[(x + 1, y)], index[(x, y + 1)], index[(x + 1, y + 1)]]
        edges.update(combinations(sorted(quad), 2))
    return make_graph(len(corners), edges, certificate=cert)


def _generate_hex_triangle(cert: FamilyCertificate) -> Graph:
    t = cert.side
    _require(t is not None and t >= 1, "hex-triangle: side must be >= 1")
    verts = [(i, j) for i in range(t + 1) for j in range(t + 1 - i)]
    index = {v: p for p, v in enumerate(sorted(verts))}
    edges = set()

    def add(a, b):
        edges.add((min(index[a], index[b]), max(index[a], index[b])))

    for i, j in verts:
        if (i, j + 1) in index:
            add((i, j), (i, j + 1))          # along the row
        if (i + 1, j) in index:
            add((i, j), (i + 1, j))          # up-right
        if (i + 1, j - 1) in index:
            add((i, j), (i + 1, j - 1))      # up-left
    # one long diagonal across each interior unit edge, joining the apexes
    # of the two unit triangles that share it
    for i, j in verts:
        if i >= 1 and (i, j + 1) in index:                   # interior row edge
            add((i + 1, j), (i - 1, j + 1))
        if j >= 1 and (i + 1, j) in index:                   # interior up-right edge
            add((i, j + 1), (i + 1, j - 1))
        if (i + 1, j) in index and (i + 1, j + 1) in index:  # interior up-left edge
            add((i, j), (i + 1, j + 1))
    return make_graph(len(verts), edges, certificate=cert)


# --------------------------------------------------------------------------
# recognition (canonical form + regeneration)
# --------------------------------------------------------------------------

_RECOGNIZE_MAX_N = 40


def canonical_key(g: Graph):
    """Canonical form of g: the lexicographically least edge tuple over all
    relabelings compatible with iterated colour refinement.  Equal keys
    characterize isomorphism.  Intended for small graphs (n <= ~30)."""
    n, adj = g.n, g.adjacency
    if n == 0:
        return (0, ())

    def refine(colors):
        while True:
            sigs = []
            for v in range(n):
                neigh = sorted(colors[u] for u in _mask_bits(adj[v]))
                sigs.append((colors[v], tuple(neigh)))
            order = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = tuple(order[s] for s in sigs)
            if new == colors:
                return colors
            colors = new

    best: list = [None]

    def search(colors):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            pos = {v: i for i, v in enumerate(perm)}
            key = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        fresh = max(colors) + 1
        for v in target:
            split = list(colors)
            split[v] = fresh
            search(refine(tuple(split)))

    search(refine(tuple(0 for _ in range(n))))
    return (n, best[0])


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    return canonical_key(a) == canonical_key(b)


def recognize_family(g: Graph) -> FamilyCertificate | None:
    """Structurally re-derive a certificate for the families this supports:
    edgeless, complete, clique edge-strings (size 4..7, count >= 2) and
    face-strings (count >= 3).  Grids and hex triangles are not recognized,
    and neither are graphs with more than 40 vertices.

    Candidates are filtered by counts (vertices, edges, clique number), then
    confirmed by reconstructing the family's defining structure, so the
    answer does not depend on how the input happens to be labelled.
    """
    m = len(g.edges)
    if m == 0:
        return FamilyCertificate.edgeless(g.n)
    if m == g.n * (g.n - 1) // 2:
        return FamilyCertificate.complete(g.n)
    if g.n > _RECOGNIZE_MAX_N:
        return None

    omega = max_clique_size(g)
    if omega in (4, 5, 6, 7):
        s = omega
        if (g.n - 2) % (s - 2) == 0:
            k = (g.n - 2) // (s - 2)
            if k >= 2 and m == s * (s - 1) // 2 * k - (k - 1) and _is_clique_string(g, s, k):
                return FamilyCertificate.clique_string(s, k)
    if omega == 4:
        k = g.n - 3
        if k >= 3 and m == 3 * k + 3 and _is_face_string(g, k):
            return FamilyCertificate.face_string(k)
    return None


def _chain_order(parts: list, overlap: int) -> list | None:
    """Order parts into a path whose consecutive members meet in exactly
    ``overlap`` vertices (smaller overlaps count as non-adjacent).  Returns
    the ordered list, or None if that adjacency is not a path."""
    k = len(parts)
    sets = [set(p) for p in parts]
    neigh: list[list[int]] = [[] for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            common = len(sets[i] & sets[j])
            if common == overlap:
                neigh[i].append(j)
                neigh[j].append(i)
            elif common > overlap:
                return None
    if k == 1:
        return [0]
    ends = [i for i in range(k) if len(neigh[i]) == 1]
    if len(ends) != 2 or any(len(nb) > 2 for nb in neigh):
        return None
    order, prev = [ends[0]], -1
    while len(order) < k:
        nxt = [j for j in neigh[order[-1]] if j != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _is_clique_string(g: Graph, s: int, k: int) -> bool:
    """True iff g is k copies of K_s glued in a path along disjoint edges."""
    blocks = maximal_cliques(g)
    if len(blocks) != k or any(len(b) != s for b in blocks):
        return False
    order = _chain_order(list(blocks), 2)
    if order is None:
        return False
    # the glue edges must not touch: an L-shaped chain of cliques whose
    # shared edges meet in a vertex has the same vertex/edge/clique counts
    # but is not a string
    chain = [set(blocks[i]) for i in order]
    glued: set[int] = set()
    for a, b in zip(chain, chain[1:]):
        share = a & b
        if glued & share:
            return False
        glued |= share
    covered = set()
    for b in blocks:
        covered.update(b)
    return len(covered) == g.n


def _is_face_string(g: Graph, k: int) -> bool:
    """True iff g is the cube of a path on k+3 vertices (each window of four
    consecutive vertices spans a 4-clique).  Reconstructs the path order from
    the 4-clique chain, then verifies the full edge set."""
    windows = [set(c) for c in enumerate_cliques(g, 4).cliques]
    if len(windows) != k:
        return False
    order = _chain_order(windows, 3)
    if order is None:
        return False
    chain = [windows[i] for i in order]
    n = g.n
    slots: list[int | None] = [None] * n
    placed = {}

    def place(v: int, p: int) -> bool:
        if placed.get(v, p) != p or (slots[p] is not None and slots[p] != v):
            return False
        placed[v] = p
        slots[p] = v
        return True

    for i in range(k - 1):
        fwd = chain[i] - chain[i + 1]
        bwd = chain[k - 1 - i] - chain[k - 2 - i]
        if len(fwd) != 1 or len(bwd) != 1:
            return False
        if not (place(fwd.pop(), i) and place(bwd.pop(), n - 1 - i)):
            return False
    rest = sorted(set(range(n)) - set(placed))
    for p in range(n):
        if slots[p] is None:
            if not rest:
                return False
            slots[p] = rest.pop(0)
    want = {(min(slots[i], slots[j]), max(slots[i], slots[j]))
            for i in range(n) for j in range(i + 1, min(i + 4, n))}
    return want == set(g.edges)


def verify_certificate(g: Graph, cert: FamilyCertificate) -> bool:
    """Check that g really is the graph cert describes, up to isomorphism.
    Run before trusting a certificate that arrived with parsed input."""
    try:
        model = generate_family(cert)
    except (ValueError, TypeError):
        return False
    if g.n != model.n or len(g.edges) != len(model.edges):
        return False
    fam = cert.family
    if fam in ("edgeless", "complete"):
        return True  # the counts already pin these
    if fam == "clique-string":
        return cert.count == 1 or _is_clique_string(g, cert.clique_size, cert.count)
    if fam == "face-string":
        return _is_face_string(g, cert.count)
    if g.n > _RECOGNIZE_MAX_N:
        return False
    return is_isomorphic(g, model)


# --------------------------------------------------------------------------
# parsing and serialization
# --------------------------------------------------------------------------

FORMATS = ("edges", "csv", "json")


def parse_graph(text: str, fmt: str = "edges") -> Graph:
    """Parse a graph from one of the supported text formats.

    - "edges": lines "u v"; '#' starts a comment; the directives
      "# vertices: N" and "# certificate: {json}" are honoured.  Without a
      vertices directive, vertex ids are compacted to 0..n-1 in order of
      first appearance.
    - "csv": square comma-separated 0/1 adjacency matrix.
    - "json": {"vertices": n, "edges": [[u,v],...], "certificate": {...}?}.
    """
    if fmt == "edges":
        return _parse_edge_list(text)
    if fmt == "csv":
        return _parse_adjacency_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {fmt!r} (expected one of {FORMATS})")


def _parse_edge_list(text: str) -> Graph:
    declared_n = None
    certificate = None
    raw_edges: list[tuple[str, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.lower().startswith("vertices:"):
                try:
                    declared_n = int(body.split(":", 1)[1])
                except ValueError:
                    raise ParseError(f"line {lineno}: bad vertices directive") from None
            elif body.lower().startswith("certificate:"):
                try:
                    certificate = FamilyCertificate.from_dict(
                        json.loads(body.split(":", 1)[1]))
                except (json.JSONDecodeError, ParseError) as exc:
                    raise ParseError(f"line {lineno}: bad certificate comment ({exc})") from None
            continue
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {stripped!r}")
        raw_edges.append((parts[0], parts[1], lineno))

    ids: dict[str, int] = {}
    if declared_n is not None:
        if declared_n < 0:
            raise ParseError("vertices directive must be non-negative")
        ids = {str(i): i for i in range(declared_n)}

    def vertex(token: str, lineno: int) -> int:
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"line {lineno}: vertex {token!r} is not an integer") from None
        if value < 0:
            raise ParseError(f"line {lineno}: out-of-range index {value}")
        key = str(value)
        if declared_n is not None:
            if value >= declared_n:
                raise ParseError(f"line {lineno}: out-of-range index {value} (n={declared_n})")
            return value
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    edges = []
    seen = set()
    for tu, tv, lineno in raw_edges:
        u, v = vertex(tu, lineno), vertex(tv, lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {tu}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {tu} {tv}")
        seen.add(key)
        edges.append(key)

    n = declared_n if declared_n is not None else len(ids)
    labels = None
    if declared_n is None and any(ids[k] != int(k) for k in ids):
        labels = tuple(sorted(ids, key=ids.get))
    return make_graph(n, edges, labels=labels, certificate=certificate)


def _parse_adjacency_csv(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.strip().startswith("#"):
            continue
        entries = [cell.strip() for cell in line.split(",")]
        parsed = []
        for col, cell in enumerate(entries):
            if cell not in ("0", "1"):
                raise ParseError(f"line {lineno}: entry {cell!r} at column {col} is not 0/1")
            parsed.append(int(cell))
        rows.append((lineno, parsed))

    n = len(rows)
    for lineno, row in rows:
        if len(row) != n:
            raise ParseError(f"line {lineno}: row has {len(row)} entries, expected {n}")
    matrix = [row for _, row in rows]
    edges = []
    for i in range(n):
        if matrix[i][i] != 0:
            raise ParseError(f"line {rows[i][0]}: nonzero diagonal at ({i},{i})")
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise ParseError(
                    f"line {rows[j][0]}: asymmetric matrix at ({i},{j}) vs ({j},{i})")
            if matrix[i][j]:
                edges.append((i, j))
    return make_graph(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    try:
        n = int(data["vertices"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or invalid 'vertices' count") from None
    if n < 0:
        raise ParseError("'vertices' must be non-negative")
    raw = data.get("edges", [])
    if not isinstance(raw, list):
        raise ParseError("'edges' must be a list of [u, v] pairs")
    edges = []
    seen = set()
    for pos, pair in enumerate(raw):
        if (not isinstance(pair, list)) or len(pair) != 2:
            raise ParseError(f"edge #{pos}: expected [u, v]")
        u, v = pair
        if not isinstance(u, int) or not isinstance(v, int):
            raise ParseError(f"edge #{pos}: endpoints must be integers")
        if u == v:
            raise ParseError(f"edge #{pos}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge #{pos}: out-of-range index in [{u}, {v}] (n={n})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"edge #{pos}: duplicate edge [{u}, {v}]")
        seen.add(key)
        edges.append(key)
    certificate = None
    if data.get("certificate") is not None:
        certificate = FamilyCertificate.from_dict(data["certificate"])
    return make_graph(n, edges, certificate=certificate)


def serialize_graph(g: Graph, fmt: str = "edges") -> str:
    """Deterministic text form; parse(serialize(g), fmt) round-trips."""
    if fmt == "edges":
        lines = [f"# vertices: {g.n}"]
        if g.certificate is not None:
            lines.append("# certificate: " + json.dumps(g.certificate.to_dict(),
                                                        separators=(", ", ": ")))
        lines.extend(f"{u} {v}" for u, v in g.edges)
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        matrix = [["0"] * g.n for _ in range(g.n)]
        for u, v in g.edges:
            matrix[u][v] = matrix[v][u] = "1"
        return "\n".join(",".join(row) for row in matrix) + ("\n" if g.n else "")
    if fmt == "json":
        doc: dict = {"vertices": g.n, "edges": [[u, v] for u, v in g.edges]}
        if g.certificate is not None:
            doc["certificate"] = g.certificate.to_dict()
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r} (expected one of {FORMATS})")


def to_dot(g: Graph) -> str:
    """Graph in DOT syntax (plain undirected edges, labels when present)."""
    lines = ["graph G {"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.label(v)}"];')
        elif g.adjacency[v] == 0:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"

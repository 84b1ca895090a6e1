"""Cup products on degree-2 cohomology of a right-angled Artin group.

For a graph with edge set E and 4-clique set Q, the product of two degree-2
classes pairs basis elements indexed by E.  The pairing of (e, f) is zero
unless e and f are disjoint edges whose union spans a 4-clique q in Q, in
which case it is +/- the degree-4 class of q.  Within a 4-clique on vertices
i < j < k < l the three disjoint edge pairs carry signs

    (ij, kl) -> +q      (ik, jl) -> -q      (il, jk) -> +q

The signs matter over the integers but all computations here are reductions
mod 2: substituting a degree-4 functional alpha into the template yields a
symmetric GF(2) matrix with zero diagonal, i.e. an alternating bilinear form,
whose rank/kernel/symplectic structure the rest of the package consumes.

GF(2) matrices are stored as tuples of Python ints, one int per row, bit j
(LSB first) holding column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import CliqueIndex, Graph, enumerate_cliques


# --------------------------------------------------------------------------
# template
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CupFormTemplate:
    """Symbolic matrix of the degree-2 cup product.

    ``entries`` maps (row, col) -> (clique_id, sign) for the nonzero cells,
    with clique_id the 0-based position in ``cliques`` and sign in {+1, -1}.
    Both (r, c) and (c, r) are present; the diagonal is identically zero.
    """

    graph: Graph
    edges: CliqueIndex
    cliques: CliqueIndex
    entries: dict

    @property
    def dim(self) -> int:
        return len(self.edges)

    @property
    def num_cliques(self) -> int:
        return len(self.cliques)

    @cached_property
    def clique_rows(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each 4-clique, its six (row, column-bit) contributions; used
        to build substituted matrices by XOR instead of dict traversal."""
        per: list[list[tuple[int, int]]] = [[] for _ in range(len(self.cliques))]
        for (r, c), (q, _sign) in self.entries.items():
            per[q].append((r, 1 << c))
        return tuple(tuple(sorted(p)) for p in per)


def build_cup_form(g: Graph) -> CupFormTemplate:
    """Template of the cup-product pairing on degree-2 classes of g."""
    edges = enumerate_cliques(g, 2)
    cliques = enumerate_cliques(g, 4)
    pos = edges.position
    entries: dict = {}
    for q, (i, j, k, l) in enumerate(cliques.cliques):
        for (a, b), sign in ((((i, j), (k, l)), +1),
                             (((i, k), (j, l)), -1),
                             (((i, l), (j, k)), +1)):
            r, c = pos[a], pos[b]
            entries[(r, c)] = (q, sign)
            entries[(c, r)] = (q, sign)
    return CupFormTemplate(g, edges, cliques, entries)


# --------------------------------------------------------------------------
# alpha vectors (degree-4 functionals)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaVector:
    """Element of the dual of degree-4 cohomology over GF(2).

    Encoded as an integer whose bit q (LSB first) is the coefficient of the
    q-th 4-clique; ``length`` is the number of 4-cliques.  The integer
    encoding orders all functionals, which fixes witness tie-breaking.
    """

    value: int
    length: int

    def __post_init__(self):
        if self.value < 0 or self.value >> self.length:
            raise ValueError("alpha value out of range for its length")

    def bit(self, q: int) -> int:
        return self.value >> q & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.value >> q & 1 for q in range(self.length))

    @classmethod
    def from_bits(cls, bits) -> "AlphaVector":
        bits = tuple(int(b) for b in bits)
        return cls(sum(b << q for q, b in enumerate(bits)), len(bits))

    @classmethod
    def from_bitstring(cls, text: str) -> "AlphaVector":
        """Parse "0110..." with position q = coefficient of clique q."""
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"alpha bitstring must be nonempty 0/1, got {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    def to_bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)


# --------------------------------------------------------------------------
# GF(2) matrices
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Gf2Matrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def entry(self, r: int, c: int) -> int:
        return self.rows[r] >> c & 1

    def column_mask(self) -> int:
        return (1 << self.ncols) - 1


def substitute(template: CupFormTemplate, alpha: AlphaVector) -> Gf2Matrix:
    """Evaluate the template at alpha over GF(2) (signs drop out mod 2).

    Rebuilt from scratch on every call; callers that sweep many alphas
    should use rank_rows / the solver's incremental paths instead.
    """
    if alpha.length != template.num_cliques:
        raise ValueError(
            f"alpha has {alpha.length} coordinates, template has "
            f"{template.num_cliques} cliques")
    n = template.dim
    rows = [0] * n
    value = alpha.value
    for q, contribs in enumerate(template.clique_rows):
        if value >> q & 1:
            for r, bit in contribs:
                rows[r] ^= bit
    return Gf2Matrix(n, n, tuple(rows))


def rank_gf2(rows, ncols: int | None = None) -> int:
    """Rank of a GF(2) matrix given as an iterable of row bitmasks."""
    basis: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            pivot = basis.get(low)
            if pivot is None:
                basis[low] = row
                rank += 1
                break
            row ^= pivot
    return rank


def kernel_basis(mat: Gf2Matrix) -> tuple[int, ...]:
    """Basis of the right kernel {x : Mx = 0}, as column bitmasks.

    Row-reduces to RREF and reads one kernel vector off each free column,
    in increasing column order, so the result is deterministic.
    """
    rows = [r for r in mat.rows]
    pivots: list[tuple[int, int]] = []  # (column, index into reduced rows)
    reduced: list[int] = []
    for row in rows:
        for col, rr in pivots:
            if row >> col & 1:
                row ^= reduced[rr]
        if row:
            col = (row & -row).bit_length() - 1
            # back-substitute into earlier rows to reach reduced form
            for idx, rr in enumerate(reduced):
                if rr >> col & 1:
                    reduced[idx] = rr ^ row
            pivots.append((col, len(reduced)))
            reduced.append(row)
    pivot_cols = {col for col, _ in pivots}
    pivots.sort()
    out = []
    for free in range(mat.ncols):
        if free in pivot_cols:
            continue
        vec = 1 << free
        for col, rr in pivots:
            if reduced[rr] >> free & 1:
                vec |= 1 << col
        out.append(vec)
    return tuple(out)


def matvec(mat: Gf2Matrix, x: int) -> int:
    out = 0
    for r, row in enumerate(mat.rows):
        out |= ((row & x).bit_count() & 1) << r
    return out


def pair(mat: Gf2Matrix, x: int, y: int) -> int:
    """Evaluate the bilinear form x^T M y over GF(2)."""
    return (x & matvec(mat, y)).bit_count() & 1


# --------------------------------------------------------------------------
# symplectic structure
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SymplecticDecomposition:
    """Hyperbolic pairs (x_i, y_i) with B(x_i, y_i) = 1 and a basis of the
    radical; together they span the whole space and pairs are orthogonal to
    each other and to the radical."""

    pairs: tuple[tuple[int, int], ...]
    radical: tuple[int, ...]


def symplectic_reduce(mat: Gf2Matrix) -> SymplecticDecomposition:
    """Decompose an alternating GF(2) form into hyperbolic pairs + radical.

    Working over the standard basis e_0..e_{n-1}: repeatedly take the lowest
    remaining vector x with a partner, take its lowest partner y, and correct
    every other vector z by z + B(z,y) x + B(z,x) y to make it orthogonal to
    the pair.  Vectors left without partners form the radical.
    """
    n = mat.ncols
    images = {1 << i: matvec(mat, 1 << i) for i in range(n)}

    def b(u, v):
        return (u & images_of(v)).bit_count() & 1

    cache: dict[int, int] = {}

    def images_of(v: int) -> int:
        if v in cache:
            return cache[v]
        out = 0
        vv = v
        while vv:
            low = vv & -vv
            out ^= images[low] if low in images else matvec(mat, low)
            vv ^= low
        cache[v] = out
        return out

    vectors = [1 << i for i in range(n)]
    pairs = []
    radical = []
    while vectors:
        x = vectors.pop(0)
        partner_idx = None
        for idx, y in enumerate(vectors):
            if b(x, y):
                partner_idx = idx
                break
        if partner_idx is None:
            radical.append(x)
            continue
        y = vectors.pop(partner_idx)
        corrected = []
        for z in vectors:
            z2 = z
            if b(z, y):
                z2 ^= x
            if b(z, x):
                z2 ^= y
            if z2:
                corrected.append(z2)
        pairs.append((x, y))
        vectors = corrected
        cache.clear()
    return SymplecticDecomposition(tuple(pairs), tuple(radical))


def max_isotropic(mat: Gf2Matrix) -> tuple[int, ...]:
    """Basis of a maximal isotropic subspace: the radical plus the first
    member of each hyperbolic pair.  Size = ncols - rank/2."""
    dec = symplectic_reduce(mat)
    return tuple(list(dec.radical) + [x for x, _y in dec.pairs])


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _edge_name(template: CupFormTemplate, idx: int, letter: str = "z") -> str:
    u, v = template.edges.cliques[idx]
    a, b = u + 1, v + 1
    sep = "," if b >= 10 else ""
    return f"{letter}{a}{sep}{b}"


def render_vector(template: CupFormTemplate, vec: int, letter: str = "z") -> str:
    """Human form of an edge-space vector, e.g. ``z12+z56`` (1-based pairs,
    comma-separated once indices reach 10)."""
    names = [_edge_name(template, i, letter)
             for i in range(template.dim) if vec >> i & 1]
    return "+".join(names) if names else "0"


def dump_template(template: CupFormTemplate) -> str:
    """Grid of ``0`` / ``+p`` / ``-p`` with p the 1-based 4-clique number."""
    n = template.dim
    cells = [["0"] * n for _ in range(n)]
    for (r, c), (q, sign) in template.entries.items():
        cells[r][c] = f"{'+' if sign > 0 else '-'}{q + 1}"
    width = max((len(x) for row in cells for x in row), default=1)
    return "\n".join(" ".join(x.rjust(width) for x in row) for row in cells) + "\n"


def dump_matrix(mat: Gf2Matrix) -> str:
    """Rows of space-separated 0/1."""
    return "\n".join(
        " ".join(str(mat.entry(r, c)) for c in range(mat.ncols))
        for r in range(mat.nrows)) + "\n"

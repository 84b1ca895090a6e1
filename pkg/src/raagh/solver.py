"""Maximizing the GF(2) rank of the substituted cup form.

m2(G) is the maximum rank of the degree-2 pairing over all degree-4
functionals alpha.  Substituted forms are alternating, so every rank is even
and m2 can never exceed the parity ceiling (b2 rounded down to even); a
functional reaching the ceiling certifies the maximum without scanning the
rest of the space, which is what makes several large examples tractable.

Functionals are scanned in increasing integer encoding (bit q = 4-clique q),
so the reported witness is the first maximizer in that canonical order.  The
parallel path splits the encoding range into fixed-size chunks and folds the
per-chunk results in order, which keeps the result — including the witness —
independent of the worker count.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass

from .form import (AlphaVector, CupFormTemplate, build_cup_form, kernel_basis,
                   rank_gf2, render_vector, substitute)
from .graphs import Graph, maximal_cliques

_CHUNK = 8192
_DEFAULT_HEURISTIC_SEED = 0x5EED


class CapExceeded(Exception):
    """Exhaustive enumeration refused: 2^b4 functionals is over budget."""

    def __init__(self, b4: int, cap: int):
        super().__init__(
            f"graph has {b4} 4-cliques; exhaustive scan of 2^{b4} functionals "
            f"exceeds the cap of 2^{cap} (raise the cap or use the heuristic)")
        self.b4 = b4
        self.cap = cap


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for compute_m2 / m2_heuristic.

    cap bounds the exponent of the exhaustive scan (b4 <= cap).  workers > 1
    enables the process pool once the scan is at least parallel_threshold
    encodings long.  The heuristic draws heuristic_tries pseudorandom
    functionals from a fixed-seed generator unless explicit seeds are given.
    """

    cap: int = 28
    workers: int = 1
    heuristic_tries: int = 512
    heuristic_seed: int = _DEFAULT_HEURISTIC_SEED
    heuristic_seeds: tuple[int, ...] | None = None
    parallel_threshold: int = 1 << 14


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class M2Result:
    """Outcome of a rank search.

    exhaustive is True when the value is certified to be the true maximum:
    either every functional was inspected, or some functional reached the
    parity ceiling.  A heuristic result is exhaustive only in the second
    case, and then its witness need not be the canonically first one.
    """

    m2: int
    witness: AlphaVector
    radical_dim: int
    exhaustive: bool


def parity_ceiling(b2: int) -> int:
    """Largest even number <= b2; no alternating form on b2 columns can
    have larger rank."""
    return b2 - (b2 & 1)


# --------------------------------------------------------------------------
# rank scanning
# --------------------------------------------------------------------------

def _rank_of_encoding(clique_rows, dim: int, value: int) -> int:
    rows = [0] * dim
    v = value
    while v:
        low = v & -v
        for r, bit in clique_rows[low.bit_length() - 1]:
            rows[r] ^= bit
        v ^= low
    return rank_gf2(rows)


def _scan_range(clique_rows, dim: int, ceiling: int, start: int, stop: int):
    """Best (rank, encoding) in [start, stop), stopping at the ceiling.

    Returns (rank, encoding, hit) where hit marks an early ceiling exit;
    the encoding is the first in the range achieving the returned rank.
    """
    best_rank, best_alpha = -1, start
    for value in range(start, stop):
        r = _rank_of_encoding(clique_rows, dim, value)
        if r > best_rank:
            best_rank, best_alpha = r, value
            if r >= ceiling:
                return best_rank, best_alpha, True
    return best_rank, best_alpha, False


_worker_state: tuple = ()


def _init_worker(clique_rows, dim, ceiling):
    global _worker_state
    _worker_state = (clique_rows, dim, ceiling)


def _scan_chunk(bounds):
    clique_rows, dim, ceiling = _worker_state
    return _scan_range(clique_rows, dim, ceiling, *bounds)


def compute_m2(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> M2Result:
    """Certified m2 by scanning every functional (early exit at the parity
    ceiling still certifies).  Raises CapExceeded when b4 > config.cap."""
    template = build_cup_form(g)
    b2, b4 = template.dim, template.num_cliques
    if b4 > config.cap:
        raise CapExceeded(b4, config.cap)
    if b4 == 0:
        return M2Result(0, AlphaVector(0, 0), b2, True)

    clique_rows = template.clique_rows
    ceiling = parity_ceiling(b2)
    total = 1 << b4

    if config.workers > 1 and total >= config.parallel_threshold:
        best = _parallel_scan(clique_rows, b2, ceiling, total, config.workers)
    else:
        best = _scan_range(clique_rows, b2, ceiling, 0, total)

    rank, alpha, hit = best
    return M2Result(rank, AlphaVector(alpha, b4), b2 - rank, True)


def _parallel_scan(clique_rows, dim, ceiling, total, workers):
    bounds = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    ctx = multiprocessing.get_context("fork")
    best_rank, best_alpha = -1, 0
    with ctx.Pool(workers, initializer=_init_worker,
                  initargs=(clique_rows, dim, ceiling)) as pool:
        for rank, alpha, hit in pool.imap(_scan_chunk, bounds):
            if rank > best_rank:
                best_rank, best_alpha = rank, alpha
            if hit:
                # chunks are folded in encoding order, so the first reported
                # ceiling hit is the globally first one
                return best_rank, best_alpha, True
    return best_rank, best_alpha, False


# --------------------------------------------------------------------------
# heuristic
# --------------------------------------------------------------------------

def heuristic_seed_values(g: Graph, template: CupFormTemplate,
                          config: SolverConfig = DEFAULT_CONFIG) -> tuple[int, ...]:
    """Functional encodings the heuristic will try, in order: all-ones, the
    union over maximal cliques of their first and last 4-vertex subsets, then
    fixed-seed pseudorandom values.  Explicit config seeds override all."""
    b4 = template.num_cliques
    if config.heuristic_seeds is not None:
        return tuple(s & ((1 << b4) - 1) for s in config.heuristic_seeds)
    full = (1 << b4) - 1
    seeds = [full]
    pos = template.cliques.position
    ends = 0
    for mc in maximal_cliques(g):
        if len(mc) >= 4:
            ends |= 1 << pos[tuple(mc[:4])]
            ends |= 1 << pos[tuple(mc[-4:])]
    if ends:
        seeds.append(ends)
    rnd = random.Random(config.heuristic_seed)
    for _ in range(config.heuristic_tries):
        seeds.append(rnd.getrandbits(b4) & full)
    seen, ordered = set(), []
    for s in seeds:
        if s not in seen:
            seen.add(s)
            ordered.append(s)
    return tuple(ordered)


def m2_heuristic(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> M2Result:
    """Best rank over a fixed trial set of functionals.  The result is a
    lower bound for m2; it is certified (exhaustive=True) only when a trial
    reaches the parity ceiling or there are no 4-cliques at all."""
    template = build_cup_form(g)
    b2, b4 = template.dim, template.num_cliques
    if b4 == 0:
        return M2Result(0, AlphaVector(0, 0), b2, True)
    ceiling = parity_ceiling(b2)
    clique_rows = template.clique_rows
    best_rank, best_alpha = -1, 0
    for value in heuristic_seed_values(g, template, config):
        r = _rank_of_encoding(clique_rows, b2, value)
        if r > best_rank or (r == best_rank and value < best_alpha):
            best_rank, best_alpha = r, value
            if r >= ceiling:
                break
    if best_rank < 0:
        best_rank, best_alpha = 0, 0
    return M2Result(best_rank, AlphaVector(best_alpha, b4), b2 - best_rank,
                    best_rank >= ceiling)


# --------------------------------------------------------------------------
# radicals
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RadicalBasis:
    """Kernel of the substituted form at one functional: bitmask vectors over
    the edge basis plus their rendered z-notation."""

    alpha: AlphaVector
    vectors: tuple[int, ...]
    rendered: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


def radical_at(g: Graph, alpha: AlphaVector) -> RadicalBasis:
    template = build_cup_form(g)
    mat = substitute(template, alpha)
    vectors = kernel_basis(mat)
    rendered = tuple(render_vector(template, v) for v in vectors)
    return RadicalBasis(alpha, vectors, rendered)

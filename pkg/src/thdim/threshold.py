"""Threshold graphs: recognition with forbidden-subgraph witnesses, the
guided threshold-supergraph completion, and integer LTF witnesses.

A threshold graph is built by repeatedly adding an isolated or a dominating
vertex; equivalently it has no induced 2K_2, P_4 or C_4, and equivalently
its cliques are exactly the 0-1 solutions of one linear inequality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import Graph

ISOLATED = "i"
DOMINATING = "d"


class InternalVerificationError(AssertionError):
    """A construction failed its own verification; indicates a bug, never input error."""


@dataclass(frozen=True)
class ThresholdGraph:
    """A threshold graph together with the certificates of thresholdness.

    `creation` is the build order: each vertex enters either isolated or
    dominating (adjacent to everything already present). `split_a` is the
    independent side ordered so neighborhoods are nested decreasingly
    (N(a_1) >= N(a_2) >= ...), `split_b` the clique side.
    """

    graph: Graph
    creation: tuple[tuple[int, str], ...]
    split_a: tuple[int, ...]
    split_b: frozenset[int]

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def from_creation(cls, creation: Sequence[tuple[int, str]]) -> "ThresholdGraph":
        """Replay a creation sequence covering vertices 0..n-1 exactly once."""
        creation = tuple(creation)
        n = len(creation)
        if sorted(v for v, _ in creation) != list(range(n)):
            raise ValueError("creation sequence must mention each vertex exactly once")
        edges = []
        placed: list[int] = []
        for v, tag in creation:
            if tag == DOMINATING:
                edges.extend((v, u) for u in placed)
            elif tag != ISOLATED:
                raise ValueError(f"unknown creation tag {tag!r}")
            placed.append(v)
        graph = Graph(n, edges)
        # isolated-tagged vertices in creation order have nested, shrinking
        # neighborhoods (their neighbors are exactly the later dominators)
        split_a = tuple(v for v, tag in creation if tag == ISOLATED)
        split_b = frozenset(v for v, tag in creation if tag == DOMINATING)
        return cls(graph=graph, creation=creation, split_a=split_a, split_b=split_b)

    def prefix_length(self, v: int) -> int:
        """For v in the clique side: how many leading split_a vertices it sees."""
        s = 0
        for i, u in enumerate(self.split_a, start=1):
            if u in self.graph.adj[v]:
                s = i
        return s


@dataclass(frozen=True)
class ForbiddenSubgraph:
    """An induced 2K_2, P_4 or C_4 witnessing that a graph is not threshold."""

    vertices: tuple[int, int, int, int]
    kind: str  # "2K2" | "P4" | "C4"


def classify_forbidden(g: Graph, quad: Sequence[int]) -> str | None:
    """Classify the induced subgraph on 4 vertices, or None if not forbidden."""
    quad = sorted(quad)
    edges = [(u, v) for u, v in combinations(quad, 2) if g.has_edge(u, v)]
    degs = sorted(sum(1 for e in edges if w in e) for w in quad)
    if len(edges) == 2 and degs == [1, 1, 1, 1]:
        return "2K2"
    if len(edges) == 3 and degs == [1, 1, 2, 2]:
        return "P4"
    if len(edges) == 4 and degs == [2, 2, 2, 2]:
        return "C4"
    return None


def recognize_threshold(g: Graph) -> ThresholdGraph | ForbiddenSubgraph:
    """Decide thresholdness by iterated isolated-or-universal removal.

    Acceptance returns the ThresholdGraph with its creation sequence (ties
    broken toward the smallest index, universal preferred over isolated);
    refusal returns an induced forbidden 4-vertex subgraph.
    """
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    removals: list[tuple[int, str]] = []
    while remaining:
        target = len(remaining) - 1
        pick = None
        tag = None
        for v in sorted(remaining):
            if deg[v] == target:
                pick, tag = v, DOMINATING
                break
        if pick is None:
            for v in sorted(remaining):
                if deg[v] == 0:
                    pick, tag = v, ISOLATED
                    break
        if pick is None:
            return _forbidden_witness(g, remaining)
        remaining.discard(pick)
        for u in g.adj[pick]:
            if u in remaining:
                deg[u] -= 1
        removals.append((pick, tag))
    creation = tuple(reversed(removals))
    split_a = tuple(v for v, t in creation if t == ISOLATED)
    split_b = frozenset(v for v, t in creation if t == DOMINATING)
    return ThresholdGraph(graph=g, creation=creation, split_a=split_a, split_b=split_b)


def _forbidden_witness(g: Graph, remaining: set[int]) -> ForbiddenSubgraph:
    if g.n <= 12:
        for quad in combinations(range(g.n), 4):
            kind = classify_forbidden(g, quad)
            if kind is not None:
                return ForbiddenSubgraph(vertices=tuple(quad), kind=kind)
        raise InternalVerificationError("peeling stalled but no forbidden 4-subset found")
    # vicinal incomparability inside the stuck remainder: u~x, v~y with
    # x not adjacent to v and y not adjacent to u always spans a witness
    live = sorted(remaining)
    live_set = remaining
    for u in live:
        nu = g.adj[u] & live_set
        for v in live:
            if v == u:
                continue
            nv = g.adj[v] & live_set
            only_u = nu - nv - {v}
            only_v = nv - nu - {u}
            if only_u and only_v:
                x, y = min(only_u), min(only_v)
                quad = tuple(sorted((u, v, x, y)))
                kind = classify_forbidden(g, quad)
                if kind is None:
                    raise InternalVerificationError("incomparable pair produced a non-witness")
                return ForbiddenSubgraph(vertices=quad, kind=kind)
    raise InternalVerificationError("peeling stalled on a comparable remainder")


# ---------------------------------------------------------------------------
# guided threshold supergraph

def threshold_supergraph(g: Graph, a_order: Sequence[int]) -> ThresholdGraph:
    """Complete g into a threshold supergraph guided by an ordered independent set.

    With A = a_order = (u_1, ..., u_k) independent in g and B the rest, the
    result makes B a clique and attaches each v in B to exactly the prefix
    u_1..u_{s(v)}, where s(v) is the position of v's last neighbor inside A
    (0 when v has no neighbor in A). The output always contains g.
    """
    a_order = tuple(a_order)
    a_set = set(a_order)
    if len(a_set) != len(a_order):
        raise ValueError("a_order contains duplicates")
    if any(not (0 <= u < g.n) for u in a_order):
        raise ValueError("a_order vertex out of range")
    for u, v in combinations(a_order, 2):
        if g.has_edge(u, v):
            raise ValueError(f"a_order is not independent: edge ({u},{v})")
    position = {u: i for i, u in enumerate(a_order, start=1)}
    b_side = [v for v in range(g.n) if v not in a_set]
    prefix = {}
    for v in b_side:
        s = 0
        for u in g.adj[v]:
            if u in position:
                s = max(s, position[u])
        prefix[v] = s
    # creation: B grouped by prefix length ascending, each u_j entering
    # isolated right after the B-vertices it must not see
    by_level: list[list[int]] = [[] for _ in range(len(a_order) + 1)]
    for v in b_side:
        by_level[prefix[v]].append(v)
    creation: list[tuple[int, str]] = []
    creation.extend((v, DOMINATING) for v in sorted(by_level[0]))
    for j, u in enumerate(a_order, start=1):
        creation.append((u, ISOLATED))
        creation.extend((v, DOMINATING) for v in sorted(by_level[j]))
    t = ThresholdGraph.from_creation(creation)
    # keep the guiding split: a_order itself is nested by construction
    return ThresholdGraph(graph=t.graph, creation=t.creation,
                          split_a=a_order, split_b=frozenset(b_side))


def is_supergraph(big: Graph, small: Graph) -> bool:
    if big.n != small.n:
        return False
    return all(small.adj[v] <= big.adj[v] for v in range(small.n))


# ---------------------------------------------------------------------------
# integer LTF witnesses

@dataclass(frozen=True)
class LtfWitness:
    """Non-negative integer weights and bound whose 0-1 solutions of
    sum(a_i x_i) <= b are exactly the clique indicator vectors."""

    weights: tuple[int, ...]
    bound: int

    @property
    def arity(self) -> int:
        return len(self.weights)

    def accepts(self, x: Sequence[int]) -> bool:
        if len(x) != self.arity:
            raise ValueError("vector length does not match arity")
        return sum(w for w, xi in zip(self.weights, x) if xi) <= self.bound

    def accepts_mask(self, mask: int) -> bool:
        total = 0
        m = mask
        while m:
            low = m & -m
            total += self.weights[low.bit_length() - 1]
            m ^= low
        return total <= self.bound


def extract_ltf(t: ThresholdGraph, seed: int = 0, exhaustive_limit: int = 20) -> LtfWitness:
    """Integer LTF weights for a threshold graph via base-(n+1) positional levels.

    Clique-side vertices weigh (n+1)^(k - s(v)); the j-th independent vertex
    weighs M - ((n+1)^(k-j+1) - 1) with bound M = 2(n+1)^(k+1) - 1, so that
    one independent vertex fits together with exactly its clique neighbors.
    Weights grow like (n+1)^O(k): arbitrary precision is required.
    The witness is verified before being returned (exhaustively up to
    `exhaustive_limit` inputs bits, sampled beyond).
    """
    g = t.graph
    n = g.n
    k = len(t.split_a)
    base = n + 1
    bound = 2 * base ** (k + 1) - 1
    weights = [0] * n
    for j, u in enumerate(t.split_a, start=1):
        weights[u] = bound - (base ** (k - j + 1) - 1)
    for v in t.split_b:
        weights[v] = base ** (k - t.prefix_length(v))
    witness = LtfWitness(weights=tuple(weights), bound=bound)
    ok, counterexample = verify_ltf(g, witness, seed=seed, exhaustive_limit=exhaustive_limit)
    if not ok:
        raise InternalVerificationError(
            f"LTF extraction produced a bad witness; counterexample {counterexample}")
    return witness


def verify_ltf(g: Graph, witness: LtfWitness, seed: int = 0,
               exhaustive_limit: int = 20) -> tuple[bool, tuple[int, ...] | None]:
    """Check that the witness accepts exactly the clique vectors of g.

    Exhaustive over all 2^n vectors when n <= exhaustive_limit; otherwise
    all singletons, all pairs, the zero vector, and 10^5 seeded random
    vectors. Returns (ok, first counterexample vector or None).
    """
    if witness.arity != g.n:
        raise ValueError("witness arity does not match graph")
    if g.n <= exhaustive_limit:
        bad = _gray_counterexample(g, [witness])
    else:
        bad = _sampled_counterexample(g, [witness], seed=seed)
    if bad is None:
        return True, None
    return False, _mask_to_vector(g.n, bad)


def _mask_to_vector(n: int, mask: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def _vector_to_mask(x: Sequence[int]) -> int:
    mask = 0
    for i, xi in enumerate(x):
        if xi:
            mask |= 1 << i
    return mask


# ---------------------------------------------------------------------------
# vectorized gate-vs-clique checking
#
# All gate sums are tracked simultaneously by packing one field per gate
# into a single big integer; field g holds bound_g + 2^(W-1) - sum_g, whose
# high bit is set exactly when gate g accepts. Field width W leaves two
# guard bits so no borrow crosses fields.

class _PackedGates:
    def __init__(self, witnesses: Sequence[LtfWitness]):
        arity = witnesses[0].arity
        if any(w.arity != arity for w in witnesses):
            raise ValueError("gates disagree on arity")
        self.arity = arity
        self.count = len(witnesses)
        span = 1
        for w in witnesses:
            span = max(span, abs(w.bound), sum(abs(a) for a in w.weights))
        self.width = span.bit_length() + 2
        half = 1 << (self.width - 1)
        self.highmask = 0
        self.base = 0
        self.cols = [0] * arity
        for gi, w in enumerate(witnesses):
            shift = gi * self.width
            self.highmask |= half << shift
            self.base += (w.bound + half) << shift
            for i, a in enumerate(w.weights):
                self.cols[i] += a << shift

    def all_accept(self, packed_sum: int) -> bool:
        return (self.base - packed_sum) & self.highmask == self.highmask

    def sum_of_mask(self, mask: int) -> int:
        total = 0
        m = mask
        while m:
            low = m & -m
            total += self.cols[low.bit_length() - 1]
            m ^= low
        return total


class _CliqueTracker:
    """Incrementally maintained count of non-adjacent pairs inside the support."""

    def __init__(self, g: Graph):
        full = (1 << g.n) - 1
        self.nonadj = []
        for v in range(g.n):
            mask = 0
            for u in g.adj[v]:
                mask |= 1 << u
            self.nonadj.append(full & ~mask & ~(1 << v))
        self.support = 0
        self.violations = 0

    def flip(self, v: int) -> None:
        bit = 1 << v
        if self.support & bit:
            self.support ^= bit
            self.violations -= (self.support & self.nonadj[v]).bit_count()
        else:
            self.violations += (self.support & self.nonadj[v]).bit_count()
            self.support ^= bit

    def is_clique_mask(self, mask: int) -> bool:
        count = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            count += (m & self.nonadj[v]).bit_count()
        return count == 0


def _gray_counterexample(g: Graph, witnesses: Sequence[LtfWitness]) -> int | None:
    """Walk all 2^n inputs in Gray-code order; return a mask where the AND of
    the gates disagrees with the clique indicator, or None."""
    packed = _PackedGates(witnesses)
    if packed.arity != g.n:
        raise ValueError("arity mismatch")
    tracker = _CliqueTracker(g)
    total = 0
    if packed.all_accept(total) != (tracker.violations == 0):
        return 0
    gray = 0
    for t in range(1, 1 << g.n):
        bit = (t & -t).bit_length() - 1
        gray ^= 1 << bit
        tracker.flip(bit)
        if gray >> bit & 1:
            total += packed.cols[bit]
        else:
            total -= packed.cols[bit]
        if packed.all_accept(total) != (tracker.violations == 0):
            return gray
    return None


def _sampled_counterexample(g: Graph, witnesses: Sequence[LtfWitness],
                            seed: int, random_trials: int = 100_000) -> int | None:
    """Check the zero vector, all singletons, all pair vectors, and seeded
    random vectors; pair vectors carry the whole edge/non-edge structure."""
    packed = _PackedGates(witnesses)
    if packed.arity != g.n:
        raise ValueError("arity mismatch")
    tracker = _CliqueTracker(g)
    n = g.n

    def bad(mask: int) -> bool:
        return packed.all_accept(packed.sum_of_mask(mask)) != tracker.is_clique_mask(mask)

    if bad(0):
        return 0
    for v in range(n):
        if bad(1 << v):
            return 1 << v
    for u, v in combinations(range(n), 2):
        mask = (1 << u) | (1 << v)
        if bad(mask):
            return mask
    rng = random.Random(seed)
    for _ in range(random_trials):
        mask = rng.getrandbits(n)
        if bad(mask):
            return mask
    return None


def and_of_gates_counterexample(g: Graph, witnesses: Sequence[LtfWitness],
                                exhaustive: bool, seed: int = 0) -> int | None:
    """Shared core for circuit verification: first input mask (as an int) where
    AND of the gates differs from the clique indicator of g, or None."""
    if not witnesses:
        # AND over zero gates is constantly true: fails on any non-clique pair
        for u, v in combinations(range(g.n), 2):
            if not g.has_edge(u, v):
                return (1 << u) | (1 << v)
        return None
    if exhaustive:
        return _gray_counterexample(g, witnesses)
    return _sampled_counterexample(g, witnesses, seed=seed)


# ---------------------------------------------------------------------------
# creation-sequence line format: "ts <n> <v:tag> ... <v:tag>"

def format_threshold(t: ThresholdGraph) -> str:
    tokens = " ".join(f"{v}:{tag}" for v, tag in t.creation)
    return f"ts {t.n} {tokens}".rstrip()


def parse_threshold(line: str) -> ThresholdGraph:
    tokens = line.split()
    if len(tokens) < 2 or tokens[0] != "ts":
        raise ValueError(f"expected 'ts <n> ...', got {line!r}")
    try:
        n = int(tokens[1])
    except ValueError:
        raise ValueError(f"bad vertex count in {line!r}") from None
    body = tokens[2:]
    if len(body) != n:
        raise ValueError(f"expected {n} creation tokens, got {len(body)}")
    creation = []
    for tok in body:
        v_str, _, tag = tok.partition(":")
        if tag not in (ISOLATED, DOMINATING):
            raise ValueError(f"bad creation token {tok!r}")
        creation.append((int(v_str), tag))
    return ThresholdGraph.from_creation(creation)

"""The Boolean side: clique-indicator functions of graphs, their 2-CNF normal
form, compilation of a verified decomposition into a depth-2 circuit (integer
LTF gates under one AND), and the reverse reading of gate lists as graphs.

Every LTF here is realizable by a single majority gate through wire
duplication and hardcoded inputs; the integer-inequality form is the
canonical artifact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .decompose import Decomposition, verify_decomposition
from .graphs import Graph
from .threshold import (LtfWitness, and_of_gates_counterexample, extract_ltf,
                        _mask_to_vector)

Literal = tuple[int, bool]  # (variable, negated)
Clause = tuple[Literal, Literal]


@dataclass(frozen=True)
class GraphicFunction:
    """Boolean function valued 1 exactly on clique indicator vectors."""

    graph: Graph

    @property
    def arity(self) -> int:
        return self.graph.n

    def evaluate(self, x: Sequence[int]) -> int:
        if len(x) != self.arity:
            raise ValueError(f"expected {self.arity} bits, got {len(x)}")
        support = [i for i, xi in enumerate(x) if xi]
        for u, v in combinations(support, 2):
            if not self.graph.has_edge(u, v):
                return 0
        return 1


def eval_graphic(f: GraphicFunction, x: Sequence[int]) -> int:
    return f.evaluate(x)


# ---------------------------------------------------------------------------
# 2-CNF normal form: one all-negative clause per non-edge

def to_2cnf(g: Graph) -> list[Clause]:
    """Clauses (not x_i or not x_j) over the non-edges, i < j ascending."""
    return [((i, True), (j, True)) for i, j in combinations(range(g.n), 2)
            if not g.has_edge(i, j)]


def from_2cnf(clauses: Sequence[Clause], n: int) -> Graph:
    """The graph whose clique indicator the clause list computes.

    Only two-literal, both-negated clauses on distinct in-range variables are
    graphic; anything else is rejected.
    """
    missing = set()
    for clause in clauses:
        if len(clause) != 2:
            raise ValueError(f"clause {clause!r} does not have exactly two literals")
        (i, neg_i), (j, neg_j) = clause
        if not (neg_i and neg_j):
            raise ValueError(f"clause {clause!r} has a positive literal")
        if i == j:
            raise ValueError(f"clause {clause!r} repeats a variable")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"clause {clause!r} out of range for n={n}")
        missing.add((min(i, j), max(i, j)))
    edges = [(u, v) for u, v in combinations(range(n), 2) if (u, v) not in missing]
    return Graph(n, edges)


def eval_2cnf(clauses: Sequence[Clause], x: Sequence[int]) -> int:
    for (i, _), (j, _) in clauses:
        if x[i] and x[j]:
            return 0
    return 1


# ---------------------------------------------------------------------------
# depth-2 circuits

@dataclass(frozen=True)
class MajorityCircuit:
    """First layer: integer LTF gates; second layer: one AND over them all."""

    arity: int
    gates: tuple[LtfWitness, ...]

    def __post_init__(self):
        if any(gate.arity != self.arity for gate in self.gates):
            raise ValueError("gate arity mismatch")

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def evaluate(self, x: Sequence[int]) -> int:
        if len(x) != self.arity:
            raise ValueError(f"expected {self.arity} bits, got {len(x)}")
        return int(all(gate.accepts(x) for gate in self.gates))


def compile_circuit(g: Graph, d: Decomposition, seed: int = 0) -> MajorityCircuit:
    """One gate per factor; the AND of the gates computes g's clique indicator.

    The decomposition is re-verified first: compiling an unverified or wrong
    decomposition is refused.
    """
    if not d.verified or not verify_decomposition(g, d):
        raise ValueError("refusing to compile an unverified decomposition")
    gates = tuple(extract_ltf(f, seed=seed) for f in d.factors)
    return MajorityCircuit(arity=g.n, gates=gates)


def verify_circuit(f: GraphicFunction, c: MajorityCircuit, mode: str = "exhaustive",
                   seed: int = 0) -> tuple[bool, tuple[int, ...] | None]:
    """Compare the circuit against the graphic function.

    Exhaustive mode walks all 2^n inputs (arity <= 20); sampled mode checks
    the zero vector, all singletons, all pair vectors, and 10^5 seeded random
    vectors. Returns (equal, first counterexample vector or None).
    """
    if c.arity != f.arity:
        raise ValueError("circuit and function arity differ")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and c.arity > 20:
        raise ValueError("exhaustive verification refused beyond arity 20")
    bad = and_of_gates_counterexample(f.graph, list(c.gates),
                                      exhaustive=(mode == "exhaustive"), seed=seed)
    if bad is None:
        return True, None
    return False, _mask_to_vector(c.arity, bad)


def ltfs_to_graph(gates: Sequence[LtfWitness]) -> Graph:
    """The graph with an edge ij exactly when every gate accepts the vector
    with ones at i and j only."""
    if not gates:
        raise ValueError("need at least one gate")
    arity = gates[0].arity
    if any(g.arity != arity for g in gates):
        raise ValueError("gate arity mismatch")
    edges = []
    for i, j in combinations(range(arity), 2):
        mask = (1 << i) | (1 << j)
        if all(g.accepts_mask(mask) for g in gates):
            edges.append((i, j))
    return Graph(arity, edges)


# ---------------------------------------------------------------------------
# circuit file format

def format_circuit(c: MajorityCircuit) -> str:
    lines = [f"ltf-and {c.arity} {c.gate_count}"]
    for gate in c.gates:
        lines.append("gate " + " ".join(str(x) for x in (gate.bound, *gate.weights)))
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> MajorityCircuit:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty circuit file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "ltf-and":
        raise ValueError(f"expected 'ltf-and <arity> <gates>', got {lines[0]!r}")
    arity, count = int(head[1]), int(head[2])
    body = lines[1:]
    if len(body) != count:
        raise ValueError(f"header promised {count} gates, found {len(body)}")
    gates = []
    for ln in body:
        tokens = ln.split()
        if tokens[0] != "gate" or len(tokens) != arity + 2:
            raise ValueError(f"bad gate line {ln!r}")
        numbers = [int(x) for x in tokens[1:]]
        gates.append(LtfWitness(weights=tuple(numbers[1:]), bound=numbers[0]))
    return MajorityCircuit(arity=arity, gates=tuple(gates))

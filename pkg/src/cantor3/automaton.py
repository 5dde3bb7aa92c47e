"""Pointed labeled graph presentations of the sets cut out by multipliers.

The objects here present path sets: a presentation is a finite directed
multigraph with edge labels in {0,1,2} and a marked start vertex, and the
set presented is all infinite label sequences of walks from the start.

The carry construction reads a candidate digit word least-significant digit
first. For each multiplier M it tracks the pending high part N (the carry)
of M times the consumed prefix. Appending digit a settles exactly one new
digit of the product, (a + N) mod 3 when M is 1 mod 3, so a is admissible
precisely when that digit stays in {0,1}; the carry becomes (N + M*a) div 3
and never exceeds floor(M/2). Intersections come from the label product,
which pairs up edges with equal labels.
"""

import json
from collections import deque
from dataclasses import dataclass
from math import prod

from .errors import RefusalError
from .ternary import Multiplier, normalize, render_ternary

DEFAULT_MAX_VERTICES = 2_000_000


class PointedLabeledGraph:
    """Immutable labeled directed multigraph with a marked start vertex.

    vertices[i] is the carry vector of vertex i (a tuple of nonnegative
    ints, one per multiplier). Edges are (src, dst, label) triples. When no
    vertex has two out-edges sharing a label the graph is right-resolving
    and out[v] maps each label to its unique destination; operations that
    read words off the graph require this.
    """

    __slots__ = ("vertices", "edges", "start", "provenance", "out", "right_resolving")

    def __init__(self, vertices, edges, start, provenance=""):
        self.vertices = tuple(tuple(v) for v in vertices)
        self.edges = tuple((int(s), int(d), int(a)) for s, d, a in edges)
        if not 0 <= start < len(self.vertices):
            raise ValueError(f"start vertex {start} out of range")
        for s, d, a in self.edges:
            if not (0 <= s < len(self.vertices) and 0 <= d < len(self.vertices)):
                raise ValueError(f"edge ({s},{d},{a}) references a missing vertex")
            if a not in (0, 1, 2):
                raise ValueError(f"edge label {a} outside the alphabet {{0,1,2}}")
        self.start = start
        self.provenance = provenance
        out = [{} for _ in self.vertices]
        resolving = True
        for s, d, a in self.edges:
            if a in out[s]:
                resolving = False
            out[s][a] = d
        self.out = tuple(out)
        self.right_resolving = resolving

    @property
    def n(self) -> int:
        return len(self.vertices)

    def out_degree(self, v: int) -> int:
        deg = 0
        for s, _, _ in self.edges:
            if s == v:
                deg += 1
        return deg

    def out_labels(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.out[v]))

    def reachable_set(self) -> set[int]:
        seen = {self.start}
        queue = deque([self.start])
        succ = [set() for _ in range(self.n)]
        for s, d, _ in self.edges:
            succ[s].add(d)
        while queue:
            v = queue.popleft()
            for w in succ[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def __repr__(self):
        return (f"PointedLabeledGraph({self.n} vertices, {len(self.edges)} edges, "
                f"start={self.start}, {self.provenance!r})")


@dataclass(frozen=True)
class ValidationReport:
    right_resolving: bool
    reachable: bool
    essential: bool
    vertex_count: int
    edge_count: int
    vertex_bound_ok: bool

    @property
    def all_ok(self) -> bool:
        return (self.right_resolving and self.reachable and self.essential
                and self.vertex_bound_ok)


def _as_multiplier(m) -> Multiplier:
    return m if isinstance(m, Multiplier) else normalize(int(m))


def _trivial_graph(values) -> PointedLabeledGraph:
    # only the zero word survives: one vertex, one 0-labeled loop
    desc = ",".join(str(v) for v in values)
    return PointedLabeledGraph([(0,)], [(0, 0, 0)], 0, provenance=f"trivial({desc})")


def build_single(m, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PointedLabeledGraph:
    """Carry automaton for a single multiplier over the digit alphabet {0,1}.

    Breadth-first closure from carry 0, trying label 0 before label 1, which
    fixes the vertex order everything downstream relies on. A multiplier
    with residue 2 admits only the zero word (its first settled digit would
    be (2a + N) mod 3 = 2 for a = 1 at the start), so it short-circuits to
    the one-vertex graph.
    """
    m = _as_multiplier(m)
    if m.residue == 2:
        return _trivial_graph([m.value])
    M = m.value
    index = {0: 0}
    carries = [0]
    edges = []
    queue = deque([0])
    while queue:
        N = queue.popleft()
        src = index[N]
        for a in (0, 1):
            if (a + N) % 3 > 1:
                continue
            nxt = (N + M * a) // 3
            dst = index.get(nxt)
            if dst is None:
                if max_vertices is not None and len(carries) >= max_vertices:
                    raise RefusalError(
                        f"carry automaton for {M} exceeds {max_vertices} vertices")
                dst = len(carries)
                index[nxt] = dst
                carries.append(nxt)
                queue.append(nxt)
            edges.append((src, dst, a))
    return PointedLabeledGraph([(c,) for c in carries], edges, 0,
                               provenance=f"carry({M})")


def reachable_product(g1: PointedLabeledGraph, g2: PointedLabeledGraph,
                      max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PointedLabeledGraph:
    """Label product restricted to pairs reachable from the start pair.

    Keeps an edge per label that both factors can read, so the result
    presents the intersection of the two path sets. Not trimmed: states
    with no common continuation are kept, which is exactly what finite
    prefix counting wants (see trim_essential for the other half).
    """
    for g, side in ((g1, "left"), (g2, "right")):
        if not g.right_resolving:
            raise ValueError(f"{side} factor must be right-resolving")
    start = (g1.start, g2.start)
    index = {start: 0}
    pairs = [start]
    edges = []
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        u1, u2 = pair
        src = index[pair]
        row1, row2 = g1.out[u1], g2.out[u2]
        for a in sorted(row1):
            if a not in row2:
                continue
            nxt = (row1[a], row2[a])
            dst = index.get(nxt)
            if dst is None:
                if max_vertices is not None and len(pairs) >= max_vertices:
                    raise RefusalError(
                        f"label product exceeds {max_vertices} vertices")
                dst = len(pairs)
                index[nxt] = dst
                pairs.append(nxt)
                queue.append(nxt)
            edges.append((src, dst, a))
    vertices = [g1.vertices[u1] + g2.vertices[u2] for (u1, u2) in pairs]
    return PointedLabeledGraph(
        vertices, edges, 0,
        provenance=f"product({g1.provenance}, {g2.provenance})")


def trim_essential(g: PointedLabeledGraph) -> PointedLabeledGraph:
    """Drop sinks until none remain, then keep the part reachable from start.

    Product states can lack any common admissible digit; walks into them
    never extend to infinite walks, so they contribute nothing to the path
    set. The start vertex is never dropped (in carry graphs it always loops
    on digit 0). Returns the input object unchanged when nothing is cut.
    """
    n = g.n
    alive = [True] * n
    outdeg = [0] * n
    preds = [[] for _ in range(n)]
    for s, d, _ in g.edges:
        outdeg[s] += 1
        preds[d].append(s)
    dead = deque(v for v in range(n) if outdeg[v] == 0 and v != g.start)
    while dead:
        v = dead.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for p in preds[v]:
            if alive[p]:
                outdeg[p] -= 1
                if outdeg[p] == 0 and p != g.start:
                    dead.append(p)

    # reachability over the surviving part
    succ = [set() for _ in range(n)]
    for s, d, _ in g.edges:
        if alive[s] and alive[d]:
            succ[s].add(d)
    seen = {g.start}
    queue = deque([g.start])
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)

    keep = [v for v in range(n) if alive[v] and v in seen]
    if len(keep) == n:
        return g
    renum = {v: i for i, v in enumerate(keep)}
    vertices = [g.vertices[v] for v in keep]
    edges = [(renum[s], renum[d], a) for (s, d, a) in g.edges
             if s in renum and d in renum]
    return PointedLabeledGraph(vertices, edges, renum[g.start], provenance=g.provenance)


def label_product(g1: PointedLabeledGraph, g2: PointedLabeledGraph,
                  max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PointedLabeledGraph:
    """Trimmed label product, the presentation of the intersection."""
    return trim_essential(reachable_product(g1, g2, max_vertices=max_vertices))


def _prepare(ms) -> list[Multiplier]:
    if not ms:
        raise ValueError("need at least one multiplier")
    out = {}
    for m in ms:
        m = _as_multiplier(m)
        out[m.value] = m
    return [out[v] for v in sorted(out)]


def build_multi(ms, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PointedLabeledGraph:
    """Presentation of the intersection over several multipliers.

    Normalizes, deduplicates, and sorts the inputs; the multiplier 1 is no
    constraint and is dropped. Any residue-2 multiplier collapses the whole
    intersection to the zero word. Otherwise a left fold of trimmed label
    products over the single-multiplier automata.
    """
    ms = _prepare(ms)
    if any(m.residue == 2 for m in ms):
        return _trivial_graph([m.value for m in ms])
    ms = [m for m in ms if m.value != 1]
    if not ms:
        return build_single(normalize(1), max_vertices=max_vertices)
    acc = build_single(ms[0], max_vertices=max_vertices)
    for m in ms[1:]:
        acc = label_product(acc, build_single(m, max_vertices=max_vertices),
                            max_vertices=max_vertices)
    return acc


def build_multi_direct(ms, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> PointedLabeledGraph:
    """One-shot carry-vector construction of the same intersection.

    States are whole carry vectors instead of nested products: digit a is
    admissible when every component allows it, and components step
    independently. An independent cross-check of build_multi; the two must
    present the same language.
    """
    ms = _prepare(ms)
    if any(m.residue == 2 for m in ms):
        raise ValueError("residue-2 multipliers are handled upstream, not here")
    ms = [m for m in ms if m.value != 1]
    if not ms:
        return build_single(normalize(1), max_vertices=max_vertices)
    values = [m.value for m in ms]
    start = (0,) * len(values)
    index = {start: 0}
    vectors = [start]
    edges = []
    queue = deque([start])
    while queue:
        Ns = queue.popleft()
        src = index[Ns]
        for a in (0, 1):
            if any((a + N) % 3 > 1 for N in Ns):
                continue
            nxt = tuple((N + M * a) // 3 for N, M in zip(Ns, values))
            dst = index.get(nxt)
            if dst is None:
                if max_vertices is not None and len(vectors) >= max_vertices:
                    raise RefusalError(
                        f"carry-vector automaton exceeds {max_vertices} vertices")
                dst = len(vectors)
                index[nxt] = dst
                vectors.append(nxt)
                queue.append(nxt)
            edges.append((src, dst, a))
    desc = ",".join(str(v) for v in values)
    g = PointedLabeledGraph(vectors, edges, 0, provenance=f"carry({desc})")
    return trim_essential(g)


def count_paths(g: PointedLabeledGraph, n: int) -> int:
    """Number of length-n label words readable from the start.

    Right-resolving is required so distinct paths carry distinct words.
    Exact integer arithmetic, so large n costs time but never precision.
    """
    if not g.right_resolving:
        raise ValueError("word counting needs a right-resolving graph")
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    counts = [0] * g.n
    counts[g.start] = 1
    for _ in range(n):
        nxt = [0] * g.n
        for s, d, _ in g.edges:
            c = counts[s]
            if c:
                nxt[d] += c
        counts = nxt
    return sum(counts)


def validate(g: PointedLabeledGraph, ms=None) -> ValidationReport:
    """Structural report; the vertex bound is checked when multipliers are given."""
    outdeg = [0] * g.n
    for s, _, _ in g.edges:
        outdeg[s] += 1
    essential = all(d >= 1 for d in outdeg)
    reachable = len(g.reachable_set()) == g.n
    if ms is None:
        bound_ok = True
    else:
        bound = prod(1 + _as_multiplier(m).value // 2 for m in ms)
        bound_ok = g.n <= bound
    return ValidationReport(
        right_resolving=g.right_resolving,
        reachable=reachable,
        essential=essential,
        vertex_count=g.n,
        edge_count=len(g.edges),
        vertex_bound_ok=bound_ok,
    )


def to_json_dict(g: PointedLabeledGraph) -> dict:
    return {
        "start": g.start,
        "vertices": [{"id": i, "carries": list(v)} for i, v in enumerate(g.vertices)],
        "edges": [{"from": s, "to": d, "label": a} for (s, d, a) in g.edges],
        "provenance": g.provenance,
    }


def to_json(g: PointedLabeledGraph, indent: int | None = 2) -> str:
    return json.dumps(to_json_dict(g), indent=indent)


def vertex_name(g: PointedLabeledGraph, v: int) -> str:
    """Carry vector rendered in ternary, components dash-joined."""
    return "-".join(render_ternary(c) for c in g.vertices[v])


def to_dot(g: PointedLabeledGraph) -> str:
    """Graphviz source; vertex order and edge order are the graph's own."""
    lines = ["digraph presentation {", "  rankdir=LR;"]
    for i in range(g.n):
        shape = "doublecircle" if i == g.start else "circle"
        lines.append(f'  v{i} [label="{vertex_name(g, i)}", shape={shape}];')
    for s, d, a in g.edges:
        lines.append(f'  v{s} -> v{d} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines)

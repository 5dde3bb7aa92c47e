"""Adjacency spectra of presentations: SCCs, Perron eigenvalue, dimension.

The Hausdorff dimension of the fractal presented by a pointed graph is
log_3 of the spectral radius of the adjacency matrix, and the radius is the
maximum over strongly connected components. Components that are bare cycles
(or edgeless, or a lone vertex with loops) are handled exactly; everything
else goes through power iteration on the shifted matrix A + I, which is
primitive whenever A is irreducible, with Collatz-Wielandt quotients giving
a certified two-sided enclosure at every step.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix

from .automaton import PointedLabeledGraph
from .errors import RefusalError

LOG3 = math.log(3.0)
CHAR_POLY_LIMIT = 64
_MAX_POWER_ITERATIONS = 500_000


def log3(x: float) -> float:
    return math.log(x) / LOG3


class AdjacencyMatrix:
    """Sparse nonnegative integer matrix; entries[(i,j)] counts edges i -> j."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = dict(entries)
        for (i, j), c in self.entries.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"entry ({i},{j}) outside a {n}x{n} matrix")
            if c < 0:
                raise ValueError(f"negative multiplicity at ({i},{j})")

    def row_sums(self) -> list[int]:
        sums = [0] * self.n
        for (i, _), c in self.entries.items():
            sums[i] += c
        return sums

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.n for _ in range(self.n)]
        for (i, j), c in self.entries.items():
            dense[i][j] = c
        return dense

    def __repr__(self):
        return f"AdjacencyMatrix({self.n}x{self.n}, {len(self.entries)} nonzero)"


@dataclass(frozen=True)
class SccDecomposition:
    """components in discovery order (reverse topological); condensation_order
    lists component indices in topological order of the condensation DAG."""

    components: tuple[frozenset[int], ...]
    condensation_order: tuple[int, ...]


@dataclass(frozen=True)
class DimensionResult:
    beta: float
    dim: float
    method: str  # power_iteration | char_poly_root | exact_trivial
    error_bound: float  # certified bound on |dim - true dim|
    dominant_component: frozenset[int]
    beta_error: float = 0.0


@dataclass(frozen=True)
class CharPoly:
    """det(xI - A) with exact integer coefficients; coefficients[i] multiplies x**i."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def pretty(self, var: str = "x") -> str:
        terms = []
        for p in range(self.degree, -1, -1):
            c = self.coefficients[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                body = var if p == 1 else f"{var}^{p}"
                if mag != 1:
                    body = f"{mag}{body}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def adjacency(g: PointedLabeledGraph) -> AdjacencyMatrix:
    """Edge multiplicity counts in the graph's own vertex order."""
    entries = {}
    for s, d, _ in g.edges:
        entries[(s, d)] = entries.get((s, d), 0) + 1
    return AdjacencyMatrix(g.n, entries)


def _tarjan(succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components emitted in reverse topological order."""
    n = len(succ)
    UNSEEN = -1
    index = [UNSEEN] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != UNSEEN:
            continue
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            while i < len(succ[v]):
                w = succ[v][i]
                i += 1
                if index[w] == UNSEEN:
                    work[-1] = (v, i)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _succ_from_entries(n: int, entries: dict) -> list[list[int]]:
    succ = [[] for _ in range(n)]
    for (i, j) in entries:
        succ[i].append(j)
    return succ


def scc(g: PointedLabeledGraph) -> SccDecomposition:
    """Strongly connected components with the condensation's topological order."""
    comps = _tarjan(_succ_from_entries(g.n, adjacency(g).entries))
    components = tuple(frozenset(c) for c in comps)
    order = tuple(reversed(range(len(components))))
    return SccDecomposition(components=components, condensation_order=order)


def _power_iteration(entries: dict, verts: list[int], tol: float):
    """Certified Perron radius of one irreducible component.

    Iterates v -> (A+I)v. The quotients ((A+I)v)_i / v_i enclose the Perron
    root of A+I from both sides for positive v, and for a primitive matrix
    they converge; subtracting the shift undoes A -> A+I.
    """
    k = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    rows, cols, data = [], [], []
    for (i, j), c in entries.items():
        rows.append(pos[i])
        cols.append(pos[j])
        data.append(float(c))
    for i in range(k):
        rows.append(i)
        cols.append(i)
        data.append(1.0)
    B = csr_matrix((data, (rows, cols)), shape=(k, k))  # duplicates are summed
    v = np.ones(k)
    for _ in range(_MAX_POWER_ITERATIONS):
        w = B.dot(v)
        ratios = w / v
        lo = float(ratios.min())
        hi = float(ratios.max())
        if hi - lo <= tol:
            return (lo + hi) / 2.0 - 1.0, (hi - lo) / 2.0
        v = w / w.max()
    raise RefusalError(
        f"power iteration did not reach gap {tol} within {_MAX_POWER_ITERATIONS} steps")


def _spectral_full(a: AdjacencyMatrix, tol: float):
    """(beta, beta_error, dominant vertex set, method) over all components."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    comps = _tarjan(_succ_from_entries(a.n, a.entries))
    best_beta = 0.0
    best_err = 0.0
    best_comp: tuple = ()
    best_exact = True
    for comp in comps:
        members = set(comp)
        sub = {(i, j): c for (i, j), c in a.entries.items()
               if i in members and j in members}
        if len(comp) == 1:
            v = comp[0]
            loops = sub.get((v, v), 0)
            beta_c, err_c, exact = float(loops), 0.0, True
        else:
            intra = sum(sub.values())
            if intra == len(comp) and all(c == 1 for c in sub.values()):
                # a bare cycle: radius exactly 1
                beta_c, err_c, exact = 1.0, 0.0, True
            else:
                beta_c, err_c = _power_iteration(sub, comp, tol)
                exact = False
        if beta_c > best_beta:
            best_beta, best_err, best_comp, best_exact = beta_c, err_c, comp, exact
    method = "exact_trivial" if best_exact else "power_iteration"
    return best_beta, best_err, tuple(best_comp), method


def spectral_radius(a: AdjacencyMatrix, tol: float = 1e-9) -> tuple[float, float]:
    """(beta, error_bound): Perron radius of a nonnegative integer matrix.

    Maximum over strongly connected components; edgeless components give 0,
    bare cycles give exactly 1, everything else is certified by the
    Collatz-Wielandt enclosure from power iteration.
    """
    beta, err, _, _ = _spectral_full(a, tol)
    return beta, err


def char_poly(a: AdjacencyMatrix, limit: int = CHAR_POLY_LIMIT) -> CharPoly:
    """Exact characteristic polynomial by the Faddeev-LeVerrier recurrence.

    Integer arithmetic throughout; the division by the step index is exact.
    Refused above `limit` (default 64): the recurrence is cubic per step and
    this is a verification aid, never the dimension path.
    """
    n = a.n
    if n > limit:
        raise RefusalError(
            f"characteristic polynomial limited to {limit}x{limit}, got {n}x{n}")
    if n == 0:
        return CharPoly((1,))
    A = a.to_dense()
    cs = [1]  # descending: coefficient of x^n first
    M = [row[:] for row in A]
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                M[i][i] += cs[-1]
            M = _int_matmul(A, M)
        tr = sum(M[i][i] for i in range(n))
        q, r = divmod(tr, k)
        assert r == 0, "Faddeev-LeVerrier trace division must be exact"
        cs.append(-q)
    return CharPoly(tuple(reversed(cs)))


def _int_matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def largest_real_root(p, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisection root of p over [lo, hi]; the bracket must change sign.

    With the right end beyond every real root (true for the Perron root of
    the polynomials used here), the sign-change bracket converges to the
    largest root in the interval.
    """
    coeffs = p.coefficients if isinstance(p, CharPoly) else tuple(p)

    def ev(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    flo, fhi = ev(lo), ev(hi)
    if flo == 0.0 and fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError(f"no bracketed root in [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fm = ev(mid)
        if fm == 0.0:
            lo = mid  # bias upward, we want the largest root
        elif (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


def hausdorff_dim(g: PointedLabeledGraph, tol: float = 1e-9) -> DimensionResult:
    """log_3 of the Perron eigenvalue of g's adjacency matrix.

    Requires an essential, reachable, right-resolving presentation (trim
    first); on anything else the dimension formula does not apply.
    """
    if not g.right_resolving:
        raise ValueError("dimension needs a right-resolving presentation")
    outdeg = [0] * g.n
    for s, _, _ in g.edges:
        outdeg[s] += 1
    if any(d == 0 for d in outdeg):
        raise ValueError("presentation has sinks; apply trim_essential first")
    if len(g.reachable_set()) != g.n:
        raise ValueError("presentation has unreachable vertices")
    beta, err, comp, method = _spectral_full(adjacency(g), tol)
    assert beta >= 1.0 - 1e-12, "an essential graph contains a cycle"
    dim = log3(beta)
    dim_err = err / ((beta - err) * LOG3) if err else 0.0
    return DimensionResult(beta=beta, dim=dim, method=method,
                           error_bound=dim_err,
                           dominant_component=frozenset(comp),
                           beta_error=err)


def char_poly_dim(g: PointedLabeledGraph, lo: float = 1.0,
                  hi: float = 2.0 + 1e-9) -> DimensionResult:
    """Dimension via the exact characteristic polynomial's bracketed root.

    A cross-check path for small graphs whose Perron root lies in (lo, hi)
    with a sign change over the bracket; power iteration is the main route.
    """
    p = char_poly(adjacency(g))
    beta = largest_real_root(p, lo, hi)
    return DimensionResult(beta=beta, dim=log3(beta), method="char_poly_root",
                           error_bound=1e-11, dominant_component=frozenset(),
                           beta_error=1e-12)

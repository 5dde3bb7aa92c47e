"""Closed-form expectations for the multiplier families and checks around them.

L_k = (3^k - 1)/2 reads as k ones in base 3; its presentation has k vertices
and Perron root the unique root above 1 of x^k - x^(k-1) - 1. N_k = 3^k + 1
has a 2^k-vertex presentation whose Perron root is the golden ratio for
every k, with an explicit eigenvector of powers of phi. P_k = 2*3^k + 1 is
generable and computable but carries no closed form here.
"""

import math
from dataclasses import dataclass

from .automaton import PointedLabeledGraph, build_multi, build_single
from .errors import RefusalError
from .langops import ComparisonResult
from .spectral import hausdorff_dim, largest_real_root, log3
from .ternary import FamilyId, family_value, normalize

PHI = (1.0 + math.sqrt(5.0)) / 2.0
N_CAP = 20  # N_k presentations have 2^k vertices


@dataclass(frozen=True)
class FamilyExpectation:
    family: FamilyId
    expected_dim: float
    expected_vertices: int
    expected_scc_count: int
    defining_poly: tuple[int, ...] | None = None


def L_poly(k: int) -> tuple[int, ...]:
    """Ascending coefficients of x^k - x^(k-1) - 1."""
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")
    if k == 1:
        return (-2, 1)
    return (-1,) + (0,) * (k - 2) + (-1, 1)


def expect_L(k: int) -> FamilyExpectation:
    """k vertices, one component, Perron root of x^k - x^(k-1) - 1."""
    poly = L_poly(k)
    beta = largest_real_root(poly, 1.0, 2.0)
    return FamilyExpectation(FamilyId("L", k), log3(beta), k, 1, poly)


def expect_N(k: int, cap: int = N_CAP) -> FamilyExpectation:
    """2^k vertices, one component, dimension log_3(phi) independent of k."""
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")
    if k > cap:
        raise RefusalError(f"N_k presentations have 2^k vertices; k <= {cap}, got {k}")
    return FamilyExpectation(FamilyId("N", k), log3(PHI), 2 ** k, 1, (-1, -1, 1))


def N_eigenvector(k: int, cap: int = N_CAP) -> list[float]:
    """Perron vector of the N_k presentation in its breadth-first vertex order.

    v_1 = (phi, 1) and v_j = (phi * v_{j-1}, v_{j-1}), so the entries are
    powers of phi. The label-0-first breadth-first order of the carry
    construction lines up with this doubling; the residual check in the
    acceptance suite confirms the alignment numerically.
    """
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")
    if k > cap:
        raise RefusalError(f"N_k eigenvectors have 2^k entries; k <= {cap}, got {k}")
    v = [PHI, 1.0]
    for _ in range(k - 1):
        v = [PHI * e for e in v] + v
    return v


def check_L_bounds(k: int) -> bool:
    """1 + ln(k)/k - 2 ln(ln(k))/k <= beta_k <= 1 + ln(k)/k, stated for k >= 6."""
    if k < 6:
        raise ValueError(f"the bounds are stated for k >= 6, got {k}")
    beta = largest_real_root(L_poly(k), 1.0, 2.0)
    upper = 1.0 + math.log(k) / k
    lower = upper - 2.0 * math.log(math.log(k)) / k
    return lower <= beta <= upper


def Y_graph() -> PointedLabeledGraph:
    """Two-vertex presentation of the words free on even slots, zero on odd.

    Start vertex 0 reads either digit and moves to 1; vertex 1 can only read
    0 back. Spectral radius sqrt(2), dimension half of log_3(2).
    """
    return PointedLabeledGraph([(0,), (1,)],
                               [(0, 1, 0), (0, 1, 1), (1, 0, 0)],
                               0, provenance="Y")


def check_th413_equality(n: int, tol: float = 1e-6) -> ComparisonResult:
    """Intersecting over N_1..N_n matches the single multiplier L_{n+1} in dimension."""
    if not 1 <= n <= 5:
        raise ValueError(f"checked for 1 <= n <= 5 only, got {n}")
    ms = [family_value(FamilyId("N", j)) for j in range(1, n + 1)]
    d_nested = hausdorff_dim(build_multi(ms)).dim
    d_single = hausdorff_dim(build_single(normalize(family_value(FamilyId("L", n + 1))))).dim
    return ComparisonResult(abs(d_nested - d_single) <= tol, None)

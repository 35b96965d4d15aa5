"""Support-constraint combinatorics.

A :class:`ZeroPattern` prescribes, for each generator-matrix row i, a set
Z_i of columns that must be zero.  A pattern is feasible when every
nonempty row subset O satisfies |intersection of Z_i| + |O| <= k; this is
checked exhaustively over all 2^k - 1 subsets (with running-intersection
pruning), which is exact at desk scale and guarded by ``max_rows``.

Patterns may carry per-row shifts t_i, in which case feasibility means the
shifted condition k - |intersection| - min t_i >= sum(k - t_i - |Z_i|)
instead; such patterns may have fewer rows than k.

The same inequalities, read through the bipartite graph with edges
(i, j) for j not in Z_i, become generalized Hall conditions; see
:func:`to_bipartite`, :func:`hall_condition` and :func:`hall_reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Sequence

from .errors import Infeasible, InternalStall, PatternTooLarge, PreconditionViolated

__all__ = [
    "ZeroPattern",
    "FeasibilityReport",
    "BipartiteSpec",
    "HallReport",
    "check_feasible",
    "compute_ell",
    "complete_pattern",
    "to_bipartite",
    "hall_condition",
    "hall_reduce",
    "pattern_to_json",
    "pattern_from_json",
    "bipartite_to_json",
    "bipartite_from_json",
]

# Subset enumeration is O(2^rows); refuse beyond this many rows.
MAX_EXHAUSTIVE_ROWS = 24


@dataclass(frozen=True)
class ZeroPattern:
    """Support constraints: k row subsets of columns [1..n], optional shifts.

    Without shifts the pattern has exactly k rows.  With shifts it is a
    shift instance: it may have m <= k rows and every row must satisfy
    |Z_i| + t_i <= k - 1.
    """

    n: int
    k: int
    zeros: tuple[frozenset[int], ...]
    shifts: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(frozenset(z) for z in self.zeros))
        if self.shifts is not None:
            object.__setattr__(self, "shifts", tuple(int(t) for t in self.shifts))
        if self.n < 1:
            raise ValueError("pattern length n must be >= 1")
        if self.k < 1:
            raise ValueError("pattern dimension k must be >= 1")
        for z in self.zeros:
            if any(not (1 <= j <= self.n) for j in z):
                raise ValueError(f"zero columns must lie in [1, {self.n}]")
        if self.shifts is None:
            if len(self.zeros) != self.k:
                raise ValueError(
                    f"pattern needs exactly k={self.k} zero sets, got {len(self.zeros)}")
        else:
            if len(self.shifts) != len(self.zeros):
                raise ValueError("shifts and zeros must have equal length")
            if len(self.zeros) > self.k:
                raise ValueError("shift instance cannot have more rows than k")
            if any(t < 0 for t in self.shifts):
                raise ValueError("shifts must be nonnegative")
            for z, t in zip(self.zeros, self.shifts):
                if len(z) + t > self.k - 1:
                    raise ValueError(
                        f"row with |Z|={len(z)}, t={t} violates |Z| + t <= k - 1")

    @property
    def rows(self) -> int:
        return len(self.zeros)

    def with_zero_added(self, row: int, col: int) -> "ZeroPattern":
        """New pattern with column ``col`` added to row ``row`` (1-based)."""
        zeros = list(self.zeros)
        zeros[row - 1] = zeros[row - 1] | {col}
        return ZeroPattern(self.n, self.k, tuple(zeros), self.shifts)


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the exhaustive subset scan.

    ``profile`` maps each subset size to the maximum left-hand side
    |intersection| + |O| seen at that size (support mode only), so
    ``ell`` is its maximum and the slack of size class v is k - profile[v].
    In shifted mode ``max_deficit`` is the largest right-minus-left gap of
    the shifted inequality (positive means infeasible).
    """

    feasible: bool
    mode: str  # "support" | "shifted"
    k: int
    violation: tuple[int, ...] | None = None
    ell: int | None = None
    profile: tuple[int, ...] = field(default=())
    max_deficit: int | None = None

    def to_json(self) -> dict:
        out = {"feasible": self.feasible, "mode": self.mode, "k": self.k}
        if self.violation is not None:
            out["violation"] = list(self.violation)
        if self.mode == "support":
            out["ell"] = self.ell
            out["profile"] = {str(i + 1): v for i, v in enumerate(self.profile)}
        else:
            out["max_deficit"] = self.max_deficit
        return out


def _column_masks(pat: ZeroPattern) -> list[int]:
    return [sum(1 << (j - 1) for j in z) for z in pat.zeros]


def _guard_rows(rows: int, max_rows: int) -> None:
    if rows > max_rows:
        raise PatternTooLarge(
            f"{rows} rows exceed the exhaustive enumeration bound {max_rows}")


def _scan_support(pat: ZeroPattern, max_rows: int):
    """DFS over nonempty row subsets; returns (ell, profile, violation).

    Once an intersection goes empty, every superset at the same tail has
    left-hand side equal to its size (<= k), so the branch is folded into
    the profile without recursing.
    """
    m = pat.rows
    _guard_rows(m, max_rows)
    masks = _column_masks(pat)
    k = pat.k
    profile = [0] * (m + 1)
    violation: tuple[int, ...] | None = None
    members: list[int] = []
    full = (1 << pat.n) - 1

    def rec(start: int, inter: int) -> None:
        nonlocal violation
        for idx in range(start, m):
            inter2 = inter & masks[idx]
            members.append(idx + 1)
            size = len(members)
            lhs = inter2.bit_count() + size
            if lhs > profile[size]:
                profile[size] = lhs
            if lhs > k and violation is None:
                violation = tuple(members)
            if inter2 == 0:
                for extra in range(1, m - idx):
                    if size + extra > profile[size + extra]:
                        profile[size + extra] = size + extra
            else:
                rec(idx + 1, inter2)
            members.pop()

    rec(0, full)
    ell = max(profile[1:])
    return ell, tuple(profile[1:]), violation


def _scan_shifted(pat: ZeroPattern, max_rows: int):
    """Full DFS of the shifted inequality; returns (max_deficit, violation)."""
    m = pat.rows
    _guard_rows(m, max_rows)
    masks = _column_masks(pat)
    shifts = pat.shifts or (0,) * m
    k = pat.k
    terms = [k - shifts[i] - len(pat.zeros[i]) for i in range(m)]
    max_deficit = None
    violation: tuple[int, ...] | None = None
    members: list[int] = []
    full = (1 << pat.n) - 1

    def rec(start: int, inter: int, min_t: int, rhs: int) -> None:
        nonlocal max_deficit, violation
        for idx in range(start, m):
            inter2 = inter & masks[idx]
            min_t2 = min(min_t, shifts[idx])
            rhs2 = rhs + terms[idx]
            members.append(idx + 1)
            lhs = k - inter2.bit_count() - min_t2
            deficit = rhs2 - lhs
            if max_deficit is None or deficit > max_deficit:
                max_deficit = deficit
            if deficit > 0 and violation is None:
                violation = tuple(members)
            rec(idx + 1, inter2, min_t2, rhs2)
            members.pop()

    rec(0, full, k, 0)
    return max_deficit, violation


def check_feasible(pat: ZeroPattern, max_rows: int = MAX_EXHAUSTIVE_ROWS) -> FeasibilityReport:
    """Exhaustively evaluate the feasibility condition on every row subset.

    Support patterns use |intersection| + |O| <= k; patterns with shifts use
    the shifted inequality instead.
    """
    if pat.shifts is not None:
        max_deficit, violation = _scan_shifted(pat, max_rows)
        return FeasibilityReport(
            feasible=violation is None, mode="shifted", k=pat.k,
            violation=violation, max_deficit=max_deficit)
    ell, profile, violation = _scan_support(pat, max_rows)
    return FeasibilityReport(
        feasible=violation is None, mode="support", k=pat.k,
        violation=violation, ell=ell, profile=profile)


def compute_ell(pat: ZeroPattern, max_rows: int = MAX_EXHAUSTIVE_ROWS) -> int:
    """max over nonempty row subsets of |intersection| + |subset|; always >= k.

    Defined for support patterns only; n - ell + 1 is the best rank distance
    any code under the pattern can reach, and ell == k iff the pattern is
    feasible.
    """
    if pat.shifts is not None:
        raise ValueError("ell is defined for patterns without shifts")
    ell, _, _ = _scan_support(pat, max_rows)
    return ell


def complete_pattern(pat: ZeroPattern, max_rows: int = MAX_EXHAUSTIVE_ROWS) -> ZeroPattern:
    """Grow every zero set to exactly k - 1 columns, preserving feasibility.

    Greedy: repeatedly add the lowest (row, column) whose addition keeps the
    pattern feasible.  A feasible addition always exists while some row is
    short, so a stall indicates a bug and raises :class:`InternalStall`.
    """
    if pat.shifts is not None:
        raise ValueError("completion is defined for patterns without shifts")
    report = check_feasible(pat, max_rows)
    if not report.feasible:
        raise Infeasible(
            f"pattern infeasible at rows {report.violation}", report.violation)
    target = pat.k - 1
    current = pat
    while True:
        short = [i for i in range(1, current.k + 1) if len(current.zeros[i - 1]) < target]
        if not short:
            return current
        progressed = False
        for i in short:
            have = current.zeros[i - 1]
            for j in range(1, current.n + 1):
                if j in have:
                    continue
                cand = current.with_zero_added(i, j)
                if check_feasible(cand, max_rows).feasible:
                    current = cand
                    progressed = True
                    break
            if progressed:
                break
        if not progressed:
            raise InternalStall(
                "no feasible zero addition exists; this contradicts the "
                "completion guarantee and should be reported as a bug")


# ---------------------------------------------------------------------------
# Generalized Hall machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteSpec:
    """Bipartite graph (U, V, E) with slack c and per-U-vertex demands d_i.

    Vertices are 1-based; edges are (u, v) pairs.
    """

    u_size: int
    v_size: int
    edges: frozenset[tuple[int, int]]
    c: int = 0
    demands: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges",
                           frozenset((int(u), int(v)) for u, v in self.edges))
        if not self.demands:
            object.__setattr__(self, "demands", (1,) * self.u_size)
        if self.u_size < 1 or self.v_size < 1:
            raise ValueError("both vertex sets must be nonempty")
        if self.c < 0:
            raise ValueError("slack c must be nonnegative")
        if len(self.demands) != self.u_size:
            raise ValueError("one demand per U vertex required")
        if any(d < 1 for d in self.demands):
            raise ValueError("demands must be positive")
        for u, v in self.edges:
            if not (1 <= u <= self.u_size and 1 <= v <= self.v_size):
                raise ValueError(f"edge ({u}, {v}) references an invalid vertex")

    def neighbor_masks(self) -> list[int]:
        masks = [0] * self.u_size
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
        return masks

    def degrees(self) -> list[int]:
        degs = [0] * self.u_size
        for u, _ in self.edges:
            degs[u - 1] += 1
        return degs


@dataclass(frozen=True)
class HallReport:
    ok: bool
    violation: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"ok": self.ok}
        if self.violation is not None:
            out["violation"] = list(self.violation)
        return out


def hall_condition(g: BipartiteSpec, max_rows: int = MAX_EXHAUSTIVE_ROWS) -> HallReport:
    """Check |N(O)| >= c + sum of demands over every nonempty O in U."""
    _guard_rows(g.u_size, max_rows)
    masks = g.neighbor_masks()
    members: list[int] = []
    violation: tuple[int, ...] | None = None

    def rec(start: int, nbhd: int, demand: int) -> None:
        nonlocal violation
        for idx in range(start, g.u_size):
            if violation is not None:
                return
            nbhd2 = nbhd | masks[idx]
            demand2 = demand + g.demands[idx]
            members.append(idx + 1)
            if nbhd2.bit_count() < g.c + demand2:
                violation = tuple(members)
            else:
                rec(idx + 1, nbhd2, demand2)
            members.pop()

    rec(0, 0, 0)
    return HallReport(ok=violation is None, violation=violation)


def hall_reduce(g: BipartiteSpec, max_rows: int = MAX_EXHAUSTIVE_ROWS) -> BipartiteSpec:
    """Trim edges until every U vertex has degree exactly c + d_i.

    Greedy removal in lowest-(u, v) order with a full inequality recheck per
    candidate edge.  The generalized Hall theorem guarantees a removable
    edge exists while any vertex is over target, so a stall is a bug.
    """
    pre = hall_condition(g, max_rows)
    if not pre.ok:
        raise PreconditionViolated(
            f"neighborhood inequality fails on U subset {pre.violation}")
    current = g
    while True:
        degs = current.degrees()
        over = [u for u in range(1, g.u_size + 1)
                if degs[u - 1] > g.c + g.demands[u - 1]]
        if not over:
            return current
        removed = False
        for u in over:
            for v in sorted(v2 for (u2, v2) in current.edges if u2 == u):
                cand = BipartiteSpec(g.u_size, g.v_size,
                                     current.edges - {(u, v)}, g.c, g.demands)
                if hall_condition(cand, max_rows).ok:
                    current = cand
                    removed = True
                    break
            if removed:
                break
        if not removed:
            raise InternalStall(
                "no removable edge exists although a vertex is over target; "
                "this contradicts the generalized Hall theorem, report as a bug")


def to_bipartite(pat: ZeroPattern) -> BipartiteSpec:
    """Dual view of a support pattern: edges are the unconstrained cells.

    With c = n - k and unit demands, the neighborhood inequalities are
    exactly the feasibility condition, via |intersection of Z_i over O| =
    n - |N(O)|.
    """
    if pat.shifts is not None:
        raise ValueError("the bipartite dual is defined for patterns without shifts")
    if pat.k > pat.n:
        raise ValueError("the bipartite dual requires k <= n")
    edges = frozenset((i, j)
                      for i in range(1, pat.k + 1)
                      for j in range(1, pat.n + 1)
                      if j not in pat.zeros[i - 1])
    return BipartiteSpec(pat.k, pat.n, edges, c=pat.n - pat.k,
                         demands=(1,) * pat.k)


# ---------------------------------------------------------------------------
# Wire formats
# ---------------------------------------------------------------------------

def pattern_to_json(pat: ZeroPattern) -> dict:
    out: dict = {
        "n": pat.n,
        "k": pat.k,
        "zeros": [sorted(z) for z in pat.zeros],
    }
    if pat.shifts is not None:
        out["shifts"] = list(pat.shifts)
    return out


def pattern_from_json(obj: dict) -> ZeroPattern:
    shifts = obj.get("shifts")
    return ZeroPattern(
        n=int(obj["n"]),
        k=int(obj["k"]),
        zeros=tuple(frozenset(int(j) for j in z) for z in obj["zeros"]),
        shifts=tuple(int(t) for t in shifts) if shifts is not None else None,
    )


def bipartite_to_json(g: BipartiteSpec) -> dict:
    return {
        "u": g.u_size,
        "v": g.v_size,
        "edges": sorted([u, v] for u, v in g.edges),
        "c": g.c,
        "demands": list(g.demands),
    }


def bipartite_from_json(obj: dict) -> BipartiteSpec:
    return BipartiteSpec(
        u_size=int(obj["u"]),
        v_size=int(obj["v"]),
        edges=frozenset((int(u), int(v)) for u, v in obj["edges"]),
        c=int(obj.get("c", 0)),
        demands=tuple(int(d) for d in obj.get("demands", [])),
    )

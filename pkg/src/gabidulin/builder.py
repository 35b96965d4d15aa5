"""Construction of support-constrained Gabidulin codes and their subcodes.

The generator matrix is G = T * M where M is the Moore matrix of n
evaluation points that are linearly independent over the base field, and
row i of T holds the q-coefficients of the monic annihilator f_i of
span{alpha_j : j in Z_i}.  Prescribing |Z_i| = k - 1 zeros per row makes
each f_i (hence T) unique, so the search reduces to finding points where
both the Moore determinant and det T are nonzero.  Feasible patterns admit
such points whenever s >= max(n, k - 1 + log_q k); the search here is
seeded random sampling (or canonical enumeration on tiny fields), since no
deterministic point-finder is known.

When the pattern is infeasible, the best reachable rank distance drops to
n - ell + 1; :func:`construct_subcode` pads the pattern with empty rows up
to dimension ell, builds the padded code, and keeps its first k rows.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from . import linalg
from .errors import (
    AttemptsExhausted,
    BadDimensions,
    DependentAlphas,
    FieldTooSmall,
    FieldTooSmallWarning,
    Infeasible,
    PatternNotNormalized,
)
from .fields import FieldCtx, field_from_json, field_to_json
from .linpoly import LinPoly, subspace_poly
from .patterns import ZeroPattern, check_feasible, complete_pattern, compute_ell

__all__ = [
    "CodeArtifact",
    "min_extension_degree",
    "moore_matrix",
    "build_T",
    "construct",
    "construct_subcode",
    "artifact_to_json",
    "artifact_from_json",
    "derive_attempt_seed",
]

# Canonical enumeration is only sensible on tiny search spaces.
ENUMERATE_LIMIT = 1 << 24

_SPLITMIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def derive_attempt_seed(seed: int, attempt: int) -> int:
    """Independent per-attempt RNG stream; attempts are order-free trials."""
    return ((seed * _SPLITMIX) ^ (attempt * 0xBF58476D1CE4E5B9)) & _MASK64


@dataclass(frozen=True)
class CodeArtifact:
    """A constructed code plus its construction transcript.

    ``T`` and ``f_list`` always describe the full square construction of
    dimension ``ell`` (the code's own dimension for Gabidulin mode); ``G``
    holds the k retained generator rows.  ``seed`` is None for enumerated
    artifacts.
    """

    ctx: FieldCtx
    alphas: tuple[int, ...]
    f_list: tuple[LinPoly, ...]
    T: tuple[tuple[int, ...], ...]
    G: tuple[tuple[int, ...], ...]
    attempts: int
    seed: int | None
    mode: str  # "gabidulin" | "subcode"
    ell: int

    @property
    def k(self) -> int:
        return len(self.G)

    @property
    def n(self) -> int:
        return len(self.alphas)


def min_extension_degree(q: int, n: int, k: int) -> int:
    """Smallest s with s >= n and q**(s - k + 1) >= k.

    This is the integer form of s >= max(n, k - 1 + log_q k), which
    guarantees evaluation points exist for every feasible pattern.
    """
    if q < 2:
        raise BadDimensions(f"field size q={q} must be >= 2")
    if not 1 <= k <= n:
        raise BadDimensions(f"dimensions must satisfy 1 <= k <= n, got k={k}, n={n}")
    s = n
    while q ** (s - k + 1) < k:
        s += 1
    return s


def moore_matrix(ctx: FieldCtx, alphas: tuple[int, ...] | list[int],
                 rows: int) -> tuple[tuple[int, ...], ...]:
    """rows x len(alphas) matrix with entry (i, j) = alpha_j**(q**(i-1))."""
    if rows < 1:
        raise BadDimensions("Moore matrix needs at least one row")
    out = [tuple(alphas)]
    for _ in range(rows - 1):
        out.append(tuple(ctx.pow(a, ctx.p) for a in out[-1]))
    return tuple(out)


def build_T(ctx: FieldCtx, alphas: tuple[int, ...] | list[int],
            pat: ZeroPattern) -> tuple[tuple[tuple[int, ...], ...], tuple[LinPoly, ...]]:
    """Row-transform matrix and the annihilators it encodes.

    Requires a normalized pattern (|Z_i| = k - 1 everywhere) and independent
    evaluation points; then f_i is monic of q-degree k - 1 and T_{i k} = 1.
    """
    if pat.shifts is not None:
        raise ValueError("build_T takes patterns without shifts")
    k = pat.k
    if any(len(z) != k - 1 for z in pat.zeros):
        raise PatternNotNormalized(
            "every zero set must have exactly k - 1 columns; run complete_pattern first")
    alphas = tuple(alphas)
    if len(alphas) != pat.n:
        raise BadDimensions(f"expected {pat.n} evaluation points, got {len(alphas)}")
    if ctx.rank_over_base(alphas) != len(alphas):
        raise DependentAlphas("evaluation points are linearly dependent over F_q")
    f_list = []
    t_rows = []
    for z in pat.zeros:
        f = subspace_poly(ctx, [alphas[j - 1] for j in sorted(z)], 0)
        f_list.append(f)
        row = [f.coeff(j) for j in range(k)]
        t_rows.append(tuple(row))
    return tuple(t_rows), tuple(f_list)


def _check_field_size(ctx: FieldCtx, n: int, dim: int, force: bool) -> None:
    needed = min_extension_degree(ctx.p, n, dim)
    if ctx.s < n:
        raise FieldTooSmall(
            f"s={ctx.s} < n={n}: no independent evaluation points exist")
    if ctx.s < needed:
        if not force:
            raise FieldTooSmall(
                f"s={ctx.s} is below the existence bound {needed} for "
                f"(q={ctx.p}, n={n}, k={dim}); pass force=True to try anyway")
        warnings.warn(
            f"s={ctx.s} below the existence bound {needed}; success is not "
            "guaranteed and AttemptsExhausted is expected behavior",
            FieldTooSmallWarning, stacklevel=3)


def _zero_check(G, pat: ZeroPattern) -> None:
    for i, z in enumerate(pat.zeros):
        for j in z:
            if G[i][j - 1] != 0:
                raise AssertionError(
                    f"constructed entry ({i + 1}, {j}) is nonzero despite the constraint")


def construct(pat: ZeroPattern, ctx: FieldCtx, *, seed: int = 0,
              max_attempts: int = 1000, strategy: str = "random",
              force: bool = False) -> CodeArtifact:
    """Search for evaluation points realizing the pattern and build the code.

    Random strategy: attempt i draws the point vector from an RNG stream
    derived from (seed, i), accepts when the points are independent and
    det T is nonzero, and the lowest successful attempt wins, so results
    are reproducible even if attempts run concurrently.  Enumerate strategy
    walks all point tuples in canonical order instead (tiny fields only).
    """
    if pat.shifts is not None:
        raise ValueError("construct takes patterns without shifts")
    report = check_feasible(pat)
    if not report.feasible:
        raise Infeasible(
            f"pattern violates the feasibility condition at rows {report.violation}",
            report.violation)
    if pat.k > pat.n:
        raise BadDimensions(f"need k <= n, got k={pat.k}, n={pat.n}")
    _check_field_size(ctx, pat.n, pat.k, force)
    normalized = complete_pattern(pat)

    n, k = pat.n, pat.k
    if strategy == "random":
        for attempt in range(1, max_attempts + 1):
            rng = random.Random(derive_attempt_seed(seed, attempt))
            alphas = tuple(rng.randrange(ctx.order) for _ in range(n))
            art = _try_points(ctx, alphas, normalized, attempt, seed)
            if art is not None:
                _zero_check(art.G, normalized)
                return art
        raise AttemptsExhausted(
            f"no valid evaluation points found in {max_attempts} attempts")
    if strategy == "enumerate":
        if ctx.order**n > ENUMERATE_LIMIT:
            raise ValueError(
                f"enumeration space {ctx.order}^{n} exceeds {ENUMERATE_LIMIT}")
        attempt = 0
        for idx in range(ctx.order**n):
            attempt += 1
            alphas = []
            v = idx
            for _ in range(n):
                v, r = divmod(v, ctx.order)
                alphas.append(r)
            art = _try_points(ctx, tuple(alphas), normalized, attempt, None)
            if art is not None:
                _zero_check(art.G, normalized)
                return art
        raise AttemptsExhausted("enumeration found no valid evaluation points")
    raise ValueError(f"unknown strategy {strategy!r}")


def _try_points(ctx: FieldCtx, alphas: tuple[int, ...], normalized: ZeroPattern,
                attempt: int, seed: int | None) -> CodeArtifact | None:
    n, k = normalized.n, normalized.k
    if ctx.rank_over_base(alphas) != n:
        return None
    T, f_list = build_T(ctx, alphas, normalized)
    if linalg.det(ctx, T) == 0:
        return None
    G = linalg.mat_mul(ctx, T, moore_matrix(ctx, alphas, k))
    return CodeArtifact(ctx=ctx, alphas=alphas, f_list=f_list, T=T, G=G,
                        attempts=attempt, seed=seed, mode="gabidulin", ell=k)


def construct_subcode(pat: ZeroPattern, ctx: FieldCtx, *, seed: int = 0,
                      max_attempts: int = 1000, strategy: str = "random",
                      force: bool = False) -> CodeArtifact:
    """Best-possible rank distance when the pattern is infeasible.

    Computes ell, pads the pattern with ell - k empty rows, constructs the
    ell-dimensional code, and keeps the first k generator rows; the result
    has rank distance exactly n - ell + 1.  Feasible patterns (ell == k)
    fall through to :func:`construct` unchanged.
    """
    if pat.shifts is not None:
        raise ValueError("construct_subcode takes patterns without shifts")
    ell = compute_ell(pat)
    if ell == pat.k:
        return construct(pat, ctx, seed=seed, max_attempts=max_attempts,
                         strategy=strategy, force=force)
    if ell > pat.n:
        raise Infeasible(
            f"ell={ell} exceeds n={pat.n}: some row subset is forced to be "
            "linearly dependent, so no full-rank generator matrix exists")
    padded = ZeroPattern(pat.n, ell,
                         pat.zeros + (frozenset(),) * (ell - pat.k))
    parent = construct(padded, ctx, seed=seed, max_attempts=max_attempts,
                       strategy=strategy, force=force)
    return CodeArtifact(ctx=parent.ctx, alphas=parent.alphas,
                        f_list=parent.f_list, T=parent.T,
                        G=parent.G[: pat.k], attempts=parent.attempts,
                        seed=parent.seed, mode="subcode", ell=ell)


def artifact_to_json(art: CodeArtifact) -> dict:
    return {
        "field": field_to_json(art.ctx),
        "alphas": list(art.alphas),
        "T": [list(row) for row in art.T],
        "G": [list(row) for row in art.G],
        "attempts": art.attempts,
        "seed": art.seed,
        "mode": art.mode,
        "ell": art.ell,
    }


def artifact_from_json(obj: dict) -> CodeArtifact:
    ctx = field_from_json(obj["field"])
    T = tuple(tuple(int(x) for x in row) for row in obj["T"])
    # each T row stores the q-coefficients of its annihilator
    f_list = tuple(LinPoly(ctx, row) for row in T)
    return CodeArtifact(
        ctx=ctx,
        alphas=tuple(int(a) for a in obj["alphas"]),
        f_list=f_list,
        T=T,
        G=tuple(tuple(int(x) for x in row) for row in obj["G"]),
        attempts=int(obj["attempts"]),
        seed=obj["seed"],
        mode=obj["mode"],
        ell=int(obj["ell"]),
    )

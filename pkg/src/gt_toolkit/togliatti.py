"""Togliatti-system classification via the generator bound and WLP failure.

The ideal generated by the degree-d invariants is a monomial Togliatti
system (hence a GT-system) when its generator count stays within
binomial(d+n-1, n-1) and multiplication by x0+...+xn fails to have
maximal rank from degree d-1 to degree d.  Both checks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import CyclicAction, ExponentVector, invariant_monomials, mu_d
from .exactalg import binomial, integer_rank


def generator_bound(action: CyclicAction) -> int:
    """The Togliatti bound binomial(d+n-1, n-1)."""
    return binomial(action.d + action.n - 1, action.n - 1)


def togliatti_bound_ok(action: CyclicAction) -> bool:
    return mu_d(action) <= generator_bound(action)


def _monomials_of_degree(nvars: int, deg: int) -> list[ExponentVector]:
    out = []
    vec = [0] * nvars

    def rec(idx, remaining):
        if idx == nvars - 1:
            vec[idx] = remaining
            out.append(tuple(vec))
            return
        for y in range(remaining, -1, -1):
            vec[idx] = y
            rec(idx + 1, remaining - y)

    rec(0, deg)
    return out


def quotient_basis(action: CyclicAction, j: int) -> list[ExponentVector]:
    """Monomials of degree j outside the invariant ideal, lex descending.

    The ideal is generated in degree d, so below degree d the quotient
    basis is all of R_j.
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    monos = _monomials_of_degree(action.nvars, j)
    if j < action.d:
        return monos
    gens = invariant_monomials(action, 1).monomials
    return [m for m in monos
            if not any(all(g[i] <= m[i] for i in range(len(m))) for g in gens)]


@dataclass(frozen=True)
class WlpCheck:
    """Rank data of multiplication by x0+...+xn between two quotient degrees."""

    j: int
    dim_source: int
    dim_target: int
    rank: int
    kernel_dimension: int
    test: str  # "injectivity" when dim_source <= dim_target, else "surjectivity"
    fails: bool

    def to_dict(self) -> dict:
        return {"j": self.j, "dim_source": self.dim_source,
                "dim_target": self.dim_target, "rank": self.rank,
                "kernel_dimension": self.kernel_dimension,
                "test": self.test, "fails": self.fails}


def wlp_fails_in_degree(action: CyclicAction, j: int) -> WlpCheck:
    """Exact maximal-rank test for x(0)+...+x(n) from degree j to j+1.

    Builds the multiplication matrix on the monomial bases of the
    quotient ring and computes its rank over the rationals.  WLP fails
    in degree j when the rank is below min(dim source, dim target).
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    source = quotient_basis(action, j)
    target = quotient_basis(action, j + 1)
    index = {m: i for i, m in enumerate(target)}
    cols = len(source)
    rows = [[0] * cols for _ in target]
    for s, m in enumerate(source):
        for i in range(action.nvars):
            shifted = tuple(m[k] + (1 if k == i else 0) for k in range(len(m)))
            r = index.get(shifted)
            if r is not None:
                rows[r][s] = 1
    rank = integer_rank(rows)
    fails = rank < min(len(source), len(target))
    test = "injectivity" if len(source) <= len(target) else "surjectivity"
    return WlpCheck(j=j, dim_source=len(source), dim_target=len(target),
                    rank=rank, kernel_dimension=len(source) - rank,
                    test=test, fails=fails)


@dataclass(frozen=True)
class GtClassification:
    action: CyclicAction
    mu_d: int
    bound: int
    is_togliatti_candidate: bool
    wlp_fails_at_d_minus_1: bool
    kernel_dimension: int
    is_gt_system: bool

    def to_dict(self) -> dict:
        return {"action": self.action.to_dict(), "mu_d": self.mu_d,
                "bound": self.bound,
                "is_togliatti_candidate": self.is_togliatti_candidate,
                "wlp_fails_at_d_minus_1": self.wlp_fails_at_d_minus_1,
                "kernel_dimension": self.kernel_dimension,
                "is_gt_system": self.is_gt_system}


def classify(action: CyclicAction) -> GtClassification:
    """Combine the generator bound with the WLP failure test at d-1."""
    count = mu_d(action)
    bound = generator_bound(action)
    check = wlp_fails_in_degree(action, action.d - 1)
    candidate = count <= bound
    return GtClassification(
        action=action,
        mu_d=count,
        bound=bound,
        is_togliatti_candidate=candidate,
        wlp_fails_at_d_minus_1=check.fails,
        kernel_dimension=check.kernel_dimension,
        is_gt_system=candidate and check.fails,
    )

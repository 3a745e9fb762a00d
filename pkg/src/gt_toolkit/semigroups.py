"""Affine semigroup engine: membership, saturation and CM certification.

All semigroups here are homogeneous (every generator has the same
coordinate sum g) and contain a positive multiple of every coordinate
axis, so their rational cone is the whole nonnegative orthant and the
saturation is simply lattice membership plus nonnegativity.

Cohen-Macaulayness is certified through the one-dimensional test set

    H1 = {w in the saturation | w + f_i and w + f_j lie in H
          for two different axis elements f_i, f_j},

which equals H exactly when the semigroup ring is Cohen-Macaulay.  The
test set is infinite, so the certificate is bounded: "verified up to
degree D" scans every graded level through D and never claims more.  A
counterexample witness, by contrast, is unconditional.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import CyclicAction, ExponentVector, invariant_monomials


class UnsupportedSemigroupError(ValueError):
    """The semigroup lacks the axis multiples the cone logic relies on."""


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class AffineSemigroup:
    """Homogeneous affine semigroup with a fixed generator list.

    Generators are deduplicated and stored lex descending; all of them
    must share the same positive coordinate sum.
    """

    dim: int
    generators: tuple[ExponentVector, ...]
    degree: int

    _member_memo: dict = field(default_factory=dict, init=False,
                               repr=False, compare=False)
    _lattice_cache: dict = field(default_factory=dict, init=False,
                                 repr=False, compare=False)

    @classmethod
    def from_generators(cls, generators) -> "AffineSemigroup":
        gens = sorted({tuple(int(c) for c in g) for g in generators},
                      reverse=True)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        dim = len(gens[0])
        if any(len(g) != dim for g in gens):
            raise ValueError("generators must share one ambient dimension")
        if any(c < 0 for g in gens for c in g):
            raise ValueError("generators must be nonnegative")
        sums = {sum(g) for g in gens}
        if len(sums) != 1:
            raise ValueError(f"generators must be homogeneous, sums {sums}")
        g = sums.pop()
        if g < 1:
            raise ValueError("generator degree must be positive")
        return cls(dim=dim, generators=tuple(gens), degree=g)

    @classmethod
    def from_dict(cls, data: dict) -> "AffineSemigroup":
        try:
            gens = data["generators"]
            semigroup = cls.from_generators(gens)
            if "dim" in data and int(data["dim"]) != semigroup.dim:
                raise ValueError("declared dim does not match the generators")
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed semigroup input: {exc}") from exc
        return semigroup

    def to_dict(self) -> dict:
        return {"dim": self.dim, "generators": [list(g) for g in self.generators]}

    def axis_generator_indices(self) -> tuple[int, ...] | None:
        """Index of the axis-multiple generator for each coordinate, if all exist."""
        found = []
        for axis in range(self.dim):
            hit = None
            for idx, g in enumerate(self.generators):
                if g[axis] > 0 and all(c == 0 for k, c in enumerate(g)
                                       if k != axis):
                    hit = idx
                    break
            if hit is None:
                return None
            found.append(hit)
        return tuple(found)


def semigroup_of_action(action: CyclicAction) -> AffineSemigroup:
    """The semigroup generated by the degree-d invariant monomials."""
    gens = invariant_monomials(action, 1).monomials
    return AffineSemigroup.from_generators(gens)


def make_h3t(t: int) -> AffineSemigroup:
    """The recursively shifted family starting from the cubic surface cone.

    Base case t = 1 is generated by the three axis triples of sum 3 plus
    (1, 1, 1); each later step keeps fresh axis vectors of sum 3t and
    shifts the previous generators by (1, 1, 1).  The generator count is
    3t + 1.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    gens = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]
    for s in range(2, t + 1):
        shifted = [(a + 1, b + 1, c + 1) for a, b, c in gens]
        gens = [(3 * s, 0, 0), (0, 3 * s, 0), (0, 0, 3 * s)] + shifted
    semigroup = AffineSemigroup.from_generators(gens)
    if len(semigroup.generators) != 3 * t + 1:
        raise AssertionError(f"expected {3 * t + 1} generators for t={t}")
    return semigroup


def make_hk(k: int, t_prime: int) -> AffineSemigroup:
    """The k-step variant: shift by (k, k, k) instead of (1, 1, 1).

    The base case t' = 0 coincides with make_h3t(1), and k = 1
    reproduces make_h3t(1 + t').  Generator degree is 3(1 + t'k) and the
    generator count is 3(t' + 1) + 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if t_prime < 0:
        raise ValueError("t' must be nonnegative")
    gens = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]
    for s in range(1, t_prime + 1):
        size = 3 * (1 + s * k)
        shifted = [(a + k, b + k, c + k) for a, b, c in gens]
        gens = [(size, 0, 0), (0, size, 0), (0, 0, size)] + shifted
    semigroup = AffineSemigroup.from_generators(gens)
    if len(semigroup.generators) != 3 * (t_prime + 1) + 1:
        raise AssertionError(f"expected {3 * (t_prime + 1) + 1} generators")
    return semigroup


@dataclass(frozen=True)
class Membership:
    member: bool
    decomposition: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {"member": self.member,
                "decomposition": list(self.decomposition)
                if self.decomposition is not None else None}


def member(H: AffineSemigroup, w) -> Membership:
    """Decide w in H by exact search, with a generator-index witness.

    The search runs over multisets of generators in canonical order with
    memoization; depth is bounded by sum(w)/g, so it is complete.
    Vectors outside the lattice of H are rejected up front.
    """
    w = tuple(int(c) for c in w)
    if len(w) != H.dim:
        raise ValueError("vector length does not match the semigroup")
    if any(c < 0 for c in w):
        return Membership(False, None)
    total = sum(w)
    if total % H.degree != 0:
        return Membership(False, None)
    if not lattice_member(H, w):
        return Membership(False, None)
    gens = H.generators
    memo = H._member_memo

    def search(vec, start):
        if all(c == 0 for c in vec):
            return ()
        key = (vec, start)
        if key in memo:
            return memo[key]
        result = None
        for i in range(start, len(gens)):
            g = gens[i]
            nxt = tuple(a - b for a, b in zip(vec, g))
            if any(c < 0 for c in nxt):
                continue
            sub = search(nxt, i)
            if sub is not None:
                result = (i,) + sub
                break
        memo[key] = result
        return result

    decomposition = search(w, 0)
    if decomposition is None:
        return Membership(False, None)
    # decompositions must re-sum to the query
    check = [0] * H.dim
    for idx in decomposition:
        for k in range(H.dim):
            check[k] += gens[idx][k]
    if tuple(check) != w:
        raise AssertionError(f"decomposition of {w} does not re-sum")
    return Membership(True, decomposition)


def _lattice_basis(H: AffineSemigroup) -> dict:
    """Echelonized integer basis of the group generated by H, by column."""
    cache = H._lattice_cache
    if "basis" in cache:
        return cache["basis"]
    basis: dict = {}
    for gen in H.generators:
        row = list(gen)
        for col in range(H.dim):
            if row[col] == 0:
                continue
            pivot = basis.get(col)
            if pivot is None:
                if row[col] < 0:
                    row = [-c for c in row]
                basis[col] = row
                row = None
                break
            g, x, y = _extended_gcd(pivot[col], row[col])
            new_pivot = [x * p + y * r for p, r in zip(pivot, row)]
            row = [(pivot[col] // g) * r - (row[col] // g) * p
                   for p, r in zip(pivot, row)]
            basis[col] = new_pivot
        # fully reduced rows vanish; anything else was stored as a pivot
    cache["basis"] = basis
    return basis


def lattice_member(H: AffineSemigroup, w) -> bool:
    """Decide membership in the additive group generated by H."""
    w = [int(c) for c in w]
    if len(w) != H.dim:
        raise ValueError("vector length does not match the semigroup")
    basis = _lattice_basis(H)
    for col in range(H.dim):
        if w[col] == 0:
            continue
        pivot = basis.get(col)
        if pivot is None or w[col] % pivot[col] != 0:
            return False
        q = w[col] // pivot[col]
        w = [c - q * p for c, p in zip(w, pivot)]
    return all(c == 0 for c in w)


def _require_axes(H: AffineSemigroup) -> tuple[int, ...]:
    axes = H.axis_generator_indices()
    if axes is None:
        raise UnsupportedSemigroupError(
            "semigroup must contain a positive multiple of every axis")
    return axes


def saturation_member(H: AffineSemigroup, w) -> bool:
    """Decide w in the saturation of H.

    With axis multiples present the cone of H is the nonnegative
    orthant, so the saturation is exactly the nonnegative part of the
    lattice of H.
    """
    _require_axes(H)
    w = tuple(int(c) for c in w)
    if len(w) != H.dim:
        raise ValueError("vector length does not match the semigroup")
    if any(c < 0 for c in w):
        return False
    return lattice_member(H, w)


def _level_vectors(total: int, dim: int):
    """Nonnegative vectors with the given coordinate sum, lex descending."""
    vec = [0] * dim

    def rec(idx, remaining):
        if idx == dim - 1:
            vec[idx] = remaining
            yield tuple(vec)
            return
        for y in range(remaining, -1, -1):
            vec[idx] = y
            yield from rec(idx + 1, remaining - y)

    yield from rec(0, total)


@dataclass(frozen=True)
class NormalityReport:
    normal_up_to_bound: bool
    bound: int
    witness: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {"normal_up_to_bound": self.normal_up_to_bound,
                "bound": self.bound,
                "witness": list(self.witness) if self.witness else None}


def is_normal_up_to(H: AffineSemigroup, bound: int) -> NormalityReport:
    """Scan saturation points through degree level `bound` for gaps.

    Levels are coordinate sums 0, g, ..., bound*g (the lattice of a
    homogeneous semigroup meets no other sums); within each level the
    scan is lex descending, so the reported witness is deterministic.
    """
    _require_axes(H)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    for level in range(0, bound + 1):
        for w in _level_vectors(level * H.degree, H.dim):
            if not lattice_member(H, w):
                continue
            if not member(H, w).member:
                return NormalityReport(False, bound, w)
    return NormalityReport(True, bound, None)


@dataclass(frozen=True)
class TrungReport:
    """Outcome of the bounded Cohen-Macaulayness certification.

    status is "verified-up-to-bound" when no witness exists through the
    scanned levels, or "counterexample" with an explicit witness w that
    lies in the saturation, has w + f_i and w + f_j in H for two
    different axis elements, and is not itself in H.
    """

    f_indices: tuple[int, ...]
    bound: int
    hypothesis_ok: bool
    z: int
    status: str
    witness: tuple[int, ...] | None
    stats: dict

    def to_dict(self) -> dict:
        return {"f_indices": list(self.f_indices), "bound": self.bound,
                "hypothesis_ok": self.hypothesis_ok, "z": self.z,
                "status": self.status,
                "witness": list(self.witness) if self.witness else None,
                "stats": dict(self.stats)}


def trung_cm_check(H: AffineSemigroup, bound: int) -> TrungReport:
    """Bounded search for a failure of the H1 = H criterion.

    The f_i are the axis-multiple generators; they are rationally
    independent, and z = g multiplies every generator into their span
    (checked, reported in hypothesis_ok).  Any candidate with two
    translates w + f_i, w + f_j inside H is automatically nonnegative,
    because each f is supported on a single axis, so scanning the
    orthant level by level is a complete search.
    """
    axes = _require_axes(H)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    g = H.degree
    hypothesis_ok = True
    for gen in H.generators:
        for axis, idx in enumerate(axes):
            scale = H.generators[idx][axis]
            if (g * gen[axis]) % scale != 0:
                hypothesis_ok = False
    f_vectors = [H.generators[idx] for idx in axes]
    lattice_points = 0
    pair_hits = 0
    for level in range(0, bound + 1):
        for w in _level_vectors(level * g, H.dim):
            if not lattice_member(H, w):
                continue
            lattice_points += 1
            translates_in = 0
            for f in f_vectors:
                shifted = tuple(a + b for a, b in zip(w, f))
                if member(H, shifted).member:
                    translates_in += 1
                    if translates_in == 2:
                        break
            if translates_in < 2:
                continue
            pair_hits += 1
            if not member(H, w).member:
                stats = {"levels_scanned": level + 1,
                         "lattice_points": lattice_points,
                         "pair_hits": pair_hits}
                return TrungReport(axes, bound, hypothesis_ok, g,
                                   "counterexample", w, stats)
    stats = {"levels_scanned": bound + 1,
             "lattice_points": lattice_points,
             "pair_hits": pair_hits}
    return TrungReport(axes, bound, hypothesis_ok, g,
                       "verified-up-to-bound", None, stats)


def lemma_two_zero_check(t: int, box: int) -> bool:
    """Exhaustive check that one-zero-coordinate membership needs 3t-multiples.

    Scans every vector with exactly one zero coordinate and the other
    two in [1, box]: such a vector lies in the t-th semigroup of the
    shifted family exactly when both nonzero coordinates are multiples
    of 3t.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if box < 1:
        raise ValueError("box must be at least 1")
    H = make_h3t(t)
    modulus = 3 * t
    for zero_pos in range(3):
        for a in range(1, box + 1):
            for b in range(1, box + 1):
                w = [a, b]
                w.insert(zero_pos, 0)
                expected = a % modulus == 0 and b % modulus == 0
                if member(H, tuple(w)).member != expected:
                    return False
    return True

"""Complex representation rings of finite abelian groups.

For abelian G every irreducible is 1-dimensional, so RU(G) is the group ring
of the character group, which the self-duality pairing identifies with G
itself.  Elements are integer vectors over the dual basis; multiplication is
convolution.  The character map lands in class functions valued in exact
cyclotomic integers of conductor exponent(G), and is injective there.

Also provides Adams operations, Euler classes of honest representations, the
tensor-power permutation representation built from fixed-point counts, and
the two rational sublattices (Galois orbit sums vs. the Adams-fixed lattice),
computed independently and compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .burnside import BurnsideRing
from .exact import (
    Cyclotomic,
    IntMatrix,
    kernel_lattice,
    lattice_equal,
    row_hnf,
)
from .groups import AbelianGroup, DualLevel, Subgroup

Vector = tuple

MAP_ENUMERATION_BOUND = 10 ** 6


class RURing:
    """RU(G) for abelian G: the group ring of the dual group of G."""

    def __init__(self, group: AbelianGroup):
        self.group = group
        self.dual = DualLevel(group, group.full_subgroup)
        self.n = self.dual.size  # == |G|

    # -- basic ring structure

    @property
    def one(self) -> Vector:
        return self.basis_element(self.group.identity)

    def basis_element(self, a) -> Vector:
        out = [0] * self.n
        out[self.dual.index_of(a)] = 1
        return tuple(out)

    def add(self, v: Sequence[int], w: Sequence[int]) -> Vector:
        return tuple(x + y for x, y in zip(v, w))

    def scale(self, c: int, v: Sequence[int]) -> Vector:
        return tuple(c * x for x in v)

    def multiply(self, v: Sequence[int], w: Sequence[int]) -> Vector:
        out = [0] * self.n
        reps = self.dual.reps
        for i, x in enumerate(v):
            if x:
                for j, y in enumerate(w):
                    if y:
                        out[self.dual.index_of(self.dual.add(reps[i], reps[j]))] += x * y
        return tuple(out)

    def power(self, v: Sequence[int], k: int) -> Vector:
        result = self.one
        base = tuple(v)
        while k > 0:
            if k & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            k >>= 1
        return result

    def dimension(self, v: Sequence[int]) -> int:
        return sum(v)

    @property
    def regular_rep(self) -> Vector:
        return (1,) * self.n

    # -- characters

    def character(self, v: Sequence[int]) -> "ClassFunction":
        """chi(v)(g) = sum_a v_a zeta_e^{<a,g>}, exact mod the cyclotomic polynomial."""
        e = self.group.exponent
        values = []
        for g in self.group.elements:
            counts = [0] * e
            for a, c in zip(self.dual.reps, v):
                if c:
                    counts[self.dual.pairing(a, g)] += c
            values.append(Cyclotomic.from_poly(e, tuple(counts)))
        return ClassFunction(self.group, e, tuple(values))

    # -- Adams operations

    def adams(self, ell: int, v: Sequence[int]) -> Vector:
        """psi^ell: the basis character chi_a goes to chi_{ell a}."""
        out = [0] * self.n
        for a, c in zip(self.dual.reps, v):
            if c:
                out[self.dual.index_of(self.dual.scale(ell, a))] += c
        return tuple(out)

    def adams_permutation(self, ell: int) -> list[int]:
        """index i -> index of ell * (i-th dual basis element)."""
        return [self.dual.index_of(self.dual.scale(ell, a)) for a in self.dual.reps]

    # -- Euler classes

    def euler_class(self, v: Sequence[int]) -> Vector:
        """prod over the character multiset of (chi - 1); rejects virtual input."""
        if any(c < 0 for c in v):
            raise ValueError("Euler classes exist only for actual representations")
        result = self.one
        for a, c in zip(self.dual.reps, v):
            if c:
                factor = tuple(
                    x - y for x, y in zip(self.basis_element(a), self.one)
                )
                for _ in range(c):
                    result = self.multiply(result, factor)
        return result

    # -- restriction to a subgroup (character restriction)

    def restrict(self, v: Sequence[int], sub_dual: DualLevel) -> Vector:
        out = [0] * sub_dual.size
        for a, c in zip(self.dual.reps, v):
            if c:
                out[sub_dual.index_of(a)] += c
        return tuple(out)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """An exact class function: one cyclotomic value per group element."""

    group: AbelianGroup
    conductor: int
    values: tuple[Cyclotomic, ...]

    def value(self, g) -> Cyclotomic:
        return self.values[self.group.index_of(g)]

    def multiply(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(
            self.group,
            self.conductor,
            tuple(a * b for a, b in zip(self.values, other.values)),
        )

    def add(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(
            self.group,
            self.conductor,
            tuple(a + b for a, b in zip(self.values, other.values)),
        )

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def rational_values(self) -> tuple:
        return tuple(v.rational_value() for v in self.values)

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "values": [[str(c) for c in v.coeffs] for v in self.values],
        }


# ---------------------------------------------------------------------------
# the tensor-power permutation representation (functions G -> {1..ell})


def perm_rep_orbit_counts(group: AbelianGroup, ell: int) -> dict[Subgroup, int]:
    """Orbit decomposition of the G-set of functions G -> {1..ell}.

    Computed from the fixed-point counts: a function fixed by H factors
    through G/H, so the marks vector is ell^[G:H]; the table of marks then
    gives the orbit multiplicities exactly.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    ring = BurnsideRing(group)
    marks = [ell ** (group.order // h.order) for h in ring.subgroups]
    coeffs = ring.element_from_marks(marks)
    assert all(c >= 0 for c in coeffs)
    return {h: c for h, c in zip(ring.subgroups, coeffs) if c}


def perm_rep_orbit_counts_enumerated(group: AbelianGroup, ell: int) -> dict[Subgroup, int]:
    """The same decomposition by honest enumeration (oracle; bounded)."""
    from .groups import ExplicitHSet, map_set_orbits

    if ell ** group.order > MAP_ENUMERATION_BOUND:
        raise ValueError("enumeration bound exceeded")
    x = ExplicitHSet.trivial_points(group.trivial_subgroup, ell)
    orbits = map_set_orbits(group.full_subgroup, group.trivial_subgroup, x)
    return {h: c for h, c in orbits.items() if c}


PERM_REP_INLINE_ENUM_BOUND = 10 ** 5


def perm_rep(group: AbelianGroup, ell: int) -> Vector:
    """ell^{tensor G} in RU(G): the linearization of the function G-set.

    Its character value at g is ell^{|G|/|g|}.  Below the enumeration bound
    the G-set is decomposed by honest enumeration and the fixed-point-count
    route is asserted to agree; above it, the count route alone is used
    (tests compare the two across the overlap as well).
    """
    ring = BurnsideRing(group)
    counts = perm_rep_orbit_counts(group, ell)
    if ell ** group.order <= PERM_REP_INLINE_ENUM_BOUND:
        enumerated = perm_rep_orbit_counts_enumerated(group, ell)
        assert enumerated == counts
    coeffs = [counts.get(h, 0) for h in ring.subgroups]
    return ring.linearize(coeffs)


# ---------------------------------------------------------------------------
# rational representation lattices


@dataclass(frozen=True)
class RationalLattices:
    """The two rational sublattices of RU(G), with their comparison.

    ``rq`` is spanned by Galois orbit sums of characters (the image of honest
    rational representations); ``rq_chi`` is the saturated fixed lattice of
    the Adams operations prime to the exponent (equivalently: the elements
    with rational character).  For the groups handled here they agree; the
    equality is computed, not assumed.
    """

    group: AbelianGroup
    rq: tuple[Vector, ...]
    rq_chi: tuple[Vector, ...]

    @property
    def equal(self) -> bool:
        n = len(self.rq[0]) if self.rq else 0
        return lattice_equal(self.rq, self.rq_chi, n)

    @property
    def rank(self) -> int:
        return len(self.rq)


def galois_orbit_sums(group: AbelianGroup) -> tuple[Vector, ...]:
    """One vector per orbit of the unit-group action a -> u*a on the dual."""
    ru = RURing(group)
    e = group.exponent
    units = [u for u in range(1, max(e, 2)) if math.gcd(u, e) == 1] or [1]
    seen = set()
    sums = []
    for i, a in enumerate(ru.dual.reps):
        if i in seen:
            continue
        orbit = {ru.dual.index_of(ru.dual.scale(u, a)) for u in units}
        seen |= orbit
        vec = [0] * ru.n
        for j in orbit:
            vec[j] = 1
        sums.append(tuple(vec))
    return tuple(sums)


def rational_rep_lattices(group: AbelianGroup) -> RationalLattices:
    ru = RURing(group)
    n = ru.n
    rq = row_hnf(galois_orbit_sums(group), n)

    # fixed lattice of psi^l for l a generator of the units mod the exponent;
    # verified to be fixed by every unit below
    e = group.exponent
    from .exact import smallest_primitive_root

    ell = smallest_primitive_root(e)
    perm = ru.adams_permutation(ell)
    p_minus_i = IntMatrix(
        [
            [(1 if perm[j] == i else 0) - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ],
        cols=n,
    )
    ker = kernel_lattice(p_minus_i)
    rq_chi = row_hnf([ker.column(j) for j in range(ker.cols)], n)

    # the fixed lattice really is fixed by all units, and its characters are rational
    for u in range(1, e + 1):
        if math.gcd(u, e) == 1:
            for v in rq_chi:
                assert ru.adams(u, v) == v
    for v in rq_chi:
        assert ru.character(v).is_rational()

    return RationalLattices(group=group, rq=rq, rq_chi=rq_chi)


def ru_element_json(group: AbelianGroup, v: Sequence[int]) -> dict:
    ru = RURing(group)
    return {
        "group": repr(group),
        "coeffs_by_dual_element": {
            "-".join(map(str, a)) if a else "0": c
            for a, c in zip(ru.dual.reps, v)
            if c
        },
    }

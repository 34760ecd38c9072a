"""Finite abelian groups, subgroup lattices, quotients, duality, and G-sets.

Groups are products of cyclic factors; elements are residue tuples.
Subgroups are stored as bitmasks over the element enumeration, so
containment, intersection, and join are cheap set operations.  Only abelian
groups are supported: every explicit computation downstream lives on cyclic
groups and products of two or three of them, where conjugation is trivial
and Weyl groups are quotients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from .exact import IntMatrix, row_hnf, smith_normal_form, solve_integer

SUBGROUP_ENUM_BOUND = 1024
MAP_SET_BOUND = 10 ** 6

Element = tuple  # residue tuple, one coordinate per cyclic factor


def parse_group(spec: str) -> "AbelianGroup":
    """Parse a group spec string like "C9" or "C3xC3" or "C1"."""
    parts = spec.strip().split("x")
    factors = []
    for part in parts:
        p = part.strip()
        if not p.upper().startswith("C") or not p[1:].isdigit():
            raise ValueError(f"bad group spec {spec!r}: expected 'C<n>' factors joined by 'x'")
        n = int(p[1:])
        if n < 1:
            raise ValueError(f"bad cyclic order {n}")
        if n > 1:
            factors.append(n)
    return abelian_group(tuple(factors))


@lru_cache(maxsize=None)
def abelian_group(factors: tuple[int, ...]) -> "AbelianGroup":
    """Shared instances so element and subgroup caches are reused."""
    return AbelianGroup(factors)


class AbelianGroup:
    """A finite abelian group given as a product of cyclic factors."""

    def __init__(self, factors: Sequence[int] = ()):
        factors = tuple(int(n) for n in factors)
        if any(n < 2 for n in factors):
            raise ValueError("cyclic factors must be >= 2")
        self.factors = factors
        self.order = math.prod(factors) if factors else 1
        self.exponent = math.lcm(*factors) if factors else 1

    # -- elements ----------------------------------------------------------

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    @cached_property
    def _index(self) -> dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def index_of(self, g: Element) -> int:
        return self._index[g]

    @property
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a: Element) -> Element:
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def element_order(self, g: Element) -> int:
        return math.lcm(*(n // math.gcd(n, x) for x, n in zip(g, self.factors))) if g else 1

    def dual_pairing(self, a: Element, g: Element) -> int:
        """<a, g> mod exponent; biadditive and nondegenerate.

        Identifies the group with its own character group:
        chi_a(g) = zeta_e ** dual_pairing(a, g) with e the exponent.
        """
        e = self.exponent
        return sum((e // n) * x * y for x, y, n in zip(a, g, self.factors)) % e if g else 0

    # -- subgroups ----------------------------------------------------------

    def subgroup_from_elements(self, els: Iterable[Element]) -> "Subgroup":
        mask = 0
        for g in els:
            mask |= 1 << self.index_of(g)
        return Subgroup(self, mask)

    def generated_subgroup(self, gens: Iterable[Element]) -> "Subgroup":
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return self.subgroup_from_elements(seen)

    @property
    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1)  # identity has index 0

    @cached_property
    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1)

    def subgroups(self, bound: int = SUBGROUP_ENUM_BOUND) -> tuple["Subgroup", ...]:
        """All subgroups, in the canonical (order, element-index-tuple) order.

        Computed as the join-closure of the cyclic subgroups; every subgroup
        of a finite abelian group is a join of cyclic ones.
        """
        if self.order > bound:
            raise ValueError(
                f"group of order {self.order} exceeds subgroup enumeration bound {bound}"
            )
        return self._subgroups_cached

    @cached_property
    def _subgroups_cached(self) -> tuple["Subgroup", ...]:
        cyclics = {self.generated_subgroup([g]).mask for g in self.elements}
        masks = set(cyclics)
        frontier = set(cyclics)
        while frontier:
            new = set()
            for m1 in frontier:
                for m2 in cyclics:
                    joined = _join_masks(self, m1, m2)
                    if joined not in masks:
                        masks.add(joined)
                        new.add(joined)
            frontier = new
        subs = [Subgroup(self, m) for m in masks]
        subs.sort(key=lambda h: h.sort_key)
        return tuple(subs)

    def cyclic_subgroups(self) -> tuple["Subgroup", ...]:
        return tuple(h for h in self.subgroups() if h.is_cyclic)

    # -- quotients -----------------------------------------------------------

    def quotient(self, h: "Subgroup") -> "QuotientData":
        """Invariant-factor form of G/H with the element-level projection."""
        if h.group is not self and h.group.factors != self.factors:
            raise ValueError("subgroup of a different group")
        r = len(self.factors)
        if r == 0:
            triv = AbelianGroup(())
            return QuotientData(self, h, triv, lambda g: ())
        cols = [tuple(n if i == j else 0 for i, n in enumerate(self.factors)) for j in range(r)]
        cols += [g for g in h.elements]
        mat = IntMatrix.from_columns(cols, nrows=r)
        dec = smith_normal_form(mat)
        diag = dec.invariant_factors  # full rank r: diag(factors) is included
        keep = [i for i, d in enumerate(diag) if d > 1]
        qfactors = tuple(diag[i] for i in keep)
        quot = AbelianGroup(qfactors)
        u_inv = dec.u_inv

        def project(g: Element) -> Element:
            w = u_inv.apply(g)
            return tuple(w[i] % diag[i] for i in keep)

        return QuotientData(self, h, quot, project)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self) -> str:
        if not self.factors:
            return "C1"
        return "x".join(f"C{n}" for n in self.factors)


def _join_masks(group: AbelianGroup, m1: int, m2: int) -> int:
    """Mask of the subgroup generated by two subgroups (elementwise sums)."""
    if m1 == m2:
        return m1
    els1 = _mask_elements(group, m1)
    els2 = _mask_elements(group, m2)
    mask = 0
    for a in els1:
        for b in els2:
            mask |= 1 << group.index_of(group.add(a, b))
    return mask


def _mask_elements(group: AbelianGroup, mask: int) -> list[Element]:
    els = group.elements
    return [els[i] for i in _mask_indices(mask)]


def _mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class Subgroup:
    """A subgroup stored as a bitmask over the ambient element enumeration."""

    def __init__(self, group: AbelianGroup, mask: int):
        self.group = group
        self.mask = mask

    @cached_property
    def element_indices(self) -> tuple[int, ...]:
        return tuple(_mask_indices(self.mask))

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        els = self.group.elements
        return tuple(els[i] for i in self.element_indices)

    @property
    def order(self) -> int:
        return len(self.element_indices)

    @property
    def index(self) -> int:
        """[G : H] in the ambient group."""
        return self.group.order // self.order

    @cached_property
    def sort_key(self) -> tuple:
        return (self.order, self.element_indices)

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.group.element_order(g) == self.order for g in self.elements)

    def contains_element(self, g: Element) -> bool:
        return bool(self.mask >> self.group.index_of(g) & 1)

    def contains(self, other: "Subgroup") -> bool:
        return other.mask & ~self.mask == 0

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, _join_masks(self.group, self.mask, other.mask))

    def index_over(self, other: "Subgroup") -> int:
        """[H : K] for K <= H."""
        if not self.contains(other):
            raise ValueError("not a subgroup")
        return self.order // other.order

    @cached_property
    def annihilator(self) -> "Subgroup":
        """{a : <a, h> = 0 for all h in H} under the self-duality pairing."""
        g = self.group
        mask = 0
        for i, a in enumerate(g.elements):
            if all(g.dual_pairing(a, h) == 0 for h in self.elements):
                mask |= 1 << i
        return Subgroup(g, mask)

    @cached_property
    def abstract_factors(self) -> tuple[int, ...]:
        """Invariant factors of H as an abstract abelian group."""
        g = self.group
        r = len(g.factors)
        if r == 0 or self.order == 1:
            return ()
        # lattice L = lifts of H + diag(n) Z^r; H = L / diag(n) Z^r
        rows = [tuple(h) for h in self.elements]
        rows += [tuple(n if i == j else 0 for i in range(r)) for j, n in enumerate(g.factors)]
        basis = row_hnf(rows, r)
        bt = IntMatrix.from_columns(basis, nrows=r).transpose()  # rows = basis
        rel_rows = []
        for j, n in enumerate(g.factors):
            target = tuple(n if i == j else 0 for i in range(r))
            coeffs = solve_integer(bt.transpose(), target)
            assert coeffs is not None
            rel_rows.append(coeffs)
        dec = smith_normal_form(IntMatrix(rel_rows, cols=r))
        return tuple(d for d in dec.invariant_factors if d > 1)

    def abstract_group(self) -> AbelianGroup:
        return AbelianGroup(self.abstract_factors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group.factors == other.group.factors
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.group.factors, self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.group!r})"


@dataclass
class QuotientData:
    group: AbelianGroup
    kernel: Subgroup
    quotient: AbelianGroup
    project: Callable[[Element], Element]

    def section(self) -> dict[Element, Element]:
        """One representative in G for each quotient element."""
        reps: dict[Element, Element] = {}
        for g in self.group.elements:
            q = self.project(g)
            reps.setdefault(q, g)
        return reps


class DualLevel:
    """The character group of a subgroup H <= G, in coordinates inside G.

    Characters of H are cosets of the annihilator of H; each coset is stored
    by its minimal-index representative.  For H = G this recovers the whole
    self-dual group with representatives the elements themselves, so the
    representation ring of G and its levels share one mechanism.
    """

    def __init__(self, group: AbelianGroup, subgroup: Subgroup):
        self.group = group
        self.subgroup = subgroup
        self.ann = subgroup.annihilator
        reps = []
        seen = set()
        for a in group.elements:
            if a in seen:
                continue
            coset = {group.add(a, t) for t in self.ann.elements}
            seen |= coset
            reps.append(min(coset, key=group.index_of))
        reps.sort(key=group.index_of)
        self.reps = tuple(reps)
        self._rep_index = {a: i for i, a in enumerate(self.reps)}
        self._canon_cache: dict[Element, Element] = {}

    @property
    def size(self) -> int:
        return len(self.reps)  # == |H|

    def canon(self, a: Element) -> Element:
        cached = self._canon_cache.get(a)
        if cached is None:
            g = self.group
            cached = min((g.add(a, t) for t in self.ann.elements), key=g.index_of)
            self._canon_cache[a] = cached
        return cached

    def index_of(self, a: Element) -> int:
        return self._rep_index[self.canon(a)]

    def add(self, a: Element, b: Element) -> Element:
        return self.canon(self.group.add(a, b))

    def scale(self, k: int, a: Element) -> Element:
        return self.canon(self.group.scale(k, a))

    def pairing(self, a: Element, h: Element) -> int:
        """<a, h> mod exponent(G), well defined for h in H."""
        return self.group.dual_pairing(a, h)

    def project_to(self, smaller: "DualLevel") -> list[Element]:
        """Character restriction D_H -> D_K for K <= H, as a map of reps."""
        return [smaller.canon(a) for a in self.reps]


# ---------------------------------------------------------------------------
# explicit H-sets and the brute-force multiplicative induction oracle


class ExplicitHSet:
    """A finite H-set with explicit points, H a subgroup of the ambient group.

    Points are opaque hashables; the action is a dict-backed function.
    """

    def __init__(self, subgroup: Subgroup, points: Sequence, act: Callable):
        self.subgroup = subgroup
        self.points = tuple(points)
        self._act = act

    @classmethod
    def from_orbits(cls, subgroup: Subgroup, orbits: Sequence[tuple[Subgroup, int]]) -> "ExplicitHSet":
        """Disjoint union of coset spaces H/J with multiplicities (all >= 0)."""
        group = subgroup.group
        points = []
        for orbit_id, (stab, mult) in enumerate(orbits):
            if mult < 0:
                raise ValueError("virtual sets have no explicit points")
            if not subgroup.contains(stab):
                raise ValueError("stabilizer must lie in the acting subgroup")
            cosets = set()
            for h in subgroup.elements:
                cosets.add(frozenset(group.add(h, s) for s in stab.elements))
            for copy in range(mult):
                for coset in sorted(cosets, key=lambda c: min(group.index_of(x) for x in c)):
                    points.append((orbit_id, copy, coset))

        def act(h, point):
            orbit_id, copy, coset = point
            return (orbit_id, copy, frozenset(group.add(h, x) for x in coset))

        return cls(subgroup, points, act)

    @classmethod
    def trivial_points(cls, subgroup: Subgroup, n: int) -> "ExplicitHSet":
        return cls(subgroup, tuple(range(n)), lambda h, p: p)

    def act(self, h: Element, point):
        return self._act(h, point)

    def fixed_points(self, k: Subgroup) -> int:
        """|X^K| for K <= H."""
        return sum(
            1
            for p in self.points
            if all(self.act(h, p) == p for h in k.elements)
        )

    def size(self) -> int:
        return len(self.points)


def map_set_orbits(
    ambient: Subgroup,
    h: Subgroup,
    x: ExplicitHSet,
    bound: int = MAP_SET_BOUND,
) -> dict[Subgroup, int]:
    """Decompose the K-set of H-equivariant maps K -> X into orbits.

    K = ``ambient`` acts by right translation: (g . f)(k) = f(k + g).  Returns
    {stabilizer subgroup: number of orbits with that stabilizer}; the class of
    the map set is then sum of count * [K/stab].  Brute force by enumeration;
    this is the oracle the marks formula for multiplicative induction is
    checked against.
    """
    group = ambient.group
    if not ambient.contains(h):
        raise ValueError("H must be contained in the ambient subgroup")
    k_els = ambient.elements
    npoints = len(x.points)
    point_index = {p: i for i, p in enumerate(x.points)}

    # coset representatives of H in K, and k = h + rep decompositions
    reps: list[Element] = []
    decomp: dict[Element, tuple[int, Element]] = {}
    for k in k_els:
        if k in decomp:
            continue
        reps.append(k)
        i = len(reps) - 1
        for hh in h.elements:
            decomp[group.add(hh, k)] = (i, hh)
    n_reps = len(reps)

    total = npoints ** n_reps
    if total > bound:
        raise ValueError(f"map-set enumeration of size {total} exceeds bound {bound}")

    def extend(assignment: tuple[int, ...]) -> tuple[int, ...]:
        out = []
        for k in k_els:
            i, hh = decomp[k]
            out.append(point_index[x.act(hh, x.points[assignment[i]])])
        return tuple(out)

    el_index = {k: i for i, k in enumerate(k_els)}
    translate_tables = {
        g: [el_index[group.add(k, g)] for k in k_els] for g in k_els
    }

    maps = {extend(a) for a in itertools.product(range(npoints), repeat=n_reps)}
    assert len(maps) == total

    orbits: dict[Subgroup, int] = {}
    remaining = set(maps)
    while remaining:
        f = remaining.pop()
        orbit = {f}
        stab_mask = 0
        for g in k_els:
            table = translate_tables[g]
            gf = tuple(f[table[i]] for i in range(len(k_els)))
            if gf == f:
                stab_mask |= 1 << group.index_of(g)
            orbit.add(gf)
        remaining -= orbit
        stab = Subgroup(group, stab_mask)
        assert len(orbit) * stab.order == ambient.order
        orbits[stab] = orbits.get(stab, 0) + 1
    return orbits

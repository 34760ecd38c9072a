"""Burnside rings of finite abelian groups via tables of marks.

A Burnside element is an integer vector over the orbit basis [G/K], K running
over the canonical subgroup list.  The table of marks M[K][H] = |(G/K)^H|
(= [G:K] when H <= K, else 0, in the abelian case) embeds the ring into a
product of copies of Z; multiplication is computed there and transformed
back, which serves multiplication, the p-local idempotents, and the ideal of
cyclically-vanishing virtual sets with one mechanism.

``BurnsideRing(G, level)`` works inside a subgroup ``level`` so that Mackey
functor levels can reuse everything; the default level is the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import (
    IntMatrix,
    kernel_lattice,
    lattice_contains,
    prime_factors,
    row_hnf,
    solve_integer,
)
from .groups import AbelianGroup, DualLevel, Subgroup

Vector = tuple


class BurnsideRing:
    def __init__(self, group: AbelianGroup, level: Subgroup | None = None):
        self.group = group
        self.level = level if level is not None else group.full_subgroup
        self.subgroups = tuple(
            k for k in group.subgroups() if self.level.contains(k)
        )
        self._sub_index = {k.mask: i for i, k in enumerate(self.subgroups)}
        self.n = len(self.subgroups)

    def sub_index(self, k: Subgroup) -> int:
        return self._sub_index[k.mask]

    # -- marks ---------------------------------------------------------------

    def mark(self, k: Subgroup, h: Subgroup) -> int:
        """|(level/K)^H|: the count of H-fixed cosets."""
        return self.level.order // k.order if k.contains(h) else 0

    @property
    def table_of_marks(self) -> IntMatrix:
        return self._table_of_marks()

    @lru_cache(maxsize=None)
    def _table_of_marks(self) -> IntMatrix:
        return IntMatrix(
            [[self.mark(k, h) for h in self.subgroups] for k in self.subgroups],
            cols=self.n,
        )

    def marks(self, coeffs: Sequence[int]) -> Vector:
        m = self.table_of_marks
        return tuple(
            sum(c * m.entries[i][j] for i, c in enumerate(coeffs)) for j in range(self.n)
        )

    def element_from_marks(self, marks: Sequence) -> Vector:
        """Invert the marks map; exact, and validated to land in Z."""
        coeffs = self._solve_marks(marks)
        out = []
        for c in coeffs:
            if c.denominator != 1:
                raise ValueError(f"marks vector {marks} is not integral over the orbit basis")
            out.append(int(c))
        return tuple(out)

    def _solve_marks(self, marks: Sequence) -> list[Fraction]:
        """Solve sum_i c_i M[i][j] = marks_j; M is triangular in the canonical order."""
        m = self.table_of_marks
        coeffs = [Fraction(0)] * self.n
        # columns of M^T are the mark rows; process subgroups from largest down
        for i in reversed(range(self.n)):
            acc = Fraction(marks[i])
            for j in range(i + 1, self.n):
                acc -= coeffs[j] * m.entries[j][i]
            coeffs[i] = acc / m.entries[i][i]
        return coeffs

    # -- ring structure --------------------------------------------------------

    @property
    def one(self) -> Vector:
        out = [0] * self.n
        out[self.sub_index(self.level)] = 1
        return tuple(out)

    def basis_element(self, k: Subgroup) -> Vector:
        out = [0] * self.n
        out[self.sub_index(k)] = 1
        return tuple(out)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, c: int, a: Sequence[int]) -> Vector:
        return tuple(c * x for x in a)

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        ma, mb = self.marks(a), self.marks(b)
        return self.element_from_marks([x * y for x, y in zip(ma, mb)])

    # -- linearization and the cyclically-vanishing ideal ------------------------

    @lru_cache(maxsize=None)
    def dual(self) -> DualLevel:
        return DualLevel(self.group, self.level)

    @lru_cache(maxsize=None)
    def linearize_matrix(self) -> IntMatrix:
        """Row K = the permutation character of [level/K] over the dual basis.

        [G/K] linearizes to the sum of the characters trivial on K, i.e. the
        dual elements pairing to zero with every element of K.
        """
        dual = self.dual()
        rows = []
        for k in self.subgroups:
            row = [
                1 if all(dual.pairing(a, x) == 0 for x in k.elements) else 0
                for a in dual.reps
            ]
            rows.append(row)
        return IntMatrix(rows, cols=dual.size)

    def linearize(self, coeffs: Sequence[int]) -> Vector:
        lin = self.linearize_matrix()
        return tuple(
            sum(c * lin.entries[i][j] for i, c in enumerate(coeffs))
            for j in range(lin.cols)
        )

    @lru_cache(maxsize=None)
    def ideal_j_rows(self) -> tuple[Vector, ...]:
        """Z-basis (saturated) of the kernel of linearization."""
        lin = self.linearize_matrix()
        ker = kernel_lattice(lin.transpose())
        return tuple(ker.column(j) for j in range(ker.cols))

    def cyclic_subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(k for k in self.subgroups if k.is_cyclic)

    def marks_on_cyclic(self, coeffs: Sequence[int]) -> Vector:
        full = self.marks(coeffs)
        return tuple(full[i] for i, k in enumerate(self.subgroups) if k.is_cyclic)

    @lru_cache(maxsize=None)
    def a_mod_j(self) -> "AModJ":
        """A/J presented as the image of marks restricted to cyclic columns."""
        cyc = self.cyclic_subgroups()
        image_rows = [self.marks_on_cyclic(self.basis_element(k)) for k in self.subgroups]
        hnf = row_hnf(image_rows, len(cyc))
        # integer preimages of the canonical basis, for restriction/transfer maps
        mat = IntMatrix.from_columns(image_rows, nrows=len(cyc))
        preimages = []
        for row in hnf:
            sol = solve_integer(mat, row)
            assert sol is not None
            preimages.append(tuple(sol))
        return AModJ(
            ring=self,
            cyclic_subgroups=cyc,
            basis=hnf,
            preimages=tuple(preimages),
        )

    # -- p-local idempotents -----------------------------------------------------

    def idempotent(self, h: Subgroup, p: int) -> tuple[Fraction, ...]:
        """The p-local idempotent whose marks vector is the indicator of H.

        Requires p coprime to the group order; the denominators that appear
        divide a power of |level|, hence are p-local units.
        """
        if self.level.order % p == 0:
            raise ValueError(
                f"no integral idempotents at p={p}: p divides the group order {self.level.order}"
            )
        indicator = [1 if k.mask == h.mask else 0 for k in self.subgroups]
        coeffs = tuple(self._solve_marks(indicator))
        self._validate_idempotent(h, coeffs)
        return coeffs

    def _validate_idempotent(self, h: Subgroup, coeffs: tuple[Fraction, ...]) -> None:
        # e^2 = e in marks coordinates
        marks = [
            sum(c * m for c, m in zip(coeffs, (Fraction(x) for x in col)))
            for col in self.table_of_marks.transpose().entries
        ]
        assert all(v in (0, 1) for v in marks)
        # leading coefficient 1/[level:H]; support only on subgroups of H
        lead = coeffs[self.sub_index(h)]
        assert lead == Fraction(1, self.level.order // h.order)
        for k, c in zip(self.subgroups, coeffs):
            if c != 0 and not h.contains(k):
                raise AssertionError("idempotent supported outside the target subgroup")
            if c != 0:
                for q in prime_factors(c.denominator):
                    assert self.level.order % q == 0, "denominator not a |G|-unit"

    def idempotent_table(self, p: int) -> dict[Subgroup, tuple[Fraction, ...]]:
        return {h: self.idempotent(h, p) for h in self.subgroups}


@dataclass(frozen=True)
class AModJ:
    """The quotient of the Burnside ring by the cyclically-vanishing ideal.

    Presented by its marks image on cyclic-subgroup columns: a full-rank
    sublattice of Z^{#cyclic} with pointwise multiplication.  ``preimages``
    gives one Burnside element over each canonical basis row.
    """

    ring: BurnsideRing
    cyclic_subgroups: tuple[Subgroup, ...]
    basis: tuple[Vector, ...]
    preimages: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, marks_vec: Sequence[int]) -> bool:
        return lattice_contains(self.basis, marks_vec)

    def project(self, coeffs: Sequence[int]) -> Vector:
        """Image of a Burnside element: its marks on cyclic subgroups."""
        return self.ring.marks_on_cyclic(coeffs)

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple(x * y for x, y in zip(a, b))

    @property
    def one(self) -> Vector:
        return (1,) * len(self.cyclic_subgroups)

    def coordinates(self, marks_vec: Sequence[int]) -> Vector | None:
        """Coefficients over the canonical basis, or None if not in the lattice."""
        from .exact import express_in_rows

        return express_in_rows(self.basis, marks_vec)


def marks_json(group: AbelianGroup) -> dict:
    """The documented table-of-marks serialization."""
    ring = BurnsideRing(group)
    return {
        "group": repr(group),
        "subgroup_orders": [k.order for k in ring.subgroups],
        "marks_matrix": [list(r) for r in ring.table_of_marks.entries],
    }


def marks_text(group: AbelianGroup) -> str:
    ring = BurnsideRing(group)
    lines = [f"table of marks for {group!r} (rows [G/K], columns H, canonical order)"]
    header = "        " + " ".join(f"{k.order:>5}" for k in ring.subgroups)
    lines.append(header)
    for k, row in zip(ring.subgroups, ring.table_of_marks.entries):
        lines.append(f"[G/{k.order:>3}] " + " ".join(f"{x:>5}" for x in row))
    return "\n".join(lines)

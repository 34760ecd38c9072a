"""The degree-0 and degree-2 endomorphisms psi^ell - 1 on RU and their
kernels and cokernels.

In degree 0, psi^ell permutes the dual basis (a -> ell*a); in degree 2 the
same permutation is scaled by ell, because the Adams operation multiplies the
Bott class by ell.  The degree-0 kernel is compared, as a lattice, against
the image of the Burnside ring under linearization and against the rational
representation lattice; the degree-2 cokernel is finite (nonzero determinant,
checked via invertibility mod ell) and its invariant factors and q-primary
part give the degree-1 homotopy levels.

q-completion never manipulates q-adic numbers: the cokernels are finite, so
the q-part of the torsion is the exact completed answer, and the free part of
the kernel completes levelwise to Z_q^rank (reported as integral data).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .burnside import BurnsideRing
from .exact import (
    IntMatrix,
    is_primitive_root,
    kernel_lattice,
    lattice_spans,
    row_hnf,
    smith_normal_form,
    smallest_primitive_root,
)
from .groups import AbelianGroup, DualLevel, Subgroup
from .reprings import RURing, rational_rep_lattices

Vector = tuple


def default_ell(group: AbelianGroup) -> int:
    """Smallest primitive root mod exponent(G); printed in all reports."""
    return smallest_primitive_root(group.exponent)


def _require_coprime(group: AbelianGroup, ell: int) -> None:
    if math.gcd(ell, group.order) != 1:
        raise ValueError(f"ell={ell} is not coprime to |G|={group.order}")


def _require_primitive(group: AbelianGroup, ell: int) -> None:
    if not is_primitive_root(ell, group.exponent):
        raise ValueError(
            f"ell={ell} is not a primitive root mod exponent(G)={group.exponent}"
        )


def dual_permutation(dual: DualLevel, ell: int) -> list[int]:
    return [dual.index_of(dual.scale(ell, a)) for a in dual.reps]


def adams_minus_one_on(dual: DualLevel, ell: int, degree: int) -> IntMatrix:
    """Matrix of psi^ell - 1 on the given dual level, degree 0 or 2."""
    if degree not in (0, 2):
        raise ValueError("degree must be 0 or 2")
    n = dual.size
    perm = dual_permutation(dual, ell)
    scale = ell if degree == 2 else 1
    return IntMatrix(
        [
            [scale * (1 if perm[j] == i else 0) - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ],
        cols=n,
    )


def adams_minus_one(group: AbelianGroup, ell: int, degree: int) -> IntMatrix:
    _require_coprime(group, ell)
    return adams_minus_one_on(DualLevel(group, group.full_subgroup), ell, degree)


@dataclass(frozen=True)
class KernelWitness:
    """The three lattices of the degree-0 kernel identification."""

    group: AbelianGroup
    ell: int
    kernel: tuple[Vector, ...]      # ker(psi^ell - 1), canonical HNF
    rq: tuple[Vector, ...]          # Galois orbit-sum lattice, canonical HNF
    linearized: tuple[Vector, ...]  # image of the Burnside ring, canonical HNF
    cyclic_count: int

    @property
    def rank(self) -> int:
        return len(self.kernel)

    @property
    def ok(self) -> bool:
        return (
            self.kernel == self.rq == self.linearized
            and self.rank == self.cyclic_count
        )

    def to_json(self) -> dict:
        return {
            "group": repr(self.group),
            "ell": self.ell,
            "pi0_rank": self.rank,
            "pi0_basis": [list(r) for r in self.kernel],
            "lattices_agree": self.ok,
            "cyclic_subgroups": self.cyclic_count,
        }


def kernel_equals_AmodJ(group: AbelianGroup, ell: int | None = None) -> KernelWitness:
    """Compare ker(psi^ell - 1) with the linearized Burnside ring and the
    rational lattice, instance by instance.

    The containment image(A) <= kernel holds for any coprime ell; the reverse
    containment (the image is the whole kernel) is the prime-power phenomenon
    this computation certifies per group.
    """
    if ell is None:
        ell = default_ell(group)
    _require_primitive(group, ell)
    _require_coprime(group, ell)

    n = group.order
    kernel_mat = kernel_lattice(adams_minus_one(group, ell, 0))
    kernel = row_hnf([kernel_mat.column(j) for j in range(kernel_mat.cols)], n)

    lat = rational_rep_lattices(group)
    assert lat.equal
    rq = lat.rq

    ring = BurnsideRing(group)
    lin_rows = [ring.linearize(ring.basis_element(k)) for k in ring.subgroups]
    linearized = row_hnf(lin_rows, n)

    # containment of the linearization in the kernel is structural; assert it
    assert lattice_spans(kernel, lin_rows, n)

    return KernelWitness(
        group=group,
        ell=ell,
        kernel=kernel,
        rq=rq,
        linearized=linearized,
        cyclic_count=len(group.cyclic_subgroups()),
    )


@dataclass(frozen=True)
class Pi1Data:
    group: AbelianGroup
    ell: int
    q: int
    invariant_factors: tuple[int, ...]
    determinant: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    @property
    def q_part(self) -> tuple[int, ...]:
        """q-primary parts q^{v_q(d)} of the torsion, dropping trivial ones."""
        out = []
        for d in self.torsion:
            qpow = 1
            while d % self.q == 0:
                qpow *= self.q
                d //= self.q
            if qpow > 1:
                out.append(qpow)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "group": repr(self.group),
            "ell": self.ell,
            "q": self.q,
            "pi1_invariant_factors": list(self.invariant_factors),
            "pi1_q_part": list(self.q_part),
            "det_degree2": self.determinant,
        }


def pi1_level(group: AbelianGroup, ell: int | None = None, q: int | None = None) -> Pi1Data:
    """Cokernel of the degree-2 psi^ell - 1, with its q-primary part.

    A zero determinant would contradict injectivity in degree 2 and raises.
    """
    if ell is None:
        ell = default_ell(group)
    _require_coprime(group, ell)
    if q is None:
        qs = [p for p in range(2, group.order + 1) if group.order % p == 0 and _is_prime(p)]
        q = qs[0] if qs else 0
    mat = adams_minus_one(group, ell, 2)
    det = mat.det()
    if det == 0:
        raise ArithmeticError(
            "degree-2 psi^ell - 1 is singular; this contradicts the finiteness "
            "of the cokernel and signals an engine bug"
        )
    dec = smith_normal_form(mat)
    return Pi1Data(
        group=group,
        ell=ell,
        q=q if q else 1,
        invariant_factors=dec.invariant_factors,
        determinant=det,
    )


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def determinant_mod_ell_check(group: AbelianGroup, ell: int | None = None) -> tuple[bool, int]:
    """det(ell*P - I) is +-1 mod ell, hence nonzero; returns the exact det."""
    if ell is None:
        ell = default_ell(group)
    _require_coprime(group, ell)
    det = adams_minus_one(group, ell, 2).det()
    return det % ell in (1 % ell, (ell - 1) % ell) and det != 0, det


@dataclass(frozen=True)
class FiberLevelData:
    """Degree-0 kernel lattice and degree-2 cokernel at one subgroup level."""

    subgroup: Subgroup
    pi0_basis: tuple[Vector, ...]  # HNF rows inside RU(H) coordinates
    pi1_invariant_factors: tuple[int, ...]
    pi1_q_part: tuple[int, ...]

    @property
    def pi0_rank(self) -> int:
        return len(self.pi0_basis)


def fiber_level_data(group: AbelianGroup, ell: int | None = None, q: int | None = None) -> dict[Subgroup, FiberLevelData]:
    """Per-subgroup kernel/cokernel data; psi^ell commutes with restriction,
    and a primitive root mod exponent(G) stays primitive at every level."""
    if ell is None:
        ell = default_ell(group)
    if q is None:
        q = pi1_level(group, ell).q
    out = {}
    for h in group.subgroups():
        dual = DualLevel(group, h)
        ker = kernel_lattice(adams_minus_one_on(dual, ell, 0))
        pi0 = row_hnf([ker.column(j) for j in range(ker.cols)], dual.size)
        deg2 = adams_minus_one_on(dual, ell, 2)
        dec = smith_normal_form(deg2)
        torsion = tuple(d for d in dec.invariant_factors if d != 1)
        qpart = []
        for d in torsion:
            qpow = 1
            while q > 1 and d % q == 0:
                qpow *= q
                d //= q
            if qpow > 1:
                qpart.append(qpow)
        out[h] = FiberLevelData(
            subgroup=h,
            pi0_basis=pi0,
            pi1_invariant_factors=dec.invariant_factors,
            pi1_q_part=tuple(qpart),
        )
    return out


def group_report(group: AbelianGroup, ell: int | None = None) -> dict:
    """The per-group JSON report: degree-0 kernel data and degree-2 cokernel."""
    if ell is None:
        ell = default_ell(group)
    witness = kernel_equals_AmodJ(group, ell)
    data = pi1_level(group, ell)
    return {
        "group": repr(group),
        "ell": ell,
        "pi0_rank": witness.rank,
        "pi0_basis": [list(r) for r in witness.kernel],
        "pi1_invariant_factors": list(data.invariant_factors),
        "pi1_q_part": list(data.q_part),
        "det_degree2": data.determinant,
    }


def restriction_commutes_with_adams(group: AbelianGroup, ell: int) -> bool:
    """res o psi^ell = psi^ell o res on every level (kernel functoriality)."""
    ru = RURing(group)
    for h in group.subgroups():
        dual = DualLevel(group, h)
        for a in ru.dual.reps:
            v = ru.basis_element(a)
            lhs = ru.restrict(ru.adams(ell, v), dual)
            # psi^ell on the restricted element
            w = ru.restrict(v, dual)
            rhs = [0] * dual.size
            for b, c in zip(dual.reps, w):
                if c:
                    rhs[dual.index_of(dual.scale(ell, b))] += c
            if lhs != tuple(rhs):
                return False
    return True

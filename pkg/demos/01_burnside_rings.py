"""Tables of marks, Burnside multiplication, and p-local idempotents.

The Burnside ring of a finite group is additively free on the orbit types
[G/H].  Counting fixed points of every subgroup on every orbit type gives the
table of marks, a triangular integer matrix that embeds the ring into a
product of copies of Z, where multiplication is pointwise.
"""

from fractions import Fraction

from kulocal import BurnsideRing, parse_group
from kulocal.burnside import marks_text

g = parse_group("C9")
ring = BurnsideRing(g)

print(marks_text(g))
print()

# multiplication through marks: [G/e] * [G/e] = 9 [G/e] ... in A(C9) the
# free orbit squares to |G| copies of itself
free = ring.basis_element(ring.subgroups[0])
print("[G/e] * [G/e] =", ring.multiply(free, free))

# marks are multiplicative
a = (1, 2, 0)
b = (0, 1, 1)
print("marks(a)       =", ring.marks(a))
print("marks(b)       =", ring.marks(b))
print("marks(a*b)     =", ring.marks(ring.multiply(a, b)))
print()

# away from the group order, the ring splits into orthogonal idempotents,
# one per subgroup, with marks the indicator vectors
print("2-local idempotents of A(C9):")
for h, coeffs in ring.idempotent_table(2).items():
    print(f"  subgroup of order {h.order}: {tuple(str(c) for c in coeffs)}")
total = [Fraction(0)] * ring.n
for coeffs in ring.idempotent_table(2).values():
    total = [x + y for x, y in zip(total, coeffs)]
print("sum of idempotents =", tuple(total), "(the unit [G/G])")

"""The Euler-class localization identities for cyclic prime-power groups.

Inverting the Euler class of the reduced regular representation of a cyclic
group of order q^k inverts exactly x^{q^{k-1}} - 1; in the quotient by the
pulled-back order-q regular representation, that element and the integer q
become invertible together.  For a rank-two elementary abelian group the
corresponding localization is the zero ring.  Each check prints its witness
data.
"""

import json

from kulocal import (
    verify_CqxCq_vanishing,
    verify_euler_localization,
    verify_q_unit_identity,
    verify_regular_factorization,
)

for q, k in [(3, 1), (3, 2), (5, 1), (7, 1)]:
    print(f"q = {q}, k = {k}")
    w = verify_regular_factorization(q, k)
    print("  factorization of x^{q^k} - 1:", "pass" if w.ok else "FAIL")
    w = verify_q_unit_identity(q, k)
    print("  (1 - y) * partner = q:       ", "pass" if w.ok else "FAIL",
          " partner coefficients", w.witness["partner_coeffs"])
    w = verify_euler_localization(q, k)
    print("  Euler localization:          ", "pass" if w.ok else "FAIL",
          f" det(mult by y-1) = {w.witness['det_y_minus_1']},",
          f"{w.witness['units_certified']} geometric-series units certified")

for q in (3, 5):
    w = verify_CqxCq_vanishing(q)
    print(f"rank-two vanishing at q = {q}:", "pass" if w.ok else "FAIL")

print()
print("one full witness record:")
print(json.dumps(verify_euler_localization(3, 2).to_json(), indent=2, sort_keys=True))

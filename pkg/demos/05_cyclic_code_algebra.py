"""The classical layer: minimal polynomials, g(x) | x^n - 1, and a toy distance.

Everything the quantum parameters rest on is classical coding theory:
x^n - 1 factors into one irreducible per coset, the defining set picks
which factors divide g(x), and a consecutive run of roots forces the
distance up.  For a code small enough to enumerate, the brute-force
minimum distance confirms the designed one.
"""

from eaqmds import (
    GF,
    ResidueSet,
    all_cosets,
    nth_root_of_unity,
    quadratic_extension,
)
from eaqmds.cyclic import (
    Polynomial,
    brute_min_distance,
    check_polynomial,
    generator_matrix,
    generator_polynomial,
    minimal_polynomial,
    x_pow_minus_one,
)

q, n = 13, 85
subfield = GF(q, 2)
tower = quadratic_extension(subfield)
lam = nth_root_of_unity(tower, n)

print(f"== factoring x^{n} - 1 over GF({subfield.order})")
product = Polynomial.one(subfield)
degrees = []
for coset in all_cosets(n, (q * q) % n):
    mp = minimal_polynomial(lam, coset)
    degrees.append(mp.degree)
    product = product * mp
print(f"   {len(degrees)} irreducible factors, degrees: "
      f"{sorted(set(degrees))} (1 linear + 42 quadratics)")
print(f"   product == x^{n} - 1: "
      f"{product.coeffs == x_pow_minus_one(subfield, n).coeffs}")

print("\n== generator and check polynomial of the [[85,33,33;12]] code")
z = ResidueSet.of(n, range(27, 59))
g = generator_polynomial(lam, z)
h = check_polynomial(g, n)
print(f"   deg g = {g.degree}, deg h = {h.degree}, "
      f"g * h == x^n - 1: {(g * h).coeffs == x_pow_minus_one(subfield, n).coeffs}")

print("\n== a toy code small enough to brute-force: n = 5 over GF(9)")
f9 = GF(3, 2)
t81 = quadratic_extension(f9)
mu = nth_root_of_unity(t81, 5)
z5 = ResidueSet.of(5, [1, 2, 3, 4])
g5 = generator_polynomial(mu, z5)
d = brute_min_distance(generator_matrix(g5, 5))
print(f"   defining set {tuple(z5)} has a run of 4 consecutive roots")
print(f"   designed distance 5; exhaustive minimum distance: {d}")

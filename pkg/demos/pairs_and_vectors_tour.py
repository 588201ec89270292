#!/usr/bin/env python3
"""Twin censuses, offset pairs, and the remainder-vector ring."""

from sievecycles import (
    PairSpec,
    decompose,
    enumerate_pair_centers,
    inverse,
    is_survivor_vector,
    is_unit_vector,
    make_basis,
    make_prime_basis,
    multiply,
    pair_count,
    reconstruct,
)

basis = make_prime_basis(4)

print("Twin survivors: centers x with both x-1 and x+1 coprime to 2,3,5,7")
census = pair_count(basis, PairSpec(1, 1))
for f in census.per_modulus_factors:
    print(f"  modulus {f.modulus}: {f.forbidden_count} forbidden residue(s) "
          f"-> factor {f.factor}")
centers = enumerate_pair_centers(basis, PairSpec(1, 1))
print(f"  predicted {census.predicted_count}, enumerated {len(centers)}:")
print(f"  {centers}")

print()
print("Wider gaps follow the same per-modulus count, with one twist:")
for a in (2, 3):
    spec = PairSpec(a, a)
    c = pair_count(basis, spec)
    sample = enumerate_pair_centers(basis, spec)[:3]
    pairs = ", ".join(f"({x - a},{x + a})" for x in sample)
    print(f"  offset {a}: {c.predicted_count} centers per period "
          f"(first pairs {pairs})")
print("  (offset 3 doubles the census: 3+3 vanishes mod 3, so that modulus")
print("   forbids one residue instead of two)")

print()
print("Remainder vectors: each x < 210 is its list of remainders mod 2,3,5,7")
for x in (7, 121, 209):
    v = decompose(basis, x)
    print(f"  {x:>3} -> {v.entries}  survivor={is_survivor_vector(v)} "
          f"unit={is_unit_vector(v)}  back to {reconstruct(v)}")

print()
print("Surviving vectors form a group under componentwise multiplication:")
b3 = make_prime_basis(3)
u = decompose(b3, 7)
w = decompose(b3, 11)
print(f"  7 * 11 mod 30 = {reconstruct(multiply(u, w))}")
print(f"  inverse of 7 mod 30 is {reconstruct(inverse(u))} "
      f"(since 7 * 13 = 91 = 3 * 30 + 1)")
print(f"  29 = -1 mod 30 is its own inverse: "
      f"{reconstruct(inverse(decompose(b3, 29))) == 29}")

print()
print("With composite coprime moduli the two notions split:")
comp = make_basis([4, 9, 25])
v = decompose(comp, 2)
print(f"  x=2 over moduli {comp.moduli}: entries {v.entries}")
print(f"  survivor (no zero entries): {is_survivor_vector(v)}")
print(f"  unit (entries coprime to moduli): {is_unit_vector(v)} "
      f"- 2 shares a factor with 4, so no inverse exists")

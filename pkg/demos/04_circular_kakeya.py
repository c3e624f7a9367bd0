"""Circular Kakeya sets: one-dimensional sets that still see every circle.

On the line, a circle of radius r around a is just the pair {a - r, a + r}.
A set K contains a circle of every radius exactly when K - K = F_q, and a
circle around every center exactly when the pairwise sums of K cover F_q.
Sets of size about 2*sqrt(q) suffice, against a sqrt(q) lower bound.
"""

from ffkakeya import (
    circular_lower_bounds,
    circular_odd_power,
    circular_prime,
    circular_square,
    make_field,
    prime_power_decompose,
)

print("prime fields: an interval 0..floor(sqrt(p)) plus a spread-out arm")
for p in (5, 13, 29, 53, 97):
    res = circular_prime(p, "radius")
    lower = circular_lower_bounds(p)[0]
    print(f"  p={p:>3}: size {res.size:>2} (lower bound {lower}), "
          f"set {sorted(res.points.ranks().tolist())}")
print()

print("square fields: the subfield F_r and its multiple by the generator")
for q in (9, 25, 49, 81):
    field = make_field(*prime_power_decompose(q))
    res = circular_square(field, "radius")
    print(f"  q={q:>2}: size {res.size} = 2*sqrt(q) - 1")
print()

print("odd prime powers q = p^(2m+1): two digit blocks over the prime cover")
for q in (27, 125):
    field = make_field(*prime_power_decompose(q))
    for variant in ("radius", "center"):
        res = circular_odd_power(field, variant)
        print(f"  q={q}: {variant:>6} cover of size {res.size} "
              f"(window sqrt(q)={q**0.5:.1f} .. 6*sqrt(q)={6 * q**0.5:.1f})")

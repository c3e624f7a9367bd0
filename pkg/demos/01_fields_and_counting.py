"""Walk through the field layer and the exact point counts on spheres.

Every element of F_q is an integer rank 0..q-1.  For prime q that is the
usual residue; for q = p^k the base-p digits of the rank are the
coefficients of a polynomial in the generator t, so rank p is t itself.
"""

from ffkakeya import DiagonalEq, diagonal_count_bruteforce, diagonal_count_closed, make_field

f9 = make_field(3, 2)
print(f"F_9 built as F_3[t] / ({f9.modulus} read constant term first)")
print(f"rank 3 is t, and t*t = {f9.mul(3, 3)} (that is -1, so t^2 + 1 = 0)")
print(f"squares in F_9: {sorted(x for x in f9.elements() if f9.char(x) >= 0 and (x == 0 or f9.char(x) == 1))}")
print(f"smallest nonsquare: {f9.smallest_nonsquare()}")
print()

# A sphere of radius b around the origin in F_q^n is the solution set of
# x_1^2 + ... + x_n^2 = b.  The closed count and the brute-force count
# must agree everywhere.
print("sphere sizes |{x : ||x|| = b}| in F_5^n")
f5 = make_field(5)
header = "  n | " + " | ".join(f"b={b}" for b in range(5))
print(header)
for n in (1, 2, 3, 4):
    row = []
    for b in range(5):
        eq = DiagonalEq((1,) * n, b)
        closed = diagonal_count_closed(f5, eq)
        brute = diagonal_count_bruteforce(f5, eq)
        assert closed == brute
        row.append(f"{closed:4d}")
    print(f"  {n} | " + " | ".join(row))
print()
print("note the pattern: q^(n-1) plus or minus a power of q, and the")
print("b = 0 column is the null quadric, which is larger in even dimension")

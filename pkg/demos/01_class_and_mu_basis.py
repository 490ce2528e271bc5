"""Class and mu-basis of a quintic parametrization.

The curve x = a/c, y = b/c with

    a = (t - 1)^2,  b = t^5 - t^4 - t^2,  c = -t^5 + t^4 + t

has degree 5. Its syzygies (A, B, C), meaning A a + B b + C c = 0, form a
free module of rank two. The class mu is the lowest degree of a nonzero
syzygy, and a mu-basis is a pair of generators of degrees mu and n - mu.
"""

from muclass import ParamTriple, decompose, mu, mu_basis, parse_poly, syzygy_space, verify_identity

triple = ParamTriple(*(parse_poly(s) for s in ("(t-1)^2", "t^5 - t^4 - t^2", "-t^5 + t^4 + t")))
print("triple:", triple)

# Count syzygies degree by degree. Nothing in degree 0, one line in degree 1.
for d in range(4):
    print(f"  syzygies of degree <= {d}: dimension {len(syzygy_space(triple, d))}")
print("class mu =", mu(triple))

basis = mu_basis(triple)
print("p =", basis.p)
print("q =", basis.q)

# p x q gives back (a, b, c) on the nose, so p and q really generate.
print("p x q == (a, b, c):", all(verify_identity(basis).values()))

# Any syzygy splits uniquely as h1 p + h2 q.
s = basis.p.shift(3) + basis.q.scale(5)
h1, h2 = decompose(basis, s)
print(f"t^3 p + 5 q decomposes as h1 = {h1}, h2 = {h2}")

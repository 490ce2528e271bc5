"""The same pipeline over prime fields and their extensions.

Over a small field the candidate roots run out quickly. With
``allow_extension`` the root search may move to F_q[x]/(g) for an
irreducible g, and the family then lives over that extension.
"""

import random

from muclass import ParamTriple, PrimeField, RootPolicy, construct, mu, parse_poly, sample_with_class
from muclass.errors import NoAdmissiblePick

F101 = PrimeField(101)
rng = random.Random(1)
triple, basis = sample_with_class(7, 1, F101, rng)
print("over F_101:", triple, " mu =", basis.mu)
seq, report = construct(triple)
print("  alpha =", seq.pick.alpha.value, "lambda =", seq.pick.lam, "class ->", report.mu_eps)

F2 = PrimeField(2)
polys = ("t^5 + t^3 + t^2 + t + 1", "t^6 + t^5 + t^4 + t^2", "t^5 + t^3 + t^2 + t + 1")
triple = ParamTriple(*(parse_poly(s, F2) for s in polys))
print("\nover F_2:", triple, " mu =", mu(triple))
try:
    construct(triple)
except NoAdmissiblePick as exc:
    print("  base field only:", exc)
seq, report = construct(triple, RootPolicy(allow_extension=True))
L = seq.pick.ctx
print("  with extensions: alpha =", L.format(seq.pick.alpha.value), "in", L)
print("  class over the extension(eps):", report.mu_eps, " passed =", report.passed)

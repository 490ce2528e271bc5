"""Deforming a class-1 quintic into a family of class 2.

For a class mu below n // 2 the construction picks a shear lambda and a
root alpha of a + lambda b, then multiplies a + lambda b by
(t - alpha + eps) / (t - alpha). At eps = 0 nothing changes; for generic
eps the class goes up by one, provided the chosen root is admissible (p_y
and p_w of the sheared mu-basis do not both vanish there).
"""

from muclass import (ParamTriple, RootPolicy, approx_sequence, construct, make_pick,
                     parse_poly, verify_approx)

triple = ParamTriple(*(parse_poly(s) for s in ("(t-1)^2", "t^5 - t^4 - t^2", "-t^5 + t^4 + t")))

# The only root of a is 1, where p = (t, t - 1, t - 1) has p_y = p_w = 0.
# Forcing it anyway gives a family whose class does not move.
bad = approx_sequence(make_pick(triple, 0, 1, check=False))
report = verify_approx(bad)
print("root alpha = 1 without shear")
print("  a_eps =", bad.a_eps)
print("  class over Q(eps):", report.mu_eps, "(wanted", report.target_mu, ")")

# Pinning alpha = 2 makes lambda = -a(2)/b(2) = -1/12, and the shear fixes it.
seq, report = construct(triple, RootPolicy(candidates=[2]))
print("\nroot alpha = 2, lambda =", seq.pick.lam)
for k, part in enumerate(seq.eps_parts(seq.a_eps)):
    print(f"  a_eps, coefficient of eps^{k}: {part}")
print("  class over Q(eps):", report.mu_eps)
for name, check in report.checks.items():
    print(f"  {name:18s} {check.passed}  {check.detail}")

# Without pinning, the default candidate order settles on another root.
seq, report = construct(triple)
print("\ndefault search: alpha =", seq.pick.alpha.value, "lambda =", seq.pick.lam,
      "passed =", report.passed)

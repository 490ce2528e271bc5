"""How common each class is, and what happens when eps is set to a number.

A random sextic almost always has the largest possible
class n // 2. For a constructed family the class at a particular eps can
only drop below its generic value, and it equals the original class at
eps = 0.
"""

import random

from muclass import PrimeField, census, construct, sample_with_class, specialization_probe

F101 = PrimeField(101)
report = census(6, 1000, F101, seed=42)
print("n = 6 over F_101, 1000 samples:")
for m, count in report.histogram.items():
    print(f"  mu = {m}: {count}")

rng = random.Random(3)
triple, basis = sample_with_class(8, 2, F101, rng)
seq, verdict = construct(triple)
print(f"\nfamily for a degree-8 triple of class {basis.mu}; generic class {verdict.mu_eps}")
for value, m in specialization_probe(seq, [0] + rng.sample(range(1, 101), 8)):
    print(f"  eps = {value:3d}: class {m}")

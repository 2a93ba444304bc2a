"""Arithmetic on residue classes, and why it does not care which
representative you pick.
"""
import random

from residua import classify, eval_poly, project

x, y = classify(9, 5), classify(7, 5)
print(f"{x} + {y} = {x + y}")

# The same sum computed through other representatives of the two classes:
# 4 + 2, then -1 + 2.
print(classify(4, 5) + classify(2, 5), classify(-1, 5) + classify(2, 5))

print("2^3 mod 7 =", classify(2, 7) ** 3)
print("3^4 mod 10 =", classify(3, 10) ** 4)
print("huge exponent:", classify(3, 1000003) ** (10**40))

# X = 2x^3 - x takes congruent values at congruent arguments.
X = [(2, 3), (-1, 1)]
for rep in (2, 9, 16, -5):
    print(f"X({rep}) ≡ {eval_poly(X, classify(rep, 7))}")

# Congruent mod 10 implies congruent mod 5.
print(project(classify(17, 10), 5), project(classify(27, 10), 5))

rng = random.Random(0)
a, b, m = rng.randrange(10**6), rng.randrange(10**6), 97
shifted = classify(a + 40 * m, m) * classify(b - 7 * m, m)
print("product independent of representatives:", classify(a, m) * classify(b, m) == shifted)

"""Congruence, least residues, and the unique member of a window.

Run: python demos/01_congruence.py
"""
from residua import congruent, divide_with_remainder, least_residues, window_representative

# Two numbers are congruent when the modulus divides their difference.
print("-9 ≡ 16 (mod 5)?  ", congruent(-9, 16, 5))
print("-7 ≡ 15 (mod 11)? ", congruent(-7, 15, 11))
print("-7 ≡ 15 (mod 3)?  ", congruent(-7, 15, 3))

# Division leaves a remainder in 0..k-1, so negative numbers get a floored quotient.
for a in (16, -13, 0):
    s, r = divide_with_remainder(a, 5)
    print(f"{a} = {s}*5 + {r}")

# Every number has three distinguished residues.
for a, m in [(-13, 5), (5, 7), (3, 6)]:
    lr = least_residues(a, m)
    print(f"{a} mod {m}: positive {lr.least_positive}, negative {lr.least_negative}, "
          f"absolutely least {lr.absolutely_least}")

# Any m consecutive integers contain exactly one number congruent to a given target.
for start in (-9, 0, 3):
    print(f"window {start}..{start + 4} holds {window_representative(start, 5, 16)} ≡ 16 (mod 5)")

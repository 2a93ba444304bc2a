"""Residues of 1, a, a^2, ... repeat. Their period divides p - 1, and
Fermat's theorem shows up three ways.
"""
from residua import (
    binomial_proof_trace,
    check_order_divides,
    corollary_ap_minus_1,
    fermat_euler_check,
    period_structure,
    power_sequence,
)

print("powers of 3 mod 7:", [c.rep for c in power_sequence(3, 7, 14)])

for a, m in [(2, 7), (10, 6), (3, 10)]:
    ps = period_structure(a, m)
    print(f"a={a} m={m}: tail {[c.rep for c in ps.tail]}, cycle {[c.rep for c in ps.cycle]}")

for a in range(1, 7):
    t, ok = check_order_divides(7, a)
    print(f"order of {a} mod 7 is {t}; divides 6: {ok}")

print("5^phi(12) mod 12 =", fermat_euler_check(5, 12))
print("10^10 mod 11 =", corollary_ap_minus_1(11, 10))

# The binomial induction: p | (a+1)^p - a^p - 1, so p | a^p - a climbs from a = 1.
trace = binomial_proof_trace(7, 5)
for step in trace.steps:
    print(f"{step.a}^7 - {step.a} = {step.value} = 7 * {step.witness}")
print("trace re-checks:", trace.check())
print(trace.to_jsonl(), end="")

"""Complete systems, the affine permutation x -> a*x + b, and order-free products."""
from residua import (
    affine_image,
    affine_map,
    canonical_complete_system,
    fold_product,
    is_complete_system,
    reduced_system,
    reduction_schedules,
)

base = canonical_complete_system(5)
print("canonical:", base.members)
print("-9..-5 complete mod 5?", is_complete_system(range(-9, -4), 5))
print("reduced system mod 12:", reduced_system(12).members)

img = affine_image(2, 3, base)
print("2x+3 over 0..4:", img.members, "-> classes", img.classes())

# With a not coprime to the modulus some class is hit twice.
print("2x over 0..3 mod 4:", [v % 4 for v in affine_map(2, 0, range(4))])

values = (2, 3, 4, 5)
results = {fold_product(values, s) for s in reduction_schedules(len(values))}
print(f"{sum(1 for _ in reduction_schedules(4))} schedules for {values}, results: {results}")

"""Octonion multiplication: table construction, non-associativity, seeds.

The eight-dimensional algebra is generated from a single seed product
e_i * e_j = e_k by anticommutation, index cycling, and index doubling.
Not every seed is admissible: the triple must behave like a quaternion
subalgebra, and the builder rejects the rest.
"""

import random

from ruled4.octonion import (
    InconsistentSeed,
    Octonion,
    build_mul_table,
    default_table,
    oct_mul,
    table_to_csv,
)


def main():
    table = default_table()

    print("Multiplication table from the default seed e1*e2 = e4")
    print("(rows are the left factor, columns the right factor)\n")
    print(table_to_csv(table))

    print("Non-associativity witness (exact coefficients):")
    e = [Octonion.basis(k) for k in range(8)]
    left = oct_mul(oct_mul(e[1], e[2]), e[3])
    right = oct_mul(e[1], oct_mul(e[2], e[3]))
    print(f"  (e1*e2)*e3 coefficients: {list(left.coeffs)}")
    print(f"  e1*(e2*e3) coefficients: {list(right.coeffs)}")
    assert left.coeffs == (-right).coeffs

    print("\nAlternativity spot check (random elements, scaled tolerance):")
    rng = random.Random(7)
    worst = 0.0
    for _ in range(50):
        a = Octonion(tuple(rng.uniform(-2.0, 2.0) for _ in range(8)))
        b = Octonion(tuple(rng.uniform(-2.0, 2.0) for _ in range(8)))
        lhs = oct_mul(oct_mul(a, a), b)
        rhs = oct_mul(a, oct_mul(a, b))
        scale = max(1.0, a.norm() ** 2 * b.norm())
        gap = max(abs(p - q) for p, q in zip(lhs.coeffs, rhs.coeffs)) / scale
        worst = max(worst, gap)
    print(f"  max scaled deviation of (a*a)*b - a*(a*b) over 50 pairs: {worst:.3e}")
    assert worst < 1e-12

    print("\nNorm multiplicativity |a*b| = |a|*|b|:")
    a = Octonion(tuple(rng.uniform(-2.0, 2.0) for _ in range(8)))
    b = Octonion(tuple(rng.uniform(-2.0, 2.0) for _ in range(8)))
    print(f"  |a*b|   = {oct_mul(a, b).norm():.12f}")
    print(f"  |a|*|b| = {a.norm() * b.norm():.12f}")

    print("\nAlternate seeds rebuild the table with relabeled units:")
    alt = build_mul_table((2, 3, 5))
    sgn, k = alt.product(2, 3)
    print(f"  seed (2,3,5): e2*e3 = {'+' if sgn > 0 else '-'}e{k}")

    print("\nNot every index triple is admissible:")
    try:
        build_mul_table((1, 2, 3))
    except InconsistentSeed as exc:
        print(f"  build_mul_table((1, 2, 3)) -> InconsistentSeed: {exc}")

    print("done.")


if __name__ == "__main__":
    main()

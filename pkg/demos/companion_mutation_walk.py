#!/usr/bin/env python3
"""Mutating a companion basis around the mutation class of E6.

Every inward or outward basis mutation keeps the assignment a companion basis
for the mutated matrix, and the d-vector set over the positive roots moves by
a bijection that is independent of the basis used to compute it.
"""

import random

from companion_bases import (
    DynkinType,
    ExchangeMatrix,
    companion_basis_failure,
    d_vector_set,
    initial_companion_basis,
    mutate_inward,
    mutate_outward,
    mutation_map_inward,
    sign_change,
)


def main():
    dt = DynkinType.parse("E6")
    B = ExchangeMatrix.from_arrows(dt.rank, dt.edges())
    psi = initial_companion_basis(B)
    print("start: simple roots on an E6 orientation; arrows", B.arrows())

    rng = random.Random(2024)
    for step in range(12):
        k = rng.randrange(B.n)
        inward = rng.random() < 0.5
        op = mutate_inward if inward else mutate_outward
        psi, B = op(psi, B, k)
        verdict = companion_basis_failure(psi, B) or "valid"
        label = "in " if inward else "out"
        print(f"step {step:2d}: mutate {label} at {k}; basis {verdict}; "
              f"max height {max(sum(abs(c) for c in g) for g in psi.gamma)}")
    print()

    k = 3
    psi_in, B_next = mutate_inward(psi, B, k)
    psi_out, _ = mutate_outward(psi, B, k)
    print(f"inward and outward mutation at {k} usually differ elementwise;")
    agree = sum(1 for a, b in zip(psi_in.gamma, psi_out.gamma) if a == b)
    opposite = sum(
        1
        for a, b in zip(psi_in.gamma, psi_out.gamma)
        if a == tuple(-c for c in b)
    )
    print(f"here they agree at {agree}/{B.n} vertices "
          f"and are opposite at {opposite}/{B.n}.")
    print()

    the_map = mutation_map_inward(psi, B, k)
    flipped = sign_change(psi, {0, 2, 4})
    same = mutation_map_inward(flipped, B, k) == the_map
    print("the induced map on d-vectors ignores the choice of basis:", same)
    moved = sum(1 for d, image in the_map.items() if d != image)
    print(f"it moves {moved} of {len(the_map)} d-vectors; "
          f"set sizes {len(d_vector_set(psi))} -> {len(d_vector_set(psi_in))}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""A walk through exchange-matrix mutation and finite-type recognition.

Starts from a linear A3 quiver, mutates it into an oriented triangle and back,
then shows how the recognizer separates finite-type quivers from the rest.
"""

from companion_bases import (
    ExchangeMatrix,
    canonical_companion,
    cartan_counterpart,
    chordless_cycles,
    dynkin_type_of,
    finite_type_failure,
    is_positive_quasi_cartan,
    mutate,
)


def show(title, B):
    print(f"{title}: arrows {B.arrows()}")


def main():
    path = ExchangeMatrix.from_arrows(3, [(0, 1), (1, 2)])
    show("linear A3", path)

    triangle = mutate(path, 1)
    show("after mutating at the middle vertex", triangle)
    print("chordless cycles:", chordless_cycles(triangle))

    back = mutate(triangle, 1)
    print("mutating again restores the path:", back == path)
    print()

    print("Cartan counterpart of the path (all off-diagonal signs negative):")
    for row in cartan_counterpart(path):
        print("  ", row)

    print("canonical companion of the triangle (odd number of + signs per cycle):")
    A = canonical_companion(triangle)
    for row in A:
        print("  ", row)
    print("positive definite:", is_positive_quasi_cartan(A))
    print("recognized type:", dynkin_type_of(triangle))
    print()

    square = ExchangeMatrix.from_arrows(4, [(0, 1), (1, 2), (3, 2), (0, 3)])
    print("non-oriented 4-cycle:", finite_type_failure(square))
    double = ExchangeMatrix.from_rows([[0, 2], [-2, 0]])
    print("double arrow on two vertices:", finite_type_failure(double))


if __name__ == "__main__":
    main()

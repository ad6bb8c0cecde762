#!/usr/bin/env python3
"""Walk the fiber polytope of C(6,4) -> C(6,2) through its three shapes.

The two-polygon subdivision {2345 | 1256} is coherent exactly when the unique
dependence of the C(6,4) realization satisfies c3 + c4 = 0.  Sweeping one
parameter moves the ratio |c4|/|c3| through 1: the fiber polytope is a 9-gon
on either side and an octagon at the crossing.
"""

from fractions import Fraction

from cyclicfiber import catalog
from cyclicfiber.coherence import fiber_face_poset, find_coherent_on_path, parameter_scan
from cyclicfiber.cyclic import format_params, params


def path(s: Fraction):
    t6 = Fraction(21, 4) + s * Fraction(3, 2)
    return params([1, 2, 3, 4, 5, t6], 2)


def main():
    cells = catalog.step1_subdivision(6)
    samples = [path(Fraction(k, 8)) for k in range(9)]
    print("sweep of t6 with t1..t5 = 1..5 fixed:")
    for rec in parameter_scan(cells, 4, samples):
        rep = fiber_face_poset(6, 2, 4, rec.pv)
        print(
            f"  t = {format_params(rec.pv):<24} |c4|/|c3| = {str(rec.ratio_c4_c3):<8}"
            f" {'coherent ' if rec.coherent else 'incoherent'}  fiber: {rep.polygon_name()}"
        )
    crossing = find_coherent_on_path(cells, 4, path, Fraction(0), Fraction(1))
    print(f"exact crossing located at t = {format_params(crossing)}")


if __name__ == "__main__":
    main()

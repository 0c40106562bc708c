"""Smallest-triangle areas of the known lattice-surface families.

Every known lattice surface with a large smallest virtual triangle belongs
to a handful of families with closed-form area formulas.  The demo sweeps
the two discriminant families, prints the polygon values, and checks the
two identities that tie the families together.
"""

from veechsieve.families import (
    bouw_moller_areas,
    double_ngon_areas,
    h2_areas,
    prym_h4_areas,
    regular_ngon_areas,
)


def main():
    print("genus-2 family by discriminant (area_t, area_vt):")
    for D in (5, 8, 9, 12, 13, 17, 21):
        r = h2_areas(D)
        print(f"  D={D:<3} {r.area_t:.7f}  {r.area_vt:.7f}")
    print()

    print("Prym genus-3 family by discriminant:")
    for D in (8, 12, 16, 17, 20, 24):
        r = prym_h4_areas(D)
        print(f"  D={D:<3} {r.area_t:.7f}  {r.area_vt:.7f}")
    print()

    print("polygons:")
    print(f"  double pentagon  {double_ngon_areas(5).area_vt:.7f}")
    print(f"  regular octagon  {regular_ngon_areas(8).area_vt:.7f}")
    print(f"  Bouw-Moller(3,4) {bouw_moller_areas(3, 4).area_vt:.7f}")
    print()

    print("cross-family identities:")
    print(f"  h2(8)    = octagon: {abs(h2_areas(8).area_vt - regular_ngon_areas(8).area_vt):.2e}")
    print(f"  prym4(8) = BM(3,4): {abs(prym_h4_areas(8).area_vt - bouw_moller_areas(3, 4).area_vt):.2e}")
    print()

    largest = max(
        (h2_areas(D).area_vt, D)
        for D in range(5, 401)
        if D % 4 in (0, 1) and D > 4
    )
    print(f"largest area_vt in the genus-2 family on [5,400]: {largest[0]:.7f} at D={largest[1]}")


if __name__ == "__main__":
    main()

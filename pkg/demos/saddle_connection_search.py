"""Refuting a candidate with an explicit pair of saddle connections.

A candidate that passes the pruning criteria is not yet a lattice surface
with a large virtual triangle: the criteria only look at axis-aligned data.
The direct check develops the flat surface and enumerates saddle connections
out to an escalating radius; a pair of non-parallel holonomies with a small
cross product certifies a small virtual triangle.
"""

from veechsieve.complexes import build_complex
from veechsieve.flat import build_surface, saddle_connections, verify_candidate
from veechsieve.perms import pair_from_cycles
from veechsieve.pf import solve_geometry
from veechsieve.twists import TwistVectorPair


def main():
    # unit square torus with one marked point: connections are the primitive
    # lattice vectors
    torus = solve_geometry(
        build_complex(pair_from_cycles(1, [[0]], [[0]])),
        TwistVectorPair((1,), (1,)),
    )
    conns = saddle_connections(build_surface(torus), 2.0)
    print(f"torus connections within radius 2: {len(conns)}")
    print("  ", sorted({c.holonomy for c in conns})[:6], "...")
    print()

    # the golden L passes the criteria and survives the direct search too
    golden = solve_geometry(
        build_complex(pair_from_cycles(3, [(0, 1), (2,)], [(0, 2), (1,)])),
        TwistVectorPair((1, 1), (1, 1)),
    )
    res = verify_candidate(golden, cutoff=0.1)
    print(f"golden L: {res.status}, smallest cross found {res.value:.7f}")
    print("  (half of it, the virtual triangle bound, is", f"{res.value / 2:.7f})")
    print()

    # heavy twisting on the same complex is refuted with a witness pair
    twisted = solve_geometry(golden.complex, TwistVectorPair((1, 13), (1, 1)))
    res = verify_candidate(twisted, cutoff=0.1)
    print(f"over-twisted L: {res.status} at radius {res.searched_to}")
    a, b = res.witness
    print(f"  witness holonomies {a.holonomy} x {b.holonomy} -> {res.value:.7f}")


if __name__ == "__main__":
    main()

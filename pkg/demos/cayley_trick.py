"""Count the faces of a Minkowski sum twice: directly, and through the Cayley polytope.

    python3 demos/cayley_trick.py
"""

import random
from fractions import Fraction

from minkcayley import CayleyInstance, PointSet, SummandFamily
from minkcayley.minksum import dual_path_check


def random_polytope(rng, d, n):
    pts = set()
    while len(pts) < n:
        pts.add(tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 3)) for _ in range(d)))
    return PointSet(d, sorted(pts))


def main():
    rng = random.Random(11)
    while True:
        try:
            family = SummandFamily(4, [random_polytope(rng, 4, 6), random_polytope(rng, 4, 6)])
            break
        except ValueError:
            continue
    inst = CayleyInstance(family)
    print(f"Cayley polytope: {len(inst.cp.lattice.vertices)} vertices in dimension {inst.cp.lattice.dim}")
    for S in inst.subsets:
        print(f"  mixed faces F_{sorted(S)}: f = {inst.fF(S)}   h = {inst.hF(S)}")
        print(f"  closure     K_{sorted(S)}: h = {inst.hK(S)}  (reverse of h(F))")
    check = dual_path_check(family)
    print("Minkowski sum f-vector:", check["minkowski_f"])
    for row in check["rows"]:
        print(f"  f_{row['k'] - 1}(F_[r]) = {row['cayley']:>4}   f_{row['k'] - 2}(P1+P2) = {row['minkowski']:>4}")
    print("match:", check["match"])


if __name__ == "__main__":
    main()

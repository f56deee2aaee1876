"""Build a family of polytopes whose Minkowski sum attains the upper bound.

    python3 demos/tight_family.py [d r n1,n2,...]
"""

import sys

from minkcayley.bounds import bound_table
from minkcayley.construct import default_params, generate_family, search_tau_zeta
from minkcayley.minksum import sum_f_vector


def main(argv):
    d, r, n = (int(argv[0]), int(argv[1]), [int(v) for v in argv[2].split(",")]) if argv else (4, 2, [6, 6])
    result = search_tau_zeta(default_params(d, r, n))
    if not result.success:
        print("search failed:", result.witness)
        return 1
    print(f"tau = {result.tau}, zeta = {result.zeta} (per-witness minimum {result.zeta_hat})")
    for row in result.report.rows:
        print(f"  S={row['S']}  k={row['k']}  f_(k-1)(F_S) = {row['f']}  bound = {row['spans']}")
    f = sum_f_vector(generate_family(result.params))
    table = bound_table(d, r, n)
    print("Minkowski sum f-vector:", f)
    for j in range(1, d + 1):
        print(f"  f_{j - 1} = {f.f(j - 1):>5}   upper bound {table.minkowski[j]:>5}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

"""Survey monomial rational sextics in P^4.

For each exponent set 0 < a < b < c < 6 the curve t -> (t0^(6-e) t1^e) is
tested for quadratic normality and for coordinate 4-secant lines.
"""

from itertools import combinations

from fano12.ideals import is_quadratically_normal, max_coordinate_secant
from fano12.varieties import ParamCurve


def main():
    print(f"{'exponents':<18}{'normal':<8}{'quadrics':<10}{'max secant':<12}line")
    for mid in combinations(range(1, 6), 3):
        exps = (0, *mid, 6)
        curve = ParamCurve.from_exponents(exps)
        qn = is_quadratically_normal(curve)
        k, line = max_coordinate_secant(curve)
        where = "-" if line is None else "<" + ",".join(line) + ">"
        print(f"{str(exps):<18}{str(qn.normal):<8}{qn.kernel_dim:<10}{k:<12}{where}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""The gamma/beta-weighted identity family at integer parameters.

With integer p, q >= 0 every gamma ratio is a rising factorial and
every beta value is a ratio of factorials, so the whole family stays
inside the rationals and can be verified exactly.  The (p, q) = (0, 0)
and (1, 1) slices of the weighted identity are the plain diagonal
convolution identities; the even-index family (id "ds") is its
p = q, x = 0 slice.
"""

from bepoly import beta_int, build_residual, gamma_ratio, h_pq, harmonic, verify_sweep


def main():
    print("Integer-argument beta and gamma-ratio values:")
    print(f"  beta(2, 3)        = {beta_int(2, 3)}")
    print(f"  beta(5, 5)        = {beta_int(5, 5)}")
    print(f"  rising(3, 4)      = {gamma_ratio(3, 4)}  (= 3*4*5*6)")

    print("\nPartial beta sums H_n(p, q) = sum_(k=1..n-1) beta(k+q, p+1):")
    for n, p, q in [(4, 0, 0), (4, 1, 1), (6, 2, 3)]:
        print(f"  H_{n}({p}, {q}) = {h_pq(n, p, q)}")
    print(f"  H_5(0, 0) equals the harmonic number H_4: "
          f"{h_pq(5, 0, 0)} == {harmonic(4)}")

    print("\nWeighted identity 3.1 over n = 2..12, p, q in 0..3:")
    reports = verify_sweep(["3.1"], range(2, 13))
    checked = [r for r in reports if not r.skipped]
    print(f"  {len(checked)} instances, all hold: {all(r.holds for r in checked)}")

    print("\nIts slices reproduce the diagonal identities exactly:")
    for n in (2, 5, 9):
        same_06 = build_residual("3.1", n, p=0, q=0) == build_residual("1.6", n)
        same_07 = build_residual("3.1", n, p=1, q=1) == build_residual("1.7", n)
        print(f"  n={n}: (0,0) slice == 1.6 residual: {same_06}; "
              f"(1,1) slice == 1.7 residual: {same_07}")

    print("\nEven-index family (p = q, x = 0 slice, doubled index), n = 2..10:")
    reports = verify_sweep(["ds"], range(2, 11))
    for report in reports:
        mark = "ok" if report.holds else "FAIL"
        print(f"  {mark}  ds  {report.params_str()}")

    print("\nBeta-weighted hockey stick (id 3.2) at n = 8, q = 2:")
    reports = verify_sweep(["3.2"], [8], p_range=[0, 1, 2], q_range=[2])
    checked = [r for r in reports if not r.skipped]
    print(f"  {len(checked)} instances (l = 1..8, p = 0..2), "
          f"all hold: {all(r.holds for r in checked)}")


if __name__ == "__main__":
    main()

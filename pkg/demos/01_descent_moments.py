"""Exact descent moments of matchings, closed form vs brute force.

A matching of S_{2n} pairs up the letters 1..2n; written in one-line
notation it has descents like any permutation.  The mean and variance of
the descent number d = |Des| + 1 and of the major index have exact
rational closed forms, which this script checks against exhaustive
enumeration for every n small enough to enumerate.
"""

from matchstat import (
    brute_force_moments,
    closed_form_moments,
    compare_reports,
    double_factorial,
    enumerate_matchings,
)

# ---------------------------------------------------------------------
# How many matchings are there?  (2n-1)!! grows fast.
# ---------------------------------------------------------------------
for n in range(1, 7):
    print(f"n={n}: S_{2*n} contains {double_factorial(2*n - 1):>6} matchings")
print()

# ---------------------------------------------------------------------
# The three matchings of S_4, their descent sets, d, and maj.
# ---------------------------------------------------------------------
from matchstat import descent_stats  # noqa: E402

for m in enumerate_matchings(2):
    st = descent_stats(m)
    print(
        f"{str(m):11s} one-line {m.partner}  Des={st.des_set}  "
        f"d={st.descent_number}  maj={st.major_index}"
    )
print()

# ---------------------------------------------------------------------
# Closed forms against the enumeration oracle.  Everything is a
# fractions.Fraction, so "equal" means equal, not "close".
# ---------------------------------------------------------------------
for n in (4, 5, 6):
    closed = closed_form_moments(n)
    brute = brute_force_moments(n)
    verdicts = compare_reports(closed, brute)
    status = "all match" if all(verdicts.values()) else "MISMATCH"
    print(f"n={n}: E d = {closed.mean_d}, Var d = {closed.var_d}, "
          f"E maj = {closed.mean_maj}, Var maj = {closed.var_maj}  [{status}]")

# The per-position descent probability n/(2n-1) tends to 1/2 from above;
# adjacent positions are negatively associated.
print()
for n in (4, 16, 64):
    rep = closed_form_moments(n)
    print(f"n={n:3d}: P(descent) = {rep.p_descent} ~ {float(rep.p_descent):.4f},  "
          f"adjacent joint = {float(rep.p_joint_adjacent):.4f} "
          f"(independent would be {float(rep.p_descent)**2:.4f})")

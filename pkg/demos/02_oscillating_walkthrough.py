"""Walking a matching through the oscillating-tableau bijection.

Reading the letters 1..2n in order, the smaller letter of each block
row-inserts its partner into a working tableau and the larger letter
deletes itself with a hole slide.  The sequence of shapes is a closed
walk on Young's lattice, and it determines the matching uniquely.
Conjugating every shape gives another walk, hence another matching: an
involution that reflects d about n+1 and maj about n^2.
"""

from matchstat import (
    conjugate_matching,
    descent_stats,
    matching_to_oscillating,
    oscillating_to_matching,
    parse_matching,
    sample_uniform,
)


def show(matching):
    osc, trace = matching_to_oscillating(matching)
    st = descent_stats(matching)
    print(f"matching {matching}   Des={st.des_set}  d={st.descent_number}  "
          f"maj={st.major_index}")
    print(f"shape walk: {osc}")
    for i, tab in enumerate(trace.tableaux):
        rendered = str(tab).replace("\n", " / ") or "-"
        print(f"  P_{i}: {rendered}")
    assert oscillating_to_matching(osc) == matching
    print("  (inverse walk recovers the matching)")
    print()


# ---------------------------------------------------------------------
# A hand-sized example, then its conjugate.
# ---------------------------------------------------------------------
sigma = parse_matching("1-4,2-3,5-6")
show(sigma)

tau = conjugate_matching(sigma)
show(tau)

n = sigma.n
d1, d2 = descent_stats(sigma).descent_number, descent_stats(tau).descent_number
m1, m2 = descent_stats(sigma).major_index, descent_stats(tau).major_index
print(f"d + d' = {d1} + {d2} = {d1 + d2} = 2(n+1) with n={n}")
print(f"maj + maj' = {m1} + {m2} = {m1 + m2} = 2n^2")
print()

# ---------------------------------------------------------------------
# The identities hold for every matching; spot-check a random big one.
# ---------------------------------------------------------------------
n = 30
m = sample_uniform(n, seed=2024)
c = conjugate_matching(m)
st, st_c = descent_stats(m), descent_stats(c)
print(f"random matching of S_{2*n}:")
print(f"  d + d'     = {st.descent_number} + {st_c.descent_number} "
      f"= {st.descent_number + st_c.descent_number}  (2(n+1) = {2*(n+1)})")
print(f"  maj + maj' = {st.major_index} + {st_c.major_index} "
      f"= {st.major_index + st_c.major_index}  (2n^2 = {2*n*n})")
print(f"  conjugating twice returns the original: {conjugate_matching(c) == m}")

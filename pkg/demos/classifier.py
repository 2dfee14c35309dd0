"""
Classifying maximal families on surfaces with a line
====================================================

classify(s, a, b) checks the hypotheses, then reports the case, the
component status and, when relevant, the critical family of C = a f1 + b f2.
"""

from collections import Counter

from spacecurves import classify

for s, a, b in [(4, 12, 8), (4, 7, 5), (5, 8, 6), (6, 10, 8), (4, 6, 4), (5, 6, 5), (4, 1, 1)]:
    r = classify(s, a, b)
    fam = "" if r.critical_family is None else f" {r.critical_family.value}(n={r.critical_n})"
    print(f"({s},{a},{b})  d={r.d} g={r.g} dimW={r.dim_w}  {r.case_label}: {r.status.value}{fam}")

# how the grid a, b <= 60 splits up for each s
for s in range(4, 9):
    counts = Counter(classify(s, a, b).case.value for a in range(61) for b in range(61))
    print(s, dict(sorted(counts.items())))

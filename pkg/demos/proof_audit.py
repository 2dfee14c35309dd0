"""
Replaying the non-existence arguments
=====================================

Each transcript recomputes the integers of one argument and compares them
with the printed values.  One row in the d = 57 cubic case disagrees with
its printed value; the conclusion holds with either number.
"""

from spacecurves import AuditCase, audit_case

for case in AuditCase:
    tr = audit_case(case)
    print(f"{case.value:14s} ok={tr.ok}  {tr.conclusion}")
    for row in tr.flagged:
        print("   flagged:", row.claim, row.computed, "vs printed", row.printed)

# the full transcript for the quartic (12, 8) case
for row in audit_case("Q12_8").rows:
    print(f"  {row.claim:40s} {row.computed}")

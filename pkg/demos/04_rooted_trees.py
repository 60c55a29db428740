"""Rooted-tree census and the two exact characterizations.

Over every rooted tree up to isomorphism: the total and total Italian
domination numbers agree only on the 2-vertex tree, and the total
Italian number reaches three times the domination number only on
out-stars.

Run:  python3 demos/04_rooted_trees.py
"""

from didom import (
    Parameter,
    enumerate_rooted_trees,
    solve,
    verify_trees_total_equality,
    verify_trees_triple_bound,
)

print("rooted trees up to isomorphism:")
for n in range(1, 9):
    print(f"  order {n}: {len(enumerate_rooted_trees(n))}")

print("\nper-tree values at order 4:")
for code in enumerate_rooted_trees(4):
    d = code.digraph()
    g = solve(d, Parameter.DOMINATION).value
    t = solve(d, Parameter.TOTAL_DOMINATION).value
    ti = solve(d, Parameter.TOTAL_ITALIAN_DOMINATION).value
    print(f"  parents {list(code.parents)!s:<18} gamma={g} gamma_t={t} gamma_ti={ti}")

for report in (verify_trees_total_equality(7), verify_trees_triple_bound(7)):
    print()
    for record in report.records:
        mark = "ok" if record.passed else "FAIL"
        print(f"  [{mark}] {record.check} order={record.input['order']} {record.value}")

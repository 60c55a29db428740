"""Grid values from the transfer-matrix solver, next to the closed forms.

The two-row closed form matches the exact optimum everywhere.  The
three-row closed form does not: from n=8 on it overstates the optimum
for most n (first gap: 3x8, where an explicit weight-18 labeling beats
the formula's 19).  The sweep below prints both columns so the
divergence is visible; `witness` rows show optimal labelings found by
the solver.

Run:  python3 demos/03_grid_transfer_matrix.py
"""

from didom import (
    closed_form_witness,
    three_row_closed_form,
    total_italian_grid,
    two_row_closed_form,
)


def show_matrix(labels, k, n, title):
    print(title)
    for s in range(k):
        print("   ", " ".join(str(labels[s * n + t]) for t in range(n)))


print("two rows: exact vs closed form")
print("  n: " + " ".join(f"{n:3d}" for n in range(2, 15)))
print("  dp:" + " ".join(f"{total_italian_grid(2, n).value:3d}" for n in range(2, 15)))
print("  cf:" + " ".join(f"{two_row_closed_form(n):3d}" for n in range(2, 15)))

print("\nthree rows: exact vs closed form (watch n=8,9,12,...)")
print("  n: " + " ".join(f"{n:3d}" for n in range(2, 15)))
print("  dp:" + " ".join(f"{total_italian_grid(3, n).value:3d}" for n in range(2, 15)))
print("  cf:" + " ".join(f"{three_row_closed_form(n):3d}" for n in range(2, 15)))

print()
show_matrix(closed_form_witness(3, 8), 3, 8, "closed-form construction for 3x8 (weight 19):")
gv = total_italian_grid(3, 8, want_witness=True)
show_matrix(gv.witness, 3, 8, f"optimal labeling found by the solver (weight {gv.value}):")

print("\nfour rows (no closed form known): exact values")
table = {n: total_italian_grid(4, n).value for n in range(2, 17)}
print("  n: " + " ".join(f"{n:3d}" for n in table))
print("  dp:" + " ".join(f"{v:3d}" for v in table.values()))

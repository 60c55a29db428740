"""Tour of the digraph families and neighborhood queries.

Run:  python3 demos/01_digraph_families.py
"""

from didom import (
    cartesian_product,
    dipath,
    format_digraph,
    is_packing,
    is_rooted_tree,
    out_star,
    product_coords,
    rooted_tree,
)

p5 = dipath(5)
print("dipath on 5 vertices:", sorted(p5.arcs))
print("  in-neighborhood of 2 :", sorted(p5.neighborhood(2, "in")))
print("  closed neighborhood of 2:", sorted(p5.neighborhood(2, "closed")))
print("  rooted tree?", is_rooted_tree(p5))

s4 = out_star(4)
print("\nout-star on 4 vertices:", sorted(s4.arcs))
print("  root out-degree:", s4.out_degree(0))

t = rooted_tree([None, 0, 0, 1, 1])
print("\nrooted tree from parent vector [None,0,0,1,1]:")
print(format_digraph(t), end="")

grid = cartesian_product(dipath(2), dipath(3))
print("\n2x3 grid (product of two dipaths): order", grid.order, "size", grid.size)
for v in range(grid.order):
    print(f"  vertex {v} = cell {product_coords(v, 3)},  out -> {sorted(grid.out_neighbors(v))}")

print("\npackings of the 5-dipath:")
for members in ({0, 2}, {0, 2, 4}, {0, 1}):
    print(
        f"  {sorted(members)}: packing={is_packing(p5, members)},"
        f" strong={is_packing(p5, members, strong=True)}"
    )

"""All eight domination parameters on a few small digraphs.

Run:  python3 demos/02_domination_parameters.py
"""

from didom import Parameter, cartesian_product, dipath, enumerate_optima, out_star, solve

EXAMPLES = {
    "dipath P4": dipath(4),
    "out-star S5": out_star(5),
    "2x3 grid": cartesian_product(dipath(2), dipath(3)),
}

for name, d in EXAMPLES.items():
    print(f"{name} (order {d.order}, size {d.size})")
    for parameter in Parameter:
        result = solve(d, parameter)
        witness = sorted(result.witness) if isinstance(result.witness, frozenset) else list(result.witness)
        print(f"  {parameter.value:<8} = {result.value:2d}   witness {witness}")
    print()

print("every minimum total Italian labeling of the out-star S3:")
for labels in enumerate_optima(out_star(3), Parameter.TOTAL_ITALIAN_DOMINATION):
    print(" ", list(labels))

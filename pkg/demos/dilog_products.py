"""Wall-crossing products of quantum dilogarithms, truncated exactly.

For a discrete stability function, take the dilogarithm of each stable
object that does not have dimension vector delta and multiply in
decreasing phase order.  The result does not depend on the stability
function, and it is fixed by the cyclic symmetry of the quiver.
"""

from hallq import (
    apply_translate,
    dilog,
    dilog_coefficient,
    ez,
    ez_delta,
    random_discrete,
    torus_diff,
)


def main():
    print("== dilogarithm coefficients ==")
    for m in range(4):
        print(f"  c_{m} = {dilog_coefficient(m)}")

    print()
    print("== the series E(y^e1) for n = 3 truncated at degree 6 ==")
    e = dilog(3, 6, (1, 0, 0))
    for k in range(4):
        print(f"  coefficient of y^({k},0,0): {e.coefficient((k, 0, 0))}")

    print()
    print("== the product is one element, whatever the charges ==")
    products = [ez(random_discrete(3, seed), truncation=6) for seed in range(4)]
    same = all(torus_diff(products[0], p) == [] for p in products[1:])
    print(f"4 random stability functions, same product: {same}")

    print()
    print("== cyclic symmetry ==")
    rotated = apply_translate(products[0])
    print(f"rotating vertex labels fixes it: {torus_diff(products[0], rotated) == []}")

    print()
    print("== the delta-phase block ==")
    block = ez_delta(random_discrete(3, 11), truncation=6)
    print(f"coefficient at delta:   {block.coefficient((1, 1, 1))}")
    print(f"coefficient at 2*delta: {block.coefficient((2, 2, 2))}")
    other = ez_delta(random_discrete(3, 12), truncation=6)
    print(f"independent of the function: {torus_diff(block, other) == []}")


if __name__ == "__main__":
    main()

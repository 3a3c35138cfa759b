"""Stable objects of a stability function, and how the package finds them.

The worked function here has charges 2+i, -2+i, 1+2i on the three
simples.  Exactly five objects are stable.  The dimension-delta one can
be found two ways: by scanning all short uniserials, or by walking
vertex runs downward from each high-phase simple.  Both must agree.
"""

from fractions import Fraction

from hallq import (
    CyclicQuiver,
    GaussianRational,
    ModuleIso,
    StabilityFunction,
    charge_of_indec,
    check_discrete,
    delta_stable_via_ci,
    hn_filtration,
    perturb_to_ambient_discrete,
    random_restricted_discrete,
    stable_objects,
)


def g(re, im):
    return GaussianRational(Fraction(re), Fraction(im))


def main():
    q = CyclicQuiver(3)
    z = StabilityFunction(3, (g(2, 1), g(-2, 1), g(1, 2)))

    ok, _ = check_discrete(z)
    print(f"discrete: {ok}")
    report = stable_objects(z)
    print("stables, decreasing phase:")
    for r in report.stables:
        print(f"  {r}   Z = {charge_of_indec(z, r)}")
    print(f"the one with dimension delta: {report.delta_stable}")
    print(f"via vertex runs:             {delta_stable_via_ci(z)}")

    print()
    print("== a filtration with semistable steps ==")
    m = ModuleIso.of(q.R(2, 2))
    for stratum, mu in hn_filtration(z, m):
        print(f"  stratum {stratum} at Z = {mu}")

    print()
    print("== repairing a phase collision ==")
    # Z(delta) = 6+3i is parallel to Z(S_1), so two stables share a phase
    bad = StabilityFunction(3, (g(2, 1), g(-2, 1), g(6, 1)))
    ok, witness = check_discrete(bad)
    print(f"discrete: {ok}, witness: {witness[0]} vs {witness[1]}")
    fixed = perturb_to_ambient_discrete(bad, subcat_max_length=2)
    ok, _ = check_discrete(fixed)
    print(f"after a small rational nudge: discrete = {ok}")
    print("perturbed charges:", ", ".join(str(c) for c in fixed.charges))

    print()
    # functions that are only discrete on short objects also occur; the
    # same repair turns them into honest census inputs
    z0 = random_restricted_discrete(3, seed=4, max_length=2)
    z1 = perturb_to_ambient_discrete(z0, subcat_max_length=2)
    print(f"random length-2-discrete function made fully discrete: "
          f"{check_discrete(z1)[0]}")


if __name__ == "__main__":
    main()

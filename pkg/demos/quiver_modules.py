"""The category of nilpotent cyclic-quiver representations, by hand.

Indecomposables are uniserial: pick a socle vertex and a length.  The
script prints subobject chains, the Euler and commutator forms, and
automorphism-group sizes as polynomials in the field size q.
"""

from hallq import CyclicQuiver, ModuleIso


def main():
    q = CyclicQuiver(3)

    print("== uniserials and their chains ==")
    r = q.R(3, 3)
    print(f"module {r}, dimension vector {q.dim_of_indec(r)}")
    print(f"socle {r.socle}, top vertex {q.top(r)}")
    for sub in q.subobjects(r):
        if sub.length < r.length:
            quo = q.chain_quotient(r, sub.length)
            print(f"  0 -> {sub} -> {r} -> {quo} -> 0")

    print()
    print("== bilinear forms on dimension vectors ==")
    e1, e2 = q.e(1), q.e(2)
    print(f"euler(e1, e1) = {q.euler_form(e1, e1)}")
    print(f"euler(e1, e2) = {q.euler_form(e1, e2)}")
    print(f"lambda(e1, e2) = {q.lambda_form(e1, e2)}")
    print(f"lambda(delta, e2) = {q.lambda_form(q.delta, e2)}  (delta is central)")

    print()
    print("== automorphism counts over F_q ==")
    for m in [
        ModuleIso.of(q.simple(1)),
        ModuleIso.of(q.simple(1), q.simple(1)),
        ModuleIso.of(q.R(1, 2)),
        ModuleIso.of(q.R(1, 2), q.simple(1)),
    ]:
        poly = q.aut_poly(m)
        print(f"|Aut({m})| = {poly}   at q=2: {q.aut_value(m, 2)}")

    print()
    print("== translation ==")
    m = ModuleIso.of(q.R(2, 1), q.R(1, 3))
    print(f"tau({m}) = {q.translate_module(m)}")
    d = (1, 1, 0)
    once = q.translate_dim(d)
    thrice = q.translate_dim(q.translate_dim(once))
    print(f"on dimension vectors: tau{d} = {once}, tau^3{d} = {thrice}")

    print()
    total = sum(1 for _ in q.enumerate_iso_classes(4))
    print(f"iso classes with total dimension <= 4: {total}")


if __name__ == "__main__":
    main()

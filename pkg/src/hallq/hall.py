"""Finite-field brute-force oracles.

Matrix realizations of modules, a Hom/Ext dimension solver, exhaustive
automorphism counting, submodule enumeration behind the counts
F_{L,M}^N (submodules of N isomorphic to L with quotient isomorphic to
M), Lagrange interpolation of the counting polynomials in q, and the
check that integration intertwines the counting product with the
twisted torus product.

Matrices are tuples of row tuples over F_p; a realization stores, for
each vertex v, the action map V_v -> V_{v-1 mod n}, so the span of the
bottom k basis vectors of a uniserial chain is exactly its length-k
subobject.  Iso types of subs and quotients are recovered from the
numbers dim Hom(R(i,l), X), which determine multiplicities through a
finite difference in (socle, length).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import LaurentPoly, RationalFunction, rf_eq
from .quiver import CyclicQuiver, DimVector, ModuleIso
from .torus import convolve, integrate

Matrix = Tuple[Tuple[int, ...], ...]


class BudgetError(ValueError):
    """An oracle call exceeded its enumeration budget."""


class InterpolationError(ValueError):
    """Interpolated polynomial failed the integrality or holdout check."""


@dataclass(frozen=True)
class Budget:
    """Caps on brute-force enumeration sizes."""

    hall_total: int = 4
    hall_prime: int = 5
    aut_total: int = 4
    aut_prime: int = 3
    aut_space: int = 1 << 20

    def widened(self, total: int, prime: int) -> "Budget":
        return Budget(max(self.hall_total, total), max(self.hall_prime, prime),
                      max(self.aut_total, total), max(self.aut_prime, prime),
                      self.aut_space)


DEFAULT_BUDGET = Budget()
# Interpolation campaigns need counts at primes up to 13; the totals cap
# stays in place.
CATALOG_BUDGET = Budget(hall_prime=13)

ENV_BUDGET = "HALLQ_BUDGET_OVERRIDE"


def budget_from_env(base: Budget = DEFAULT_BUDGET) -> Budget:
    """Apply the override variable, formatted as 'total,prime'."""
    raw = os.environ.get(ENV_BUDGET)
    if not raw:
        return base
    try:
        parts = [int(x) for x in raw.replace(" ", "").split(",")]
        if len(parts) == 1:
            return base.widened(base.hall_total, parts[0])
        if len(parts) == 2:
            return base.widened(parts[0], parts[1])
    except ValueError:
        pass
    raise ValueError(f"cannot parse {ENV_BUDGET}={raw!r}; expected 'total,prime'")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def next_prime(p: int) -> int:
    k = p + 1
    while not _is_prime(k):
        k += 1
    return k


# ----------------------------------------------------------------------
# Matrices over F_p (p prime) or over the integers (p = 0)
# ----------------------------------------------------------------------

def _mat_mul(a: Matrix, b: Matrix, b_cols: int, p: int) -> Matrix:
    """Product a·b; b_cols passed explicitly so empty shapes stay exact."""
    out = []
    for row in a:
        acc = [0] * b_cols
        for s, x in enumerate(row):
            if x:
                brow = b[s]
                for c in range(b_cols):
                    acc[c] += x * brow[c]
        out.append(tuple(v % p for v in acc) if p else tuple(acc))
    return tuple(out)


def _rref_mod(rows: Sequence[Sequence[int]], cols: int, p: int
              ) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form over F_p, with pivot columns."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c] % p
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(x % p for x in m[i]) for i in range(r)), tuple(pivots)


def _rank_mod(rows: Sequence[Sequence[int]], cols: int, p: int) -> int:
    return len(_rref_mod(rows, cols, p)[1])


def _nullspace_mod(rows: Sequence[Sequence[int]], cols: int, p: int) -> List[Tuple[int, ...]]:
    rref, pivots = _rref_mod(rows, cols, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rref[i][f]) % p
        basis.append(tuple(v))
    return basis


def _int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) rank of an integer matrix."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            m[i] = [(piv * x - f * y) // prev for x, y in zip(m[i], m[rank])]
        prev = piv
        rank += 1
        if rank == len(m):
            break
    return rank


# ----------------------------------------------------------------------
# Realizations
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteFieldRep:
    """A representation by matrices: maps[v] acts V_v -> V_{v-1 mod n}.

    p = 0 keeps integer entries for the characteristic-zero rank oracle.
    """

    n: int
    p: int
    dims: DimVector
    maps: Tuple[Matrix, ...]

    def target(self, v: int) -> int:
        return (v - 1) % self.n

    def check_nilpotent(self) -> bool:
        """Composite of total-dim consecutive arrow maps is zero."""
        total = sum(self.dims)
        for start in range(self.n):
            comp = _identity(self.dims[start])
            v = start
            for _ in range(total):
                comp = _mat_mul(self.maps[v], comp, self.dims[start], self.p)
                v = self.target(v)
            if any(any(row) for row in comp):
                return False
        return True


def _identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def realize(q: CyclicQuiver, m: ModuleIso, p: int) -> FiniteFieldRep:
    """Block-diagonal matrix model: one basis vector per composition
    factor, arrow maps shifting each chain one step toward its socle."""
    if p and not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = q.n
    counter = [0] * n
    entries: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for part in m:
        i0 = part.socle - 1
        slots = []
        for k in range(part.length):
            v = (i0 + k) % n
            slots.append((v, counter[v]))
            counter[v] += 1
        for k in range(1, part.length):
            sv, sidx = slots[k]
            _, tidx = slots[k - 1]
            entries[sv].append((tidx, sidx))
    dims = tuple(counter)
    maps = []
    for v in range(n):
        rows = dims[(v - 1) % n]
        mat = [[0] * dims[v] for _ in range(rows)]
        for tidx, sidx in entries[v]:
            mat[tidx][sidx] = 1
        maps.append(tuple(tuple(r) for r in mat))
    return FiniteFieldRep(n, p, dims, tuple(maps))


def _hom_profile(rep: FiniteFieldRep, max_len: int) -> Dict[Tuple[int, int], int]:
    """H[(j, m)] = dim Hom(R(j, m), X) for socle j, length m <= max_len.

    A map out of R(j,m) picks the image of the top generator, subject to
    the m-fold arrow composite from the top vertex vanishing on it.
    """
    n, p = rep.n, rep.p
    H: Dict[Tuple[int, int], int] = {}
    for j0 in range(n):
        comp = rep.maps[j0]
        for m in range(1, max_len + 1):
            top = (j0 + m - 1) % n
            H[(j0 + 1, m)] = rep.dims[top] - _rank_mod(comp, rep.dims[top], p)
            nxt = (j0 + m) % n
            comp = _mat_mul(comp, rep.maps[nxt], rep.dims[nxt], p)
    return H


def iso_class_of(rep: FiniteFieldRep) -> ModuleIso:
    """Recover the iso type from Hom dimensions out of the uniserials.

    mult(j, m) = H(j,m) - H(j+1,m-1) - H(j,m+1) + H(j+1,m), a second
    difference that isolates the summand R(j, m).
    """
    total = sum(rep.dims)
    if total == 0:
        return ModuleIso.zero()
    q = CyclicQuiver(rep.n)
    if all(not any(any(row) for row in mat) for mat in rep.maps):
        parts = [q.simple(v + 1) for v in range(rep.n) for _ in range(rep.dims[v])]
        return ModuleIso.of(*parts)
    H = _hom_profile(rep, total + 1)

    def h(j: int, m: int) -> int:
        if m <= 0:
            return 0
        return H[(q.vertex(j), m)]

    parts = []
    check = [0] * rep.n
    for j in range(1, rep.n + 1):
        for m in range(1, total + 1):
            mult = h(j, m) - h(j + 1, m - 1) - h(j, m + 1) + h(j + 1, m)
            if mult < 0:
                raise RuntimeError("negative multiplicity; classification broke")
            for _ in range(mult):
                parts.append(q.R(j, m))
                for k in range(m):
                    check[(j - 1 + k) % rep.n] += 1
    if tuple(check) != rep.dims:
        raise RuntimeError("classification does not fill the dimension vector")
    return ModuleIso.of(*parts)


# ----------------------------------------------------------------------
# Hom/Ext oracle
# ----------------------------------------------------------------------

def _intertwiner_system(ra: FiniteFieldRep, rb: FiniteFieldRep) -> Tuple[List[List[int]], int]:
    """Linear system for graded maps f = (f_v: A_v -> B_v) commuting with
    the arrow actions: f_{v-1} a_v - b_v f_v = 0 for every v.

    Unknowns are the entries of all f_v, row-major, vertex-major.
    Returns (rows, number of unknowns).
    """
    n = ra.n
    da, db = ra.dims, rb.dims
    offsets = [0] * n
    off = 0
    for v in range(n):
        offsets[v] = off
        off += db[v] * da[v]
    ncols = off
    rows: List[List[int]] = []
    for v in range(n):
        w = (v - 1) % n
        av, bv = ra.maps[v], rb.maps[v]
        for r in range(db[w]):
            for c in range(da[v]):
                row = [0] * ncols
                for s in range(da[w]):
                    row[offsets[w] + r * da[w] + s] += av[s][c]
                for s in range(db[v]):
                    row[offsets[v] + s * da[v] + c] -= bv[r][s]
                if any(row):
                    rows.append(row)
    return rows, ncols


def hom_ext_oracle(q: CyclicQuiver, a: ModuleIso, b: ModuleIso,
                   p: Optional[int] = None) -> Tuple[int, int]:
    """(dim Hom(A,B), dim Ext^1(A,B)) by solving the intertwiner system.

    p = None ranks the integer system exactly; a prime ranks it mod p.
    Ext is the corank: cols - rows of the system equals the Euler form,
    so hom - ext = chi holds by construction and is cross-checked in
    tests, not assumed here.
    """
    ra = realize(q, a, p or 0)
    rb = realize(q, b, p or 0)
    rows, ncols = _intertwiner_system(ra, rb)
    nrows = sum(rb.dims[(v - 1) % q.n] * ra.dims[v] for v in range(q.n))
    rank = _rank_mod(rows, ncols, p) if p else _int_rank(rows)
    return ncols - rank, nrows - rank


# ----------------------------------------------------------------------
# Automorphism counting
# ----------------------------------------------------------------------

def count_automorphisms(q: CyclicQuiver, m: ModuleIso, p: int,
                        budget: Budget = DEFAULT_BUDGET) -> int:
    """Exhaustive count of invertible self-intertwiners over F_p."""
    total = sum(p_.length for p_ in m)
    if total > budget.aut_total or p > budget.aut_prime:
        raise BudgetError(
            f"count_automorphisms budget is total<={budget.aut_total}, "
            f"p<={budget.aut_prime}; use aut_poly for larger inputs")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    rep = realize(q, m, p)
    rows, ncols = _intertwiner_system(rep, rep)
    basis = _nullspace_mod(rows, ncols, p)
    if p ** len(basis) > budget.aut_space:
        raise BudgetError(
            f"endomorphism space F_{p}^{len(basis)} too large to sweep; "
            "use aut_poly instead")
    dims = rep.dims
    shapes = []
    off = 0
    for v in range(rep.n):
        shapes.append((off, dims[v]))
        off += dims[v] * dims[v]
    count = 0
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        vec = [0] * ncols
        for c, bvec in zip(coeffs, basis):
            if c:
                for i, x in enumerate(bvec):
                    if x:
                        vec[i] = (vec[i] + c * x) % p
        ok = True
        for off, d in shapes:
            if d == 0:
                continue
            mat = [vec[off + r * d: off + (r + 1) * d] for r in range(d)]
            if _rank_mod(mat, d, p) != d:
                ok = False
                break
        if ok:
            count += 1
    return count


# ----------------------------------------------------------------------
# Subspace and submodule enumeration
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _subspaces(dim: int, k: int, p: int) -> Tuple[Tuple[Matrix, Tuple[int, ...]], ...]:
    """All k-dim subspaces of F_p^dim as (reduced echelon basis, pivots)."""
    if k == 0:
        return (((), ()),)
    out = []
    for pivots in itertools.combinations(range(dim), k):
        free = [(i, c) for i in range(k) for c in range(pivots[i] + 1, dim)
                if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            mat = [[0] * dim for _ in range(k)]
            for i in range(k):
                mat[i][pivots[i]] = 1
            for (i, c), x in zip(free, values):
                mat[i][c] = x
            out.append((tuple(tuple(r) for r in mat), pivots))
    return tuple(out)


def _reduce_mod_subspace(vec: Sequence[int], basis: Matrix,
                         pivots: Tuple[int, ...], p: int
                         ) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Write vec = sum coeffs_i basis_i + residue with residue zero on
    the pivot columns.  Membership in the span means residue == 0."""
    res = list(vec)
    coeffs = []
    for row, c in zip(basis, pivots):
        f = res[c] % p
        coeffs.append(f)
        if f:
            for j, x in enumerate(row):
                if x:
                    res[j] = (res[j] - f * x) % p
    return tuple(coeffs), tuple(v % p for v in res)


def _sub_quotient_reps(rep: FiniteFieldRep,
                       spaces: Sequence[Tuple[Matrix, Tuple[int, ...]]]
                       ) -> Optional[Tuple[FiniteFieldRep, FiniteFieldRep]]:
    """Restrict and project the arrow maps onto the chosen subspaces;
    None when some subspace is not arrow-invariant."""
    n, p = rep.n, rep.p
    sub_maps: List[Matrix] = []
    quo_maps: List[Matrix] = []
    nonpivots = []
    for v in range(n):
        _, piv = spaces[v]
        nonpivots.append([c for c in range(rep.dims[v]) if c not in piv])
    for v in range(n):
        w = (v - 1) % n
        basis_v, piv_v = spaces[v]
        basis_w, piv_w = spaces[w]
        amap = rep.maps[v]
        sub_rows = [[0] * len(basis_v) for _ in range(len(basis_w))]
        for j, bvec in enumerate(basis_v):
            img = [sum(amap[r][c] * bvec[c] for c in range(rep.dims[v])) % p
                   for r in range(rep.dims[w])]
            coeffs, res = _reduce_mod_subspace(img, basis_w, piv_w, p)
            if any(res):
                return None
            for i, x in enumerate(coeffs):
                sub_rows[i][j] = x
        quo_rows = [[0] * len(nonpivots[v]) for _ in range(len(nonpivots[w]))]
        for j, c0 in enumerate(nonpivots[v]):
            img = [amap[r][c0] % p for r in range(rep.dims[w])]
            _, res = _reduce_mod_subspace(img, basis_w, piv_w, p)
            for i, c1 in enumerate(nonpivots[w]):
                quo_rows[i][j] = res[c1]
        sub_maps.append(tuple(tuple(r) for r in sub_rows))
        quo_maps.append(tuple(tuple(r) for r in quo_rows))
    sub_dims = tuple(len(spaces[v][0]) for v in range(n))
    quo_dims = tuple(len(nonpivots[v]) for v in range(n))
    return (FiniteFieldRep(n, p, sub_dims, tuple(sub_maps)),
            FiniteFieldRep(n, p, quo_dims, tuple(quo_maps)))


@lru_cache(maxsize=None)
def submodule_census(n: int, big: ModuleIso, p: int
                     ) -> Tuple[Tuple[ModuleIso, ModuleIso, int], ...]:
    """Classify every submodule of the realization of `big` over F_p.

    Returns (sub type, quotient type, count) triples covering all
    subspace dimension vectors at once, so one sweep answers every
    F_{L,M}^big query at this prime.
    """
    q = CyclicQuiver(n)
    rep = realize(q, big, p)
    tally: Dict[Tuple[ModuleIso, ModuleIso], int] = {}
    ranges = [range(d + 1) for d in rep.dims]
    for sub_dims in itertools.product(*ranges):
        pools = [_subspaces(rep.dims[v], sub_dims[v], p) for v in range(n)]
        for spaces in itertools.product(*pools):
            pair = _sub_quotient_reps(rep, spaces)
            if pair is None:
                continue
            key = (iso_class_of(pair[0]), iso_class_of(pair[1]))
            tally[key] = tally.get(key, 0) + 1
    return tuple((l, m, c) for (l, m), c in sorted(
        tally.items(), key=lambda kv: (kv[0][0].to_json(), kv[0][1].to_json())))


def hall_count(q: CyclicQuiver, sub: ModuleIso, quo: ModuleIso, big: ModuleIso,
               p: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of submodules of `big` over F_p isomorphic to `sub` with
    quotient isomorphic to `quo`."""
    d_sub, d_quo, d_big = q.dim_of(sub), q.dim_of(quo), q.dim_of(big)
    if tuple(a + b for a, b in zip(d_sub, d_quo)) != d_big:
        raise ValueError("dimension vectors do not add up")
    total = sum(d_big)
    if total > budget.hall_total or p > budget.hall_prime:
        raise BudgetError(
            f"hall_count budget is total<={budget.hall_total}, "
            f"p<={budget.hall_prime} (override via {ENV_BUDGET})")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    for l, m, c in submodule_census(q.n, big, p):
        if l == sub and m == quo:
            return c
    return 0


# ----------------------------------------------------------------------
# Interpolation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class HallPolynomial:
    """Integer polynomial in q counting submodules, with its nodes."""

    sub: ModuleIso
    quo: ModuleIso
    big: ModuleIso
    coeffs: Tuple[int, ...]
    nodes: Tuple[Tuple[int, int], ...]

    def eval_q(self, q0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly.from_q_coeffs(self.coeffs)

    def to_json(self) -> dict:
        return {"L": self.sub.to_json(), "M": self.quo.to_json(),
                "N": self.big.to_json(), "coeffs": list(self.coeffs),
                "nodes": [[p, c] for p, c in self.nodes]}


def _lagrange(points: Sequence[Tuple[int, int]]) -> List[Fraction]:
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        term = [Fraction(yi)]
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(term) + 1)
            for k, c in enumerate(term):
                nxt[k] += c * Fraction(-xj, xi - xj)
                nxt[k + 1] += c * Fraction(1, xi - xj)
            term = nxt
        for k, c in enumerate(term):
            coeffs[k] += c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate_hall(q: CyclicQuiver, sub: ModuleIso, quo: ModuleIso,
                     big: ModuleIso, primes: Sequence[int],
                     validate_prime: Optional[int] = None,
                     budget: Budget = DEFAULT_BUDGET) -> HallPolynomial:
    """Fit the counting polynomial through the counts at `primes`, then
    demand integrality and agreement at one extra prime.

    Passing the holdout is equivalent to the fit being stable under
    adding that prime as a node, so one check covers both readings.
    """
    if len(primes) < 2:
        raise ValueError("need at least two interpolation primes")
    if validate_prime is None:
        validate_prime = next_prime(max(primes))
    if validate_prime in primes:
        raise ValueError("validation prime must be held out")
    # The holdout node is part of this operation's contract, so the prime
    # cap stretches to the requested nodes; the total-dimension cap stays.
    budget = budget.widened(budget.hall_total,
                            max(max(primes), validate_prime))
    nodes = [(p, hall_count(q, sub, quo, big, p, budget)) for p in primes]
    frac_coeffs = _lagrange(nodes)
    if any(c.denominator != 1 for c in frac_coeffs):
        raise InterpolationError(
            f"non-integer coefficients {frac_coeffs}; add more primes")
    coeffs = tuple(int(c) for c in frac_coeffs)
    held = hall_count(q, sub, quo, big, validate_prime, budget)
    fitted = HallPolynomial(sub, quo, big, coeffs,
                            tuple(nodes) + ((validate_prime, held),))
    if fitted.eval_q(validate_prime) != held:
        raise InterpolationError(
            f"holdout mismatch at p={validate_prime}: "
            f"poly gives {fitted.eval_q(validate_prime)}, count is {held}")
    return fitted


# ----------------------------------------------------------------------
# Integration-map homomorphism check
# ----------------------------------------------------------------------

def check_integration_homomorphism(q: CyclicQuiver, left: ModuleIso,
                                   right: ModuleIso,
                                   primes: Sequence[int] = (2, 3, 5, 7, 11),
                                   budget: Budget = CATALOG_BUDGET,
                                   twist_sign: int = 1) -> Tuple[bool, dict]:
    """Exact identity: sum over all N of the same dimension vector of
    phi_{L,M}^N(q) t^chi(dN,dN)/Aut_N(q) equals the twisted product of
    the integrated images of L and M.

    twist_sign = -1 flips the product twist and exists only so sabotage
    checks can prove this comparison is not vacuous.
    """
    d_left, d_right = q.dim_of(left), q.dim_of(right)
    d_total = tuple(a + b for a, b in zip(d_left, d_right))
    total = sum(d_total)
    if total > budget.hall_total:
        raise BudgetError(f"pair total {total} exceeds budget {budget.hall_total}")
    lhs = RationalFunction.zero()
    polys = []
    for big in q.enumerate_with_dim(d_total):
        phi = interpolate_hall(q, left, right, big, primes, budget=budget)
        polys.append(phi)
        if not phi.coeffs:
            continue
        chi = q.euler_form(d_total, d_total)
        num = phi.as_laurent().shifted(chi)
        lhs = lhs + RationalFunction(num, q.aut_poly(big))
    prod = convolve(integrate(q, left, total), integrate(q, right, total),
                    twist_sign=twist_sign)
    rhs = prod.coefficient(d_total)
    ok = rf_eq(lhs, rhs)
    report = {
        "left": left.to_json(), "right": right.to_json(),
        "lhs": lhs.to_json(), "rhs": rhs.to_json(),
        "polynomials": [phi.to_json() for phi in polys],
        "primes": list(primes), "ok": ok,
    }
    return ok, report

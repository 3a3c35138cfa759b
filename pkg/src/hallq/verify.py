"""Verification campaigns over the stability/torus/hall layers.

Each campaign returns (ok, payload) where payload is a deterministic,
JSON-ready dict: no timestamps, keys sorted at dump time, witnesses
capped at 20 diff terms unless verbose.  Sabotage modes deliberately
break one ingredient (include the central factor, reverse an order,
flip the twist sign, drop a factor) so the comparisons are provably
not vacuous.
"""

from __future__ import annotations

import functools
import hashlib
import json
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exact import GaussianRational, phase_cmp, phase_eq
from .hall import (CATALOG_BUDGET, budget_from_env,
                   check_integration_homomorphism, interpolate_hall)
from .quiver import CyclicQuiver, DimVector, ModuleIso
from .stability import (NotDiscreteError, StabilityFunction,
                        charge_of_indec, delta_stable_via_ci,
                        hn_filtration, is_semistable,
                        perturb_to_ambient_discrete, random_discrete,
                        random_restricted_discrete,
                        stable_indecomposables_up_to, stable_objects)
from .torus import (TorusElement, apply_translate, convolve, dilog, ez,
                    ez_delta, integrate_iso_sum, ordered_product,
                    semistable_phase_factor, torus_diff, torus_inverse)


class ConfigError(ValueError):
    """Invalid configuration; mapped to exit code 2 by the CLI."""


SABOTAGE_MODES: Dict[str, Tuple[str, ...]] = {
    "invariance": ("include-delta", "reverse-order"),
    "cyclic": ("drop-factor",),
    "hn-identity": ("flip-twist",),
    "pentagon": ("reverse-residual",),
    "jacobian": ("include-delta",),
    "integration": ("flip-twist",),
}


@dataclass(frozen=True)
class CampaignConfig:
    n: int = 3
    truncation: Optional[int] = None
    trials: int = 10
    seed: int = 0
    bound: int = 8
    explicit_z: Optional[StabilityFunction] = None
    primes: Tuple[int, ...] = (2, 3, 5, 7, 11)
    max_total: int = 4
    sabotage: Optional[str] = None
    verbose: bool = False

    def check(self, campaign: Optional[str] = None) -> "CampaignConfig":
        if self.n < 2:
            raise ConfigError("n must be at least 2")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        cfg = self
        if cfg.truncation is None:
            cfg = replace(cfg, truncation=2 * cfg.n)
        if cfg.truncation < 1:
            raise ConfigError("truncation must be at least 1")
        if cfg.explicit_z is not None and cfg.explicit_z.n != cfg.n:
            raise ConfigError("explicit stability function has the wrong n")
        if cfg.sabotage is not None:
            allowed = SABOTAGE_MODES.get(campaign or "", ())
            if cfg.sabotage not in allowed:
                raise ConfigError(
                    f"unknown sabotage mode {cfg.sabotage!r} for "
                    f"{campaign!r}; allowed: {', '.join(allowed) or 'none'}")
        return cfg


def _z_for_trial(cfg: CampaignConfig, i: int) -> StabilityFunction:
    if cfg.explicit_z is not None:
        return cfg.explicit_z
    return random_discrete(cfg.n, cfg.seed + i, cfg.bound)


def _element_digest(a: TorusElement) -> str:
    blob = json.dumps(a.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def _diff_limit(cfg: CampaignConfig) -> Optional[int]:
    return None if cfg.verbose else 20


def _base(cfg: CampaignConfig, campaign: str) -> dict:
    return {
        "campaign": campaign,
        "n": cfg.n,
        "truncation": cfg.truncation,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "sabotage": cfg.sabotage,
        "witness": [],
    }


# ----------------------------------------------------------------------
# Stable objects
# ----------------------------------------------------------------------

def campaign_stables(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("stables")
    payload = _base(cfg, "stables")
    z = _z_for_trial(cfg, 0)
    payload["charges"] = z.to_json()["charges"]
    try:
        report = stable_objects(z)
    except NotDiscreteError as err:
        a, b = err.witness
        payload["witness"] = [{
            "reason": "equal phases",
            "pair": [[a.socle, a.length], [b.socle, b.length]],
        }]
        payload["ok"] = False
        return False, payload
    via_runs = delta_stable_via_ci(z)
    agreed = via_runs == report.delta_stable
    payload.update(report.to_json(z))
    payload["delta_via_runs"] = [via_runs.socle, via_runs.length]
    payload["ok"] = agreed
    if not agreed:
        payload["witness"] = [{
            "reason": "vertex-run location disagrees with brute force",
            "pair": [[via_runs.socle, via_runs.length],
                     [report.delta_stable.socle, report.delta_stable.length]],
        }]
    return agreed, payload


def campaign_stable_properties(cfg: CampaignConfig) -> Tuple[bool, dict]:
    """Random census: lengths bounded by n, unique delta-stable, and the
    vertex-run shortcut agrees with the brute-force census."""
    cfg = cfg.check("stables")
    payload = _base(cfg, "stable-properties")
    q = CyclicQuiver(cfg.n)
    witness = []
    for i in range(cfg.trials):
        z = _z_for_trial(cfg, i)
        wide = stable_indecomposables_up_to(z, 2 * cfg.n)
        long_ones = [r for r in wide if r.length > cfg.n]
        of_delta = [r for r in wide if q.dim_of_indec(r) == q.delta]
        via_runs = delta_stable_via_ci(z)
        bad = {}
        if long_ones:
            bad["stables_longer_than_n"] = [[r.socle, r.length] for r in long_ones]
        if len(of_delta) != 1:
            bad["delta_stables"] = [[r.socle, r.length] for r in of_delta]
        elif via_runs != of_delta[0]:
            bad["vertex_run_mismatch"] = [[via_runs.socle, via_runs.length],
                                          [of_delta[0].socle, of_delta[0].length]]
        if bad:
            bad["trial"] = i
            witness.append(bad)
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Invariance of the stable-object product
# ----------------------------------------------------------------------

def _ez_factors(z: StabilityFunction, truncation: int,
                include_delta: bool = False) -> Tuple[List[DimVector], List[TorusElement]]:
    report = stable_objects(z)
    q = z.quiver
    dims: List[DimVector] = []
    factors: List[TorusElement] = []
    for r in report.stables:
        if r == report.delta_stable and not include_delta:
            continue
        d = q.dim_of_indec(r)
        dims.append(d)
        factors.append(dilog(z.n, truncation, d))
    return dims, factors


def campaign_invariance(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("invariance")
    if cfg.trials < 2:
        raise ConfigError("invariance needs at least 2 trials")
    payload = _base(cfg, "invariance")
    products = []
    orders = []
    for i in range(cfg.trials):
        z = _z_for_trial(cfg, i)
        dims, factors = _ez_factors(
            z, cfg.truncation,
            include_delta=(cfg.sabotage == "include-delta" and i == 0))
        if cfg.sabotage == "reverse-order" and i == 0:
            dims, factors = dims[::-1], factors[::-1]
        products.append(ordered_product(factors, cfg.n, cfg.truncation))
        orders.append([list(d) for d in dims])
    payload["factor_orders"] = orders
    payload["element_sha256"] = _element_digest(products[0])
    witness = []
    for i in range(1, cfg.trials):
        if products[i] != products[0]:
            witness.append({
                "trials": [0, i],
                "diff": torus_diff(products[0], products[i], _diff_limit(cfg)),
            })
            break
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Invariance under the socle rotation
# ----------------------------------------------------------------------

def campaign_cyclic(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("cyclic")
    payload = _base(cfg, "cyclic")
    z = _z_for_trial(cfg, 0)
    dims, factors = _ez_factors(z, cfg.truncation)
    if cfg.sabotage == "drop-factor":
        dims, factors = dims[:-1], factors[:-1]
    element = ordered_product(factors, cfg.n, cfg.truncation)
    payload["factor_order"] = [list(d) for d in dims]
    payload["element_sha256"] = _element_digest(element)
    witness = []
    for k in range(1, cfg.n):
        rotated = apply_translate(element, k)
        if rotated != element:
            witness.append({
                "rotation": k,
                "diff": torus_diff(element, rotated, _diff_limit(cfg)),
            })
            break
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Filtration identity
# ----------------------------------------------------------------------

def _distinct_phases_desc(z: StabilityFunction, truncation: int) -> List[GaussianRational]:
    phases: List[GaussianRational] = []
    for r in z.quiver.enumerate_indecomposables(truncation):
        if not is_semistable(z, r):
            continue
        c = charge_of_indec(z, r)
        if not any(phase_eq(c, c0) for c0 in phases):
            phases.append(c)
    return sorted(phases, key=functools.cmp_to_key(lambda a, b: -phase_cmp(a, b)))


def campaign_hn_identity(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("hn-identity")
    payload = _base(cfg, "hn-identity")
    q = CyclicQuiver(cfg.n)
    twist = -1 if cfg.sabotage == "flip-twist" else 1
    witness = []
    total = integrate_iso_sum(q, cfg.truncation)
    for i in range(cfg.trials):
        z = _z_for_trial(cfg, i)
        per_phase = TorusElement.one(cfg.n, cfg.truncation)
        for phase in _distinct_phases_desc(z, cfg.truncation):
            factor = semistable_phase_factor(z, cfg.truncation, phase)
            per_phase = convolve(per_phase, factor, twist_sign=twist)
        split = ez_delta(z, cfg.truncation) * ez(z, cfg.truncation)
        if per_phase != total:
            witness.append({
                "trial": i,
                "comparison": "iso-sum vs per-phase product",
                "diff": torus_diff(total, per_phase, _diff_limit(cfg)),
            })
        elif split != total:
            witness.append({
                "trial": i,
                "comparison": "iso-sum vs central-factor split",
                "diff": torus_diff(total, split, _diff_limit(cfg)),
            })
        if witness:
            break
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Simple-root product identities
# ----------------------------------------------------------------------

def _pentagon_candidates(n: int, attempt: int
                         ) -> Tuple[StabilityFunction, StabilityFunction]:
    """Two stability functions with reversed simple orderings on the
    vertices 1..n-1 and a far-right charge on vertex n."""
    x = Fraction((n - 2) * (n + 1), 2) + 1
    re1 = [Fraction(k - 1) for k in range(1, n)]
    re2 = [Fraction(n - 1 - k) for k in range(1, n)]
    if attempt:
        rng = random.Random(0x5EED ^ (attempt << 8))
        re1 = [r + Fraction(rng.randint(-8, 8), 128) for r in re1]
        re2 = [r + Fraction(rng.randint(-8, 8), 128) for r in re2]
        x = x + Fraction(rng.randint(0, 8), 128)
    z1 = StabilityFunction.of([(r, Fraction(1)) for r in re1] + [(x, Fraction(1))])
    z2 = StabilityFunction.of([(r, Fraction(1)) for r in re2] + [(x, Fraction(1))])
    return z1, z2


def _short_root_dims(n: int) -> List[DimVector]:
    """Dimension vectors of the uniserials not touching vertex n."""
    q = CyclicQuiver(n)
    return [q.dim_of_indec(q.R(i, l))
            for i in range(1, n) for l in range(1, n - i + 1)]


def campaign_pentagon(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("pentagon")
    if cfg.n < 3:
        raise ConfigError("the residual identity needs n >= 3")
    payload = _base(cfg, "pentagon")
    q = CyclicQuiver(cfg.n)
    simples = [q.e(i) for i in range(1, cfg.n)]
    roots = set(_short_root_dims(cfg.n))
    found = None
    for attempt in range(200):
        z1, z2 = _pentagon_candidates(cfg.n, attempt)
        try:
            dims1, facs1 = _ez_factors(z1, cfg.truncation)
            dims2, facs2 = _ez_factors(z2, cfg.truncation)
        except (NotDiscreteError, RuntimeError):
            continue
        k = 0
        while (k < min(len(dims1), len(dims2))
               and dims1[-1 - k] == dims2[-1 - k]):
            k += 1
        if dims1[:len(dims1) - k] != simples:
            continue
        prefix2 = dims2[:len(dims2) - k]
        if set(prefix2) != roots or len(prefix2) != len(roots):
            continue
        found = (z1, z2, dims1, facs1, dims2, facs2, k)
        break
    if found is None:
        raise ConfigError("no valid charge arrangement found in 200 attempts")
    z1, z2, dims1, facs1, dims2, facs2, k = found
    payload["charges"] = {"left": z1.to_json()["charges"],
                          "right": z2.to_json()["charges"]}
    payload["canceled"] = [list(d) for d in dims1[len(dims1) - k:]]
    payload["left_factors"] = [list(d) for d in dims1[:len(dims1) - k]]
    payload["right_factors"] = [list(d) for d in dims2[:len(dims2) - k]]

    n, D = cfg.n, cfg.truncation
    full1 = ordered_product(facs1, n, D)
    full2 = ordered_product(facs2, n, D)
    shared = ordered_product(facs1[len(facs1) - k:], n, D)
    shared_inv = torus_inverse(shared)
    residual1 = full1 * shared_inv
    residual2 = full2 * shared_inv
    left = ordered_product(facs1[:len(facs1) - k], n, D)
    rhs_factors = facs2[:len(facs2) - k]
    if cfg.sabotage == "reverse-residual":
        rhs_factors = rhs_factors[::-1]
    right = ordered_product(rhs_factors, n, D)

    witness = []
    limit = _diff_limit(cfg)
    if full1 != full2:
        witness.append({"comparison": "full products", "diff": torus_diff(full1, full2, limit)})
    elif residual1 * shared != full1:
        witness.append({"comparison": "cancellation sanity",
                        "diff": torus_diff(residual1 * shared, full1, limit)})
    elif residual1 != left or residual2 != left:
        bad = residual1 if residual1 != left else residual2
        witness.append({"comparison": "residual vs left factorization",
                        "diff": torus_diff(bad, left, limit)})
    elif left != right:
        witness.append({"comparison": "simple-root identity", "diff": torus_diff(left, right, limit)})
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Radical-square-zero quotient instance
# ----------------------------------------------------------------------

def campaign_jacobian(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("jacobian")
    if cfg.n != 3:
        raise ConfigError("this campaign is specific to n = 3")
    payload = _base(cfg, "jacobian")
    q = CyclicQuiver(cfg.n)
    products = []
    orders = []
    witness = []
    for i in range(cfg.trials):
        z0 = random_restricted_discrete(cfg.n, cfg.seed + i, max_length=2,
                                        bound=cfg.bound)
        z = perturb_to_ambient_discrete(z0, subcat_max_length=2)
        short = stable_indecomposables_up_to(z, 2)
        if any(r.length > 2 for r in short):
            witness.append({"trial": i, "reason": "stable of length > 2 in the quotient"})
            break
        dims = [q.dim_of_indec(r) for r in short]
        factors = [dilog(cfg.n, cfg.truncation, d) for d in dims]
        if cfg.sabotage == "include-delta" and i == 0:
            dims = [q.delta] + dims
            factors = [dilog(cfg.n, cfg.truncation, q.delta)] + factors
        orders.append([list(d) for d in dims])
        products.append(ordered_product(factors, cfg.n, cfg.truncation))
    if not witness:
        payload["factor_orders"] = orders
        payload["element_sha256"] = _element_digest(products[0])
        for i in range(1, len(products)):
            if products[i] != products[0]:
                witness.append({
                    "trials": [0, i],
                    "diff": torus_diff(products[0], products[i], _diff_limit(cfg)),
                })
                break
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Integration homomorphism catalog
# ----------------------------------------------------------------------

def campaign_integration(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check("integration")
    payload = _base(cfg, "integration")
    q = CyclicQuiver(cfg.n)
    budget = budget_from_env(CATALOG_BUDGET)
    twist = -1 if cfg.sabotage == "flip-twist" else 1
    classes = list(q.enumerate_iso_classes(cfg.max_total))
    checked = 0
    witness = []
    for left in classes:
        for right in classes:
            if sum(q.dim_of(left)) + sum(q.dim_of(right)) > cfg.max_total:
                continue
            ok, report = check_integration_homomorphism(
                q, left, right, cfg.primes, budget, twist_sign=twist)
            checked += 1
            if not ok:
                witness.append({
                    "left": left.to_json(), "right": right.to_json(),
                    "lhs": report["lhs"], "rhs": report["rhs"],
                })
                break
        if witness:
            break
    payload["pairs_checked"] = checked
    payload["witness"] = witness
    payload["ok"] = not witness
    return not witness, payload


# ----------------------------------------------------------------------
# Table and report commands
# ----------------------------------------------------------------------

def hall_table(cfg: CampaignConfig, sub: ModuleIso, quo: ModuleIso) -> Tuple[bool, dict]:
    cfg = cfg.check()
    q = CyclicQuiver(cfg.n)
    budget = budget_from_env(CATALOG_BUDGET)
    d_total = tuple(a + b for a, b in zip(q.dim_of(sub), q.dim_of(quo)))
    table = [interpolate_hall(q, sub, quo, big, cfg.primes, budget=budget)
             for big in q.enumerate_with_dim(d_total)]
    payload = _base(cfg, "hall")
    payload["L"] = sub.to_json()
    payload["M"] = quo.to_json()
    payload["polynomials"] = [t.to_json() for t in table]
    payload["ok"] = True
    return True, payload


def hn_report(cfg: CampaignConfig, module: ModuleIso) -> Tuple[bool, dict]:
    cfg = cfg.check()
    z = _z_for_trial(cfg, 0)
    strata = hn_filtration(z, module)
    payload = _base(cfg, "hn")
    payload["charges"] = z.to_json()["charges"]
    payload["module"] = module.to_json()
    payload["strata"] = [{"subquotient": m.to_json(),
                          "charge": c.to_json()} for m, c in strata]
    payload["ok"] = True
    return True, payload


def ez_report(cfg: CampaignConfig) -> Tuple[bool, dict]:
    cfg = cfg.check()
    z = _z_for_trial(cfg, 0)
    element = ez(z, cfg.truncation)
    payload = _base(cfg, "ez")
    payload["charges"] = z.to_json()["charges"]
    payload["element"] = element.to_json()
    payload["ok"] = True
    return True, payload


CAMPAIGNS = {
    "invariance": campaign_invariance,
    "cyclic": campaign_cyclic,
    "hn-identity": campaign_hn_identity,
    "pentagon": campaign_pentagon,
    "jacobian": campaign_jacobian,
    "integration": campaign_integration,
}

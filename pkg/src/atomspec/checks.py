"""Property battery over a single ring: every structural fact the library
relies on, re-verified exhaustively at desk scale.

Each check returns (name, passed, witness); check_suite aggregates them
into a report.  A failed check is an implementation bug, never an
acceptable state, so witnesses are kept small and concrete.
"""

from __future__ import annotations

import itertools
import random

from .modules import (
    RightModule,
    annihilator,
    annihilator_set,
    composition_factors,
    composition_factors_top_down,
    cyclic_submodule,
    direct_sum,
    embeds_in,
    is_isomorphic,
    is_submodule,
    is_uniform,
    is_uniform_bruteforce,
    quotient,
    regular_module,
    sub_module,
    submodule_lattice,
    submodule_sum,
)
from .monoform import (
    filtration_factor,
    is_comonoform,
    is_completely_prime,
    is_monoform,
    max_monoform_submodule,
    monoform_filtration,
    monoform_oracle_artinian,
)
from .rings import FiniteRing, validate_ring
from .serre import build_universe, calculus_check, closure_oracle
from .spectrum import (
    associated_atoms,
    atom_equivalent,
    atom_spectrum,
    atom_support,
    commutative_crosscheck,
    enumerate_open_sets,
    is_open,
)

# checks that enumerate submodule lattices of subquotients stay usable by
# bounding the modules they look inside
SMALL_MODULE_ORDER = 64


def _cyclic_modules(ring: FiniteRing) -> list[RightModule]:
    """R/I for every proper right ideal I (includes the regular module)."""
    reg = regular_module(ring)
    return [
        quotient(reg, ideal)
        for ideal in submodule_lattice(reg)
        if len(ideal) < ring.order
    ]


def _all_submodule_modules(module: RightModule) -> list[RightModule]:
    return [sub_module(module, s)[0] for s in submodule_lattice(module)]


def check_ring_axioms(ring: FiniteRing):
    try:
        validate_ring(ring.add, ring.mul, ring.one)
    except Exception as exc:  # pragma: no cover - only on corrupt input
        return "ring axioms", False, str(exc)
    return "ring axioms", True, None


def check_annihilators_are_ideals(ring: FiniteRing):
    reg = regular_module(ring)
    for mod in _cyclic_modules(ring):
        for x in range(mod.order):
            if not is_submodule(reg, annihilator(mod, x)):
                return "annihilators are right ideals", False, (mod.provenance, x)
    return "annihilators are right ideals", True, None


def check_index_multiplicativity(ring: FiniteRing):
    reg = regular_module(ring)
    for sub in submodule_lattice(reg):
        if reg.order != len(sub) * quotient(reg, sub).order:
            return "index multiplicativity", False, sorted(sub)
    return "index multiplicativity", True, None


def check_cyclic_iso_quotient(ring: FiniteRing):
    """xR is isomorphic to R / Ann(x)."""
    reg = regular_module(ring)
    for mod in _cyclic_modules(ring):
        for x in range(mod.order):
            cyc = sub_module(mod, cyclic_submodule(mod, x))[0]
            quo = quotient(reg, annihilator(mod, x))
            if not is_isomorphic(cyc, quo):
                return "cyclic is R mod annihilator", False, (mod.provenance, x)
    return "cyclic is R mod annihilator", True, None


def check_lattice_closure(ring: FiniteRing):
    reg = regular_module(ring)
    lattice = set(submodule_lattice(reg))
    for a in lattice:
        for b in lattice:
            if a & b not in lattice or submodule_sum(reg, a, b) not in lattice:
                return "lattice closed under meet and join", False, (
                    sorted(a), sorted(b),
                )
    return "lattice closed under meet and join", True, None


def check_series_independence(ring: FiniteRing):
    for mod in _cyclic_modules(ring):
        if composition_factors(mod) != composition_factors_top_down(mod):
            return "composition series independence", False, mod.provenance
    return "composition series independence", True, None


def check_uniform_oracle(ring: FiniteRing):
    for mod in _cyclic_modules(ring):
        if len(submodule_lattice(mod)) <= SMALL_MODULE_ORDER:
            if is_uniform(mod) != is_uniform_bruteforce(mod):
                return "uniform agrees with pairwise oracle", False, mod.provenance
    return "uniform agrees with pairwise oracle", True, None


def check_annihilator_reduction(ring: FiniteRing):
    """Shared-submodule reduction vs a literal embedding search."""
    mods = [m for m in _cyclic_modules(ring) if m.order <= 16]
    for a in mods:
        for b in mods:
            reduced = bool(annihilator_set(a) & annihilator_set(b))
            literal = any(
                len(s) > 1 and embeds_in(sub_module(a, s)[0], b)
                for s in submodule_lattice(a)
            )
            if reduced != literal:
                return "annihilator-set reduction", False, (
                    a.provenance, b.provenance,
                )
    return "annihilator-set reduction", True, None


def check_monoform_hereditary(ring: FiniteRing):
    """Every nonzero submodule of a monoform module is monoform."""
    for mod in _cyclic_modules(ring):
        if not is_monoform(mod):
            continue
        for sub in submodule_lattice(mod):
            if len(sub) > 1 and not is_monoform(sub_module(mod, sub)[0]):
                return "monoform is hereditary", False, (mod.provenance, sorted(sub))
    return "monoform is hereditary", True, None


def check_monoform_implies_uniform(ring: FiniteRing):
    for mod in _cyclic_modules(ring):
        if is_monoform(mod) and not is_uniform(mod):
            return "monoform implies uniform", False, mod.provenance
    return "monoform implies uniform", True, None


def check_atom_equivalence_relation(ring: FiniteRing):
    spec = atom_spectrum(ring)
    ideals = spec.comonoform_ideals()
    for p in ideals:
        if not atom_equivalent(ring, p, p):
            return "atom equivalence is an equivalence", False, sorted(p)
    for p, q, r in itertools.product(ideals, repeat=3):
        if atom_equivalent(ring, p, q) != atom_equivalent(ring, q, p):
            return "atom equivalence is an equivalence", False, (sorted(p), sorted(q))
        if (
            atom_equivalent(ring, p, q)
            and atom_equivalent(ring, q, r)
            and not atom_equivalent(ring, p, r)
        ):
            return "atom equivalence is an equivalence", False, (
                sorted(p), sorted(q), sorted(r),
            )
    return "atom equivalence is an equivalence", True, None


def check_monoform_sum(ring: FiniteRing):
    """In a uniform module, the sum of two monoform submodules is monoform."""
    for mod in _cyclic_modules(ring):
        if not is_uniform(mod):
            continue
        monoforms = [
            s for s in submodule_lattice(mod)
            if len(s) > 1 and is_monoform(sub_module(mod, s)[0])
        ]
        for a in monoforms:
            for b in monoforms:
                total = submodule_sum(mod, a, b)
                if not is_monoform(sub_module(mod, total)[0]):
                    return "monoform submodule sums", False, (
                        mod.provenance, sorted(a), sorted(b),
                    )
    return "monoform submodule sums", True, None


def check_socle_oracle(ring: FiniteRing):
    for mod in _cyclic_modules(ring):
        if is_monoform(mod) != monoform_oracle_artinian(mod):
            return "monoform agrees with socle oracle", False, mod.provenance
    return "monoform agrees with socle oracle", True, None


def check_comonoform_completely_prime(ring: FiniteRing):
    reg = regular_module(ring)
    for ideal in submodule_lattice(reg):
        if len(ideal) == ring.order:
            continue
        if is_comonoform(ring, ideal) and not is_completely_prime(ring, ideal):
            return "comonoform implies completely prime", False, sorted(ideal)
    return "comonoform implies completely prime", True, None


def check_filtrations(ring: FiniteRing):
    reg = regular_module(ring)
    for mod in _cyclic_modules(ring):
        filt = monoform_filtration(mod)
        if list(filt.chain) != sorted(filt.chain, key=len) or any(
            not a < b for a, b in zip(filt.chain, filt.chain[1:])
        ):
            return "monoform filtrations", False, mod.provenance
        for i, label in enumerate(filt.labels):
            factor = filtration_factor(mod, filt, i)
            if not is_monoform(factor):
                return "monoform filtrations", False, (mod.provenance, i)
            if not is_isomorphic(factor, quotient(reg, label)):
                return "monoform filtrations", False, (mod.provenance, i)
    return "monoform filtrations", True, None


def check_max_monoform(ring: FiniteRing):
    for mod in _cyclic_modules(ring):
        if not is_uniform(mod):
            continue
        # raises internally if the maximum fails its own verification
        max_monoform_submodule(mod)
    return "maximal monoform submodules", True, None


def check_support_exactness(ring: FiniteRing):
    spec = atom_spectrum(ring)
    for mod in _cyclic_modules(ring):
        total = atom_support(spec, mod)
        for sub in submodule_lattice(mod):
            left = atom_support(spec, sub_module(mod, sub)[0])
            right = atom_support(spec, quotient(mod, sub))
            if total != left | right:
                return "support exactness", False, (mod.provenance, sorted(sub))
    return "support exactness", True, None


def check_ass_sandwich(ring: FiniteRing):
    spec = atom_spectrum(ring)
    for mod in _cyclic_modules(ring):
        mid = associated_atoms(spec, mod)
        for sub in submodule_lattice(mod):
            left = associated_atoms(spec, sub_module(mod, sub)[0])
            right = associated_atoms(spec, quotient(mod, sub))
            if not (left <= mid and mid <= left | right):
                return "associated atom sandwich", False, (mod.provenance, sorted(sub))
    return "associated atom sandwich", True, None


def check_direct_sum_additivity(ring: FiniteRing, pairs: int = 20, seed: int = 0):
    # factor cap keeps the summed module's tables and lattice tractable
    spec = atom_spectrum(ring)
    mods = [m for m in _cyclic_modules(ring) if m.order <= 16]
    rng = random.Random(seed)
    for _ in range(pairs):
        a, b = rng.choice(mods), rng.choice(mods)
        s = direct_sum(a, b)
        if atom_support(spec, s) != atom_support(spec, a) | atom_support(spec, b):
            return "direct sum support additivity", False, (a.provenance, b.provenance)
        if associated_atoms(spec, s) != (
            associated_atoms(spec, a) | associated_atoms(spec, b)
        ):
            return "direct sum support additivity", False, (a.provenance, b.provenance)
    return "direct sum support additivity", True, None


def check_ass_inside_support(ring: FiniteRing):
    spec = atom_spectrum(ring)
    for mod in _cyclic_modules(ring):
        ass = associated_atoms(spec, mod)
        if not ass <= atom_support(spec, mod):
            return "associated atoms within support", False, mod.provenance
        if mod.order > 1 and not ass:
            return "associated atoms within support", False, mod.provenance
    return "associated atoms within support", True, None


def check_supports_are_open(ring: FiniteRing):
    spec = atom_spectrum(ring)
    for mod in _cyclic_modules(ring):
        if not is_open(spec, atom_support(spec, mod)):
            return "module supports are open", False, mod.provenance
    return "module supports are open", True, None


def check_discreteness(ring: FiniteRing):
    """Finite rings: every subset of atoms is open, and the atom count is
    the number of iso-classes of simple modules."""
    spec = atom_spectrum(ring)
    k = len(spec.atoms)
    if len(enumerate_open_sets(spec)) != 2 ** k:
        return "discrete topology", False, k
    reg = regular_module(ring)
    simple_handles = set()
    for mod in _cyclic_modules(ring):
        if mod.order > 1 and len(submodule_lattice(mod)) == 2:
            simple_handles.add(annihilator_set(mod))
    if len(simple_handles) != k:
        return "discrete topology", False, (
            "atoms", k, "simple classes", len(simple_handles),
        )
    return "discrete topology", True, None


def check_monoform_closure_equivalence(ring: FiniteRing):
    """M is non-monoform iff M falls into the Serre closure of its proper
    quotients, computed by the brute-force oracle."""
    for mod in _cyclic_modules(ring):
        if mod.order > SMALL_MODULE_ORDER:
            continue
        universe = build_universe(mod)
        gens = {
            universe.class_of(quotient(mod, sub))
            for sub in submodule_lattice(mod)
            if len(sub) > 1
        }
        in_closure = universe.class_of(mod) in closure_oracle(universe, gens)
        if in_closure != (not is_monoform(mod)):
            return "monoform closure criterion", False, mod.provenance
    return "monoform closure criterion", True, None


def check_roundtrip_open_sets(ring: FiniteRing):
    """ASupp(ASupp^-1 phi) == phi via cyclic witnesses, for every open phi."""
    spec = atom_spectrum(ring)
    for phi in enumerate_open_sets(spec):
        covered = frozenset()
        for q in spec.comonoform_ideals():
            if spec.support_of_ideal(q) <= phi:
                covered |= spec.support_of_ideal(q)
        if covered != phi:
            return "open set roundtrip", False, sorted(phi)
    return "open set roundtrip", True, None


def check_oracle_soundness(ring: FiniteRing, trials: int = 5, seed: int = 0):
    """Every member of an oracle closure has support inside the generated
    open set."""
    spec = atom_spectrum(ring)
    reg = regular_module(ring)
    universe = build_universe(reg)
    supports = [atom_support(spec, m) for m in universe.members]
    rng = random.Random(seed)
    for _ in range(trials):
        gens = frozenset(
            i for i in range(len(universe.members)) if rng.random() < 0.4
        )
        phi = frozenset().union(frozenset(), *(supports[g] for g in gens))
        for member in closure_oracle(universe, gens):
            if not supports[member] <= phi:
                return "closure oracle soundness", False, sorted(gens)
    return "closure oracle soundness", True, None


def check_calculus(ring: FiniteRing, samples: int = 25):
    universe = build_universe(regular_module(ring))
    result = calculus_check(universe, samples=samples)
    return "subcategory calculus", result["passed"], result["violations"] or None


def check_commutative(ring: FiniteRing):
    if not ring.is_commutative():
        return "commutative recovery", True, "skipped (noncommutative)"
    report = commutative_crosscheck(ring)
    return "commutative recovery", report["passed"], (
        None if report["passed"] else report["checks"]
    )


ALL_CHECKS = [
    check_ring_axioms,
    check_annihilators_are_ideals,
    check_index_multiplicativity,
    check_cyclic_iso_quotient,
    check_lattice_closure,
    check_series_independence,
    check_uniform_oracle,
    check_annihilator_reduction,
    check_monoform_hereditary,
    check_monoform_implies_uniform,
    check_atom_equivalence_relation,
    check_monoform_sum,
    check_socle_oracle,
    check_comonoform_completely_prime,
    check_filtrations,
    check_max_monoform,
    check_support_exactness,
    check_ass_sandwich,
    check_direct_sum_additivity,
    check_ass_inside_support,
    check_supports_are_open,
    check_discreteness,
    check_monoform_closure_equivalence,
    check_roundtrip_open_sets,
    check_oracle_soundness,
    check_calculus,
    check_commutative,
]


def check_suite(ring: FiniteRing) -> dict:
    """Run the full battery; report pass/fail per property with witnesses."""
    results = []
    for check in ALL_CHECKS:
        name, passed, witness = check(ring)
        entry = {"property": name, "passed": passed}
        if witness is not None:
            entry["witness"] = witness
        results.append(entry)
    return {
        "ring": ring.name or f"order {ring.order}",
        "order": ring.order,
        "properties": results,
        "passed": all(r["passed"] for r in results),
    }

"""Serre subcategories of mod R as open subsets of the atom spectrum,
plus a brute-force closure oracle over bounded subquotient universes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .modules import (
    RightModule,
    annihilator,
    quotient,
    sub_module,
    submodule_key,
    submodule_lattice,
)
from .spectrum import (
    AtomSpectrum,
    SpectrumError,
    atom_support,
    enumerate_open_sets,
    is_open,
)


class SerreError(Exception):
    pass


@dataclass(frozen=True)
class SerreSubcategory:
    spectrum: AtomSpectrum
    open_set: frozenset
    generators: tuple[frozenset, ...] = ()  # comonoform ideals q, gens R/q

    def __post_init__(self):
        try:
            opened = is_open(self.spectrum, self.open_set)
        except SpectrumError as exc:
            raise SerreError(str(exc)) from exc
        if not opened:
            raise SerreError(f"{sorted(self.open_set)} is not an open set")


def serre_from_generators(
    spec: AtomSpectrum, modules: list[RightModule]
) -> SerreSubcategory:
    """Smallest Serre subcategory containing the generators, as the union
    of their atom supports (open by construction, verified anyway)."""
    phi = frozenset()
    for mod in modules:
        if mod.ring != spec.ring:
            raise SerreError("generator is over a different ring")
        phi |= atom_support(spec, mod)
    return SerreSubcategory(spectrum=spec, open_set=phi)


def serre_contains(sub: SerreSubcategory, module: RightModule) -> bool:
    return atom_support(sub.spectrum, module) <= sub.open_set


def _minimal_ideal_generators(
    spec: AtomSpectrum, phi: frozenset
) -> tuple[frozenset, ...]:
    """Greedy minimal set of comonoform ideals q with union of supports of
    the R/q equal to phi; largest support first, canonical order tie-break."""
    candidates = [
        q for q in spec.comonoform_ideals()
        if spec.support_of_ideal(q) <= phi
    ]
    candidates.sort(
        key=lambda q: (-len(spec.support_of_ideal(q)), submodule_key(q))
    )
    chosen: list[frozenset] = []
    covered: frozenset = frozenset()
    for q in candidates:
        if covered == phi:
            break
        if not spec.support_of_ideal(q) <= covered:
            chosen.append(q)
            covered |= spec.support_of_ideal(q)
    if covered != phi:
        raise AssertionError(
            f"open set {sorted(phi)} not covered by cyclic supports"
        )
    # drop generators made redundant by later picks
    for q in list(chosen):
        rest = [o for o in chosen if o != q]
        if frozenset().union(
            frozenset(), *(spec.support_of_ideal(o) for o in rest)
        ) == phi:
            chosen.remove(q)
    return tuple(chosen)


def enumerate_serre(spec: AtomSpectrum) -> list[SerreSubcategory]:
    """One Serre subcategory per open set, each with a minimal generating
    set of cyclic modules, ordered by (size, atom ids)."""
    return [
        SerreSubcategory(
            spectrum=spec,
            open_set=phi,
            generators=_minimal_ideal_generators(spec, phi),
        )
        for phi in enumerate_open_sets(spec)
    ]


def inclusion_edges(subs: list[SerreSubcategory]) -> list[tuple[int, int]]:
    """Covering relations of the inclusion order, as (lower, upper) index pairs."""
    edges = []
    for i, a in enumerate(subs):
        for j, b in enumerate(subs):
            if not a.open_set < b.open_set:
                continue
            if any(
                a.open_set < c.open_set < b.open_set for c in subs
            ):
                continue
            edges.append((i, j))
    return edges


def hasse_dot(subs: list[SerreSubcategory]) -> str:
    """Hasse diagram in DOT graph-description text."""
    lines = ["digraph serre_lattice {", "  rankdir=BT;"]
    for i, s in enumerate(subs):
        label = "{" + ",".join(str(a) for a in sorted(s.open_set)) + "}"
        gens = "; ".join(
            "R/" + str(sorted(q)) for q in s.generators
        ) or "0"
        lines.append(f'  n{i} [label="{label}\\n{gens}"];')
    for i, j in inclusion_edges(subs):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# closure oracle

@dataclass(frozen=True)
class ClosureUniverse:
    """Iso-classes of all subquotients of an ambient module, with the
    subobject / quotient / extension structure recorded among them."""

    ambient: RightModule
    members: tuple[RightModule, ...]
    zero_index: int
    sub_classes: tuple[frozenset, ...]   # per member: classes of its submodules
    quot_classes: tuple[frozenset, ...]  # per member: classes of its quotients
    ext_triples: frozenset               # (sub_class, member, quot_class)

    def class_of(self, module: RightModule) -> int:
        idx = _find_class(self.members, module)
        if idx is None:
            raise SerreError("module is not in the universe")
        return idx


def _invariant_key(module: RightModule) -> tuple:
    from collections import Counter

    anns = Counter(annihilator(module, x) for x in range(module.order))
    return (
        module.order,
        tuple(sorted(
            (tuple(sorted(k)), v) for k, v in anns.items()
        )),
    )


def _find_class(members, module) -> int | None:
    from .modules import is_isomorphic

    key = _invariant_key(module)
    for i, m in enumerate(members):
        if _invariant_key(m) == key and is_isomorphic(m, module):
            return i
    return None


@lru_cache(maxsize=None)
def build_universe(ambient: RightModule) -> ClosureUniverse:
    """All subquotients of the ambient up to isomorphism, plus structure."""
    members: list[RightModule] = []

    def intern(module: RightModule) -> int:
        idx = _find_class(members, module)
        if idx is None:
            members.append(module)
            idx = len(members) - 1
        return idx

    # seed with every subquotient
    for sub in submodule_lattice(ambient):
        inner, _ = sub_module(ambient, sub)
        for nested in submodule_lattice(inner):
            intern(quotient(inner, nested))

    sub_classes: list[set[int]] = [set() for _ in members]
    quot_classes: list[set[int]] = [set() for _ in members]
    triples: set[tuple[int, int, int]] = set()
    for e, member in enumerate(members):
        for sub in submodule_lattice(member):
            l_idx = _find_class(members, sub_module(member, sub)[0])
            n_idx = _find_class(members, quotient(member, sub))
            assert l_idx is not None and n_idx is not None
            sub_classes[e].add(l_idx)
            quot_classes[e].add(n_idx)
            triples.add((l_idx, e, n_idx))
    zero_index = _find_class(members, quotient(ambient, frozenset(range(ambient.order))))
    assert zero_index is not None
    return ClosureUniverse(
        ambient=ambient,
        members=tuple(members),
        zero_index=zero_index,
        sub_classes=tuple(frozenset(s) for s in sub_classes),
        quot_classes=tuple(frozenset(s) for s in quot_classes),
        ext_triples=frozenset(triples),
    )


def closure_oracle(universe: ClosureUniverse, gens) -> frozenset:
    """Least member subset containing gens, closed under subobjects,
    quotients, and the recorded extension triples; fixpoint iteration."""
    closed = {universe.zero_index}
    closed.update(gens)
    changed = True
    while changed:
        changed = False
        for m in tuple(closed):
            for cls in universe.sub_classes[m] | universe.quot_classes[m]:
                if cls not in closed:
                    closed.add(cls)
                    changed = True
        for l, e, n in universe.ext_triples:
            if l in closed and n in closed and e not in closed:
                closed.add(e)
                changed = True
    return frozenset(closed)


def _closed_sub(universe: ClosureUniverse, xs: frozenset) -> frozenset:
    return frozenset(
        cls for m in xs for cls in universe.sub_classes[m]
    ) | xs


def _closed_quot(universe: ClosureUniverse, xs: frozenset) -> frozenset:
    return frozenset(
        cls for m in xs for cls in universe.quot_classes[m]
    ) | xs


def _star(universe: ClosureUniverse, xs: frozenset, ys: frozenset) -> frozenset:
    return frozenset(
        e for l, e, n in universe.ext_triples if l in xs and n in ys
    )


def calculus_check(universe: ClosureUniverse, samples: int = 100,
                   seed: int = 0) -> dict:
    """Sampled identities of the subcategory calculus inside the universe.

    Checks quot(sub(X)) == sub(quot(X)), star associativity, and the
    sub/quot distribution inclusions over star; reports violations with
    witnesses.
    """
    rng = random.Random(seed)
    size = len(universe.members)
    zero = universe.zero_index
    violations = []

    def sample_set() -> frozenset:
        picks = frozenset(
            i for i in range(size) if rng.random() < 0.5
        )
        return picks | {zero}

    for trial in range(samples):
        x, y, z = sample_set(), sample_set(), sample_set()
        if _closed_quot(universe, _closed_sub(universe, x)) != _closed_sub(
            universe, _closed_quot(universe, x)
        ):
            violations.append(("sub-quot exchange", trial, sorted(x)))
        lhs = _star(universe, _star(universe, x, y), z)
        rhs = _star(universe, x, _star(universe, y, z))
        if lhs != rhs:
            violations.append(
                ("star associativity", trial, sorted(x), sorted(y), sorted(z))
            )
        sxy = _star(universe, x, y)
        if not _closed_sub(universe, sxy) <= _star(
            universe, _closed_sub(universe, x), _closed_sub(universe, y)
        ):
            violations.append(("sub over star", trial, sorted(x), sorted(y)))
        if not _closed_quot(universe, sxy) <= _star(
            universe, _closed_quot(universe, x), _closed_quot(universe, y)
        ):
            violations.append(("quot over star", trial, sorted(x), sorted(y)))
    return {
        "samples": samples,
        "universe_size": size,
        "violations": violations,
        "passed": not violations,
    }


def universe_supports(universe: ClosureUniverse,
                      spec: AtomSpectrum) -> tuple[frozenset, ...]:
    return tuple(
        atom_support(spec, member) for member in universe.members
    )

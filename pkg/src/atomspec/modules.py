"""Finite right modules over a FiniteRing.

Modules carry full addition and action tables.  Submodules are plain
frozensets of element ids of their parent; all submodule-producing
functions return such sets, and module-producing functions (quotient,
sub, direct sum) return fresh RightModule values with canonical element
enumeration so that equal constructions compare equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .rings import CapExceededError, FiniteRing, RingAxiomError

DEFAULT_LATTICE_CAP = 1 << 20

Submodule = frozenset  # frozenset[int] over parent element ids


class ModuleError(Exception):
    pass


class NotASubmoduleError(ModuleError):
    pass


@dataclass(frozen=True)
class RightModule:
    ring: FiniteRing
    order: int
    add: tuple[tuple[int, ...], ...]
    act: tuple[tuple[int, ...], ...]
    provenance: str = field(default="", compare=False)

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        tag = self.provenance or f"order {self.order}"
        return f"RightModule({tag} over {self.ring.name or self.ring.order})"


def validate_module(module: RightModule) -> RightModule:
    """Exhaustively check the abelian-group and right-module axioms."""
    m, n = module.order, module.ring.order
    add, act = module.add, module.act
    radd, rmul = module.ring.add, module.ring.mul
    one = module.ring.one
    for x in range(m):
        if add[0][x] != x:
            raise RingAxiomError("module additive identity", (0, x))
        if 0 not in add[x]:
            raise RingAxiomError("module additive inverse", (x,))
        if act[x][one] != x:
            raise RingAxiomError("unit acts as identity", (x,))
    for x in range(m):
        for y in range(m):
            if add[x][y] != add[y][x]:
                raise RingAxiomError("module additive commutativity", (x, y))
            for z in range(m):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise RingAxiomError("module additive associativity", (x, y, z))
    for x in range(m):
        for a in range(n):
            for b in range(n):
                if act[x][rmul[a][b]] != act[act[x][a]][b]:
                    raise RingAxiomError("action associativity", (x, a, b))
                if act[x][radd[a][b]] != add[act[x][a]][act[x][b]]:
                    raise RingAxiomError("action right distributivity", (x, a, b))
        for y in range(m):
            for a in range(n):
                if act[add[x][y]][a] != add[act[x][a]][act[y][a]]:
                    raise RingAxiomError("action left distributivity", (x, y, a))
    return module


@lru_cache(maxsize=None)
def regular_module(ring: FiniteRing) -> RightModule:
    """R as a right module over itself."""
    return RightModule(
        ring=ring, order=ring.order, add=ring.add, act=ring.mul,
        provenance="regular",
    )


def zero_module(ring: FiniteRing) -> RightModule:
    return RightModule(
        ring=ring, order=1, add=((0,),), act=(tuple(0 for _ in range(ring.order)),),
        provenance="zero",
    )


def is_submodule(module: RightModule, members: frozenset) -> bool:
    if 0 not in members:
        return False
    if any(not 0 <= x < module.order for x in members):
        return False
    add, act = module.add, module.act
    for x in members:
        for y in members:
            if add[x][y] not in members:
                return False
        for a in range(module.ring.order):
            if act[x][a] not in members:
                return False
    return True


def _additive_closure(module: RightModule, seed) -> frozenset:
    add = module.add
    members = {0}
    members.update(seed)
    queue = list(members)
    while queue:
        x = queue.pop()
        for y in tuple(members):
            s = add[x][y]
            if s not in members:
                members.add(s)
                queue.append(s)
    return frozenset(members)


def generated_submodule(module: RightModule, xs) -> frozenset:
    """Least submodule containing xs.

    The R-orbit of the generators is closed under the action, so the
    additive closure of the orbit is already a submodule.
    """
    act = module.act
    n = module.ring.order
    orbit = {act[x][a] for x in xs for a in range(n)}
    return _additive_closure(module, orbit)


def cyclic_submodule(module: RightModule, x: int) -> frozenset:
    return generated_submodule(module, (x,))


def submodule_sum(module: RightModule, a: frozenset, b: frozenset) -> frozenset:
    return _additive_closure(module, a | b)


@lru_cache(maxsize=None)
def submodule_lattice(
    module: RightModule, cap: int = DEFAULT_LATTICE_CAP
) -> tuple[frozenset, ...]:
    """All submodules, sorted by (cardinality, sorted element tuple).

    Computed as the join-closure of the cyclic submodules; every submodule
    is a sum of the cyclics it contains, so the closure is complete.
    """
    cyclics = {cyclic_submodule(module, x) for x in range(module.order)}
    cyclics.add(frozenset({0}))
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        current = frontier.pop()
        for other in tuple(found):
            join = submodule_sum(module, current, other)
            if join not in found:
                found.add(join)
                frontier.append(join)
                if len(found) > cap:
                    raise CapExceededError(
                        f"submodule lattice exceeded cap {cap} "
                        f"(blew up at {len(found)} submodules)"
                    )
    return tuple(sorted(found, key=submodule_key))


def submodule_key(members: frozenset) -> tuple:
    return (len(members), tuple(sorted(members)))


def quotient_module(
    module: RightModule, sub: frozenset
) -> tuple[RightModule, tuple[int, ...]]:
    """Quotient by a submodule, with the projection map element id -> coset id.

    Coset representatives are the minimal element id per coset; coset ids
    follow the sorted order of representatives, so the zero coset is id 0.
    """
    if not is_submodule(module, sub):
        raise NotASubmoduleError(
            f"{sorted(sub)} is not a submodule of {module!r}"
        )
    add, act = module.add, module.act
    m = module.order
    rep_of = [-1] * m
    reps = []
    for x in range(m):
        if rep_of[x] == -1:
            coset = {add[x][s] for s in sub}
            for y in coset:
                rep_of[y] = x
            reps.append(x)
    index = {rep: i for i, rep in enumerate(reps)}
    proj = tuple(index[rep_of[x]] for x in range(m))
    q_add = tuple(
        tuple(proj[add[r1][r2]] for r2 in reps) for r1 in reps
    )
    q_act = tuple(
        tuple(proj[act[r][a]] for a in range(module.ring.order)) for r in reps
    )
    quot = RightModule(
        ring=module.ring, order=len(reps), add=q_add, act=q_act,
        provenance=f"({module.provenance})/{sorted(sub)}",
    )
    return quot, proj


def sub_module(
    module: RightModule, sub: frozenset
) -> tuple[RightModule, tuple[int, ...]]:
    """A submodule as a standalone module, with the inclusion map new id -> old id."""
    if not is_submodule(module, sub):
        raise NotASubmoduleError(
            f"{sorted(sub)} is not a submodule of {module!r}"
        )
    incl = tuple(sorted(sub))
    index = {x: i for i, x in enumerate(incl)}
    s_add = tuple(
        tuple(index[module.add[x][y]] for y in incl) for x in incl
    )
    s_act = tuple(
        tuple(index[module.act[x][a]] for a in range(module.ring.order))
        for x in incl
    )
    new = RightModule(
        ring=module.ring, order=len(incl), add=s_add, act=s_act,
        provenance=f"sub{sorted(sub)} of ({module.provenance})",
    )
    return new, incl


def direct_sum(a: RightModule, b: RightModule) -> RightModule:
    """External direct sum; element (x, y) gets id x * |b| + y."""
    if a.ring != b.ring:
        raise ModuleError("direct sum needs modules over the same ring")
    nb = b.order
    order = a.order * nb

    def pid(x, y):
        return x * nb + y

    add = tuple(
        tuple(
            pid(a.add[x1][x2], b.add[y1][y2])
            for x2 in range(a.order) for y2 in range(nb)
        )
        for x1 in range(a.order) for y1 in range(nb)
    )
    act = tuple(
        tuple(pid(a.act[x][r], b.act[y][r]) for r in range(a.ring.order))
        for x in range(a.order) for y in range(nb)
    )
    return RightModule(
        ring=a.ring, order=order, add=add, act=act,
        provenance=f"({a.provenance})+({b.provenance})",
    )


def quotient(module: RightModule, sub: frozenset) -> RightModule:
    return quotient_module(module, sub)[0]


# ---------------------------------------------------------------------------
# annihilators

def annihilator(module: RightModule, x: int) -> frozenset:
    """Ann(x) = {a in R : x.a = 0}, a right ideal of the base ring."""
    row = module.act[x]
    return frozenset(a for a in range(module.ring.order) if row[a] == 0)


@lru_cache(maxsize=None)
def annihilator_set(module: RightModule) -> frozenset:
    """{Ann(x) : x nonzero in M}, deduplicated.

    Two modules share a common nonzero submodule iff their annihilator
    sets intersect: a shared u gives the same Ann(u) on both sides, and
    conversely Ann(x) = Ann(y) makes xR and yR isomorphic via the maps
    through R/Ann(x).  This turns subobject-sharing questions into finite
    set intersections.
    """
    return frozenset(annihilator(module, x) for x in range(1, module.order))


def shares_nonzero_submodule(a: RightModule, b: RightModule) -> bool:
    return bool(annihilator_set(a) & annihilator_set(b))


def embeds_in(small: RightModule, big: RightModule) -> bool:
    """Literal injective-homomorphism search; brute-force oracle for the
    annihilator-set reduction."""
    if small.order > big.order:
        return False
    for target in submodule_lattice(big):
        if len(target) != small.order:
            continue
        if is_isomorphic(small, sub_module(big, target)[0]):
            return True
    return False


# ---------------------------------------------------------------------------
# structure

def minimal_submodules(module: RightModule) -> list[frozenset]:
    """Minimal nonzero submodules; all of them are cyclic."""
    cyclics = {cyclic_submodule(module, x) for x in range(1, module.order)}
    cyclics.discard(frozenset({0}))
    return sorted(
        (c for c in cyclics
         if not any(o < c for o in cyclics if o != c)),
        key=submodule_key,
    )


def maximal_submodules(module: RightModule) -> list[frozenset]:
    lattice = submodule_lattice(module)
    full = frozenset(range(module.order))
    proper = [s for s in lattice if s != full]
    return sorted(
        (s for s in proper if not any(s < o for o in proper if o != s)),
        key=submodule_key,
    )


def is_uniform(module: RightModule) -> bool:
    """Nonzero, and any two nonzero submodules intersect nontrivially;
    equivalently there is exactly one minimal nonzero submodule."""
    if module.order == 1:
        return False
    return len(minimal_submodules(module)) == 1


def is_uniform_bruteforce(module: RightModule) -> bool:
    """Definitional pairwise-intersection check (debug oracle)."""
    if module.order == 1:
        return False
    nonzero = [s for s in submodule_lattice(module) if len(s) > 1]
    return all(
        len(a & b) > 1 for a in nonzero for b in nonzero
    )


def socle(module: RightModule) -> frozenset:
    """Sum of all minimal nonzero submodules (zero for the zero module)."""
    total = frozenset({0})
    for s in minimal_submodules(module):
        total = submodule_sum(module, total, s)
    return total


def simple_class_handle(module: RightModule) -> frozenset:
    """Iso-class handle for a simple module: its annihilator set.

    Simple modules are isomorphic iff they share a nonzero submodule,
    i.e. iff their annihilator sets intersect; both being generated by
    every nonzero element forces intersecting sets to be equal.
    """
    return annihilator_set(module)


def _chief_series_bottom_up(module: RightModule) -> list[frozenset]:
    """A maximal chain of submodules built from minimal submodules of the
    successive quotients; every factor is simple."""
    chain = [frozenset({0})]
    current = frozenset({0})
    full = frozenset(range(module.order))
    while current != full:
        quot, proj = quotient_module(module, current)
        minimal = minimal_submodules(quot)[0]
        current = frozenset(
            x for x in range(module.order) if proj[x] in minimal
        )
        chain.append(current)
    return chain


def _chief_series_top_down(module: RightModule) -> list[frozenset]:
    """Independent series strategy: strip maximal submodules from the top."""
    chain = [frozenset(range(module.order))]
    current = module
    # track member sets in the original module's ids
    to_parent = {i: i for i in range(module.order)}
    while current.order > 1:
        top = maximal_submodules(current)[0]
        parent_set = frozenset(to_parent[i] for i in top)
        chain.append(parent_set)
        current, incl = sub_module(current, top)
        to_parent = {i: to_parent[incl[i]] for i in range(current.order)}
    chain.reverse()
    return chain


def _series_factors(module: RightModule, chain: list[frozenset]) -> Counter:
    factors: Counter = Counter()
    for lower, upper in zip(chain, chain[1:]):
        upper_mod, incl = sub_module(module, upper)
        inner = frozenset(i for i in range(upper_mod.order) if incl[i] in lower)
        factor = quotient(upper_mod, inner)
        factors[simple_class_handle(factor)] += 1
    return factors


def composition_factors(module: RightModule) -> Counter:
    """Multiset of simple iso-class handles of a chief series."""
    if module.order == 1:
        return Counter()
    return _series_factors(module, _chief_series_bottom_up(module))


def composition_factors_top_down(module: RightModule) -> Counter:
    """Same multiset from an independent series (property-test oracle)."""
    if module.order == 1:
        return Counter()
    return _series_factors(module, _chief_series_top_down(module))


def composition_length(module: RightModule) -> int:
    return sum(composition_factors(module).values())


# ---------------------------------------------------------------------------
# isomorphism

def minimal_generating_sequence(module: RightModule) -> list[int]:
    """Greedy: repeatedly pick the smallest id outside the current span."""
    gens: list[int] = []
    span = frozenset({0})
    while len(span) < module.order:
        g = next(x for x in range(module.order) if x not in span)
        gens.append(g)
        span = submodule_sum(module, span, cyclic_submodule(module, g))
    return gens


def _close_map(module: RightModule, other: RightModule, phi: dict) -> dict | None:
    """Close a partial map under addition and action; None on conflict."""
    add_m, act_m = module.add, module.act
    add_n, act_n = other.add, other.act
    n_ring = module.ring.order
    queue = list(phi)
    while queue:
        x = queue.pop()
        fx = phi[x]
        for a in range(n_ring):
            d, v = act_m[x][a], act_n[fx][a]
            if d in phi:
                if phi[d] != v:
                    return None
            else:
                phi[d] = v
                queue.append(d)
        for y, fy in list(phi.items()):
            d, v = add_m[x][y], add_n[fx][fy]
            if d in phi:
                if phi[d] != v:
                    return None
            else:
                phi[d] = v
                queue.append(d)
    return phi


def is_isomorphic(a: RightModule, b: RightModule) -> bool:
    """Existence of a bijective module homomorphism.

    Backtracking over images of a minimal generating sequence of a,
    pruning candidates by annihilator equality.
    """
    if a.ring != b.ring:
        return False
    if a.order != b.order:
        return False
    if a.order == 1:
        return True
    ann_a = Counter(annihilator(a, x) for x in range(a.order))
    ann_b = Counter(annihilator(b, x) for x in range(b.order))
    if ann_a != ann_b:
        return False
    gens = minimal_generating_sequence(a)

    def search(i: int, phi: dict) -> bool:
        if i == len(gens):
            return len(phi) == a.order and len(set(phi.values())) == a.order
        g = gens[i]
        if g in phi:
            return search(i + 1, phi)
        need = annihilator(a, g)
        for y in range(b.order):
            if y in phi.values():
                continue
            if annihilator(b, y) != need:
                continue
            trial = _close_map(a, b, {**phi, g: y})
            if trial is not None and search(i + 1, trial):
                return True
        return False

    return search(0, _close_map(a, b, {0: 0}) or {0: 0})


# ---------------------------------------------------------------------------
# module spec mini-language

def parse_module_spec(ring: FiniteRing, text: str) -> RightModule:
    """Build a module from a spec string.

    Forms: ``regular``, ``quot:<ids>``, ``cyclic:<x>``, ``sub:<ids>``,
    ``sum:<spec>+<spec>`` where <ids> is a comma-separated element list.
    """
    text = text.strip()
    if text == "regular":
        return regular_module(ring)
    head, _, rest = text.partition(":")
    reg = regular_module(ring)
    if head == "quot":
        members = _parse_ids(ring, rest)
        if not is_submodule(reg, members):
            raise ModuleError(
                f"{sorted(members)} is not closed under addition and action"
            )
        mod = quotient(reg, members)
        return RightModule(
            ring=ring, order=mod.order, add=mod.add, act=mod.act,
            provenance=f"quot:{','.join(map(str, sorted(members)))}",
        )
    if head == "cyclic":
        x = _parse_id(ring, rest)
        mod, _ = sub_module(reg, cyclic_submodule(reg, x))
        return RightModule(
            ring=ring, order=mod.order, add=mod.add, act=mod.act,
            provenance=f"cyclic:{x}",
        )
    if head == "sub":
        members = _parse_ids(ring, rest)
        if not is_submodule(reg, members):
            raise ModuleError(
                f"{sorted(members)} is not closed under addition and action"
            )
        mod, _ = sub_module(reg, members)
        return RightModule(
            ring=ring, order=mod.order, add=mod.add, act=mod.act,
            provenance=f"sub:{','.join(map(str, sorted(members)))}",
        )
    if head == "sum":
        parts = rest.split("+")
        if len(parts) < 2:
            raise ModuleError("sum spec needs at least two summands")
        mods = [parse_module_spec(ring, p) for p in parts]
        out = mods[0]
        for nxt in mods[1:]:
            out = direct_sum(out, nxt)
        return RightModule(
            ring=ring, order=out.order, add=out.add, act=out.act,
            provenance=f"sum:{'+'.join(parts)}",
        )
    raise ModuleError(f"unknown module spec {text!r}")


def _parse_ids(ring: FiniteRing, text: str) -> frozenset:
    try:
        ids = frozenset(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError as exc:
        raise ModuleError(f"bad element list {text!r}") from exc
    for v in ids:
        if not 0 <= v < ring.order:
            raise ModuleError(f"element id {v} out of range 0..{ring.order - 1}")
    return ids


def _parse_id(ring: FiniteRing, text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise ModuleError(f"bad element id {text!r}") from exc
    if not 0 <= v < ring.order:
        raise ModuleError(f"element id {v} out of range 0..{ring.order - 1}")
    return v

"""Decision procedures for monoform modules and comonoform right ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .modules import (
    RightModule,
    annihilator,
    annihilator_set,
    composition_factors,
    cyclic_submodule,
    is_submodule,
    is_uniform,
    minimal_submodules,
    quotient,
    quotient_module,
    regular_module,
    simple_class_handle,
    socle,
    sub_module,
    submodule_lattice,
    submodule_sum,
)
from .rings import FiniteRing


class MonoformError(Exception):
    pass


@dataclass(frozen=True)
class Filtration:
    """Strictly increasing chain from zero to the full module, each factor
    cyclic, monoform, and isomorphic to R/p for its comonoform label p."""

    chain: tuple[frozenset, ...]
    labels: tuple[frozenset, ...]


@lru_cache(maxsize=None)
def is_monoform(module: RightModule) -> bool:
    """M nonzero and no nonzero submodule is shared between M and any M/N.

    Subobject sharing is decided by annihilator-set intersection.
    """
    if module.order == 1:
        return False
    ann_m = annihilator_set(module)
    for sub in submodule_lattice(module):
        if len(sub) == 1:
            continue
        if ann_m & annihilator_set(quotient(module, sub)):
            return False
    return True


@lru_cache(maxsize=None)
def monoform_oracle_artinian(module: RightModule) -> bool:
    """Socle criterion: simple socle whose iso class occurs exactly once
    among the composition factors.  Independent of is_monoform."""
    if module.order == 1:
        return False
    if len(minimal_submodules(module)) != 1:
        return False
    soc, _ = sub_module(module, socle(module))
    handle = simple_class_handle(soc)
    return composition_factors(module)[handle] == 1


@lru_cache(maxsize=None)
def is_comonoform(ring: FiniteRing, ideal: frozenset) -> bool:
    """Right ideal p with R/p monoform."""
    reg = regular_module(ring)
    if not is_submodule(reg, ideal):
        raise MonoformError(f"{sorted(ideal)} is not a right ideal")
    if len(ideal) == ring.order:
        raise MonoformError("the full ring is not a comonoform right ideal")
    return is_monoform(quotient(reg, ideal))


def is_completely_prime(ring: FiniteRing, ideal: frozenset) -> bool:
    """aI <= I and ab in I imply a in I or b in I, checked over all pairs."""
    reg = regular_module(ring)
    if not is_submodule(reg, ideal):
        raise MonoformError(f"{sorted(ideal)} is not a right ideal")
    if len(ideal) == ring.order:
        return False
    mul = ring.mul
    n = ring.order
    outside = [b for b in range(n) if b not in ideal]
    for a in outside:
        if any(mul[a][i] not in ideal for i in ideal):
            continue
        for b in outside:
            if mul[a][b] in ideal:
                return False
    return True


def monoform_filtration(module: RightModule) -> Filtration:
    """Chain with monoform cyclic factors, each isomorphic to R/p_i.

    Step i takes the smallest element id of M/L_{i-1} whose annihilator is
    comonoform; its cyclic submodule pulls back to L_i.
    """
    if module.order == 1:
        raise MonoformError("the zero module has no monoform filtration")
    ring = module.ring
    full = frozenset(range(module.order))
    chain = [frozenset({0})]
    labels = []
    current = chain[0]
    while current != full:
        quot, proj = quotient_module(module, current)
        step = None
        for x in range(1, quot.order):
            ann = annihilator(quot, x)
            if is_comonoform(ring, ann):
                step = (x, ann)
                break
        if step is None:
            # impossible for a nonzero finite module: some cyclic submodule
            # of every nonzero module is monoform
            raise AssertionError(
                "no comonoform annihilator found in a nonzero quotient"
            )
        x, ann = step
        piece = cyclic_submodule(quot, x)
        current = frozenset(
            e for e in range(module.order) if proj[e] in piece
        )
        chain.append(current)
        labels.append(ann)
    return Filtration(chain=tuple(chain), labels=tuple(labels))


def filtration_factor(module: RightModule, filt: Filtration, i: int) -> RightModule:
    """The i-th factor L_i / L_{i-1} as a standalone module."""
    upper, incl = sub_module(module, filt.chain[i + 1])
    inner = frozenset(
        j for j in range(upper.order) if incl[j] in filt.chain[i]
    )
    return quotient(upper, inner)


def max_monoform_submodule(module: RightModule) -> frozenset:
    """Unique maximal monoform submodule of a uniform module.

    Computed as the sum of all cyclic monoform submodules (every monoform
    submodule contains a cyclic monoform one), then verified monoform and
    verified to contain every monoform submodule of the full lattice.
    """
    if not is_uniform(module):
        raise MonoformError("maximal monoform submodule requires a uniform module")
    total = frozenset({0})
    for x in range(1, module.order):
        cyc = cyclic_submodule(module, x)
        if is_monoform(sub_module(module, cyc)[0]):
            total = submodule_sum(module, total, cyc)
    if not is_monoform(sub_module(module, total)[0]):
        raise AssertionError("sum of monoform submodules failed to be monoform")
    for sub in submodule_lattice(module):
        if len(sub) > 1 and is_monoform(sub_module(module, sub)[0]):
            if not sub <= total:
                raise AssertionError(
                    f"monoform submodule {sorted(sub)} escapes the computed maximum"
                )
    return total

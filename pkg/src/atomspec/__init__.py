"""Atom spectra of finite rings and the classification of Serre
subcategories of their finitely generated module categories."""

from .checks import check_suite
from .modules import (
    RightModule,
    annihilator,
    annihilator_set,
    composition_factors,
    cyclic_submodule,
    direct_sum,
    generated_submodule,
    is_isomorphic,
    is_uniform,
    parse_module_spec,
    quotient,
    quotient_module,
    regular_module,
    socle,
    sub_module,
    submodule_lattice,
)
from .monoform import (
    Filtration,
    is_comonoform,
    is_completely_prime,
    is_monoform,
    max_monoform_submodule,
    monoform_filtration,
    monoform_oracle_artinian,
)
from .rings import (
    FiniteRing,
    fp_algebra,
    mat,
    parse_ring_document,
    parse_ring_spec,
    product,
    serialize_ring,
    tri2,
    validate_ring,
    zmod,
)
from .serre import (
    ClosureUniverse,
    SerreSubcategory,
    build_universe,
    calculus_check,
    closure_oracle,
    enumerate_serre,
    hasse_dot,
    serre_contains,
    serre_from_generators,
)
from .spectrum import (
    Atom,
    AtomSpectrum,
    associated_atoms,
    atom_equivalent,
    atom_spectrum,
    atom_support,
    commutative_crosscheck,
    enumerate_open_sets,
    is_open,
)

__all__ = [name for name in dir() if not name.startswith("_")]

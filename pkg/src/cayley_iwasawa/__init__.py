"""Iwasawa invariants of Z_l-towers over Cayley graphs of finite abelian groups."""

from .abelian import FiniteAbelianGroup, characters, galois_orbits
from .complexity import complexity_det, kappa_ell_exponent, picard
from .cyclotomic import CycInt
from .ihara import artin_check, class_number_check, special_value_check, twisted_adjacency, zeta_inverse
from .iwasawa import (
    char_factor,
    char_invariants,
    complete_graph_invariants,
    iwasawa_series,
    tower_report,
    weierstrass_preparation,
)
from .localfield import build_local_field, embed, valuation
from .multigraph import Multigraph, build_cayley, validate_base
from .voltage import VoltageDatum, derived_graph, tower_connected, validate_voltage

__version__ = "0.1.0"

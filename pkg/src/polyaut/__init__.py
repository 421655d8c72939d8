"""Exact construction and classification of Q[z]-automorphisms of Q[x, y, z]."""

__version__ = "0.1.0"

from .autcore import PolyMap, compose, embed_3var, identity, is_elementary, verify_inverse
from .construct import ConstructionInput, ConstructionResult, build_pair, construct
from .coordcheck import coordinate_test_2var, coordinate_test_z, fiber_slice, slice_report
from .derivation import Derivation, apply_derivation, exp_map, jacobian_derivation, lnd_check
from .groebner import buchberger, contains_one, normal_form, s_polynomial
from .modring import bezout_cd, check_inverse_pair, ext_gcd, invert_mod_p, radical, reduce_mod_p
from .polycore import X, Y, Z, Polynomial, degree_in, exact_div, partial, substitute
from .tame import classify, decompose, equivalence_report, nagata, split_a, split_b
from .textio import parse_map, parse_poly, print_canonical, print_map

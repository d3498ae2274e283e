"""Exact orbifold Hirzebruch-Riemann-Roch for classifying stacks and weighted projective stacks."""

from .arith import Cyclotomic, CyclotomicZeroDivisionError, parse_cyclotomic, root_of_unity
from .groups import PermGroup, Representation, character_of, group_from_generators, hom_fixed_dim_oracle
from .inertia import InertiaClass, InertiaModel, Sector
from .mukai import euler_pairing, mukai_pairing, mukai_vector, verify_isometry
from .rings import KClass, KRing, SectorClass, exp_line, k_euler_class, kring_new, todd_line
from .stack_bg import BGInertia, CyclicBGModel, bg_euler_char, bg_euler_pairing, bg_orbch, dft, idft, parseval_check
from .stack_wps import (
    WPS,
    WPSModel,
    monomial_count_oracle,
    wps_euler_char,
    wps_integrate,
    wps_kring_relation,
    wps_orbch,
    wps_orbtd,
    wps_sectors,
)

__version__ = "0.1.0"

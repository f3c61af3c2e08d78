"""Exact left-covariant calculus, Hodge operators and Laplacians on SU_q(2) and the Podles sphere."""

from .scalar_field import QRational, evaluate_at, qpow
from .quantum_group import AlgebraElement, coproduct, haar, normal_form, star
from .enveloping import UEAElement, act_left, act_right
from .calculus import KForm, differential, maurer_cartan, sigma_matrix, wedge
from .hodge import Contraction, HodgeOperator, solve_T_from_inner_product

__version__ = "0.1.0"

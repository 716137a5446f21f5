"""Named two-operation identities.

``.`` is the dot operation, ``*`` the star operation.
"""
from functools import lru_cache

from .core import Identity, parse_identity

DOT_ASSOC = parse_identity("(x.y).z = x.(y.z)", "dot associativity")
STAR_ASSOC = parse_identity("(x*y)*z = x*(y*z)", "star associativity")
EQ_I = parse_identity("(x*y).((x.y)*z) = x*(y.z)", "(I)")
EQ_II = parse_identity("(x*y)*((x.y)*z) = y*z", "(II)")

LTD = parse_identity("(x.y)*z = x*z", "LTD")
RTD = parse_identity("(x.y)*z = y*z", "RTD")
FALSE_DISTRI = parse_identity("x*(y.z) = (x*y).(y*z)", "x*(y.z) = (x*y).(y*z)")
LEFT_DISTRI = parse_identity("x*(y.z) = (x*y).(x*z)", "left distributivity")

STAR_RIGHT_NORMAL = parse_identity("x*y*z = y*x*z", "right-normal")
STAR_LEFT_NORMAL = parse_identity("x*y*z = x*z*y", "left-normal")
STAR_COMMUTATIVE = parse_identity("x*y = y*x", "commutative")
STAR_BAND = parse_identity("x*x = x", "band")
R_LAW = parse_identity("x^2*z = z", "(R)")
CDOT_211 = parse_identity("x.y.z = y.z", "x.y.z = y.z")

# Translation relations that hold in every APA.
REL = parse_identity("x*w = y*(x*((y.x)*w))", "theta_x = theta_y theta_x theta_{y.x}")
REL4 = parse_identity("(x.y)*(z*w) = y*(z*(x*((y.z)*w)))",
                      "theta_{x.y} theta_z = theta_y theta_z theta_x theta_{y.z}")


@lru_cache(maxsize=None)
def p_law(k: int) -> Identity:
    """``x * y^k * z = x * z``."""
    return parse_identity(f"x*y^{k}*z = x*z", f"P_{k}")


@lru_cache(maxsize=None)
def q_law(k: int) -> Identity:
    """``x * y^k * z = y * z``."""
    return parse_identity(f"x*y^{k}*z = y*z", f"Q_{k}")

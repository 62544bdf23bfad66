"""
Vizing-type lower bounds on γ(G □ H), evaluated in exact rational arithmetic.
"""
import dataclasses
from fractions import Fraction
from typing import Optional

from vizingdom import settings
from vizingdom.classify import ClassProfile
from vizingdom.errors import DomainError


def _require_positive(**values: int):
    for name, value in values.items():
        if value < 1:
            raise DomainError(f'{name} must be at least 1, got {value}')


def vizing_bound(gamma_g: int, gamma_h: int) -> Fraction:
    return Fraction(gamma_g * gamma_h)


def suen_tarr_bound(gamma_g: int, gamma_h: int) -> Fraction:
    _require_positive(gamma_g=gamma_g, gamma_h=gamma_h)
    return Fraction(gamma_g * gamma_h + min(gamma_g, gamma_h), 2)


def power_coefficient(pi: int) -> Fraction:
    _require_positive(pi=pi)
    return Fraction(pi, 2 * pi - 1)


def power_bound(pi_g: int, gamma_g: int, gamma_h: int) -> Fraction:
    return power_coefficient(pi_g) * gamma_g * gamma_h


def clique_p5_coefficient(r: int) -> Fraction:
    return Fraction(r - 1, 2 * r - 3)


def diameter_bound(diam_g: int, gamma_h: int) -> Fraction:
    if diam_g < 0:
        raise DomainError(f'Diameter must be nonnegative, got {diam_g}')
    return Fraction((diam_g // 3 + 1) * gamma_h)


def fair_bound(gamma_g: int, gamma_f_g: int, gamma_h: int, gamma_f_h: int) -> Fraction:
    return Fraction(max(gamma_g * gamma_f_h, gamma_f_g * gamma_h))


def critical_subgraph_satisfied(gamma_product: int, gamma_g: int, gamma_h: int) -> bool:
    """
    gamma_product >= (γ(G) - sqrt(γ(G))) γ(H), decided without floating point:
    with x = γ(G) - gamma_product / γ(H) the inequality reads x <= sqrt(γ(G)).
    """
    x = gamma_g - Fraction(gamma_product, gamma_h)
    return x <= 0 or x * x <= gamma_g


def critical_subgraph_approximation(gamma_g: int, gamma_h: int) -> Fraction:
    """
    Presentation value rounded to 4 decimals; verdicts use critical_subgraph_satisfied
    """
    return Fraction(round((gamma_g - gamma_g ** 0.5) * gamma_h, 4)).limit_denominator(10 ** 4)


@dataclasses.dataclass(frozen=True)
class ClassBound:
    name: str
    value: Fraction
    applicable: bool

    """
    The r of K_{1,r} or K_r the bound was taken from, None when not applicable
    """
    r: Optional[int] = None


def class_bounds(profile: ClassProfile, gamma_g: int, gamma_h: int, r_max: Optional[int] = None,
                 connected: bool = True) -> list[ClassBound]:
    """
    Class power bounds: triangle and K_{1,r}-free G gives r/(2r-1) γγ, K_r and P_5-free G gives (r-1)/(2r-3) γγ.
    The smallest qualifying r gives the strongest bound. The K_r route starts at r = 4 and,
    resting on dominating cliques of connected P_5-free graphs, needs a connected G.
    """
    r_max = min(profile.r_max, settings.R_MAX if r_max is None else r_max)
    product = gamma_g * gamma_h
    out = []

    star_r = None
    if profile.triangle_free:
        star_r = next((r for r in range(2, r_max + 1) if profile.star_free[r]), None)
    out.append(ClassBound(
        name='triangle_star',
        value=power_coefficient(star_r) * product if star_r else Fraction(0),
        applicable=star_r is not None,
        r=star_r,
    ))

    clique_r = None
    if connected and profile.path_free[5]:
        clique_r = next((r for r in range(4, r_max + 1) if profile.k_free[r]), None)
    out.append(ClassBound(
        name='clique_p5',
        value=clique_p5_coefficient(clique_r) * product if clique_r else Fraction(0),
        applicable=clique_r is not None,
        r=clique_r,
    ))
    return out


def render_decimal(value: Fraction) -> str:
    return f'{float(value):.4f}'

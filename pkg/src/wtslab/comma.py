"""Pointed systems: the comma category under the one-state system ``{ι}``.

Everything here is computed through the generic pushout, with ``i`` the
one-state system; because ``Cyl({ι}) = {ι}`` the pointed cylinder has the
same underlying system as the plain one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .colimits import codiagonal, copair, coproduct, coproduct_map, mediate, pushout
from .core import (DEFAULT_BUDGET, ShapeError, WeakTransitionSystem, WtsMorphism, compose,
                   enum_homs, find_isomorphism, first_hom, identity, pinned_through)
from .cylinder import cocyl_map, cyl, cyl_map, transpose
from .fixtures import PT

POINT = PT.states[0]


@dataclass(frozen=True)
class PointedWts:
    base: WeakTransitionSystem
    point: str

    def __post_init__(self):
        if self.point not in self.base.states:
            raise ShapeError(f"basepoint {self.point!r} is not a state")

    @property
    def structure_map(self) -> WtsMorphism:
        """``{ι} -> X``."""
        return WtsMorphism(PT, self.base, {POINT: self.point}, {})


@dataclass(frozen=True)
class PointedMorphism:
    source: PointedWts
    target: PointedWts
    underlying: WtsMorphism

    def __post_init__(self):
        u = self.underlying
        if u.source != self.source.base or u.target != self.target.base:
            raise ShapeError("underlying map has the wrong endpoints")
        if u.state_map[self.source.point] != self.target.point:
            raise ShapeError("map does not preserve the basepoint")


def pointed_from_structure(e: WtsMorphism) -> PointedWts:
    return PointedWts(e.target, e.state_map[POINT])


def pointed_compose(g: PointedMorphism, f: PointedMorphism) -> PointedMorphism:
    return PointedMorphism(f.source, g.target, compose(g.underlying, f.underlying))


def pointed_homs(p: PointedWts, q: PointedWts, budget: int = DEFAULT_BUDGET, **constraints):
    fixed = dict(constraints.pop("fixed_states", {}))
    if fixed.get(p.point, q.point) != q.point:
        return []
    fixed[p.point] = q.point
    return [PointedMorphism(p, q, f)
            for f in enum_homs(p.base, q.base, budget, fixed_states=fixed, **constraints)]


def find_pointed_isomorphism(p: PointedWts, q: PointedWts) -> PointedMorphism | None:
    f = find_isomorphism(p.base, q.base, fixed_states={p.point: q.point})
    return PointedMorphism(p, q, f) if f is not None else None


# -- free pointing and forgetting -------------------------------------------

def rho(x: WeakTransitionSystem) -> PointedWts:
    """``{ι} + X`` pointed at the new state."""
    c = coproduct(PT, x)
    return PointedWts(c.object, c.in1.state_map[POINT])


def rho_map(f: WtsMorphism) -> PointedMorphism:
    return PointedMorphism(rho(f.source), rho(f.target), coproduct_map(identity(PT), f))


def rho_injection(x: WeakTransitionSystem) -> WtsMorphism:
    """Unit ``X -> omega(rho X)``."""
    return coproduct(PT, x).in2


def omega(p: PointedWts) -> WeakTransitionSystem:
    return p.base


free_pointing = rho
forget_point = omega


def rho_adjunct(x: WeakTransitionSystem, h: WtsMorphism, q: PointedWts) -> PointedMorphism:
    """``h: X -> omega Q`` to the pointed map ``rho X -> Q``."""
    c = coproduct(PT, x)
    return PointedMorphism(rho(x), q, copair(c, q.structure_map, h))


def pointed_coproduct(p: PointedWts, q: PointedWts) -> PointedWts:
    po = pushout(p.structure_map, q.structure_map)
    return pointed_from_structure(po.from_apex)


# -- pointed cylinder and path object ---------------------------------------

@dataclass(frozen=True)
class PointedCylinder:
    obj: PointedWts
    gamma0: PointedMorphism
    gamma1: PointedMorphism
    sigma: PointedMorphism
    projection: WtsMorphism  # p_X : Cyl X -> omega(cyl_pt X)


def cyl_pt(p: PointedWts) -> PointedCylinder:
    """Pushout of ``sigma_i: Cyl i -> i`` along ``Cyl(i -> X)``."""
    e = p.structure_map
    ci, cx = cyl(PT), cyl(p.base)
    po = pushout(cyl_map(e), ci.sigma)
    obj = pointed_from_structure(po.leg2)
    proj = po.leg1
    g0 = PointedMorphism(p, obj, compose(proj, cx.gamma0))
    g1 = PointedMorphism(p, obj, compose(proj, cx.gamma1))
    sig = PointedMorphism(obj, p, mediate([po.leg1, po.leg2], [cx.sigma, e]))
    return PointedCylinder(obj, g0, g1, sig, proj)


def cocyl_pt(q: PointedWts) -> PointedWts:
    """``i -> Cocyl(i) -> Cocyl(Y)``, the first map being adjoint to ``sigma_i``."""
    unit = transpose(cyl(PT).sigma, PT)
    e = q.structure_map
    return pointed_from_structure(compose(cocyl_map(e), unit))


def pointed_transpose(f: PointedMorphism, p: PointedWts) -> PointedMorphism:
    """``cyl_pt P -> Q`` to ``P -> cocyl_pt Q``."""
    c = cyl_pt(p)
    g = transpose(compose(f.underlying, c.projection), p.base)
    return PointedMorphism(p, cocyl_pt(f.target), g)


# -- property verifiers ------------------------------------------------------

def pointed_injectivity_counterexample(q: PointedWts, s: WtsMorphism, budget: int = DEFAULT_BUDGET):
    """Pointed maps ``rho A -> Q`` not extending along ``rho(s)``."""
    rs = rho_map(s)
    for h in pointed_homs(rs.source, q, budget):
        pins = pinned_through([(rs.underlying, h.underlying)])
        if pins is None or first_hom(rs.target.base, q.base, node_budget=budget, **pins) is None:
            return h
    return None


def check_l1(s: WtsMorphism, p: PointedWts, budget: int = DEFAULT_BUDGET) -> bool:
    """Pointed injectivity against ``rho(s)`` agrees with injectivity of the
    underlying system against ``s``."""
    from .lifting import injectivity_counterexample
    plain = injectivity_counterexample(p.base, [s], budget) is None
    pointed = pointed_injectivity_counterexample(p, s, budget) is None
    return plain == pointed


def check_l3(a: WeakTransitionSystem) -> PointedMorphism | None:
    """Pointed isomorphism ``cyl_pt(rho A) -> rho(Cyl A)``."""
    return find_pointed_isomorphism(cyl_pt(rho(a)).obj, rho(cyl(a).obj))


def check_l4(p: PointedWts) -> bool:
    """The two pushouts along the codiagonal of ``i + i`` give ``X +_i X`` and ``X``."""
    e = p.structure_map
    nabla = codiagonal(PT)
    first = pushout(nabla, coproduct_map(e, e))
    glued = pointed_coproduct(p, p)
    ok1 = find_pointed_isomorphism(pointed_from_structure(first.leg1), glued) is not None
    ii = coproduct(PT, PT)
    second = pushout(nabla, copair(ii, e, e))
    ok2 = find_pointed_isomorphism(pointed_from_structure(second.leg1), p) is not None
    return ok1 and ok2


def is_epi_on_carriers(f: WtsMorphism) -> bool:
    """Surjective on states and actions (sufficient for an epimorphism)."""
    return (set(f.state_map.values()) == set(f.target.states)
            and set(f.action_map.values()) == set(f.target.actions))


def check_gamma_point_epic() -> bool:
    return is_epi_on_carriers(cyl(PT).gamma)


def split_section(p: WtsMorphism, budget: int = DEFAULT_BUDGET) -> WtsMorphism | None:
    """``s`` with ``p s = id``, by exhaustive search over preimages."""
    pre_s = {y: [x for x in p.source.states if p.state_map[x] == y] for y in p.target.states}
    pre_a = {y: [x for x in p.source.actions if p.action_map[x] == y] for y in p.target.actions}
    return first_hom(p.target, p.source, node_budget=budget, allowed_states=pre_s, allowed_actions=pre_a)


def underlying_cylinder_matches(p: PointedWts) -> bool:
    """``omega(cyl_pt P)`` is literally ``Cyl(omega P)``."""
    c = cyl_pt(p)
    return c.obj.base == cyl(p.base).obj and c.projection == identity(cyl(p.base).obj)


def pointed_pushout(f: PointedMorphism, g: PointedMorphism) -> tuple[PointedWts, PointedMorphism, PointedMorphism]:
    """Pushout in the pointed category, computed on underlying systems."""
    po = pushout(f.underlying, g.underlying)
    obj = pointed_from_structure(compose(po.leg1, f.target.structure_map))
    return obj, PointedMorphism(f.target, obj, po.leg1), PointedMorphism(g.target, obj, po.leg2)


def pointed_pushout_counterexample(f: PointedMorphism, g: PointedMorphism,
                                   tests: Iterable[PointedWts], budget: int = DEFAULT_BUDGET):
    """Universal property of :func:`pointed_pushout` against pointed cocones."""
    obj, l1, l2 = pointed_pushout(f, g)
    for z in tests:
        for h1 in pointed_homs(f.target, z, budget):
            hf = compose(h1.underlying, f.underlying)
            for h2 in pointed_homs(g.target, z, budget):
                if compose(h2.underlying, g.underlying) != hf:
                    continue
                pins = pinned_through([(l1.underlying, h1.underlying), (l2.underlying, h2.underlying)])
                n = 0 if pins is None else len(pointed_homs(obj, z, budget, **pins))
                if n != 1:
                    return {"test": z, "h1": h1, "h2": h2, "count": n}
    return None


def rho_star_commutes(f: WtsMorphism, eps: int | None = None) -> bool:
    """``rho(f) * gamma`` in the pointed category matches ``rho(f * gamma)``
    as arrows (compared by an arrow isomorphism)."""
    from .lifting import arrows_isomorphic, star, star_eps
    rf = rho_map(f)
    plain = star(f) if eps is None else star_eps(f, eps)
    lhs = pointed_star(rf, eps)
    rhs = rho_map(plain)
    return arrows_isomorphic(lhs.underlying, rhs.underlying)


def pointed_star(f: PointedMorphism, eps: int | None = None) -> PointedMorphism:
    """The corner map ``f * gamma^eps`` (or ``f * gamma``) built with ``cyl_pt``."""
    cx, cy = cyl_pt(f.source), cyl_pt(f.target)
    cyl_f = _cyl_pt_map(f, cx, cy)
    if eps is None:
        sp = pointed_coproduct(f.source, f.source)
        tp = pointed_coproduct(f.target, f.target)
        gx = _pointed_copair(f.source, f.source, sp, cx.gamma0, cx.gamma1)
        gy = _pointed_copair(f.target, f.target, tp, cy.gamma0, cy.gamma1)
        ff = _pointed_copair(f.source, f.source, sp,
                             _pointed_in(f.target, f.target, tp, 1, f),
                             _pointed_in(f.target, f.target, tp, 2, f))
        po = pushout(gx.underlying, ff.underlying)
        m = mediate([po.leg1, po.leg2], [cyl_f, gy.underlying])
        apex = sp.structure_map
    else:
        gx = cx.gamma1 if eps else cx.gamma0
        gy = cy.gamma1 if eps else cy.gamma0
        po = pushout(gx.underlying, f.underlying)
        m = mediate([po.leg1, po.leg2], [cyl_f, gy.underlying])
        apex = f.source.structure_map
    src = pointed_from_structure(compose(po.from_apex, apex))
    return PointedMorphism(src, cy.obj, m)


def _cyl_pt_map(f: PointedMorphism, cx: PointedCylinder, cy: PointedCylinder) -> WtsMorphism:
    inner = compose(cy.projection, cyl_map(f.underlying))
    return mediate([cx.projection, _point_leg(cx)], [inner, cy.obj.structure_map])


def _point_leg(c: PointedCylinder) -> WtsMorphism:
    return c.obj.structure_map


def _pointed_coproduct_legs(p: PointedWts, q: PointedWts):
    po = pushout(p.structure_map, q.structure_map)
    return po


def _pointed_copair(p, q, pq, h1: PointedMorphism, h2: PointedMorphism) -> PointedMorphism:
    po = _pointed_coproduct_legs(p, q)
    return PointedMorphism(pq, h1.target, mediate([po.leg1, po.leg2], [h1.underlying, h2.underlying]))


def _pointed_in(p, q, pq, side: int, f: PointedMorphism) -> PointedMorphism:
    po = _pointed_coproduct_legs(p, q)
    leg = po.leg1 if side == 1 else po.leg2
    return PointedMorphism(f.source, pq, compose(leg, f.underlying))

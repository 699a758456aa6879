"""Lifting problems, the pushout-corner map ``f * gamma`` and Λ-families."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .colimits import coproduct_map, mediate, pushout
from .core import (DEFAULT_BUDGET, BudgetExceeded, ShapeError, WeakTransitionSystem, WtsMorphism,
                   compose, enum_homs, find_isomorphism, first_hom, is_cofibration, pinned_through)
from .cylinder import cyl, cyl_map

__all__ = ["ArrowFamily", "LiftCertificate", "is_cofibration", "has_lift", "lifting_counterexample",
           "star_eps", "star", "lambda_up_to", "is_injective", "injectivity_counterexample",
           "is_fibrant_up_to", "arrows_isomorphic", "extensions"]


@dataclass(frozen=True)
class ArrowFamily:
    arrows: tuple[WtsMorphism, ...]
    role: str = "I"  # "I", "S" or "Lambda<n>"

    def __iter__(self):
        return iter(self.arrows)

    def __len__(self):
        return len(self.arrows)


@dataclass(frozen=True)
class LiftCertificate:
    f: WtsMorphism
    g: WtsMorphism
    top: WtsMorphism
    bottom: WtsMorphism
    lift: WtsMorphism | None

    def __bool__(self):
        return self.lift is not None

    def verify(self) -> bool:
        if self.lift is None:
            return False
        return compose(self.lift, self.f) == self.top and compose(self.g, self.lift) == self.bottom


def has_lift(f: WtsMorphism, g: WtsMorphism, top: WtsMorphism, bottom: WtsMorphism,
             node_budget: int | None = DEFAULT_BUDGET) -> LiftCertificate:
    """Search ``l: B -> X`` with ``l f = top`` and ``g l = bottom``."""
    if not (top.source == f.source and top.target == g.source
            and bottom.source == f.target and bottom.target == g.target):
        raise ShapeError("has_lift: maps do not form a square")
    if compose(g, top) != compose(bottom, f):
        raise ShapeError("has_lift: square does not commute")
    pins = pinned_through([(f, top)])
    lift = None
    if pins is not None:
        b, x = f.target, g.source
        pre_s = {s: [v for v in x.states if g.state_map[v] == bottom.state_map[s]] for s in b.states}
        pre_a = {u: [v for v in x.actions if g.action_map[v] == bottom.action_map[u]] for u in b.actions}
        lift = first_hom(b, x, node_budget=node_budget, allowed_states=pre_s,
                         allowed_actions=pre_a, **pins)
    return LiftCertificate(f, g, top, bottom, lift)


def lifting_counterexample(f: WtsMorphism, g: WtsMorphism, budget: int = DEFAULT_BUDGET):
    """First commuting square from ``f`` to ``g`` without a diagonal, or None."""
    for bottom in enum_homs(f.target, g.target, budget):
        bf = compose(bottom, f)
        for top in enum_homs(f.source, g.source, budget):
            if compose(g, top) == bf and not has_lift(f, g, top, bottom):
                return top, bottom
    return None


def star_eps(f: WtsMorphism, eps: int) -> WtsMorphism:
    """``f * gamma^eps : Y +_X Cyl X -> Cyl Y``."""
    cx, cy = cyl(f.source), cyl(f.target)
    po = pushout(cx.gamma_eps(eps), f)
    return mediate([po.leg1, po.leg2], [cyl_map(f), cy.gamma_eps(eps)])


def star(f: WtsMorphism) -> WtsMorphism:
    """``f * gamma : (Y + Y) +_(X + X) Cyl X -> Cyl Y``."""
    cx, cy = cyl(f.source), cyl(f.target)
    po = pushout(cx.gamma, coproduct_map(f, f))
    return mediate([po.leg1, po.leg2], [cyl_map(f), cy.gamma])


def arrows_isomorphic(f: WtsMorphism, g: WtsMorphism, node_budget: int | None = DEFAULT_BUDGET) -> bool:
    """Isomorphic in the arrow category: isos ``h, k`` with ``k f = g h``."""
    for h in _isos(f.source, g.source, node_budget):
        pins = pinned_through([(f, compose(g, h))])
        if pins is not None and find_isomorphism(f.target, g.target, node_budget, **pins) is not None:
            return True
    return False


def _isos(x, y, node_budget):
    from .core import Search
    if (len(x.states), len(x.actions), len(x.transitions)) != (len(y.states), len(y.actions), len(y.transitions)):
        return iter(())
    return iter(Search(x, y, injective=True, node_budget=node_budget))


def _dedup(arrows: Iterable[WtsMorphism], up_to_iso: bool) -> list[WtsMorphism]:
    out: list[WtsMorphism] = []
    for a in arrows:
        if a in out:
            continue
        if up_to_iso:
            try:
                if any(arrows_isomorphic(a, b) for b in out):
                    continue
            except BudgetExceeded:
                pass  # keep verbatim
        out.append(a)
    return out


def lambda_up_to(i_family: Iterable[WtsMorphism], s_family: Iterable[WtsMorphism], depth: int,
                 up_to_iso: bool = False) -> list[ArrowFamily]:
    """Stages ``Λ^0 .. Λ^depth``; duplicates are dropped within a stage."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    i_family, s_family = list(i_family), list(s_family)
    stage = _dedup(s_family + [star_eps(f, 0) for f in i_family]
                   + [star_eps(f, 1) for f in i_family], up_to_iso)
    stages = [ArrowFamily(tuple(stage), "Lambda0")]
    for k in range(1, depth + 1):
        stage = _dedup([star(f) for f in stage], up_to_iso)
        stages.append(ArrowFamily(tuple(stage), f"Lambda{k}"))
    return stages


def extensions(a: WtsMorphism, h: WtsMorphism, node_budget: int | None = DEFAULT_BUDGET):
    """First ``e`` with ``e a = h``, or None."""
    pins = pinned_through([(a, h)])
    if pins is None:
        return None
    return first_hom(a.target, h.target, node_budget=node_budget, **pins)


def injectivity_counterexample(t: WeakTransitionSystem, family: Iterable[WtsMorphism],
                               budget: int = DEFAULT_BUDGET):
    """``(arrow, h)`` with ``h: A -> T`` not extending along ``arrow``, or None."""
    for a in family:
        for h in enum_homs(a.source, t, budget):
            if extensions(a, h, budget) is None:
                return a, h
    return None


def is_injective(t: WeakTransitionSystem, family: Iterable[WtsMorphism], budget: int = DEFAULT_BUDGET) -> bool:
    return injectivity_counterexample(t, family, budget) is None


def is_fibrant_up_to(t: WeakTransitionSystem, i_family: Sequence[WtsMorphism],
                     s_family: Sequence[WtsMorphism], depth: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Injectivity against ``Λ^0 ∪ ... ∪ Λ^depth``; a necessary condition for fibrancy."""
    stages = lambda_up_to(i_family, s_family, depth)
    return all(is_injective(t, st, budget) for st in stages)

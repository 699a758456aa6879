"""Coproducts and pushouts of weak transition systems.

Carriers are computed as colimits of sets; transitions are the patching
closure of the union of the image transitions.  Each equivalence class is
named after its least member; plain ids are kept when they stay distinct,
otherwise every class of that carrier is named ``(k,id)`` with ``k`` the
side (1 or 2) it came from.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (DEFAULT_BUDGET, ShapeError, WeakTransitionSystem, WtsMorphism,
                   closure_transitions, enum_homs, first_hom, pinned_through, tup, validate,
                   is_morphism, compose)


@dataclass(frozen=True)
class Coproduct:
    object: WeakTransitionSystem
    in1: WtsMorphism
    in2: WtsMorphism


@dataclass(frozen=True)
class PushoutResult:
    object: WeakTransitionSystem
    leg1: WtsMorphism
    leg2: WtsMorphism
    from_apex: WtsMorphism
    span: tuple[WtsMorphism, WtsMorphism]


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the least element as root so that roots are representatives
            lo, hi = min(ri, rj), max(ri, rj)
            self.parent[hi] = lo


def _name_classes(tagged: list[tuple[str, str]], uf: _UnionFind) -> dict:
    reps = {e: uf.find(e) for e in tagged}
    roots = sorted(set(reps.values()))
    plain = [r[1] for r in roots]
    if len(set(plain)) == len(plain):
        naming = {r: r[1] for r in roots}
    else:
        naming = {r: tup(r[0], r[1]) for r in roots}
    return {e: naming[reps[e]] for e in tagged}


def _glue(x: WeakTransitionSystem, y: WeakTransitionSystem, state_pairs, action_pairs):
    """Quotient of ``x + y`` by the given identifications, then closure."""
    st = [("1", s) for s in x.states] + [("2", s) for s in y.states]
    ac = [("1", a) for a in x.actions] + [("2", a) for a in y.actions]
    ufs, ufa = _UnionFind(st), _UnionFind(ac)
    for p, q in state_pairs:
        ufs.union(("1", p), ("2", q))
    for p, q in action_pairs:
        ufa.union(("1", p), ("2", q))
    sname = _name_classes(st, ufs)
    aname = _name_classes(ac, ufa)
    labels = {}
    for side, sys in (("1", x), ("2", y)):
        for a, lab in sys.actions.items():
            n = aname[(side, a)]
            if labels.setdefault(n, lab) != lab:
                raise ShapeError("identified actions carry different labels")
    images = []
    for side, sys in (("1", x), ("2", y)):
        for t in sys.transitions:
            images.append((sname[(side, t.source)], tuple(aname[(side, a)] for a in t.body),
                           sname[(side, t.target)]))
    states = set(sname.values())
    obj = WeakTransitionSystem(states, labels, closure_transitions(images), x.sigma | y.sigma)
    leg1 = WtsMorphism(x, obj, {s: sname[("1", s)] for s in x.states},
                       {a: aname[("1", a)] for a in x.actions}, check=False)
    leg2 = WtsMorphism(y, obj, {s: sname[("2", s)] for s in y.states},
                       {a: aname[("2", a)] for a in y.actions}, check=False)
    return obj, leg1, leg2


def coproduct(x: WeakTransitionSystem, y: WeakTransitionSystem) -> Coproduct:
    return Coproduct(*_glue(x, y, (), ()))


def pushout(f: WtsMorphism, g: WtsMorphism) -> PushoutResult:
    """Pushout of the span ``X <-f- A -g-> Y``."""
    if f.source != g.source:
        raise ShapeError("pushout: the two maps need a common source")
    a = f.source
    obj, leg1, leg2 = _glue(f.target, g.target,
                            [(f.state_map[s], g.state_map[s]) for s in a.states],
                            [(f.action_map[u], g.action_map[u]) for u in a.actions])
    return PushoutResult(obj, leg1, leg2, compose(leg1, f), (f, g))


def mediate(legs: Iterable[WtsMorphism], maps: Iterable[WtsMorphism], check: bool = True) -> WtsMorphism:
    """The map out of a colimit determined by its values on jointly
    surjective legs; raises ShapeError when the maps disagree."""
    legs, maps = list(legs), list(maps)
    pins = pinned_through(zip(legs, maps))
    if pins is None:
        raise ShapeError("mediate: maps do not agree on the colimit")
    obj, tgt = legs[0].target, maps[0].target
    sm, am = pins["fixed_states"], pins["fixed_actions"]
    if set(sm) != set(obj.states) or set(am) != set(obj.actions):
        raise ShapeError("mediate: legs are not jointly surjective")
    return WtsMorphism(obj, tgt, sm, am, check=check)


def copair(c: Coproduct, h1: WtsMorphism, h2: WtsMorphism) -> WtsMorphism:
    return mediate([c.in1, c.in2], [h1, h2])


def coproduct_map(f: WtsMorphism, g: WtsMorphism) -> WtsMorphism:
    """``f + g`` between the canonical coproducts."""
    src = coproduct(f.source, g.source)
    tgt = coproduct(f.target, g.target)
    return copair(src, compose(tgt.in1, f), compose(tgt.in2, g))


def codiagonal(x: WeakTransitionSystem) -> WtsMorphism:
    from .core import identity
    c = coproduct(x, x)
    return copair(c, identity(x), identity(x))


def cocones(f: WtsMorphism, g: WtsMorphism, z: WeakTransitionSystem, budget: int = DEFAULT_BUDGET):
    """All pairs ``(h1, h2)`` into ``z`` with ``h1 f == h2 g``."""
    for h1 in enum_homs(f.target, z, budget):
        hf = compose(h1, f)
        for h2 in enum_homs(g.target, z, budget):
            if compose(h2, g) == hf:
                yield h1, h2


def verify_pushout_universal(p: PushoutResult, tests: Iterable[WeakTransitionSystem] | None = None,
                             budget: int = DEFAULT_BUDGET) -> bool:
    return pushout_counterexample(p, tests, budget) is None


def pushout_counterexample(p: PushoutResult, tests=None, budget: int = DEFAULT_BUDGET):
    """``None`` when ``p`` is a pushout of its span against every test object,
    otherwise a dict describing the failure."""
    f, g = p.span
    rep = validate(p.object)
    if not rep.ok:
        return {"reason": "object-invalid", "violations": [v.to_doc() for v in rep.violations]}
    for name, leg in (("leg1", p.leg1), ("leg2", p.leg2)):
        if not is_morphism(leg).ok:
            return {"reason": "leg-not-morphism", "leg": name}
    if compose(p.leg1, f) != compose(p.leg2, g):
        return {"reason": "square-not-commuting"}
    if tests is None:
        from .fixtures import SYSTEMS
        tests = list(SYSTEMS.values()) + [f.target, g.target, p.object]
    seen = set()
    for z in tests:
        if z in seen:
            continue
        seen.add(z)
        for h1, h2 in cocones(f, g, z, budget):
            pins = pinned_through([(p.leg1, h1), (p.leg2, h2)])
            count = 0
            if pins is not None:
                count = len(enum_homs(p.object, z, budget, **pins))
            if count != 1:
                return {"reason": "no-mediating-map" if count == 0 else "mediating-map-not-unique",
                        "test": z, "h1": h1, "h2": h2, "count": count}
    return None


def is_isomorphic(x, y) -> bool:
    from .core import find_isomorphism
    return find_isomorphism(x, y) is not None


__all__ = ["Coproduct", "PushoutResult", "coproduct", "pushout", "mediate", "copair",
           "coproduct_map", "codiagonal", "cocones", "verify_pushout_universal",
           "pushout_counterexample", "is_isomorphic", "first_hom"]

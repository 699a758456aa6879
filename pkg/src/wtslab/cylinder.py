"""The cylinder ``Cyl`` on weak transition systems and its right adjoint.

``Cyl X`` has the states of ``X`` and actions ``(u,0)``, ``(u,1)``; a
decorated tuple is a transition iff its undecorated version is one, for
every choice of decorations.  The path object ``Cocyl Y`` has actions the
label-compatible ordered pairs ``(u0,u1)``, and a tuple of pairs is a
transition iff every choice of components is a transition of ``Y``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .colimits import coproduct, copair
from .core import (DEFAULT_BUDGET, ShapeError, WeakTransitionSystem, WtsMorphism, canon,
                   compose, enum_homs, is_cofibration, tup)

EPS = ("0", "1")


@dataclass(frozen=True)
class CylinderPack:
    obj: WeakTransitionSystem
    gamma0: WtsMorphism
    gamma1: WtsMorphism
    gamma: WtsMorphism  # X + X -> Cyl X
    sigma: WtsMorphism

    def gamma_eps(self, eps: int) -> WtsMorphism:
        return self.gamma1 if int(eps) else self.gamma0


@dataclass(frozen=True)
class PathPack:
    obj: WeakTransitionSystem
    pi0: WtsMorphism
    pi1: WtsMorphism


def deco(u: str, eps) -> str:
    return tup(u, str(int(eps)))


def cyl_object(x: WeakTransitionSystem) -> WeakTransitionSystem:
    actions = {deco(u, e): lab for u, lab in x.actions.items() for e in EPS}
    ts = set()
    for t in x.transitions:
        for es in itertools.product(EPS, repeat=len(t.body)):
            ts.add(canon(t.source, (deco(u, e) for u, e in zip(t.body, es)), t.target))
    return WeakTransitionSystem(x.states, actions, ts, x.sigma)


def cyl(x: WeakTransitionSystem) -> CylinderPack:
    c = cyl_object(x)
    ids = {s: s for s in x.states}
    g0 = WtsMorphism(x, c, ids, {u: deco(u, 0) for u in x.actions})
    g1 = WtsMorphism(x, c, ids, {u: deco(u, 1) for u in x.actions})
    sigma = WtsMorphism(c, x, ids, {deco(u, e): u for u in x.actions for e in EPS})
    gamma = copair(coproduct(x, x), g0, g1)
    return CylinderPack(c, g0, g1, gamma, sigma)


def cyl_map(f: WtsMorphism) -> WtsMorphism:
    """``Cyl(f)``: ``(u,e) -> (f u, e)``."""
    return WtsMorphism(cyl_object(f.source), cyl_object(f.target), dict(f.state_map),
                       {deco(u, e): deco(v, e) for u, v in f.action_map.items() for e in EPS})


def cocyl_object(y: WeakTransitionSystem) -> WeakTransitionSystem:
    pairs = {}
    partners = {}
    for u0, lab in y.actions.items():
        partners[u0] = [u1 for u1, l1 in y.actions.items() if l1 == lab]
        for u1 in partners[u0]:
            pairs[tup(u0, u1)] = lab
    yt = y.transitions
    ts = set()
    for t in y.transitions:
        # every cocyl transition projects (all components 0) onto a transition of y
        for seconds in itertools.product(*(partners[u] for u in t.body)):
            slots = list(zip(t.body, seconds))
            if all(canon(t.source, (p[e] for p, e in zip(slots, es)), t.target) in yt
                   for es in itertools.product((0, 1), repeat=len(slots))):
                ts.add(canon(t.source, (tup(*p) for p in slots), t.target))
    return WeakTransitionSystem(y.states, pairs, ts, y.sigma)


def cocyl(y: WeakTransitionSystem) -> PathPack:
    p = cocyl_object(y)
    ids = {s: s for s in y.states}
    pi = [WtsMorphism(p, y, ids, {a: _pair(a)[e] for a in p.actions}) for e in (0, 1)]
    return PathPack(p, pi[0], pi[1])


def cocyl_map(g: WtsMorphism) -> WtsMorphism:
    """``Cocyl(g)``: ``(u0,u1) -> (g u0, g u1)``."""
    src, tgt = cocyl_object(g.source), cocyl_object(g.target)
    am = {}
    for a in src.actions:
        u0, u1 = _pair(a)
        am[a] = tup(g.action_map[u0], g.action_map[u1])
    return WtsMorphism(src, tgt, dict(g.state_map), am)


def _pair(a: str) -> tuple[str, str]:
    from .core import split_tup
    u0, u1 = split_tup(a)
    return u0, u1


def transpose(f: WtsMorphism, x: WeakTransitionSystem) -> WtsMorphism:
    """``f: Cyl X -> Y`` to ``g: X -> Cocyl Y`` with ``g(u) = (f(u,0), f(u,1))``."""
    if f.source != cyl_object(x):
        raise ShapeError("transpose: source of f is not Cyl X")
    p = cocyl_object(f.target)
    am = {u: tup(f.action_map[deco(u, 0)], f.action_map[deco(u, 1)]) for u in x.actions}
    return WtsMorphism(x, p, dict(f.state_map), am)


def untranspose(g: WtsMorphism, y: WeakTransitionSystem) -> WtsMorphism:
    """Inverse of :func:`transpose`."""
    if g.target != cocyl_object(y):
        raise ShapeError("untranspose: target of g is not Cocyl Y")
    c = cyl_object(g.source)
    am = {}
    for u, a in g.action_map.items():
        pr = _pair(a)
        for e in (0, 1):
            am[deco(u, e)] = pr[e]
    return WtsMorphism(c, y, dict(g.state_map), am)


def check_good(x: WeakTransitionSystem) -> bool:
    return is_cofibration(cyl(x).gamma)


def check_very_good(x: WeakTransitionSystem, cofibrations, budget: int = DEFAULT_BUDGET) -> bool:
    """``sigma_X`` has the right lifting property against each sampled map."""
    from .lifting import lifting_counterexample
    sigma = cyl(x).sigma
    return all(lifting_counterexample(f, sigma, budget) is None for f in cofibrations)


def check_cartesian(f: WtsMorphism) -> bool:
    """``f*gamma0``, ``f*gamma1`` and ``f*gamma`` are cofibrations (for a cofibration f)."""
    from .lifting import star, star_eps
    if not is_cofibration(f):
        raise ShapeError("check_cartesian expects a cofibration")
    return all(is_cofibration(m) for m in (star_eps(f, 0), star_eps(f, 1), star(f)))


def adjunction_pairs(x: WeakTransitionSystem, y: WeakTransitionSystem, budget: int = DEFAULT_BUDGET):
    """``(Hom(Cyl X, Y), Hom(X, Cocyl Y))`` enumerated independently."""
    return enum_homs(cyl_object(x), y, budget), enum_homs(x, cocyl_object(y), budget)


def sigma_gamma_is_codiagonal(x: WeakTransitionSystem) -> bool:
    from .colimits import codiagonal
    from .core import identity
    c = cyl(x)
    return (compose(c.sigma, c.gamma0) == identity(x) and compose(c.sigma, c.gamma1) == identity(x)
            and compose(c.sigma, c.gamma) == codiagonal(x))

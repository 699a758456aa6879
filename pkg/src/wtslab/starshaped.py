"""Reachability from the basepoint, star-shaped systems and their coreflection."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .comma import PointedMorphism, PointedWts, cyl_pt, pointed_homs
from .core import (DEFAULT_BUDGET, WeakTransitionSystem, WtsMorphism, first_hom,
                   is_cofibration, tup)


@dataclass(frozen=True)
class ReachabilitySet:
    states: frozenset[str]
    paths: dict = field(hash=False, compare=False)  # state -> tuple of transitions from the point

    def __contains__(self, s):
        return s in self.states


def reachable_states(p: PointedWts) -> ReachabilitySet:
    """Breadth-first search along transitions of every dimension."""
    paths = {p.point: ()}
    queue = deque([p.point])
    while queue:
        s = queue.popleft()
        for t in p.base.outgoing(s):
            if t.target not in paths:
                paths[t.target] = paths[s] + (t,)
                queue.append(t.target)
    return ReachabilitySet(frozenset(paths), paths)


def is_star_shaped(p: PointedWts) -> bool:
    return len(reachable_states(p).states) == len(p.base.states)


@dataclass(frozen=True)
class Coreflection:
    obj: PointedWts
    inclusion: PointedMorphism


def coreflect(p: PointedWts) -> Coreflection:
    """Reachable states, all actions, transitions with a reachable source."""
    reach = reachable_states(p).states
    x = p.base
    sub = WeakTransitionSystem(reach, x.actions, [t for t in x.transitions if t.source in reach], x.sigma)
    obj = PointedWts(sub, p.point)
    inc = WtsMorphism(sub, x, {s: s for s in sub.states}, {a: a for a in sub.actions})
    return Coreflection(obj, PointedMorphism(obj, p, inc))


def factor_through_coreflection(f: PointedMorphism, c: Coreflection, budget: int = DEFAULT_BUDGET):
    """All pointed maps ``g`` into the coreflection with ``inclusion . g = f``."""
    allowed_s = {s: [f.underlying.state_map[s]] for s in f.source.base.states}
    allowed_a = {a: [f.underlying.action_map[a]] for a in f.source.base.actions}
    return pointed_homs(f.source, c.obj, budget, allowed_states=allowed_s, allowed_actions=allowed_a)


# -- the small injectivity cone ---------------------------------------------

CONE_SOURCE_STATES = ("ι", "α")


@dataclass(frozen=True)
class ConeLeg:
    word: tuple[tuple[str, ...], ...]  # one multiset of labels per step
    leg: PointedMorphism


def _cone_source(sigma) -> PointedWts:
    return PointedWts(WeakTransitionSystem(CONE_SOURCE_STATES, {}, (), sigma), "ι")


def _label_steps(sigma, dim: int):
    labels = sorted(sigma)
    for n in range(1, dim + 1):
        yield from itertools.combinations_with_replacement(labels, n)


def cone_maps(sigma: Iterable[str], max_len: int, dim: int = 1,
              shared_actions: bool = False) -> list[ConeLeg]:
    """Legs of the cone from ``{ι, α}``: the collapse onto ``{ι}`` (the path
    of length 0) and the inclusions into linear paths ``ι -> ... -> α`` of
    length ``1..max_len`` whose steps are multisets of at most ``dim`` labels.

    Each body slot gets its own fresh action; with ``shared_actions`` the
    path instead has exactly one action per label.
    """
    sigma = frozenset(sigma)
    src = _cone_source(sigma)
    collapse_tgt = PointedWts(WeakTransitionSystem(["ι"], {}, (), sigma), "ι")
    legs = [ConeLeg((), PointedMorphism(src, collapse_tgt,
                                        WtsMorphism(src.base, collapse_tgt.base, {"ι": "ι", "α": "ι"}, {})))]
    steps = list(_label_steps(sigma, dim))
    for k in range(1, max_len + 1):
        for word in itertools.product(steps, repeat=k):
            legs.append(ConeLeg(word, _path_leg(src, word, sigma, shared_actions)))
    return legs


def _path_leg(src: PointedWts, word, sigma, shared: bool) -> PointedMorphism:
    k = len(word)
    names = ["ι"] + [f"p{j}" for j in range(1, k)] + ["α"]
    actions, ts = {}, []
    for j, labels in enumerate(word):
        body = []
        for slot, lab in enumerate(labels):
            a = lab if shared else tup(f"t{j + 1}", str(slot + 1))
            actions[a] = lab
            body.append(a)
        ts.append((names[j], tuple(body), names[j + 1]))
    path = PointedWts(WeakTransitionSystem(names, {l: l for l in sigma} if shared else actions, ts, sigma), "ι")
    return PointedMorphism(src, path, WtsMorphism(src.base, path.base, {"ι": "ι", "α": "α"}, {}))


@dataclass(frozen=True)
class ConeCheck:
    ok: bool
    witness: str | None = None  # image of α admitting no extension
    depth_limited: bool = False  # witness is reachable, only by longer/wider steps

    def __bool__(self):
        return self.ok


def cone_injectivity(p: PointedWts, sigma: Iterable[str] | None = None, max_len: int | None = None,
                     dim: int | None = None, shared_actions: bool = False,
                     node_budget: int | None = DEFAULT_BUDGET) -> ConeCheck:
    """Every pointed ``{ι, α} -> P`` extends along some cone leg.

    Defaults: the labels of ``P``, ``max_len = |states|`` and ``dim`` the
    largest transition dimension of ``P`` (at least 1).
    """
    x = p.base
    sigma = frozenset(sigma) if sigma is not None else x.sigma
    max_len = len(x.states) if max_len is None else max_len
    dim = max(x.max_dim, 1) if dim is None else dim
    legs = cone_maps(sigma, max_len, dim, shared_actions)
    for s in x.states:
        if not any(_extends(leg.leg, p, s, node_budget) for leg in legs):
            return ConeCheck(False, s, s in reachable_states(p).states)
    return ConeCheck(True)


def _extends(leg: PointedMorphism, p: PointedWts, image_alpha: str, node_budget) -> bool:
    tgt = leg.target.base
    fixed = {leg.underlying.state_map["ι"]: p.point}
    a = leg.underlying.state_map["α"]
    if fixed.setdefault(a, image_alpha) != image_alpha:
        return False
    return first_hom(tgt, p.base, node_budget=node_budget, fixed_states=fixed) is not None


def check_cyl_preserves_star(p: PointedWts) -> bool:
    """Star-shapedness of P implies that of its pointed cylinder."""
    return (not is_star_shaped(p)) or is_star_shaped(cyl_pt(p).obj)


def legs_are_cofibrations(legs: Iterable[ConeLeg]) -> bool:
    return all(is_cofibration(l.leg.underlying) for l in legs)

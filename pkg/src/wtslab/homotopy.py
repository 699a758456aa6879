"""Cylinder homotopies, homotopy classes and relative weak equivalences."""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (DEFAULT_BUDGET, ShapeError, WeakTransitionSystem, WtsMorphism, compose,
                   enum_homs, first_hom, pinned_through)
from .cylinder import cyl


@dataclass(frozen=True)
class HomotopyStep:
    homotopy: WtsMorphism  # Cyl X -> Y
    forward: bool  # True: H gamma0 = prev, H gamma1 = next


@dataclass(frozen=True)
class HomotopyWitness:
    f: WtsMorphism
    g: WtsMorphism
    maps: tuple[WtsMorphism, ...]  # f = maps[0], ..., maps[-1] = g
    chain: tuple[HomotopyStep, ...]

    def verify(self) -> bool:
        if self.maps[0] != self.f or self.maps[-1] != self.g or len(self.chain) != len(self.maps) - 1:
            return False
        c = cyl(self.f.source)
        for (a, b), step in zip(zip(self.maps, self.maps[1:]), self.chain):
            lo, hi = (a, b) if step.forward else (b, a)
            if compose(step.homotopy, c.gamma0) != lo or compose(step.homotopy, c.gamma1) != hi:
                return False
        return True


def find_elementary_homotopy(f: WtsMorphism, g: WtsMorphism,
                             node_budget: int | None = DEFAULT_BUDGET) -> WtsMorphism | None:
    """``H: Cyl X -> Y`` with ``H gamma0 = f`` and ``H gamma1 = g``."""
    if f.source != g.source or f.target != g.target:
        raise ShapeError("homotopy needs parallel maps")
    c = cyl(f.source)
    pins = pinned_through([(c.gamma0, f), (c.gamma1, g)])
    if pins is None:
        return None
    return first_hom(c.obj, f.target, node_budget=node_budget, **pins)


def homotopic(f: WtsMorphism, g: WtsMorphism, budget: int = DEFAULT_BUDGET) -> HomotopyWitness | None:
    """Shortest chain of elementary homotopies (either direction) from f to g."""
    if f == g:
        return HomotopyWitness(f, g, (f,), ())
    homs = enum_homs(f.source, f.target, budget)
    prev = {f: None}
    queue = deque([f])
    while queue:
        a = queue.popleft()
        for b in homs:
            if b in prev:
                continue
            h = find_elementary_homotopy(a, b)
            step = HomotopyStep(h, True) if h is not None else None
            if step is None:
                h = find_elementary_homotopy(b, a)
                step = HomotopyStep(h, False) if h is not None else None
            if step is None:
                continue
            prev[b] = (a, step)
            if b == g:
                maps, chain = [g], []
                cur = g
                while prev[cur] is not None:
                    p, st = prev[cur]
                    maps.append(p)
                    chain.append(st)
                    cur = p
                return HomotopyWitness(f, g, tuple(reversed(maps)), tuple(reversed(chain)))
            queue.append(b)
    return None


def homotopy_classes(x: WeakTransitionSystem, t: WeakTransitionSystem,
                     budget: int = DEFAULT_BUDGET) -> list[list[WtsMorphism]]:
    """``Hom(X, T)`` modulo the equivalence generated by elementary homotopy.

    Classes are ordered by their least member, which is listed first.
    """
    homs = enum_homs(x, t, budget)
    parent = list(range(len(homs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # elementary homotopies fix the state map, so only compare within groups
    groups: dict[tuple, list[int]] = {}
    for i, h in enumerate(homs):
        groups.setdefault(tuple(sorted(h.state_map.items())), []).append(i)
    for idxs in groups.values():
        for k, i in enumerate(idxs):
            for j in idxs[k + 1:]:
                if find(i) == find(j):
                    continue
                if (find_elementary_homotopy(homs[i], homs[j]) is not None
                        or find_elementary_homotopy(homs[j], homs[i]) is not None):
                    ri, rj = find(i), find(j)
                    parent[max(ri, rj)] = min(ri, rj)
    classes: dict[int, list[WtsMorphism]] = {}
    for i, h in enumerate(homs):
        classes.setdefault(find(i), []).append(h)
    return [classes[r] for r in sorted(classes)]


def _class_index(classes):
    return {h: k for k, cls in enumerate(classes) for h in cls}


def weq_counterexample(f: WtsMorphism, tests: Iterable[WeakTransitionSystem],
                       budget: int = DEFAULT_BUDGET):
    """None when precomposition with f is a bijection on homotopy classes
    into every test object; otherwise a dict naming the failing test."""
    for t in tests:
        cy = homotopy_classes(f.target, t, budget)
        cx = homotopy_classes(f.source, t, budget)
        ix = _class_index(cx)
        induced = {}
        for k, cls in enumerate(cy):
            images = {ix[compose(h, f)] for h in cls}
            if len(images) != 1:
                return {"test": t, "reason": "not-well-defined", "class": k}
            induced[k] = images.pop()
        if len(set(induced.values())) != len(induced):
            return {"test": t, "reason": "not-injective", "classes": (len(cy), len(cx))}
        if len(induced) != len(cx):
            return {"test": t, "reason": "not-surjective", "classes": (len(cy), len(cx))}
    return None


def is_weak_equiv_against(f: WtsMorphism, tests: Sequence[WeakTransitionSystem],
                          fibrancy: tuple | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    """Bijection ``Hom(Y,T)/~ -> Hom(X,T)/~`` for every supplied test ``T``.

    This is membership in the weak equivalences *relative to the tests*.
    With ``fibrancy=(I, S, depth)`` each test is checked to be fibrant up
    to that depth and a warning is issued otherwise.
    """
    if fibrancy is not None:
        from .lifting import is_fibrant_up_to
        i_fam, s_fam, depth = fibrancy
        for t in tests:
            if not is_fibrant_up_to(t, i_fam, s_fam, depth, budget):
                warnings.warn(f"test object {t!r} is not fibrant up to depth {depth}", stacklevel=2)
    return weq_counterexample(f, tests, budget) is None

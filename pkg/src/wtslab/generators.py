"""Exhaustive and random families of small pointed systems."""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .comma import PointedWts
from .core import DEFAULT_LABEL, WeakTransitionSystem, closure_transitions


def _bodies(actions: list[str], max_dim: int) -> list[tuple[str, ...]]:
    out = []
    for n in range(1, max_dim + 1):
        out += list(itertools.combinations_with_replacement(actions, n))
    return out


def pointed_family(max_states: int = 3, max_actions: int = 2, max_dim: int = 1,
                   max_transitions: int | None = None, label: str = DEFAULT_LABEL) -> Iterator[PointedWts]:
    """Pointed systems over one label, one per isomorphism class.

    States are ``"0".."n-1"`` with basepoint ``"0"``, actions ``a0, a1, ...``.
    Every subset of the candidate transitions (optionally at most
    ``max_transitions`` of them) is tried; only patching-closed ones are kept.
    """
    for n in range(1, max_states + 1):
        states = [str(i) for i in range(n)]
        for m in range(0, max_actions + 1):
            acts = [f"a{i}" for i in range(m)]
            cands = [(s, b, t) for s in states for b in _bodies(acts, max_dim) for t in states]
            pos = {c: i for i, c in enumerate(cands)}
            perms = []
            for sp in itertools.permutations(states[1:]):
                smap = dict(zip(states, ["0"] + list(sp)))
                for ap in itertools.permutations(acts):
                    amap = dict(zip(acts, ap))
                    perms.append([pos[(smap[s], tuple(sorted(amap[a] for a in b)), smap[t])]
                                  for s, b, t in cands])
            seen = set()
            limit = len(cands) if max_transitions is None else min(max_transitions, len(cands))
            for k in range(limit + 1):
                for chosen in itertools.combinations(range(len(cands)), k):
                    mask = 0
                    for c in chosen:
                        mask |= 1 << c
                    canon_mask = min(sum(1 << perm[c] for c in chosen) for perm in perms)
                    if canon_mask in seen:
                        continue
                    seen.add(canon_mask)
                    ts = [cands[c] for c in chosen]
                    if max_dim >= 3 and closure_transitions(ts) != frozenset(
                            WeakTransitionSystem(states, {a: label for a in acts}, ts, check=False).transitions):
                        continue
                    x = WeakTransitionSystem(states, {a: label for a in acts}, ts, [label], check=False)
                    yield PointedWts(x, "0")


def random_star_shaped(rng: random.Random, max_states: int = 6, max_actions: int = 6,
                       max_dim: int = 4, extra: int = 4, labels=(DEFAULT_LABEL,)) -> PointedWts:
    """A random star-shaped system: a random spanning tree of transitions out
    of the basepoint plus ``extra`` random transitions, then closed."""
    n = rng.randint(1, max_states)
    m = rng.randint(1, max_actions)
    states = [f"s{i}" for i in range(n)]
    acts = {f"u{i}": rng.choice(labels) for i in range(m)}
    names = sorted(acts)

    def body():
        return tuple(rng.choice(names) for _ in range(rng.randint(1, max_dim)))

    ts = [(states[rng.randrange(i)], body(), states[i]) for i in range(1, n)]
    for _ in range(rng.randint(0, extra)):
        ts.append((rng.choice(states), body(), rng.choice(states)))
    x = WeakTransitionSystem(states, acts, closure_transitions(
        WeakTransitionSystem(states, acts, ts, check=False).transitions), set(labels))
    return PointedWts(x, "s0")


__all__ = ["pointed_family", "random_star_shaped"]

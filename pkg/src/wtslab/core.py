"""Finite weak transition systems, their morphisms and hom-set search.

Bodies of transitions are stored as sorted tuples of action ids, so the
multiset axiom holds by construction: two orderings of the same body are
the same stored transition.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple

DEFAULT_LABEL = "ℓ"
DEFAULT_BUDGET = 200_000

RESERVED = "(),"


class WtsError(ValueError):
    pass


class UnknownIdError(WtsError):
    pass


class ShapeError(WtsError):
    pass


class InvalidSystemError(WtsError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(f"invalid weak transition system: {report.violations[:3]}")
        self.report = report


class InvalidMorphismError(WtsError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(f"not a morphism: {report.violations[:3]}")
        self.report = report


class BudgetExceeded(RuntimeError):
    pass


# -- identifiers -----------------------------------------------------------

def is_term(s: str) -> bool:
    """True for atoms without reserved characters and for ``(t1,...,tn)``."""
    pos = _parse_term(s, 0)
    return pos == len(s)


def _parse_term(s: str, i: int) -> int:
    if i >= len(s):
        return -1
    if s[i] == "(":
        i += 1
        while True:
            i = _parse_term(s, i)
            if i < 0 or i >= len(s):
                return -1
            if s[i] == ")":
                return i + 1
            if s[i] != ",":
                return -1
            i += 1
    j = i
    while j < len(s) and s[j] not in RESERVED:
        j += 1
    return j if j > i else -1


def tup(*parts: str) -> str:
    """Compound identifier; injective because every part is a term."""
    return "(" + ",".join(parts) + ")"


def split_tup(s: str) -> list[str]:
    """Inverse of :func:`tup` (one level)."""
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a compound identifier: {s!r}")
    parts, depth, start = [], 0, 1
    for k in range(1, len(s) - 1):
        c = s[k]
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == "," and depth == 0:
            parts.append(s[start:k])
            start = k + 1
    parts.append(s[start:-1])
    return parts


# -- systems ---------------------------------------------------------------

class Transition(NamedTuple):
    source: str
    body: tuple[str, ...]
    target: str

    def __str__(self):
        return f"({self.source},[{','.join(self.body)}],{self.target})"


def canon(src: str, body: Iterable[str], tgt: str) -> Transition:
    return Transition(src, tuple(sorted(body)), tgt)


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: dict

    def to_doc(self):
        return {"rule": self.rule, "witness": self.witness}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class WeakTransitionSystem:
    """A finite weak transition system ``(S, mu: L -> Sigma, T)``.

    ``actions`` maps action ids to labels. Transitions may be given in any
    order of their bodies. With ``check=True`` (the default) the patching
    axiom is verified and :class:`InvalidSystemError` raised on failure;
    referential integrity is always enforced.
    """

    __slots__ = ("states", "actions", "transitions", "sigma", "_key", "_hash", "_idx")

    def __init__(self, states: Iterable[str], actions: Mapping[str, str],
                 transitions: Iterable = (), sigma: Iterable[str] | None = None,
                 check: bool = True):
        states = tuple(sorted(set(states)))
        actions = dict(sorted(actions.items()))
        ts = frozenset(canon(t[0], t[1], t[2]) for t in transitions)
        labels = set(actions.values())
        sigma = frozenset(sigma) if sigma is not None else frozenset(labels | {DEFAULT_LABEL})
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "actions", actions)
        object.__setattr__(self, "transitions", ts)
        object.__setattr__(self, "sigma", sigma | frozenset(labels))
        object.__setattr__(self, "_key", (states, tuple(actions.items()),
                                          tuple(sorted(ts)), tuple(sorted(self.sigma))))
        object.__setattr__(self, "_hash", hash(self._key))
        object.__setattr__(self, "_idx", None)
        report = _referential_report(self)
        if check:
            report = ValidationReport(report.violations + patching_violations(self.transitions))
        if not report.ok:
            raise InvalidSystemError(report)

    def __setattr__(self, name, value):
        raise AttributeError("WeakTransitionSystem is immutable")

    def __eq__(self, other):
        return isinstance(other, WeakTransitionSystem) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        ts = ", ".join(str(t) for t in sorted(self.transitions))
        return f"WTS(states={list(self.states)}, actions={self.actions}, T={{{ts}}})"

    @property
    def labelling(self) -> Mapping[str, str]:
        return self.actions

    @property
    def action_ids(self) -> tuple[str, ...]:
        return tuple(self.actions)

    @property
    def max_dim(self) -> int:
        return max((len(t.body) for t in self.transitions), default=0)

    def sorted_transitions(self) -> list[Transition]:
        return sorted(self.transitions)

    def outgoing(self, state: str) -> list[Transition]:
        if self._idx is None:
            idx = defaultdict(list)
            for t in sorted(self.transitions):
                idx[t.source].append(t)
            object.__setattr__(self, "_idx", dict(idx))
        return self._idx.get(state, [])

    def with_transitions(self, transitions, check=True) -> "WeakTransitionSystem":
        return WeakTransitionSystem(self.states, self.actions, transitions, self.sigma, check=check)


WTS = WeakTransitionSystem


def _referential_report(x: WeakTransitionSystem) -> ValidationReport:
    out = []
    states = set(x.states)
    for s in x.states:
        if not is_term(s):
            out.append(Violation("malformed-id", {"state": s}))
    for a, lab in x.actions.items():
        if not is_term(a):
            out.append(Violation("malformed-id", {"action": a}))
        if lab not in x.sigma:
            out.append(Violation("unknown-label", {"action": a, "label": lab}))
    for t in sorted(x.transitions):
        if not t.body:
            out.append(Violation("empty-body", {"transition": transition_doc(t)}))
        for end in (t.source, t.target):
            if end not in states:
                out.append(Violation("unknown-state", {"transition": transition_doc(t), "state": end}))
        for a in t.body:
            if a not in x.actions:
                out.append(Violation("unknown-action", {"transition": transition_doc(t), "action": a}))
    if not x.sigma:
        out.append(Violation("empty-sigma", {}))
    return ValidationReport(tuple(out))


def transition_doc(t: Transition) -> list:
    return [t.source, list(t.body), t.target]


# -- multisets and the patching rule ---------------------------------------

def submultisets(body: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    """All submultisets of a sorted body, as sorted tuples, in a fixed order."""
    counts = sorted(Counter(body).items())
    for picks in itertools.product(*(range(c + 1) for _, c in counts)):
        yield tuple(a for (a, _), k in zip(counts, picks) for _ in range(k))


def msub(m: tuple[str, ...], n: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(sorted((Counter(m) - Counter(n)).elements()))


def madd(m: tuple[str, ...], n: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(sorted(m + n))


def three_way_splits(body: tuple[str, ...]) -> Iterator[tuple[tuple, tuple, tuple]]:
    """Ordered decompositions ``body = A + B + C`` with all three nonempty."""
    for a in submultisets(body):
        if not a or len(a) > len(body) - 2:
            continue
        rest = msub(body, a)
        for b in submultisets(rest):
            if not b or len(b) == len(rest):
                continue
            yield a, b, msub(rest, b)


class _Index:
    def __init__(self, ts: Iterable[Transition]):
        self.by_src_body = defaultdict(set)
        self.by_body_tgt = defaultdict(set)
        self.all = set()
        for t in ts:
            self.add(t)

    def add(self, t: Transition):
        self.all.add(t)
        self.by_src_body[(t.source, t.body)].add(t.target)
        self.by_body_tgt[(t.body, t.target)].add(t.source)


def _patching_instances(idx: _Index, ts: Iterable[Transition]):
    """Yield ``(premise, A, B, C, nu1, nu2, conclusion)`` for every rule instance."""
    for t in sorted(ts):
        if len(t.body) < 3:
            continue
        for a, b, c in three_way_splits(t.body):
            nu1s = idx.by_src_body.get((t.source, a), set()) & idx.by_body_tgt.get((madd(b, c), t.target), set())
            if not nu1s:
                continue
            nu2s = idx.by_src_body.get((t.source, madd(a, b)), set()) & idx.by_body_tgt.get((c, t.target), set())
            for nu1 in sorted(nu1s):
                for nu2 in sorted(nu2s):
                    yield t, a, b, c, nu1, nu2, Transition(nu1, b, nu2)


def patching_violations(ts: Iterable[Transition]) -> tuple[Violation, ...]:
    ts = list(ts)
    idx = _Index(ts)
    out = []
    seen = set()
    for t, a, b, c, nu1, nu2, concl in _patching_instances(idx, ts):
        if concl in idx.all or (t, a, b, nu1, nu2) in seen:
            continue
        seen.add((t, a, b, nu1, nu2))
        out.append(Violation("patching", {
            "alpha": t.source, "body": list(a + b + c), "beta": t.target,
            "nu1": nu1, "nu2": nu2, "p": len(a), "q": len(b),
            "missing": transition_doc(concl),
        }))
    return tuple(out)


def closure_transitions(ts: Iterable[Transition]) -> frozenset[Transition]:
    """Least patching-closed superset (naive rounds until nothing is added)."""
    idx = _Index(canon(*t) for t in ts)
    while True:
        new = {concl for *_, concl in _patching_instances(idx, list(idx.all))} - idx.all
        if not new:
            return frozenset(idx.all)
        for t in new:
            idx.add(t)


def patching_closure(x) -> WeakTransitionSystem:
    """Close a candidate system (referentially sound) under the patching rule."""
    if not isinstance(x, WeakTransitionSystem):
        x = system_from_raw(x)
    return WeakTransitionSystem(x.states, x.actions, closure_transitions(x.transitions), x.sigma)


def system_from_raw(raw, check: bool = False) -> WeakTransitionSystem:
    """Build from a mapping with keys states/actions/transitions[/sigma]."""
    return WeakTransitionSystem(raw["states"], raw["actions"],
                                [(s, tuple(b), t) for s, b, t in raw.get("transitions", [])],
                                raw.get("sigma"), check=check)


def validate(raw) -> ValidationReport:
    """Referential integrity plus patching closure, never raising on bad ids."""
    if isinstance(raw, WeakTransitionSystem):
        x = raw
    else:
        try:
            x = system_from_raw(raw, check=False)
        except InvalidSystemError as e:
            bad = e.report.violations
            # still report patching problems of whatever is well-formed
            ts = [canon(s, b, t) for s, b, t in raw.get("transitions", [])]
            return ValidationReport(bad + patching_violations(ts))
    return ValidationReport(_referential_report(x).violations + patching_violations(x.transitions))


def has_transition(x: WeakTransitionSystem, src: str, body: Iterable[str], tgt: str) -> bool:
    body = tuple(body)
    if src not in x.states or tgt not in x.states:
        raise UnknownIdError(f"unknown state in {(src, tgt)}")
    for a in body:
        if a not in x.actions:
            raise UnknownIdError(f"unknown action {a!r}")
    return canon(src, body, tgt) in x.transitions


# -- morphisms -------------------------------------------------------------

class WtsMorphism:
    """A pair (state map, action map) between two systems."""

    __slots__ = ("source", "target", "state_map", "action_map", "_key")

    def __init__(self, source: WeakTransitionSystem, target: WeakTransitionSystem,
                 state_map: Mapping[str, str], action_map: Mapping[str, str], check: bool = True):
        sm = {s: state_map[s] for s in source.states} if set(state_map) >= set(source.states) else dict(state_map)
        am = {a: action_map[a] for a in source.actions} if set(action_map) >= set(source.actions) else dict(action_map)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "state_map", sm)
        object.__setattr__(self, "action_map", am)
        object.__setattr__(self, "_key", (source, target, tuple(sorted(sm.items())), tuple(sorted(am.items()))))
        if check:
            report = is_morphism(self)
            if not report.ok:
                raise InvalidMorphismError(report)

    def __setattr__(self, name, value):
        raise AttributeError("WtsMorphism is immutable")

    def __eq__(self, other):
        return isinstance(other, WtsMorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WtsMorphism(states={self.state_map}, actions={self.action_map})"

    def __call__(self, t: Transition) -> Transition:
        return canon(self.state_map[t.source], (self.action_map[a] for a in t.body),
                     self.state_map[t.target])

    def after(self, other: "WtsMorphism") -> "WtsMorphism":
        return compose(self, other)


def is_morphism(f: WtsMorphism) -> ValidationReport:
    out = []
    x, y = f.source, f.target
    for s in x.states:
        if f.state_map.get(s) not in set(y.states):
            out.append(Violation("state-map", {"state": s, "image": f.state_map.get(s)}))
    for a, lab in x.actions.items():
        b = f.action_map.get(a)
        if b not in y.actions:
            out.append(Violation("action-map", {"action": a, "image": b}))
        elif y.actions[b] != lab:
            out.append(Violation("label", {"action": a, "image": b,
                                           "label": lab, "image_label": y.actions[b]}))
    if out:
        return ValidationReport(tuple(out))
    for t in sorted(x.transitions):
        if f(t) not in y.transitions:
            out.append(Violation("transition", {"transition": transition_doc(t),
                                                "image": transition_doc(f(t))}))
    return ValidationReport(tuple(out))


def compose(g: WtsMorphism, f: WtsMorphism) -> WtsMorphism:
    """``g . f``."""
    if f.target != g.source:
        raise ShapeError("compose: target(f) != source(g)")
    return WtsMorphism(f.source, g.target,
                       {s: g.state_map[v] for s, v in f.state_map.items()},
                       {a: g.action_map[v] for a, v in f.action_map.items()}, check=False)


def identity(x: WeakTransitionSystem) -> WtsMorphism:
    return WtsMorphism(x, x, {s: s for s in x.states}, {a: a for a in x.actions}, check=False)


def is_cofibration(f: WtsMorphism) -> bool:
    """Cofibrations of weak transition systems: one-to-one on actions."""
    return len(set(f.action_map.values())) == len(f.action_map)


# -- hom-set search --------------------------------------------------------

@dataclass
class Search:
    """Backtracking search for morphisms ``X -> Y``.

    ``fixed_*`` pin values; ``allowed_*`` restrict the candidates of a
    variable. With ``injective=True`` only injective maps on both carriers
    are produced. ``node_budget`` bounds the explored search nodes.
    """
    x: WeakTransitionSystem
    y: WeakTransitionSystem
    fixed_states: Mapping[str, str] = field(default_factory=dict)
    fixed_actions: Mapping[str, str] = field(default_factory=dict)
    allowed_states: Mapping[str, Iterable[str]] = field(default_factory=dict)
    allowed_actions: Mapping[str, Iterable[str]] = field(default_factory=dict)
    injective: bool = False
    node_budget: int | None = None

    def __iter__(self) -> Iterator[WtsMorphism]:
        x, y = self.x, self.y
        by_label = defaultdict(list)
        for b, lab in y.actions.items():
            by_label[lab].append(b)
        # variables: ('s', id) and ('a', id); order actions of short
        # transitions first so that constraints fire early
        order: list[tuple[str, str]] = []
        placed = set()
        for t in sorted(x.transitions, key=lambda t: (len(t.body), t)):
            for v in [("s", t.source)] + [("a", a) for a in t.body] + [("s", t.target)]:
                if v not in placed:
                    placed.add(v)
                    order.append(v)
        order += [("s", s) for s in x.states if ("s", s) not in placed]
        order += [("a", a) for a in x.actions if ("a", a) not in placed]
        pos = {v: i for i, v in enumerate(order)}
        checks = defaultdict(list)
        for t in x.transitions:
            last = max([pos[("s", t.source)], pos[("s", t.target)]] + [pos[("a", a)] for a in t.body])
            checks[last].append(t)
        domains = []
        for kind, v in order:
            if kind == "s":
                if v in self.fixed_states:
                    dom = [self.fixed_states[v]] if self.fixed_states[v] in set(y.states) else []
                else:
                    dom = list(y.states)
                if v in self.allowed_states:
                    allow = set(self.allowed_states[v])
                    dom = [d for d in dom if d in allow]
            else:
                lab = x.actions[v]
                if v in self.fixed_actions:
                    c = self.fixed_actions[v]
                    dom = [c] if y.actions.get(c) == lab else []
                else:
                    dom = list(by_label[lab])
                if v in self.allowed_actions:
                    allow = set(self.allowed_actions[v])
                    dom = [d for d in dom if d in allow]
            domains.append(dom)
        if any(not d for d in domains):
            return
        sm: dict[str, str] = {}
        am: dict[str, str] = {}
        used_s: set[str] = set()
        used_a: set[str] = set()
        yt = y.transitions
        n = len(order)
        nodes = 0
        budget = self.node_budget
        inj = self.injective
        if inj and (len(x.states) > len(y.states) or len(x.actions) > len(y.actions)):
            return

        def rec(i):
            nonlocal nodes
            if i == n:
                yield WtsMorphism(x, y, dict(sm), dict(am), check=False)
                return
            kind, v = order[i]
            target, used = (sm, used_s) if kind == "s" else (am, used_a)
            for val in domains[i]:
                nodes += 1
                if budget is not None and nodes > budget:
                    raise BudgetExceeded(f"search exceeded {budget} nodes")
                if inj and val in used:
                    continue
                target[v] = val
                ok = True
                for t in checks.get(i, ()):
                    img = canon(sm[t.source], (am[a] for a in t.body), sm[t.target])
                    if img not in yt:
                        ok = False
                        break
                if ok:
                    if inj:
                        used.add(val)
                    yield from rec(i + 1)
                    if inj:
                        used.discard(val)
                del target[v]

        yield from rec(0)


def enum_homs(x: WeakTransitionSystem, y: WeakTransitionSystem,
              budget: int = DEFAULT_BUDGET, **constraints) -> list[WtsMorphism]:
    """All morphisms ``x -> y`` in lexicographic order; at most ``budget``."""
    out = []
    for f in Search(x, y, **constraints):
        out.append(f)
        if len(out) > budget:
            raise BudgetExceeded(f"more than {budget} morphisms {_size(x)} -> {_size(y)}")
    return out


def first_hom(x, y, node_budget: int | None = None, **constraints) -> WtsMorphism | None:
    return next(iter(Search(x, y, node_budget=node_budget, **constraints)), None)


def _size(x):
    return f"<{len(x.states)}s,{len(x.actions)}a,{len(x.transitions)}t>"


def pinned_through(pairs: Iterable[tuple[WtsMorphism, WtsMorphism]]):
    """Constraints ``e . a == h`` for each ``(a, h)``, as fixed assignments.

    Returns ``None`` when two pairs force different values on one element.
    """
    fs: dict[str, str] = {}
    fa: dict[str, str] = {}
    for a, h in pairs:
        for s, v in a.state_map.items():
            if fs.setdefault(v, h.state_map[s]) != h.state_map[s]:
                return None
        for u, v in a.action_map.items():
            if fa.setdefault(v, h.action_map[u]) != h.action_map[u]:
                return None
    return {"fixed_states": fs, "fixed_actions": fa}


def find_isomorphism(x: WeakTransitionSystem, y: WeakTransitionSystem,
                     node_budget: int | None = None, **constraints) -> WtsMorphism | None:
    if (len(x.states), len(x.actions), len(x.transitions)) != (len(y.states), len(y.actions), len(y.transitions)):
        return None
    if sorted(Counter(x.actions.values()).items()) != sorted(Counter(y.actions.values()).items()):
        return None
    return first_hom(x, y, node_budget=node_budget, injective=True, **constraints)


def inverse(f: WtsMorphism) -> WtsMorphism:
    return WtsMorphism(f.target, f.source, {v: k for k, v in f.state_map.items()},
                       {v: k for k, v in f.action_map.items()})

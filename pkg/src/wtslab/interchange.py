"""JSON interchange documents with canonical (sorted) serialization."""
from __future__ import annotations

import json
from pathlib import Path

from .comma import PointedMorphism, PointedWts
from .core import WeakTransitionSystem, WtsMorphism, system_from_raw, transition_doc


def system_to_doc(x: WeakTransitionSystem) -> dict:
    return {
        "sigma": sorted(x.sigma),
        "states": list(x.states),
        "actions": dict(x.actions),
        "transitions": [transition_doc(t) for t in x.sorted_transitions()],
    }


def system_from_doc(doc: dict, check: bool = True) -> WeakTransitionSystem:
    return system_from_raw(doc, check=check)


def pointed_to_doc(p: PointedWts) -> dict:
    return {**system_to_doc(p.base), "point": p.point}


def pointed_from_doc(doc: dict) -> PointedWts:
    if "point" not in doc:
        raise ValueError("pointed document needs a 'point' field")
    return PointedWts(system_from_doc(doc), doc["point"])


def morphism_to_doc(f: WtsMorphism) -> dict:
    return {
        "source": system_to_doc(f.source),
        "target": system_to_doc(f.target),
        "stateMap": dict(sorted(f.state_map.items())),
        "actionMap": dict(sorted(f.action_map.items())),
    }


def morphism_from_doc(doc: dict) -> WtsMorphism:
    return WtsMorphism(system_from_doc(doc["source"]), system_from_doc(doc["target"]),
                       doc["stateMap"], doc["actionMap"])


def pointed_morphism_to_doc(f: PointedMorphism) -> dict:
    return {**morphism_to_doc(f.underlying),
            "source": pointed_to_doc(f.source), "target": pointed_to_doc(f.target)}


def family_to_doc(arrows) -> list:
    return [morphism_to_doc(a) for a in arrows]


def family_from_doc(doc) -> list[WtsMorphism]:
    return [morphism_from_doc(d) for d in doc]


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def load(path) -> dict | list:
    return json.loads(Path(path).read_text(encoding="utf-8"))

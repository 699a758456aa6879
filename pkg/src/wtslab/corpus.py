"""Write the fixture corpus as interchange documents (``python -m wtslab.corpus DIR``)."""
from __future__ import annotations

import sys
from pathlib import Path

from .colimits import coproduct, copair
from .core import WtsMorphism, identity
from .cylinder import cyl, transpose
from .fixtures import EMPTY, PAR, PT, SEG, SYSTEMS, TRI_PREMISES, TWO, pointed_fixtures, sample_cofibrations
from .interchange import dumps, family_to_doc, morphism_to_doc, pointed_to_doc, system_to_doc


def _no_lift_square():
    """TWO -> SEG against the fold SEG + SEG -> SEG, with the endpoints
    sent to different summands."""
    f = WtsMorphism(TWO, SEG, {"0": "0", "1": "1"}, {})
    c = coproduct(SEG, SEG)
    g = copair(c, identity(SEG), identity(SEG))
    top = WtsMorphism(TWO, c.object, {"0": c.in1.state_map["0"], "1": c.in2.state_map["1"]}, {})
    return f, g, top, identity(SEG)


def documents() -> dict[str, object]:
    docs: dict[str, object] = {}
    for name, x in SYSTEMS.items():
        docs[f"sys/{name}.json"] = system_to_doc(x)
    docs["sys/TRI_PREMISES.json"] = TRI_PREMISES
    docs["sys/SEG_DANGLING.json"] = {"sigma": ["ℓ"], "states": ["0", "1"], "actions": {"a": "ℓ"},
                                    "transitions": [["0", ["a"], "7"]]}
    for name, p in pointed_fixtures().items():
        docs[f"pointed/{name.replace('@', '_at_')}.json"] = pointed_to_doc(p)
    maps = {
        "EMPTY_PT": WtsMorphism(EMPTY, PT, {}, {}),
        "TWO_SEG": WtsMorphism(TWO, SEG, {"0": "0", "1": "1"}, {}),
        "TWO_PT": WtsMorphism(TWO, PT, {"0": "ι", "1": "ι"}, {}),
        "SEG_PAR_a0": WtsMorphism(SEG, PAR, {"0": "0", "1": "1"}, {"a": "a0"}),
        "SEG_PAR_a1": WtsMorphism(SEG, PAR, {"0": "0", "1": "1"}, {"a": "a1"}),
        "PT_SEG_0": WtsMorphism(PT, SEG, {"ι": "0"}, {}),
        "PT_TWO_0": WtsMorphism(PT, TWO, {"ι": "0"}, {}),
        "PT_TWO_1": WtsMorphism(PT, TWO, {"ι": "1"}, {}),
        "ID_TWO": identity(TWO),
        "ID_PAR": identity(PAR),
        "SIGMA_SEG": cyl(SEG).sigma,
        "SIGMA_SEG_T": transpose(cyl(SEG).sigma, SEG),
    }
    for name, m in maps.items():
        docs[f"map/{name}.json"] = morphism_to_doc(m)
    for name, m in zip(("f", "g", "top", "bottom"), _no_lift_square()):
        docs[f"square/{name}.json"] = morphism_to_doc(m)
    docs["family/sample.json"] = family_to_doc(sample_cofibrations())
    docs["family/TWO_SEG.json"] = family_to_doc([maps["TWO_SEG"]])
    return docs


def write_corpus(root) -> list[Path]:
    root = Path(root)
    out = []
    for rel, doc in documents().items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(doc), encoding="utf-8")
        out.append(path)
    return out


if __name__ == "__main__":
    for p in write_corpus(sys.argv[1] if len(sys.argv) > 1 else "corpus"):
        print(p)

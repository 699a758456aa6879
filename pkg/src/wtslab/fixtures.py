"""Small hand-built systems used by the tests, the CLI corpus and the README."""
from .core import DEFAULT_LABEL as L, WeakTransitionSystem as WTS, WtsMorphism

EMPTY = WTS([], {})
PT = WTS(["ι"], {})
TWO = WTS(["0", "1"], {})
SEG = WTS(["0", "1"], {"a": L}, [("0", ["a"], "1")])
PAR = WTS(["0", "1"], {"a0": L, "a1": L}, [("0", ["a0"], "1"), ("0", ["a1"], "1")])

# the five premises of one patching instance; not closed
TRI_PREMISES = {
    "sigma": [L],
    "states": ["α", "ν1", "ν2", "β"],
    "actions": {"u1": L, "u2": L, "u3": L},
    "transitions": [
        ["α", ["u1", "u2", "u3"], "β"],
        ["α", ["u1"], "ν1"],
        ["ν1", ["u2", "u3"], "β"],
        ["α", ["u1", "u2"], "ν2"],
        ["ν2", ["u3"], "β"],
    ],
}
TRI = WTS(TRI_PREMISES["states"], TRI_PREMISES["actions"],
          [tuple(t) for t in TRI_PREMISES["transitions"]] + [("ν1", ("u2",), "ν2")])

UNR = WTS(["ι", "s", "t"], {"a": L}, [("ι", ["a"], "s")])

SYSTEMS = {"EMPTY": EMPTY, "PT": PT, "TWO": TWO, "SEG": SEG, "PAR": PAR, "TRI": TRI}


def pointed_fixtures():
    from .comma import PointedWts
    return {
        "PT": PointedWts(PT, "ι"),
        "SEG@0": PointedWts(SEG, "0"),
        "SEG@1": PointedWts(SEG, "1"),
        "PAR@0": PointedWts(PAR, "0"),
        "TRI@α": PointedWts(TRI, "α"),
        "UNR": PointedWts(UNR, "ι"),
    }


def sample_cofibrations():
    """A documented sample of generating cofibrations: empty-to-point,
    the fold of two points, and the boundary inclusion of a segment."""
    return [
        WtsMorphism(EMPTY, PT, {}, {}),
        WtsMorphism(TWO, PT, {"0": "ι", "1": "ι"}, {}),
        WtsMorphism(TWO, SEG, {"0": "0", "1": "1"}, {}),
    ]

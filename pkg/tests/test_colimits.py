import itertools

import pytest

from wtslab.colimits import (PushoutResult, codiagonal, coproduct, coproduct_map, is_isomorphic,
                             mediate, pushout, pushout_counterexample, verify_pushout_universal)
from wtslab.core import (ShapeError, WeakTransitionSystem as WTS, WtsMorphism, compose,
                         enum_homs, identity, validate)
from wtslab.fixtures import EMPTY, PAR, PT, SEG, SYSTEMS, TRI, TWO

L = "ℓ"
TWO_SEG = WtsMorphism(TWO, SEG, {"0": "0", "1": "1"}, {})
TWO_PT = WtsMorphism(TWO, PT, {"0": "ι", "1": "ι"}, {})

# TRI with its final state split in two: patching-closed, but gluing the
# two copies back together creates a fresh patching instance.
TRI_SPLIT = WTS(
    ["α", "ν1", "ν2", "β", "β'"], {"u1": L, "u2": L, "u3": L},
    [("α", ["u1"], "ν1"), ("ν1", ["u2", "u3"], "β"), ("α", ["u1", "u2"], "ν2"),
     ("ν2", ["u3"], "β'"), ("α", ["u1", "u2", "u3"], "β")])
GLUE_ENDS = WtsMorphism(TWO, TRI_SPLIT, {"0": "β", "1": "β'"}, {})


def without_closure(p: PushoutResult) -> PushoutResult:
    """Mutant: same carriers and legs, transitions only the images of the two sides."""
    image = {p.leg1(t) for t in p.leg1.source.transitions} | {p.leg2(t) for t in p.leg2.source.transitions}
    obj = WTS(p.object.states, p.object.actions, image, p.object.sigma, check=False)
    re = lambda h: WtsMorphism(h.source, obj, h.state_map, h.action_map, check=False)
    return PushoutResult(obj, re(p.leg1), re(p.leg2), re(p.from_apex), p.span)


def all_spans():
    for a, x, y in itertools.product(SYSTEMS, repeat=3):
        for f in enum_homs(SYSTEMS[a], SYSTEMS[x]):
            for g in enum_homs(SYSTEMS[a], SYSTEMS[y]):
                yield f, g


def test_coproduct_sizes_and_injections():
    c = coproduct(SEG, PAR)
    assert len(c.object.states) == 4 and len(c.object.actions) == 3
    assert len(c.object.transitions) == 3
    assert is_isomorphic(coproduct(EMPTY, TRI).object, TRI)


def test_pushout_of_two_segments_along_endpoints_is_parallel_pair():
    p = pushout(TWO_SEG, TWO_SEG)
    assert is_isomorphic(p.object, PAR)


def test_pushout_collapsing_endpoints_is_loop():
    p = pushout(TWO_SEG, TWO_PT)
    loop = WTS(["x"], {"a": L}, [("x", ["a"], "x")])
    assert is_isomorphic(p.object, loop)


def test_pushout_runs_closure():
    p = pushout(GLUE_ENDS, TWO_PT)
    assert validate(p.object).ok
    nu1, nu2 = p.leg1.state_map["ν1"], p.leg1.state_map["ν2"]
    assert (nu1, (p.leg1.action_map["u2"],), nu2) in p.object.transitions
    assert verify_pushout_universal(p)


def test_closure_omitting_mutant_is_caught():
    p = without_closure(pushout(GLUE_ENDS, TWO_PT))
    bad = pushout_counterexample(p)
    assert bad is not None and bad["reason"] == "object-invalid"


def test_pushout_rejects_mismatched_sources():
    with pytest.raises(ShapeError):
        pushout(TWO_SEG, identity(SEG))


def test_every_fixture_span_is_a_pushout():
    n = 0
    for f, g in all_spans():
        assert verify_pushout_universal(pushout(f, g)), (f, g)
        n += 1
    assert n >= 100


def test_mediate_and_codiagonal():
    c = coproduct(PAR, PAR)
    fold = codiagonal(PAR)
    assert compose(fold, c.in1) == identity(PAR) == compose(fold, c.in2)
    with pytest.raises(ShapeError):
        mediate([c.in1], [identity(PAR)])


def test_coproduct_map_on_injections():
    f = WtsMorphism(SEG, PAR, {"0": "0", "1": "1"}, {"a": "a0"})
    fg = coproduct_map(f, identity(TWO))
    src, tgt = coproduct(SEG, TWO), coproduct(PAR, TWO)
    assert compose(fg, src.in1) == compose(tgt.in1, f)
    assert compose(fg, src.in2) == tgt.in2

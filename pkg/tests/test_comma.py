import itertools

import pytest

from wtslab.comma import (POINT, PointedMorphism, PointedWts, check_gamma_point_epic, check_l1, check_l3,
                          check_l4, cocyl_pt, cyl_pt, find_pointed_isomorphism, is_epi_on_carriers, omega,
                          pointed_compose, pointed_coproduct, pointed_homs, pointed_pushout,
                          pointed_pushout_counterexample, pointed_star, pointed_transpose, rho, rho_adjunct,
                          rho_injection, rho_map, rho_star_commutes, split_section, underlying_cylinder_matches)
from wtslab.core import ShapeError, compose, enum_homs, identity, is_cofibration
from wtslab.cylinder import cyl
from wtslab.fixtures import SEG, SYSTEMS, pointed_fixtures, sample_cofibrations

POINTED = pointed_fixtures()
PNAMES = list(POINTED)


def fixture_cofibrations():
    for a, b in itertools.product(["EMPTY", "PT", "TWO", "SEG"], list(SYSTEMS)):
        for f in enum_homs(SYSTEMS[a], SYSTEMS[b]):
            if is_cofibration(f):
                yield f


def test_pointed_morphism_must_keep_the_point():
    p, q = POINTED["SEG@0"], POINTED["SEG@1"]
    with pytest.raises(ShapeError):
        PointedMorphism(p, q, identity(SEG))
    with pytest.raises(ShapeError):
        PointedWts(SEG, "9")


def test_pointed_homs_fix_point():
    p = POINTED["PT"]
    assert len(pointed_homs(p, POINTED["SEG@0"])) == 1
    assert len(pointed_homs(POINTED["SEG@0"], POINTED["PAR@0"])) == 2
    assert pointed_homs(POINTED["SEG@1"], POINTED["SEG@0"], fixed_states={"1": "1"}) == []


def test_rho_shape():
    r = rho(SEG)
    assert len(r.base.states) == 3 and r.point not in rho_injection(SEG).state_map.values()
    assert omega(r) == r.base
    assert rho_map(identity(SEG)).underlying == identity(r.base)


@pytest.mark.parametrize("xn", ["EMPTY", "TWO", "SEG", "PAR"])
@pytest.mark.parametrize("qn", PNAMES)
def test_rho_is_left_adjoint_to_forgetting(xn, qn):
    x, q = SYSTEMS[xn], POINTED[qn]
    plain = enum_homs(x, omega(q))
    pointed = pointed_homs(rho(x), q)
    assert len(plain) == len(pointed)
    adj = [rho_adjunct(x, h, q) for h in plain]
    assert {a.underlying for a in adj} == {p.underlying for p in pointed}
    for h, a in zip(plain, adj):
        assert compose(a.underlying, rho_injection(x)) == h


def test_pointed_compose():
    f = pointed_homs(POINTED["PT"], POINTED["SEG@0"])[0]
    g = pointed_homs(POINTED["SEG@0"], POINTED["PAR@0"])[0]
    assert pointed_compose(g, f).underlying.state_map == {POINT: "0"}


def test_pointed_coproduct_wedges_at_point():
    w = pointed_coproduct(POINTED["SEG@0"], POINTED["SEG@0"])
    assert len(w.base.states) == 3 and len(w.base.actions) == 2


@pytest.mark.parametrize("name", PNAMES)
def test_underlying_cylinder_is_plain_cylinder(name):
    p = POINTED[name]
    assert underlying_cylinder_matches(p)
    c = cyl_pt(p)
    assert c.obj.base.states == cyl(p.base).obj.states
    assert c.obj.base.actions == cyl(p.base).obj.actions
    assert compose(c.sigma.underlying, c.gamma0.underlying) == identity(p.base)


@pytest.mark.parametrize("name", PNAMES)
def test_projection_splits_by_identity(name):
    p = POINTED[name]
    proj = cyl_pt(p).projection
    s = split_section(proj)
    assert s is not None and s == identity(proj.target)


def test_gamma_of_point_is_epic():
    assert check_gamma_point_epic()
    assert not is_epi_on_carriers(cyl(SEG).gamma0)


@pytest.mark.parametrize("name", ["EMPTY", "SEG", "PAR", "TRI"])
def test_cylinder_commutes_with_free_pointing(name):
    iso = check_l3(SYSTEMS[name])
    assert iso is not None
    assert iso.source == cyl_pt(rho(SYSTEMS[name])).obj


@pytest.mark.parametrize("name", PNAMES)
def test_codiagonal_pushouts(name):
    assert check_l4(POINTED[name])


@pytest.mark.parametrize("name", PNAMES)
def test_pointed_injectivity_matches_plain(name):
    p = POINTED[name]
    for s in list(fixture_cofibrations()) + sample_cofibrations():
        assert check_l1(s, p)


@pytest.mark.parametrize("pn", PNAMES)
@pytest.mark.parametrize("qn", PNAMES)
def test_pointed_cylinder_path_adjunction(pn, qn):
    p, q = POINTED[pn], POINTED[qn]
    left = pointed_homs(cyl_pt(p).obj, q)
    right = pointed_homs(p, cocyl_pt(q))
    assert len(left) == len(right)
    images = {pointed_transpose(f, p).underlying for f in left}
    assert images == {g.underlying for g in right}


@pytest.mark.parametrize("f", sample_cofibrations(), ids=["empty-pt", "fold", "two-seg"])
def test_free_pointing_commutes_with_star(f):
    for eps in (0, 1, None):
        assert rho_star_commutes(f, eps)
        assert is_cofibration(pointed_star(rho_map(f), eps).underlying)


def test_pointed_pushouts_are_universal():
    tests = list(POINTED.values())
    homs = [(a, b) for a in PNAMES[:4] for b in PNAMES[:4]]
    n = 0
    for an, bn in homs:
        for f in pointed_homs(POINTED["PT"], POINTED[an]):
            for g in pointed_homs(POINTED["PT"], POINTED[bn]):
                assert pointed_pushout_counterexample(f, g, tests) is None
                n += 1
    assert n >= 16
    f = pointed_homs(POINTED["PT"], POINTED["SEG@0"])[0]
    obj, l1, l2 = pointed_pushout(f, f)
    assert obj.point == l1.underlying.state_map["0"]


def test_pointed_isomorphism_respects_point():
    assert find_pointed_isomorphism(POINTED["SEG@0"], POINTED["SEG@1"]) is None
    assert find_pointed_isomorphism(POINTED["PAR@0"], POINTED["PAR@0"]) is not None

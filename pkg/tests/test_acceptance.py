"""Acceptance gate: one test per criterion, each reported as PASS/FAIL in the
terminal summary (and printed when run with ``-s``)."""
import itertools
import json
import os
import random
import subprocess
import sys
from contextlib import contextmanager

from cli_matrix import DRIVER, invocations
from conftest import ACCEPTANCE_RESULTS
from wtslab.colimits import PushoutResult, pushout, pushout_counterexample, verify_pushout_universal
from wtslab.comma import (check_gamma_point_epic, check_l1, check_l3, check_l4, cyl_pt, pointed_homs,
                          split_section, underlying_cylinder_matches)
from wtslab.core import (Transition, WeakTransitionSystem as WTS, WtsMorphism, compose, enum_homs,
                         has_transition, identity, is_cofibration, patching_closure, validate)
from wtslab.cylinder import (adjunction_pairs, check_cartesian, check_very_good, cyl, cyl_map,
                             transpose, untranspose)
from wtslab.fixtures import EMPTY, PAR, PT, SEG, SYSTEMS, TRI, TRI_PREMISES, TWO, pointed_fixtures, sample_cofibrations
from wtslab.generators import pointed_family, random_star_shaped
from wtslab.homotopy import homotopy_classes, is_weak_equiv_against
from wtslab.lifting import is_fibrant_up_to, lambda_up_to, star, star_eps
from wtslab.starshaped import (check_cyl_preserves_star, cone_injectivity, coreflect,
                               factor_through_coreflection, is_star_shaped)

L = "ℓ"
RANDOM_SEED = 20261016


@contextmanager
def criterion(number, title):
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE_RESULTS[number] = (ok, title)
        print(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")


def cli_outputs(hash_seed, argvs):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    proc = subprocess.run([sys.executable, "-c", DRIVER], input=json.dumps(argvs).encode("utf-8"),
                          capture_output=True, env=env, check=True)
    return proc.stdout


def test_criterion_01_patching_engine():
    with criterion(1, "patching closure, validation, permutation invariance"):
        raw = WTS(TRI_PREMISES["states"], TRI_PREMISES["actions"],
                  [tuple(t) for t in TRI_PREMISES["transitions"]], check=False)
        closed = patching_closure(TRI_PREMISES)
        assert closed.transitions - raw.transitions == {Transition("ν1", ("u2",), "ν2")}
        assert validate(closed).ok
        assert patching_closure(closed) == closed
        for x in SYSTEMS.values():
            assert patching_closure(x) == x
            for t in x.transitions:
                if len(t.body) <= 3:
                    assert all(has_transition(x, t.source, p, t.target) for p in itertools.permutations(t.body))
            for n in range(1, 4):
                for body in itertools.product(sorted(x.actions), repeat=n):
                    for s, e in itertools.product(x.states, repeat=2):
                        assert len({has_transition(x, s, p, e) for p in itertools.permutations(body)}) == 1


def test_criterion_02_pushout_oracle():
    with criterion(2, "pushouts universal on fixture spans; closure-omitting mutant caught"):
        n = 0
        for a, x, y in itertools.product(SYSTEMS, repeat=3):
            for f in enum_homs(SYSTEMS[a], SYSTEMS[x]):
                for g in enum_homs(SYSTEMS[a], SYSTEMS[y]):
                    assert verify_pushout_universal(pushout(f, g))
                    n += 1
        assert n >= 100
        # TRI with its final state split: gluing the halves creates a patching instance
        split = WTS(["α", "ν1", "ν2", "β", "β'"], {"u1": L, "u2": L, "u3": L},
                    [("α", ["u1"], "ν1"), ("ν1", ["u2", "u3"], "β"), ("α", ["u1", "u2"], "ν2"),
                     ("ν2", ["u3"], "β'"), ("α", ["u1", "u2", "u3"], "β")])
        f = WtsMorphism(TWO, split, {"0": "β", "1": "β'"}, {})
        g = WtsMorphism(TWO, PT, {"0": "ι", "1": "ι"}, {})
        good = pushout(f, g)
        assert verify_pushout_universal(good)
        image = {good.leg1(t) for t in split.transitions}
        obj = WTS(good.object.states, good.object.actions, image, good.object.sigma, check=False)
        re = lambda h: WtsMorphism(h.source, obj, h.state_map, h.action_map, check=False)
        mutant = PushoutResult(obj, re(good.leg1), re(good.leg2), re(good.from_apex), good.span)
        assert obj.transitions != good.object.transitions
        assert not verify_pushout_universal(mutant)
        assert pushout_counterexample(mutant)["reason"] == "object-invalid"


def test_criterion_03_cylinder_laws():
    with criterion(3, "cylinder laws, naturality, very good, cartesian"):
        for x in SYSTEMS.values():
            c = cyl(x)
            assert compose(c.sigma, c.gamma0) == identity(x) == compose(c.sigma, c.gamma1)
            assert is_cofibration(c.gamma)
        for xn, yn in itertools.product(SYSTEMS, repeat=2):
            cx, cy = cyl(SYSTEMS[xn]), cyl(SYSTEMS[yn])
            for f in enum_homs(SYSTEMS[xn], SYSTEMS[yn]):
                cf = cyl_map(f)
                assert compose(cf, cx.gamma0) == compose(cy.gamma0, f)
                assert compose(cf, cx.gamma1) == compose(cy.gamma1, f)
                assert compose(cy.sigma, cf) == compose(f, cx.sigma)
        assert check_very_good(SEG, sample_cofibrations())
        assert all(check_cartesian(f) for f in sample_cofibrations())


def test_criterion_04_adjunction():
    with criterion(4, "Cyl/Cocyl adjunction is a verified bijection"):
        for xn, yn in itertools.product(SYSTEMS, repeat=2):
            x, y = SYSTEMS[xn], SYSTEMS[yn]
            left, right = adjunction_pairs(x, y)
            assert len(left) == len(right)
            images = [transpose(f, x) for f in left]
            assert len(set(images)) == len(images) and set(images) == set(right)
            assert all(untranspose(transpose(f, x), y) == f for f in left)
            assert all(transpose(untranspose(g, y), x) == g for g in right)


def test_criterion_05_star_and_lambda():
    with criterion(5, "corner maps are cofibrations; Λ deterministic; fibrancy monotone"):
        for f in sample_cofibrations():
            assert is_cofibration(star_eps(f, 0)) and is_cofibration(star_eps(f, 1)) and is_cofibration(star(f))
        runs = [[st.arrows for st in lambda_up_to(sample_cofibrations(), [], 2)] for _ in range(2)]
        assert runs[0] == runs[1]
        argv = [["lambda", "--depth", "2"], ["lambda", "--depth", "1", "--iso"]]
        assert cli_outputs(1, argv) == cli_outputs(4242, argv)
        two_seg = WtsMorphism(TWO, SEG, {"0": "0", "1": "1"}, {})
        for x in SYSTEMS.values():
            for s_family in ([], [two_seg]):
                answers = [is_fibrant_up_to(x, sample_cofibrations(), s_family, d) for d in range(3)]
                assert answers == sorted(answers, reverse=True)


def test_criterion_06_pointed_checks():
    with criterion(6, "pointed-category property verifiers"):
        pointed = pointed_fixtures()
        cofibs = sample_cofibrations() + [
            f for a, b in itertools.product(["EMPTY", "PT", "TWO", "SEG"], SYSTEMS)
            for f in enum_homs(SYSTEMS[a], SYSTEMS[b]) if is_cofibration(f)]
        for s in cofibs:
            for p in pointed.values():
                assert check_l1(s, p)
        for a in (EMPTY, SEG, PAR):
            assert check_l3(a) is not None
        assert check_gamma_point_epic()
        for p in pointed.values():
            assert check_l4(p)
            proj = cyl_pt(p).projection
            assert split_section(proj) == identity(proj.target)
            assert underlying_cylinder_matches(p)
            assert cyl_pt(p).obj.base.states == cyl(p.base).obj.states
            assert cyl_pt(p).obj.base.actions == cyl(p.base).obj.actions


def test_criterion_07_star_shaped():
    with criterion(7, "coreflection and cone injectivity ⇔ star-shaped (exhaustive family)"):
        pointed = pointed_fixtures()
        unr = pointed["UNR"]
        c = coreflect(unr)
        assert set(unr.base.states) - set(c.obj.base.states) == {"t"}
        for p in pointed.values():
            once = coreflect(p).obj
            assert coreflect(once).obj == once
        stars = [p for p in pointed.values() if is_star_shaped(p)]
        for src in stars:
            for tgt in pointed.values():
                ct = coreflect(tgt)
                for f in pointed_homs(src, tgt):
                    assert len(factor_through_coreflection(f, ct)) == 1
        mismatches, count = [], 0
        for p in pointed_family(max_states=3, max_actions=2, max_dim=1):
            count += 1
            if bool(cone_injectivity(p, max_len=len(p.base.states))) != is_star_shaped(p):
                mismatches.append(p)
        print(f"    exhaustive family: {count} isomorphism classes, {len(mismatches)} mismatches")
        assert count > 0 and not mismatches
        extra = [p for p in pointed_family(max_states=3, max_actions=2, max_dim=3, max_transitions=2)
                 if bool(cone_injectivity(p)) != is_star_shaped(p)]
        assert not extra


def test_criterion_08_homotopy():
    with criterion(8, "homotopy classes and σ as weak equivalence"):
        assert len(homotopy_classes(SEG, PAR)) == 1
        assert len(homotopy_classes(PT, TWO)) == 2
        tests = [t for t in SYSTEMS.values() if is_fibrant_up_to(t, sample_cofibrations(), [], 2)]
        assert tests
        for x in (SEG, PAR, TRI):
            assert is_weak_equiv_against(cyl(x).sigma, tests)


def test_criterion_09_cylinder_keeps_star_shape():
    with criterion(9, "pointed cylinder preserves star-shapedness"):
        pointed = pointed_fixtures()
        for p in pointed.values():
            if is_star_shaped(p):
                assert check_cyl_preserves_star(p) and is_star_shaped(cyl_pt(p).obj)
        rng = random.Random(RANDOM_SEED)
        for _ in range(50):
            p = random_star_shaped(rng)
            assert len(p.base.states) <= 6 and len(p.base.actions) <= 6 and p.base.max_dim <= 4
            assert is_star_shaped(p) and check_cyl_preserves_star(p)


def test_criterion_10_cli_determinism():
    with criterion(10, "byte-identical CLI output across runs"):
        argvs = invocations()
        first = cli_outputs(0, argvs)
        second = cli_outputs(987654321, argvs)
        assert first == second
        verbs = {a[0] for a in argvs}
        assert len(verbs) == 26
        assert first.count(b" -> ") == len(argvs)

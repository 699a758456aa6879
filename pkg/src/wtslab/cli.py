"""Command line front end: one verb per operation, canonical JSON output.

Exit status: 0 success / true verdict, 1 false verdict (the output carries
a counterexample), 2 input error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import colimits, comma, cylinder, homotopy, lifting, starshaped
from .core import (DEFAULT_BUDGET, BudgetExceeded, WtsError, is_cofibration,
                   patching_closure, validate)
from .fixtures import SYSTEMS, sample_cofibrations
from .interchange import (dumps, family_from_doc, family_to_doc, load, morphism_from_doc,
                          morphism_to_doc, pointed_from_doc, pointed_morphism_to_doc, pointed_to_doc,
                          system_from_doc, system_to_doc)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _sys(path):
    return system_from_doc(load(path))


def _mor(path):
    return morphism_from_doc(load(path))


def _fam(path):
    if path in (None, ""):
        return []
    if path == "sample":
        return sample_cofibrations()
    return family_from_doc(load(path))


def _verdict(ok, **payload):
    return bool(ok), {"verdict": bool(ok), **payload}


# -- verbs -----------------------------------------------------------------

def cmd_validate(a):
    rep = validate(load(a.system))
    return _verdict(rep.ok, violations=[v.to_doc() for v in rep.violations])


def cmd_close(a):
    return True, {"result": system_to_doc(patching_closure(load(a.system)))}


def cmd_coproduct(a):
    c = colimits.coproduct(_sys(a.left), _sys(a.right))
    return True, {"result": system_to_doc(c.object), "in1": morphism_to_doc(c.in1),
                  "in2": morphism_to_doc(c.in2)}


def cmd_pushout(a):
    p = colimits.pushout(_mor(a.f), _mor(a.g))
    ce = colimits.pushout_counterexample(p, budget=a.budget)
    out = {"result": system_to_doc(p.object), "leg1": morphism_to_doc(p.leg1),
           "leg2": morphism_to_doc(p.leg2), "universal": ce is None}
    if ce is not None:
        out["witness"] = _jsonable(ce)
    return _verdict(ce is None, **out)


def cmd_cyl(a):
    c = cylinder.cyl(_sys(a.system))
    return True, {"result": system_to_doc(c.obj), "gamma0": morphism_to_doc(c.gamma0),
                  "gamma1": morphism_to_doc(c.gamma1), "gamma": morphism_to_doc(c.gamma),
                  "sigma": morphism_to_doc(c.sigma)}


def cmd_cocyl(a):
    p = cylinder.cocyl(_sys(a.system))
    rep = validate(p.obj)
    return _verdict(rep.ok, result=system_to_doc(p.obj), pi0=morphism_to_doc(p.pi0),
                    pi1=morphism_to_doc(p.pi1))


def cmd_transpose(a):
    obj = _sys(a.system)
    m = _mor(a.morphism)
    r = cylinder.untranspose(m, obj) if a.inverse else cylinder.transpose(m, obj)
    return True, {"result": morphism_to_doc(r)}


def cmd_star(a):
    f = _mor(a.morphism)
    m = lifting.star(f) if a.eps is None else lifting.star_eps(f, a.eps)
    return _verdict(is_cofibration(m) or not is_cofibration(f), result=morphism_to_doc(m),
                    cofibration=is_cofibration(m))


def cmd_lambda(a):
    stages = lifting.lambda_up_to(_fam(a.I), _fam(a.S), a.depth, up_to_iso=a.iso)
    return True, {"stages": [family_to_doc(s) for s in stages]}


def cmd_lift(a):
    cert = lifting.has_lift(_mor(a.f), _mor(a.g), _mor(a.top), _mor(a.bottom), a.budget)
    return _verdict(cert.lift is not None,
                    lift=morphism_to_doc(cert.lift) if cert.lift is not None else None)


def cmd_injective(a):
    ce = lifting.injectivity_counterexample(_sys(a.system), _fam(a.family), a.budget)
    return _verdict(ce is None, witness=None if ce is None else
                    {"arrow": morphism_to_doc(ce[0]), "map": morphism_to_doc(ce[1])})


def cmd_fibrant(a):
    t = _sys(a.system)
    stages = lifting.lambda_up_to(_fam(a.I), _fam(a.S), a.depth)
    for k, st in enumerate(stages):
        ce = lifting.injectivity_counterexample(t, st, a.budget)
        if ce is not None:
            return _verdict(False, depth=a.depth, witness={"stage": k, "arrow": morphism_to_doc(ce[0]),
                                                           "map": morphism_to_doc(ce[1])})
    return _verdict(True, depth=a.depth, note="fibrant up to depth")


def cmd_homotopic(a):
    w = homotopy.homotopic(_mor(a.f), _mor(a.g), a.budget)
    if w is None:
        return _verdict(False, witness=None)
    return _verdict(True, chain=[{"homotopy": morphism_to_doc(s.homotopy), "forward": s.forward}
                                 for s in w.chain])


def cmd_classes(a):
    cls = homotopy.homotopy_classes(_sys(a.source), _sys(a.target), a.budget)
    return True, {"count": len(cls), "classes": [[morphism_to_doc(h) for h in c] for c in cls]}


def cmd_weq(a):
    f = _mor(a.morphism)
    tests = [_sys(p) for p in a.tests] if a.tests else list(SYSTEMS.values())
    ce = homotopy.weq_counterexample(f, tests, a.budget)
    return _verdict(ce is None, witness=_jsonable(ce))


def cmd_point_rho(a):
    return True, {"result": pointed_to_doc(comma.rho(_sys(a.system)))}


def cmd_point_omega(a):
    return True, {"result": system_to_doc(comma.omega(pointed_from_doc(load(a.system))))}


def cmd_point_coproduct(a):
    p = comma.pointed_coproduct(pointed_from_doc(load(a.left)), pointed_from_doc(load(a.right)))
    return True, {"result": pointed_to_doc(p)}


def cmd_point_cyl(a):
    c = comma.cyl_pt(pointed_from_doc(load(a.system)))
    return True, {"result": pointed_to_doc(c.obj), "gamma0": pointed_morphism_to_doc(c.gamma0),
                  "gamma1": pointed_morphism_to_doc(c.gamma1), "sigma": pointed_morphism_to_doc(c.sigma)}


def cmd_point_cocyl(a):
    return True, {"result": pointed_to_doc(comma.cocyl_pt(pointed_from_doc(load(a.system))))}


def cmd_point_homs(a):
    hs = comma.pointed_homs(pointed_from_doc(load(a.left)), pointed_from_doc(load(a.right)), a.budget)
    return True, {"count": len(hs), "maps": [pointed_morphism_to_doc(h) for h in hs]}


def cmd_reach(a):
    r = starshaped.reachable_states(pointed_from_doc(load(a.system)))
    return True, {"states": sorted(r.states),
                  "paths": {s: [[t.source, list(t.body), t.target] for t in r.paths[s]] for s in sorted(r.paths)}}


def cmd_star_check(a):
    p = pointed_from_doc(load(a.system))
    r = starshaped.reachable_states(p)
    return _verdict(starshaped.is_star_shaped(p),
                    unreachable=sorted(set(p.base.states) - r.states))


def cmd_coreflect(a):
    c = starshaped.coreflect(pointed_from_doc(load(a.system)))
    return True, {"result": pointed_to_doc(c.obj), "inclusion": pointed_morphism_to_doc(c.inclusion)}


def cmd_cone_check(a):
    p = pointed_from_doc(load(a.system))
    r = starshaped.cone_injectivity(p, max_len=a.depth, dim=a.cone_dim, node_budget=a.budget)
    return _verdict(r.ok, witness=None if r.ok else {"state": r.witness, "depthLimited": r.depth_limited})


def cmd_verify_lemma(a):
    lemma = a.lemma
    if lemma == "l1":
        s, p = _mor(a.inputs[0]), pointed_from_doc(load(a.inputs[1]))
        return _verdict(comma.check_l1(s, p, a.budget), lemma=lemma)
    if lemma == "l3":
        iso = comma.check_l3(_sys(a.inputs[0]))
        return _verdict(iso is not None, lemma=lemma,
                        isomorphism=None if iso is None else pointed_morphism_to_doc(iso))
    if lemma == "l4":
        return _verdict(comma.check_l4(pointed_from_doc(load(a.inputs[0]))), lemma=lemma)
    if lemma == "l0bis":
        return _verdict(comma.check_gamma_point_epic(), lemma=lemma)
    if lemma == "far-fetched":
        c = comma.cyl_pt(pointed_from_doc(load(a.inputs[0])))
        s = comma.split_section(c.projection, a.budget)
        return _verdict(s is not None, lemma=lemma, section=None if s is None else morphism_to_doc(s))
    raise WtsError(f"unknown lemma {lemma}")


def _jsonable(obj):
    from .core import WeakTransitionSystem, WtsMorphism
    if obj is None:
        return None
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, WeakTransitionSystem):
        return system_to_doc(obj)
    if isinstance(obj, WtsMorphism):
        return morphism_to_doc(obj)
    if isinstance(obj, comma.PointedMorphism):
        return pointed_morphism_to_doc(obj)
    return obj


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    env_budget = int(os.environ.get("WTSLAB_BUDGET", DEFAULT_BUDGET))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=env_budget)
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--cone-dim", type=int, default=None)
    common.add_argument("--tests", nargs="*", default=None)
    common.add_argument("--I", default="sample", help="family file or 'sample'")
    common.add_argument("--S", default=None)

    parser = argparse.ArgumentParser(prog="wtslab", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, *positional, **extra):
        p = sub.add_parser(name, parents=[common])
        for arg in positional:
            p.add_argument(arg)
        for k, v in extra.items():
            p.add_argument(k, **v)
        p.set_defaults(func=func)
        return p

    verb("validate", cmd_validate, "system")
    verb("close", cmd_close, "system")
    verb("coproduct", cmd_coproduct, "left", "right")
    verb("pushout", cmd_pushout, "f", "g")
    verb("cyl", cmd_cyl, "system")
    verb("cocyl", cmd_cocyl, "system")
    verb("transpose", cmd_transpose, "system", "morphism",
         **{"--inverse": {"action": "store_true"}})
    verb("star", cmd_star, "morphism", **{"--eps": {"type": int, "choices": [0, 1], "default": None}})
    verb("lambda", cmd_lambda, **{"--iso": {"action": "store_true"}})
    verb("lift", cmd_lift, "f", "g", "top", "bottom")
    verb("injective", cmd_injective, "system", "family")
    verb("fibrant", cmd_fibrant, "system")
    verb("homotopic", cmd_homotopic, "f", "g")
    verb("classes", cmd_classes, "source", "target")
    verb("weq", cmd_weq, "morphism")
    verb("point-rho", cmd_point_rho, "system")
    verb("point-omega", cmd_point_omega, "system")
    verb("point-coproduct", cmd_point_coproduct, "left", "right")
    verb("point-cyl", cmd_point_cyl, "system")
    verb("point-cocyl", cmd_point_cocyl, "system")
    verb("point-homs", cmd_point_homs, "left", "right")
    verb("reach", cmd_reach, "system")
    verb("star-check", cmd_star_check, "system")
    verb("coreflect", cmd_coreflect, "system")
    verb("cone-check", cmd_cone_check, "system")
    p = verb("verify-lemma", cmd_verify_lemma)
    p.add_argument("lemma", choices=["l1", "l3", "l4", "l0bis", "far-fetched"])
    p.add_argument("inputs", nargs="*")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb in ("lambda", "fibrant") and args.depth is None:
        args.depth = 0
    try:
        ok, payload = args.func(args)
    except BudgetExceeded as e:
        out.write(dumps({"verb": args.verb, "error": "budget", "message": str(e)}))
        return EXIT_BUDGET
    except (WtsError, KeyError, ValueError, OSError, json.JSONDecodeError, IndexError) as e:
        out.write(dumps({"verb": args.verb, "error": "input", "message": f"{type(e).__name__}: {e}"}))
        return EXIT_INPUT
    out.write(dumps({"verb": args.verb, **payload}))
    return EXIT_OK if ok else EXIT_FALSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

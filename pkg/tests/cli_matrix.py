"""The argument vectors used to exercise every CLI verb over the corpus."""
import itertools
import json
from pathlib import Path

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def _files(sub):
    return sorted(str(p) for p in (CORPUS / sub).glob("*.json"))


def _load(p):
    return json.loads(Path(p).read_text(encoding="utf-8"))


def invocations():
    sys_all = _files("sys")
    sys_ok = [p for p in sys_all if not p.endswith(("TRI_PREMISES.json", "SEG_DANGLING.json"))]
    pointed = _files("pointed")
    maps = _files("map")
    docs = {m: _load(m) for m in maps}
    key = lambda d: json.dumps(d, sort_keys=True)
    by_source, by_ends = {}, {}
    for m, d in docs.items():
        by_source.setdefault(key(d["source"]), []).append(m)
        by_ends.setdefault((key(d["source"]), key(d["target"])), []).append(m)
    cofibs = [m for m, d in docs.items() if len(set(d["actionMap"].values())) == len(d["actionMap"])]
    sq = [str(CORPUS / "square" / f"{n}.json") for n in ("f", "g", "top", "bottom")]
    fams = ["sample", str(CORPUS / "family" / "TWO_SEG.json")]

    out = []
    out += [["validate", p] for p in sys_all]
    out += [["close", p] for p in sys_all]
    out += [["coproduct", a, b] for a, b in itertools.product(sys_ok, repeat=2)]
    out += [["pushout", f, g] for group in by_source.values() for f, g in itertools.product(group, repeat=2)]
    out += [[v, p] for v in ("cyl", "cocyl") for p in sys_ok]
    out += [["transpose", str(CORPUS / "sys" / "SEG.json"), str(CORPUS / "map" / "SIGMA_SEG.json")],
            ["transpose", str(CORPUS / "sys" / "SEG.json"), str(CORPUS / "map" / "SIGMA_SEG_T.json"), "--inverse"],
            ["transpose", str(CORPUS / "sys" / "PAR.json"), str(CORPUS / "map" / "SIGMA_SEG.json")]]
    out += [["star", m] + e for m in maps for e in ([], ["--eps", "0"], ["--eps", "1"])]
    out += [["lambda", "--depth", str(d)] for d in (0, 1, 2)]
    out += [["lambda", "--depth", "1", "--iso"], ["lambda", "--depth", "0", "--S", fams[1]]]
    out += [["lift"] + sq]
    out += [["injective", s, f] for s in sys_ok for f in fams]
    out += [["fibrant", s, "--depth", "2"] for s in sys_ok]
    out += [["fibrant", s, "--S", fams[1]] for s in sys_ok]
    out += [["homotopic", f, g] for group in by_ends.values() for f, g in itertools.product(group, repeat=2)]
    out += [["classes", a, b] for a, b in itertools.product(sys_ok, repeat=2)]
    out += [["weq", m] for m in maps]
    out += [["weq", str(CORPUS / "map" / "EMPTY_PT.json"), "--tests", s] for s in sys_ok]
    out += [["point-rho", s] for s in sys_ok]
    out += [[v, p] for v in ("point-omega", "point-cyl", "point-cocyl", "reach", "star-check",
                             "coreflect", "cone-check") for p in pointed]
    out += [[v, a, b] for v in ("point-coproduct", "point-homs") for a, b in itertools.product(pointed, repeat=2)]
    out += [["verify-lemma", "l1", m, p] for m in cofibs for p in pointed]
    out += [["verify-lemma", "l3", s] for s in sys_ok]
    out += [["verify-lemma", "l4", p] for p in pointed]
    out += [["verify-lemma", "far-fetched", p] for p in pointed]
    out += [["verify-lemma", "l0bis"]]
    return out


DRIVER = """
import io, json, sys
from wtslab.cli import run
for argv in json.load(sys.stdin):
    buf = io.StringIO()
    code = run(argv, buf)
    sys.stdout.write(json.dumps(argv, ensure_ascii=False) + " -> " + str(code) + "\\n" + buf.getvalue())
"""

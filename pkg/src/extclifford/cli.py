"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .checks import SELFTEST_CAP, run_all
from .classify import ClassLabel, ExtSignature, canonical_signature, cartan_decompose, derive_params, type_decomposition
from .errors import ExtCliffordError, ParseError, TooLarge
from .oracle import system_profile
from .parser import flatten, parse
from .reps import canonical_rep, verify_relations
from .tensor import tensor_brute_system, tensor_classify, tensor_profile

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3

_SIG = {
    "type": "object",
    "properties": {k: {"type": "integer", "minimum": 0} for k in "rspq"},
    "required": list("rspq"),
}
_CLASS = {
    "type": "object",
    "properties": {
        "type": {"enum": ["I", "II", "III", "IV", "V"]},
        "M": {"type": "integer", "minimum": 0},
        "N": {"type": "integer", "minimum": 0},
    },
    "required": ["type", "M", "N"],
}
_PROFILE = {
    "type": "object",
    "properties": {
        "log2_dim": {"type": "integer", "minimum": 0},
        "log2_center": {"type": "integer", "minimum": 0},
        "trace_sig": {"type": "integer"},
    },
    "required": ["log2_dim", "log2_center", "trace_sig"],
}
_PARAMS = {
    "type": "object",
    "properties": {k: {"type": "integer"} for k in ("m", "n", "M", "N", "t", "sigma")},
    "required": ["m", "n", "M", "N", "t", "sigma"],
}
_ALGEBRA = {
    "type": "object",
    "properties": {
        "input": {"type": "string"},
        "factors": {"type": "array", "items": _SIG, "minItems": 1},
        "class": _CLASS,
        "canonical": _SIG,
        "profile": _PROFILE,
        "params": _PARAMS,
    },
    "required": ["input", "factors", "class", "canonical", "profile"],
}

# Output schema of every --json command, keyed by command name.
JSON_SCHEMAS = {
    "classify": _ALGEBRA,
    "canon": _ALGEBRA,
    "iso": {
        "type": "object",
        "properties": {"isomorphic": {"type": "boolean"}, "algebras": {"type": "array", "items": _ALGEBRA}},
        "required": ["isomorphic", "algebras"],
    },
    "invariants": {
        "type": "object",
        "properties": {
            **_ALGEBRA["properties"],
            "brute_profile": _PROFILE,
            "agreement": {"type": "boolean"},
        },
        "required": _ALGEBRA["required"],
    },
    "decompose": {
        "type": "object",
        "properties": {
            "p": {"type": "integer"},
            "q": {"type": "integer"},
            "t": {"type": "integer", "minimum": 0, "maximum": 7},
            "decomposition": {
                "type": "object",
                "properties": {
                    "count_11": {"type": "integer"},
                    "has_02": {"type": "boolean"},
                    "odd_factor": {"enum": ["none", "Cl(1,0)", "Cl(0,1)"]},
                    "odd_count": {"type": "integer"},
                },
                "required": ["count_11", "has_02", "odd_factor", "odd_count"],
            },
            "text": {"type": "string"},
            "class": _CLASS,
        },
        "required": ["p", "q", "t", "decomposition", "text", "class"],
    },
    "rep": {
        "type": "object",
        "properties": {
            **_ALGEBRA["properties"],
            "dim": {"type": "integer"},
            "factors_kron": {"type": "array", "items": {"type": "string"}},
            "matrices": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            },
            "relations_hold": {"type": "boolean"},
        },
        "required": _ALGEBRA["required"] + ["dim", "matrices", "relations_hold"],
    },
    "selftest": {
        "type": "object",
        "properties": {
            "max_generators": {"type": "integer"},
            "checks": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "name": {"type": "string"},
                        "passed": {"type": "integer"},
                        "failed": {"type": "integer"},
                    },
                    "required": ["name", "passed", "failed"],
                },
            },
            "ok": {"type": "boolean"},
        },
        "required": ["max_generators", "checks", "ok"],
    },
}


def _sig_dict(sg: ExtSignature) -> dict:
    return {"r": sg.r, "s": sg.s, "p": sg.p, "q": sg.q}


def _params_dict(sg: ExtSignature) -> dict:
    d = derive_params(sg)
    return {"m": d.m, "n": d.n, "M": d.M, "N": d.N, "t": d.t, "sigma": d.sigma}


def _describe(text: str, pure: bool = False) -> dict:
    factors = flatten(parse(text))
    label = tensor_classify(factors)
    out = {
        "input": text,
        "factors": [_sig_dict(f) for f in factors],
        "class": label.as_dict(),
        "canonical": _sig_dict(canonical_signature(label, pure)),
        "profile": tensor_profile(factors).as_dict(),
    }
    if len(factors) == 1:
        out["params"] = _params_dict(factors[0])
    return out


def _label(d: dict) -> str:
    c = d["class"]
    return f"({c['type']}, M={c['M']}, N={c['N']})"


def _sig_text(d: dict) -> str:
    return f"Cl({d['r']},{d['s']}|{d['p']},{d['q']})"


def _prof_text(d: dict) -> str:
    return f"({d['log2_dim']}, {d['log2_center']}, {d['trace_sig']:+d})"


def _params_text(d: dict) -> str:
    p = d["params"]
    return f"m={p['m']} n={p['n']} M={p['M']} N={p['N']} t={p['t']}"


def cmd_classify(args):
    d = _describe(args.expr)
    if args.json:
        return d, EXIT_OK
    lines = [f"{args.expr}: type {_label(d)}"]
    if "params" in d:
        lines.append(f"  {_params_text(d)}")
    return "\n".join(lines), EXIT_OK


def cmd_canon(args):
    d = _describe(args.expr, args.pure_clifford)
    if args.json:
        return d, EXIT_OK
    return f"{args.expr} ~= {_sig_text(d['canonical'])}  {_label(d)}", EXIT_OK


def cmd_iso(args):
    a, b = _describe(args.a), _describe(args.b)
    iso = a["class"] == b["class"]
    if args.json:
        return {"isomorphic": iso, "algebras": [a, b]}, EXIT_OK
    verdict = "isomorphic" if iso else "not isomorphic"
    lines = [f"{verdict}"]
    for d in (a, b):
        extra = f"  [{_params_text(d)}]" if "params" in d else ""
        lines.append(f"  {d['input']}: {_label(d)}{extra}")
    return "\n".join(lines), EXIT_OK


def cmd_invariants(args):
    d = _describe(args.expr)
    code = EXIT_OK
    if args.brute:
        factors = flatten(parse(args.expr))
        brute = system_profile(tensor_brute_system(factors))
        d["brute_profile"] = brute.as_dict()
        d["agreement"] = d["brute_profile"] == d["profile"]
        if not d["agreement"]:
            code = EXIT_MISMATCH
    if args.json:
        return d, code
    lines = [f"{args.expr}: {_label(d)}", f"  predicted profile {_prof_text(d['profile'])}"]
    if args.brute:
        lines.append(f"  brute profile     {_prof_text(d['brute_profile'])}")
        lines.append("  agreement" if d["agreement"] else "  DISAGREEMENT")
    return "\n".join(lines), code


def cmd_decompose(args):
    if args.p < 0 or args.q < 0:
        raise ValueError("p and q must be nonnegative")
    dec = cartan_decompose(args.p, args.q)
    d = {
        "p": args.p,
        "q": args.q,
        "t": (args.p - args.q) % 8,
        "decomposition": {
            "count_11": dec.count_11,
            "has_02": dec.has_02,
            "odd_factor": dec.odd_factor.value,
            "odd_count": dec.odd_count,
        },
        "text": str(dec),
        "class": dec.label.as_dict(),
    }
    if args.json:
        return d, EXIT_OK
    return f"Cl({args.p},{args.q}) ~= {dec}  (t={d['t']}, type {_label(d)})", EXIT_OK


def cmd_rep(args):
    d = _describe(args.expr)
    label = ClassLabel(d["class"]["type"], d["class"]["M"], d["class"]["N"])
    reps = canonical_rep(label)
    ok = verify_relations(reps)
    d["dim"] = reps.dim
    d["factors_kron"] = [str(f) for f in type_decomposition(label).factors()]
    d["matrices"] = reps.to_json()
    d["relations_hold"] = ok
    code = EXIT_OK if ok else EXIT_MISMATCH
    if args.json:
        return d, code
    lines = [
        f"{args.expr}: {_label(d)}, {len(d['matrices'])} generators of size {reps.dim}",
        "  relations verified" if ok else "  RELATIONS FAIL",
    ]
    for i, m in enumerate(d["matrices"]):
        lines.append(f"  G{i} = {json.dumps(m)}")
    return "\n".join(lines), code


def cmd_selftest(args):
    k = args.max_generators
    if k < 0:
        raise ValueError("--max-generators must be nonnegative")
    if k > SELFTEST_CAP:
        raise TooLarge("selftest generators", k, SELFTEST_CAP)
    results = run_all(k)
    ok = all(r.ok for r in results)
    code = EXIT_OK if ok else EXIT_MISMATCH
    if args.json:
        return {
            "max_generators": k,
            "checks": [{"name": r.name, "passed": r.passed, "failed": r.failed} for r in results],
            "ok": ok,
        }, code
    total_p = sum(r.passed for r in results)
    total_f = sum(r.failed for r in results)
    lines = [str(r) for r in results] + [f"{total_p} passed, {total_f} failed"]
    return "\n".join(lines), code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    ap = argparse.ArgumentParser(prog="extcliff", description="Extended Clifford algebras Cl(r,s|p,q).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="type (I-V), M and N of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", parents=[common], help="canonical Cl(r,s|p,q) representative")
    p.add_argument("expr")
    p.add_argument("--pure-clifford", action="store_true", help="prefer r=s=0 when M <= 1")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", parents=[common], help="decide isomorphism of two expressions")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("invariants", parents=[common], help="invariant profile, optionally checked by brute force")
    p.add_argument("expr")
    p.add_argument("--brute", action="store_true", help="also run the blade-sweep oracle")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", parents=[common], help="Cartan decomposition of Cl(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rep", parents=[common], help="integer matrix generators of the canonical form")
    p.add_argument("expr")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("selftest", parents=[common], help="run the verification sweeps")
    p.add_argument("--max-generators", type=int, default=8)
    p.set_defaults(func=cmd_selftest)
    return ap


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result, code = args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=err)
        return EXIT_TOO_LARGE
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ExtCliffordError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(result, sort_keys=True), file=out)
    else:
        print(result, file=out)
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


"""Command line front end.

Every subcommand builds a :class:`CommandResult`; ``--format`` only chooses
how that payload is printed. Input errors exit with 2, broken internal
invariants with 3.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Optional

from . import almost_arith as aa
from . import rf, toric
from .errors import InputError, InternalError
from .semigroup import apery_set, frobenius_number, new_semigroup, pseudo_frobenius, type_of

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


@dataclass
class CommandResult:
    command: str
    input: dict
    output: Any = None
    status: dict = field(default_factory=lambda: {"state": "ok"})

    @property
    def ok(self) -> bool:
        return self.status.get("state") == "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CommandResult":
        return cls(**json.loads(text))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _span(text: str) -> range:
    """``a:b`` (inclusive) or a single integer."""
    try:
        if ":" in text:
            a, b = text.split(":")
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a or a:b, got {text!r}")


def _pres(args) -> aa.AAPresentation:
    return aa.AAPresentation(args.m0, args.d, args.p, args.n)


def _matrix_payload(M: rf.RFMatrix) -> dict:
    return {"source": M.source, "rows": M.tolist()}


# -- commands -------------------------------------------------------------------------

def cmd_apery(args) -> dict:
    H = new_semigroup(args.gens)
    m = args.mod if args.mod is not None else H.multiplicity
    ap = apery_set(H, m)
    return {"generators": list(H.generators), "modulus": ap.modulus, "elements": list(ap.elements)}


def cmd_pf(args) -> dict:
    H = new_semigroup(args.gens)
    pf = pseudo_frobenius(H)
    return {
        "generators": list(H.generators),
        "pseudo_frobenius": list(pf),
        "frobenius": frobenius_number(H),
        "type": type_of(H),
        "symmetric": len(pf) == 1,
    }


def cmd_structure(args) -> dict:
    pres = _pres(args)
    sc = aa.structure_constants(pres)
    out = {"generators": list(pres.gens), "constants": sc.as_dict()}
    out["W"] = None if sc.W is None else [list(sc.W[0]), list(sc.W[1])]
    out["candidates"] = [asdict(c) for c in aa.pf_candidates(pres, sc)]
    out["pseudo_frobenius"] = list(pseudo_frobenius(pres.semigroup))
    out["symmetric_case"] = aa.classify_symmetric(pres, sc).value
    return out


def cmd_rf(args) -> dict:
    pres = _pres(args)
    H = pres.semigroup
    out: dict = {"generators": list(pres.gens), "f": args.f, "mode": args.mode}
    if args.mode == "closed":
        out["matrices"] = [_matrix_payload(M) for M in rf.rf_closed_form(pres, None, args.f)]
    elif args.mode == "enumerate":
        out["matrices"] = [_matrix_payload(M) for M in rf.rf_enumerate(H, args.f, args.limit)]
        out["total"] = rf.rf_count(H, args.f)
    else:
        out["count"] = rf.rf_count(H, args.f)
    return out


def cmd_relations(args) -> dict:
    pres = _pres(args)
    rels = rf.all_rf_relations(pres.semigroup, args.f)
    return {
        "generators": list(pres.gens),
        "f": args.f,
        "relations": [b.as_dict() for b in rels.sorted()],
    }


def cmd_ideal(args) -> dict:
    H = new_semigroup(args.gens)
    mp = toric.minimal_generating_set(H)
    return {
        "generators": list(H.generators),
        "mu": mp.count,
        "betti_degrees": list(mp.betti_degrees),
        "binomials": [b.as_dict() for b in mp.generators],
    }


def cmd_verify(args) -> dict:
    if not args.sweep:
        if None in (args.m0, args.d, args.p, args.n):
            raise InputError("verify needs --m0 --d --p --n, or --sweep")
        pres = _pres(args)
        sc = aa.structure_constants(pres)
        verdict = toric.is_minimally_generated_by_rf_relations(pres.semigroup)
        out = {"generators": list(pres.gens), "symmetric_case": aa.classify_symmetric(pres, sc).value}
        out.update(verdict.as_dict())
        return out

    box = toric.SweepBox(args.m0_range, args.d_range, args.p_range, args.n_range)
    sink = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    seen = [0]

    def progress(row):
        seen[0] += 1
        sink.write(json.dumps(row, sort_keys=True) + "\n")
        sink.flush()
        if args.out:
            tag = "ok" if row["holds"] else "FAIL"
            print(f"[{seen[0]}] {tuple(row['gens'])} {row['case']} mu={row['mu']} {tag}",
                  file=sys.stderr, flush=True)

    try:
        report = toric.verify_symmetric_sweep(box, jobs=args.jobs, progress=progress)
    finally:
        if args.out:
            sink.close()
    bad = toric.counterexamples(report)
    return {
        "symmetric_instances": len(report),
        "counterexamples": [{k: r[k] for k in ("m0", "d", "p", "n", "case", "deficiency")} for r in bad],
        "report": args.out,
    }


# -- rendering --------------------------------------------------------------------------

def _render_table(res: CommandResult) -> str:
    lines = [f"{res.command}: {res.status['state']}"]
    if not res.ok:
        lines.append(f"  {res.status['code']}: {res.status['message']}")
        return "\n".join(lines)
    for key, val in res.output.items():
        lines.extend(_render_value(key, val, "  "))
    return "\n".join(lines)


def _is_binomial(x) -> bool:
    return isinstance(x, dict) and set(x) == {"plus", "minus", "degree"}


def _render_value(key, val, ind) -> list[str]:
    if isinstance(val, dict) and not _is_binomial(val):
        out = [f"{ind}{key}:"]
        for k, v in val.items():
            out.extend(_render_value(k, v, ind + "  "))
        return out
    if isinstance(val, list) and val and all(_is_binomial(b) for b in val):
        out = [f"{ind}{key}: ({len(val)})"]
        for b in val:
            out.append(f"{ind}  [{b['degree']}] {b['plus']} - {b['minus']}")
        return out
    if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
        out = [f"{ind}{key}:"]
        for i, x in enumerate(val):
            if "rows" in x:
                out.append(f"{ind}  #{i} {x.get('source', '')}")
                out.extend(f"{ind}    " + " ".join(f"{e:>3}" for e in row) for row in x["rows"])
            else:
                out.append(f"{ind}  - " + ", ".join(f"{k}={v}" for k, v in x.items()))
        return out
    return [f"{ind}{key}: {val}"]


# -- argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")

    pres = argparse.ArgumentParser(add_help=False)
    pres.add_argument("--m0", type=int, required=True)
    pres.add_argument("--d", type=int, required=True)
    pres.add_argument("--p", type=int, required=True)
    pres.add_argument("--n", type=int, required=True)

    parser = argparse.ArgumentParser(
        prog="aarf",
        description="Pseudo-Frobenius numbers, RF matrices and RF-relations of almost arithmetic numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("apery", parents=[common], help="Apery set of a semigroup")
    s.add_argument("--gens", type=_ints, required=True)
    s.add_argument("--mod", type=int, default=None, help="nonzero element (default: multiplicity)")
    s.set_defaults(func=cmd_apery)

    s = sub.add_parser("pf", parents=[common], help="pseudo-Frobenius numbers, Frobenius number and type")
    s.add_argument("--gens", type=_ints, required=True)
    s.set_defaults(func=cmd_pf)

    s = sub.add_parser("structure", parents=[common, pres], help="structure constants of a presentation")
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("rf", parents=[common, pres], help="RF matrices of a pseudo-Frobenius number")
    s.add_argument("--f", type=int, required=True)
    s.add_argument("--mode", choices=("closed", "enumerate", "count"), default="closed")
    s.add_argument("--limit", type=int, default=None, help="stop enumeration after N matrices")
    s.set_defaults(func=cmd_rf)

    s = sub.add_parser("relations", parents=[common, pres], help="all RF-relations of a pseudo-Frobenius number")
    s.add_argument("--f", type=int, required=True)
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("ideal", parents=[common], help="minimal binomial generating set of I(H)")
    s.add_argument("--gens", type=_ints, required=True)
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("verify", parents=[common], help="is I(H) minimally generated by RF-relations?")
    for name in ("--m0", "--d", "--p", "--n"):
        s.add_argument(name, type=int, default=None)
    s.add_argument("--sweep", action="store_true", help="run over a parameter box instead")
    s.add_argument("--m0-range", type=_span, default=range(5, 41))
    s.add_argument("--d-range", type=_span, default=range(1, 11))
    s.add_argument("--p-range", type=_span, default=range(3, 4))
    s.add_argument("--n-range", type=_span, default=None, help="default: m0+1 .. 3*m0")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", default=None, help="JSON-lines report path (default: stdout)")
    s.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[CommandResult, int]:
    args = build_parser().parse_args(argv)
    params = {k: ([v.start, v.stop - 1] if isinstance(v, range) else v) for k, v in vars(args).items()
              if k not in ("func", "command", "format")}
    res = CommandResult(args.command, params)
    func: Callable = args.func
    try:
        res.output = func(args)
        code = EXIT_OK
    except InputError as exc:
        res.status = {"state": "error", "code": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    except InternalError as exc:
        res.status = {"state": "error", "code": type(exc).__name__, "message": str(exc)}
        code = EXIT_INTERNAL
    return res, code


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    res, code = run(argv)
    fmt = build_parser().parse_args(argv).format
    streaming = res.command == "verify" and res.input.get("sweep") and not res.input.get("out")
    text = res.to_json() if fmt == "json" else _render_table(res)
    print(text, file=sys.stderr if streaming else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 when the mathematics says no (an identity
fails, a proof is rejected, a table is not an algebra), 2 on bad usage or
unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import SemiHeytingAlgebra, corpus, validate_sh
from .config import MAX_SIZE_LIMIT, RunConfig
from .enumeration import EnumerationTask, count_sh, enumerate_sh, find_countermodel
from .equivalence import roundtrip_check, translate
from .errors import LawViolation, SemiHeytingError
from .lattice import BOOLEAN_4, LatticeSpec, make_chain, validate_lattice
from .proofs import LOGIC_VARIETY, check_proof, load_proof, sample_proof, soundness_scan
from .report import enumerated_algebras, verify_paper
from .structure import congruences, embedded_corpus, is_subdirectly_irreducible, monolith
from .terms import parse_identity, to_str
from .varieties import belongs, classify, descriptor, explain, is_strongly_connexive_matrix

OK, REFUTED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _table_lines(table):
    return [" ".join(str(v) for v in row) for row in table]


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from exc


def load_algebra(spec: str, cfg: RunConfig) -> SemiHeytingAlgebra:
    """A path to an algebra JSON file, or the name of a corpus algebra."""
    path = Path(spec)
    if not path.exists() and cfg.corpus_dir is not None:
        candidate = Path(cfg.corpus_dir) / f"{spec}.json"
        if candidate.exists():
            path = candidate
    if path.exists():
        return SemiHeytingAlgebra.from_json(_load_json(path))
    builtin = corpus()
    if spec in builtin:
        return builtin[spec]
    raise UsageError(f"no algebra file or corpus algebra named {spec!r}")


def parse_lattice(spec: str) -> LatticeSpec:
    if spec.startswith("chain:"):
        try:
            return make_chain(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise UsageError(f"bad chain size in {spec!r}") from exc
    if spec in ("boolean4", "2x2"):
        return BOOLEAN_4
    if Path(spec).exists():
        return LatticeSpec.from_json(_load_json(spec))
    raise UsageError(f"lattice must be chain:N, boolean4 or a JSON file, not {spec!r}")


def _emit(cfg, payload, text_lines):
    if cfg.output_format == "json":
        print(_dumps(payload))
    else:
        for line in text_lines:
            print(line)


# -- subcommands ----------------------------------------------------------------

def cmd_validate(args, cfg):
    if Path(args.algebra).exists():
        data = _load_json(args.algebra)
    else:
        data = load_algebra(args.algebra, cfg).to_json()
    try:
        meet, join, top = data["meet"], data["join"], data["top"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"algebra object is missing {exc}") from exc
    report = validate_lattice(meet, join, top)
    if report:
        report = validate_sh(LatticeSpec.from_json(data), data.get("arrow", []))
    payload = {"valid": report.ok, "law": report.law, "witness": report.witness}
    _emit(cfg, payload, ["valid" if report.ok else f"invalid: {report}"])
    return OK if report.ok else REFUTED


def cmd_classify(args, cfg):
    A = load_algebra(args.algebra, cfg)
    names = sorted(classify(A, include_experimental=args.experimental))
    payload = {"name": A.name or "", "varieties": names}
    lines = [" ".join(names)]
    if args.explain:
        failures = {}
        for vname, (ident, check) in sorted(explain(A).items()):
            if descriptor(vname).experimental and not args.experimental:
                continue
            failures[vname] = {"law": str(ident), "witness": check.witness}
            lines.append(f"not {vname}: {ident} fails at {check.witness}")
        payload["failures"] = failures
    _emit(cfg, payload, lines)
    return OK


def cmd_enumerate(args, cfg):
    lattice = parse_lattice(args.lattice)
    if lattice.size > cfg.max_enumeration_size:
        raise UsageError(f"lattice size {lattice.size} exceeds max size "
                         f"{cfg.max_enumeration_size}")
    filters = tuple(f for f in (args.filter or "").split(",") if f)
    for f in filters:
        descriptor(f)
    if args.count_only and not filters and not args.up_to_iso:
        n = count_sh(lattice, cap=cfg.max_enumeration_size, workers=cfg.worker_count)
        _emit(cfg, {"count": n}, [str(n)])
        return OK
    task = EnumerationTask(lattice, up_to_iso=args.up_to_iso, filter=filters or None)
    algebras = list(enumerate_sh(task, cap=cfg.max_enumeration_size,
                                 workers=cfg.worker_count))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dumps([A.to_json() for A in algebras]) + "\n")
    if args.count_only:
        _emit(cfg, {"count": len(algebras)}, [str(len(algebras))])
    else:
        lines = []
        for A in algebras:
            lines.append(A.name)
            lines.extend("  " + row for row in _table_lines(A.arrow))
        _emit(cfg, [A.to_json() for A in algebras], lines)
    return OK


def cmd_analyze(args, cfg):
    A = load_algebra(args.algebra, cfg)
    if A.size > cfg.max_enumeration_size:
        raise UsageError(f"algebra size {A.size} exceeds max size {cfg.max_enumeration_size}")
    cons = congruences(A, cap=MAX_SIZE_LIMIT)
    mono = monolith(A)
    conn = is_strongly_connexive_matrix(A)
    payload = {
        "name": A.name or "",
        "size": A.size,
        "varieties": sorted(classify(A)),
        "dense": [x for x in A.elements if A.is_dense(x)],
        "congruences": [[list(b) for b in p] for p in cons],
        "monolith": None if mono is None else [list(b) for b in mono],
        "subdirectly_irreducible": is_subdirectly_irreducible(A),
        "embedded_corpus": embedded_corpus(A, corpus()),
        "strongly_connexive": conn.ok,
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    _emit(cfg, payload, lines)
    return OK


def cmd_countermodel(args, cfg):
    ident = parse_identity(args.identity)
    within = [v for item in args.within or [] for v in item.split(",") if v]
    if args.max_size > cfg.max_enumeration_size:
        raise UsageError(f"--max-size {args.max_size} exceeds max size "
                         f"{cfg.max_enumeration_size}")
    extra = [BOOLEAN_4] if args.include_boolean else []
    found = find_countermodel(ident, within=within, max_size=args.max_size,
                              extra_lattices=extra, cap=cfg.max_enumeration_size)
    if found is None:
        _emit(cfg, {"found": False},
              [f"no countermodel of size <= {args.max_size}"])
        return REFUTED
    A, witness = found
    payload = {"found": True, "algebra": A.to_json(), "assignment": witness}
    lines = [f"countermodel {A.name} (size {A.size}, top {A.top})", "meet:"]
    lines += ["  " + r for r in _table_lines(A.lattice.meet)]
    lines.append("arrow:")
    lines += ["  " + r for r in _table_lines(A.arrow)]
    lines.append(f"assignment: {witness}")
    _emit(cfg, payload, lines)
    return OK


def cmd_translate(args, cfg):
    A = load_algebra(args.algebra, cfg)
    result = translate(A, args.direction)
    payload = {"direction": args.direction, "valid": result.valid,
               "arrow": [list(r) for r in result.arrow]}
    lines = _table_lines(result.arrow)
    if not result.valid:
        lines.append(f"not a semi-Heyting algebra: {result.report}")
    if args.roundtrip:
        rt = roundtrip_check(A)
        payload["roundtrip"] = {"c_of_h": rt.c_of_h, "h_of_c": rt.h_of_c}
        lines.append(f"c(h(A)) = A: {rt.c_of_h}")
        lines.append(f"h(c(A)) = A: {rt.h_of_c}")
    if result.valid and args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dumps(result.target.to_json()) + "\n")
    _emit(cfg, payload, lines)
    return OK if result.valid else REFUTED


def cmd_check_proof(args, cfg):
    proof = sample_proof(args.logic) if args.proof == "sample" else load_proof(args.proof,
                                                                              args.logic)
    verdict = check_proof(proof)
    payload = {"logic": proof.logic, "accepted": verdict.ok,
               "formulas": [to_str(f) for f in verdict.formulas],
               "bad_step": verdict.bad_step, "reason": verdict.reason}
    lines = [f"{k}. {to_str(f)}" for k, f in enumerate(verdict.formulas, 1)]
    if verdict.ok:
        lines.append(f"accepted in {proof.logic}")
    else:
        lines.append(f"rejected at step {verdict.bad_step}: {verdict.reason}")
    if verdict.ok and args.scan:
        variety = LOGIC_VARIETY[proof.logic]
        pool = enumerated_algebras(min(4, cfg.max_enumeration_size), cfg.worker_count)
        members = [A for A in pool if variety is None or belongs(A, variety)]
        scan = soundness_scan(verdict.formulas[-1], members)
        payload["scan"] = {"algebras": len(members), "ok": scan.ok}
        lines.append(f"soundness scan over {len(members)} algebras: "
                     f"{'ok' if scan.ok else 'FAILED'}")
    _emit(cfg, payload, lines)
    return OK if verdict.ok else REFUTED


def cmd_verify_paper(args, cfg):
    report = verify_paper(cfg)
    if cfg.output_format == "json":
        print(_dumps(report.to_json()))
    else:
        print(report.to_text())
    return OK if report.passed else REFUTED


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def shared(default):
        # subcommands repeat the global options so they may follow the command;
        # there they default to SUPPRESS so they never mask an earlier value
        p = argparse.ArgumentParser(add_help=False, argument_default=default)
        p.add_argument("--max-enumeration-size", type=int)
        p.add_argument("--workers", type=int)
        p.add_argument("--format", choices=("text", "json"))
        p.add_argument("--corpus-dir", type=Path)
        return p

    parser = argparse.ArgumentParser(prog="semiheyting", parents=[shared(None)],
                                     description="Finite semi-Heyting algebra toolkit")
    parser.set_defaults(max_enumeration_size=5, workers=1, format="text")
    common = shared(argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check lattice and SH axioms of an algebra file")
    p.add_argument("--algebra", required=True)

    p = add("classify", cmd_classify, "list catalog varieties containing an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--explain", action="store_true", default=False)
    p.add_argument("--experimental", action="store_true", default=False)

    p = add("enumerate", cmd_enumerate, "enumerate SH algebras on a lattice")
    p.add_argument("--lattice", required=True)
    p.add_argument("--filter", default="")
    p.add_argument("--up-to-iso", action="store_true", default=False)
    p.add_argument("--count-only", action="store_true", default=False)
    p.add_argument("--out", default=None)

    p = add("analyze", cmd_analyze, "congruences, SI status and embedded corpus algebras")
    p.add_argument("--algebra", required=True)

    p = add("countermodel", cmd_countermodel, "search small chains for a failing model")
    p.add_argument("--identity", required=True)
    p.add_argument("--within", action="append", default=[])
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--include-boolean", action="store_true", default=False)

    p = add("translate", cmd_translate, "apply the h or c translation")
    p.add_argument("--algebra", required=True)
    p.add_argument("--direction", choices=("h", "c"), required=True)
    p.add_argument("--roundtrip", action="store_true", default=False)
    p.add_argument("--out", default=None)

    p = add("check-proof", cmd_check_proof, "check a Hilbert-style derivation")
    p.add_argument("proof", help="proof JSON file, or 'sample' for the bundled one")
    p.add_argument("--logic", default=None)
    p.add_argument("--scan", action="store_true", default=False)

    add("verify-paper", cmd_verify_paper, "run every acceptance check and print the table")
    return parser


def _config(args) -> RunConfig:
    try:
        return RunConfig(max_enumeration_size=args.max_enumeration_size,
                         worker_count=args.workers, output_format=args.format,
                         corpus_dir=args.corpus_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except LawViolation as exc:
        print(f"not a semi-Heyting algebra: {exc}", file=sys.stderr)
        return REFUTED
    except (UsageError, SemiHeytingError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

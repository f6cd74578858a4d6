"""Command line entry point: ``arithlab <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .axioms import Mode
from .codec import DecodeError, SymbolTable, TableError, decode_expression, decode_proof, encode, load_table
from .codes import CodeExpr, Overflow, bit_length_estimate, factored, from_int, materialize, parse_factored
from .diagonal import DiagonalError, diagonalize
from .kernel import check_proof, load_proof_file
from .lab import report
from .predicates import PREDICATES, char_fn, pf, prf, table_for
from .proof import ScriptError, dump_proof_script, last_formula
from .search import bounded_proof_search
from .syntax import CaptureError, ParseError, parse_expr, parse_formula, print_expr


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: Mode = Mode.PA
    table_path: str | None = None
    bits: int = 4096
    budget: int | None = None
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if self.bits <= 0:
            raise UsageError("--bits must be positive")
        if self.budget is not None and self.budget < 0:
            raise UsageError("--budget must not be negative")

    def table(self) -> SymbolTable:
        if self.table_path is None:
            return table_for(self.mode)
        t = load_table(self.table_path)
        if self.mode is Mode.TOY and t.variables:
            raise UsageError("TOY mode needs a toy table (one with 'xk none')")
        return t


def read_code(arg: str, cfg: RunConfig) -> CodeExpr:
    """An integer, a factored form, a .paproof file, or an expression."""
    path = Path(arg)
    if arg.endswith(".paproof"):
        if not path.is_file():
            raise UsageError(f"no such proof file: {arg}")
        try:
            return encode(load_proof_file(path), cfg.table())
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    s = arg.strip()
    if s.isdigit():
        code = from_int(int(s))
        if code is None:
            raise UsageError(f"{s} is not a Gödel number (its factorization has a gap or a bad exponent)")
        return code
    if "^" in s:
        try:
            return parse_factored(s)
        except ValueError as exc:
            raise UsageError(f"bad factored form: {exc}") from None
    try:
        return encode(parse_expr(s), cfg.table())
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def show_code(x: CodeExpr, cfg: RunConfig) -> str:
    lines = [factored(x)]
    value = materialize(x, cfg.bits)
    if isinstance(value, Overflow):
        lines.append(f"(integer not shown: about {bit_length_estimate(x):.0f} bits, over --bits {cfg.bits})")
    else:
        lines.append(f"= {value}")
    return "\n".join(lines)


def _yn(b: bool) -> str:
    return "true" if b else "false"


# -- commands --------------------------------------------------------------------

def cmd_encode(args, cfg: RunConfig) -> int:
    print(show_code(read_code(args.expr, cfg), cfg))
    return 0


def cmd_decode(args, cfg: RunConfig) -> int:
    x = read_code(args.code, cfg)
    table = cfg.table()
    kinds = [args.kind] if args.kind != "auto" else ["expression", "proof"]
    errors = []
    for kind in kinds:
        try:
            if kind == "expression":
                print(print_expr(decode_expression(x, table)))
            else:
                print(dump_proof_script(decode_proof(x, table)), end="")
            return 0
        except DecodeError as exc:
            errors.append(f"{kind}: {exc}")
    print("not decodable: " + "; ".join(errors), file=sys.stderr)
    return 1


def cmd_eval_pred(args, cfg: RunConfig) -> int:
    name = args.name
    canon = {k.lower(): k for k in PREDICATES}.get(name.lower())
    if canon is None:
        raise UsageError(f"unknown predicate {name!r}; choose from {', '.join(sorted(PREDICATES))}")
    arity = 2 if canon in ("Pf", "Rf") else 1
    if len(args.args) != arity:
        raise UsageError(f"{canon} takes {arity} argument(s), got {len(args.args)}")
    codes = tuple(read_code(a, cfg) for a in args.args)
    c = char_fn(canon, codes, cfg.mode, cfg.table())
    print(f"{canon}({', '.join(args.args)}) = {_yn(c == 0)}")
    print(f"C_{canon} = {c}")
    return 0


def cmd_check_proof(args, cfg: RunConfig) -> int:
    p = load_proof_file(args.file)
    table = cfg.table()
    verdict = check_proof(p, cfg.mode, strict=args.strict)
    code = encode(p, table)
    is_prf = prf(code, cfg.mode, table)
    is_pf = pf(code, encode(last_formula(p), table), cfg.mode, table)
    print(f"structural: {verdict}")
    print(f"Prf(x)              : {_yn(is_prf)}")
    print(f"Pf(x, last formula) : {_yn(is_pf)}")
    structural = check_proof(p, cfg.mode).accepted
    if structural != is_prf or is_prf != is_pf:
        print("internal error: structural and arithmetic verdicts disagree", file=sys.stderr)
        return 3
    return 0 if verdict.accepted else 1


def cmd_search_proof(args, cfg: RunConfig) -> int:
    bound = args.lines if args.lines is not None else (cfg.budget or 4)
    if bound < 1:
        raise UsageError("the line bound must be at least 1")
    result = bounded_proof_search(parse_formula(args.formula), bound, cfg.mode)
    if not result:
        print(result)
        return 1
    print(f"found a {len(result)}-line proof")
    print(dump_proof_script(result), end="")
    return 0


def cmd_diagonalize(args, cfg: RunConfig) -> int:
    table = cfg.table()
    if not table.variables:
        raise UsageError("diagonalization needs a table with variables")
    d = diagonalize(args.phi, table)
    s = d.summary()
    print(f"phi   : {s['phi']}")
    print(f"beta  : {s['beta']}")
    print(f"m     : code of beta, {s['m_length']} symbols, about {s['m_bits_estimate']} bits")
    print(f"delta : {s['delta']}")
    print(f"sb(m, m) = code of delta: {_yn(d.fixed_point_ok)}")
    print("note  : sb (code 27) is a language extension; beta and delta are not PA formulas")
    return 0 if d.fixed_point_ok else 1


def cmd_lemma_lab(args, cfg: RunConfig) -> int:
    budget = 1000 if cfg.budget is None else cfg.budget
    text = report(budget, cfg.seed)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n", encoding="utf-8")
        for v in json.loads(text)["verdicts"]:
            print(f"{v['claim_id']:<20} {v['status']:<22} samples={v['samples_tried']}")
        print(f"report written to {cfg.out}")
    else:
        print(text)
    return 0


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "eval-pred": cmd_eval_pred,
    "check-proof": cmd_check_proof,
    "search-proof": cmd_search_proof,
    "diagonalize": cmd_diagonalize,
    "lemma-lab": cmd_lemma_lab,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", type=str.upper, choices=[m.value for m in Mode], default="PA")
    common.add_argument("--table", help="symbol table file")
    common.add_argument("--bits", type=int, default=4096, help="largest integer to materialize, in bits")
    common.add_argument("--budget", type=int, help="samples for lemma-lab, line bound for search-proof")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the lemma-lab report here")

    ap = argparse.ArgumentParser(prog="arithlab", description="Gödel numbering and proof predicates for PA.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("encode", parents=[common], help="Gödel number of a formula, term or .paproof")
    p.add_argument("expr")
    p = sub.add_parser("decode", parents=[common], help="formula or proof from a code")
    p.add_argument("code", help="integer or factored form")
    p.add_argument("--as", dest="kind", choices=["auto", "expression", "proof"], default="auto")
    p = sub.add_parser("eval-pred", parents=[common], help="evaluate Pf, Prf, Rf or Ref")
    p.add_argument("name")
    p.add_argument("args", nargs="+")
    p = sub.add_parser("check-proof", parents=[common], help="check a .paproof file both ways")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="stated justifications must be right")
    p = sub.add_parser("search-proof", parents=[common], help="bounded proof search")
    p.add_argument("formula")
    p.add_argument("--lines", type=int, help="line bound (defaults to --budget, else 4)")
    p = sub.add_parser("diagonalize", parents=[common], help="diagonal construction for phi(v)")
    p.add_argument("--phi", required=True)
    sub.add_parser("lemma-lab", parents=[common], help="adjudicate every claim, JSON report")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(Mode(args.mode), args.table, args.bits, args.budget, args.seed, args.out)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, ParseError, ScriptError, TableError, DiagonalError, CaptureError, FileNotFoundError) as exc:
        print(f"arithlab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line driver.

Subcommands: ``traces`` (fixpoint composition), ``traces-bounded`` (bounded
composition), ``equiv`` (trace equivalence of two files) and ``eval``
(expression evaluation under an explicit state).  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 parse or mode error,
2 semantic error, 3 divergence limit, 4 fresh-variable bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .compose import (
    ComposePolicy,
    ExtConfig,
    WlConfig,
    compose_bounded_ext,
    compose_bounded_wl,
    compose_ext,
    compose_wl,
    method_table,
    trace_equivalent,
)
from .errors import (
    DivergenceLimitError,
    FreshBoundExceededError,
    MalformedParamError,
    ModeError,
    ParseError,
    UnboundVariableError,
    UndefinedTraceOpError,
)
from .evaluate import eval_arith, eval_bool
from .localeval import Pending
from .parser import IDENT_RE, parse_expression, parse_program
from .render import pretty_aexp, pretty_bexp, render_traces
from .state import State, initial_state, make_state
from .syntax import ABin, Num, Program, StoredExp, Var, occurrences
from .trace import singleton


def _add_common_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--lang", choices=("wl", "ext"), default="ext")
    sub.add_argument("--increment", type=int, default=100)
    sub.add_argument("--max-rounds", type=int, default=100)
    sub.add_argument("--fresh-bound", type=int, default=100)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--state", default=None, help="initial state override, k=v,...")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagc", description="Trace semantics for a While language"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    traces = sub.add_parser("traces", help="fixpoint trace composition")
    traces.add_argument("file")
    _add_common_flags(traces)

    bounded = sub.add_parser("traces-bounded", help="bounded trace composition")
    bounded.add_argument("file")
    bounded.add_argument("--bound", type=int, required=True)
    _add_common_flags(bounded)

    equiv = sub.add_parser("equiv", help="trace equivalence of two programs")
    equiv.add_argument("file")
    equiv.add_argument("file2")
    _add_common_flags(equiv)

    evaluate = sub.add_parser("eval", help="evaluate an expression under a state")
    evaluate.add_argument("file")
    evaluate.add_argument("--expr", required=True)
    _add_common_flags(evaluate)

    return parser


def parse_state_spec(spec: str) -> State:
    entries = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, value = part.partition("=")
        name = name.strip()
        value = value.strip()
        if not IDENT_RE.fullmatch(name):
            raise ParseError(1, 1, "a variable name", name)
        try:
            entries.append((name, StoredExp(Num(int(value)))))
        except ValueError:
            raise ParseError(1, 1, "an integer value", value) from None
    return make_state(entries)


def _policy(args) -> ComposePolicy:
    return ComposePolicy(
        increment=args.increment,
        max_rounds=args.max_rounds,
        fresh_bound=args.fresh_bound,
    )


def _load(path: str, mode: str) -> Program:
    return parse_program(Path(path).read_text(encoding="utf-8"), mode)


def _initial(args, *items) -> State:
    if args.state is not None:
        return parse_state_spec(args.state)
    names = []
    for item in items:
        names.extend(occurrences(item))
    return initial_state(names)


def _cmd_traces(args) -> int:
    program = _load(args.file, args.lang)
    sigma = _initial(args, program.main if args.lang == "wl" else program)
    policy = _policy(args)
    if args.lang == "wl":
        traces = frozenset(
            c.trace for c in compose_wl(policy, WlConfig(singleton(sigma), Pending(program.main)))
        )
    else:
        table = method_table(program.methods)
        start = ExtConfig(singleton(sigma), (Pending(program.main),))
        traces = frozenset(c.trace for c in compose_ext(policy, table, start))
    sys.stdout.write(render_traces(traces, args.format))
    return 0


def _cmd_traces_bounded(args) -> int:
    program = _load(args.file, args.lang)
    sigma = _initial(args, program.main if args.lang == "wl" else program)
    if args.lang == "wl":
        reached = compose_bounded_wl(args.bound, WlConfig(singleton(sigma), Pending(program.main)))
    else:
        table = method_table(program.methods)
        start = ExtConfig(singleton(sigma), (Pending(program.main),))
        reached = compose_bounded_ext(args.bound, table, start, args.fresh_bound)
    sys.stdout.write(render_traces(frozenset(c.trace for c in reached), args.format))
    return 0


def _cmd_equiv(args) -> int:
    left = _load(args.file, args.lang)
    right = _load(args.file2, args.lang)
    policy = _policy(args)
    if args.state is not None:
        sigma = parse_state_spec(args.state)
    elif args.lang == "wl":
        sigma = _initial(args, left.main, right.main)
    else:
        sigma = _initial(args, left, right)
    if args.lang == "wl":
        same = trace_equivalent(left.main, right.main, sigma, policy, mode="wl")
    else:
        same = trace_equivalent(left, right, sigma, policy)
    sys.stdout.write("equivalent\n" if same else "not equivalent\n")
    return 0


def _cmd_eval(args) -> int:
    program = _load(args.file, args.lang)
    sigma = _initial(args, program.main if args.lang == "wl" else program)
    expr = parse_expression(args.expr)
    if isinstance(expr, (Num, Var, ABin)):
        result = pretty_aexp(eval_arith(expr, sigma))
    else:
        result = pretty_bexp(eval_bool(expr, sigma))
    if args.format == "json":
        sys.stdout.write(json.dumps({"result": result}) + "\n")
    else:
        sys.stdout.write(result + "\n")
    return 0


_COMMANDS = {
    "traces": _cmd_traces,
    "traces-bounded": _cmd_traces_bounded,
    "equiv": _cmd_equiv,
    "eval": _cmd_eval,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ModeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UnboundVariableError, UndefinedTraceOpError, MalformedParamError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DivergenceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FreshBoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Pretty-printing for syntax values and deterministic trace rendering.

``parse_program(pretty_program(p))`` returns ``p`` for every program, and
trace output is byte-identical across runs: states list their variables in
sorted order and trace sets are sorted by the canonical syntax order.
"""

from __future__ import annotations

import json

from .state import State
from .syntax import (
    ArithExp,
    ArithOp,
    Assign,
    BoolExp,
    BoolLit,
    Call,
    Guard,
    If,
    Input,
    LocMem,
    LocPar,
    Method,
    Neg,
    Num,
    Program,
    Rel,
    Seq,
    Skip,
    Star,
    Var,
    While,
    canon_key,
)
from .trace import StateAtom, Trace

_ADDSUB = 1
_MUL = 2

_DISJ = 1
_CONJ = 2
_NOT = 3
_BATOM = 4

_SEQ = 1
_STMT = 2


def pretty_aexp(a, min_prec: int = _ADDSUB) -> str:
    if isinstance(a, Num):
        return str(a.value)
    if isinstance(a, Var):
        return a.name
    prec = _MUL if a.op is ArithOp.MUL else _ADDSUB
    text = f"{pretty_aexp(a.left, prec)} {a.op.value} {pretty_aexp(a.right, prec + 1)}"
    return f"({text})" if prec < min_prec else text


def pretty_bexp(b, min_prec: int = _DISJ) -> str:
    if isinstance(b, BoolLit):
        return "true" if b.value else "false"
    if isinstance(b, Rel):
        return f"{pretty_aexp(b.left)} {b.op.value} {pretty_aexp(b.right)}"
    if isinstance(b, Neg):
        text = f"!{pretty_bexp(b.operand, _NOT)}"
        return f"({text})" if _NOT < min_prec else text
    prec = _CONJ if b.op.value == "&&" else _DISJ
    text = f"{pretty_bexp(b.left, prec)} {b.op.value} {pretty_bexp(b.right, prec + 1)}"
    return f"({text})" if prec < min_prec else text


def pretty_exp(e) -> str:
    if isinstance(e, ArithExp):
        return pretty_aexp(e.arith)
    if isinstance(e, BoolExp):
        return pretty_bexp(e.boolexp)
    return e.name


def pretty_sexp(s) -> str:
    if isinstance(s, Star):
        return "*"
    return pretty_aexp(s.arith)


def pretty_stmt(s, min_prec: int = _SEQ) -> str:
    if isinstance(s, Skip):
        return "skip"
    if isinstance(s, Assign):
        return f"{s.target} := {pretty_aexp(s.value)}"
    if isinstance(s, If):
        return f"if {pretty_bexp(s.cond)} then {pretty_stmt(s.body)} fi"
    if isinstance(s, While):
        return f"while {pretty_bexp(s.cond)} do {pretty_stmt(s.body)} od"
    if isinstance(s, Seq):
        text = f"{pretty_stmt(s.first, _SEQ)} ;; {pretty_stmt(s.second, _STMT)}"
        return f"({text})" if _SEQ < min_prec else text
    if isinstance(s, LocPar):
        return f"co {pretty_stmt(s.left)} || {pretty_stmt(s.right)} oc"
    if isinstance(s, LocMem):
        return f"scope({'; '.join(s.decls)}){{ {pretty_stmt(s.body)} }}"
    if isinstance(s, Input):
        return f"input {s.target}"
    if isinstance(s, Guard):
        return f"guard {pretty_bexp(s.cond)} then {pretty_stmt(s.body)} end"
    if isinstance(s, Call):
        return f"call {s.method}({pretty_aexp(s.arg)})"
    raise TypeError(f"pretty_stmt: unsupported {type(s).__name__}")


def pretty_method(m: Method) -> str:
    return f"method {m.name}({m.formal}) {{ {pretty_stmt(m.body)} }}"


def pretty_program(p: Program) -> str:
    if not p.methods:
        return pretty_stmt(p.main)
    methods = " ".join(pretty_method(m) for m in p.methods)
    return f"program {{ {methods} main {{ {pretty_stmt(p.main)} }} }}"


# ---------------------------------------------------------------------------
# Trace rendering


def render_state(sigma: State) -> str:
    inner = ", ".join(f"{name}={pretty_sexp(value)}" for name, value in sigma.entries)
    return "{" + inner + "}"


def render_atom(atom) -> str:
    if isinstance(atom, StateAtom):
        return render_state(atom.state)
    args = ", ".join(pretty_exp(arg) for arg in atom.args)
    return f"Event({atom.kind.value}, [{args}])"


def render_trace(trace: Trace) -> str:
    return " ~> ".join(render_atom(atom) for atom in trace)


def sorted_traces(traces) -> list:
    return sorted(traces, key=canon_key)


def _trace_to_json(trace: Trace) -> list:
    atoms = []
    for atom in trace:
        if isinstance(atom, StateAtom):
            atoms.append(
                {"state": {name: pretty_sexp(value) for name, value in atom.state.entries}}
            )
        else:
            atoms.append(
                {
                    "event": {
                        "kind": atom.kind.value,
                        "args": [pretty_exp(arg) for arg in atom.args],
                    }
                }
            )
    return atoms


def render_traces(traces, fmt: str = "text") -> str:
    """Render a trace set; the output is byte-deterministic."""
    ordered = sorted_traces(traces)
    if fmt == "json":
        payload = {"traces": [_trace_to_json(t) for t in ordered]}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    count = len(ordered)
    header = f"{count} trace" + ("" if count == 1 else "s") + "\n"
    blocks = [render_trace(t) + "\n" for t in ordered]
    return header + "".join("\n" + block for block in blocks)

"""Direct big-step interpreter over plain integer environments.

Deliberately independent of the trace machinery: no symbolic states, no
traces, just a mutable dict of integers.  Serves as the differential
oracle for the composition engine on the wl subset.
"""

from lagc.syntax import (
    ArithOp,
    Assign,
    BBin,
    BoolLit,
    BoolOp,
    If,
    Neg,
    Num,
    Rel,
    RelOp,
    Seq,
    Skip,
    Var,
    While,
)

_ARITH = {ArithOp.ADD: int.__add__, ArithOp.SUB: int.__sub__, ArithOp.MUL: int.__mul__}
_REL = {
    RelOp.LEQ: lambda l, r: l <= r,
    RelOp.GEQ: lambda l, r: l >= r,
    RelOp.EQ: lambda l, r: l == r,
}


def run_aexp(a, env) -> int:
    if isinstance(a, Num):
        return a.value
    if isinstance(a, Var):
        return env[a.name]
    return _ARITH[a.op](run_aexp(a.left, env), run_aexp(a.right, env))


def run_bexp(b, env) -> bool:
    if isinstance(b, BoolLit):
        return b.value
    if isinstance(b, Neg):
        return not run_bexp(b.operand, env)
    if isinstance(b, BBin):
        if b.op is BoolOp.CONJ:
            return run_bexp(b.left, env) and run_bexp(b.right, env)
        return run_bexp(b.left, env) or run_bexp(b.right, env)
    return _REL[b.op](run_aexp(b.left, env), run_aexp(b.right, env))


def execute(stmt, env: dict) -> dict:
    """Run a wl statement to completion, mutating and returning ``env``."""
    if isinstance(stmt, Skip):
        return env
    if isinstance(stmt, Assign):
        env[stmt.target] = run_aexp(stmt.value, env)
        return env
    if isinstance(stmt, If):
        if run_bexp(stmt.cond, env):
            execute(stmt.body, env)
        return env
    if isinstance(stmt, While):
        while run_bexp(stmt.cond, env):
            execute(stmt.body, env)
        return env
    if isinstance(stmt, Seq):
        execute(stmt.first, env)
        execute(stmt.second, env)
        return env
    raise TypeError(f"not a wl statement: {type(stmt).__name__}")

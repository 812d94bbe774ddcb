"""Local valuation: one statement evaluated up to the next scheduling point.

The result of ``valuate`` is the finite set of continuation traces a
statement can produce in a given state: each carries a path condition, the
symbolic trace built so far, and the statement remaining after the
scheduling point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import FreshBoundExceededError, ModeError
from .evaluate import eval_arith, eval_bool
from .state import BOUND_EXCEEDED_PREFIX, State, update, vargen
from .syntax import (
    ArithExp,
    Assign,
    Call,
    Guard,
    If,
    Input,
    LocMem,
    LocPar,
    MethodRef,
    Neg,
    Num,
    STAR,
    Seq,
    Skip,
    Stmt,
    StoredExp,
    Var,
    While,
    check_mode,
    substitute,
)
from .trace import CondTrace, EventKind, StateAtom, gen_event, singleton

DEFAULT_FRESH_BOUND = 100


@dataclass(frozen=True)
class Pending:
    """A statement still left to evaluate."""

    stmt: Stmt


@dataclass(frozen=True)
class Done:
    """The empty continuation: the process has finished."""


DONE = Done()

Marker = Union[Pending, Done]


@dataclass(frozen=True)
class ContTrace:
    cond: CondTrace
    marker: Marker


def cont_append(marker: Marker, stmt: Stmt) -> Marker:
    """Sequence another statement after whatever the marker still holds."""
    if isinstance(marker, Pending):
        return Pending(Seq(marker.stmt, stmt))
    return Pending(stmt)


def parallel(left: Marker, right: Marker) -> Marker:
    """Rebuild local parallelism around two markers; finished sides drop out."""
    if isinstance(left, Pending) and isinstance(right, Pending):
        return Pending(LocPar(left.stmt, right.stmt))
    if isinstance(left, Pending):
        return left
    return right


def _fresh(sigma: State, base: str, suffix: str, bound: int) -> str:
    name = vargen(sigma, 0, bound, "$" + base + suffix)
    if name.startswith(BOUND_EXCEEDED_PREFIX):
        raise FreshBoundExceededError(name)
    return name


def valuate(stmt: Stmt, sigma: State, mode: str, fresh_bound: int = DEFAULT_FRESH_BOUND) -> frozenset:
    """All continuation traces of ``stmt`` in ``sigma`` up to one scheduling point."""
    check_mode(mode)
    if isinstance(stmt, Skip):
        return frozenset({ContTrace(CondTrace(frozenset(), singleton(sigma)), DONE)})
    if isinstance(stmt, Assign):
        value = StoredExp(eval_arith(stmt.value, sigma))
        trace = singleton(sigma) + (StateAtom(update(sigma, stmt.target, value)),)
        return frozenset({ContTrace(CondTrace(frozenset(), trace), DONE)})
    if isinstance(stmt, If):
        return frozenset(
            {
                ContTrace(
                    CondTrace(frozenset({eval_bool(stmt.cond, sigma)}), singleton(sigma)),
                    Pending(stmt.body),
                ),
                ContTrace(
                    CondTrace(frozenset({eval_bool(Neg(stmt.cond), sigma)}), singleton(sigma)),
                    DONE,
                ),
            }
        )
    if isinstance(stmt, While):
        return frozenset(
            {
                ContTrace(
                    CondTrace(frozenset({eval_bool(stmt.cond, sigma)}), singleton(sigma)),
                    Pending(Seq(stmt.body, stmt)),
                ),
                ContTrace(
                    CondTrace(frozenset({eval_bool(Neg(stmt.cond), sigma)}), singleton(sigma)),
                    DONE,
                ),
            }
        )
    if isinstance(stmt, Seq):
        return frozenset(
            ContTrace(cont.cond, cont_append(cont.marker, stmt.second))
            for cont in valuate(stmt.first, sigma, mode, fresh_bound)
        )
    if mode != "ext":
        raise ModeError(f"{type(stmt).__name__} is not available in wl mode")
    if isinstance(stmt, LocPar):
        from_left = frozenset(
            ContTrace(cont.cond, parallel(cont.marker, Pending(stmt.right)))
            for cont in valuate(stmt.left, sigma, mode, fresh_bound)
        )
        from_right = frozenset(
            ContTrace(cont.cond, parallel(Pending(stmt.left), cont.marker))
            for cont in valuate(stmt.right, sigma, mode, fresh_bound)
        )
        return from_left | from_right
    if isinstance(stmt, LocMem):
        if not stmt.decls:
            return valuate(stmt.body, sigma, mode, fresh_bound)
        declared, rest = stmt.decls[0], stmt.decls[1:]
        fresh = _fresh(sigma, declared, "::Scope", fresh_bound)
        trace = singleton(sigma) + (StateAtom(update(sigma, fresh, StoredExp(Num(0)))),)
        marker = Pending(substitute(LocMem(rest, stmt.body), declared, fresh))
        return frozenset({ContTrace(CondTrace(frozenset(), trace), marker)})
    if isinstance(stmt, Input):
        fresh = _fresh(sigma, stmt.target, "::Input", fresh_bound)
        rerouted = update(update(sigma, fresh, STAR), stmt.target, StoredExp(Var(fresh)))
        trace = singleton(sigma) + gen_event(
            EventKind.INPUT, rerouted, (ArithExp(Var(fresh)),)
        )
        return frozenset({ContTrace(CondTrace(frozenset(), trace), DONE)})
    if isinstance(stmt, Guard):
        return frozenset(
            {
                ContTrace(
                    CondTrace(frozenset({eval_bool(stmt.cond, sigma)}), singleton(sigma)),
                    Pending(stmt.body),
                )
            }
        )
    if isinstance(stmt, Call):
        trace = gen_event(
            EventKind.INVOKE, sigma, (MethodRef(stmt.method), ArithExp(stmt.arg))
        )
        return frozenset({ContTrace(CondTrace(frozenset(), trace), DONE)})
    raise ModeError(f"valuate: unsupported statement {type(stmt).__name__}")

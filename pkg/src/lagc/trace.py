"""Symbolic traces: sequences of states and events, plus path conditions.

A trace is a plain tuple of atoms so that concatenation, hashing and set
membership come for free.  The partial operations (first/last state and the
semantic chop) raise ``UndefinedTraceOpError`` outside their domain instead
of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .errors import UndefinedTraceOpError
from .evaluate import eval_exp_list, is_concrete
from .state import State, is_concrete_state, is_wellformed_state, symbolic_vars
from .syntax import ArithExp, BoolLit, Exp, MethodRef, free_vars


class EventKind(Enum):
    INPUT = "inpEv"
    INVOKE = "invEv"
    REACT = "invREv"


@dataclass(frozen=True)
class StateAtom:
    state: State


@dataclass(frozen=True)
class EventAtom:
    kind: EventKind
    args: tuple


TraceAtom = Union[StateAtom, EventAtom]
Trace = Tuple[TraceAtom, ...]
PathCondition = frozenset

EMPTY_TRACE: Trace = ()


@dataclass(frozen=True)
class CondTrace:
    """A symbolic trace guarded by a path condition."""

    pc: frozenset
    trace: Trace


def singleton(sigma: State) -> Trace:
    return (StateAtom(sigma),)


def concat(left: Trace, right: Trace) -> Trace:
    return left + right


def first_state(trace: Trace) -> State:
    if trace and isinstance(trace[0], StateAtom):
        return trace[0].state
    raise UndefinedTraceOpError("trace does not start with a state")


def last_state(trace: Trace) -> State:
    if trace and isinstance(trace[-1], StateAtom):
        return trace[-1].state
    raise UndefinedTraceOpError("trace does not end with a state")


def semantic_chop(left: Trace, right: Trace) -> Trace:
    """Concatenate two traces that share a boundary state, dropping one copy.

    Only the shape of ``left`` is checked; whether the boundary states agree
    is the caller's responsibility.
    """
    if left and isinstance(left[-1], StateAtom):
        return left[:-1] + right
    raise UndefinedTraceOpError("semantic chop needs a final state on the left")


def semantic_chop_cond(left: CondTrace, right: CondTrace) -> CondTrace:
    return CondTrace(left.pc | right.pc, semantic_chop(left.trace, right.trace))


def gen_event(kind: EventKind, sigma: State, args) -> Trace:
    """Surround an event with the given state, simplifying its arguments."""
    return (
        StateAtom(sigma),
        EventAtom(kind, eval_exp_list(args, sigma)),
        StateAtom(sigma),
    )


def trace_symbolic_vars(trace: Trace) -> frozenset:
    out = frozenset()
    for atom in trace:
        if isinstance(atom, StateAtom):
            out |= symbolic_vars(atom.state)
    return out


def is_consistent(pc) -> bool:
    """All members are Boolean literals and none of them is false."""
    return all(isinstance(b, BoolLit) and b.value for b in pc)


def is_wellformed_cond_trace(cond: CondTrace) -> bool:
    """The five wellformedness conditions, checked together.

    1. Variables concrete in some state never occur symbolic elsewhere.
    2. Path-condition variables are symbolic variables of the trace.
    3. Event-argument variables are symbolic variables of the trace.
    4. Events sit between identical states, and the trace starts and ends
       with a state (the empty trace therefore fails).
    5. All states are wellformed.
    """
    trace = cond.trace
    symbolic = trace_symbolic_vars(trace)
    for atom in trace:
        if isinstance(atom, StateAtom):
            sigma = atom.state
            non_symbolic = frozenset(n for n, _ in sigma.entries) - symbolic_vars(sigma)
            if non_symbolic & symbolic:
                return False
            if not is_wellformed_state(sigma):
                return False
        else:
            if not all(free_vars(arg) <= symbolic for arg in atom.args):
                return False
    for b in cond.pc:
        if not free_vars(b) <= symbolic:
            return False
    if not trace or not isinstance(trace[0], StateAtom) or not isinstance(trace[-1], StateAtom):
        return False
    for i, atom in enumerate(trace):
        if isinstance(atom, EventAtom):
            if i == 0 or i == len(trace) - 1:
                return False
            before, after = trace[i - 1], trace[i + 1]
            if not (isinstance(before, StateAtom) and isinstance(after, StateAtom)):
                return False
            if before.state != after.state:
                return False
    return True


def is_concrete_trace(trace: Trace) -> bool:
    for atom in trace:
        if isinstance(atom, StateAtom):
            if not is_concrete_state(atom.state):
                return False
        elif not is_concrete(atom.args):
            return False
    return True


def is_concrete_cond_trace(cond: CondTrace) -> bool:
    return (
        is_wellformed_cond_trace(cond)
        and is_concrete(cond.pc)
        and is_concrete_trace(cond.trace)
    )


def count_atom(trace: Trace, atom: TraceAtom) -> int:
    return sum(1 for candidate in trace if candidate == atom)


def invocation_wellformed(trace: Trace) -> bool:
    """Every reaction event must have an unmatched invocation before it."""
    for i, atom in enumerate(trace):
        if isinstance(atom, EventAtom) and atom.kind is EventKind.REACT:
            prefix = trace[:i]
            invocations = count_atom(prefix, EventAtom(EventKind.INVOKE, atom.args))
            reactions = count_atom(prefix, EventAtom(EventKind.REACT, atom.args))
            if invocations <= reactions:
                return False
    return True


def harvest_params(trace: Trace) -> frozenset:
    """Arguments of all invocation events shaped [method, arithmetic arg]."""
    out = set()
    for atom in trace:
        if (
            isinstance(atom, EventAtom)
            and atom.kind is EventKind.INVOKE
            and len(atom.args) == 2
            and isinstance(atom.args[0], MethodRef)
            and isinstance(atom.args[1], ArithExp)
        ):
            out.add(atom.args[1])
    return frozenset(out)

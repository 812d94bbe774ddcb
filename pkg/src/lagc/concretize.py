"""Concretization mappings for states and traces.

A concretization mapping is itself a concrete state covering exactly the
symbolic variables of its target.  Applying one evaluates the target under
the mapping and then lets the mapping win on common keys.  The minimal
mapping sends every symbolic variable to one fixed numeral, which is what
the composition engine uses at every step.
"""

from __future__ import annotations

from .evaluate import eval_bexp_set, eval_exp_list, eval_sexp
from .state import State, domain, is_concrete_state, symbolic_vars
from .syntax import Num, Star, StoredExp
from .trace import CondTrace, EventAtom, StateAtom, Trace


def is_conc_map_state(rho: State, sigma: State) -> bool:
    return domain(rho) & domain(sigma) == symbolic_vars(sigma) and is_concrete_state(rho)


def apply_conc_state(rho: State, sigma: State) -> State:
    """Simplify ``sigma`` under ``rho``, then merge with ``rho`` winning."""
    merged = {name: eval_sexp(value, rho) for name, value in sigma.entries}
    merged.update(rho.as_dict())
    return State(tuple(merged.items()))


def min_conc_map_state(sigma: State, numeral: int) -> State:
    return State(
        tuple(
            (name, StoredExp(Num(numeral)))
            for name, value in sigma.entries
            if isinstance(value, Star)
        )
    )


def is_conc_map_trace(rho: State, trace: Trace) -> bool:
    if not is_concrete_state(rho):
        return False
    return all(
        is_conc_map_state(rho, atom.state)
        for atom in trace
        if isinstance(atom, StateAtom)
    )


def min_conc_map_trace(trace: Trace, numeral: int) -> State:
    """Combine the minimal mappings of all states, later states winning."""
    merged: dict = {}
    for atom in trace:
        if isinstance(atom, StateAtom):
            merged.update(min_conc_map_state(atom.state, numeral).as_dict())
    return State(tuple(merged.items()))


def concretize_trace(rho: State, trace: Trace) -> Trace:
    return tuple(
        StateAtom(apply_conc_state(rho, atom.state))
        if isinstance(atom, StateAtom)
        else EventAtom(atom.kind, eval_exp_list(atom.args, rho))
        for atom in trace
    )


def concretize_cond_trace(rho: State, cond: CondTrace) -> CondTrace:
    return CondTrace(eval_bexp_set(cond.pc, rho), concretize_trace(rho, cond.trace))

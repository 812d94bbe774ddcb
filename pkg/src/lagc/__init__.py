"""Executable trace semantics for a While language and its concurrent extension."""

from .compose import (
    ComposePolicy,
    ExtConfig,
    WlConfig,
    initial_state_for,
    trace_equivalent,
    traces_ext,
    traces_wl,
)
from .parser import parse_expression, parse_program
from .render import pretty_program, render_traces
from .state import State, initial_state, make_state

__all__ = [
    "ComposePolicy",
    "ExtConfig",
    "State",
    "WlConfig",
    "initial_state",
    "initial_state_for",
    "make_state",
    "parse_expression",
    "parse_program",
    "pretty_program",
    "render_traces",
    "trace_equivalent",
    "traces_ext",
    "traces_wl",
]

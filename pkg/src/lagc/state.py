"""Symbolic states: finite maps from variables to stored expressions.

States compare by their key-value sets, iterate in sorted key order, and
are hashable, so traces built from them can live in sets and be rendered
deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple, Union

from .syntax import Num, SExp, Star, StoredExp, free_vars

BOUND_EXCEEDED_PREFIX = "$BOUND_EXCEEDED::"

Entries = Union[Mapping[str, SExp], Iterable[Tuple[str, SExp]]]


@dataclass(frozen=True)
class State:
    entries: tuple = ()

    def __post_init__(self):
        mapping = dict(self.entries)
        object.__setattr__(self, "entries", tuple(sorted(mapping.items())))
        object.__setattr__(self, "_map", mapping)

    def lookup(self, variable: str) -> Optional[SExp]:
        return self._map.get(variable)

    def __contains__(self, variable: str) -> bool:
        return variable in self._map

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)


EMPTY_STATE = State()


def make_state(entries: Entries) -> State:
    """Build a state from a mapping or (name, value) pairs; later pairs win."""
    if isinstance(entries, Mapping):
        entries = entries.items()
    return State(tuple(entries))


def domain(sigma: State) -> frozenset:
    return frozenset(name for name, _ in sigma.entries)


def update(sigma: State, variable: str, value: SExp) -> State:
    return State(sigma.entries + ((variable, value),))


def symbolic_vars(sigma: State) -> frozenset:
    """Variables the state maps to the symbolic placeholder."""
    return frozenset(name for name, value in sigma.entries if isinstance(value, Star))


def is_wellformed_state(sigma: State) -> bool:
    """Every variable mentioned in an image must be symbolic in the state."""
    symbolic = symbolic_vars(sigma)
    return all(free_vars(value) <= symbolic for _, value in sigma.entries)


def is_concrete_state(sigma: State) -> bool:
    """Every image is a plain numeral."""
    return all(
        isinstance(value, StoredExp) and isinstance(value.arith, Num)
        for _, value in sigma.entries
    )


def vargen(sigma: State, n: int, bound: int, variable: str) -> str:
    """Deterministic fresh-name search: prepend 'c' until outside the domain.

    When the bound runs out the standardized failure name is returned; callers
    in the composition engine turn that into a hard error.
    """
    while bound > 0:
        candidate = "c" * n + variable
        if candidate not in sigma:
            return candidate
        n += 1
        bound -= 1
    return BOUND_EXCEEDED_PREFIX + variable


def initial_state(variables: Iterable[str]) -> State:
    """Map each distinct variable to the numeral 0."""
    zero = StoredExp(Num(0))
    return State(tuple((name, zero) for name in dict.fromkeys(variables)))


def simplify_state(sigma: State) -> State:
    """Evaluate every image under the state itself; the domain is unchanged."""
    from .evaluate import eval_sexp

    return State(tuple((name, eval_sexp(value, sigma)) for name, value in sigma.entries))

"""NFA construction over the partial-derivative state space.

States are the expressions reachable from the initial one, identified
up to structural equality; a state is final when it is nullable.  The
number of states can explode (interleaving n independent three-event
sessions needs 4^n of them) while each individual state stays small,
which is exactly the trade-off the bounds module quantifies.

Construction is breadth-first with successors ordered by their rendered
text, so state numbering, transition order, and every serialization are
stable across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .corpus import file_descriptor_spec
from .errors import CapacityError
from .partial import DEFAULT_CLOSURE_CAP, partial_derivatives
from .syntax import Regex, Symbol, alphabet, format_regex, has_eps


@dataclass(frozen=True)
class Nfa:
    states: tuple[Regex, ...]
    initial: int
    transitions: tuple[tuple[int, Symbol, int], ...]
    finals: frozenset[int]

    @cached_property
    def _delta(self) -> dict[tuple[int, Symbol], frozenset[int]]:
        out: dict[tuple[int, Symbol], set[int]] = {}
        for source, symbol, target in self.transitions:
            out.setdefault((source, symbol), set()).add(target)
        return {key: frozenset(value) for key, value in out.items()}

    def accepts(self, word: Sequence[Symbol]) -> bool:
        """Standard subset simulation from the initial state."""
        current = {self.initial}
        for symbol in word:
            current = set().union(
                *(self._delta.get((state, symbol), frozenset()) for state in current)
            )
            if not current:
                return False
        return any(state in self.finals for state in current)

    def to_json_dict(self) -> dict:
        return {
            "states": [format_regex(state) for state in self.states],
            "initial": self.initial,
            "finals": sorted(self.finals),
            "transitions": [list(t) for t in self.transitions],
        }

    def to_dot(self) -> str:
        lines = [
            "digraph nfa {",
            "  rankdir=LR;",
            '  start [shape=none, label=""];',
        ]
        for index, state in enumerate(self.states):
            shape = "doublecircle" if index in self.finals else "circle"
            label = format_regex(state).replace('"', '\\"')
            lines.append(f'  n{index} [shape={shape}, label="{label}"];')
        lines.append(f"  start -> n{self.initial};")
        for source, symbol, target in self.transitions:
            lines.append(f'  n{source} -> n{target} [label="{symbol}"];')
        lines.append("}")
        return "\n".join(lines)


def build_nfa(e: Regex, *, cap: int = DEFAULT_CLOSURE_CAP) -> Nfa:
    """Build the NFA whose states are the reachable partial derivatives."""
    symbols = sorted(alphabet(e))
    index: dict[Regex, int] = {e: 0}
    states: list[Regex] = [e]
    transitions: list[tuple[int, Symbol, int]] = []
    queue: deque[Regex] = deque([e])
    while queue:
        state = queue.popleft()
        source = index[state]
        for symbol in symbols:
            for target in sorted(partial_derivatives(state, symbol), key=format_regex):
                if target not in index:
                    index[target] = len(states)
                    states.append(target)
                    queue.append(target)
                    if len(states) > cap:
                        raise CapacityError(f"state space exceeded {cap} states")
                transitions.append((source, symbol, index[target]))
    finals = frozenset(i for i, state in enumerate(states) if has_eps(state))
    return Nfa(tuple(states), 0, tuple(transitions), finals)


def state_growth_bench(n: int) -> int:
    """State count of the NFA for n interleaved open/access/close sessions.

    The specification is ``o1 a1 c1 || ... || on an cn`` over 3n
    distinct symbols; each session contributes a factor of 4 reachable
    states, so the count observed here is 4^n.
    """
    if not 1 <= n <= 8:
        raise ValueError("n must be between 1 and 8")
    return len(build_nfa(file_descriptor_spec(n)).states)

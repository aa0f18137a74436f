"""
Two-tape deterministic Turing machines and a direct simulator.

The input tape is read-only and holds ``L s R`` with ``s`` over ``0 1``;
its head is an index.  The work tape is split around its head into the
cells on the left (natural order, last character adjacent to the head), the
scanned cell, and the cells on the right (first character adjacent).

Machines are written in a small line-oriented ``.tm`` format::

    states: even odd accept reject
    initial: even
    accept: accept
    reject: reject
    rule L _ even -> +1 _ S even

Work moves are ``L``, ``S`` (stay) and ``R``; ``_`` is the blank.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources

INPUT_SYMBOLS = ("0", "1", "L", "R")
WORK_SYMBOLS = ("0", "1", "_")
WORK_MOVES = ("L", "S", "R")
INPUT_MOVES = (-1, 0, 1)
BLANK = "_"


class MachineError(ValueError):
    """A machine failed validation; ``diagnostics`` lists every problem."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class MachineSyntaxError(ValueError):
    def __init__(self, line, column, message):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class BoundaryError(RuntimeError):
    """The input head tried to leave the input string."""


@dataclass(frozen=True)
class Rule:
    read_input: str
    read_work: str
    state: str
    input_move: int
    write: str
    work_move: str
    next_state: str

    @property
    def key(self):
        return (self.read_input, self.read_work, self.state)


@dataclass(frozen=True)
class Machine:
    states: tuple
    initial: str
    accept: str
    reject: str
    rules: tuple = ()
    name: str = field(default="machine", compare=False)

    @cached_property
    def delta(self):
        return {r.key: r for r in self.rules}

    @property
    def finals(self):
        return (self.accept, self.reject)

    def is_final(self, state):
        return state in (self.accept, self.reject)


@dataclass(frozen=True)
class Configuration:
    input: str
    head: int
    work_left: str
    work_head: str
    work_right: str
    state: str

    @property
    def scanned(self):
        return self.input[self.head]

    @property
    def work_cells(self):
        return len(self.work_left) + 1 + len(self.work_right)

    def __str__(self):
        return (f"({self.input}, {self.head} | {self.work_left or 'ε'}, {self.work_head}, "
                f"{self.work_right or 'ε'} | {self.state})")


@dataclass(frozen=True)
class RunResult:
    final: Configuration
    steps: int
    work_space: int
    halted: bool
    stuck: bool = False
    accepted: bool | None = None  # None unless halted


def validate_input(i):
    if len(i) < 2 or i[0] != "L" or i[-1] != "R" or any(c not in "01" for c in i[1:-1]):
        raise ValueError(f"input must have the shape L s R with s over 0/1, got {i!r}")


def wrap(payload):
    """``"101"`` -> ``"L101R"``."""
    i = "L" + payload + "R"
    validate_input(i)
    return i


def initial_config(M, i):
    validate_input(i)
    return Configuration(i, 0, "", BLANK, "", M.initial)


def step_machine(M, C):
    """The successor configuration, or None if ``C`` is final or stuck."""
    if M.is_final(C.state):
        return None
    rule = M.delta.get((C.scanned, C.work_head, C.state))
    if rule is None:
        return None
    head = C.head + rule.input_move
    if not 0 <= head < len(C.input):
        raise BoundaryError(f"input head moves to {head} outside {C.input!r} from {C}")
    left, right = C.work_left, C.work_right
    if rule.work_move == "S":
        return Configuration(C.input, head, left, rule.write, right, rule.next_state)
    if rule.work_move == "L":
        new_head = left[-1] if left else BLANK
        return Configuration(C.input, head, left[:-1], new_head, rule.write + right, rule.next_state)
    new_head = right[0] if right else BLANK
    return Configuration(C.input, head, left + rule.write, new_head, right[1:], rule.next_state)


def run_machine(M, i, max_steps=10**6):
    C = initial_config(M, i)
    steps = 0
    space = C.work_cells
    while steps < max_steps:
        D = step_machine(M, C)
        if D is None:
            break
        C = D
        steps += 1
        space = max(space, C.work_cells)
    halted = M.is_final(C.state)
    stuck = not halted and (C.scanned, C.work_head, C.state) not in M.delta
    accepted = C.state == M.accept if halted else None
    return RunResult(C, steps, space, halted, stuck, accepted)


def trace_machine(M, i, max_steps):
    """Configurations visited from the initial one, at most ``max_steps`` transitions."""
    C = initial_config(M, i)
    out = [C]
    for _ in range(max_steps):
        C = step_machine(M, C)
        if C is None:
            break
        out.append(C)
    return out


# -- validation and text format ----------------------------------------------

def validate_machine(M):
    """Every violated machine invariant, as human-readable diagnostics."""
    diags = []
    states = set(M.states)
    if len(states) != len(M.states):
        diags.append("duplicate state names")
    for role in ("initial", "accept", "reject"):
        if getattr(M, role) not in states:
            diags.append(f"{role} state {getattr(M, role)!r} is not declared")
    if M.accept == M.reject:
        diags.append("accept and reject must differ")
    seen = set()
    for r in M.rules:
        where = f"rule {r.read_input} {r.read_work} {r.state}"
        if r.key in seen:
            diags.append(f"{where}: duplicate rule")
        seen.add(r.key)
        if r.read_input not in INPUT_SYMBOLS:
            diags.append(f"{where}: unknown input symbol {r.read_input!r}")
        if r.read_work not in WORK_SYMBOLS or r.write not in WORK_SYMBOLS:
            diags.append(f"{where}: unknown work symbol")
        if r.input_move not in INPUT_MOVES:
            diags.append(f"{where}: input move must be -1, 0 or +1")
        if r.work_move not in WORK_MOVES:
            diags.append(f"{where}: work move must be L, S or R")
        for s in (r.state, r.next_state):
            if s not in states:
                diags.append(f"{where}: unknown state {s!r}")
        if M.is_final(r.state):
            diags.append(f"{where}: delta defined on final state")
    return diags


_HEADER = re.compile(r"(states|initial|accept|reject)\s*:(.*)$")
_MOVE = {"-1": -1, "0": 0, "+1": 1, "1": 1}


def parse_machine(text, name="machine"):
    """Parse and validate a ``.tm`` description.

    Raises :class:`MachineSyntaxError` for malformed lines and
    :class:`MachineError` for semantic problems.
    """
    header = {}
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        col = len(line) - len(line.lstrip()) + 1
        line = line.strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            key, value = m.group(1), m.group(2).split()
            if key in header:
                raise MachineSyntaxError(lineno, col, f"repeated '{key}' header")
            if key != "states" and len(value) != 1:
                raise MachineSyntaxError(lineno, col, f"'{key}' takes exactly one state")
            header[key] = tuple(value) if key == "states" else value[0]
            continue
        words = line.split()
        if words[0] != "rule":
            raise MachineSyntaxError(lineno, col, f"unknown directive {words[0]!r}")
        if len(words) != 9 or words[4] != "->":
            raise MachineSyntaxError(
                lineno, col, "expected 'rule <in> <work> <state> -> <imove> <write> <wmove> <state>'")
        if words[5] not in _MOVE:
            raise MachineSyntaxError(lineno, raw.index(words[5], raw.index("->")) + 1,
                                     f"bad input move {words[5]!r}")
        rules.append(Rule(words[1], words[2], words[3], _MOVE[words[5]], words[6], words[7], words[8]))
    missing = [k for k in ("states", "initial", "accept", "reject") if k not in header]
    if missing:
        raise MachineSyntaxError(len(text.splitlines()) + 1, 1, f"missing header(s): {', '.join(missing)}")
    M = Machine(header["states"], header["initial"], header["accept"], header["reject"],
                tuple(rules), name=name)
    diags = validate_machine(M)
    if diags:
        raise MachineError(diags)
    return M


def format_machine(M):
    lines = [
        f"states: {' '.join(M.states)}",
        f"initial: {M.initial}",
        f"accept: {M.accept}",
        f"reject: {M.reject}",
    ]
    for r in M.rules:
        move = {-1: "-1", 0: "0", 1: "+1"}[r.input_move]
        lines.append(f"rule {r.read_input} {r.read_work} {r.state} -> "
                     f"{move} {r.write} {r.work_move} {r.next_state}")
    return "\n".join(lines) + "\n"


def load_machine(path):
    from pathlib import Path
    path = Path(path)
    return parse_machine(path.read_text(encoding="utf-8"), name=path.stem)


CORPUS = ("parity", "equals101", "first_last")


def corpus_machine(name):
    text = resources.files("tmlambda.machines").joinpath(f"{name}.tm").read_text(encoding="utf-8")
    return parse_machine(text, name=name)


def corpus():
    return [corpus_machine(n) for n in CORPUS]

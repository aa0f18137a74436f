"""
Terms of the deterministic lambda-calculus and weak evaluation.

Terms are immutable.  Every node caches its set of free variables, which
lets substitution skip closed subterms and return them unchanged, so a
beta-step costs time proportional to the paths leading to the substituted
occurrences rather than to the size of the body.

Evaluation contexts are ``E ::= <.> | E v``: only the head of the
application spine is ever reduced, never an argument and never the body of
an abstraction.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass, field

# Scott-encoded tapes nest a few binders per cell; long inputs recurse deep.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True, slots=True)
class Var:
    name: str
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", frozenset((self.name,)))

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True, slots=True)
class Lam:
    param: str
    body: "Term"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fv = self.body.fv
        if self.param in fv:
            fv = fv - {self.param}
        object.__setattr__(self, "fv", fv)

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b = self.fn.fv, self.arg.fv
        object.__setattr__(self, "fv", a | b if b else a)

    def __str__(self):
        return to_str(self)


Term = Var | Lam | App


@dataclass(frozen=True)
class EvalOutcome:
    result: Term
    steps: int
    exhausted: bool


# -- construction helpers ---------------------------------------------------

def lams(params, body):
    """Wrap ``body`` in abstractions over ``params`` (outermost first)."""
    if isinstance(params, str):
        params = params.split()
    for p in reversed(params):
        body = Lam(p, body)
    return body


def app(fn, *args):
    """Left-nested application ``fn a1 ... an``; strings become variables."""
    t = Var(fn) if isinstance(fn, str) else fn
    for a in args:
        t = App(t, Var(a) if isinstance(a, str) else a)
    return t


class Fresh:
    """Deterministic supply of binder names: ``k`` -> ``k1``, ``k2``, ..."""

    def __init__(self, start=0):
        self.counter = start

    def __call__(self, base):
        self.counter += 1
        return f"{base}{self.counter}"

    def many(self, *bases):
        return [self(b) for b in bases]


# -- predicates ---------------------------------------------------------------

def is_value(t):
    return isinstance(t, (Var, Lam))


def is_closed(t):
    return not t.fv


def is_lamdet(t):
    """True iff every application in ``t`` has a value as its argument."""
    stack = [t]
    while stack:
        t = stack.pop()
        if isinstance(t, App):
            if isinstance(t.arg, App):
                return False
            stack.append(t.fn)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return True


def size(t):
    n = 0
    stack = [t]
    while stack:
        t = stack.pop()
        n += 1
        if isinstance(t, App):
            stack.append(t.fn)
            stack.append(t.arg)
        elif isinstance(t, Lam):
            stack.append(t.body)
    return n


# -- substitution -------------------------------------------------------------

def _rename_away(name, avoid):
    while name in avoid:
        name += "'"
    return name


def substitute(t, x, v):
    """Capture-avoiding ``t{x <- v}``."""
    if x not in t.fv:
        return t
    if isinstance(t, Var):
        return v
    if isinstance(t, App):
        return App(substitute(t.fn, x, v), substitute(t.arg, x, v))
    y, body = t.param, t.body
    if y in v.fv:
        fresh = _rename_away(y, v.fv | body.fv)
        body = substitute(body, y, Var(fresh))
        y = fresh
    return Lam(y, substitute(body, x, v))


# -- evaluation ---------------------------------------------------------------

def _unwind(t):
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    return t, args  # args innermost-last


def _rewind(head, args):
    for a in reversed(args):
        head = App(head, a)
    return head


def step_det(t):
    """The unique weak successor of ``t``, or None when ``t`` is normal."""
    head, args = _unwind(t)
    if not isinstance(head, Lam) or not args:
        return None
    arg = args.pop()
    return _rewind(substitute(head.body, head.param, arg), args)


def evaluate(t, fuel=10**8, every=0, observe=None):
    """Reduce ``t`` until it is normal or ``fuel`` beta-steps have been made.

    The spine is kept as an explicit argument stack, which performs exactly
    the same steps as iterating :func:`step_det`.  When ``observe`` is given
    it is called with the rebuilt term after every ``every`` steps.
    """
    head, args = _unwind(t)
    steps = 0
    while isinstance(head, Lam) and args:
        if steps >= fuel:
            return EvalOutcome(_rewind(head, args), steps, True)
        arg = args.pop()
        head = substitute(head.body, head.param, arg)
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        steps += 1
        if observe is not None and every and steps % every == 0:
            observe(_rewind(head, args), steps)
    return EvalOutcome(_rewind(head, args), steps, False)


def redex_positions(t):
    """Paths of all beta-redexes reachable without entering an abstraction.

    Contexts here are the liberal weak ones ``<.> | E t | t E``; on terms of
    the deterministic calculus at most one path is ever found.
    """
    found = []
    stack = [(t, ())]
    while stack:
        t, path = stack.pop()
        if isinstance(t, App):
            if isinstance(t.fn, Lam):
                found.append(path)
            stack.append((t.fn, path + ("fn",)))
            stack.append((t.arg, path + ("arg",)))
    return found


# -- comparison ---------------------------------------------------------------

def alpha_equal(t, u):
    """Equality up to consistent renaming of bound variables."""

    def go(t, u, env_t, env_u, depth):
        while True:
            if isinstance(t, Var) and isinstance(u, Var):
                bt, bu = env_t.get(t.name), env_u.get(u.name)
                if bt is None and bu is None:
                    return t.name == u.name
                return bt == bu
            if isinstance(t, Lam) and isinstance(u, Lam):
                env_t = {**env_t, t.param: depth}
                env_u = {**env_u, u.param: depth}
                t, u, depth = t.body, u.body, depth + 1
                continue
            if isinstance(t, App) and isinstance(u, App):
                if not go(t.arg, u.arg, env_t, env_u, depth):
                    return False
                t, u = t.fn, u.fn
                continue
            return False

    return go(t, u, {}, {}, 0)


# -- fixpoint -----------------------------------------------------------------

def theta():
    """``λx.λy. y (λz. x x y z)``"""
    return lams("x y", app("y", Lam("z", app("x", "x", "y", "z"))))


def fixpoint():
    """Turing's call-by-value fixpoint combinator ``θ θ``."""
    th = theta()
    return App(th, th)


# -- concrete syntax ----------------------------------------------------------

def to_str(t):
    """Print with ``\\x y. t`` binders and minimal parentheses."""
    out = []

    def emit(t, ctx):
        # ctx: 0 = top/lambda body, 1 = function position, 2 = argument position
        if isinstance(t, Var):
            out.append(t.name)
        elif isinstance(t, Lam):
            if ctx:
                out.append("(")
            params = []
            while isinstance(t, Lam):
                params.append(t.param)
                t = t.body
            out.append("\\" + " ".join(params) + ". ")
            emit(t, 0)
            if ctx:
                out.append(")")
        else:
            if ctx == 2:
                out.append("(")
            emit(t.fn, 1)
            out.append(" ")
            emit(t.arg, 2)
            if ctx == 2:
                out.append(")")

    emit(t, 0)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\\|λ)|([A-Za-z_][A-Za-z0-9_']*)|(\.)|(\()|(\)))")


class ParseError(ValueError):
    pass


def parse(text):
    """Inverse of :func:`to_str`."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at offset {pos}: {text[pos]!r}")
        kind = m.lastindex
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append((0, None, len(text)))
    i = 0

    def expect(kind, what):
        nonlocal i
        if tokens[i][0] != kind:
            raise ParseError(f"expected {what} at offset {tokens[i][2]}")
        i += 1
        return tokens[i - 1][1]

    def term():
        nonlocal i
        if tokens[i][0] == 1:
            i += 1
            params = [expect(2, "binder name")]
            while tokens[i][0] == 2:
                params.append(tokens[i][1])
                i += 1
            expect(3, "'.'")
            return lams(params, term())
        t = atom()
        while tokens[i][0] in (1, 2, 4):
            t = App(t, term() if tokens[i][0] == 1 else atom())
        return t

    def atom():
        nonlocal i
        kind, val, off = tokens[i]
        if kind == 2:
            i += 1
            return Var(val)
        if kind == 4:
            i += 1
            t = term()
            expect(5, "')'")
            return t
        raise ParseError(f"expected a term at offset {off}")

    t = term()
    if tokens[i][0] != 0:
        raise ParseError(f"trailing input at offset {tokens[i][2]}")
    return t

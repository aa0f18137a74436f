"""
Compilation of two-tape machines into the deterministic lambda-calculus.

A configuration ``(i, n | wl, a, wr | s)`` becomes the six-slot tuple
``λc. c <i> <n> <reverse wl> <a> <wr> <s>``: the input string, the input
head as a reversed binary numeral, the work tape split around its head with
the left half reversed so its head-adjacent cell comes first, and the state
as a projection over the machine's state order.

``trans`` is ``fix transaux``.  One round destructures the configuration,
looks up the scanned input symbol, and dispatches through three nested
Scott matches (input symbol, work symbol, state) to the cell for
``delta(b, a, s)``.  That cell either hands the configuration to the
continuation unchanged (final state, or no rule) or updates the counter,
rewrites the work tape and calls ``trans`` again on the successor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encodings import (
    INPUT, WORK, Alphabet, EncodingError, append_char_term, decode_numeral,
    decode_string, decode_symbol, encode_numeral, encode_string, encode_symbol,
    lookup_term, nat_to_revbin, pred_term, revbin_to_nat, succ_term,
)
from .machine import BLANK, Configuration
from .terms import App, Fresh, Lam, Var, app, fixpoint, is_closed, is_lamdet, lams


def state_alphabet(M):
    return Alphabet(tuple(M.states))


def tuple_term(fresh, *slots):
    """``λc. c t1 ... t6`` with ``c`` chosen fresh for the slots."""
    c = fresh("c")
    return Lam(c, app(c, *slots))


# -- configurations -----------------------------------------------------------

def encode_config(M, C, fresh=None):
    fresh = fresh or Fresh()
    return tuple_term(
        fresh,
        encode_string(INPUT, C.input),
        encode_numeral(nat_to_revbin(C.head)),
        encode_string(WORK, C.work_left[::-1]),
        encode_symbol(WORK, C.work_head),
        encode_string(WORK, C.work_right),
        encode_symbol(state_alphabet(M), C.state),
    )


def decode_config(M, t):
    if not isinstance(t, Lam):
        raise EncodingError(f"configuration must be an abstraction, got {t}")
    args = []
    body = t.body
    while isinstance(body, App):
        args.append(body.arg)
        body = body.fn
    if body != Var(t.param) or len(args) != 6:
        raise EncodingError("configuration must have the shape λc. c t1 ... t6")
    i, n, wl, a, wr, s = reversed(args)
    if any(u.fv for u in args):
        raise EncodingError("configuration slots must be closed")
    return Configuration(
        decode_string(INPUT, i),
        revbin_to_nat(decode_numeral(n)),
        decode_string(WORK, wl)[::-1],
        decode_symbol(WORK, a),
        decode_string(WORK, wr),
        decode_symbol(state_alphabet(M), s),
    )


# -- transition table ---------------------------------------------------------

def _tape_cells(fresh, write, target, states, move):
    """The four branches matching on the tape half the head moves onto.

    ``move`` is ``"L"`` or ``"R"``.  For ``L`` the matched half is the
    (reversed) left tape and the written symbol is pushed on the right half;
    ``R`` is the mirror image.  Each branch receives ``x k i n`` and the
    other tape half, which is fed to the append term.
    """
    push = append_char_term(WORK, write)
    branches = []
    for sym in WORK.symbols:
        rest, x, k, i, n, other = fresh.many("w", "x", "k", "i", "n", "w")
        left, right = (rest, other) if move == "L" else (other, rest)
        cfg = tuple_term(fresh, Var(i), Var(n), Var(left), encode_symbol(WORK, sym),
                         Var(right), encode_symbol(states, target))
        branches.append(lams([rest, x, k, i, n], app(push, Lam(other, app(x, k, cfg)))))
    # Empty half: a blank is materialized under the head.  The
    # ``(λd. ...) <ε>`` redex sits in head position to stay in the calculus.
    x, k, i, n, d, other = fresh.many("x", "k", "i", "n", "d", "w")
    left, right = (d, other) if move == "L" else (other, d)
    cfg = tuple_term(fresh, Var(i), Var(n), Var(left), encode_symbol(WORK, BLANK),
                     Var(right), encode_symbol(states, target))
    body = App(Lam(d, app(push, Lam(other, app(x, k, cfg)))), encode_string(WORK, ""))
    branches.append(lams([x, k, i, n], body))
    return branches


def _cell(M, fresh, b, a, s, arith):
    """``C_{b,a,s} = λx k i n wl wr. ...``"""
    states = state_alphabet(M)
    x, k, i, n, wl, wr = fresh.many("x", "k", "i", "n", "wl", "wr")
    rule = M.delta.get((b, a, s))
    if M.is_final(s) or rule is None:
        cfg = tuple_term(fresh, Var(i), Var(n), Var(wl), encode_symbol(WORK, a),
                         Var(wr), encode_symbol(states, s))
        return lams([x, k, i, n, wl, wr], app(k, cfg))
    n2 = fresh("n")
    if rule.work_move == "S":
        cfg = tuple_term(fresh, Var(i), Var(n2), Var(wl), encode_symbol(WORK, rule.write),
                         Var(wr), encode_symbol(states, rule.next_state))
        action = Lam(n2, app(x, k, cfg))
    elif rule.work_move == "L":
        branches = _tape_cells(fresh, rule.write, rule.next_state, states, "L")
        action = Lam(n2, app(wl, *branches, x, k, i, n2, wr))
    else:
        branches = _tape_cells(fresh, rule.write, rule.next_state, states, "R")
        action = Lam(n2, app(wr, *branches, x, k, i, n2, wl))
    if rule.input_move == 0:
        body = App(action, Var(n))
    else:
        body = app(arith["succ" if rule.input_move > 0 else "pred"], action, n)
    return lams([x, k, i, n, wl, wr], body)


def build_transaux(M, fresh=None):
    fresh = fresh or Fresh()
    arith = {"succ": succ_term(), "pred": pred_term()}
    table = []
    for b in INPUT.symbols:
        by_work = []
        for a in WORK.symbols:
            sv = fresh("s")
            cells = [_cell(M, fresh, b, a, s, arith) for s in M.states]
            by_work.append(Lam(sv, app(sv, *cells)))
        av = fresh("a")
        table.append(Lam(av, app(av, *by_work)))
    x, k, cf, i, n, wl, a, wr, s, bv = fresh.many("x", "k", "C", "i", "n", "wl", "a", "wr", "s", "b")
    # T: the looked-up symbol picks A_b, then a, s, and the remaining
    # arguments x k i n wl wr are threaded through to the selected cell.
    selector = Lam(bv, app(bv, *table, a, s, x, k, i, n, wl, wr))
    unpack = lams([i, n, wl, a, wr, s], app(lookup_term(INPUT), selector, n, i))
    return lams([x, k, cf], app(cf, unpack))


def build_trans(M, fresh=None):
    return App(fixpoint(), build_transaux(M, fresh))


def build_init(M, fresh=None):
    """``(λd e f k i. k <i, d | e, <_>, f | <s_in>>) <0> <ε> <ε>``"""
    fresh = fresh or Fresh()
    d, e, f, k, i = fresh.many("d", "e", "f", "k", "i")
    cfg = tuple_term(fresh, Var(i), Var(d), Var(e), encode_symbol(WORK, BLANK), Var(f),
                     encode_symbol(state_alphabet(M), M.initial))
    return app(lams([d, e, f, k, i], app(k, cfg)),
               encode_numeral(""), encode_string(WORK, ""), encode_string(WORK, ""))


TRUE = lams("x y", Var("x"))
FALSE = lams("x y", Var("y"))
IDENTITY = Lam("z", Var("z"))


def build_final(M, fresh=None):
    """``λk c. c (λi n wl a wr s. s N1 ... Nm k)``"""
    fresh = fresh or Fresh()
    outs = []
    for q in M.states:
        if q == M.accept:
            kv = fresh("k")
            outs.append(Lam(kv, App(Var(kv), TRUE)))
        elif q == M.reject:
            kv = fresh("k")
            outs.append(Lam(kv, App(Var(kv), FALSE)))
        else:
            outs.append(IDENTITY)
    k, c, i, n, wl, a, wr, s = fresh.many("k", "c", "i", "n", "wl", "a", "wr", "s")
    return lams([k, c], app(c, lams([i, n, wl, a, wr, s], app(s, *outs, k))))


@dataclass(frozen=True)
class CompiledMachine:
    machine: object
    trans: object
    init: object
    final: object
    whole: object


def compile_machine(M):
    """``init (λy. trans (λx. final I x) y)``"""
    fresh = Fresh()
    trans = build_trans(M, fresh)
    init = build_init(M, fresh)
    final = build_final(M, fresh)
    x, y = fresh.many("x", "y")
    whole = App(init, Lam(y, app(trans, Lam(x, app(final, IDENTITY, x)), y)))
    assert is_closed(whole) and is_lamdet(whole)
    return CompiledMachine(M, trans, init, final, whole)

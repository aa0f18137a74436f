"""
Scott encodings of symbols, strings and reversed binary numerals.

A symbol ``a_i`` of an ordered alphabet of size ``n`` is the projection
``λx1...xn. xi``.  A string uses one extra binder for the empty string:
``<ε> = λx1...xn xe. xe`` and ``<a_i r> = λx1...xn xe. xi <r>``.

Numerals are bit strings written least-significant bit first with no
trailing zeros, so 0 is the empty string and 4 is ``"001"``.  They are
kept as plain Python strings over ``"01"``.

The lambda-terms for successor, predecessor and lookup are written in
continuation-passing style: applied to a continuation ``k`` and their
arguments, they end in ``k`` applied to the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .terms import App, Lam, Var, app, fixpoint, lams


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        if not self.symbols:
            raise EncodingError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise EncodingError(f"duplicate symbols in {self.symbols}")

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, a):
        return a in self.symbols

    def index(self, a):
        """1-based position of ``a``."""
        try:
            return self.symbols.index(a) + 1
        except ValueError:
            raise EncodingError(f"symbol {a!r} not in alphabet {self.symbols}") from None

    def binders(self):
        return [f"x{j}" for j in range(1, len(self) + 1)]


# Orders fix the branch order of every pattern match on these alphabets.
INPUT = Alphabet(("0", "1", "L", "R"))
WORK = Alphabet(("0", "1", "_"))
BITS = Alphabet(("0", "1"))
BLANK = "_"


# -- symbols and strings ------------------------------------------------------

def encode_symbol(sigma, a):
    xs = sigma.binders()
    return lams(xs, Var(xs[sigma.index(a) - 1]))


def decode_symbol(sigma, t):
    params, body = _strip(t, len(sigma), "symbol")
    if not isinstance(body, Var):
        raise EncodingError(f"symbol body is not a variable: {body}")
    return sigma.symbols[_resolve(params, body.name, len(sigma), "symbol")]


@lru_cache(maxsize=None)
def _empty(sigma):
    xs = sigma.binders() + ["xe"]
    return lams(xs, Var("xe"))


def _cons(sigma, a, rest):
    xs = sigma.binders() + ["xe"]
    return lams(xs, App(Var(xs[sigma.index(a) - 1]), rest))


def encode_string(sigma, s):
    t = _empty(sigma)
    for c in reversed(s):
        t = _cons(sigma, c, t)
    return t


def decode_string(sigma, t):
    if t.fv:
        raise EncodingError(f"string encoding must be closed, free: {sorted(t.fv)}")
    n = len(sigma)
    out = []
    while True:
        params, body = _strip(t, n + 1, f"string position {len(out)}")
        if isinstance(body, Var):
            if _resolve(params, body.name, n + 1, f"string position {len(out)}") != n:
                raise EncodingError(f"string position {len(out)}: bare variable is not the end marker")
            return "".join(out)
        if not (isinstance(body, App) and isinstance(body.fn, Var)):
            raise EncodingError(f"string position {len(out)}: expected 'x_i <rest>', got {body}")
        j = _resolve(params, body.fn.name, n + 1, f"string position {len(out)}")
        if j == n:
            raise EncodingError(f"string position {len(out)}: end marker applied to an argument")
        out.append(sigma.symbols[j])
        t = body.arg


def _strip(t, count, where):
    params = []
    for _ in range(count):
        if not isinstance(t, Lam):
            raise EncodingError(f"{where}: expected {count} binders, found {len(params)}")
        params.append(t.param)
        t = t.body
    return params, t


def _resolve(params, name, count, where):
    for j in range(count - 1, -1, -1):
        if params[j] == name:
            return j
    raise EncodingError(f"{where}: variable {name!r} is not one of the selector binders")


def append_char_term(sigma, a):
    """``λk.λs. k (λx1...xn xe. x_a s)``: prepends ``a`` in two steps."""
    xs = sigma.binders() + ["xe"]
    return lams("k s", App(Var("k"), lams(xs, app(xs[sigma.index(a) - 1], "s"))))


def decode_boolean(t):
    """``λx.λy.x`` is True, ``λx.λy.y`` is False."""
    return decode_symbol(BOOLS, t) == "T"


BOOLS = Alphabet(("T", "F"))


# -- reversed binary ----------------------------------------------------------

def nat_to_revbin(n):
    if n < 0:
        raise EncodingError("negative numbers have no numeral")
    return bin(n)[:1:-1] if n else ""


def _check_revbin(b):
    if any(c not in "01" for c in b):
        raise EncodingError(f"not a bit string: {b!r}")
    if b.endswith("0"):
        raise EncodingError(f"numeral {b!r} has a trailing zero")


def revbin_to_nat(b):
    _check_revbin(b)
    return int(b[::-1], 2) if b else 0


def succ_rb(b):
    # succ ε = 1; succ 0s = 1s; succ 1s = 0(succ s)
    if b == "":
        return "1"
    if b[0] == "0":
        return "1" + b[1:]
    return "0" + succ_rb(b[1:])


def pred_rb(b):
    # pred 0s = 1(pred s); pred 1ε = ε; pred 1bs = 0bs
    if b == "":
        raise EncodingError("predecessor of zero is undefined")
    if b[0] == "0":
        return "1" + pred_rb(b[1:])
    if b == "1":
        return ""
    return "0" + b[1:]


def lookup_rb(n, s):
    """Character of ``s`` at the position denoted by numeral ``n``."""
    _check_revbin(n)
    while True:
        if not s:
            raise EncodingError("lookup index out of range")
        if n == "":
            return s[0]
        n, s = pred_rb(n), s[1:]


def encode_numeral(b):
    return encode_string(BITS, b)


def encode_nat(n):
    return encode_numeral(nat_to_revbin(n))


def decode_numeral(t):
    return decode_string(BITS, t)


# -- arithmetic terms ---------------------------------------------------------

def _bit(which, rest):
    # <0·rest> / <1·rest> with ``rest`` possibly a variable
    return lams("x1 x2 xe", app("x1" if which == "0" else "x2", rest))


def omega():
    d = Lam("w", app("w", "w"))
    return App(d, d)


def fix(u):
    return App(fixpoint(), u)


def succ_term():
    """``succ k <n> ->* k <succ n>``, a constant number of steps per bit."""
    b0 = lams("t k", app("k", _bit("1", Var("t"))))
    b1 = lams("t k", app("f", Lam("r", app("k", _bit("0", Var("r")))), "t"))
    be = Lam("k", app("k", encode_numeral("1")))
    return fix(lams("f k s", app("s", b0, b1, be, "k")))


def pred_term():
    """``pred k <n> ->* k <pred n>`` for ``n >= 1``.

    The 1-branch looks one bit ahead so the result never ends in a zero.
    Applied to zero it diverges.
    """
    zero_t = lams("u k", app("k", _bit("0", Var("t"))))
    last = Lam("k", app("k", encode_numeral("")))
    b0 = lams("t k", app("f", Lam("r", app("k", _bit("1", Var("r")))), "t"))
    b1 = lams("t k", app("t", zero_t, zero_t, last, "k"))
    be = Lam("k", omega())
    return fix(lams("f k s", app("s", b0, b1, be, "k")))


def lookup_term(sigma=INPUT):
    """``lookup k <n> <s> ->* k <a>`` where ``a`` is the character of ``s``
    at position ``n`` and ``<a>`` is its symbol encoding over ``sigma``.

    Each round decrements the counter with :func:`pred_term` and drops the
    head of the string.  Out-of-range positions diverge.
    """
    m = len(sigma)
    # counter nonzero: decrement, drop one character, recurse
    drop = lams("r m k", app("f", "k", "m", "r"))
    dec = lams("t k s", app(pred_term(), Lam("m", app("s", *[drop] * m, lams("m k", omega()), "m", "k")), "n"))
    # counter zero: answer with the head character
    pick = [lams("r k", app("k", encode_symbol(sigma, a))) for a in sigma.symbols]
    here = lams("k s", app("s", *pick, Lam("k", omega()), "k"))
    return fix(lams("f k n s", app("n", dec, dec, here, "k", "s")))

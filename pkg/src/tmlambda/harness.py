"""
Cross-checking the compiled terms against the direct simulator.

Everything here is deterministic: payload generation takes an explicit
seed and reports list rows in input order.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field, replace
from itertools import product

from .compiler import (
    build_final, build_init, build_trans, compile_machine, decode_config, encode_config,
)
from .encodings import (
    INPUT, WORK, EncodingError, append_char_term, decode_boolean, decode_numeral,
    decode_string, decode_symbol, encode_nat, encode_string, lookup_rb, lookup_term, nat_to_revbin,
    pred_rb, pred_term, succ_rb, succ_term,
)
from .machine import (
    Configuration, Machine, corpus, initial_config, run_machine, step_machine,
    trace_machine, wrap,
)
from .terms import App, Var, alpha_equal, app, evaluate, step_det, theta

REPORT_SCHEMA = 1
DEFAULT_FUEL = 10**8
MARKER = Var("k")  # free continuation: ``k v`` is normal, so counts stop exactly there


def log_factor(size):
    return max(1, math.ceil(math.log2(size))) if size > 1 else 1


def step_ratio(beta_steps, machine_steps, size):
    """``n / ((T+1) |i| max(1, ceil(log2 |i|)))``"""
    return beta_steps / ((machine_steps + 1) * size * log_factor(size))


def payloads(max_len):
    for n in range(max_len + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


@dataclass(frozen=True)
class LambdaRun:
    value: bool | None
    steps: int
    exhausted: bool


def run_lambda(cm, i, fuel=DEFAULT_FUEL, every=0, observe=None):
    """Evaluate ``<M> <i>`` and read the result back as a boolean."""
    out = evaluate(App(cm.whole, encode_string(INPUT, i)), fuel, every, observe)
    if out.exhausted:
        return LambdaRun(None, out.steps, True)
    try:
        value = decode_boolean(out.result)
    except EncodingError:
        value = None
    return LambdaRun(value, out.steps, False)


# -- verification ---------------------------------------------------------------

@dataclass
class Row:
    payload: str
    oracle: bool | None
    lam: bool | None
    machine_steps: int
    beta_steps: int
    ratio: float
    agree: bool
    exhausted: bool = False


@dataclass
class VerifyReport:
    machine: str
    rows: list = field(default_factory=list)
    ratio_min: float = math.nan
    ratio_max: float = math.nan

    @property
    def status(self):
        return "pass" if self.rows and all(r.agree for r in self.rows) else "fail"

    @property
    def counterexamples(self):
        return [r for r in self.rows if not r.agree]

    def to_json(self):
        return {
            "schema": REPORT_SCHEMA,
            "machine": self.machine,
            "rows": [asdict(r) for r in self.rows],
            "ratio_min": self.ratio_min,
            "ratio_max": self.ratio_max,
            "status": self.status,
        }


def _summarize(report):
    ratios = [r.ratio for r in report.rows if not r.exhausted]
    if ratios:
        report.ratio_min, report.ratio_max = min(ratios), max(ratios)
    return report


def check_input(M, cm, payload, fuel=DEFAULT_FUEL, max_steps=10**6, every=0, observe=None):
    i = wrap(payload)
    oracle = run_machine(M, i, max_steps)
    lam = run_lambda(cm, i, fuel, every, observe)
    agree = oracle.halted and not lam.exhausted and lam.value == oracle.accepted
    return Row(payload, oracle.accepted, lam.value, oracle.steps, lam.steps,
               step_ratio(lam.steps, oracle.steps, len(i)), agree, lam.exhausted)


def verify(M, max_len, fuel=DEFAULT_FUEL, compiled=None, every=0, observe=None):
    """Compare both simulators on every payload of length at most ``max_len``."""
    cm = compiled or compile_machine(M)
    report = VerifyReport(M.name)
    for p in payloads(max_len):
        report.rows.append(check_input(M, cm, p, fuel, every=every, observe=observe))
    return _summarize(report)


def bench(M, sizes, seed=0, fuel=DEFAULT_FUEL):
    """One seeded random payload per size; rows carry ``T``, ``n`` and the ratio."""
    rng = random.Random(seed)
    cm = compile_machine(M)
    report = VerifyReport(M.name)
    for size in sizes:
        p = "".join(rng.choice("01") for _ in range(size))
        row = check_input(M, cm, p, fuel)
        report.rows.append(row)
        if row.exhausted:
            break
    return _summarize(report)


# -- one machine transition -----------------------------------------------------

def truncate(M, key):
    """``M`` with the rule at ``key`` redirected to a fresh state that has no
    rules, so the compiled table stops right after firing that rule."""
    stop = "stop"
    while stop in M.states:
        stop += "_"
    rules = tuple(replace(r, next_state=stop) if r.key == key else r for r in M.rules)
    return Machine(M.states + (stop,), M.initial, M.accept, M.reject, rules, name=M.name), stop


def one_step(M, C, trans_cache=None):
    """Run the truncated table on ``<C>``; returns (oracle successor, decoded successor)."""
    D = step_machine(M, C)
    key = (C.scanned, C.work_head, C.state)
    cache = {} if trans_cache is None else trans_cache
    if key not in cache:
        Mt, stop = truncate(M, key)
        cache[key] = (Mt, stop, build_trans(Mt))
    Mt, stop, trans = cache[key]
    out = evaluate(app(trans, MARKER, encode_config(Mt, C)))
    if out.exhausted or not (isinstance(out.result, App) and out.result.fn == MARKER):
        return D, None
    got = decode_config(Mt, out.result.arg)
    if got.state != stop:
        return D, None
    return D, replace(got, state=D.state)


def reachable_transitions(M, max_len, depth):
    """Distinct (C, D) pairs with C -> D among the first ``depth`` transitions."""
    seen = {}
    for p in payloads(max_len):
        trace = trace_machine(M, wrap(p), depth)
        for C, D in zip(trace, trace[1:]):
            seen.setdefault(C, D)
    return list(seen.items())


def passes_through(M, trans, C, D, fuel=10**6):
    """True if evaluating ``trans k <C>`` reaches a term ``trans k <D>``."""
    th = theta()
    t = app(trans, MARKER, encode_config(M, C))
    for _ in range(fuel):
        t = step_det(t)
        if t is None:
            return False
        args = []
        head = t
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        if len(args) == 4 and args[1] == MARKER and alpha_equal(head, th):
            try:
                return decode_config(M, args[0]) == D
            except EncodingError:
                return False
    return False


# -- lemma micro-suites -----------------------------------------------------------

@dataclass
class LemmaResult:
    name: str
    passed: bool
    detail: str


def steps_to(term, fuel=10**7):
    out = evaluate(term, fuel)
    return out.result, out.steps


def append_steps(max_len=64, seed=0):
    """Step counts of the append term for each string length."""
    rng = random.Random(seed)
    counts = {}
    for n in range(max_len + 1):
        s = "".join(rng.choice(WORK.symbols) for _ in range(n))
        a = rng.choice(WORK.symbols)
        res, steps = steps_to(app(append_char_term(WORK, a), MARKER, encode_string(WORK, s)))
        ok = res.fn == MARKER and decode_string(WORK, res.arg) == a + s
        counts[n] = steps if ok else None
    return counts


def init_steps(M, lengths=(0, 1, 8), seed=0):
    rng = random.Random(seed)
    init = build_init(M)
    counts = {}
    for n in lengths:
        i = wrap("".join(rng.choice("01") for _ in range(n)))
        res, steps = steps_to(app(init, MARKER, encode_string(INPUT, i)))
        ok = res.fn == MARKER and decode_config(M, res.arg) == initial_config(M, i)
        counts[n] = steps if ok else None
    return counts


def random_final_configs(M, count, seed=0):
    """Distinct well-formed final configurations with varied tape contents."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        i = wrap("".join(rng.choice("01") for _ in range(rng.randint(0, 12))))
        C = Configuration(
            i, rng.randrange(len(i)),
            "".join(rng.choice(WORK.symbols) for _ in range(rng.randint(0, 6))),
            rng.choice(WORK.symbols),
            "".join(rng.choice(WORK.symbols) for _ in range(rng.randint(0, 6))),
            M.finals[len(out) % 2],
        )
        if C not in out:
            out.append(C)
    return out


def final_steps(M, configs):
    """(configuration, steps, decoded boolean) for ``final k <C>``."""
    final = build_final(M)
    rows = []
    for C in configs:
        res, steps = steps_to(app(final, MARKER, encode_config(M, C)))
        value = decode_boolean(res.arg) if isinstance(res, App) and res.fn == MARKER else None
        rows.append((C, steps, value))
    return rows


def arith_steps(limit):
    """{n: (succ steps, pred steps or None)} with both results checked."""
    succ, pred = succ_term(), pred_term()
    table = {}
    for n in range(limit):
        res, s_steps = steps_to(app(succ, MARKER, encode_nat(n)))
        if decode_numeral(res.arg) != succ_rb(nat_to_revbin(n)):
            raise AssertionError(f"succ disagrees at {n}")
        p_steps = None
        if n:
            res, p_steps = steps_to(app(pred, MARKER, encode_nat(n)))
            if decode_numeral(res.arg) != pred_rb(nat_to_revbin(n)):
                raise AssertionError(f"pred disagrees at {n}")
        table[n] = (s_steps, p_steps)
    return table


def affine_envelope(points):
    """A line ``a x + b`` above the worst ``y`` at every ``x``.

    The slope is the steepest pairwise slope between worst cases, so a line
    fitted on small ``x`` keeps bounding any growth that is linear.
    """
    worst = {}
    for x, y in points:
        worst[x] = max(worst.get(x, y), y)
    xs = sorted(worst)
    if len(xs) == 1:
        return 0.0, float(worst[xs[0]])
    a = max((worst[x2] - worst[x1]) / (x2 - x1) for x1 in xs for x2 in xs if x2 > x1)
    b = max(worst[x] - a * x for x in xs)
    return a, b


def lookup_steps(limit, seed=0):
    """{n: steps} for ``lookup k <n> <i>`` on one string longer than ``limit``."""
    rng = random.Random(seed)
    i = wrap("".join(rng.choice("01") for _ in range(limit)))
    look, enc = lookup_term(INPUT), encode_string(INPUT, i)
    out = {}
    for n in range(limit):
        res, steps = steps_to(app(look, MARKER, encode_nat(n), enc))
        if decode_symbol(INPUT, res.arg) != lookup_rb(nat_to_revbin(n), i):
            raise AssertionError(f"lookup disagrees at {n}")
        out[n] = steps
    return out


def lemma_check(arith_limit=2**12, lookup_limit=256):
    """Run every micro-suite; one :class:`LemmaResult` per lemma."""
    results = []
    counts = append_steps()
    results.append(LemmaResult("append", all(v == 2 for v in counts.values()),
                               f"lengths 0..64, distinct step counts {sorted(set(counts.values()), key=str)}"))

    machines = corpus()
    inits = {M.name: init_steps(M) for M in machines}
    results.append(LemmaResult("init", all(v == 5 for c in inits.values() for v in c.values()),
                               f"payload lengths {{0,1,8}}: {inits}"))

    offsets = set()
    correct = True
    for M in machines:
        for C, steps, value in final_steps(M, random_final_configs(M, 5)):
            offsets.add(steps - len(M.states))
            correct &= value == (C.state == M.accept)
    results.append(LemmaResult("final", len(offsets) == 1 and correct,
                               f"steps - |Q| over {len(machines)} machines: {sorted(offsets)}"))

    table = arith_steps(arith_limit)
    small = [(len(nat_to_revbin(n)), s) for n, (s, _) in table.items() if n < 64]
    small += [(len(nat_to_revbin(n)), p) for n, (_, p) in table.items() if p is not None and n < 64]
    a, b = affine_envelope(small)
    within = all(s <= a * len(nat_to_revbin(n)) + b and (p is None or p <= a * len(nat_to_revbin(n)) + b)
                 for n, (s, p) in table.items())
    c = max(max(s, p or 0) / (len(nat_to_revbin(n)) + 1) for n, (s, p) in table.items())
    results.append(LemmaResult("succ/pred", within,
                               f"n < {arith_limit}: steps <= {a:g}*bits + {b:g} (fitted on n < 64); c = {c:.3f}"))

    look = lookup_steps(lookup_limit)
    ratios = {n: s / ((n + 1) * (len(nat_to_revbin(n)) + 1)) for n, s in look.items()}
    c_small = max(r for n, r in ratios.items() if n < 32)
    results.append(LemmaResult("lookup", max(ratios.values()) <= c_small,
                               f"n < {lookup_limit}: max ratio {max(ratios.values()):.3f}, bound fitted on n < 32: {c_small:.3f}"))
    return results

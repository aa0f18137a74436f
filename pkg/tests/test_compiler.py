import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import DATA
from tmlambda.compiler import (
    FALSE, IDENTITY, TRUE, CompiledMachine, build_final, build_init, build_trans,
    compile_machine, decode_config, encode_config, state_alphabet,
)
from tmlambda.encodings import (
    BITS, INPUT, WORK, EncodingError, decode_boolean, encode_string, encode_symbol,
)
from tmlambda.harness import (
    MARKER, one_step, passes_through, random_final_configs, reachable_transitions, run_lambda,
    verify,
)
from tmlambda.machine import (
    Configuration, Machine, Rule, initial_config, load_machine, run_machine, wrap,
)
from tmlambda.terms import (
    App, Fresh, Lam, alpha_equal, app, evaluate, is_closed, is_lamdet, parse, to_str,
)


def random_config(M, rng):
    i = wrap("".join(rng.choice("01") for _ in range(rng.randint(0, 10))))
    return Configuration(
        i, rng.randrange(len(i)),
        "".join(rng.choice(WORK.symbols) for _ in range(rng.randint(0, 6))),
        rng.choice(WORK.symbols),
        "".join(rng.choice(WORK.symbols) for _ in range(rng.randint(0, 6))),
        rng.choice(M.states),
    )


def test_encode_initial_config(machines):
    M = machines["parity"]
    C = initial_config(M, "L1R")
    eps_w = encode_string(WORK, "")
    expected = Lam("x", app("x", encode_string(INPUT, "L1R"), encode_string(BITS, ""), eps_w,
                            encode_symbol(WORK, "_"), eps_w, encode_symbol(state_alphabet(M), "even")))
    assert alpha_equal(encode_config(M, C), expected)


def test_left_tape_is_stored_reversed(machines):
    M = machines["parity"]
    C = Configuration("L1R", 1, "01_", "0", "1", "odd")
    t = encode_config(M, C)
    slot3 = t.body.fn.fn.fn.arg
    assert alpha_equal(slot3, encode_string(WORK, "_10"))


def test_config_roundtrip(machines):
    rng = random.Random(7)
    for M in machines.values():
        for _ in range(100):
            C = random_config(M, rng)
            assert decode_config(M, encode_config(M, C)) == C


def test_decode_config_rejects_other_terms(machines):
    M = machines["parity"]
    assert decode_config(M, encode_config(M, initial_config(M, "LR"))) == \
        Configuration("LR", 0, "", "_", "", "even")
    with pytest.raises(EncodingError):
        decode_config(M, parse(r"\x. x"))
    with pytest.raises(EncodingError):
        decode_config(M, parse(r"\x. x x"))


def test_fresh_counters_do_not_matter(machines):
    M = machines["first_last"]
    C = Configuration("L0110R", 3, "1", "0", "_", "scan")
    a, b = encode_config(M, C, Fresh(0)), encode_config(M, C, Fresh(100))
    assert to_str(a) != to_str(b)
    assert alpha_equal(a, b)
    ta, tb = build_trans(M, Fresh(0)), build_trans(M, Fresh(55))
    assert to_str(ta) != to_str(tb) and alpha_equal(ta, tb)


def test_compiled_terms_are_closed_lamdet(compiled):
    for cm in compiled.values():
        for t in (cm.trans, cm.init, cm.final, cm.whole):
            assert is_closed(t) and is_lamdet(t)


def test_compilation_is_reproducible(machines):
    M = machines["equals101"]
    assert to_str(compile_machine(M).whole) == to_str(compile_machine(M).whole)


def test_whole_term_shape(compiled):
    cm = compiled["parity"]
    assert isinstance(cm.whole, App) and cm.whole.fn is cm.init
    wrapper = cm.whole.arg
    y = wrapper.param
    x = wrapper.body.fn.arg.param
    expected = Lam(y, app(cm.trans, Lam(x, app(cm.final, IDENTITY, x)), y))
    assert wrapper == expected


@pytest.mark.parametrize("payload", ["", "1", "01101001"])
def test_init_takes_five_steps(machines, payload):
    M = machines["equals101"]
    i = wrap(payload)
    out = evaluate(app(build_init(M), MARKER, encode_string(INPUT, i)))
    assert out.steps == 5
    assert out.result.fn == MARKER
    assert decode_config(M, out.result.arg) == initial_config(M, i)


def test_init_is_not_normal(machines):
    init = build_init(machines["parity"])
    assert is_closed(init) and is_lamdet(init)
    assert evaluate(init).steps == 3


def test_final_reads_the_state(machines):
    for M in machines.values():
        for C in random_final_configs(M, 6, seed=3):
            out = evaluate(app(build_final(M), MARKER, encode_config(M, C)))
            assert out.result.fn == MARKER
            assert out.result.arg == (TRUE if C.state == M.accept else FALSE)
            # 2 + 1 + 6 (destructuring) + |Q| (selection) + 1 (N_j k)
            assert out.steps == len(M.states) + 10


def test_trans_on_final_configuration(machines, compiled):
    for name, M in machines.items():
        for C in random_final_configs(M, 4, seed=11):
            out = evaluate(app(compiled[name].trans, MARKER, encode_config(M, C)))
            assert out.result.fn == MARKER
            assert decode_config(M, out.result.arg) == C


def test_one_step_corpus_sample(machines):
    M = machines["first_last"]
    cache = {}
    for C, D in reachable_transitions(M, 3, 6):
        assert one_step(M, C, cache) == (D, D)


def test_trans_passes_through_successor(machines, compiled):
    for name, M in machines.items():
        for C, D in reachable_transitions(M, 3, 4)[:25]:
            assert passes_through(M, compiled[name].trans, C, D)


def test_blank_materialization_on_left_move():
    M = Machine(("s", "acc", "rej"), "s", "acc", "rej", (Rule("1", "0", "s", -1, "1", "L", "acc"),))
    C = Configuration("L01R", 2, "", "0", "1", "s")
    out = evaluate(app(build_trans(M), MARKER, encode_config(M, C)))
    assert decode_config(M, out.result.arg) == Configuration("L01R", 1, "", "_", "11", "acc")


def test_blank_materialization_on_right_move():
    M = Machine(("s", "acc", "rej"), "s", "acc", "rej", (Rule("0", "_", "s", 1, "0", "R", "rej"),))
    C = Configuration("L01R", 1, "1", "_", "", "s")
    out = evaluate(app(build_trans(M), MARKER, encode_config(M, C)))
    assert decode_config(M, out.result.arg) == Configuration("L01R", 2, "10", "_", "", "rej")


def test_end_to_end_small(machines, compiled):
    for name, M in machines.items():
        for p in ["", "0", "1", "101", "0110"]:
            out = run_lambda(compiled[name], wrap(p))
            assert out.value == run_machine(M, wrap(p)).accepted


def test_diverging_machine_exhausts_fuel():
    M = load_machine(DATA / "loop.tm")
    assert not run_machine(M, "L1R", 1000).halted
    out = run_lambda(compile_machine(M), "L1R", fuel=20000)
    assert out.exhausted and out.steps == 20000


def test_stuck_machine_yields_no_boolean():
    M = Machine(("s", "t", "acc", "rej"), "s", "acc", "rej", (Rule("L", "_", "s", 1, "_", "S", "t"),))
    out = run_lambda(compile_machine(M), "L0R", fuel=10**5)
    assert not out.exhausted and out.value is None


def test_swapped_final_branches_are_caught(machines):
    M = machines["parity"]
    good = compile_machine(M)
    flipped = Machine(M.states, M.initial, M.reject, M.accept, M.rules)
    bad_final = build_final(flipped)
    x = Fresh(900)("x")
    y = Fresh(901)("y")
    whole = App(good.init, Lam(y, app(good.trans, Lam(x, app(bad_final, IDENTITY, x)), y)))
    corrupt = CompiledMachine(M, good.trans, good.init, bad_final, whole)
    report = verify(M, 2, compiled=corrupt)
    assert report.status == "fail"
    assert report.counterexamples[0].payload == ""


def test_mutated_rule_is_caught(machines):
    M = machines["equals101"]
    rules = tuple(Rule(r.read_input, r.read_work, r.state, r.input_move, r.write, r.work_move,
                       "reject" if r.next_state == "accept" else r.next_state) for r in M.rules)
    mutant = compile_machine(Machine(M.states, M.initial, M.accept, M.reject, rules))
    report = verify(M, 3, compiled=mutant)
    assert report.status == "fail"
    assert [r.payload for r in report.counterexamples] == ["101"]


# -- random machines -------------------------------------------------------------

def random_machine(seed, n_states=3, density=0.85):
    rng = random.Random(seed)
    work = [f"q{j}" for j in range(n_states)]
    states = tuple(work + ["acc", "rej"])
    rules = []
    for s in work:
        for b in INPUT.symbols:
            for a in WORK.symbols:
                if rng.random() > density:
                    continue
                moves = {"L": (0, 1), "R": (-1, 0)}.get(b, (-1, 0, 1))
                target = rng.choice(states + ("acc", "rej"))
                rules.append(Rule(b, a, s, rng.choice(moves), rng.choice(WORK.symbols),
                                  rng.choice("LSR"), target))
    return Machine(states, "q0", "acc", "rej", tuple(rules), name=f"random{seed}")


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_one_step_random_machines(seed):
    M = random_machine(seed)
    cache = {}
    for C, D in reachable_transitions(M, 3, 6):
        assert one_step(M, C, cache) == (D, D)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_end_to_end_random_machines(seed):
    M = random_machine(seed)
    cm = compile_machine(M)
    for p in ["", "0", "11", "010"]:
        r = run_machine(M, wrap(p), 40)
        if not (r.halted or r.stuck):
            continue
        out = run_lambda(cm, wrap(p), fuel=10**6)
        assert out.value == r.accepted


def test_decode_boolean():
    assert decode_boolean(TRUE) is True
    assert decode_boolean(FALSE) is False
    with pytest.raises(EncodingError):
        decode_boolean(IDENTITY)

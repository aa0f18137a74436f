"""Turing machines with a read-only input tape, compiled to the deterministic
lambda-calculus, with an exact beta-step counting evaluator."""

from .compiler import (
    CompiledMachine, build_final, build_init, build_trans, compile_machine, decode_config,
    encode_config,
)
from .encodings import (
    BITS, INPUT, WORK, Alphabet, EncodingError, append_char_term, decode_boolean,
    decode_string, decode_symbol, encode_string, encode_symbol, lookup_rb, lookup_term,
    nat_to_revbin, pred_rb, pred_term, revbin_to_nat, succ_rb, succ_term,
)
from .machine import (
    Configuration, Machine, RunResult, Rule, corpus, corpus_machine, format_machine,
    initial_config, load_machine, parse_machine, run_machine, step_machine,
    validate_machine, wrap,
)
from .terms import (
    App, EvalOutcome, Lam, Var, alpha_equal, evaluate, fixpoint, is_lamdet, parse,
    step_det, substitute, to_str,
)

__version__ = "0.1.0"

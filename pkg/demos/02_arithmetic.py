"""
Strings and binary counters as terms
====================================

Scott-encoded strings, reversed binary numerals, and the cost of the
counter operations used by the compiled machines.
"""

from tmlambda.encodings import (
    INPUT, WORK, append_char_term, decode_numeral, decode_string, decode_symbol, encode_nat,
    encode_string, lookup_term, nat_to_revbin, pred_term, succ_term,
)
from tmlambda.terms import Var, app, evaluate, to_str

k = Var("k")  # a free continuation makes the result easy to read off

print("<01_> =", to_str(encode_string(WORK, "01_")))

# prepending a character costs two steps whatever the length
for s in ["", "0", "01_01_01_01_01"]:
    out = evaluate(app(append_char_term(WORK, "1"), k, encode_string(WORK, s)))
    print(f"append 1 to {s!r}: {decode_string(WORK, out.result.arg)!r} in {out.steps} steps")

# numerals are reversed binary without trailing zeros
for n in [0, 1, 6, 7, 255]:
    s = evaluate(app(succ_term(), k, encode_nat(n)))
    line = f"n={n:<4} bits={nat_to_revbin(n)!r:<11} succ: {s.steps:>3} steps -> {decode_numeral(s.result.arg)!r}"
    if n:
        p = evaluate(app(pred_term(), k, encode_nat(n)))
        line += f"  pred: {p.steps:>3} steps"
    print(line)

# lookup walks the string, counting down
i = "L0110R"
for n in range(len(i)):
    out = evaluate(app(lookup_term(INPUT), k, encode_nat(n), encode_string(INPUT, i)))
    print(f"{i}[{n}] = {decode_symbol(INPUT, out.result.arg)} ({out.steps} steps)")

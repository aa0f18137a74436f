"""
Compiling a machine and running it both ways
============================================

Load a shipped machine, compile it to a closed term, and compare the
term's answer with the direct simulator.
"""

from tmlambda.compiler import compile_machine
from tmlambda.harness import run_lambda, verify
from tmlambda.machine import corpus_machine, format_machine, run_machine, trace_machine, wrap
from tmlambda.terms import is_closed, is_lamdet, size

M = corpus_machine("parity")
print(format_machine(M))

cm = compile_machine(M)
print("term size:", size(cm.whole), "closed:", is_closed(cm.whole), "deterministic:", is_lamdet(cm.whole))

# the direct simulator, one configuration per line
for C in trace_machine(M, wrap("1101"), 20):
    print("  ", C)

for payload in ["", "1", "1101", "111"]:
    r = run_machine(M, wrap(payload))
    lam = run_lambda(cm, wrap(payload))
    print(f"{payload!r:>7}: machine {r.accepted} in {r.steps} steps, term {lam.value} in {lam.steps} beta-steps")

# exhaustive agreement on short inputs
report = verify(corpus_machine("first_last"), 5)
print(report.machine, len(report.rows), "inputs:", report.status)

"""Workbench for the placeholder-string model of limited nondeterminism.

Strings over {0, 1, p} carry preallocated nondeterministic positions;
deterministic verifier machines check filled strings; the compiler turns a
machine run into a bounded fan-in Boolean circuit; the engine decides
membership both by direct filling enumeration and through a family of
small-input circuit satisfiability checks, and tabulates the exact
arithmetic behind the witness-length/runtime trade-off schedules.
"""

__version__ = "0.1.0"

from .pstrings import (PString, apply_filling, closure_of, enumerate_fillings,
                       parse_pstring, refines)
from .tm import RunResult, Tableau, TMSpec, parse_tm, run, run_trace, tm_to_text
from .machines import builtin
from .circuits import (Circuit, circuit_from_text, circuit_to_text,
                       cnf_to_circuit, deserialize, evaluate, serialize,
                       specialize, stats)
from .cnf import CNF, parse_dimacs_cnf
from .compiler import CompileSpec, ExposedBit, Hardwired, compile_on_pstring, \
    compile_spec
from .solver import solve, solve_family
from .bounds import BoundExpr, parse_bound
from .universe import UniverseTemplate, parse_template
from .engine import (DtiwiInstance, decide_bruteforce, decide_via_circuits,
                     pad_string, padding_transform, parse_manifest,
                     translation_transform, unpad_string)
from .tradeoffs import (TradeoffRow, required_base_alpha,
                        required_k_for_epsilon, speedup_schedule,
                        tradeoff_table)
from .encoders import (CliqueGraph, clique_gadget_circuit, encode_circuit_sat,
                       encode_clique, encode_sat, exhaustive_clique_search,
                       parse_dimacs_graph)

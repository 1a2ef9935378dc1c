"""Bounded-witness decision instances and the structural constructions.

An instance presents a language as (universe, verifier machine, witness
bound, time bound).  A string x is a member iff it matches the universe and
some prefix filling of at most w(|x|) bits lands in the verifier's language
within t(|x|) steps; a timeout is never an accept.

Padded instances carry a stack of padding functions.  The padding prefix is
stripped at the host level before the verifier machine runs, and the witness
and time bounds are evaluated at the stripped core length, mirroring the
construction in which the padded verifier ignores the prefix of 1's and
checks that the padding amount is exactly f(core) - core.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .bounds import BoundExpr, add, numerically_equal, parse_bound
from .circuits import Circuit, stats
from .compiler import compile_on_pstring
from .errors import ManifestError, PaddingUnderflow, SplitMismatch
from .pstrings import PString, enumerate_fillings, parse_pstring
from .solver import LENIENT, solve_family
from .tm import ACCEPT, TIMEOUT, TMSpec, run
from .universe import (PaddedUniverse, Universe, UniverseTemplate,
                       parse_template)

# sampling starts at 2: the canonical f(n) = n^2 only pads strings of
# length >= 2, and pad_string still raises on any concrete underflow
_PAD_SAMPLES = tuple(range(2, 33)) + (64, 100, 256, 1024)


@dataclass(frozen=True)
class DtiwiInstance:
    name: str
    universe: Universe
    verifier: TMSpec
    witness: BoundExpr
    time: BoundExpr
    pad_stack: tuple[BoundExpr, ...] = ()

    def lint(self) -> list[str]:
        issues = []
        for n in (1, 2, 4, 8, 16, 64, 256):
            if self.witness.eval(n) > n:
                issues.append(f"witness bound exceeds n at n={n} "
                              f"(fillings beyond pcount are inert)")
                break
        for expr in (self.witness, self.time):
            if expr.monotone_violation:
                issues.append(expr.monotone_violation)
        return issues

    def core_of(self, x: PString) -> PString | None:
        """Strip the padding prefixes, outermost first; None when a prefix is
        missing or its length does not equal f(core) - core."""
        text = x.text()
        for f in reversed(self.pad_stack):
            zero = text.find("0")
            if zero < 0 or "p" in text[:zero]:
                return None
            rest = text[zero + 1:]
            if zero + 1 + len(rest) != f.eval(len(rest)):
                return None
            text = rest
        return parse_pstring(text)


@dataclass
class DecideDiagnostics:
    fillings_tried: int = 0
    timeouts: int = 0


@dataclass
class CircuitReport:
    index: int
    gates: int
    inputs: int
    depth: int


@dataclass
class PipelineReport:
    member: bool
    in_universe: bool
    family: list[CircuitReport] = field(default_factory=list)
    time_bound: int = 0
    witness_bound: int = 0
    sat_index: int | None = None
    sat_witness: str | None = None
    evaluations: int = 0


def decide_bruteforce(inst: DtiwiInstance, x: PString,
                      diagnostics: DecideDiagnostics | None = None) -> bool:
    """Universe gate, then direct enumeration of prefix fillings."""
    if not inst.universe.match(x):
        return False
    core = inst.core_of(x)
    if core is None:
        return False
    w = inst.witness.eval(len(core))
    t = inst.time.eval(len(core))
    for _, y in enumerate_fillings(x, w):
        ycore = inst.core_of(y)
        if ycore is None:
            continue
        result = run(inst.verifier, ycore, t)
        if diagnostics is not None:
            diagnostics.fillings_tried += 1
            if result.verdict == TIMEOUT:
                diagnostics.timeouts += 1
        if result.verdict == ACCEPT:
            return True
    return False


def family_indices(inst: DtiwiInstance, x: PString) -> range:
    """Exposure counts for the circuit family: one circuit per witness
    length the brute-force route can try, i = 0..min(pcount, w)."""
    core_len = len(x)
    core = inst.core_of(x)
    if core is not None:
        core_len = len(core)
    return range(0, min(x.pcount(), inst.witness.eval(core_len)) + 1)


def decide_via_circuits(inst: DtiwiInstance, x: PString,
                        time_override: int | None = None,
                        jobs: int = 1) -> tuple[bool, PipelineReport]:
    """Reduce to a family of circuit satisfiability checks: C_i hardwires x
    and exposes its first i placeholders; membership is Sat of any C_i."""
    report = PipelineReport(member=False, in_universe=False)
    if not inst.universe.match(x):
        return False, report
    report.in_universe = True
    core = inst.core_of(x)
    if core is None:
        return False, report
    T = time_override if time_override is not None else \
        inst.time.eval(len(core))
    report.time_bound = T
    report.witness_bound = inst.witness.eval(len(core))
    circuits: list[Circuit] = []
    for i in family_indices(inst, x):
        c = compile_on_pstring(inst.verifier, core, i, T)
        st = stats(c)
        report.family.append(CircuitReport(i, st.gates, st.inputs, st.depth))
        circuits.append(c)
    result = solve_family(circuits, mode=LENIENT, jobs=jobs)
    report.evaluations = result.evaluations
    report.member = result.satisfiable
    report.sat_index = result.index
    report.sat_witness = result.witness
    return result.satisfiable, report


def translation_transform(inst: DtiwiInstance, w_split: tuple[BoundExpr, BoundExpr]
                          ) -> DtiwiInstance:
    """Shift witness budget into the universe: the new language lives on the
    closure universe and only w (not w + w') filling bits remain."""
    w, w_prime = w_split
    total = add(w, w_prime)
    if inst.witness != total and not numerically_equal(inst.witness, total):
        raise SplitMismatch(
            f"witness bound {inst.witness.text!r} is not {w.text!r} + "
            f"{w_prime.text!r}")
    return replace(
        inst,
        name=f"{inst.name}@translated",
        universe=inst.universe.closure_template(),
        witness=w,
    )


def pad_string(x: PString, f: BoundExpr) -> PString:
    """1^(k-1).0.x with k chosen so the result has length f(|x|)."""
    n = len(x)
    fn = f.eval(n)
    if fn <= n:
        raise PaddingUnderflow(n, fn)
    return parse_pstring("1" * (fn - n - 1) + "0" + x.text())


def unpad_string(y: PString) -> PString:
    text = y.text()
    zero = text.find("0")
    if zero < 0:
        raise ManifestError("padded string has no 0 delimiter")
    return parse_pstring(text[zero + 1:])


def padding_transform(inst: DtiwiInstance, f: BoundExpr) -> DtiwiInstance:
    """Language of padded strings; membership law pad(x) in L' iff x in L."""
    for n in _PAD_SAMPLES:
        if f.eval(n) <= n:
            raise PaddingUnderflow(n, f.eval(n))
    return replace(
        inst,
        name=f"{inst.name}@padded",
        universe=PaddedUniverse(inst.universe),
        pad_stack=inst.pad_stack + (f,),
    )


# --- instance manifests ---

def parse_manifest(text: str, machine_loader=None) -> DtiwiInstance:
    """Line-oriented: universe:, verifier:, witness:, time:, optional name:
    and pad: lines (applied in order).  The verifier is a builtin name or a
    machine file path resolved through machine_loader."""
    from .machines import BUILTIN_NAMES, builtin

    fields = {"pad": []}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ManifestError(f"line {line_no}: expected 'key: value'")
        key, value = (part.strip() for part in line.split(":", 1))
        if key == "pad":
            fields["pad"].append(value)
        else:
            fields[key] = value
    for required in ("universe", "verifier", "witness", "time"):
        if required not in fields:
            raise ManifestError(f"missing {required!r} line")
    verifier_ref = fields["verifier"]
    if verifier_ref in BUILTIN_NAMES:
        verifier = builtin(verifier_ref)
    elif machine_loader is not None:
        verifier = machine_loader(verifier_ref)
    else:
        raise ManifestError(f"unknown verifier {verifier_ref!r} and no "
                            f"machine loader provided")
    inst = DtiwiInstance(
        name=fields.get("name", "instance"),
        universe=parse_template(fields["universe"]),
        verifier=verifier,
        witness=parse_bound(fields["witness"]),
        time=parse_bound(fields["time"]),
    )
    for spec in fields["pad"]:
        value = spec.split("=", 1)[1] if "=" in spec else spec
        inst = padding_transform(inst, parse_bound(value))
    return inst


def render_manifest(inst: DtiwiInstance, verifier_ref: str) -> str:
    universe = inst.universe
    pads = list(inst.pad_stack)
    while isinstance(universe, PaddedUniverse):
        universe = universe.inner
    lines = [
        f"name: {inst.name}",
        f"universe: {universe.render()}",
        f"verifier: {verifier_ref}",
        f"witness: {inst.witness.text}",
        f"time: {inst.time.text}",
    ]
    for f in pads:
        lines.append(f"pad: f={f.text}")
    return "\n".join(lines) + "\n"

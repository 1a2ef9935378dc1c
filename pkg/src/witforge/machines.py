"""Verifier machine library: small fixed fixtures plus generated families.

The clique and CNF verifiers are machine families: the instance shape
(vertex count, field widths, clause layout) is baked into the state graph,
while the actual data (edge lists, signs, indices, witness bits) is read
from the tape.  Baking the shape keeps the machines close to linear time,
which is what makes compiling them into circuits tractable.

Shared conventions:
  - a move left at cell 0 stays in place,
  - 'p' read where a bit is required means the witness is underspecified
    and the machine rejects,
  - cell 0 may be overwritten with an anchor mark (X/Y for an anchored bit,
    A for an anchored placeholder) so sweeps can find the left edge by
    content rather than by counting.
"""

from __future__ import annotations

from .cnf import CNF
from .errors import UnknownBuiltin
from .tm import BLANK, LEFT, RIGHT, STAY, TMSpec

ACCEPT_STATE = "acc"
REJECT_STATE = "rej"


class MachineBuilder:
    """Assembles a TMSpec; unspecified (state, symbol) pairs go to reject."""

    def __init__(self, name: str, alphabet: str):
        self.name = name
        self.alphabet = tuple(alphabet)
        self.states: list[str] = [ACCEPT_STATE, REJECT_STATE]
        self._seen = set(self.states)
        self.transitions: dict[tuple[str, str], tuple[str, str, str]] = {}

    def state(self, name: str) -> str:
        if name not in self._seen:
            self._seen.add(name)
            self.states.append(name)
        return name

    def t(self, state, syms, to, write=None, move=STAY):
        """One rule per symbol in syms; write=None keeps the read symbol."""
        self.state(state)
        self.state(to)
        for sym in syms:
            key = (state, sym)
            assert key not in self.transitions, f"duplicate rule {key}"
            self.transitions[key] = (to, sym if write is None else write, move)

    def build(self, start: str) -> TMSpec:
        self.state(start)
        for state in self.states:
            if state in (ACCEPT_STATE, REJECT_STATE):
                continue
            for sym in self.alphabet:
                self.transitions.setdefault(
                    (state, sym), (REJECT_STATE, sym, STAY))
        return TMSpec(
            name=self.name,
            states=tuple(self.states),
            start=start,
            accept=ACCEPT_STATE,
            reject=REJECT_STATE,
            alphabet=self.alphabet,
            transitions=self.transitions,
        )


def _bitstr(value: int, width: int) -> str:
    return format(value, f"0{width}b")


# --- small fixed fixtures ---

def make_all_zeros() -> TMSpec:
    b = MachineBuilder("all_zeros", "01p_")
    b.t("scan", "0", "scan", move=RIGHT)
    b.t("scan", BLANK, ACCEPT_STATE)
    return b.build("scan")


def make_parity() -> TMSpec:
    """Accepts iff the input has an odd number of '1' characters."""
    b = MachineBuilder("parity", "01p_")
    b.t("even", "0", "even", move=RIGHT)
    b.t("even", "1", "odd", move=RIGHT)
    b.t("odd", "0", "odd", move=RIGHT)
    b.t("odd", "1", "even", move=RIGHT)
    b.t("odd", BLANK, ACCEPT_STATE)
    return b.build("even")


def make_equality_halves() -> TMSpec:
    """Accepts strings of the form w.w over {0,1}.

    Phase 1 pairs cells from the two ends (left marks A/B, right marks C/D);
    an unpaired middle cell means odd length.  A probe dance (write p, move
    left, look for the probe) detects cell 0, which a one-way machine cannot
    sense directly.  Phase 2 consumes the leftmost A/B and the leftmost C/D
    in lockstep, rewriting consumed left cells to p and compared right cells
    back to bits, so the two halves are compared in order.
    """
    b = MachineBuilder("equality_halves", "01p_ABCD")
    # phase 1: mark a left cell, then the matching right cell
    b.t("p0", BLANK, ACCEPT_STATE)
    b.t("p0", "0", "seek_end", write="A", move=RIGHT)
    b.t("p0", "1", "seek_end", write="B", move=RIGHT)
    b.t("seek_end", "01", "seek_end", move=RIGHT)
    b.t("seek_end", "CD" + BLANK, "mark_right", move=LEFT)
    # reading A/B in mark_right means the fresh left mark has no partner
    b.t("mark_right", "0", "p1_return", write="C", move=LEFT)
    b.t("mark_right", "1", "p1_return", write="D", move=LEFT)
    b.t("p1_return", "01", "p1_return", move=LEFT)
    b.t("p1_return", "AB", "p1_take", move=RIGHT)
    b.t("p1_take", "0", "seek_end", write="A", move=RIGHT)
    b.t("p1_take", "1", "seek_end", write="B", move=RIGHT)
    b.t("p1_take", "CD", "rw_enter", move=LEFT)
    # rewind to cell 0; all cells left of here are A/B marks
    b.t("rw_enter", "A", "probe_A")
    b.t("rw_enter", "B", "probe_B")
    for m in "AB":
        b.t(f"probe_{m}", m, f"chk_{m}", write="p", move=LEFT)
        # still reading our own probe: the left move stayed, this is cell 0
        b.t(f"chk_{m}", "p", "p2_take", write=m)
        for m2 in "AB":
            b.t(f"chk_{m}", m2, f"put_{m}_{m2}", move=RIGHT)
            b.t(f"put_{m}_{m2}", "p", f"probe_{m2}", write=m, move=LEFT)
    # phase 2: compare leftmost A/B with leftmost C/D
    b.t("p2_take", "A", "carry0", write="p", move=RIGHT)
    b.t("p2_take", "B", "carry1", write="p", move=RIGHT)
    b.t("p2_take", "01", "verify", move=RIGHT)
    b.t("carry0", "AB01", "carry0", move=RIGHT)
    b.t("carry0", "C", "p2_return", write="0", move=LEFT)
    b.t("carry1", "AB01", "carry1", move=RIGHT)
    b.t("carry1", "D", "p2_return", write="1", move=LEFT)
    b.t("p2_return", "AB01", "p2_return", move=LEFT)
    b.t("p2_return", "p", "p2_take", move=RIGHT)
    b.t("verify", "01", "verify", move=RIGHT)
    b.t("verify", BLANK, ACCEPT_STATE)
    return b.build("p0")


# --- generated clique verifier family ---

def clique_field_width(v: int) -> int:
    return max(1, (v - 1).bit_length()) if v > 1 else 1


def clique_layout(v: int, k: int, e: int) -> dict:
    """Cell layout shared by the generator, the encoder and the tests."""
    L = clique_field_width(v)
    witness = k * L
    table = v * L
    return {
        "L": L,
        "witness_end": witness,
        "table_start": witness + 1,             # after first separator p
        "edge_start": witness + 1 + table + 1,  # after second separator p
        "length": witness + 1 + table + 1 + 4 * e * L,
    }


def clique_time_bound(v: int, k: int, e: int) -> int:
    lay = clique_layout(v, k, e)
    n, L = lay["length"], lay["L"]
    pairs = k * (k - 1) // 2
    per_pass = 2 * n + k * L + 8
    per_pair = 2 * L * per_pass + 4 * n + 16
    return pairs * per_pair + 2 * k * L + n + 64


def make_clique_verifier(v: int, k: int) -> TMSpec:
    """Verifier for k-cliques on v-vertex graphs.

    Input layout: k witness fields of L bits, 'p', a vertex-id table (ids
    0..v-1, L bits each), 'p', then edge entries of 2L bits (u then w), each
    undirected edge listed in both orientations, terminated by blank tape.

    For every witness pair (j, j') the machine checks that some edge entry
    equals the 2L-bit concatenation w_j.w_j'.  Self-loops are never listed,
    so repeated witness vertices fail every pair involving them, which makes
    a separate distinctness pass unnecessary.  Entries that mismatch the
    carried bit are marked dead in place (0/1 -> A/B) and swept back to bits
    once the pair's verdict is in.
    """
    if v < 1 or not 1 <= k <= v:
        raise ValueError(f"bad clique parameters v={v} k={k}")
    L = clique_field_width(v)
    kl = k * L
    vbits = _bitstr(v, L) if v < (1 << L) else None  # None: every id valid
    b = MachineBuilder(f"clique_v{v}_k{k}", "01p_ABXY")

    pairs = [(j, j2) for j in range(k) for j2 in range(j + 1, k)]
    start_status = "lt" if vbits is None else "eq"

    def range_next(j, pos, status):
        if pos + 1 < L:
            return f"r{j}_{pos + 1}_{status}"
        if status == "eq":
            return REJECT_STATE  # field equals v, so not below it
        if j + 1 < k:
            return f"r{j + 1}_0_{start_status}"
        return "p0ret" if pairs else "fin"

    # P0: reject placeholders, range-check each field, anchor cell 0
    for j in range(k):
        for pos in range(L):
            for status in ("eq", "lt"):
                if vbits is None and status == "eq":
                    continue
                st = f"r{j}_{pos}_{status}"
                for bit, anchored in (("0", "X"), ("1", "Y")):
                    write = anchored if (j == 0 and pos == 0) else None
                    if status == "lt":
                        nxt = range_next(j, pos, "lt")
                    elif bit < vbits[pos]:
                        nxt = range_next(j, pos, "lt")
                    elif bit == vbits[pos]:
                        nxt = range_next(j, pos, "eq")
                    else:
                        nxt = REJECT_STATE
                    if nxt == REJECT_STATE:
                        b.t(st, bit, REJECT_STATE, write=write)
                    else:
                        b.t(st, bit, nxt, write=write, move=RIGHT)

    if not pairs:  # k == 1: a valid vertex id is a 1-clique
        b.t("fin", "01p_ABXY", ACCEPT_STATE)
        return b.build(f"r0_0_{start_status}")

    # entered on the first separator cell, then walks back over the witness
    b.t("p0ret", "01p", "p0ret", move=LEFT)
    b.t("p0ret", "XY", "pf0_0_0")

    def fetch_target(pi, bit):
        j, j2 = pairs[pi]
        return j * L + bit if bit < L else j2 * L + (bit - L)

    width = 2 * L
    for pi in range(len(pairs)):
        for bit in range(width):
            tgt = fetch_target(pi, bit)
            # walk right from the anchor to the target witness cell
            for q in range(tgt):
                b.t(f"pf{pi}_{bit}_{q}", "XY" if q == 0 else "01",
                    f"pf{pi}_{bit}_{q + 1}", move=RIGHT)
            land = f"pf{pi}_{bit}_{tgt}"
            reads = (("X", 0), ("Y", 1)) if tgt == 0 else (("0", 0), ("1", 1))
            for sym, beta in reads:
                b.t(land, sym, f"pe{pi}_{bit}_{beta}_a", move=RIGHT)
            # cross the rest of the witness area, then the table (two 'p' seps)
            for beta in (0, 1):
                st_a = f"pe{pi}_{bit}_{beta}_a"
                st_b = f"pe{pi}_{bit}_{beta}_b"
                sweep0 = f"ps{pi}_{bit}_{beta}_0_0"
                b.t(st_a, "01", st_a, move=RIGHT)
                b.t(st_a, "p", st_b, move=RIGHT)
                b.t(st_b, "01", st_b, move=RIGHT)
                b.t(st_b, "p", sweep0, move=RIGHT)
            # sweep edge entries; offset counts mod 2L, dead tracks marks seen
            for beta in (0, 1):
                for off in range(width):
                    for dead in (0, 1):
                        if off == 0 and dead == 1:
                            continue  # dead resets at entry boundaries
                        st = f"ps{pi}_{bit}_{beta}_{off}_{dead}"
                        nxt_off = (off + 1) % width
                        live = f"ps{pi}_{bit}_{beta}_{nxt_off}_{0 if nxt_off == 0 else dead}"
                        died = f"ps{pi}_{bit}_{beta}_{nxt_off}_{0 if nxt_off == 0 else 1}"
                        if off == 0 and dead == 0:
                            ret = (f"pv{pi}_w" if bit == width - 1
                                   else f"pw{pi}_{bit + 1}")
                            b.t(st, BLANK, ret, move=LEFT)
                        if dead == 0 and off == bit:
                            match = "1" if beta else "0"
                            miss = "0" if beta else "1"
                            mark = "A" if miss == "0" else "B"
                            b.t(st, match, live, move=RIGHT)
                            b.t(st, miss, died, write=mark, move=RIGHT)
                            b.t(st, "AB", died, move=RIGHT)
                        else:
                            b.t(st, "01", live, move=RIGHT)
                            b.t(st, "AB", died, move=RIGHT)
            if bit < width - 1:
                st = f"pw{pi}_{bit + 1}"
                b.t(st, "01pAB", st, move=LEFT)
                b.t(st, "XY", f"pf{pi}_{bit + 1}_0")
        # verdict pass: any entry with no dead mark covers the pair
        b.t(f"pv{pi}_w", "01pAB", f"pv{pi}_w", move=LEFT)
        b.t(f"pv{pi}_w", "XY", f"pv{pi}_a", move=RIGHT)
        b.t(f"pv{pi}_a", "01", f"pv{pi}_a", move=RIGHT)
        b.t(f"pv{pi}_a", "p", f"pv{pi}_b", move=RIGHT)
        b.t(f"pv{pi}_b", "01", f"pv{pi}_b", move=RIGHT)
        b.t(f"pv{pi}_b", "p", f"pc{pi}_0_0_0", move=RIGHT)
        for off in range(width):
            for dead in (0, 1):
                for found in (0, 1):
                    if off == 0 and dead == 1:
                        continue
                    st = f"pc{pi}_{off}_{dead}_{found}"
                    nxt_off = (off + 1) % width
                    end_of_entry = nxt_off == 0
                    survived = 1 if (end_of_entry and dead == 0) else found
                    live = f"pc{pi}_{nxt_off}_{0 if end_of_entry else dead}_{survived}"
                    died = f"pc{pi}_{nxt_off}_{0 if end_of_entry else 1}_{found}"
                    b.t(st, "01", live, move=RIGHT)
                    b.t(st, "AB", died, move=RIGHT)
                    if off == 0:
                        if found:
                            b.t(st, BLANK, f"pr{pi}", move=LEFT)
                        else:
                            b.t(st, BLANK, REJECT_STATE)
        # restore pass: unmark the whole edge section, stop at the anchor
        st = f"pr{pi}"
        b.t(st, "01p", st, move=LEFT)
        b.t(st, "A", st, write="0", move=LEFT)
        b.t(st, "B", st, write="1", move=LEFT)
        b.t(st, "XY", f"pf{pi + 1}_0_0" if pi + 1 < len(pairs) else ACCEPT_STATE)

    return b.build(f"r0_0_{start_status}")


# --- generated CNF verifier family ---

def cnf_index_width(v: int) -> int:
    return max(1, (v - 1).bit_length()) if v > 1 else 1


def cnf_layout(formula: CNF) -> dict:
    v = formula.variable_count
    bwidth = cnf_index_width(v)
    positions = []
    pos = v
    for clause in formula.clauses:
        row = []
        for _ in clause:
            row.append(pos)
            pos += 1 + bwidth
        positions.append(row)
    return {"bwidth": bwidth, "literal_positions": positions, "length": pos}


def cnf_time_bound(formula: CNF) -> int:
    lay = cnf_layout(formula)
    n = lay["length"]
    total_lits = sum(len(c) for c in formula.clauses)
    per_lit = 2 * n + formula.variable_count + lay["bwidth"] + 8
    return total_lits * per_lit + n + 32


def make_cnf_verifier(formula: CNF) -> TMSpec:
    """Verifier for a CNF formula shape.

    The witness is one bit per variable out front; each literal in the body
    is a sign bit ('1' negates) followed by a fixed-width variable index.
    Clause boundaries and widths are baked into the states; signs, indices
    and witness bits are read from the tape.  Every literal is visited even
    once its clause is satisfied, so the head motion does not depend on the
    witness, which keeps compiled circuits small.
    """
    v = formula.variable_count
    if v < 1:
        raise ValueError("formula needs at least one variable")
    lay = cnf_layout(formula)
    bwidth = lay["bwidth"]
    shape = "-".join(str(len(c)) for c in formula.clauses)
    b = MachineBuilder(f"cnf_v{v}_c{shape}", "01p_AXY")

    if any(len(c) == 0 for c in formula.clauses):
        b.t("dead", "01p_AXY", REJECT_STATE)
        return b.build("dead")

    b.t("anchor", "0", "l0_0_w", write="X")
    b.t("anchor", "1", "l0_0_w", write="Y")
    b.t("anchor", "p", "l0_0_w", write="A")

    n_clauses = len(formula.clauses)

    def after_literal(ci, li, satisfied):
        if li + 1 < len(formula.clauses[ci]):
            return f"l{ci}_{li + 1}_{'s' if satisfied else 'w'}"
        if not satisfied:
            return REJECT_STATE
        return f"l{ci + 1}_0_w" if ci + 1 < n_clauses else ACCEPT_STATE

    for ci, clause in enumerate(formula.clauses):
        for li in range(len(clause)):
            pos = lay["literal_positions"][ci][li]
            for flag in "ws":
                base = f"l{ci}_{li}_{flag}"
                # return to the anchor, then a counted walk to the sign bit
                b.t(base, "01p", base, move=LEFT)
                b.t(base, "XYA", f"{base}_c1", move=RIGHT)
                for q in range(1, pos):
                    syms = "01p" if q < v else "01"
                    b.t(f"{base}_c{q}", syms, f"{base}_c{q + 1}", move=RIGHT)
                at = f"{base}_c{pos}"
                for sign in "01":
                    b.t(at, sign, f"{base}_s{sign}_d0_0", move=RIGHT)
                # read bwidth index bits, accumulating the value in state
                for sign in "01":
                    frontier = [(f"{base}_s{sign}_d0_0", 0)]
                    for depth in range(bwidth):
                        nxt = []
                        for st, acc in frontier:
                            for bit in "01":
                                acc2 = (acc << 1) | int(bit)
                                if depth + 1 == bwidth:
                                    if acc2 >= v:
                                        b.t(st, bit, REJECT_STATE)
                                    else:
                                        b.t(st, bit, f"{base}_s{sign}_bk{acc2}",
                                            move=LEFT)
                                else:
                                    to = f"{base}_s{sign}_d{depth + 1}_{acc2}"
                                    b.t(st, bit, to, move=RIGHT)
                                    nxt.append((to, acc2))
                        frontier = nxt
                # walk back to the anchor, then right to witness cell idx
                for sign in "01":
                    for idx in range(v):
                        bk = f"{base}_s{sign}_bk{idx}"
                        b.t(bk, "01p", bk, move=LEFT)
                        rd = f"{base}_s{sign}_rd{idx}"
                        if idx == 0:
                            b.t(bk, "XYA", rd)
                        else:
                            hop = (f"{base}_s{sign}_fw{idx}_1" if idx > 1
                                   else rd)
                            b.t(bk, "XYA", hop, move=RIGHT)
                            for c in range(1, idx):
                                to = (f"{base}_s{sign}_fw{idx}_{c + 1}"
                                      if c + 1 < idx else rd)
                                b.t(f"{base}_s{sign}_fw{idx}_{c}", "01p", to,
                                    move=RIGHT)
                        # read the witness bit; an unfilled placeholder rejects
                        syms = (("X", 0), ("Y", 1)) if idx == 0 \
                            else (("0", 0), ("1", 1))
                        for sym, bitval in syms:
                            value = bitval ^ int(sign)
                            sat = flag == "s" or value == 1
                            b.t(rd, sym, after_literal(ci, li, sat))
    return b.build("anchor")


# --- generated circuit-evaluation verifier family ---

def circuit_eval_layout(c) -> dict:
    from .circuits import serialize
    payload_bits = len(serialize(c)) * 8
    start = c.input_count + payload_bits
    return {"scratch_start": start, "length": start,
            "width": start + len(c.ops)}


def circuit_eval_time_bound(c) -> int:
    lay = circuit_eval_layout(c)
    width = lay["width"]
    m = len(c.ops)
    return m * (2 * width + 4 * m + 16) + width + 32


def make_circuit_eval_verifier(c) -> TMSpec:
    """Verifier that evaluates a fixed circuit on the filled witness bits.

    The node order is baked in; gate values are written left to right onto
    the blank tape after the input, so "the next value cell" is always the
    first blank and operand cells sit a known distance to its left.  Witness
    bits are fetched through the cell-0 anchor; reading an unfilled
    placeholder rejects.
    """
    from .circuits import OP_AND, OP_CONST, OP_INPUT, OP_NOT

    b = MachineBuilder(f"circeval_m{c.gate_count()}_n{len(c.ops)}", "01p_AXY")
    b.t("anchor", "0", "g0", write="X")
    b.t("anchor", "1", "g0", write="Y")
    b.t("anchor", "p", "g0", write="A")
    if c.input_count == 0:
        # no witness cells: cell 0 is payload; anchor it all the same
        pass

    def write_and_next(i, value):
        """Write node i's value at the first blank; accept/reject at the end."""
        if i + 1 == len(c.ops):
            return ACCEPT_STATE if value else REJECT_STATE
        return f"g{i + 1}"

    for i, op in enumerate(c.ops):
        st = f"g{i}"
        # find the first blank (the next value cell)
        b.t(st, "01pXYA", st, move=RIGHT)
        if op == OP_CONST:
            val = c.arg0[i]
            nxt = write_and_next(i, val)
            b.t(st, BLANK, nxt, write=str(val),
                move=RIGHT if nxt not in (ACCEPT_STATE, REJECT_STATE) else STAY)
            continue
        if op == OP_INPUT:
            j = c.arg0[i]
            back = f"g{i}_b"
            b.t(st, BLANK, back, move=LEFT)
            b.t(back, "01p", back, move=LEFT)
            if j == 0:
                rd = f"g{i}_rd"
                b.t(back, "XYA", rd)
            else:
                rd = f"g{i}_rd"
                hop = f"g{i}_f1" if j > 1 else rd
                b.t(back, "XYA", hop, move=RIGHT)
                for q in range(1, j):
                    to = f"g{i}_f{q + 1}" if q + 1 < j else rd
                    b.t(f"g{i}_f{q}", "01p", to, move=RIGHT)
            syms = (("X", 0), ("Y", 1)) if j == 0 else (("0", 0), ("1", 1))
            for sym, bit in syms:
                b.t(rd, sym, f"g{i}_w{bit}", move=RIGHT)
            for bit in (0, 1):
                wst = f"g{i}_w{bit}"
                b.t(wst, "01pXYA", wst, move=RIGHT)
                nxt = write_and_next(i, bit)
                b.t(wst, BLANK, nxt, write=str(bit),
                    move=RIGHT if nxt not in (ACCEPT_STATE, REJECT_STATE)
                    else STAY)
            continue
        # gate: read operand values from the scratch area left of the blank
        gap_a = i - c.arg0[i]
        if op == OP_NOT:
            first = f"g{i}_a1" if gap_a > 1 else f"g{i}_ra"
            b.t(st, BLANK, first, move=LEFT)
            for q in range(1, gap_a):
                to = f"g{i}_a{q + 1}" if q + 1 < gap_a else f"g{i}_ra"
                b.t(f"g{i}_a{q}", "01", to, move=LEFT)
            for sym, bit in (("0", 0), ("1", 1)):
                b.t(f"g{i}_ra", sym, f"g{i}_w{1 - bit}", move=RIGHT)
            for bit in (0, 1):
                wst = f"g{i}_w{bit}"
                b.t(wst, "01", wst, move=RIGHT)
                nxt = write_and_next(i, bit)
                b.t(wst, BLANK, nxt, write=str(bit),
                    move=RIGHT if nxt not in (ACCEPT_STATE, REJECT_STATE)
                    else STAY)
            continue
        gap_b = i - c.arg1[i]
        first = f"g{i}_a1" if gap_a > 1 else f"g{i}_ra"
        b.t(st, BLANK, first, move=LEFT)
        for q in range(1, gap_a):
            to = f"g{i}_a{q + 1}" if q + 1 < gap_a else f"g{i}_ra"
            b.t(f"g{i}_a{q}", "01", to, move=LEFT)
        for sym, abit in (("0", 0), ("1", 1)):
            # return to the blank, then walk left to operand b
            b.t(f"g{i}_ra", sym, f"g{i}_h{abit}", move=RIGHT)
        for abit in (0, 1):
            hst = f"g{i}_h{abit}"
            b.t(hst, "01", hst, move=RIGHT)
            first_b = (f"g{i}_{abit}b1" if gap_b > 1 else f"g{i}_{abit}rb")
            b.t(hst, BLANK, first_b, move=LEFT)
            for q in range(1, gap_b):
                to = (f"g{i}_{abit}b{q + 1}" if q + 1 < gap_b
                      else f"g{i}_{abit}rb")
                b.t(f"g{i}_{abit}b{q}", "01", to, move=LEFT)
            for sym, bbit in (("0", 0), ("1", 1)):
                value = (abit & bbit) if op == OP_AND else (abit | bbit)
                b.t(f"g{i}_{abit}rb", sym, f"g{i}_w{value}", move=RIGHT)
        for bit in (0, 1):
            wst = f"g{i}_w{bit}"
            if (wst, "0") not in b.transitions:
                b.t(wst, "01", wst, move=RIGHT)
                nxt = write_and_next(i, bit)
                b.t(wst, BLANK, nxt, write=str(bit),
                    move=RIGHT if nxt not in (ACCEPT_STATE, REJECT_STATE)
                    else STAY)
    return b.build("anchor")


# --- builtin registry ---

_CANON_CNF = CNF(variable_count=3,
                 clauses=((1, -2), (2, 3)))


def builtin(name: str) -> TMSpec:
    """Fixture machines by name; the clique and CNF entries are canonical
    small members of their generated families."""
    factories = {
        "all_zeros": make_all_zeros,
        "parity": make_parity,
        "equality_halves": make_equality_halves,
        "clique_verifier": lambda: make_clique_verifier(5, 2),
        "cnf_verifier": lambda: make_cnf_verifier(_CANON_CNF),
    }
    factory = factories.get(name)
    if factory is None:
        raise UnknownBuiltin(name)
    return factory()


BUILTIN_NAMES = ("all_zeros", "parity", "equality_halves",
                 "clique_verifier", "cnf_verifier")

"""Exception types shared across the package.

Every domain error carries enough context to be printed on one line by the
CLI; the CLI maps any ForgeError to exit code 1.
"""


class ForgeError(Exception):
    """Base class for all domain errors."""


# --- placeholder strings ---

class IllegalCharacter(ForgeError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"illegal character {char!r} at position {position}")


# --- machines ---

class ParseError(ForgeError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class NonTotalTransitions(ForgeError):
    def __init__(self, state, symbol):
        self.state = state
        self.symbol = symbol
        super().__init__(f"missing transition for state {state!r} on symbol {symbol!r}")


class AlphabetTooLarge(ForgeError):
    def __init__(self, size):
        super().__init__(f"alphabet has {size} symbols, limit is 8")


class SymbolNotInAlphabet(ForgeError):
    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f"input symbol {symbol!r} not in machine alphabet")


class UnknownBuiltin(ForgeError):
    def __init__(self, name):
        super().__init__(f"unknown builtin machine {name!r}")


# --- circuits ---

class AssignmentLengthMismatch(ForgeError):
    def __init__(self, got, want):
        super().__init__(f"assignment has {got} bits, circuit has {want} inputs")


class BadInputIndex(ForgeError):
    def __init__(self, index, input_count):
        super().__init__(f"input index {index} out of range for {input_count} inputs")


class MalformedHeader(ForgeError):
    pass


class DanglingReference(ForgeError):
    def __init__(self, node, index, input_count):
        super().__init__(
            f"node {node}: input index {index} >= declared input count {input_count}")


class ForwardReference(ForgeError):
    def __init__(self, node, operand):
        super().__init__(f"node {node}: operand {operand} is not a backward reference")


# --- compiler ---

class SpecInvariantViolation(ForgeError):
    pass


class ExposeTooLarge(ForgeError):
    def __init__(self, expose, pcount):
        super().__init__(f"cannot expose {expose} placeholders, string has {pcount}")


# --- solver ---

class TooManyInputs(ForgeError):
    def __init__(self, inputs, gates):
        self.inputs = inputs
        self.gates = gates
        super().__init__(
            f"circuit has {inputs} inputs but only {gates} gates; "
            f"strict mode requires inputs <= ceil(log2(max(m, 2)))")


# --- engine ---

class SplitMismatch(ForgeError):
    pass


class PaddingUnderflow(ForgeError):
    def __init__(self, n, fn):
        super().__init__(f"padding function gives f({n}) = {fn} <= {n}")


class AlphaOutOfRange(ForgeError):
    def __init__(self, alpha, lo, hi):
        super().__init__(f"alpha = {alpha} outside required range ({lo}, {hi})")


class EpsilonNonpositive(ForgeError):
    def __init__(self, eps):
        super().__init__(f"epsilon must be positive, got {eps}")


class BoundExprError(ForgeError):
    pass


class TemplateError(ForgeError):
    pass


class ManifestError(ForgeError):
    pass


# --- encoders ---

class KOutOfRange(ForgeError):
    def __init__(self, k, v):
        super().__init__(f"k = {k} outside 1..{v}")

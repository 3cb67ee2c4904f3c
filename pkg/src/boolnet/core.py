"""Boolean states, truth-table networks and the basic coordinate operations.

Coordinates are numbered 1..n.  A state is packed into an integer index whose
most significant bit is x_1 and least significant bit is x_n, so that
ascending indices enumerate {0,1}^n in lexicographic tuple order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

MAX_N = 24


class UsageError(ValueError):
    """An operation was called outside its domain."""


class ParseError(UsageError):
    """Malformed network text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def coord_mask(n: int, i: int) -> int:
    """Bit mask of coordinate ``i`` inside an ``n``-bit state index."""
    if not 1 <= i <= n:
        raise UsageError(f"coordinate {i} out of range 1..{n}")
    return 1 << (n - i)


@dataclass(frozen=True, order=True)
class State:
    """A point of {0,1}^width, stored as its packed index."""

    width: int
    index: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_N:
            raise UsageError(f"width must lie in 1..{MAX_N}, got {self.width}")
        if not 0 <= self.index < (1 << self.width):
            raise UsageError(f"index {self.index} does not fit in {self.width} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int | bool]) -> State:
        index = 0
        for b in bits:
            if b not in (0, 1, True, False):
                raise UsageError(f"not a bit: {b!r}")
            index = (index << 1) | int(b)
        return cls(len(bits), index)

    @classmethod
    def parse(cls, text: str) -> State:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise UsageError(f"state literal must be a non-empty bit string, got {text!r}")
        return cls(len(text), int(text, 2))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.index >> (self.width - k)) & 1 for k in range(1, self.width + 1))

    def __getitem__(self, i: int) -> int:
        return 1 if self.index & coord_mask(self.width, i) else 0

    def __str__(self) -> str:
        return format(self.index, f"0{self.width}b")


@dataclass(frozen=True)
class BooleanNetwork:
    """A map F: {0,1}^n -> {0,1}^n given by its full truth table.

    ``table[k]`` is the packed index of F(x) for the state x of index k.
    """

    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise UsageError(f"n must lie in 1..{MAX_N}, got {self.n}")
        table = tuple(int(v) for v in self.table)
        if len(table) != 1 << self.n:
            raise UsageError(f"table needs {1 << self.n} entries, got {len(table)}")
        top = 1 << self.n
        for v in table:
            if not 0 <= v < top:
                raise UsageError(f"table entry {v} does not fit in {self.n} bits")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[State], State | Sequence[int]]) -> BooleanNetwork:
        """Tabulate ``fn`` over every state; ``fn`` may return a State or a bit tuple."""
        rows = []
        for k in range(1 << n):
            y = fn(State(n, k))
            if not isinstance(y, State):
                y = State.from_bits(y)
            if y.width != n:
                raise UsageError(f"function returned width {y.width}, expected {n}")
            rows.append(y.index)
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> BooleanNetwork:
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def negation(cls, n: int) -> BooleanNetwork:
        full = (1 << n) - 1
        return cls(n, tuple(k ^ full for k in range(1 << n)))

    @classmethod
    def constant(cls, value: State) -> BooleanNetwork:
        return cls(value.width, (value.index,) * (1 << value.width))

    def states(self) -> Iterator[State]:
        return (State(self.n, k) for k in range(1 << self.n))

    def __call__(self, x: State) -> State:
        return evaluate(self, x)


def evaluate(F: BooleanNetwork, x: State) -> State:
    if x.width != F.n:
        raise UsageError(f"state width {x.width} does not match network dimension {F.n}")
    return State(F.n, F.table[x.index])


def flip(x: State, coords: Iterable[int]) -> State:
    """Complement the coordinates in ``coords``."""
    mask = 0
    for i in coords:
        mask |= coord_mask(x.width, i)
    return State(x.width, x.index ^ mask)


def complement(x: State) -> State:
    return State(x.width, x.index ^ ((1 << x.width) - 1))


def hamming(x: State, y: State) -> int:
    if x.width != y.width:
        raise UsageError(f"width mismatch: {x.width} vs {y.width}")
    return (x.index ^ y.index).bit_count()


def restrict(F: BooleanNetwork, b: int | bool) -> BooleanNetwork:
    """F|b: freeze coordinate n at ``b`` and drop it from the output."""
    if F.n < 2:
        raise UsageError("cannot restrict a network of dimension 1")
    b = int(b)
    if b not in (0, 1):
        raise UsageError(f"b must be 0 or 1, got {b}")
    return BooleanNetwork(F.n - 1, tuple(F.table[(k << 1) | b] >> 1 for k in range(1 << (F.n - 1))))


def permute_coordinates(F: BooleanNetwork, perm: Sequence[int]) -> BooleanNetwork:
    """Relabel coordinates so that old coordinate ``perm[k-1]`` becomes coordinate ``k``.

    Combined with :func:`restrict` this freezes an arbitrary coordinate: move it
    to position n first.
    """
    n = F.n
    if sorted(perm) != list(range(1, n + 1)):
        raise UsageError(f"not a permutation of 1..{n}: {list(perm)}")

    def to_new(old: int) -> int:
        new = 0
        for k, src in enumerate(perm, start=1):
            if old & (1 << (n - src)):
                new |= 1 << (n - k)
        return new

    def to_old(new: int) -> int:
        old = 0
        for k, src in enumerate(perm, start=1):
            if new & (1 << (n - k)):
                old |= 1 << (n - src)
        return old

    return BooleanNetwork(n, tuple(to_new(F.table[to_old(k)]) for k in range(1 << n)))


def format_truth_table(F: BooleanNetwork) -> str:
    lines = [f"n={F.n}"]
    lines.extend(f"{k:0{F.n}b} {v:0{F.n}b}" for k, v in enumerate(F.table))
    return "\n".join(lines) + "\n"


def parse_truth_table(text: str) -> BooleanNetwork:
    """Read the ``n=<k>`` header followed by ``<x-bits> <F(x)-bits>`` rows.

    Rows may appear in any order but each state must appear exactly once.
    Blank lines and ``#`` comments are ignored.
    """
    n = None
    rows: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            n = parse_header(line, lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected '<x-bits> <F(x)-bits>'", lineno, 1)
        for col_part, part in zip((1, raw.find(parts[1]) + 1), parts):
            if len(part) != n or set(part) - {"0", "1"}:
                raise ParseError(f"expected a {n}-bit string, got {part!r}", lineno, col_part)
        x, y = int(parts[0], 2), int(parts[1], 2)
        if x in rows:
            raise ParseError(f"duplicate row for state {parts[0]}", lineno, 1)
        rows[x] = y
    if n is None:
        raise ParseError("missing 'n=<k>' header")
    missing = [k for k in range(1 << n) if k not in rows]
    if missing:
        raise ParseError(f"missing row for state {missing[0]:0{n}b} ({len(missing)} missing)")
    return BooleanNetwork(n, tuple(rows[k] for k in range(1 << n)))


def parse_header(line: str, lineno: int = 1) -> int:
    key, sep, value = line.partition("=")
    if key.strip() != "n" or not sep:
        raise ParseError("expected header 'n=<k>'", lineno, 1)
    try:
        n = int(value.strip())
    except ValueError:
        raise ParseError(f"bad dimension {value.strip()!r}", lineno, line.index("=") + 2) from None
    if not 1 <= n <= MAX_N:
        raise ParseError(f"n must lie in 1..{MAX_N}", lineno, line.index("=") + 2)
    return n

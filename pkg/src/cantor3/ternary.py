"""Exact base-3 arithmetic, multiplier normalization, and the integer families.

Digit words are least-significant first throughout: digits[i] is the
coefficient of 3**i. Display helpers reverse to the usual high-to-low
reading, so 19 renders as "201".
"""

from dataclasses import dataclass

from .errors import ParseError

FAMILY_KINDS = ("L", "N", "P")


def to_ternary(n: int) -> tuple[int, ...]:
    """Base-3 digits of n, least significant first. Zero gives the empty word."""
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    digits = []
    while n:
        n, d = divmod(n, 3)
        digits.append(d)
    return tuple(digits)


def from_ternary(digits) -> int:
    """Evaluate a least-significant-first digit word."""
    value = 0
    power = 1
    for i, d in enumerate(digits):
        if d not in (0, 1, 2):
            raise ValueError(f"digit {d!r} at position {i} is not a base-3 digit")
        value += d * power
        power *= 3
    return value


def render_ternary(n: int) -> str:
    """High-to-low digit string, as in 19 -> '201'. Zero renders as '0'."""
    if n == 0:
        return "0"
    return "".join(str(d) for d in reversed(to_ternary(n)))


@dataclass(frozen=True)
class Multiplier:
    """A positive integer with all factors of 3 stripped.

    Multiplying the defining set by 3 only shifts digit positions, so a
    multiplier and 3*it cut out the same set; every construction works on
    the reduced value. residue is value mod 3 and is never 0.
    """

    value: int
    ternary: tuple[int, ...]
    residue: int
    normalized_from: int

    def __str__(self):
        return str(self.value)


def normalize(m: int) -> Multiplier:
    """Strip factors of 3 from a positive integer and record the residue."""
    if m < 1:
        raise ValueError(f"multiplier must be a positive integer, got {m}")
    original = m
    while m % 3 == 0:
        m //= 3
    return Multiplier(value=m, ternary=to_ternary(m), residue=m % 3,
                      normalized_from=original)


def lowest_nonzero_digit(m: int) -> int:
    """Lowest-order nonzero base-3 digit of m, always 1 or 2."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    while m % 3 == 0:
        m //= 3
    return m % 3


@dataclass(frozen=True)
class FamilyId:
    """One member of the L, N, or P family of multipliers."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"family kind must be one of {FAMILY_KINDS}, got {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"family index must be >= 1, got {self.k}")

    def __str__(self):
        return f"{self.kind}:{self.k}"


def family_value(f: FamilyId) -> int:
    """L:k -> (3^k - 1)/2 = (1...1)_3, N:k -> 3^k + 1, P:k -> 2*3^k + 1."""
    if f.kind == "L":
        return (3 ** f.k - 1) // 2
    if f.kind == "N":
        return 3 ** f.k + 1
    return 2 * 3 ** f.k + 1


def parse_multiplier(text: str) -> Multiplier:
    """Parse one multiplier: decimal '19', ternary 't:201', or family 'L:4'."""
    text = text.strip()
    if not text:
        raise ParseError("empty multiplier")
    if text.startswith("t:"):
        body = text[2:]
        if not body or any(c not in "012" for c in body):
            raise ParseError(f"bad ternary literal {text!r}")
        value = from_ternary(tuple(int(c) for c in reversed(body)))
        if value == 0:
            raise ParseError("multiplier 0 is not allowed")
        return normalize(value)
    if len(text) > 2 and text[0] in FAMILY_KINDS and text[1] == ":":
        try:
            k = int(text[2:])
        except ValueError:
            raise ParseError(f"bad family index in {text!r}") from None
        if k < 1:
            raise ParseError(f"family index must be >= 1 in {text!r}")
        return normalize(family_value(FamilyId(text[0], k)))
    if text.isdigit():
        value = int(text)
        if value == 0:
            raise ParseError("multiplier 0 is not allowed")
        return normalize(value)
    raise ParseError(f"cannot parse multiplier {text!r}")


def parse_multiplier_list(text: str) -> list[Multiplier]:
    """Comma-separated multipliers. The implicit leading 1 is never written."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty multiplier list")
    return [parse_multiplier(p) for p in parts]

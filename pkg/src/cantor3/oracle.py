"""Brute-force ground truth by direct integer arithmetic.

Nothing here reads an automaton. A digit word w of length n stands for
x = sum w[i] * 3^i, and w is admissible for multiplier M when every one of
the first n base-3 digits of M*x is 0 or 1. All multipliers used here are
1 mod 3, which makes digit j of M*x final once digits 0..j of x are fixed,
so prefixes can be checked one new digit at a time and dead branches pruned.
That is the entire theory this module relies on.
"""

import math

from .errors import RefusalError
from .ternary import Multiplier, normalize

DEFAULT_LIMIT = 22


def _values(ms) -> tuple[int, ...]:
    values = []
    for m in ms:
        m = m if isinstance(m, Multiplier) else normalize(int(m))
        if m.residue == 2:
            raise ValueError(
                f"multiplier {m.value} has residue 2; handled upstream, not here")
        values.append(m.value)
    if not values:
        raise ValueError("need at least one multiplier")
    return tuple(values)


def admissible_word(ms, word) -> bool:
    """Check the digit criterion outright: no pruning, no state, no reuse."""
    values = _values(ms)
    for d in word:
        if d not in (0, 1):
            raise ValueError(f"words use digits 0 and 1 only, got {d}")
    x = sum(d * 3 ** i for i, d in enumerate(word))
    n = len(word)
    for M in values:
        y = M * x
        for j in range(n):
            if (y // 3 ** j) % 3 > 1:
                return False
    return True


def brute_count(ms, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Count admissible words in {0,1}^n by pruned depth-first enumeration."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if n > limit:
        raise RefusalError(f"brute-force count limited to n <= {limit}, got {n}")
    values = _values(ms)
    count = 0

    def rec(pos: int, x: int, p3: int):
        nonlocal count
        if pos == n:
            count += 1
            return
        for b in (0, 1):
            x2 = x + b * p3
            # digit pos of M*x2 is final; lower digits were already accepted
            if all((M * x2 // p3) % 3 <= 1 for M in values):
                rec(pos + 1, x2, p3 * 3)

    rec(0, 0, 1)
    return count


def brute_count_extendable(ms, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Count admissible length-n words with a guaranteed infinite continuation.

    A word extending to length n + V, where V bounds the number of distinct
    pending-carry states (at most prod(1 + M div 2) per the division
    M*x = settled digits + carry * 3^len), must revisit a state and can
    therefore loop forever. The limit applies to n; the extension search is
    a depth-first probe with early exit at depth n + V.
    """
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if n > limit:
        raise RefusalError(f"brute-force count limited to n <= {limit}, got {n}")
    values = _values(ms)
    V = math.prod(1 + M // 2 for M in values)
    target = n + V

    def extendable(x0: int, p0: int) -> bool:
        stack = [(n, x0, p0, 0)]
        while stack:
            pos, x, p3, b = stack.pop()
            if pos == target:
                return True
            if b > 1:
                continue
            stack.append((pos, x, p3, b + 1))
            x2 = x + b * p3
            if all((M * x2 // p3) % 3 <= 1 for M in values):
                stack.append((pos + 1, x2, p3 * 3, 0))
        return False

    count = 0

    def rec(pos: int, x: int, p3: int):
        nonlocal count
        if pos == n:
            if extendable(x, p3):
                count += 1
            return
        for b in (0, 1):
            x2 = x + b * p3
            if all((M * x2 // p3) % 3 <= 1 for M in values):
                rec(pos + 1, x2, p3 * 3)

    rec(0, 0, 1)
    return count


def dim_estimate(g, n: int) -> float:
    """log_3(number of length-n words) / n, from exact path counts.

    Converges to the dimension for strongly connected primitive
    presentations; a sanity estimate, not a certified value.
    """
    from .automaton import count_paths

    if n == 0:
        return 0.0
    c = count_paths(g, n)
    if c == 0:
        return 0.0
    return math.log(c, 3) / n

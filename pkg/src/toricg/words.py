"""Lattice-path words over the alphabet {U, D, H}.

U is an up step (1,1), D a down step (1,-1), H a horizontal step (1,0).
Words are plain Python strings; a Dyck word of semilength n has n U's,
n D's and every prefix holds at least as many U's as D's.  Enumeration
streams are in lexicographic order with U < D and are deterministic.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterator, Sequence

from .errors import PreconditionError, StructuralError

U = "U"
D = "D"
H = "H"

_RUN_TOKEN = re.compile(r"([UDH])(?:\^?(\d+))?")


def catalan(n: int) -> int:
    """n-th Catalan number C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise PreconditionError("catalan requires n >= 0")
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    """n-th Motzkin number M_n = sum_j binom(n, 2j) * C_j."""
    if n < 0:
        raise PreconditionError("motzkin requires n >= 0")
    return sum(comb(n, 2 * j) * catalan(j) for j in range(n // 2 + 1))


def catalan_triangle(n: int, k: int) -> int:
    """Catalan triangle entry C(n, k) = binom(n,k) - binom(n,k-1).

    Counts nonnegative {U,D}-paths with n steps from the origin to height
    n - 2k.  Out-of-range k (k < 0 or 2k > n) gives 0.
    """
    if n < 0:
        raise PreconditionError("catalan_triangle requires n >= 0")
    if k < 0 or 2 * k > n:
        return 0
    return comb(n, k) - (comb(n, k - 1) if k >= 1 else 0)


def word_from_text(text: str) -> str:
    """Parse a word from plain ("UUDD") or run-length ("U^4 D^2", "U4D2") text."""
    s = text.strip()
    if not s:
        return ""
    compact = s.replace(" ", "").replace("\t", "")
    if not compact:
        return ""
    out = []
    pos = 0
    while pos < len(compact):
        m = _RUN_TOKEN.match(compact, pos)
        if m is None:
            raise StructuralError(f"cannot parse word text {text!r} at position {pos}")
        letter, count = m.group(1), m.group(2)
        out.append(letter * (int(count) if count else 1))
        pos = m.end()
    return "".join(out)


def run_length_text(w: str) -> str:
    """Render a word as "U^4 D^2 ..." (exponents of 1 are left implicit)."""
    if not w:
        return ""
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return " ".join(parts)


def _check_ud(w: str) -> None:
    if any(ch not in "UD" for ch in w):
        raise StructuralError(f"expected a word over {{U,D}}, got {w!r}")


def is_balanced(w: str) -> bool:
    """True when w uses only U/D with equally many of each."""
    return all(ch in "UD" for ch in w) and 2 * w.count(U) == len(w)


def is_dyck(w: str) -> bool:
    """True when w is balanced and no prefix has more D's than U's."""
    if any(ch not in "UD" for ch in w):
        return False
    height = 0
    for ch in w:
        height += 1 if ch == U else -1
        if height < 0:
            return False
    return height == 0


def is_motzkin(w: str) -> bool:
    """True when w over {U,D,H} stays nonnegative and ends at height 0."""
    if any(ch not in "UDH" for ch in w):
        return False
    height = 0
    for ch in w:
        height += {"U": 1, "D": -1, "H": 0}[ch]
        if height < 0:
            return False
    return height == 0


def enumerate_words(n: int, kind: str = "dyck", height: int | None = None) -> Iterator[str]:
    """Yield words over {U,D} in lexicographic order with U < D.

    kind="dyck":      all Dyck words of semilength n (catalan(n) of them)
    kind="balanced":  all balanced words of semilength n (binom(2n, n))
    kind="nonneg_to_height": all nonnegative paths with n *steps* ending at
        ``height`` (catalan_triangle(n, (n - height) // 2) of them);
        n and height must have equal parity.
    """
    if n < 0:
        raise PreconditionError("enumerate_words requires n >= 0")
    if kind == "dyck":
        steps, target, nonneg = 2 * n, 0, True
    elif kind == "balanced":
        steps, target, nonneg = 2 * n, 0, False
    elif kind == "nonneg_to_height":
        if height is None or height < 0:
            raise PreconditionError("nonneg_to_height needs height >= 0")
        if (n - height) % 2:
            raise PreconditionError("height must have the parity of the step count")
        steps, target, nonneg = n, height, True
    else:
        raise PreconditionError(f"unknown word kind {kind!r}")
    if abs(target) > steps:
        return

    buf = [""] * steps

    def rec(i: int, h: int) -> Iterator[str]:
        if i == steps:
            yield "".join(buf)
            return
        remaining = steps - i - 1
        up = h + 1
        if abs(target - up) <= remaining:
            buf[i] = U
            yield from rec(i + 1, up)
        down = h - 1
        if (not nonneg or down >= 0) and abs(target - down) <= remaining:
            buf[i] = D
            yield from rec(i + 1, down)

    yield from rec(0, 0)


def factor_count(w: str, f: str) -> int:
    """Number of (possibly overlapping) occurrences of f as a factor of w."""
    if not f:
        raise PreconditionError("factor must be nonempty")
    return sum(1 for i in range(len(w) - len(f) + 1) if w[i : i + len(f)] == f)


def is_lukasiewicz(word: Sequence[int]) -> bool:
    """True when the letter weights q-1 sum to -1 with nonnegative proper prefixes."""
    if not word or any(q < 0 for q in word):
        return False
    total = 0
    for q in word[:-1]:
        total += q - 1
        if total < 0:
            return False
    return total + word[-1] - 1 == -1


def dyck_to_lukasiewicz(w: str) -> tuple[int, ...]:
    """Send U^{q_1} D ... U^{q_n} D to the letter sequence (q_1, ..., q_n, 0).

    The result is a Lukasiewicz word of length n + 1 (letter q has weight
    q - 1); the map is a bijection from Dyck words of semilength n.
    """
    if not is_dyck(w):
        raise StructuralError(f"not a Dyck word: {w!r}")
    out = []
    run = 0
    for ch in w:
        if ch == U:
            run += 1
        else:
            out.append(run)
            run = 0
    out.append(0)
    return tuple(out)


def lukasiewicz_to_dyck(word: Sequence[int]) -> str:
    """Inverse of dyck_to_lukasiewicz."""
    if not is_lukasiewicz(word):
        raise StructuralError(f"not a Lukasiewicz word: {word!r}")
    return "".join(U * q + D for q in word[:-1])


def dyck_to_motzkin(w: str) -> str:
    """Rewrite each UUD factor as U, each remaining UD as H, remaining D as D.

    On UUU-avoiding Dyck words this is the classical bijection onto Motzkin
    paths; the same rewriting applies to any balanced UUU-avoiding word that
    ends with D.  The number of UU factors of the input equals the number of
    U letters of the output.
    """
    if not is_balanced(w):
        raise StructuralError(f"not a balanced word: {w!r}")
    out = []
    i = 0
    while i < len(w):
        if w[i] == U:
            if w[i + 1 : i + 3] == "UD":
                out.append(U)
                i += 3
            elif w[i + 1 : i + 2] == D:
                out.append(H)
                i += 2
            else:
                raise StructuralError(
                    f"word {w!r} has a UUU factor or ends inside a U run"
                )
        else:
            out.append(D)
            i += 1
    return "".join(out)


def motzkin_to_dyck(w: str) -> str:
    """Inverse rewriting U -> UUD, H -> UD, D -> D."""
    if any(ch not in "UDH" for ch in w):
        raise StructuralError(f"expected a word over {{U,D,H}}, got {w!r}")
    return "".join({"U": "UUD", "H": "UD", "D": "D"}[ch] for ch in w)


def is_sparse(elements) -> bool:
    """True when the integer set contains no two consecutive values."""
    xs = sorted(elements)
    return all(b - a >= 2 for a, b in zip(xs, xs[1:]))


def sparse_subsets(limit: int) -> Iterator[tuple[int, ...]]:
    """All sparse subsets of {1, ..., limit}, in lexicographic order."""

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for a in range(start, limit + 1):
            for rest in rec(a + 2):
                yield (a,) + rest

    yield from rec(1)

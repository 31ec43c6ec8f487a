"""Shared brute-force oracles for the test suite.

Everything here is deliberately naive and independent of the library code
paths it is used to check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def all_ud_words(length: int):
    """Every {U,D}-string of the given length, by raw product."""
    return ("".join(t) for t in itertools.product("UD", repeat=length))


def all_udh_words(length: int):
    return ("".join(t) for t in itertools.product("UDH", repeat=length))


def naive_is_dyck(w: str) -> bool:
    h = 0
    for ch in w:
        h += 1 if ch == "U" else -1 if ch == "D" else 99
        if h < 0:
            return False
    return h == 0


def naive_is_motzkin(w: str) -> bool:
    h = 0
    for ch in w:
        h += {"U": 1, "D": -1, "H": 0}[ch]
        if h < 0:
            return False
    return h == 0


@lru_cache(maxsize=None)
def naive_catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(naive_catalan(i) * naive_catalan(n - 1 - i) for i in range(n))


def contains_pattern_123(seq, weak: bool) -> bool:
    ok = (lambda a, b: a <= b) if weak else (lambda a, b: a < b)
    n = len(seq)
    return any(
        ok(seq[i], seq[j]) and ok(seq[j], seq[k])
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def parks_by_simulation(f) -> bool:
    """Drive the cars: car i wants spot f(i) and rolls forward to the first
    free spot; f is a parking function iff nobody falls off the street."""
    n = len(f)
    taken = [False] * n
    for want in f:
        spot = want - 1
        while spot < n and taken[spot]:
            spot += 1
        if spot == n:
            return False
        taken[spot] = True
    return True


def naive_peaks_in_prefix(w: str, m: int) -> int:
    return sum(1 for i in range(min(m, len(w)) - 1) if w[i : i + 2] == "UD")


def nonneg_paths_to_height(steps: int, height: int):
    """Filter the raw product; independent of the library enumerator."""
    for w in all_ud_words(steps):
        h = 0
        ok = True
        for ch in w:
            h += 1 if ch == "U" else -1
            if h < 0:
                ok = False
                break
        if ok and h == height:
            yield w

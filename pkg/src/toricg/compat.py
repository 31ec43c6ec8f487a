"""Compatibility constraints on labeled Dyck words, the compression
bijection that removes them, and noncrossing partition statistics.

In a labeled Dyck word of semilength n the U letters and the D letters are
indexed 1..n left to right.  Labels are positional and always recomputed
from the word, never stored.  For sparse sets A, B of [n-1] a word is
(A,B)-compatible when U_a U_{a+1} D is a factor for each a in A and
U D_b D_{b+1} is a factor for each b in B.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import PreconditionError, StructuralError
from .words import (D, U, catalan, enumerate_words, is_dyck, is_sparse)


def u_positions(w: str) -> list[int]:
    """0-based positions of the U letters; entry i holds U_{i+1}."""
    return [i for i, ch in enumerate(w) if ch == U]


def d_positions(w: str) -> list[int]:
    return [i for i, ch in enumerate(w) if ch == D]


def _check_sparse_subsets(n: int, A: Iterable[int], B: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    A = tuple(sorted(set(A)))
    B = tuple(sorted(set(B)))
    for name, S in (("A", A), ("B", B)):
        if not is_sparse(S):
            raise PreconditionError(f"{name} must be sparse: {S!r}")
        if any(not (1 <= x <= n - 1) for x in S):
            raise PreconditionError(f"{name} must lie inside [1, {n - 1}]: {S!r}")
    return A, B


def is_compatible(w: str, A: Iterable[int], B: Iterable[int]) -> bool:
    """Check the (A,B) factor conditions on a balanced word."""
    if any(ch not in "UD" for ch in w) or 2 * w.count(U) != len(w):
        raise StructuralError(f"not a balanced word: {w!r}")
    n = len(w) // 2
    A, B = _check_sparse_subsets(n, A, B)
    upos = u_positions(w)
    dpos = d_positions(w)
    for a in A:
        p = upos[a - 1]
        if upos[a] != p + 1 or w[p + 2 : p + 3] != D:
            return False
    for b in B:
        q = dpos[b - 1]
        if dpos[b] != q + 1 or q == 0 or w[q - 1] != U:
            return False
    return True


def compress(w: str, A: Iterable[int], B: Iterable[int]) -> str:
    """Erase the (A,B) factors: overlapping pairs U_a U_{a+1} D_b D_{b+1}
    vanish entirely, each remaining U_a U_{a+1} D collapses to U and each
    remaining U D_b D_{b+1} collapses to D.  The result is a Dyck word of
    semilength n - |A| - |B|; :func:`expand` inverts the map.
    """
    if not is_dyck(w):
        raise StructuralError(f"not a Dyck word: {w!r}")
    n = len(w) // 2
    A, B = _check_sparse_subsets(n, A, B)
    if not is_compatible(w, A, B):
        raise PreconditionError(f"word is not ({A},{B})-compatible: {w!r}")
    upos = u_positions(w)
    dpos = d_positions(w)
    d_index = {pos: i + 1 for i, pos in enumerate(dpos)}
    b_set = set(B)
    consumed_b = set()
    delete: set[int] = set()
    for a in A:
        p = upos[a - 1]
        b = d_index[p + 2]
        if b in b_set:
            # the only possible overlap: U_a U_{a+1} D_b D_{b+1}
            delete.update((p, p + 1, p + 2, p + 3))
            consumed_b.add(b)
        else:
            delete.update((p + 1, p + 2))
    for b in B:
        if b in consumed_b:
            continue
        q = dpos[b - 1]
        delete.update((q - 1, q))
    return "".join(ch for i, ch in enumerate(w) if i not in delete)


def expand(w: str, n: int, A: Iterable[int], B: Iterable[int]) -> str:
    """Rebuild the unique (A,B)-compatible Dyck word of semilength n that
    compresses to ``w``.

    Minimal elements of A and B are reinserted first.  The case split keys
    on the relative order of U_{a-1}, U_a, D_{b-1}, D_b in the current word;
    missing low letters (a = 1 or b = 1) count as standing in front of the
    word and letters beyond the current semilength as standing after it.
    """
    A, B = _check_sparse_subsets(n, A, B)
    if not is_dyck(w):
        raise StructuralError(f"not a Dyck word: {w!r}")
    if len(w) != 2 * (n - len(A) - len(B)):
        raise PreconditionError(
            f"expected semilength {n - len(A) - len(B)}, got {len(w) // 2}"
        )
    return _expand(w, list(A), list(B))


_FRONT = -1


def _expand(w: str, A: list[int], B: list[int]) -> str:
    if not A and not B:
        return w
    end = len(w) + 1

    def upos_of(i: int) -> int:
        if i == 0:
            return _FRONT
        ps = u_positions(w)
        return ps[i - 1] if i <= len(ps) else end

    def dpos_of(i: int) -> int:
        if i == 0:
            return _FRONT
        ps = d_positions(w)
        return ps[i - 1] if i <= len(ps) else end

    if not A:
        b = B[0]
        pos = dpos_of(b)
        return _expand(w[:pos] + "UD" + w[pos:], A, B[1:])
    if not B:
        a = A[0]
        pos = upos_of(a)
        return _expand(w[: pos + 1] + "UD" + w[pos + 1 :], A[1:], B)

    a, b = A[0], B[0]
    pu_prev, pu = upos_of(a - 1), upos_of(a)
    pd_prev, pd = dpos_of(b - 1), dpos_of(b)
    if pu < pd_prev:
        # U_{a-1} ... U_a ... D_{b-1} ... D_b: grow U_a into U_a U_{a+1} D
        return _expand(w[: pu + 1] + "UD" + w[pu + 1 :], A[1:], B)
    if pd < pu_prev:
        # D_{b-1} ... D_b ... U_{a-1} ... U_a: grow D_b into U D_b D_{b+1}
        return _expand(w[:pd] + "UD" + w[pd:], A, B[1:])
    # U_{a-1} and D_{b-1} both precede U_a and D_b: the middle two letters
    # are adjacent, and the factor U_a U_{a+1} D_b D_{b+1} goes between them.
    pos = sorted((pu_prev, pu, pd_prev, pd))[2]
    pos = min(pos, len(w))
    return _expand(w[:pos] + "UUDD" + w[pos:], A[1:], B[1:])


def count_compatible(n: int, A: Iterable[int], B: Iterable[int], kind: str = "dyck") -> int:
    """Brute-force count of (A,B)-compatible words of semilength n.

    Equals catalan(n - |A| - |B|) for kind="dyck" and the central binomial
    coefficient binom(2(n-|A|-|B|), n-|A|-|B|) for kind="balanced".
    """
    if kind not in ("dyck", "balanced"):
        raise PreconditionError(f"unknown kind {kind!r}")
    A, B = _check_sparse_subsets(n, A, B)
    return sum(1 for w in enumerate_words(n, kind) if is_compatible(w, A, B))


# ---------------------------------------------------------------------------
# Noncrossing partitions.
# ---------------------------------------------------------------------------


class NoncrossingPartition:
    """A noncrossing set partition of [n]; blocks are stored sorted."""

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bs = tuple(sorted(tuple(sorted(b)) for b in blocks))
        elements = [x for b in bs for x in b]
        n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise StructuralError(f"blocks do not partition [n]: {bs!r}")
        if not _is_noncrossing(bs):
            raise StructuralError(f"partition is crossing: {bs!r}")
        self.blocks = bs
        self.n = n

    def __eq__(self, other):
        if not isinstance(other, NoncrossingPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"NoncrossingPartition.from_text({nc_to_text(self)!r})"

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def nonsingleton_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) >= 2)


def _is_noncrossing(blocks) -> bool:
    owner = {}
    for idx, b in enumerate(blocks):
        for x in b:
            owner[x] = idx
    # crossing <=> some pair of blocks alternates ... a b a b ...
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            merged = sorted(blocks[i] + blocks[j])
            changes = sum(
                1 for x, y in zip(merged, merged[1:]) if owner[x] != owner[y]
            )
            if changes >= 3:
                return False
    return True


def is_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    try:
        NoncrossingPartition(blocks)
        return True
    except StructuralError:
        return False


def nc_from_text(text: str) -> NoncrossingPartition:
    """Parse "1,2|3|4"."""
    blocks = [[int(tok) for tok in part.split(",")] for part in text.split("|")]
    return NoncrossingPartition(blocks)


def nc_to_text(p: NoncrossingPartition) -> str:
    return "|".join(",".join(str(x) for x in b) for b in p.blocks)


def dyck_to_nc(w: str) -> NoncrossingPartition:
    """Label the D steps 1..n reading right to left, transfer each label to
    the matching U (parenthesis matching), and read the blocks off the
    maximal runs of U's.  Nonsingleton blocks correspond to UUD factors and
    fillers to UDD factors."""
    if not is_dyck(w):
        raise StructuralError(f"not a Dyck word: {w!r}")
    n = len(w) // 2
    u_label = [0] * n
    stack: list[int] = []
    u_idx = d_seen = 0
    for ch in w:
        if ch == U:
            stack.append(u_idx)
            u_idx += 1
        else:
            d_seen += 1
            u_label[stack.pop()] = n - d_seen + 1
    ups = u_positions(w)
    blocks: list[list[int]] = []
    for idx in range(n):
        if idx and ups[idx] == ups[idx - 1] + 1:
            blocks[-1].append(u_label[idx])
        else:
            blocks.append([u_label[idx]])
    return NoncrossingPartition(blocks)


def nc_to_dyck(p: NoncrossingPartition) -> str:
    """Inverse of :func:`dyck_to_nc`: D labels descend n..1 left to right
    and each block emits its U run immediately before the D labeled with the
    block maximum."""
    block_max = {max(b): b for b in p.blocks}
    out = []
    for d in range(p.n, 0, -1):
        if d in block_max:
            out.append(U * len(block_max[d]))
        out.append(D)
    return "".join(out)


def enumerate_nc(n: int) -> Iterator[NoncrossingPartition]:
    """All noncrossing partitions of [n] (catalan(n) many)."""
    return (dyck_to_nc(w) for w in enumerate_words(n, "dyck"))


def fillers(p: NoncrossingPartition) -> tuple[int, ...]:
    """Elements i >= 2 that either close their block with i-1 alongside, or
    form a singleton while i-1 is not its block's maximum.  The result is
    always sparse."""
    out = []
    for i in range(2, p.n + 1):
        b = p.block_of(i)
        if i == max(b) and (i - 1) in b:
            out.append(i)
        elif len(b) == 1 and (i - 1) != max(p.block_of(i - 1)):
            out.append(i)
    return tuple(out)


def nc_complex_faces(n: int, k: int) -> int:
    """Number of k-element collections of >=2-element subsets of [n] that
    occur as the nonsingleton blocks of a noncrossing partition."""
    if k < 0:
        raise PreconditionError("k must be >= 0")
    faces = {p.nonsingleton_blocks() for p in enumerate_nc(n)}
    return sum(1 for face in faces if len(face) == k)


def sparse_pairs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs of sparse subsets of [n-1] (plumbing for the sweeps)."""
    from .words import sparse_subsets

    subsets = list(sparse_subsets(n - 1))
    return itertools.product(subsets, subsets)

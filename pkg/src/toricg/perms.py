"""Permutations of [n]: ascent/descent statistics, 123-avoidance, the
Krattenthaler bijection with Dyck words, and min-rooted binary trees
("increasing binary trees") carrying the child-swap group actions.

A permutation is a tuple of the integers 1..n in one-line notation.
Plane trees with increasing vertex labels are nested tuples
(label, (child, child, ...)).
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .errors import PreconditionError, StructuralError
from .words import D, U, is_dyck

PlaneTree = tuple  # (label, (PlaneTree, ...))


def perm_from_text(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split())


def perm_to_text(p) -> str:
    return " ".join(str(v) for v in p)


def validate_perm(p) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise StructuralError(f"not a permutation of [{len(p)}]: {p!r}")


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def ascent_set(p) -> tuple[int, ...]:
    """Positions i with p(i) < p(i+1), as a sorted tuple."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] < p[i])


def descent_set(p) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def asc(p) -> int:
    return len(ascent_set(p))


def des(p) -> int:
    return len(descent_set(p))


class PermStats(NamedTuple):
    """Ascent/descent sets plus the interior classification of positions
    2 <= i <= n-1 into peaks, valleys, double descents and double ascents."""

    asc: tuple[int, ...]
    des: tuple[int, ...]
    peaks: tuple[int, ...]
    valleys: tuple[int, ...]
    double_descents: tuple[int, ...]
    double_ascents: tuple[int, ...]


def asc_des(p) -> PermStats:
    if len(p) < 1:
        raise PreconditionError("asc_des requires n >= 1")
    validate_perm(p)
    peaks, valleys, dds, das = [], [], [], []
    for i in range(2, len(p)):
        a, b, c = p[i - 2], p[i - 1], p[i]
        if a < b > c:
            peaks.append(i)
        elif a > b < c:
            valleys.append(i)
        elif a > b > c:
            dds.append(i)
        else:
            das.append(i)
    return PermStats(
        ascent_set(p), descent_set(p),
        tuple(peaks), tuple(valleys), tuple(dds), tuple(das),
    )


def has_final_descent(p) -> bool:
    return len(p) >= 2 and p[-2] > p[-1]


def is_123_avoiding(p) -> bool:
    """True when no i1 < i2 < i3 has p(i1) < p(i2) < p(i3).

    Linear scan: m1 is the minimum so far, m2 the least value that already
    tops a strictly increasing pair; any value above m2 completes a triple.
    """
    m1 = m2 = None
    for v in p:
        if m2 is not None and m2 < v:
            return False
        if m1 is not None and m1 < v and (m2 is None or v < m2):
            m2 = v
        if m1 is None or v < m1:
            m1 = v
    return True


def is_123_avoiding_bruteforce(p) -> bool:
    """Cubic reference implementation kept as an oracle for the fast scan."""
    n = len(p)
    return not any(
        p[i] < p[j] < p[k]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def left_to_right_minima(p) -> tuple[int, ...]:
    """Positions i whose value is smaller than everything before it."""
    out = []
    best = None
    for i, v in enumerate(p, start=1):
        if best is None or v < best:
            out.append(i)
            best = v
    return tuple(out)


def krattenthaler(p) -> str:
    """Dyck word of a 123-avoiding permutation.

    U steps carry the labels n, n-1, ..., 1 left to right.  Each
    left-to-right minimum p(i) contributes the peak D right after the U
    labeled p(i); the entries until the next minimum follow as further D
    steps.  Reading the D-step labels left to right recovers p.
    """
    validate_perm(p)
    if not is_123_avoiding(p):
        raise PreconditionError(f"permutation is not 123-avoiding: {p!r}")
    n = len(p)
    minima = set(left_to_right_minima(p))
    out = []
    next_u = n
    for i, v in enumerate(p, start=1):
        if i in minima:
            out.append(U * (next_u - v + 1))
            next_u = v - 1
        out.append(D)
    return "".join(out)


def krattenthaler_inv(w: str) -> tuple[int, ...]:
    """Inverse of :func:`krattenthaler`.

    Peak D's (those right after a U) take their U's label; the remaining
    D's take the unused labels in decreasing order.
    """
    if not is_dyck(w):
        raise StructuralError(f"not a Dyck word: {w!r}")
    n = len(w) // 2
    u_seen = 0
    slots: list[Optional[int]] = []
    for i, ch in enumerate(w):
        if ch == U:
            u_seen += 1
        else:
            slots.append(n - u_seen + 1 if w[i - 1] == U else None)
    rest = iter(sorted(set(range(1, n + 1)) - {v for v in slots if v}, reverse=True))
    return tuple(v if v is not None else next(rest) for v in slots)


def enumerate_123_avoiding(n: int) -> Iterator[tuple[int, ...]]:
    """All 123-avoiding permutations of [n] in lexicographic order."""
    if n < 0:
        raise PreconditionError("n must be >= 0")
    prefix: list[int] = []
    used = [False] * (n + 1)
    big = n + 1

    def rec(m1: int, m2: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v] or m2 < v:
                continue
            used[v] = True
            prefix.append(v)
            yield from rec(min(m1, v), min(m2, v) if m1 < v else m2)
            prefix.pop()
            used[v] = False

    yield from rec(big, big)


# ---------------------------------------------------------------------------
# Min-rooted binary trees with distinguished left/right child slots.
# ---------------------------------------------------------------------------


class FSTree:
    """A vertex of a min-rooted tree: every vertex has at most one left and
    one right child and labels increase away from the root."""

    __slots__ = ("label", "left", "right")

    def __init__(self, label: int, left: "FSTree | None" = None,
                 right: "FSTree | None" = None):
        self.label = label
        self.left = left
        self.right = right

    def __eq__(self, other) -> bool:
        if not isinstance(other, FSTree):
            return NotImplemented
        return (self.label == other.label and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.label, self.left, self.right))

    def __repr__(self) -> str:
        return f"FSTree.from_text({fs_tree_to_text(self)!r})"

    def labels(self) -> set[int]:
        out = {self.label}
        if self.left is not None:
            out |= self.left.labels()
        if self.right is not None:
            out |= self.right.labels()
        return out


def fs_tree(p) -> FSTree:
    """Decompose recursively: the minimum becomes the root, everything to
    its left the left subtree and everything to its right the right one."""
    validate_perm(p)
    if not p:
        raise PreconditionError("fs_tree requires a nonempty permutation")

    def build(lo: int, hi: int) -> FSTree | None:
        if lo >= hi:
            return None
        m = min(range(lo, hi), key=p.__getitem__)
        return FSTree(p[m], build(lo, m), build(m + 1, hi))

    return build(0, len(p))


def fs_inorder(t: FSTree) -> tuple[int, ...]:
    """Left subtree, root, right subtree; inverts :func:`fs_tree`."""
    out: list[int] = []

    def walk(node: FSTree | None) -> None:
        if node is None:
            return
        walk(node.left)
        out.append(node.label)
        walk(node.right)

    walk(t)
    return tuple(out)


def _rebuild(node: FSTree | None, x: int, swap_if) -> tuple[FSTree | None, bool]:
    if node is None:
        return None, False
    if node.label == x:
        if swap_if(node):
            return FSTree(node.label, node.right, node.left), True
        return node, True
    left, found = _rebuild(node.left, x, swap_if)
    if found:
        return FSTree(node.label, left, node.right), True
    right, found = _rebuild(node.right, x, swap_if)
    if found:
        return FSTree(node.label, node.left, right), True
    return node, False


def fs_phi(t: FSTree, x: int) -> FSTree:
    """Exchange the left and right subtrees of the vertex labeled x."""
    new, found = _rebuild(t, x, lambda node: True)
    if not found:
        raise PreconditionError(f"no vertex labeled {x}")
    return new


def fs_psi(t: FSTree, x: int) -> FSTree:
    """Restricted swap: acts like fs_phi when the vertex labeled x has
    exactly one child and as the identity otherwise."""
    new, found = _rebuild(
        t, x, lambda node: (node.left is None) != (node.right is None)
    )
    if not found:
        raise PreconditionError(f"no vertex labeled {x}")
    return new


def is_right_adjusted(t: FSTree | None) -> bool:
    """True when no vertex has an only child sitting in the left slot."""
    if t is None:
        return True
    if t.left is not None and t.right is None:
        return False
    return is_right_adjusted(t.left) and is_right_adjusted(t.right)


def _right_adjust(node: FSTree | None) -> FSTree | None:
    if node is None:
        return None
    left = _right_adjust(node.left)
    right = _right_adjust(node.right)
    if left is not None and right is None:
        return FSTree(node.label, None, left)
    return FSTree(node.label, left, right)


def right_adjusted_rep(p) -> tuple[int, ...]:
    """The unique member of p's restricted-swap orbit whose tree is
    right-adjusted; it has no double descents and no final descent."""
    return fs_inorder(_right_adjust(fs_tree(p)))


def restricted_orbit(p) -> frozenset[tuple[int, ...]]:
    """Closure of p under all single-child swaps, as a set of permutations."""
    validate_perm(p)
    n = len(p)
    seen = {tuple(p)}
    frontier = [tuple(p)]
    while frontier:
        q = frontier.pop()
        t = fs_tree(q)
        for x in range(1, n + 1):
            r = fs_inorder(fs_psi(t, x))
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return frozenset(seen)


def fs_tree_to_text(t: FSTree | None) -> str:
    """Nested parenthesized rendering with L/R slot markers,
    e.g. "(1 L(2) R(3 R(4)))"."""
    if t is None:
        return "()"
    parts = [str(t.label)]
    if t.left is not None:
        parts.append("L" + fs_tree_to_text(t.left))
    if t.right is not None:
        parts.append("R" + fs_tree_to_text(t.right))
    return "(" + " ".join(parts) + ")"


def fs_tree_from_text(text: str) -> FSTree:
    s = text.replace(" ", "")

    def parse(i: int) -> tuple[FSTree, int]:
        if s[i] != "(":
            raise StructuralError(f"expected '(' at {i} in {text!r}")
        i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i:
            raise StructuralError(f"expected a label at {i} in {text!r}")
        label = int(s[i:j])
        i = j
        left = right = None
        while i < len(s) and s[i] in "LR":
            slot = s[i]
            child, i = parse(i + 1)
            if slot == "L":
                left = child
            else:
                right = child
        if i >= len(s) or s[i] != ")":
            raise StructuralError(f"expected ')' at {i} in {text!r}")
        return FSTree(label, left, right), i + 1

    tree, end = parse(0)
    if end != len(s):
        raise StructuralError(f"trailing text in {text!r}")
    return tree


# ---------------------------------------------------------------------------
# Plane trees with increasing vertex labels.
# ---------------------------------------------------------------------------


def increasing_plane_trees(count: int, max_children: int | None = None) -> Iterator[PlaneTree]:
    """All plane trees on ``count`` vertices labeled 1..count with labels
    increasing away from the root.

    Built by inserting vertex k as a new child of any existing vertex in any
    position; attachment slots are tried in (parent label, slot) order, so
    the stream is deterministic.
    """
    if count < 0:
        raise PreconditionError("count must be >= 0")
    if count == 0:
        return
    children: dict[int, list[int]] = {1: []}

    def freeze(v: int) -> PlaneTree:
        return (v, tuple(freeze(c) for c in children[v]))

    def rec(next_label: int) -> Iterator[PlaneTree]:
        if next_label > count:
            yield freeze(1)
            return
        for parent in range(1, next_label):
            cs = children[parent]
            if max_children is not None and len(cs) >= max_children:
                continue
            for slot in range(len(cs) + 1):
                cs.insert(slot, next_label)
                children[next_label] = []
                yield from rec(next_label + 1)
                del children[next_label]
                cs.pop(slot)

    yield from rec(2)


def count_forks(tree: PlaneTree) -> int:
    """Number of vertices with at least two children."""
    label, kids = tree
    return (len(kids) >= 2) + sum(count_forks(c) for c in kids)


def enumerate_increasing_012(vertex_count: int) -> Iterator[tuple[PlaneTree, int]]:
    """All increasing plane trees on ``vertex_count`` vertices in which every
    vertex has at most two children, tagged with their fork count."""
    for tree in increasing_plane_trees(vertex_count, max_children=2):
        yield tree, count_forks(tree)


def plane_to_fs(tree: PlaneTree) -> FSTree:
    """Identify a plane tree with <= 2 children per vertex with the
    right-adjusted min-rooted tree: an only child goes in the right slot."""
    label, kids = tree
    if len(kids) > 2:
        raise StructuralError("vertex has more than two children")
    if len(kids) == 0:
        return FSTree(label)
    if len(kids) == 1:
        return FSTree(label, None, plane_to_fs(kids[0]))
    return FSTree(label, plane_to_fs(kids[0]), plane_to_fs(kids[1]))

"""Building sets, chordality, B-permutations and the h/gamma/toric-g
pipeline for chordal nestohedra.

A building set on [m] is a family of nonempty subsets that contains every
singleton and is closed under unions of intersecting members.  It is
connected when [m] itself belongs to it, and chordal when every member
{i_1 < ... < i_r} contains all of its suffixes {i_s, ..., i_r}.  For a
connected chordal building set on [n+1] the h-polynomial of the associated
nestohedron is the descent generating function of its B-permutations, the
gamma-polynomial restricts that sum to permutations with no double
descents and no final descent, and the toric g-polynomial follows from the
gamma-vector.  Members are stored as bitmasks over a ground set of size at
most 16.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import parking, perms
from .config import check_capacity
from .errors import BuildingSetError, ChordalityError, PreconditionError
from .polyvec import IntPoly, toric_g_from_gamma

_NAMED_KINDS = (
    "permutahedron", "stanley_pitman", "associahedron_intervals", "interpolation",
)


def _mask(members: Iterable[int]) -> int:
    out = 0
    for i in members:
        out |= 1 << (i - 1)
    return out


def _unmask(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class BuildingSet:
    """A family of subsets of [ground_size], stored as sorted bitmasks."""

    __slots__ = ("ground_size", "masks")

    def __init__(self, ground_size: int, sets: Iterable[Iterable[int]]):
        if not (1 <= ground_size <= 16):
            raise PreconditionError("ground size must be between 1 and 16")
        masks = set()
        full = (1 << ground_size) - 1
        for s in sets:
            m = _mask(s)
            if m == 0:
                raise BuildingSetError("members must be nonempty", witness=())
            if m & ~full:
                raise BuildingSetError(
                    f"member {_unmask(m)} leaves the ground set [{ground_size}]",
                    witness=_unmask(m),
                )
            masks.add(m)
        self.ground_size = ground_size
        self.masks = tuple(sorted(masks))

    def members(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_unmask(m) for m in self.masks)

    def __contains__(self, item) -> bool:
        return _mask(item) in set(self.masks)

    def __eq__(self, other):
        if not isinstance(other, BuildingSet):
            return NotImplemented
        return (self.ground_size, self.masks) == (other.ground_size, other.masks)

    def __hash__(self):
        return hash((self.ground_size, self.masks))

    def __repr__(self):
        return f"BuildingSet({self.ground_size}, {list(self.members())!r})"

    def to_json(self) -> dict:
        return {
            "ground_size": self.ground_size,
            "sets": [list(s) for s in self.members()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BuildingSet":
        try:
            ground = int(data["ground_size"])
            sets = data["sets"]
        except (KeyError, TypeError, ValueError) as exc:
            raise BuildingSetError(f"malformed building-set JSON: {exc}") from exc
        return cls(ground, sets)


class ValidationReport(NamedTuple):
    connected: bool
    chordal: bool


def validate(bs: BuildingSet) -> ValidationReport:
    """Check the building-set axioms, then report connectivity/chordality.

    Axiom violations raise BuildingSetError carrying a witness: the missing
    singleton, or the pair whose union is missing.
    """
    masks = set(bs.masks)
    for i in range(1, bs.ground_size + 1):
        if 1 << (i - 1) not in masks:
            raise BuildingSetError(f"missing singleton {{{i}}}", witness=(i,))
    for a, b in itertools.combinations(bs.masks, 2):
        if a & b and (a | b) not in masks:
            raise BuildingSetError(
                f"union of intersecting members {_unmask(a)} and {_unmask(b)} is missing",
                witness=(_unmask(a), _unmask(b)),
            )
    full = (1 << bs.ground_size) - 1
    connected = full in masks
    chordal = all(_suffix_closed(member, masks) for member in bs.masks)
    return ValidationReport(connected, chordal)


def _suffix_closed(member: int, masks: set[int]) -> bool:
    elements = _unmask(member)
    suffix = 0
    for i in reversed(elements):
        suffix |= 1 << (i - 1)
        if suffix not in masks:
            return False
    return True


def graphical(ground_size: int, edges: Iterable[tuple[int, int]]) -> BuildingSet:
    """Building set of all vertex subsets inducing a connected subgraph."""
    adj = [0] * (ground_size + 1)
    for a, b in edges:
        if a == b:
            continue
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    sets = []
    for mask in range(1, 1 << ground_size):
        if _induced_connected(mask, adj, ground_size):
            sets.append(_unmask(mask))
    return BuildingSet(ground_size, sets)


def _induced_connected(mask: int, adj: Sequence[int], ground_size: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= adj[bit.bit_length()] & mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == mask


def restrict(bs: BuildingSet, T: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """The members of bs contained in T."""
    t = _mask(T)
    return tuple(_unmask(m) for m in bs.masks if m & ~t == 0)


def components(bs: BuildingSet, T: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal members of the T-restricted family; they partition T."""
    t = _mask(T)
    inside = [m for m in bs.masks if m & ~t == 0]
    maximal = [
        m for m in inside if not any(m != other and m & ~other == 0 for other in inside)
    ]
    return tuple(sorted(_unmask(m) for m in maximal))


def _component_roots(bs: BuildingSet) -> list[list[int]]:
    """roots[T][i-1] = smallest element of i's component in the T-restricted
    family, for every subset mask T; elements outside T get 0."""
    m = bs.ground_size
    roots = []
    for t in range(1 << m):
        inside = [mem for mem in bs.masks if mem & ~t == 0]
        parent = list(range(m + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for mem in inside:
            first = (mem & -mem).bit_length()
            rest = mem & (mem - 1)
            while rest:
                bit = rest & -rest
                rest ^= bit
                a, b = find(first), find(bit.bit_length())
                if a != b:
                    if a > b:
                        a, b = b, a
                    parent[b] = a
        roots.append([find(i) if t >> (i - 1) & 1 else 0 for i in range(1, m + 1)])
    return roots


def b_permutations(bs: BuildingSet, unsafe: bool = False) -> list[tuple[int, ...]]:
    """All permutations pi of the ground set such that pi(i) and
    max(pi(1..i)) share a component of the restriction to {pi(1..i)},
    for every prefix."""
    m = bs.ground_size
    check_capacity("b_permutations", m - 1, unsafe)
    roots = _component_roots(bs)
    out = []
    for pi in itertools.permutations(range(1, m + 1)):
        t = 0
        biggest = 0
        for v in pi:
            t |= 1 << (v - 1)
            if v > biggest:
                biggest = v
            r = roots[t]
            if r[v - 1] != r[biggest - 1]:
                break
        else:
            out.append(pi)
    return out


def _require_chordal(bs: BuildingSet) -> ValidationReport:
    report = validate(bs)
    if not (report.connected and report.chordal):
        raise ChordalityError(
            "the h/gamma pipeline needs a connected chordal building set; "
            "h-vectors of non-chordal nestohedra (tree-based formula) are out of scope"
        )
    return report


def h_chordal(bs: BuildingSet, unsafe: bool = False) -> tuple[int, ...]:
    """Descent generating vector of the B-permutations; palindromic."""
    _require_chordal(bs)
    n = bs.ground_size - 1
    hist = Counter(perms.des(pi) for pi in b_permutations(bs, unsafe))
    hvec = tuple(hist.get(i, 0) for i in range(n + 1))
    assert list(hvec) == list(reversed(hvec)), "chordal h-vector must be palindromic"
    return hvec


def gamma_chordal(bs: BuildingSet, unsafe: bool = False) -> tuple[int, ...]:
    """Descent counts over B-permutations with no double descents and no
    final descent; equals h_to_gamma(h_chordal(bs))."""
    _require_chordal(bs)
    n = bs.ground_size - 1
    hist: Counter[int] = Counter()
    for pi in b_permutations(bs, unsafe):
        stats = perms.asc_des(pi)
        if stats.double_descents or perms.has_final_descent(pi):
            continue
        hist[len(stats.des)] += 1
    return tuple(hist.get(j, 0) for j in range(n // 2 + 1))


def toric_g_chordal(bs: BuildingSet, unsafe: bool = False) -> IntPoly:
    """Toric g-polynomial through the gamma route."""
    n = bs.ground_size - 1
    return toric_g_from_gamma(n, gamma_chordal(bs, unsafe))


def toric_g_direct(bs: BuildingSet, dfs_only: bool = False, unsafe: bool = False) -> IntPoly:
    """Toric g-polynomial by direct enumeration of parking trees.

    Counts, by their number of weak ascents, the 123-avoiding parking
    functions on [n] whose parking tree (a plane 0-1-2 tree with increasing
    vertex labels plus an edge labeling) projects to the min-rooted tree of
    a B-permutation once edge labels are dropped and only children are
    pushed to the right slot.  With ``dfs_only`` the vertex labeling must
    additionally follow the depth-first search order of the shape.
    """
    n = bs.ground_size - 1
    check_capacity("direct_route", n, unsafe)
    _require_chordal(bs)
    allowed = set(b_permutations(bs, unsafe))
    labels = tuple(range(1, n + 1))
    acc: Counter[int] = Counter()
    for tree in perms.increasing_plane_trees(n + 1, max_children=2):
        if dfs_only and not _is_dfs_labeled(tree):
            continue
        if perms.fs_inorder(perms.plane_to_fs(tree)) not in allowed:
            continue
        counts: dict[int, int] = {}
        _scan_counts(tree, counts)
        parents = [v for v in sorted(counts) if counts[v]]
        sizes = [counts[v] for v in parents]
        for groups in parking._ordered_groups(labels, sizes):
            f = [0] * n
            for v, group in zip(parents, groups):
                for e in group:
                    f[e - 1] = v
            if parking.fn_is_123_avoiding(f):
                acc[parking.fn_ascents(f)] += 1
    out = [0] * (max(acc) + 1 if acc else 0)
    for k, c in acc.items():
        out[k] = c
    return IntPoly(out)


def _scan_counts(tree, counts: dict[int, int]) -> None:
    v, kids = tree
    counts[v] = len(kids)
    for c in kids:
        _scan_counts(c, counts)


def _is_dfs_labeled(tree) -> bool:
    """True when the labels read 1, 2, 3, ... in preorder."""
    expected = itertools.count(1)

    def walk(node) -> bool:
        v, kids = node
        return v == next(expected) and all(walk(c) for c in kids)

    return walk(tree)


def named_family(kind: str, n: int, r: int | None = None) -> BuildingSet:
    """Connected chordal building sets on [n+1] for the named families.

    permutahedron             all nonempty subsets
    stanley_pitman            singletons plus the suffixes [i, n+1]
    associahedron_intervals   all intervals [i, j]
    interpolation (needs r)   singletons of [r] plus every set meeting
                              [r+1, n+1]; r = 1 gives the permutahedron and
                              r = n the stellohedron
    """
    if n < 1:
        raise PreconditionError("named_family needs n >= 1")
    m = n + 1
    if kind == "permutahedron":
        sets = [s for k in range(1, m + 1) for s in itertools.combinations(range(1, m + 1), k)]
    elif kind == "stanley_pitman":
        sets = [[i] for i in range(1, m + 1)]
        sets += [list(range(i, m + 1)) for i in range(1, m + 1)]
    elif kind == "associahedron_intervals":
        sets = [list(range(i, j + 1)) for i in range(1, m + 1) for j in range(i, m + 1)]
    elif kind == "interpolation":
        if r is None or not (1 <= r <= n):
            raise PreconditionError("interpolation needs 1 <= r <= n")
        sets = [[i] for i in range(1, r + 1)]
        for k in range(1, m + 1):
            for s in itertools.combinations(range(1, m + 1), k):
                if max(s) >= r + 1:
                    sets.append(list(s))
    else:
        raise PreconditionError(
            f"unknown family {kind!r}; expected one of {_NAMED_KINDS}"
        )
    return BuildingSet(m, sets)


def ascent_polynomial(functions: Iterator[tuple[int, ...]]) -> IntPoly:
    """Generating polynomial of the weak ascent statistic over a stream of
    functions (plumbing for the brute-force routes)."""
    acc: Counter[int] = Counter()
    for f in functions:
        acc[parking.fn_ascents(f)] += 1
    out = [0] * (max(acc) + 1 if acc else 0)
    for k, c in acc.items():
        out[k] = c
    return IntPoly(out)

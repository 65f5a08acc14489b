"""Pattern containment, avoidance queries, and avoidance-pruned generation.

Classical patterns are permutations matched as order-isomorphic subsequences.
Vincular patterns add adjacency requirements: in the text form, letters *not*
separated by a dash must occupy consecutive positions in the host, so in
``2-31`` the letters 3 and 1 must be adjacent while 2 may sit anywhere
earlier.

Pruned generation composes with the Dumont backtracking in
:mod:`dumont.kinds` through the guard protocol: a partial placement is
abandoned as soon as the placed prefix already contains a forbidden pattern
(or, in exact-occurrence mode, as soon as the occurrence count overshoots the
target).  Two pattern-specific constant-time detectors cover the hot
enumeration at sizes 14 and up; everything else uses a generic backtracking
matcher.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from . import kinds as _kinds
from .kinds import DumontKind, Guard
from .permcore import Permutation

_INF = 1 << 30

# Exhaustive containment scans are exact but exponential in the pattern
# length; this envelope is far below any overflow or runtime hazard.
_MAX_HOST = 24


@dataclass(frozen=True)
class ClassicalPattern:
    """A plain pattern: any occurrence is an order-isomorphic subsequence."""

    perm: Permutation

    def __post_init__(self):
        if len(self.perm) < 1:
            raise ValueError("pattern must have length >= 1")

    @classmethod
    def parse(cls, text: str) -> "ClassicalPattern":
        return cls(Permutation.from_text(text))

    def __str__(self) -> str:
        return self.perm.to_text()


@dataclass(frozen=True)
class VincularPattern:
    """A pattern with adjacency constraints.

    ``adjacent`` holds the 1-based indices i such that the letters at pattern
    positions i and i+1 must be adjacent in the host.  An empty set makes the
    pattern behave exactly like the classical one on the same permutation.
    """

    perm: Permutation
    adjacent: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        k = len(self.perm)
        if k < 1:
            raise ValueError("pattern must have length >= 1")
        if any(i < 1 or i >= k for i in self.adjacent):
            raise ValueError("adjacency indices must satisfy 1 <= i < k")

    @classmethod
    def parse(cls, text: str) -> "VincularPattern":
        """Parse dashed notation: ``2-31`` keeps 3,1 adjacent, 2 free."""
        groups = text.split("-")
        if any(not g for g in groups):
            raise ValueError(f"malformed vincular pattern: {text!r}")
        letters = "".join(groups)
        perm = Permutation.from_text(letters)
        adjacent = set()
        start = 1
        for g in groups:
            for i in range(start, start + len(g) - 1):
                adjacent.add(i)
            start += len(g)
        return cls(perm, frozenset(adjacent))

    def runs(self) -> list[tuple[int, int]]:
        """Maximal blocks of pattern positions that must be host-adjacent.

        Returns (start, length) pairs with 0-based starts, in order.
        """
        out = []
        k = len(self.perm)
        start = 0
        for i in range(1, k + 1):
            if i == k or i not in self.adjacent:
                out.append((start, i - start))
                start = i
        return out

    def __str__(self) -> str:
        parts = []
        for start, length in self.runs():
            parts.append("".join(str(v) for v in self.perm.values[start:start + length]))
        return "-".join(parts)


@dataclass(frozen=True)
class AvoidanceQuery:
    """What to enumerate: members of a Dumont kind restricted by patterns.

    Plain mode (``occurrence_target`` unset) asks for members avoiding every
    pattern in ``forbidden``.  Exact mode asks for members with exactly
    ``occurrence_target`` occurrences of a single pattern, which therefore
    must be the only entry of ``forbidden``.
    """

    kind: DumontKind
    size: int
    forbidden: frozenset[ClassicalPattern]
    occurrence_target: Optional[int] = None

    def __post_init__(self):
        if not self.forbidden:
            raise ValueError("query needs at least one pattern")
        if self.occurrence_target is not None:
            if self.occurrence_target < 0:
                raise ValueError("occurrence target must be >= 0")
            if len(self.forbidden) != 1:
                raise ValueError("exact-occurrence mode takes a single pattern")


# ---------------------------------------------------------------------------
# Containment counting


def _check_host_size(n: int, k: int) -> None:
    if n > _MAX_HOST and k >= 3:
        raise ValueError(f"host length {n} exceeds the supported envelope of {_MAX_HOST}")


def _count_embeddings(host: Sequence[int], pat: Sequence[int]) -> int:
    k = len(pat)
    n = len(host)
    if k > n:
        return 0
    total = 0
    chosen: list[int] = []

    def rec(j: int, start: int) -> None:
        nonlocal total
        end = n - (k - 1 - j)
        for i in range(start, end):
            v = host[i]
            ok = True
            for t in range(j):
                if (chosen[t] < v) != (pat[t] < pat[j]):
                    ok = False
                    break
            if not ok:
                continue
            if j == k - 1:
                total += 1
            else:
                chosen.append(v)
                rec(j + 1, i + 1)
                chosen.pop()

    rec(0, 0)
    return total


def _contains(host: Sequence[int], pat: Sequence[int]) -> bool:
    k = len(pat)
    n = len(host)
    if k > n:
        return False
    chosen: list[int] = []

    def rec(j: int, start: int) -> bool:
        end = n - (k - 1 - j)
        for i in range(start, end):
            v = host[i]
            ok = True
            for t in range(j):
                if (chosen[t] < v) != (pat[t] < pat[j]):
                    ok = False
                    break
            if not ok:
                continue
            if j == k - 1:
                return True
            chosen.append(v)
            if rec(j + 1, i + 1):
                return True
            chosen.pop()
        return False

    return rec(0, 0)


def count_occurrences(p: Permutation, q: ClassicalPattern) -> int:
    """Number of subsequences of ``p`` order-isomorphic to the pattern."""
    _check_host_size(len(p), len(q.perm))
    return _count_embeddings(p.values, q.perm.values)


def avoids(p: Permutation, q: ClassicalPattern) -> bool:
    """True when ``p`` has no occurrence of the pattern (early exit)."""
    return not _contains(p.values, q.perm.values)


def avoids_all(p: Permutation, patterns: Iterable[ClassicalPattern]) -> bool:
    return all(avoids(p, q) for q in patterns)


def _count_vincular(host: Sequence[int], pat: Sequence[int],
                    runs: Sequence[tuple[int, int]]) -> int:
    n = len(host)
    k = len(pat)
    if k > n:
        return 0
    total = 0
    chosen: list[tuple[int, int]] = []  # (pattern index, host value)

    tail = [0] * (len(runs) + 1)
    for r in range(len(runs) - 1, -1, -1):
        tail[r] = tail[r + 1] + runs[r][1]

    def rec(r: int, start: int) -> None:
        nonlocal total
        if r == len(runs):
            total += 1
            return
        s0, length = runs[r]
        for t in range(start, n - tail[r] + 1):
            ok = True
            added = 0
            for off in range(length):
                pj = s0 + off
                v = host[t + off]
                for cj, cv in chosen:
                    if (cv < v) != (pat[cj] < pat[pj]):
                        ok = False
                        break
                if not ok:
                    break
                chosen.append((pj, v))
                added += 1
            if ok:
                rec(r + 1, t + length)
            for _ in range(added):
                chosen.pop()

    rec(0, 0)
    return total


def count_vincular(p: Permutation, vq: VincularPattern) -> int:
    """Occurrences of a vincular pattern, honoring its adjacency runs."""
    _check_host_size(len(p), len(vq.perm))
    return _count_vincular(p.values, vq.perm.values, vq.runs())


# ---------------------------------------------------------------------------
# Incremental detectors for the pruned walk
#
# Every guard below answers, in sync with the backtracking prefix h:
#   rejects(w): would appending value w complete something forbidden?
# The generic ones re-run a bounded matcher anchored at the new element; the
# pattern-specific ones keep O(1) summaries of the prefix.


def _completes(h: Sequence[int], w: int, pat: Sequence[int]) -> bool:
    """Does appending w to h create an occurrence of pat ending at w?"""
    k = len(pat)
    if k == 1:
        return True
    m = len(h)
    if m < k - 1:
        return False
    qk = pat[k - 1]
    chosen: list[int] = []

    def rec(j: int, start: int) -> bool:
        end = m - (k - 2 - j)
        for i in range(start, end):
            v = h[i]
            if (v < w) != (pat[j] < qk):
                continue
            ok = True
            for t in range(j):
                if (chosen[t] < v) != (pat[t] < pat[j]):
                    ok = False
                    break
            if not ok:
                continue
            if j == k - 2:
                return True
            chosen.append(v)
            if rec(j + 1, i + 1):
                return True
            chosen.pop()
        return False

    return rec(0, 0)


def _count_completions(h: Sequence[int], w: int, pat: Sequence[int]) -> int:
    """Number of occurrences of pat that appending w would complete."""
    k = len(pat)
    if k == 1:
        return 1
    m = len(h)
    if m < k - 1:
        return 0
    qk = pat[k - 1]
    total = 0
    chosen: list[int] = []

    def rec(j: int, start: int) -> None:
        nonlocal total
        end = m - (k - 2 - j)
        for i in range(start, end):
            v = h[i]
            if (v < w) != (pat[j] < qk):
                continue
            ok = True
            for t in range(j):
                if (chosen[t] < v) != (pat[t] < pat[j]):
                    ok = False
                    break
            if not ok:
                continue
            if j == k - 2:
                total += 1
            else:
                chosen.append(v)
                rec(j + 1, i + 1)
                chosen.pop()

    rec(0, 0)
    return total


class _AvoidGuard(Guard):
    """Generic prefix pruning for a set of classical patterns."""

    __slots__ = ("pats", "h")

    def __init__(self, pats: tuple[tuple[int, ...], ...]):
        self.pats = pats
        self.h: list[int] = []

    def rejects(self, w: int) -> bool:
        h = self.h
        for pat in self.pats:
            if _completes(h, w, pat):
                return True
        return False

    def push(self, w: int) -> None:
        self.h.append(w)

    def pop(self) -> None:
        self.h.pop()


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


class _Fast2143Guard(Guard):
    """Constant-time detector for new 2143 occurrences.

    Appending w completes 2143 exactly when some earlier position j carries a
    value above w with an inversion whose top is below w lying entirely
    before j.  The guard tracks, per prefix length, the minimum inversion top
    seen so far (``imt``) and, per value v, the last position holding
    something larger than v (``lpg``); larger j can only improve the
    inversion side, so checking the last qualifying position suffices.
    """

    __slots__ = ("size", "placed", "m", "imt", "lpg", "undo")

    def __init__(self, size: int):
        self.size = size
        self.placed = 0
        self.m = 0
        self.imt: list[int] = []
        self.lpg = [-1] * (size + 1)
        self.undo: list[tuple[int, tuple[int, ...]]] = []

    def rejects(self, w: int) -> bool:
        j = self.lpg[w]
        return j >= 1 and self.imt[j - 1] < w

    def push(self, u: int) -> None:
        above = self.placed >> (u + 1)
        top = u + 1 + _lsb_index(above) if above else _INF
        prev = self.imt[-1] if self.imt else _INF
        self.imt.append(top if top < prev else prev)
        lpg = self.lpg
        self.undo.append((u, tuple(lpg[1:u])))
        for v in range(1, u):
            lpg[v] = self.m
        self.placed |= 1 << u
        self.m += 1

    def pop(self) -> None:
        u, old = self.undo.pop()
        self.lpg[1:u] = old
        self.placed &= ~(1 << u)
        self.imt.pop()
        self.m -= 1


class _Fast3421Guard(Guard):
    """Constant-time detector for new 3421 occurrences.

    The new element plays the final 1, so a completion needs an earlier 342
    (pattern 231) whose smallest value is above w.  ``mv3`` is the maximum,
    over 231 occurrences in the prefix, of that smallest value; ``bpl`` the
    maximum over ascending pairs of the lower value, which is what a new 231
    occurrence needs above its own bottom.
    """

    __slots__ = ("placed", "vals", "bpl", "mv3")

    def __init__(self, size: int):
        self.placed = 0
        self.vals: list[int] = []
        self.bpl = [0]
        self.mv3 = [0]

    def rejects(self, w: int) -> bool:
        return self.mv3[-1] > w

    def push(self, u: int) -> None:
        below = self.placed & ((1 << u) - 1)
        pred = below.bit_length() - 1 if below else 0
        bpl = self.bpl[-1]
        mv3 = self.mv3[-1]
        if bpl > u and u > mv3:
            mv3 = u
        self.mv3.append(mv3)
        self.bpl.append(pred if pred > bpl else bpl)
        self.vals.append(u)
        self.placed |= 1 << u

    def pop(self) -> None:
        self.bpl.pop()
        self.mv3.pop()
        self.placed &= ~(1 << self.vals.pop())


class _ExactCountGuard(Guard):
    """Track the total occurrence count of one pattern; prune past target."""

    __slots__ = ("pat", "target", "h", "count", "adds", "_cache")

    def __init__(self, pat: tuple[int, ...], target: int):
        self.pat = pat
        self.target = target
        self.h: list[int] = []
        self.count = 0
        self.adds: list[int] = []
        self._cache: tuple[int, int] | None = None

    def rejects(self, w: int) -> bool:
        add = _count_completions(self.h, w, self.pat)
        if self.count + add > self.target:
            return True
        self._cache = (w, add)
        return False

    def push(self, w: int) -> None:
        cache = self._cache
        add = cache[1] if cache is not None and cache[0] == w \
            else _count_completions(self.h, w, self.pat)
        self.count += add
        self.adds.append(add)
        self.h.append(w)

    def pop(self) -> None:
        self.h.pop()
        self.count -= self.adds.pop()

    def leaf_ok(self) -> bool:
        return self.count == self.target


class _Exact321Guard(Guard):
    """Occurrence counting specialised to 321: new occurrences ending at w
    are inversions with both values above w, tallied per inversion bottom."""

    __slots__ = ("size", "target", "placed", "pbb", "count", "trail", "_cache")

    def __init__(self, size: int, target: int):
        self.size = size
        self.target = target
        self.placed = 0
        self.pbb = [0] * (size + 2)  # inversions with bottom value v
        self.count = 0
        self.trail: list[tuple[int, int, int]] = []
        self._cache: tuple[int, int] | None = None

    def _added_by(self, w: int) -> int:
        pbb = self.pbb
        return sum(pbb[v] for v in range(w + 1, self.size + 1))

    def rejects(self, w: int) -> bool:
        add = self._added_by(w)
        if self.count + add > self.target:
            return True
        self._cache = (w, add)
        return False

    def push(self, u: int) -> None:
        cache = self._cache
        add = cache[1] if cache is not None and cache[0] == u else self._added_by(u)
        new_pairs = (self.placed >> (u + 1)).bit_count()
        self.pbb[u] += new_pairs
        self.count += add
        self.trail.append((u, new_pairs, add))
        self.placed |= 1 << u

    def pop(self) -> None:
        u, new_pairs, add = self.trail.pop()
        self.pbb[u] -= new_pairs
        self.count -= add
        self.placed &= ~(1 << u)

    def leaf_ok(self) -> bool:
        return self.count == self.target


_FAST_AVOID = {
    (2, 1, 4, 3): _Fast2143Guard,
    (3, 4, 2, 1): _Fast3421Guard,
}


def _make_avoid_guard(pats: tuple[tuple[int, ...], ...], size: int) -> Guard:
    if len(pats) == 1 and pats[0] in _FAST_AVOID:
        return _FAST_AVOID[pats[0]](size)
    return _AvoidGuard(pats)


def _make_exact_guard(pat: tuple[int, ...], target: int, size: int) -> Guard:
    if pat == (3, 2, 1):
        return _Exact321Guard(size, target)
    return _ExactCountGuard(pat, target)


def _init_guard(guard: Guard, prefix: Sequence[int]) -> bool:
    """Replay a prefix into a fresh guard; False when already rejected."""
    for w in prefix:
        if guard.rejects(w):
            return False
        guard.push(w)
    return True


def _normalize_patterns(patterns: Iterable[ClassicalPattern]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(q.perm.values for q in patterns))


# ---------------------------------------------------------------------------
# Pruned generation and counting


def generate_avoiders(query: AvoidanceQuery,
                      prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """Members of the kind avoiding every forbidden pattern, lexicographically."""
    if query.occurrence_target is not None:
        raise ValueError("generate_avoiders takes a plain avoidance query")
    _kinds._require_even(query.size)
    pats = _normalize_patterns(query.forbidden)
    h, used = _kinds._check_prefix(query.kind.value, query.size, prefix)
    guard = _make_avoid_guard(pats, query.size)
    if not _init_guard(guard, h):
        return
    for vals in _kinds._walk_iter(query.kind.value, query.size, h, used, guard):
        yield Permutation._wrap(vals)


def count_avoiders(query: AvoidanceQuery, prefix: Sequence[int] = ()) -> int:
    """Cardinality of :func:`generate_avoiders` without materialising it."""
    if query.occurrence_target is not None:
        q = next(iter(query.forbidden))
        return count_exact_occurrences(query.kind, query.size, q,
                                       query.occurrence_target, prefix)
    _kinds._require_even(query.size)
    pats = _normalize_patterns(query.forbidden)
    h, used = _kinds._check_prefix(query.kind.value, query.size, prefix)
    guard = _make_avoid_guard(pats, query.size)
    if not _init_guard(guard, h):
        return 0
    return _kinds._walk_count(query.kind.value, query.size, h, used, guard, None)


def count_exact_occurrences(kind: DumontKind, size: int, q: ClassicalPattern,
                            r: int, prefix: Sequence[int] = ()) -> int:
    """Members of the kind with exactly ``r`` occurrences of the pattern."""
    if r < 0:
        raise ValueError("occurrence count must be >= 0")
    _kinds._require_even(size)
    h, used = _kinds._check_prefix(kind.value, size, prefix)
    guard = _make_exact_guard(q.perm.values, r, size)
    for w in h:
        if guard.rejects(w):
            return 0
        guard.push(w)
    return _kinds._walk_count(kind.value, size, h, used, guard, None)


def vincular_histogram(kind: DumontKind, size: int, forbidden: ClassicalPattern,
                       stat: VincularPattern,
                       prefix: Sequence[int] = ()) -> dict[int, int]:
    """Distribution of a vincular statistic over a pruned avoider set.

    Returns {k: number of members of the kind avoiding ``forbidden`` whose
    occurrence count of ``stat`` equals k}.
    """
    _kinds._require_even(size)
    pats = (forbidden.perm.values,)
    h, used = _kinds._check_prefix(kind.value, size, prefix)
    guard = _make_avoid_guard(pats, size)
    if not _init_guard(guard, h):
        return {}
    svals = stat.perm.values
    sruns = stat.runs()
    hist: dict[int, int] = {}

    def on_leaf(full: list[int]) -> None:
        k = _count_vincular(full, svals, sruns)
        hist[k] = hist.get(k, 0) + 1

    _kinds._walk_count(kind.value, size, h, used, guard, on_leaf)
    return hist

"""Dumont permutations of the four kinds: membership, generation, counting.

Kind 1: every even entry is immediately followed by a smaller entry; every
odd entry is immediately followed by a larger entry or ends the permutation.

Kind 2: every even position is a deficiency, every odd position is a fixed
point or an excedance.

Kind 3: every descent goes from an even value to an even value.

Kind 4: every deficiency is an even value in an even position.

Only even sizes are meaningful: an odd-size Dumont permutation is just an
even-size one with the fixed point 2n+1 appended, so odd sizes are rejected.
All four kinds of size 2n are counted by the Genocchi number G(2n+2)
(see :mod:`dumont.gfseries`).

Generation is a position-by-position backtracking search that emits
permutations in lexicographic order.  Prefix pruning applies each kind's
constraints as soon as they become checkable, so the walk never descends into
a subtree that cannot contain a member.  The search tree can be split by its
first few entries (:func:`split_prefixes`) so independent workers can
enumerate disjoint subtrees.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Iterator, Optional, Sequence

from .permcore import Permutation


class DumontKind(Enum):
    D1 = 1
    D2 = 2
    D3 = 3
    D4 = 4


def _require_even(size: int) -> None:
    if size < 0 or size % 2 != 0:
        raise ValueError(f"odd size: {size}" if size % 2 else f"negative size: {size}")


def is_dumont(kind: DumontKind, p: Permutation) -> bool:
    """Membership test for an even-size permutation; odd sizes raise."""
    n = len(p)
    _require_even(n)
    vals = p.values
    if kind is DumontKind.D1:
        for i, v in enumerate(vals):
            if v % 2 == 0:
                if i + 1 == n or vals[i + 1] > v:
                    return False
            else:
                if i + 1 < n and vals[i + 1] < v:
                    return False
        return True
    if kind is DumontKind.D2:
        for i, v in enumerate(vals):
            pos = i + 1
            if pos % 2 == 0:
                if v >= pos:
                    return False
            elif v < pos:
                return False
        return True
    if kind is DumontKind.D3:
        for i in range(n - 1):
            if vals[i] > vals[i + 1] and (vals[i] % 2 or vals[i + 1] % 2):
                return False
        return True
    # D4: deficiencies must be even values in even positions.
    for i, v in enumerate(vals):
        pos = i + 1
        if v < pos and (pos % 2 or v % 2):
            return False
    return True


# In the walkers below, ``h`` is the list of already placed values (the prefix,
# positions 1..len(h)) and ``used`` a bitmask with bit v set when value v is
# placed.  Candidates for the next position are produced in increasing order,
# which makes the depth-first emission order lexicographic.

_ODD_BITS = [0] * 32
for _v in range(1, 32, 2):
    for _s in range(_v, 32):
        _ODD_BITS[_s] |= 1 << _v
_ODD_MASK = _ODD_BITS[31]


def _candidates(kind_id: int, pos: int, size: int, prev: int, used: int) -> list[int]:
    """Admissible values for the next position, in increasing order."""
    out = []
    if kind_id == 1:
        if pos == 1:
            lo, hi = 1, size
        elif prev % 2 == 0:
            lo, hi = 1, prev - 1
        else:
            lo, hi = prev + 1, size
        last = pos == size
        below_mask = ~used
        for w in range(lo, hi + 1):
            if used >> w & 1:
                continue
            if w % 2 == 0:
                # An even entry needs a smaller entry after it.
                if last or not (below_mask & ((1 << w) - 2)):
                    continue
            out.append(w)
    elif kind_id == 2:
        if pos % 2 == 0:
            lo, hi = 1, pos - 1
        else:
            lo, hi = pos, size
        for w in range(lo, hi + 1):
            if not (used >> w & 1):
                out.append(w)
    elif kind_id == 3:
        if pos > 1 and prev % 2 == 0:
            # Descent allowed only onto an even value.
            for w in range(2, prev, 2):
                if not (used >> w & 1):
                    out.append(w)
        lo = 1 if pos == 1 else prev + 1
        for w in range(lo, size + 1):
            if not (used >> w & 1):
                out.append(w)
    else:
        # D4.  Any odd value still unplaced below the current position could
        # only land as an odd deficiency later, so the subtree is dead.
        if (~used) & _odd_below(pos):
            return out
        if pos % 2 == 0:
            for w in range(2, pos, 2):
                if not (used >> w & 1):
                    out.append(w)
        for w in range(pos, size + 1):
            if not (used >> w & 1):
                out.append(w)
    return out


def _odd_below(pos: int) -> int:
    if pos - 1 < 32:
        return _ODD_BITS[pos - 1]
    m = _ODD_MASK
    for v in range(33, pos, 2):
        m |= 1 << v
    return m


class Guard:
    """Hook protocol for composing extra pruning with the Dumont walk.

    ``rejects(w)`` is consulted before a placement; ``push``/``pop`` keep the
    guard state in sync with the prefix; ``leaf_ok()`` accepts or drops a
    fully placed permutation.
    """

    def rejects(self, w: int) -> bool:
        return False

    def push(self, w: int) -> None:  # pragma: no cover - trivial default
        pass

    def pop(self) -> None:  # pragma: no cover - trivial default
        pass

    def leaf_ok(self) -> bool:
        return True


def _walk_iter(kind_id: int, size: int, h: list[int], used: int,
               guard: Optional[Guard]) -> Iterator[tuple[int, ...]]:
    pos = len(h) + 1
    if pos > size:
        if guard is None or guard.leaf_ok():
            yield tuple(h)
        return
    prev = h[-1] if h else 0
    for w in _candidates(kind_id, pos, size, prev, used):
        if guard is not None and guard.rejects(w):
            continue
        h.append(w)
        if guard is not None:
            guard.push(w)
        yield from _walk_iter(kind_id, size, h, used | (1 << w), guard)
        if guard is not None:
            guard.pop()
        h.pop()


def _walk_count(kind_id: int, size: int, h: list[int], used: int,
                guard: Optional[Guard],
                on_leaf: Optional[Callable[[list[int]], None]]) -> int:
    """Callback-based walk; returns the number of accepted leaves."""
    pos = len(h) + 1
    if pos > size:
        if guard is None or guard.leaf_ok():
            if on_leaf is not None:
                on_leaf(h)
            return 1
        return 0
    total = 0
    prev = h[-1] if h else 0
    for w in _candidates(kind_id, pos, size, prev, used):
        if guard is not None and guard.rejects(w):
            continue
        h.append(w)
        if guard is not None:
            guard.push(w)
        total += _walk_count(kind_id, size, h, used | (1 << w), guard, on_leaf)
        if guard is not None:
            guard.pop()
        h.pop()
    return total


def _check_prefix(kind_id: int, size: int, prefix: Sequence[int]) -> tuple[list[int], int]:
    """Validate a prefix against the kind's local rules; return (h, used)."""
    h: list[int] = []
    used = 0
    for w in prefix:
        pos = len(h) + 1
        prev = h[-1] if h else 0
        if w not in _candidates(kind_id, pos, size, prev, used):
            raise ValueError(f"prefix {list(prefix)} is not feasible at position {pos}")
        h.append(w)
        used |= 1 << w
    return h, used


def generate(kind: DumontKind, size: int,
             prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """Yield the members of the kind in lexicographic order.

    ``prefix`` restricts the walk to completions of the given first entries,
    which is the worker-side half of the prefix-splitting contract.
    """
    _require_even(size)
    h, used = _check_prefix(kind.value, size, prefix)
    for vals in _walk_iter(kind.value, size, h, used, None):
        yield Permutation._wrap(vals)


def count(kind: DumontKind, size: int) -> int:
    """Number of Dumont permutations of the kind and size (a Genocchi number)."""
    _require_even(size)
    return _walk_count(kind.value, size, [], 0, None, None)


def split_prefixes(kind: DumontKind, size: int, depth: int) -> list[tuple[int, ...]]:
    """Feasible prefixes of length ``min(depth, size)``, in lexicographic order.

    The completions of the returned prefixes partition the full set, so
    independent workers can process disjoint subtrees and their results can
    be merged by plain addition.
    """
    _require_even(size)
    depth = min(depth, size)
    out: list[tuple[int, ...]] = []

    def rec(h: list[int], used: int) -> None:
        if len(h) == depth:
            out.append(tuple(h))
            return
        pos = len(h) + 1
        prev = h[-1] if h else 0
        for w in _candidates(kind.value, pos, size, prev, used):
            h.append(w)
            rec(h, used | (1 << w))
            h.pop()

    rec([], 0)
    return out

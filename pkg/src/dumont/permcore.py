"""Permutations in one-line notation, their symmetries, and positional statistics.

Conventions used across the whole package:

* A permutation of size ``n`` is a rearrangement of the values ``1..n``.
  The empty permutation (``n = 0``) is a valid object.
* Positions are 1-based in every statistic (fixed points, excedances,
  descents, ...), matching the usual combinatorial reading of a permutation
  diagram from left to right and bottom to top.  Python-level indexing on a
  :class:`Permutation` (``p[i]``, slicing, iteration) is 0-based like any
  other sequence.
* Text form: a comma-free digit string for ``n <= 9`` (``"435621"``) and a
  comma-separated list otherwise (``"1,3,6,5,7,2,8,4"``).  The CLI and the
  JSON output both use this grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Permutation:
    """An immutable permutation of ``{1..n}`` in one-line notation.

    >>> p = Permutation([4, 3, 5, 6, 2, 1])
    >>> str(p)
    '435621'
    >>> p.reverse() == Permutation.from_text("126534")
    True
    >>> len(Permutation([]))
    0
    """

    __slots__ = ("_vals",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        n = len(vals)
        seen = [False] * (n + 1)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"non-integer entry {v!r}")
            if v < 1 or v > n:
                raise ValueError(f"value {v} out of range for length {n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = True
        self._vals = vals

    @classmethod
    def _wrap(cls, vals: tuple[int, ...]) -> "Permutation":
        # Internal fast path for values already known to form a permutation.
        p = object.__new__(cls)
        p._vals = vals
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._wrap(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse the shared text grammar (digits, or comma-separated)."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(int(part) for part in text.split(","))
        if not text.isdigit():
            raise ValueError(f"not a permutation string: {text!r}")
        return cls(int(ch) for ch in text)

    @property
    def values(self) -> tuple[int, ...]:
        return self._vals

    def to_text(self) -> str:
        if len(self._vals) <= 9:
            return "".join(str(v) for v in self._vals)
        return ",".join(str(v) for v in self._vals)

    def __len__(self) -> int:
        return len(self._vals)

    def __getitem__(self, i):
        return self._vals[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._vals)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._vals == other._vals

    def __hash__(self) -> int:
        return hash(self._vals)

    def __lt__(self, other: "Permutation") -> bool:
        return self._vals < other._vals

    def __le__(self, other: "Permutation") -> bool:
        return self._vals <= other._vals

    def __repr__(self) -> str:
        return f"Permutation({list(self._vals)!r})"

    def __str__(self) -> str:
        return self.to_text()

    def at(self, pos: int) -> int:
        """Value at 1-based position ``pos``."""
        if not 1 <= pos <= len(self._vals):
            raise IndexError(f"position {pos} out of range")
        return self._vals[pos - 1]

    def reverse(self) -> "Permutation":
        """The permutation read right to left."""
        return Permutation._wrap(self._vals[::-1])

    def complement(self) -> "Permutation":
        """The permutation read top to bottom (value v becomes n+1-v)."""
        n = len(self._vals)
        return Permutation._wrap(tuple(n + 1 - v for v in self._vals))

    def inverse(self) -> "Permutation":
        """Swap positions and values."""
        n = len(self._vals)
        inv = [0] * n
        for i, v in enumerate(self._vals):
            inv[v - 1] = i + 1
        return Permutation._wrap(tuple(inv))

    def symmetry_class(self) -> frozenset["Permutation"]:
        """All images under the dihedral symmetries of the diagram plus inversion.

        At most eight permutations: the identity map, reverse, complement,
        reverse-complement, and the inverses of those four.

        >>> sorted(str(q) for q in Permutation.from_text("21").symmetry_class())
        ['12', '21']
        """
        base = [self, self.reverse(), self.complement(), self.reverse().complement()]
        return frozenset(base + [q.inverse() for q in base])

    def stats(self) -> "StatProfile":
        """Classify every position of the permutation.  See :class:`StatProfile`."""
        vals = self._vals
        n = len(vals)
        fixed, exced, defic, descents, ltr = [], [], [], [], []
        best = 0
        for i in range(n):
            v = vals[i]
            pos = i + 1
            if v == pos:
                fixed.append(pos)
            elif v > pos:
                exced.append(pos)
            else:
                defic.append(pos)
            if i + 1 < n and v > vals[i + 1]:
                descents.append(pos)
            if v > best:
                best = v
                ltr.append(pos)
        return StatProfile(
            fixed_points=frozenset(fixed),
            excedances=frozenset(exced),
            deficiencies=frozenset(defic),
            descents=frozenset(descents),
            ltr_maxima=frozenset(ltr),
        )


@dataclass(frozen=True)
class StatProfile:
    """Positional statistics of a permutation, all sets of 1-based positions.

    ``fixed_points``, ``excedances`` and ``deficiencies`` partition ``{1..n}``
    (position i with value equal to / above / below i).  ``descents`` holds the
    positions i with p(i) > p(i+1); ``ltr_maxima`` the positions of
    left-to-right maxima (position 1 is always one when n >= 1).
    """

    fixed_points: frozenset[int]
    excedances: frozenset[int]
    deficiencies: frozenset[int]
    descents: frozenset[int]
    ltr_maxima: frozenset[int]


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate a sequence and wrap it as a :class:`Permutation`."""
    return Permutation(values)


def flatten(values: Iterable[int]) -> Permutation:
    """The pattern of a sequence of distinct integers.

    Replaces each entry by its rank:  ``flatten([1, 3, 6, 2]) == 1342``.
    """
    vals = tuple(values)
    order = sorted(vals)
    rank = {v: i + 1 for i, v in enumerate(order)}
    if len(rank) != len(vals):
        raise ValueError("entries must be distinct")
    return Permutation._wrap(tuple(rank[v] for v in vals))

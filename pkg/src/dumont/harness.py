"""Verification suites tying pruned enumeration to closed forms.

Every suite row computes a cardinality (or an explicit set) by backtracking
enumeration and compares it against the independent closed form, reference
table, or series.  The two conjecture experiments (the 2143 ~ 3421
equinumerosity on Dumont-1 permutations and the cumulative relation between
the vincular statistics 2-31 and 13-2 on the two avoider classes) are
computed and reported with machine-readable verdicts, never hard-asserted.

Long enumerations can be split into prefix shards, distributed over a
process pool (capped by the DUMONT_THREADS environment variable), stopped on
a wall-clock budget, and resumed from a plain-text checkpoint file.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import permutations as _all_perms
from typing import Callable, Optional, Sequence

from . import golden
from .gfseries import SequenceId, catalan_number, closed_form, d4_1423_series, validity_range
from .kinds import DumontKind, split_prefixes
from .patterns import (AvoidanceQuery, ClassicalPattern, VincularPattern, avoids,
                       count_avoiders, count_exact_occurrences, generate_avoiders,
                       vincular_histogram)
from .permcore import Permutation

SUITES = ("d1_len3", "d2_len3", "d2_len4", "d1_pairs", "d4_avoid",
          "d4_single", "d1d2_single", "all")

_STAT_2_31 = VincularPattern.parse("2-31")
_STAT_13_2 = VincularPattern.parse("13-2")


class BudgetExceeded(Exception):
    """Raised when a budgeted run stops early; partial state is checkpointed."""


@dataclass(frozen=True)
class ReportRow:
    theorem: str
    n: int
    enumerated: str
    formula: str
    match: bool
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(row.match for row in self.rows)

    def to_text(self, include_timing: bool = False) -> str:
        # Timing is excluded by default so that repeated runs (and runs with
        # different worker counts) produce byte-identical reports.
        lines = [f"suite {self.suite}"]
        for r in self.rows:
            status = "ok" if r.match else "MISMATCH"
            tail = f"  [{r.elapsed:.3f}s]" if include_timing else ""
            lines.append(f"  {r.theorem} n={r.n}: enumerated={r.enumerated} "
                         f"formula={r.formula} {status}{tail}")
        lines.append(f"overall {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "rows": [{"theorem": r.theorem, "n": r.n, "enumerated": r.enumerated,
                      "formula": r.formula, "match": r.match} for r in self.rows],
            "overall": self.overall,
        }


def _pat(text: str) -> ClassicalPattern:
    return ClassicalPattern.parse(text)


def _perm_set_text(perms) -> str:
    return "{" + ",".join(sorted(p.to_text() for p in perms)) + "}"


def _count_row(theorem: str, kind: DumontKind, pats: tuple[str, ...],
               seq: SequenceId, n: int) -> Optional[ReportRow]:
    lo, hi = validity_range(seq)
    if n < lo or (hi is not None and n > hi):
        return None
    t0 = time.perf_counter()
    query = AvoidanceQuery(kind, 2 * n, frozenset(_pat(s) for s in pats))
    enum = count_avoiders(query)
    formula = closed_form(seq, n)
    return ReportRow(theorem, n, str(enum), str(formula), enum == formula,
                     time.perf_counter() - t0)


def _exact_row(theorem: str, kind: DumontKind, pat: str, seq: SequenceId,
               n: int) -> Optional[ReportRow]:
    lo, hi = validity_range(seq)
    if n < lo or (hi is not None and n > hi):
        return None
    t0 = time.perf_counter()
    enum = count_exact_occurrences(kind, 2 * n, _pat(pat), 1)
    formula = closed_form(seq, n)
    return ReportRow(theorem, n, str(enum), str(formula), enum == formula,
                     time.perf_counter() - t0)


def _set_row(theorem: str, kind: DumontKind, pats: tuple[str, ...], n: int,
             expected: Sequence[Permutation]) -> ReportRow:
    t0 = time.perf_counter()
    query = AvoidanceQuery(kind, 2 * n, frozenset(_pat(s) for s in pats))
    got = _perm_set_text(generate_avoiders(query))
    want = _perm_set_text(expected)
    return ReportRow(theorem, n, got, want, got == want, time.perf_counter() - t0)


def _pair_staircase(n: int) -> Permutation:
    """The permutation 2 1 4 3 ... 2n 2n-1."""
    vals: list[int] = []
    for j in range(1, n + 1):
        vals += [2 * j, 2 * j - 1]
    return Permutation(vals)


def _d1_123_expected(n: int) -> list[Permutation]:
    base = [Permutation.from_text(s) for s in golden.d1_123_size6_set()]
    if n == 3:
        return base
    prefix: list[int] = []
    for j in range(n, 3, -1):
        prefix += [2 * j - 1, 2 * j]
    return [Permutation(prefix + list(p.values)) for p in base]


def _rows_d1_len3(n_max: int) -> list[ReportRow]:
    rows = []
    for n in range(n_max + 1):
        for pat, seq in (("132", SequenceId.D1_132), ("231", SequenceId.D1_231),
                         ("312", SequenceId.D1_312), ("213", SequenceId.D1_213),
                         ("321", SequenceId.D1_321), ("123", SequenceId.D1_123)):
            row = _count_row(f"d1_{pat}", DumontKind.D1, (pat,), seq, n)
            if row:
                rows.append(row)
        rows.append(_set_row("d1_321_set", DumontKind.D1, ("321",), n,
                             [_pair_staircase(n)]))
        if n >= 3:
            rows.append(_set_row("d1_123_set", DumontKind.D1, ("123",), n,
                                 _d1_123_expected(n)))
    return rows


def _rows_d2_len3(n_max: int) -> list[ReportRow]:
    rows = []
    for n in range(n_max + 1):
        for pat, seq in (("123", SequenceId.D2_123), ("132", SequenceId.D2_132),
                         ("213", SequenceId.D2_213), ("231", SequenceId.D2_231),
                         ("312", SequenceId.D2_312), ("321", SequenceId.D2_321)):
            row = _count_row(f"d2_{pat}", DumontKind.D2, (pat,), seq, n)
            if row:
                rows.append(row)
        rows.append(_set_row("d2_312_set", DumontKind.D2, ("312",), n,
                             [_pair_staircase(n)]))
    return rows


def _rows_d2_len4(n_max: int) -> list[ReportRow]:
    rows = []
    for n in range(n_max + 1):
        for pat, seq in (("3142", SequenceId.D2_3142), ("4132", SequenceId.D2_4132),
                         ("2143", SequenceId.D2_2143)):
            row = _count_row(f"d2_{pat}", DumontKind.D2, (pat,), seq, n)
            if row:
                rows.append(row)
        # The 4132 avoiders are not merely equinumerous with the 321
        # avoiders; the two sets coincide.
        t0 = time.perf_counter()
        got = _perm_set_text(generate_avoiders(
            AvoidanceQuery(DumontKind.D2, 2 * n, frozenset([_pat("4132")]))))
        want = _perm_set_text(generate_avoiders(
            AvoidanceQuery(DumontKind.D2, 2 * n, frozenset([_pat("321")]))))
        rows.append(ReportRow("d2_4132_set_eq_321", n, got, want, got == want,
                              time.perf_counter() - t0))
    return rows


def _rows_d1_pairs(n_max: int) -> list[ReportRow]:
    specs = (
        ("d1_pair_1342_1423", ("1342", "1423"), SequenceId.D1_PAIR_1342_1423),
        ("d1_pair_2341_2413", ("2341", "2413"), SequenceId.D1_PAIR_2341_2413),
        ("d1_pair_1342_2413", ("1342", "2413"), SequenceId.D1_PAIR_1342_2413),
        ("d1_pair_231_4213", ("231", "4213"), SequenceId.D1_PAIR_231_4213),
        ("d1_pair_1342_4213", ("1342", "4213"), SequenceId.D1_PAIR_1342_4213),
        ("d1_pair_2341_1423", ("2341", "1423"), SequenceId.D1_PAIR_2341_1423),
    )
    rows = []
    for n in range(n_max + 1):
        for theorem, pats, seq in specs:
            row = _count_row(theorem, DumontKind.D1, pats, seq, n)
            if row:
                rows.append(row)
        if n >= 1:
            rows.append(_set_row("d1_pair_231_4213_set", DumontKind.D1,
                                 ("231", "4213"), n, [_pair_staircase(n)]))
    return rows


def _rows_d4_avoid(n_max: int) -> list[ReportRow]:
    rows = []
    series = d4_1423_series(n_max)
    for n in range(n_max + 1):
        for pat, seq in (("1342", SequenceId.D4_1342), ("1432", SequenceId.D4_1432),
                         ("1324", SequenceId.D4_1324), ("1243", SequenceId.D4_1243),
                         ("1234", SequenceId.D4_1234)):
            row = _count_row(f"d4_{pat}", DumontKind.D4, (pat,), seq, n)
            if row:
                rows.append(row)
        t0 = time.perf_counter()
        enum = count_avoiders(AvoidanceQuery(DumontKind.D4, 2 * n,
                                             frozenset([_pat("1423")])))
        coeff = series.coefficient(n)
        rows.append(ReportRow("d4_1423_series", n, str(enum), str(coeff),
                              enum == coeff, time.perf_counter() - t0))
        if n <= 11:
            ref = golden.a343795_prefix()[n]
            rows.append(ReportRow("d4_1423_reference", n, str(coeff), str(ref),
                                  coeff == ref, 0.0))
    # The 1234 avoiders themselves are known explicitly through size 6.
    known = [Permutation.from_text(s) for s in golden.d4_1234_avoiders_upto_size6()]
    for n in range(min(n_max, 3) + 1):
        expected = [p for p in known if len(p) == 2 * n]
        rows.append(_set_row("d4_1234_set", DumontKind.D4, ("1234",), n, expected))
    return rows


def _rows_d4_single(n_max: int) -> list[ReportRow]:
    rows = []
    for n in range(n_max + 1):
        row = _exact_row("d4_321_once", DumontKind.D4, "321", SequenceId.D4_321_1, n)
        if row:
            rows.append(row)
    return rows


def _rows_d1d2_single(n_max: int) -> list[ReportRow]:
    specs = (
        ("d1_132_once", DumontKind.D1, "132", SequenceId.D1_132_1),
        ("d1_312_once", DumontKind.D1, "312", SequenceId.D1_312_1),
        ("d1_231_once", DumontKind.D1, "231", SequenceId.D1_231_1),
        ("d1_213_once", DumontKind.D1, "213", SequenceId.D1_213_1),
        ("d1_321_once", DumontKind.D1, "321", SequenceId.D1_321_1),
        ("d2_321_once", DumontKind.D2, "321", SequenceId.D2_321_1),
        ("d2_3142_once", DumontKind.D2, "3142", SequenceId.D2_3142_1),
        ("d2_2143_once", DumontKind.D2, "2143", SequenceId.D2_2143_1),
    )
    rows = []
    for n in range(n_max + 1):
        for theorem, kind, pat, seq in specs:
            row = _exact_row(theorem, kind, pat, seq, n)
            if row:
                rows.append(row)
    return rows


_SUITE_BUILDERS: dict[str, Callable[[int], list[ReportRow]]] = {
    "d1_len3": _rows_d1_len3,
    "d2_len3": _rows_d2_len3,
    "d2_len4": _rows_d2_len4,
    "d1_pairs": _rows_d1_pairs,
    "d4_avoid": _rows_d4_avoid,
    "d4_single": _rows_d4_single,
    "d1d2_single": _rows_d1d2_single,
}


def run_suite(suite: str, n_max: int) -> VerificationReport:
    """Run one verification suite (or all of them) up to the given n."""
    if suite == "all":
        rows: list[ReportRow] = []
        for name in SUITES[:-1]:
            rows.extend(_SUITE_BUILDERS[name](n_max))
        return VerificationReport("all", rows)
    if suite not in _SUITE_BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return VerificationReport(suite, _SUITE_BUILDERS[suite](n_max))


def sanity_s3(n_max: int) -> VerificationReport:
    """Brute-force Catalan check for all six patterns of length 3 on S_n."""
    if n_max > 9:
        raise ValueError("sanity check is capped at n = 9")
    rows = []
    pats = [ClassicalPattern(Permutation(p)) for p in _all_perms((1, 2, 3))]
    for n in range(n_max + 1):
        expected = catalan_number(n)
        t0 = time.perf_counter()
        counts = {str(q): 0 for q in pats}
        for raw in _all_perms(range(1, n + 1)):
            p = Permutation(raw)
            for q in pats:
                if avoids(p, q):
                    counts[str(q)] += 1
        elapsed = time.perf_counter() - t0
        for q in pats:
            got = counts[str(q)]
            rows.append(ReportRow(f"s3_{q}", n, str(got), str(expected),
                                  got == expected, elapsed))
    return VerificationReport("s3_sanity", rows)


# ---------------------------------------------------------------------------
# Conjecture experiments


_C1_PATTERNS = ("2143", "3421")


@dataclass(frozen=True)
class ConjectureCountRow:
    n: int
    count_2143: int
    count_3421: int
    reference: Optional[int]
    match: bool


@dataclass(frozen=True)
class DistributionTable:
    """Distributions of 2-31 over the 2143 avoiders (a) and of 13-2 over the
    3421 avoiders (b) on Dumont-1 permutations of size 2n, k = 0..C(n,2)."""

    n: int
    a_row: tuple[int, ...]
    b_row: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.a_row)

    def pointwise_relation(self) -> tuple[str, ...]:
        return tuple("=" if a == b else (">" if a > b else "<")
                     for a, b in zip(self.a_row, self.b_row))

    def cumulative_relation(self) -> tuple[str, ...]:
        out = []
        ca = cb = 0
        for a, b in zip(self.a_row, self.b_row):
            ca += a
            cb += b
            out.append("=" if ca == cb else (">" if ca > cb else "<"))
        return tuple(out)

    @staticmethod
    def _unimodal(row: Sequence[int]) -> bool:
        peak = row.index(max(row))
        rising = all(row[i] <= row[i + 1] for i in range(peak))
        falling = all(row[i] >= row[i + 1] for i in range(peak, len(row) - 1))
        return rising and falling

    def sign_switch_k(self) -> Optional[int]:
        for k, sym in enumerate(self.pointwise_relation()):
            if sym == "<":
                return k
        return None

    def verdict(self) -> dict:
        """Machine-readable observations; conjectural claims are reported,
        not asserted."""
        cum = self.cumulative_relation()
        return {
            "n": self.n,
            "total": self.total,
            "totals_equal": sum(self.a_row) == sum(self.b_row),
            "cumulative_dominance_holds": all(s in ("=", ">") for s in cum[:-1])
                                           and cum[-1] == "=",
            "top_cells_equal": self.a_row[-1] == self.b_row[-1] == 1,
            "a_unimodal": self._unimodal(self.a_row),
            "b_unimodal": self._unimodal(self.b_row),
            "sign_switch_k": self.sign_switch_k(),
            "sign_switch_near_2n_minus_5": (
                self.sign_switch_k() is not None
                and abs(self.sign_switch_k() - (2 * self.n - 5)) <= 1),
        }


def _workers_from_env(explicit: Optional[int]) -> int:
    env = os.environ.get("DUMONT_THREADS")
    cap = int(env) if env else None
    if explicit is None:
        return max(1, cap) if cap else 1
    return max(1, explicit if cap is None else min(explicit, cap))


class _Checkpoint:
    """Append-only shard journal: '<tag>\\t<json payload>' per completed shard."""

    def __init__(self, path: Optional[str]):
        self.path = path
        self.done: dict[str, object] = {}
        if path and os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.rstrip("\n")
                    if not line or line.startswith("#"):
                        continue
                    tag, payload = line.split("\t", 1)
                    self.done[tag] = json.loads(payload)

    def record(self, tag: str, payload) -> None:
        self.done[tag] = payload
        if self.path:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(f"{tag}\t{json.dumps(payload)}\n")


def _c1_shard(args: tuple[int, tuple[int, ...]]) -> tuple[tuple[int, ...], list[int]]:
    size, prefix = args
    out = []
    for pat in _C1_PATTERNS:
        query = AvoidanceQuery(DumontKind.D1, size, frozenset([_pat(pat)]))
        out.append(count_avoiders(query, prefix=prefix))
    return prefix, out


def _c2_shard(args: tuple[int, tuple[int, ...]]) -> tuple[tuple[int, ...], list[dict]]:
    size, prefix = args
    hist_a = vincular_histogram(DumontKind.D1, size, _pat("2143"), _STAT_2_31,
                                prefix=prefix)
    hist_b = vincular_histogram(DumontKind.D1, size, _pat("3421"), _STAT_13_2,
                                prefix=prefix)
    return prefix, [{str(k): v for k, v in hist_a.items()},
                    {str(k): v for k, v in hist_b.items()}]


def _run_shards(size: int, shard_fn, tag_prefix: str, checkpoint: _Checkpoint,
                deadline: Optional[float], workers: int, depth: int = 3):
    """Yield (prefix, payload) for every shard, resuming and budgeting."""
    prefixes = split_prefixes(DumontKind.D1, size, depth)
    pending = []
    for prefix in prefixes:
        tag = f"{tag_prefix}|{','.join(map(str, prefix))}"
        if tag in checkpoint.done:
            yield prefix, checkpoint.done[tag]
        else:
            pending.append((tag, prefix))
    if not pending:
        return

    def out_of_time() -> bool:
        return deadline is not None and time.monotonic() > deadline

    if workers <= 1:
        for tag, prefix in pending:
            if out_of_time():
                raise BudgetExceeded(tag_prefix)
            _, payload = shard_fn((size, prefix))
            checkpoint.record(tag, payload)
            yield prefix, payload
        return

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(shard_fn, (size, prefix)): (tag, prefix)
                   for tag, prefix in pending}
        remaining = set(futures)
        try:
            while remaining:
                done, remaining = wait(remaining, timeout=1.0,
                                       return_when=FIRST_COMPLETED)
                for fut in done:
                    tag, prefix = futures[fut]
                    payload = fut.result()[1]
                    checkpoint.record(tag, payload)
                    yield prefix, payload
                if remaining and out_of_time():
                    raise BudgetExceeded(tag_prefix)
        finally:
            for fut in remaining:
                fut.cancel()


def conjecture1_counts(n_max: int, budget: Optional[float] = None,
                       checkpoint_path: Optional[str] = None,
                       workers: Optional[int] = None) -> list[ConjectureCountRow]:
    """Counts of Dumont-1 avoiders of 2143 and of 3421 for n = 0..n_max."""
    deadline = time.monotonic() + budget if budget is not None else None
    nworkers = _workers_from_env(workers)
    checkpoint = _Checkpoint(checkpoint_path)
    reference = golden.d1_wilf_pair_counts()
    rows = []
    for n in range(n_max + 1):
        totals = [0, 0]
        for _, payload in _run_shards(2 * n, _c1_shard, f"c1|n={n}", checkpoint,
                                      deadline, nworkers):
            totals[0] += payload[0]
            totals[1] += payload[1]
        ref = reference[n] if n < len(reference) else None
        ok = totals[0] == totals[1] and (ref is None or totals[0] == ref)
        rows.append(ConjectureCountRow(n, totals[0], totals[1], ref, ok))
    return rows


def conjecture2_distribution(n: int, budget: Optional[float] = None,
                             checkpoint_path: Optional[str] = None,
                             workers: Optional[int] = None) -> DistributionTable:
    """Joint distribution tables of the two vincular statistics at one n."""
    deadline = time.monotonic() + budget if budget is not None else None
    nworkers = _workers_from_env(workers)
    checkpoint = _Checkpoint(checkpoint_path)
    width = (n * (n - 1)) // 2 + 1  # k ranges over 0..C(n,2)
    hist_a: dict[int, int] = {}
    hist_b: dict[int, int] = {}
    for _, payload in _run_shards(2 * n, _c2_shard, f"c2|n={n}", checkpoint,
                                  deadline, nworkers):
        for k, v in payload[0].items():
            hist_a[int(k)] = hist_a.get(int(k), 0) + v
        for k, v in payload[1].items():
            hist_b[int(k)] = hist_b.get(int(k), 0) + v
    top = max([width - 1] + list(hist_a) + list(hist_b))
    a_row = tuple(hist_a.get(k, 0) for k in range(top + 1))
    b_row = tuple(hist_b.get(k, 0) for k in range(top + 1))
    return DistributionTable(n=n, a_row=a_row, b_row=b_row)


# ---------------------------------------------------------------------------
# Diagram rendering


def render_diagram(p: Permutation) -> str:
    """ASCII permutation diagram, origin at the bottom-left corner.

    One character cell per board square: '*' for a dot, '.' otherwise.
    """
    n = len(p)
    lines = []
    for v in range(n, 0, -1):
        lines.append("".join("*" if p.values[i] == v else "." for i in range(n)))
    return "\n".join(lines)

import random
from itertools import permutations

import pytest

from conftest import naive_contains, naive_count, naive_count_vincular
from dumont.kinds import DumontKind, generate
from dumont.patterns import (AvoidanceQuery, ClassicalPattern, VincularPattern,
                             avoids, avoids_all, count_avoiders,
                             count_exact_occurrences, count_occurrences,
                             count_vincular, generate_avoiders)
from dumont.permcore import Permutation


def cp(text):
    return ClassicalPattern.parse(text)


def test_count_occurrences_host_26483751():
    p = Permutation.from_text("26483751")
    # Exhaustive triple enumeration gives 13 instances of 132 (the three
    # named ones, 265 / 287 / 475, among them).
    assert naive_count(p.values, (1, 3, 2)) == 13
    assert count_occurrences(p, cp("132")) == 13
    assert count_occurrences(p, cp("1234")) == 0
    assert count_occurrences(Permutation.from_text("123"), cp("12")) == 3


def test_avoids_examples():
    assert avoids(Permutation.from_text("2143"), cp("321"))
    # 435621 avoids 132 (no value sits between an ascent's endpoints) but
    # contains 321 and 231.
    assert avoids(Permutation.from_text("435621"), cp("132"))
    assert not avoids(Permutation.from_text("435621"), cp("321"))
    assert not avoids(Permutation.from_text("435621"), cp("231"))
    assert avoids(Permutation(()), cp("12"))
    assert avoids_all(Permutation.from_text("21"), [cp("123"), cp("12")])


def test_envelope_guard():
    big = Permutation(list(range(1, 26)))
    with pytest.raises(ValueError, match="envelope"):
        count_occurrences(big, cp("123"))
    # Short patterns stay allowed on long hosts.
    assert count_occurrences(big, cp("12")) == 25 * 24 // 2


def test_vincular_parse_and_str():
    vq = VincularPattern.parse("2-31")
    assert vq.perm.to_text() == "231"
    assert vq.adjacent == frozenset({2})
    assert str(vq) == "2-31"
    assert VincularPattern.parse("13-2").adjacent == frozenset({1})
    assert VincularPattern.parse("1-2-3").adjacent == frozenset()
    with pytest.raises(ValueError):
        VincularPattern.parse("2--31")


def test_count_vincular_examples():
    assert count_vincular(Permutation.from_text("3421"),
                          VincularPattern.parse("2-31")) == 1
    assert count_vincular(Permutation.from_text("3421"),
                          VincularPattern.parse("13-2")) == 0
    assert count_vincular(Permutation.identity(5),
                          VincularPattern.parse("2-31")) == 0


def test_vincular_with_no_adjacency_matches_classical():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randrange(0, 9)
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        p = Permutation(vals)
        for pat in ("231", "132", "321", "2413"):
            loose = VincularPattern(Permutation.from_text(pat), frozenset())
            assert count_vincular(p, loose) == count_occurrences(p, cp(pat))


def test_count_under_symmetry_invariance_small():
    pats = [tuple(q) for k in (1, 2, 3, 4) for q in permutations(range(1, k + 1))]
    for n in range(6):
        for raw in permutations(range(1, n + 1)):
            p = Permutation(raw)
            for q in pats:
                qq = Permutation(q)
                base = count_occurrences(p, ClassicalPattern(qq))
                assert base == count_occurrences(p.reverse(),
                                                 ClassicalPattern(qq.reverse()))
                assert base == count_occurrences(p.complement(),
                                                 ClassicalPattern(qq.complement()))
                assert base == count_occurrences(p.inverse(),
                                                 ClassicalPattern(qq.inverse()))


def test_count_under_symmetry_invariance_random():
    rng = random.Random(20240812)
    pats = [tuple(q) for k in (3, 4) for q in permutations(range(1, k + 1))]
    for n in (7, 8):
        for _ in range(25):
            vals = list(range(1, n + 1))
            rng.shuffle(vals)
            p = Permutation(vals)
            for q in pats:
                qq = Permutation(q)
                base = count_occurrences(p, ClassicalPattern(qq))
                assert base == count_occurrences(p.reverse(),
                                                 ClassicalPattern(qq.reverse()))
                assert base == count_occurrences(p.complement(),
                                                 ClassicalPattern(qq.complement()))
                assert base == count_occurrences(p.inverse(),
                                                 ClassicalPattern(qq.inverse()))


def test_avoids_iff_count_zero_spot_check():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randrange(0, 11)
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        p = Permutation(vals)
        q = cp(rng.choice(["123", "321", "231", "2143", "1342", "3421"]))
        assert avoids(p, q) == (count_occurrences(p, q) == 0)
        assert avoids(p, q) == (not naive_contains(p.values, q.perm.values))


def test_query_validation():
    with pytest.raises(ValueError):
        AvoidanceQuery(DumontKind.D1, 4, frozenset())
    with pytest.raises(ValueError):
        AvoidanceQuery(DumontKind.D1, 4, frozenset({cp("123"), cp("321")}),
                       occurrence_target=1)
    with pytest.raises(ValueError, match="odd size"):
        count_avoiders(AvoidanceQuery(DumontKind.D1, 5, frozenset({cp("123")})))


def test_generate_avoiders_examples():
    got = {p.to_text() for p in generate_avoiders(
        AvoidanceQuery(DumontKind.D4, 8, frozenset({cp("1342")})))}
    assert "16325478" in got
    assert len(got) == 8

    for n in (1, 2, 3, 4):
        staircase = []
        for j in range(1, n + 1):
            staircase += [2 * j, 2 * j - 1]
        got = [p.values for p in generate_avoiders(
            AvoidanceQuery(DumontKind.D1, 2 * n, frozenset({cp("321")})))]
        assert got == [tuple(staircase)]

    got = {p.to_text() for p in generate_avoiders(
        AvoidanceQuery(DumontKind.D4, 6, frozenset({cp("1234")})))}
    assert got == {"136254", "143652", "153264", "163254"}


def test_count_avoiders_theorem_values():
    for n in range(7):
        if n >= 1:
            assert count_avoiders(AvoidanceQuery(
                DumontKind.D4, 2 * n, frozenset({cp("1324")}))) == n * n - n + 1
    for n in range(1, 7):
        assert count_avoiders(AvoidanceQuery(
            DumontKind.D2, 2 * n, frozenset({cp("231")}))) == 2 ** (n - 1)
    got = [count_avoiders(AvoidanceQuery(DumontKind.D4, 2 * n,
                                         frozenset({cp("1234")})))
           for n in range(7)]
    assert got == [1, 1, 2, 4, 0, 0, 0]


@pytest.mark.parametrize("pattern", ["2143", "3421"])
def test_fast_guards_agree_with_generic_detector(pattern):
    # The O(1) incremental detectors back the two hot enumeration paths; the
    # generic matcher is forced here by pairing the pattern with an
    # unmatchable second one.
    decoy = cp("123456789")
    for n in range(1, 5):
        fast = [p.values for p in generate_avoiders(
            AvoidanceQuery(DumontKind.D1, 2 * n, frozenset({cp(pattern)})))]
        generic = [p.values for p in generate_avoiders(
            AvoidanceQuery(DumontKind.D1, 2 * n, frozenset({cp(pattern), decoy})))]
        assert fast == generic
        brute = [p.values for p in generate(DumontKind.D1, 2 * n)
                 if not naive_contains(p.values, tuple(int(c) for c in pattern))]
        assert fast == brute


@pytest.mark.parametrize("kind, pattern", [
    (DumontKind.D1, "132"), (DumontKind.D1, "213"), (DumontKind.D2, "321"),
    (DumontKind.D2, "3142"), (DumontKind.D4, "321"), (DumontKind.D4, "1423"),
])
def test_count_avoiders_matches_filtering(kind, pattern, small_dumont_sets):
    pat = tuple(int(c) for c in pattern)
    for size in (0, 2, 4, 6, 8):
        expected = sum(1 for vals in small_dumont_sets[(kind.value, size)]
                       if not naive_contains(vals, pat))
        assert count_avoiders(AvoidanceQuery(
            kind, size, frozenset({cp(pattern)}))) == expected


def test_count_exact_occurrences_examples(small_dumont_sets):
    assert count_exact_occurrences(DumontKind.D4, 4, cp("321"), 1) == 1
    for n in range(7):
        assert count_exact_occurrences(DumontKind.D1, 2 * n, cp("132"), 1) == 0
    # 135462 and 136254 are among the size-6 single-occurrence members.
    members = [p for p in generate(DumontKind.D4, 6)
               if count_occurrences(p, cp("321")) == 1]
    texts = {p.to_text() for p in members}
    assert {"135462", "136254"} <= texts
    assert count_exact_occurrences(DumontKind.D4, 6, cp("321"), 1) == len(members)


@pytest.mark.parametrize("kind, pattern, r", [
    (DumontKind.D4, "321", 1), (DumontKind.D4, "321", 2),
    (DumontKind.D1, "231", 1), (DumontKind.D2, "2143", 1),
    (DumontKind.D2, "3142", 0), (DumontKind.D1, "213", 3),
])
def test_exact_count_matches_filtering(kind, pattern, r, small_dumont_sets):
    pat = tuple(int(c) for c in pattern)
    for size in (0, 2, 4, 6, 8):
        expected = sum(1 for vals in small_dumont_sets[(kind.value, size)]
                       if naive_count(vals, pat) == r)
        assert count_exact_occurrences(kind, size, cp(pattern), r) == expected


def test_exact_count_rejects_negative_target():
    with pytest.raises(ValueError):
        count_exact_occurrences(DumontKind.D1, 4, cp("321"), -1)


def test_d4_avoider_set_equalities():
    # Dropping the leading 1 of the pattern leaves the avoider set unchanged.
    for short, long in (("231", "1342"), ("321", "1432"),
                        ("213", "1324"), ("312", "1423")):
        for n in range(6):
            a = {p.values for p in generate_avoiders(AvoidanceQuery(
                DumontKind.D4, 2 * n, frozenset({cp(short)})))}
            b = {p.values for p in generate_avoiders(AvoidanceQuery(
                DumontKind.D4, 2 * n, frozenset({cp(long)})))}
            assert a == b


def test_d2_4132_avoiders_equal_321_avoiders():
    for n in range(6):
        a = {p.values for p in generate_avoiders(AvoidanceQuery(
            DumontKind.D2, 2 * n, frozenset({cp("4132")})))}
        b = {p.values for p in generate_avoiders(AvoidanceQuery(
            DumontKind.D2, 2 * n, frozenset({cp("321")})))}
        assert a == b


def test_d4_1342_avoider_structure_lemmas():
    # Odd entries are fixed points; deficiencies at position 2k hold 2k-2.
    for n in range(1, 7):
        for p in generate_avoiders(AvoidanceQuery(
                DumontKind.D4, 2 * n, frozenset({cp("1342")}))):
            for k in range(1, n + 1):
                assert p.at(2 * k - 1) == 2 * k - 1
                if p.at(2 * k) < 2 * k:
                    assert p.at(2 * k) == 2 * k - 2


def test_count_vincular_against_oracle_random():
    rng = random.Random(11)
    stats = [VincularPattern.parse("2-31"), VincularPattern.parse("13-2"),
             VincularPattern.parse("23-1"), VincularPattern.parse("1-32")]
    for _ in range(150):
        n = rng.randrange(0, 10)
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        p = Permutation(vals)
        for vq in stats:
            assert count_vincular(p, vq) == naive_count_vincular(
                p.values, vq.perm.values, vq.adjacent)

"""Brute-force families, type classifications, and the aligned listing."""

import collections

import pytest

from dragonbound.counting import (
    ARRAY_REC,
    ARRAY_SEED,
    ARRAY_TYPE_MATRIX,
    ONES5,
    ONES7,
    STRING_REC,
    STRING_SEED,
    STRING_TYPE_MATRIX,
    mat_pow_vec,
    right_count,
    vec_dot,
)
from dragonbound.enumeration import (
    ARRAY_CAP,
    STRING_CAP,
    MembershipError,
    aligned_listing,
    array_history,
    classify_bin,
    classify_row,
    count_A,
    count_S_matrix,
    enumerate_A,
    enumerate_S,
    is_array_member,
    is_string_member,
    partition_check,
    row_successors,
    string_histories,
    successors_f,
)
from dragonbound.lsystem import RIGHT_BOUNDARY, iterate

S5 = (
    "11111", "11100", "11001", "11000", "10011",
    "10001", "00111", "00100", "00011", "00000",
)

A5 = (
    ((0, 1), (1, 0), (0, 1), (1, 0), (0, 1)),
    ((0, 1), (1, 0), (0, 1), (1, 0), (2, 1)),
    ((0, 1), (1, 0), (0, 1), (1, 2), (0, 1)),
    ((0, 1), (1, 0), (0, 1), (1, 2), (2, 0)),
    ((0, 1), (1, 0), (2, 1), (0, 1), (1, 0)),
    ((0, 1), (1, 0), (2, 1), (0, 2), (1, 0)),
)


# --------------------------------------------------------------------------
# binary strings

def test_membership_rule():
    # allowed maximal zero-run lengths are 0, 2, 3, 5, 6, ... (not 1 mod 3)
    assert is_string_member("1")
    assert is_string_member("11")
    assert is_string_member("00")
    assert is_string_member("000")
    assert is_string_member("100")
    assert is_string_member("1000")
    assert not is_string_member("0")
    assert not is_string_member("10")
    assert not is_string_member("10000")  # run of four
    assert not is_string_member("11011")  # isolated zero inside
    assert not is_string_member("")
    assert not is_string_member("12")


def test_small_levels_by_hand():
    assert enumerate_S(1) == ("1",)
    assert enumerate_S(2) == ("11", "00")
    assert enumerate_S(3) == ("111", "100", "001", "000")


def test_level_five_listing_largest_first():
    assert enumerate_S(5) == S5


def test_enumeration_is_descending_and_exhaustive():
    for n in range(1, 9):
        members = enumerate_S(n)
        assert list(members) == sorted(members, key=lambda s: int(s, 2),
                                       reverse=True)
        # recount independently from the membership predicate
        brute = sum(
            is_string_member(format(i, f"0{n}b")) for i in range(2 ** n)
        )
        assert len(members) == brute


def test_counts_agree_with_matrix_and_recurrence():
    for n in range(1, 13):
        count = len(enumerate_S(n))
        assert count == count_S_matrix(n)
        assert count == STRING_REC.value(n)
        assert count == right_count(n)


def test_string_caps():
    with pytest.raises(ValueError):
        enumerate_S(0)
    with pytest.raises(ValueError):
        enumerate_S(STRING_CAP + 1)
    with pytest.raises(ValueError):
        count_S_matrix(0)


def test_classification_examples():
    assert classify_bin("1") == "C"
    assert classify_bin("11") == "E"
    assert classify_bin("00") == "B"
    assert classify_bin("000") == "A"
    assert classify_bin("0001") == "C"
    assert classify_bin("1001") == "D"
    assert classify_bin("1100") == "B"
    assert classify_bin("11000") == "A"
    assert classify_bin("10011") == "E"


def test_classification_requires_membership():
    with pytest.raises(MembershipError):
        classify_bin("10")
    with pytest.raises(MembershipError):
        classify_bin("0")


def test_successor_examples():
    assert successors_f("1") == ["11", "00"]
    assert successors_f("00") == ["000", "001"]
    assert successors_f("000") == ["0001"]
    assert successors_f("1100") == ["11000", "11001"]
    assert successors_f("0001") == ["00011", "00000"]


def test_successors_partition_the_next_level():
    for n in range(1, 9):
        assert partition_check(n)


def test_partition_check_bounds():
    with pytest.raises(ValueError):
        partition_check(0)
    with pytest.raises(ValueError):
        partition_check(STRING_CAP)


def test_histories_end_in_the_member_type():
    hist = string_histories(5)
    assert set(hist) == set(S5)
    assert hist["11111"] == "CEEEE"
    assert hist["00000"] == "CBACB"
    for s, chain in hist.items():
        assert chain[-1] == classify_bin(s)
        assert len(chain) == 5


def test_type_totals_match_the_matrix():
    order = "ABCDE"
    for n in range(1, 10):
        totals = collections.Counter(
            classify_bin(s) for s in enumerate_S(n)
        )
        predicted = mat_pow_vec(STRING_TYPE_MATRIX, n - 1, STRING_SEED)
        assert tuple(totals.get(t, 0) for t in order) == predicted
        assert sum(predicted) == vec_dot(ONES5, predicted)


# --------------------------------------------------------------------------
# two-column arrays

def test_array_membership_rule():
    assert is_array_member(((0, 1),))
    assert is_array_member(((0, 1), (1, 0)))
    assert not is_array_member(((1, 0),))  # 1 with no 0 left or above
    assert not is_array_member(((0, 0),))  # adjacent zeros
    assert not is_array_member(((0, 2),))  # 2 needs two rows above it
    assert not is_array_member(((1, 1),))
    assert not is_array_member(())
    assert not is_array_member(((0, 1, 0),))  # wrong width
    assert not is_array_member(((0, 3),))  # entry outside {0,1,2}


def test_small_heights_by_hand():
    assert enumerate_A(1) == (((0, 1),),)
    assert enumerate_A(2) == ((((0, 1), (1, 0))),)
    assert len(enumerate_A(3)) == 2
    assert len(enumerate_A(4)) == 4


def test_height_five_listing_in_search_order():
    assert enumerate_A(5) == A5


def test_every_enumerated_array_is_a_member():
    for n in range(1, 9):
        for rows in enumerate_A(n):
            assert is_array_member(rows)


def test_array_counts_agree_on_all_routes():
    for n in range(1, 13):
        count = len(enumerate_A(n))
        assert count == count_A(n, via="N")
        assert count == count_A(n, via="P")
        assert count == ARRAY_REC.value(n)


def test_array_caps_and_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_A(0)
    with pytest.raises(ValueError):
        enumerate_A(ARRAY_CAP + 1)
    with pytest.raises(ValueError):
        count_A(0)
    with pytest.raises(ValueError):
        count_A(3, via="Q")


def test_row_classification_examples():
    assert classify_row(((0, 1),)) == "B"
    assert classify_row(((0, 1), (1, 0))) == "D"
    assert classify_row(((0, 1), (1, 0), (0, 1))) == "A"
    assert classify_row(((0, 1), (1, 0), (2, 1))) == "G"
    assert classify_row(((0, 1), (1, 0), (2, 1), (0, 2))) == "C"
    assert classify_row(((0, 1), (1, 0), (0, 1), (1, 2))) == "E"
    assert classify_row(((0, 1), (1, 0), (0, 1), (1, 2), (2, 0))) == "F"


def test_impossible_rows_are_named_before_membership():
    with pytest.raises(ValueError, match="impossible"):
        classify_row(((1, 1),))
    with pytest.raises(ValueError, match="impossible"):
        classify_row(((0, 1), (2, 2)))
    with pytest.raises(MembershipError):
        classify_row(((0, 0),))


def test_successor_table():
    assert row_successors("A") == ("D", "E")
    assert row_successors("B") == ("D",)
    assert row_successors("D") == ("A", "G")
    assert row_successors("E") == ("B", "F")
    assert row_successors("G") == ("B", "C")
    with pytest.raises(ValueError):
        row_successors("X")


def test_extensions_follow_the_successor_table():
    # group level n+1 arrays under their height-n prefix; each child's
    # type must be one the parent's type allows, one child per target
    for n in range(1, 8):
        children = collections.defaultdict(list)
        for rows in enumerate_A(n + 1):
            children[rows[:-1]].append(classify_row(rows))
        for rows in enumerate_A(n):
            allowed = row_successors(classify_row(rows))
            got = children[rows]
            assert sorted(got) == sorted(allowed)


def test_type_h_never_occurs():
    for n in range(1, 9):
        for rows in enumerate_A(n):
            assert classify_row(rows) != "H"


def test_array_histories():
    assert [array_history(rows) for rows in A5] == [
        "BDADA", "BDADG", "BDAEB", "BDAEF", "BDGBD", "BDGCD",
    ]


def test_array_type_totals_match_the_matrix():
    order = "ABCDEFG"
    for n in range(1, 10):
        totals = collections.Counter(
            classify_row(rows) for rows in enumerate_A(n)
        )
        predicted = mat_pow_vec(ARRAY_TYPE_MATRIX, n - 1, ARRAY_SEED)
        assert tuple(totals.get(t, 0) for t in order) == predicted
        assert sum(predicted) == vec_dot(ONES7, predicted)


# --------------------------------------------------------------------------
# the three-way aligned listing

def test_aligned_listing_level_four():
    triples = aligned_listing(4)
    assert [t[1] for t in triples] == [
        "1111", "1100", "1001", "1000", "0011", "0001",
    ]
    assert triples[0][2] == ((0, 1), (1, 0), (2, 1), (0, 2), (1, 0))
    assert triples[-1][2] == ((0, 1), (1, 0), (0, 1), (1, 0), (0, 1))


def test_aligned_listing_shape():
    for n in range(1, 9):
        triples = aligned_listing(n)
        word = iterate(RIGHT_BOUNDARY, n)
        assert len(triples) == len(word) == right_count(n)
        assert [t[0] for t in triples] == list(range(len(word)))
        # the all-ones string always heads the listing
        assert triples[0][1] == "1" * n
        # histories are listed in strictly decreasing order
        hist = string_histories(n)
        chains = [hist[t[1]] for t in triples]
        assert chains == sorted(chains, reverse=True)
        array_chains = [array_history(t[2]) for t in triples]
        assert array_chains == sorted(array_chains, reverse=True)


def test_aligned_listing_bounds():
    with pytest.raises(ValueError):
        aligned_listing(0)
    with pytest.raises(ValueError):
        aligned_listing(ARRAY_CAP)

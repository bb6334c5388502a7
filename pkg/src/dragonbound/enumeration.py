"""Brute-force enumeration of the two families counted by the right boundary.

Two independent object families share the right boundary's counting
sequence 1, 1, 2, 4, 6, 10, ...:

* binary strings in which no maximal run of zeros has length 1 mod 3;
* two-column arrays over {0,1,2} where, reading each column downward,
  every 1 has a 0 directly to its left or directly above it, no 0 has a
  0 to its left or above it, and every 2 has a 1 directly above it with
  a 0 above that 1.

Both enumerators here are deliberately naive so they can serve as oracles
for the transfer-matrix counts: the string side filters all 2**n strings
against the run rule, the array side tries every row extension and keeps
whatever violates no constraint.  Neither consults the type machinery.

The type classifications and successor rules live alongside them; they
drive the matrix counts (see counting.py) and the aligned three-way
listing against the right boundary word.
"""

from __future__ import annotations

import re
from functools import lru_cache

from . import counting
from .lsystem import RIGHT_BOUNDARY, iterate

STRING_CAP = 24
ARRAY_CAP = 14

STRING_TYPES = "ABCDE"
ROW_TYPES = "ABCDEFGH"


class MembershipError(ValueError):
    """The object is not a member of the family."""


# a maximal zero-run of length 1 mod 3 (1, 4, 7, ...)
_BAD_RUN = re.compile(r"(?<!0)0(?:000)*(?!0)")


def is_string_member(s: str) -> bool:
    """Run-rule filter: no maximal zero-run of length 1 mod 3."""
    if not s or set(s) - {"0", "1"}:
        return False
    return _BAD_RUN.search(s) is None


@lru_cache(maxsize=None)
def enumerate_S(n: int) -> tuple:
    """All member strings of length n, largest bit pattern first.

    Filters every one of the 2**n strings; this is the oracle the matrix
    count is checked against, so it stays dumb on purpose.
    """
    if n < 1 or n > STRING_CAP:
        raise ValueError(f"string length must be within 1..{STRING_CAP}")
    width = f"0{n}b"
    out = []
    for i in range(2 ** n - 1, -1, -1):
        s = format(i, width)
        if _BAD_RUN.search(s) is None:
            out.append(s)
    return tuple(out)


def classify_bin(s: str) -> str:
    """Type of a member string, read off its tail.

    A: ends in a positive 0 mod 3 run of zeros  B: ends in a 2 mod 3 run
    C: a 0 mod 3 run (possibly empty, as in "1") then a final 1
    D: a 2 mod 3 run then a final 1             E: ends in 11
    """
    if not is_string_member(s):
        raise MembershipError(f"{s!r} violates the zero-run rule")
    if s.endswith("0"):
        m = len(s) - len(s.rstrip("0"))
        return "A" if m % 3 == 0 else "B"
    if len(s) >= 2 and s[-2] == "1":
        return "E"
    body = s[:-1]
    m = len(body) - len(body.rstrip("0"))
    return "C" if m % 3 == 0 else "D"


def successors_f(s: str) -> list:
    """The one-step extensions of a member string, by its type.

    Types A, D append a 1; B appends either bit; C and E fork into
    appending a 1 and rewriting the final 1 into 00.  Together these
    reach every member one symbol longer, each exactly once.
    """
    t = classify_bin(s)
    if t == "A" or t == "D":
        return [s + "1"]
    if t == "B":
        return [s + "0", s + "1"]
    # C and E: add a 1, or trade the final 1 for two zeros
    return [s + "1", s[:-1] + "00"]


def partition_check(n: int) -> bool:
    """Successor sets of all length-n members tile the length-n+1 members."""
    if n < 1 or n + 1 > STRING_CAP:
        raise ValueError(f"need 1 <= n <= {STRING_CAP - 1}")
    seen = set()
    for s in enumerate_S(n):
        for child in successors_f(s):
            if child in seen:
                return False
            seen.add(child)
    return seen == set(enumerate_S(n + 1))


def count_S_matrix(n: int) -> int:
    """Member count of length n via the type-transition matrix."""
    if n < 1:
        raise ValueError("length must be positive")
    v = counting.mat_pow_vec(counting.STRING_TYPE_MATRIX, n - 1, counting.STRING_SEED)
    return counting.vec_dot(counting.ONES5, v)


@lru_cache(maxsize=None)
def string_histories(n: int) -> dict:
    """Member string -> its chain of types from "1" down the successor tree."""
    level = {"1": "C"}
    for _ in range(n - 1):
        nxt = {}
        for s, hist in level.items():
            for child in successors_f(s):
                if child in nxt:
                    raise AssertionError(f"successor sets overlap at {child!r}")
                nxt[child] = hist + classify_bin(child)
        level = nxt
    return dict(level)


# --------------------------------------------------------------------------
# two-column arrays

def _row_ok(rows, i: int, j: int) -> bool:
    """Constraint on cell (i, j) of a partial array, checking only
    neighbors that already exist: left in the same row, and above in the
    same column."""
    v = rows[i][j]
    above = rows[i - 1][j] if i > 0 else None
    left = rows[i][j - 1] if j > 0 else None
    if v == 0:
        # no 0 directly left of or above a 0
        return above != 0 and left != 0
    if v == 1:
        # a 0 directly left or directly above
        return above == 0 or left == 0
    # v == 2: a 1 directly above, a 0 directly above that 1
    return i >= 2 and rows[i - 1][j] == 1 and rows[i - 2][j] == 0


def is_array_member(rows) -> bool:
    rows = tuple(tuple(r) for r in rows)
    if not rows or any(len(r) != 2 for r in rows):
        return False
    if any(x not in (0, 1, 2) for r in rows for x in r):
        return False
    return all(_row_ok(rows, i, j) for i in range(len(rows)) for j in (0, 1))


@lru_cache(maxsize=None)
def enumerate_A(n: int) -> tuple:
    """All n-row member arrays, depth-first, candidate rows in numeric order.

    Tries all nine rows at every level and prunes exactly on the cell
    constraints over filled cells; the type tables play no part here.
    """
    if n < 1 or n > ARRAY_CAP:
        raise ValueError(f"array height must be within 1..{ARRAY_CAP}")
    out = []
    candidates = [(p, q) for p in (0, 1, 2) for q in (0, 1, 2)]

    def extend(rows):
        if len(rows) == n:
            out.append(rows)
            return
        for cand in candidates:
            trial = rows + (cand,)
            i = len(rows)
            if _row_ok(trial, i, 0) and _row_ok(trial, i, 1):
                extend(trial)

    for first in candidates:
        trial = (first,)
        if _row_ok(trial, 0, 0) and _row_ok(trial, 0, 1):
            extend(trial)
    return tuple(out)


def classify_row(rows) -> str:
    """Type of a member array, read off its last row and the row above.

    (0,1) splits on what sits above the 1: a 0 gives A, anything else
    (or nothing) gives B.  (0,2)=C, (1,0)=D, (1,2)=E, (2,0)=F, and (2,1)
    splits like (0,1) into G/H.  Rows (1,1) and (2,2) cannot occur.
    """
    rows = tuple(tuple(r) for r in rows)
    last = rows[-1]
    if last in ((1, 1), (2, 2)):
        raise ValueError(f"row {last} is impossible in a member array")
    if not is_array_member(rows):
        raise MembershipError("array violates the cell constraints")
    above = rows[-2][1] if len(rows) > 1 else None
    if last == (0, 1):
        return "A" if above == 0 else "B"
    if last == (0, 2):
        return "C"
    if last == (1, 0):
        return "D"
    if last == (1, 2):
        return "E"
    if last == (2, 0):
        return "F"
    return "G" if above == 0 else "H"  # last == (2, 1)


def row_successors(row_type: str) -> tuple:
    """Target types reachable by appending one row, per current type."""
    table = {
        "A": ("D", "E"),
        "B": ("D",),
        "C": ("D",),
        "D": ("A", "G"),
        "E": ("B", "F"),
        "F": ("A",),
        "G": ("B", "C"),
        "H": ("B",),
    }
    if row_type not in table:
        raise ValueError(f"unknown row type {row_type!r}")
    return table[row_type]


def count_A(n: int, via: str = "N") -> int:
    """n-row member count via either transition matrix: the 7x7 type
    matrix ('N') or its 3x3 grouped quotient ('P')."""
    if n < 1:
        raise ValueError("height must be positive")
    if via == "N":
        v = counting.mat_pow_vec(
            counting.ARRAY_TYPE_MATRIX, n - 1, counting.ARRAY_SEED
        )
        return counting.vec_dot(counting.ONES7, v)
    if via == "P":
        v = counting.mat_pow_vec(counting.GROUP_MATRIX, n - 1, counting.GROUP_SEED)
        return counting.vec_dot(counting.ONES3, v)
    raise ValueError("via must be 'N' or 'P'")


def array_history(rows) -> str:
    """Chain of types of an array's prefixes, one letter per row."""
    rows = tuple(tuple(r) for r in rows)
    return "".join(classify_row(rows[: i + 1]) for i in range(len(rows)))


def aligned_listing(n: int) -> list:
    """Triples (right-boundary element index, string, array) at level n.

    The strings of length n and the arrays of n+1 rows are each sorted by
    their type chains, largest letter chain first, then paired off with
    the elements of the n-th right boundary word.  All three lists must
    have the same length.
    """
    if n < 1 or n > min(STRING_CAP, ARRAY_CAP - 1):
        raise ValueError(f"level must be within 1..{min(STRING_CAP, ARRAY_CAP - 1)}")
    word = iterate(RIGHT_BOUNDARY, n)
    strings = sorted(
        string_histories(n).items(), key=lambda kv: kv[1], reverse=True
    )
    arrays = sorted(enumerate_A(n + 1), key=array_history, reverse=True)
    if not (len(word) == len(strings) == len(arrays)):
        raise AssertionError(
            f"misaligned counts at level {n}: "
            f"{len(word)} elements, {len(strings)} strings, {len(arrays)} arrays"
        )
    return [(i, strings[i][0], arrays[i]) for i in range(len(word))]

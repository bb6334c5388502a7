"""Named self-verification checks behind the CLI's verify command.

Each check recomputes one claim two independent ways and compares.  The
checks read the module constants at call time, so a tampered matrix or
rule table makes the corresponding checks fail rather than silently
propagating.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import counting, enumeration, lsystem, polyomino
from .curve import ab_alternation_check, check_self_avoiding, dragon_path
from .lsystem import (
    BOUNDARY,
    COUNT_ORDER,
    DRAGON,
    LEFT_BOUNDARY,
    RIGHT_BOUNDARY,
    iterate,
    letter_counts,
    transition_matrix,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


LEVELS = {
    "quick": dict(curve=10, boundary=8, strings=12, arrays=10,
                  partition=8, series=50, aligned=6, words=2000),
    "full": dict(curve=16, boundary=14, strings=20, arrays=14,
                 partition=15, series=200, aligned=12, words=10000),
}


def run_checks(level: str = "quick") -> list:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    caps = LEVELS[level]
    results = []
    for name, fn in _CHECKS:
        try:
            ok, detail = fn(caps)
        except Exception as exc:  # a crash is a failure, not a stop
            ok, detail = False, f"raised {exc!r}"
        results.append(CheckResult(name, ok, detail if not ok else ""))
    return results


def _fail_at(n, got, want):
    return False, f"n={n}: got {got}, expected {want}"


# --------------------------------------------------------------------------
# rewriting

def _check_word_lengths(caps):
    for n in range(0, 21):
        w = iterate(DRAGON, n)
        if len(w) != 2 ** (n + 1) - 1:
            return _fail_at(n, len(w), 2 ** (n + 1) - 1)
    return True, ""


def _check_homomorphism(caps):
    rng = random.Random(7041)
    glyphs = lsystem.BOUNDARY_ALPHABET.glyphs
    for _ in range(25):
        u = "".join(rng.choice(glyphs) for _ in range(rng.randrange(0, 200)))
        w = "".join(rng.choice(glyphs) for _ in range(rng.randrange(0, 200)))
        rules = dict(BOUNDARY.rules)
        if lsystem.apply_once(rules, u + w) != (
            lsystem.apply_once(rules, u) + lsystem.apply_once(rules, w)
        ):
            return False, f"rewrite of {u!r}+{w!r} is not concatenative"
    return True, ""


def _check_count_functoriality(caps):
    rng = random.Random(7042)
    m = counting.BOUNDARY_MATRIX
    rules = dict(BOUNDARY.rules)
    for _ in range(12):
        w = "".join(rng.choice(COUNT_ORDER) for _ in range(rng.randrange(1, caps["words"])))
        before = letter_counts(w, COUNT_ORDER)
        after = letter_counts(lsystem.apply_once(rules, w), COUNT_ORDER)
        if counting.mat_vec(m, before) != after:
            return False, f"transfer matrix disagrees on a word of length {len(w)}"
    return True, ""


def _check_s_absence(caps):
    for system in (BOUNDARY, LEFT_BOUNDARY, RIGHT_BOUNDARY):
        for n in range(0, 13):
            if "s" in iterate(system, n):
                return False, f"'s' appeared in generation {n} from {system.axiom!r}"
    return True, ""


# --------------------------------------------------------------------------
# geometry

def _check_curve_geometry(caps):
    for n in range(0, caps["curve"] + 1):
        w = iterate(DRAGON, n)
        p = dragon_path(w)
        if len(p) != 2 ** n + 1:
            return _fail_at(n, len(p), 2 ** n + 1)
        x, y = p[-1]
        if x * x + y * y != 2 ** n:
            return _fail_at(n, x * x + y * y, 2 ** n)
        if not check_self_avoiding(p):
            return False, f"n={n}: an edge repeats"
        if not ab_alternation_check(w, p):
            return False, f"n={n}: A/B orientation broken"
    return True, ""


def _check_cells(caps):
    for n in range(0, caps["boundary"] + 1):
        cells = polyomino.dragon_cells(n)
        if len(cells) != 2 ** n:
            return _fail_at(n, len(cells), 2 ** n)
        if not polyomino.is_edge_connected(cells):
            return False, f"n={n}: cells not edge-connected"
        if not polyomino.is_simply_connected(cells):
            return False, f"n={n}: cells enclose a hole"
    return True, ""


def _check_cycle_simple(caps):
    for n in range(0, caps["boundary"] + 1):
        _, cycle, _ = polyomino.dragon_boundary(n)
        if len(set(cycle[:-1])) != len(cycle) - 1:
            return False, f"n={n}: outline revisits a vertex"
    return True, ""


def _check_boundary_word_oracle(caps):
    for n in range(0, caps["boundary"] + 1):
        decoded = polyomino.full_boundary_word(n)
        expected = iterate(BOUNDARY, n)
        if decoded.word != expected:
            return False, f"n={n}: traced {decoded.word[:40]!r}... vs rewritten"
    return True, ""


def _check_split_oracle(caps):
    left0, right0 = polyomino.boundary_split(0)
    if (left0.word, right0.word) != ("R", "r"):
        return False, f"n=0 split gave {(left0.word, right0.word)}"
    for n in range(1, caps["boundary"] + 1):
        left, right = polyomino.boundary_split(n)
        if left.word != iterate(LEFT_BOUNDARY, n):
            return False, f"n={n}: left split disagrees with rewriting"
        if right.word != iterate(RIGHT_BOUNDARY, n):
            return False, f"n={n}: right split disagrees with rewriting"
    return True, ""


def _check_perimeter_counts(caps):
    for n in range(0, caps["boundary"] + 1):
        cells, cycle, end = polyomino.dragon_boundary(n)
        full, left, right = polyomino.perimeter_counts(cells, end)
        if 2 * full != len(cycle) - 1:
            return False, f"n={n}: element count vs cycle steps"
        if full != counting.full_count(n):
            return _fail_at(n, full, counting.full_count(n))
        if n >= 1 and right != counting.right_count(n):
            return _fail_at(n, right, counting.right_count(n))
    return True, ""


# --------------------------------------------------------------------------
# exact counting

def _check_transition_coherence(caps):
    built = transition_matrix(dict(BOUNDARY.rules), COUNT_ORDER)
    if built != counting.BOUNDARY_MATRIX:
        return False, "transfer matrix differs from the rule-derived one"
    return True, ""


def _check_charpolys(caps):
    cases = [
        (counting.BOUNDARY_MATRIX, (0, 2, -2, 1, -2, 1)),
        (counting.STRING_TYPE_MATRIX, (0, 0, -2, 0, -1, 1)),
        (counting.ARRAY_TYPE_MATRIX, (0, 2, 0, -1, -3, -1, 0, 1)),
        (counting.GROUP_MATRIX, (-2, 0, -1, 1)),
    ]
    for m, expected in cases:
        got = counting.char_poly(m)
        if got != expected:
            return False, f"char poly {got} != {expected}"
    return True, ""


def _check_cayley_hamilton(caps):
    for m in (counting.BOUNDARY_MATRIX, counting.STRING_TYPE_MATRIX,
              counting.ARRAY_TYPE_MATRIX, counting.GROUP_MATRIX):
        p = counting.char_poly(m)
        d = len(m)
        zero = tuple(tuple(0 for _ in range(d)) for _ in range(d))
        if counting.mat_poly(p, m) != zero:
            return False, f"matrix of size {d} does not satisfy its char poly"
    return True, ""


def _check_side_swap(caps):
    if not counting.symmetry_check():
        return False, "conjugation by the mirror permutation fails"
    p = counting.SIDE_SWAP
    if counting.mat_mul(p, p) != counting.identity(5):
        return False, "mirror permutation is not an involution"
    m = counting.BOUNDARY_MATRIX
    for n in range(0, 21):
        lhs = counting.vec_dot(counting.ONES5, counting.mat_pow_vec(m, n, counting.E_r))
        rhs = counting.vec_dot(counting.ONES5, counting.mat_pow_vec(m, n, counting.E_L))
        if lhs != rhs:
            return _fail_at(n, lhs, rhs)
    return True, ""


def _check_kernel(caps):
    p = (-2, 0, -1, 1)  # x^3 - x^2 - 2
    if not counting.kernel_check(counting.BOUNDARY_MATRIX, p, (0, 1, 1, 0, 0)):
        return False, "r+L count vector escaped the kernel"
    if counting.kernel_check(counting.BOUNDARY_MATRIX, p, counting.E_R):
        return False, "e_R should not lie in the kernel"
    return True, ""


def _check_quotient_diagram(caps):
    return (True, "") if counting.quotient_diagram_check() else (
        False, "3x3 quotient disagrees with the 7x7 transition")


def _check_power_paths(caps):
    rng = random.Random(7043)
    m = counting.BOUNDARY_MATRIX
    for _ in range(10):
        n = rng.randrange(0, 60)
        v = tuple(rng.randrange(-5, 6) for _ in range(5))
        if counting.mat_pow_vec(m, n, v) != counting.mat_pow_vec_linear(m, n, v):
            return False, f"power paths disagree at n={n}"
    return True, ""


def _check_left_series(caps):
    top = caps["series"]
    gf = counting.LEFT_GF.taylor(top)
    rec = counting.LEFT_REC.prefix(top + 1)
    for n in range(top + 1):
        if gf[n] != rec[n]:
            return _fail_at(n, rec[n], gf[n])
        if gf[n] != counting.left_weighted_count(n + 1):
            return _fail_at(n, counting.left_weighted_count(n + 1), gf[n])
    weighted = counting.WEIGHTED_REC.prefix(top + 1)
    for n in range(top + 1):
        if weighted[n] != counting.left_weighted_count(n):
            return False, f"weighted recurrence wrong at n={n}"
    return True, ""


def _check_right_series(caps):
    top = caps["series"]
    gf = counting.RIGHT_GF.taylor(top + 1)
    rec = counting.RIGHT_REC.prefix(top + 1)
    for n in range(top + 1):
        a = counting.right_count(n)
        if a != rec[n]:
            return _fail_at(n, rec[n], a)
        if a != gf[n + 1]:
            return _fail_at(n, gf[n + 1], a)
        if n >= 3 and a != rec[n - 1] + 2 * rec[n - 3]:
            return False, f"short recurrence fails at n={n}"
    return True, ""


def _check_full_series(caps):
    top = caps["series"]
    rec = counting.FULL_REC.prefix(top + 1)
    for n in range(top + 1):
        if counting.full_count(n) != rec[n]:
            return _fail_at(n, rec[n], counting.full_count(n))
    return True, ""


# --------------------------------------------------------------------------
# enumeration

def _check_strings(caps):
    first = [1, 2, 4, 6, 10]
    for n in range(1, caps["strings"] + 1):
        got = len(enumeration.enumerate_S(n))
        if got != enumeration.count_S_matrix(n):
            return _fail_at(n, got, enumeration.count_S_matrix(n))
        if got != counting.STRING_REC.value(n):
            return _fail_at(n, got, counting.STRING_REC.value(n))
        if n <= 5 and got != first[n - 1]:
            return _fail_at(n, got, first[n - 1])
    return True, ""


def _check_partition(caps):
    for n in range(1, caps["partition"] + 1):
        if not enumeration.partition_check(n):
            return False, f"successor sets fail to tile at n={n}"
    return True, ""


def _check_successor_types(caps):
    target = {"A": "C", "B": "AD", "C": "EB", "D": "E", "E": "EB"}
    for n in range(1, 11):
        for s in enumeration.enumerate_S(n):
            t = enumeration.classify_bin(s)
            got = "".join(enumeration.classify_bin(c) for c in enumeration.successors_f(s))
            if got != target[t]:
                return False, f"{s!r} ({t}) produced types {got}"
    return True, ""


def _check_arrays(caps):
    first = [1, 1, 2, 4, 6]
    for n in range(1, caps["arrays"] + 1):
        got = len(enumeration.enumerate_A(n))
        if got != enumeration.count_A(n, "N"):
            return _fail_at(n, got, enumeration.count_A(n, "N"))
        if got != enumeration.count_A(n, "P"):
            return _fail_at(n, got, enumeration.count_A(n, "P"))
        if got != counting.ARRAY_REC.value(n):
            return _fail_at(n, got, counting.ARRAY_REC.value(n))
        if n <= 5 and got != first[n - 1]:
            return _fail_at(n, got, first[n - 1])
    for n in range(1, 31):
        if enumeration.count_A(n, "N") != enumeration.count_A(n, "P"):
            return False, f"7x7 and 3x3 counts split at n={n}"
    return True, ""


def _check_array_types(caps):
    for n in range(1, min(caps["arrays"], 10) + 1):
        for rows in enumeration.enumerate_A(n):
            hist = enumeration.array_history(rows)
            if "H" in hist:
                return False, f"type H appeared in {rows}"
            for a, b in zip(hist, hist[1:]):
                if b not in enumeration.row_successors(a):
                    return False, f"{rows} steps {a}->{b}"
    return True, ""


def _check_aligned(caps):
    for n in range(1, caps["aligned"] + 1):
        triples = enumeration.aligned_listing(n)
        expect = counting.right_count(n)
        if len(triples) != expect:
            return _fail_at(n, len(triples), expect)
        if triples[0][1] != "1" * n:
            return False, f"level {n} does not open with the all-ones string"
    return True, ""


def _check_cross_alignment(caps):
    top = caps["series"]
    gf = counting.RIGHT_GF.taylor(top + 2)
    for n in range(1, top + 1):
        a = counting.right_count(n)
        if a != enumeration.count_S_matrix(n):
            return _fail_at(n, enumeration.count_S_matrix(n), a)
        if a != gf[n + 1]:
            return _fail_at(n, gf[n + 1], a)
        if a != enumeration.count_A(n + 1, "N"):
            return _fail_at(n, enumeration.count_A(n + 1, "N"), a)
    for n in range(1, caps["strings"] + 1):
        if counting.right_count(n) != len(enumeration.enumerate_S(n)):
            return False, f"enumerated strings disagree at n={n}"
    for n in range(1, caps["arrays"]):
        if counting.right_count(n) != len(enumeration.enumerate_A(n + 1)):
            return False, f"enumerated arrays disagree at n={n}"
    return True, ""


_CHECKS = [
    ("rewriting.word_lengths", _check_word_lengths),
    ("rewriting.homomorphism", _check_homomorphism),
    ("rewriting.count_functoriality", _check_count_functoriality),
    ("rewriting.s_absence", _check_s_absence),
    ("curve.geometry", _check_curve_geometry),
    ("polyomino.cells", _check_cells),
    ("polyomino.cycle_simple", _check_cycle_simple),
    ("polyomino.word_oracle", _check_boundary_word_oracle),
    ("polyomino.split_oracle", _check_split_oracle),
    ("polyomino.perimeter_counts", _check_perimeter_counts),
    ("counting.transition_coherence", _check_transition_coherence),
    ("counting.char_polys", _check_charpolys),
    ("counting.cayley_hamilton", _check_cayley_hamilton),
    ("counting.side_swap", _check_side_swap),
    ("counting.kernel", _check_kernel),
    ("counting.quotient_diagram", _check_quotient_diagram),
    ("counting.power_paths", _check_power_paths),
    ("counting.left_series", _check_left_series),
    ("counting.right_series", _check_right_series),
    ("counting.full_series", _check_full_series),
    ("strings.enumeration", _check_strings),
    ("strings.partition", _check_partition),
    ("strings.successor_types", _check_successor_types),
    ("arrays.enumeration", _check_arrays),
    ("arrays.type_closure", _check_array_types),
    ("alignment.listing", _check_aligned),
    ("alignment.cross_sequences", _check_cross_alignment),
]

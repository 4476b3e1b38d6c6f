"""Cyclic and linear t-ary sequences with exact bad-pair accounting.

A pair of positions i != j is bad when the symbols agree and the positions
are within distance k (cyclic distance min(|i-j|, s-|i-j|) in cyclic mode,
|i-j| in linear mode).  Every unordered pair is counted once, even when both
|i-j| <= k and s-|i-j| <= k.  w_k(s) is the minimum bad-pair count over all
cyclic strings of length s; it is computed either by enumerating strings or
by a minimum-weight closed-walk dynamic program over the de Bruijn graph,
and the two routes cross-check each other.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import debruijn
from .errors import (BudgetError, InputError, InvalidParameterError,
                     ParseError, UnsupportedLengthError)

CYCLIC = "cyclic"
LINEAR = "linear"

# Enumeration cap for the brute-force route (t^s strings).
BRUTE_LIMIT = 1 << 26
# Below this many strings, the auto method runs both routes and cross-checks.
_CROSS_CHECK_LIMIT = 1 << 16


@dataclass(frozen=True)
class CyclicBitString:
    """A t-ary string read cyclically or linearly."""

    symbols: tuple
    alphabet: int = 2
    mode: str = CYCLIC

    def __post_init__(self):
        if self.alphabet < 2:
            raise InvalidParameterError(
                f"alphabet size must be >= 2, got {self.alphabet}")
        if self.mode not in (CYCLIC, LINEAR):
            raise InvalidParameterError(f"unknown mode {self.mode!r}")
        if any(not (0 <= s < self.alphabet) for s in self.symbols):
            raise InvalidParameterError(
                f"symbols must lie in [0, {self.alphabet})")
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))

    @classmethod
    def from_string(cls, text, alphabet=2, mode=CYCLIC):
        if alphabet > 10:
            raise InvalidParameterError(
                "digit-string parsing supports alphabets up to 10 symbols")
        try:
            symbols = tuple(int(ch) for ch in text.strip())
        except ValueError:
            raise InvalidParameterError(f"non-digit symbol in {text!r}")
        return cls(symbols, alphabet=alphabet, mode=mode)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        if self.alphabet <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)


class BadPairReport(NamedTuple):
    bad_count: int
    good_count: int
    per_index_bad: tuple


def _pair_offsets(s, k, mode):
    """Yield (i, j) for every unordered within-distance pair, exactly once."""
    if mode == LINEAR:
        for i in range(s):
            for j in range(i + 1, min(i + k, s - 1) + 1):
                yield i, j
    else:
        for d in range(1, min(k, s // 2) + 1):
            span = s // 2 if 2 * d == s else s
            for i in range(span):
                yield i, (i + d) % s


def count_bad_pairs(seq, k):
    """Exact bad/good pair counts plus the per-index bad-pair tally."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    s = len(seq)
    if s < 2:
        raise InvalidParameterError(f"need at least 2 symbols, got {s}")
    symbols = seq.symbols
    bad = good = 0
    per_index = [0] * s
    for i, j in _pair_offsets(s, k, seq.mode):
        if symbols[i] == symbols[j]:
            bad += 1
            per_index[i] += 1
            per_index[j] += 1
        else:
            good += 1
    return BadPairReport(bad, good, tuple(per_index))


def _popcount(values):
    return np.bitwise_count(values).astype(np.int64)


def _wk_brute_binary(k, s):
    """Minimum cyclic bad-pair count by enumerating all binary strings.

    Complementing every symbol preserves badness, so only strings with the
    top bit clear are enumerated.  Counting uses rotate-xor-popcount.
    """
    mask = np.uint64((1 << s) - 1)
    total = 1 << max(s - 1, 1)
    chunk = min(total, 1 << 20)
    best = None
    distances = []
    for d in range(1, min(k, s // 2) + 1):
        distances.append((d, 2 if 2 * d == s else 1))
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.uint64)
        bad = np.zeros(codes.shape, dtype=np.int64)
        for d, fold in distances:
            rot = ((codes >> np.uint64(d)) |
                   (codes << np.uint64(s - d))) & mask
            agree = s - _popcount((codes ^ rot) & mask)
            bad += agree // fold if fold == 2 else agree
        m = int(bad.min())
        best = m if best is None else min(best, m)
    return best


def _wk_brute_tary(k, s, t):
    """General-alphabet brute force over base-t digit arrays, chunked."""
    total = t ** s
    chunk = min(total, 1 << 18)
    powers = [t ** (s - 1 - j) for j in range(s)]
    distances = []
    for d in range(1, min(k, s // 2) + 1):
        distances.append((d, 2 if 2 * d == s else 1))
    best = None
    for lo in range(0, total, chunk):
        codes = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        digits = [(codes // p) % t for p in powers]
        bad = np.zeros(codes.shape, dtype=np.int64)
        for d, fold in distances:
            agree = np.zeros(codes.shape, dtype=np.int64)
            for i in range(s):
                agree += digits[i] == digits[(i + d) % s]
            bad += agree // fold if fold == 2 else agree
        m = int(bad.min())
        best = m if best is None else min(best, m)
    return best


def wk_brute(k, s, alphabet=2):
    """Brute-force w_k(s); requires alphabet**s <= BRUTE_LIMIT."""
    if s < 1:
        raise InvalidParameterError(f"length must be >= 1, got {s}")
    if alphabet ** s > BRUTE_LIMIT:
        raise BudgetError(
            f"brute force over {alphabet}^{s} strings exceeds the "
            f"{BRUTE_LIMIT} cap")
    if s == 1:
        return 0
    if alphabet == 2:
        return _wk_brute_binary(k, s)
    return _wk_brute_tary(k, s, alphabet)


def _truncated_weight_tables(k, s, t):
    """Doubled edge-weight tables that count each unordered pair twice.

    For s > 2k these are just twice the plain edge weights.  For
    k+1 <= s <= 2k a pair at offset d is also within distance at the
    reverse offset s-d, so plain weights would double-count it; counting
    only offsets up to floor((s-1)/2) once and the half-way offset s/2 (for
    even s) with weight 1 instead of 2 makes the walk total equal exactly
    twice the bad-pair count of the corresponding cyclic string.
    """
    dmax = min(k, (s - 1) // 2)
    extra = None
    if s % 2 == 0 and s // 2 <= k:
        extra = s // 2 - 1  # 0-based digit position for offset s/2
    cnt = debruijn._digit_counts(k, t, num_digits=dmax)
    doubled = 2 * cnt
    if extra is not None:
        doubled += debruijn._digit_counts(k, t, num_digits=0,
                                          extra_digit=extra)
    return doubled


def wk_walk(k, s, alphabet=2, max_vertices=debruijn.DEFAULT_MAX_VERTICES):
    """w_k(s) as the minimum-weight closed walk of length s.

    Cyclic strings of length s >= k+1 correspond bijectively to closed
    s-walks in the de Bruijn graph, so minimizing walk weight minimizes the
    bad-pair count.  Start vertices are enumerated sequentially with a
    rolling O(t^k) array per length step.
    """
    t = alphabet
    if s < k + 1:
        raise InvalidParameterError(
            f"walk method needs s >= k+1 (got s={s}, k={k})")
    size = t ** k
    if size > max_vertices:
        raise BudgetError(
            f"walk DP needs {size} vertices, over the budget of {max_vertices}")
    weights = _truncated_weight_tables(k, s, t)
    idx = debruijn._pred_indices(k, t)
    inf = debruijn._INF
    best = None
    for start in range(size):
        dist = np.full(size, inf, dtype=np.int64)
        dist[start] = 0
        for _ in range(s):
            dist = debruijn._dp_step(dist, idx, weights)
        value = int(dist[start])
        if value < inf and (best is None or value < best):
            best = value
    assert best is not None and best % 2 == 0
    return best // 2


def wk_exact(k, s, alphabet=2, method="auto"):
    """Minimum bad-pair count over all cyclic t-ary strings of length s.

    method 'brute' enumerates strings (t^s capped), 'walk' runs the closed
    walk DP (s >= k+1), 'auto' picks brute for small s and walk otherwise,
    cross-checking whenever both are cheap.
    """
    if k < 1 or s < 1:
        raise InvalidParameterError(f"need k >= 1 and s >= 1, got k={k} s={s}")
    if method == "brute":
        return wk_brute(k, s, alphabet)
    if method == "walk":
        return wk_walk(k, s, alphabet)
    if method != "auto":
        raise InvalidParameterError(f"unknown method {method!r}")

    walk_applies = s >= k + 1 and alphabet ** k <= debruijn.DEFAULT_MAX_VERTICES
    brute_applies = alphabet ** s <= BRUTE_LIMIT
    if not walk_applies and not brute_applies:
        raise BudgetError(
            f"w_{k}({s}) over alphabet {alphabet} fits neither enumeration "
            f"nor the walk DP")
    if brute_applies and (alphabet ** s <= _CROSS_CHECK_LIMIT or
                          not walk_applies):
        value = wk_brute(k, s, alphabet)
        if walk_applies:
            check = wk_walk(k, s, alphabet)
            assert check == value, \
                f"walk/brute disagree for k={k} s={s}: {check} != {value}"
        return value
    return wk_walk(k, s, alphabet)


class LowBadConstruction(NamedTuple):
    sequence: CyclicBitString
    bad_count: int


def construct_low_bad(k, s, max_vertices=debruijn.DEFAULT_MAX_VERTICES):
    """Cyclic binary string of length s with close to a_k*s bad pairs.

    Repeats an optimal cycle word floor(s/ell) times and pads with the
    leftover number of zeros at position 0.  The measured bad count is
    always below a_k*s + k(2^k + k); when ell divides s and s > 2k it equals
    a_k*s exactly.
    """
    cycle = debruijn.min_normalized_cycle(debruijn.build_debruijn(k),
                                          max_vertices)
    ell = cycle.length
    if s < ell:
        raise UnsupportedLengthError(
            f"need s >= {ell} (the optimal cycle length for k={k}), got {s}")
    q, r = divmod(s, ell)
    symbols = (0,) * r + cycle.symbols * q
    seq = CyclicBitString(symbols, alphabet=2, mode=CYCLIC)
    bad = count_bad_pairs(seq, k).bad_count
    return LowBadConstruction(seq, bad)


def characteristic(items, sides, mode=CYCLIC):
    """Binary string with 0 wherever the item's side is class 0.

    `sides` maps every item to 0 or 1 (bipartition class X or Y); items
    without an assignment raise InputError.
    """
    symbols = []
    for item in items:
        if item not in sides:
            raise InputError(f"item {item!r} has no bipartition side")
        side = sides[item]
        if side not in (0, 1):
            raise InputError(f"side of {item!r} must be 0 or 1, got {side!r}")
        symbols.append(side)
    return CyclicBitString(tuple(symbols), alphabet=2, mode=mode)


def parse_bitstrings(text, alphabet=2, mode=CYCLIC):
    """Parse the one-string-per-line format with # comments."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(CyclicBitString.from_string(line, alphabet, mode))
        except InvalidParameterError as exc:
            raise ParseError(str(exc), line=lineno)
    return out


def serialize_bitstrings(seqs):
    return "".join(f"{seq}\n" for seq in seqs)

"""Homogeneous-subsequence extraction for pair colorings induced by sequences.

Two colorings of index pairs: `increasing_pairs` (value at the smaller index
below the value at the larger one) and `distinct_pairs` (values differ).
Extraction runs the deterministic pivot-partition chain and an exact
monotone/pigeonhole search, returning the larger homogeneous set; the exact
search guarantees at least ceil(sqrt(N)) indices on every input, which
dominates the documented floor(log2 N) bound.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from math import isqrt

COLORINGS = ("increasing_pairs", "distinct_pairs")

KIND_CONSTANT = "constant"
KIND_STRICTLY_INCREASING = "strictly_increasing"
KIND_INJECTIVE = "injective"
KIND_NON_INCREASING = "non_increasing"


@dataclass(frozen=True)
class HomogeneousResult:
    """A verified homogeneous index set with its witnessed kind."""

    indices: tuple[int, ...]
    kind: str
    value: int | None = None  # the repeated value for the constant kind

    def to_json(self) -> dict:
        data = {"indices": list(self.indices), "kind": self.kind}
        if self.value is not None:
            data["value"] = self.value
        return data


def verify_result(values, result: HomogeneousResult) -> bool:
    """Independent re-check of a claimed homogeneous set against the sequence."""
    idx = result.indices
    if not idx or any(b <= a for a, b in zip(idx, idx[1:])):
        return False
    if idx[0] < 0 or idx[-1] >= len(values):
        return False
    picked = [values[i] for i in idx]
    if result.kind == KIND_CONSTANT:
        return all(v == result.value for v in picked)
    if result.kind == KIND_STRICTLY_INCREASING:
        return all(a < b for a, b in zip(picked, picked[1:]))
    if result.kind == KIND_INJECTIVE:
        return len(set(picked)) == len(picked)
    if result.kind == KIND_NON_INCREASING:
        return all(a >= b for a, b in zip(picked, picked[1:]))
    return False


def sqrt_bound(n: int) -> int:
    """ceil(sqrt(n)), the guaranteed homogeneous size for length-n inputs."""
    root = isqrt(n)
    return root if root * root == n else root + 1


def _pair_color(values, coloring: str, i: int, j: int) -> int:
    """Color of the index pair {i, j}, i < j: 0 for the open class."""
    if coloring == "increasing_pairs":
        return 0 if values[i] < values[j] else 1
    if coloring == "distinct_pairs":
        return 0 if values[i] != values[j] else 1
    raise ValueError(f"unknown coloring {coloring!r}")


def _pivot_chain(values, coloring: str) -> tuple[list[int], list[int]]:
    """Pivot at the least unused index, keep the majority color side (ties to
    the open class); returns the pivot chain and the color each pivot took."""
    live = list(range(len(values)))
    chain: list[int] = []
    colors: list[int] = []
    while live:
        pivot = live[0]
        chain.append(pivot)
        rest = live[1:]
        if not rest:
            break
        side0 = [q for q in rest if _pair_color(values, coloring, pivot, q) == 0]
        side1 = [q for q in rest if _pair_color(values, coloring, pivot, q) == 1]
        if len(side0) >= len(side1):
            colors.append(0)
            live = side0
        else:
            colors.append(1)
            live = side1
    return chain, colors


def _pivot_extract(values, coloring: str) -> tuple[list[int], int]:
    chain, colors = _pivot_chain(values, coloring)
    best: list[int] = [chain[0]]
    best_color = colors[0] if colors else 0
    for c in (0, 1):
        picked = [p for p, col in zip(chain, colors) if col == c]
        if not picked or picked[-1] != chain[-1]:
            picked = picked + [chain[-1]]
        if len(picked) > len(best):
            best, best_color = picked, c
    return best, best_color


def _longest_strictly_increasing(values) -> list[int]:
    tails: list[int] = []          # value at the end of the best run per length
    tail_idx: list[int] = []
    prev = [-1] * len(values)
    for i, v in enumerate(values):
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
            tail_idx.append(i)
        else:
            tails[pos] = v
            tail_idx[pos] = i
        prev[i] = tail_idx[pos - 1] if pos else -1
    out = []
    i = tail_idx[-1]
    while i >= 0:
        out.append(i)
        i = prev[i]
    return out[::-1]


def _longest_non_increasing(values) -> list[int]:
    flipped = [-v for v in values]
    tails: list[int] = []          # longest non-decreasing run of the flipped values
    tail_idx: list[int] = []
    prev = [-1] * len(values)
    for i, v in enumerate(flipped):
        pos = bisect_left(tails, v + 1)  # allow equal values to extend a run
        if pos == len(tails):
            tails.append(v)
            tail_idx.append(i)
        else:
            tails[pos] = v
            tail_idx[pos] = i
        prev[i] = tail_idx[pos - 1] if pos else -1
    out = []
    i = tail_idx[-1]
    while i >= 0:
        out.append(i)
        i = prev[i]
    return out[::-1]


def _exact_extract(values, coloring: str) -> tuple[list[int], int]:
    if coloring == "increasing_pairs":
        inc = _longest_strictly_increasing(values)
        dec = _longest_non_increasing(values)
        return (inc, 0) if len(inc) >= len(dec) else (dec, 1)
    counts = Counter(values)
    top_value = min(v for v in counts if counts[v] == max(counts.values()))
    const = [i for i, v in enumerate(values) if v == top_value]
    seen: set[int] = set()
    rainbow = []
    for i, v in enumerate(values):
        if v not in seen:
            seen.add(v)
            rainbow.append(i)
    return (rainbow, 0) if len(rainbow) >= len(const) else (const, 1)


def _kind_of(values, picked, coloring: str, color: int) -> tuple[str, int | None]:
    if coloring == "increasing_pairs":
        if color == 0:
            return KIND_STRICTLY_INCREASING, None
        chosen = [values[i] for i in picked]
        if len(set(chosen)) == 1:
            return KIND_CONSTANT, chosen[0]
        return KIND_NON_INCREASING, None
    if color == 0:
        return KIND_INJECTIVE, None
    return KIND_CONSTANT, values[picked[0]]


def homogeneous_pairs(values, coloring: str = "increasing_pairs") -> HomogeneousResult:
    """Extract a monochromatic index set for the induced pair coloring.

    Deterministic: pivot-partition chain plus an exact search; the larger
    set wins, so the result always has at least ceil(sqrt(N)) indices.
    """
    values = list(values)
    if len(values) < 2:
        raise ValueError("need at least two values")
    pivot_set, pivot_color = _pivot_extract(values, coloring)
    exact_set, exact_color = _exact_extract(values, coloring)
    if len(exact_set) > len(pivot_set):
        picked, color = exact_set, exact_color
    else:
        picked, color = pivot_set, pivot_color
    kind, value = _kind_of(values, picked, coloring, color)
    result = HomogeneousResult(tuple(picked), kind, value)
    assert verify_result(values, result)
    return result


def constant_or_injective(values) -> HomogeneousResult:
    """Pigeonhole dichotomy: a value repeated ceil(sqrt(N)) times, or one
    position per distinct value; either way at least ceil(sqrt(N)) indices."""
    values = list(values)
    n = len(values)
    if n < 1:
        raise ValueError("need at least one value")
    threshold = sqrt_bound(n)
    counts = Counter(values)
    top = max(counts.values())
    if top >= threshold:
        value = min(v for v in counts if counts[v] == top)
        picked = tuple(i for i, v in enumerate(values) if v == value)
        result = HomogeneousResult(picked, KIND_CONSTANT, value)
    else:
        seen: set[int] = set()
        picked_list = []
        for i, v in enumerate(values):
            if v not in seen:
                seen.add(v)
                picked_list.append(i)
        result = HomogeneousResult(tuple(picked_list), KIND_INJECTIVE, None)
    assert len(result.indices) >= threshold
    assert verify_result(values, result)
    return result


def constant_or_increasing(stream, target: int, fuel: int) -> HomogeneousResult | None:
    """Search a stream prefix for a constant or strictly increasing subsequence
    of the target size.

    The dichotomy is a theorem only for total functions on the naturals, so
    exhausting the fuel returns None rather than fabricating a witness.
    After each read the constant check runs before the increasing check.
    """
    if target < 1:
        raise ValueError("target size must be positive")
    if fuel < target:
        raise ValueError("fuel must be at least the target size")
    if callable(stream):
        source = (stream(i) for i in range(fuel))
    else:
        source = iter(stream)
    positions: dict[int, list[int]] = {}
    values: list[int] = []
    tails: list[int] = []
    tail_idx: list[int] = []
    prev: list[int] = []
    for i in range(fuel):
        try:
            v = next(source)
        except StopIteration:
            break
        values.append(v)
        bucket = positions.setdefault(v, [])
        bucket.append(i)
        if len(bucket) >= target:
            result = HomogeneousResult(tuple(bucket[:target]), KIND_CONSTANT, v)
            assert verify_result(values, result)
            return result
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
            tail_idx.append(i)
        else:
            tails[pos] = v
            tail_idx[pos] = i
        prev.append(tail_idx[pos - 1] if pos else -1)
        if len(tails) >= target:
            out = []
            j = tail_idx[target - 1]
            while j >= 0 and len(out) < target:
                out.append(j)
                j = prev[j]
            result = HomogeneousResult(tuple(out[::-1]), KIND_STRICTLY_INCREASING, None)
            assert verify_result(values, result)
            return result
    return None

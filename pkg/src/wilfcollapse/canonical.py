"""
Size-preserving equivalences on the layered and sum-word classes.

Two layered patterns with the same multiset of layers are equivalent, and a
layer of size 2 may be traded for two layers of size 1; the canonical
representative is a partition with no part equal to 2.  Two sum words with
the same multiset of letters are equivalent, and a drop letter b2 may be
traded for a pair of run letters a1 (one on each side of another drop
letter); the canonical representative is a pair of partitions, one for the
drop indices and one for the run indices, with at most one 1 among the runs
and at most one more run than drops.

``rewrite_closure`` computes full equivalence classes, lifting derived
equivalences of standalone subwords into arbitrary contexts, and is the
validation oracle for the canonical maps.  The explicit bijections used to
justify each rule are implemented alongside, built on greedy shortest
prefix/suffix factorization.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .encodings import (
    ClassId,
    Composition,
    SumWord,
    WedgeWord,
    avoiding_elements,
    class_leq,
    size_of,
    sum_word_concat,
    validate_element,
)
from .errors import CapExceededError, NotInvolvedError, PreconditionError


# ---------------------------------------------------------------------------
# Canonical forms

def canonical_partition(comp: Composition) -> tuple[int, ...]:
    """
    Canonical form of a layered pattern: every part 2 becomes 1,1 and the
    parts are sorted weakly decreasing.  Two compositions are equivalent
    exactly when their canonical partitions agree.

    >>> canonical_partition((2, 1, 2))
    (1, 1, 1, 1, 1)
    >>> canonical_partition((3, 2, 1))
    (3, 1, 1, 1)
    """
    parts: list[int] = []
    for p in comp:
        if p == 2:
            parts += [1, 1]
        else:
            parts.append(p)
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class PartitionPair:
    """Canonical form of a sum-word pattern: drop indices and run indices."""

    b_parts: tuple[int, ...]
    a_parts: tuple[int, ...]

    def __post_init__(self):
        if any(v < 2 for v in self.b_parts):
            raise ValueError("drop parts must be at least 2")
        if any(v < 1 for v in self.a_parts):
            raise ValueError("run parts must be at least 1")
        if list(self.b_parts) != sorted(self.b_parts, reverse=True):
            raise ValueError("drop parts must be weakly decreasing")
        if list(self.a_parts) != sorted(self.a_parts, reverse=True):
            raise ValueError("run parts must be weakly decreasing")
        if sum(1 for v in self.a_parts if v == 1) > 1:
            raise ValueError("at most one run part may equal 1")
        if len(self.a_parts) > len(self.b_parts) + 1:
            raise ValueError("too many run parts to interleave")

    @property
    def size(self) -> int:
        return sum(self.b_parts) + sum(self.a_parts)


def canonical_pair(word: SumWord) -> PartitionPair:
    """
    Canonical form of a sum word: pairs of size-1 runs are traded into extra
    b2 letters until at most one remains, then both letter multisets are
    sorted.  Trading in this direction maximizes the drop letters.

    >>> canonical_pair((-1, 3, -1))
    PartitionPair(b_parts=(3, 2), a_parts=())
    """
    validate_element(ClassId.AV_312_321, word)
    b_parts = [v for v in word if v > 0]
    runs = [-v for v in word if v < 0]
    ones = sum(1 for v in runs if v == 1)
    b_parts += [2] * (ones // 2)
    a_parts = sorted((v for v in runs if v > 1), reverse=True)
    if ones % 2:
        a_parts.append(1)
    return PartitionPair(tuple(sorted(b_parts, reverse=True)), tuple(a_parts))


def canonical_key(class_id: ClassId, element) -> tuple:
    """A hashable key constant on each equivalence class of same-size patterns."""
    if class_id is ClassId.AV_312_123:
        a, b, _ = element
        return ("decreasing",) if a == 0 and b == 0 else ("mixed",)
    if class_id is ClassId.AV_312_213:
        return ()
    if class_id is ClassId.AV_312_231:
        return canonical_partition(element)
    pair = canonical_pair(element)
    return (pair.b_parts, pair.a_parts)


def format_canonical_partition(parts: tuple[int, ...]) -> str:
    return "partition:" + ",".join(str(v) for v in parts)


def format_canonical_pair(pair: PartitionPair) -> str:
    b = ",".join(str(v) for v in pair.b_parts)
    a = ",".join(str(v) for v in pair.a_parts)
    return f"pair:b={b};a={a}"


# ---------------------------------------------------------------------------
# Counting canonical forms

def _partitions(n: int, max_part: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _partitions(n - first, first, min_part):
            yield (first,) + rest


def partitions_without_two(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n having no part equal to 2, weakly decreasing."""
    return tuple(p for p in _partitions(n, n) if 2 not in p)


@lru_cache(maxsize=None)
def valid_pairs(n: int) -> tuple[PartitionPair, ...]:
    """All canonical partition pairs of total size n."""
    result = []
    for bsum in range(n + 1):
        for bp in _partitions(bsum, bsum, min_part=2):
            asum = n - bsum
            candidates = list(_partitions(asum, asum, min_part=2))
            if asum >= 1:
                candidates += [
                    p + (1,) for p in _partitions(asum - 1, max(asum - 1, 1), min_part=2)
                ]
            for ap in candidates:
                if len(ap) <= len(bp) + 1:
                    result.append(PartitionPair(bp, ap))
    return tuple(result)


def canonical_class_count(class_id: ClassId, n: int) -> int:
    """Number of equivalence classes among size-n patterns."""
    if n == 0:
        return 1
    if class_id is ClassId.AV_312_123:
        return 1 if n == 1 else 2
    if class_id is ClassId.AV_312_213:
        return 1
    if class_id is ClassId.AV_312_231:
        return len(partitions_without_two(n))
    return len(valid_pairs(n))


# ---------------------------------------------------------------------------
# Rewrite closure (validation oracle)

def _composition_rewrites(w: Composition) -> Iterator[Composition]:
    for i in range(len(w) - 1):
        yield w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
    for i, part in enumerate(w):
        if part == 2:
            yield w[:i] + (1, 1) + w[i + 1 :]
    for i in range(len(w) - 1):
        if w[i] == 1 and w[i + 1] == 1:
            yield w[:i] + (2,) + w[i + 2 :]


def _valid_word(w: SumWord) -> bool:
    return all(not (x < 0 and y < 0) for x, y in zip(w, w[1:]))


def _sum_word_local_rewrites(w: SumWord) -> Iterator[SumWord]:
    n = len(w)
    for i in range(n - 1):
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        if _valid_word(swapped):
            yield swapped
    for i in range(n - 2):
        if w[i] < 0 and w[i + 1] > 0 and w[i + 2] < 0 and w[i] != w[i + 2]:
            yield w[:i] + (w[i + 2], w[i + 1], w[i]) + w[i + 3 :]
    for i in range(n - 1):
        if w[i] == 2 and w[i + 1] > 0:
            candidate = w[:i] + (-1, w[i + 1], -1) + w[i + 2 :]
            if _valid_word(candidate):
                yield candidate
        if (
            i + 2 < n
            and w[i] == -1
            and w[i + 1] > 0
            and w[i + 2] == -1
        ):
            yield w[:i] + (2, w[i + 1]) + w[i + 3 :]


_SUM_WORD_CLOSURES: dict[SumWord, frozenset] = {}


def _sum_word_closure(word: SumWord) -> frozenset:
    """
    Breadth-first congruence closure.  Stepping only through valid words is
    not enough: the contextual rule lifts any equivalence of a standalone
    subword in one step, even when replaying its derivation inside the
    context would pass through words with adjacent run letters.  Subword
    closures are therefore computed recursively (on strictly fewer letters)
    and spliced in whole.
    """
    cached = _SUM_WORD_CLOSURES.get(word)
    if cached is not None:
        return cached
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            candidates = list(_sum_word_local_rewrites(w))
            n = len(w)
            for start in range(n):
                for end in range(start + 1, n + 1):
                    if start == 0 and end == n:
                        continue
                    inner = w[start:end]
                    for replacement in _sum_word_closure(inner):
                        if replacement == inner:
                            continue
                        lifted = w[:start] + replacement + w[end:]
                        if _valid_word(lifted):
                            candidates.append(lifted)
            for r in candidates:
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    result = frozenset(seen)
    for member in result:
        _SUM_WORD_CLOSURES[member] = result
    return result


def _composition_closure(comp: Composition) -> frozenset:
    # part order and the 2 <-> 1,1 trade are unrestricted, so in-place
    # substring rewriting already realizes the full congruence
    seen = {comp}
    frontier = [comp]
    while frontier:
        nxt = []
        for w in frontier:
            for r in _composition_rewrites(w):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def rewrite_closure(class_id: ClassId, element, cap: int = 12) -> frozenset:
    """
    The full equivalence class of an element under the defining rewrite
    rules, including contextual lifts of subword equivalences.  A validation
    oracle, capped by size.
    """
    if class_id not in (ClassId.AV_312_231, ClassId.AV_312_321):
        raise PreconditionError("rewrite closure applies to c3 and c4 only")
    validate_element(class_id, element)
    if size_of(class_id, element) > cap:
        raise CapExceededError(
            f"element size {size_of(class_id, element)} above cap {cap}"
        )
    if class_id is ClassId.AV_312_231:
        return _composition_closure(element)
    return _sum_word_closure(element)


# ---------------------------------------------------------------------------
# Greedy factorization

def _composition_match_end(pattern: Composition, word: Composition) -> int | None:
    if not pattern:
        return 0
    i = 0
    for idx, part in enumerate(word):
        if pattern[i] <= part:
            i += 1
            if i == len(pattern):
                return idx + 1
    return None


def _sum_word_match_end(pattern: SumWord, word: SumWord) -> int | None:
    pos = 0
    n = len(word)
    for letter in pattern:
        if letter > 0:
            while pos < n and not (word[pos] > 0 and word[pos] >= letter):
                pos += 1
            if pos == n:
                return None
            pos += 1
        else:
            need = -letter
            while pos < n and need > 0:
                cap = -word[pos] if word[pos] < 0 else word[pos] - 1
                need -= cap
                pos += 1
            if need > 0:
                return None
    return pos


_MATCH_END = {
    ClassId.AV_312_231: _composition_match_end,
    ClassId.AV_312_321: _sum_word_match_end,
}


def shortest_prefix_end(class_id: ClassId, word, pattern) -> int | None:
    """Length of the shortest prefix of word involving pattern, or None."""
    return _MATCH_END[class_id](tuple(pattern), tuple(word))


def shortest_suffix_start(class_id: ClassId, word, pattern) -> int | None:
    """Start index of the shortest suffix of word involving pattern, or None.

    Involvement is preserved by reversing the letter order of both words
    (the symmetry reflecting through the anti-diagonal fixes every letter),
    so the minimal suffix is found by matching the reversed pattern against
    the reversed word.
    """
    end = _MATCH_END[class_id](tuple(reversed(pattern)), tuple(reversed(word)))
    return None if end is None else len(word) - end


def greedy_factorize(class_id: ClassId, word, prefix_pattern, suffix_pattern):
    """
    Split word into (prefix, middle, suffix) where prefix is the shortest
    prefix involving prefix_pattern and suffix the shortest suffix involving
    suffix_pattern.  Raises NotInvolvedError when no such split exists.
    """
    if class_id not in _MATCH_END:
        raise PreconditionError("factorization applies to c3 and c4 only")
    end = shortest_prefix_end(class_id, word, prefix_pattern)
    start = shortest_suffix_start(class_id, word, suffix_pattern)
    if end is None or start is None:
        raise NotInvolvedError(
            f"{prefix_pattern!r}..{suffix_pattern!r} not involved in {word!r}"
        )
    if end > start:
        raise PreconditionError(
            "shortest prefix and suffix overlap; no disjoint factorization"
        )
    return word[:end], word[end:start], word[start:]


# ---------------------------------------------------------------------------
# Explicit bijections

def wedge_bijection(pi: WedgeWord, tau: WedgeWord, s: WedgeWord) -> WedgeWord:
    """
    The size-preserving bijection from wedge avoiders of pi onto wedge
    avoiders of tau, for patterns of equal size.  Defined recursively: when
    the head of s matches the head of pi, recurse with both pattern heads
    removed, otherwise keep the pattern; the emitted step is flipped exactly
    when the pattern heads disagree.
    """
    if pi is None or tau is None or len(pi) != len(tau):
        raise PreconditionError("patterns must be nonempty and of equal size")
    if class_leq(ClassId.AV_312_213, pi, s):
        raise PreconditionError(f"{s!r} involves the pattern {pi!r}")

    def go(pi: str, tau: str, s: WedgeWord) -> WedgeWord:
        if s is None or s == "":
            return s
        assert pi, "a nonempty avoider always leaves pattern to match"
        head = s[0]
        out = head
        if pi[0] != tau[0]:
            out = "R" if head == "L" else "L"
        if head == pi[0]:
            return out + go(pi[1:], tau[1:], s[1:])
        return out + go(pi, tau, s[1:])

    return go(pi, tau, s)


def swap_parts_bijection(
    P: Composition, a: int, b: int, Q: Composition, S: Composition
) -> Composition:
    """
    Bijection from layered avoiders of P+(a,b)+Q onto avoiders of P+(b,a)+Q:
    avoiders of P..Q are fixed, otherwise the middle factor is reversed.
    """
    pattern = P + (a, b) + Q
    if class_leq(ClassId.AV_312_231, pattern, S):
        raise PreconditionError(f"{S!r} involves the pattern {pattern!r}")
    if not class_leq(ClassId.AV_312_231, P + Q, S):
        return S
    prefix, middle, suffix = greedy_factorize(ClassId.AV_312_231, S, P, Q)
    return prefix + middle[::-1] + suffix


def merge_ones_bijection(P: Composition, Q: Composition, S: Composition) -> Composition:
    """
    Bijection from layered avoiders of P+(2,)+Q onto avoiders of P+(1,1)+Q:
    avoiders of P..Q are fixed, otherwise the middle factor, necessarily a
    block of 1s, collapses to a single part of the same total.
    """
    pattern = P + (2,) + Q
    if class_leq(ClassId.AV_312_231, pattern, S):
        raise PreconditionError(f"{S!r} involves the pattern {pattern!r}")
    if not class_leq(ClassId.AV_312_231, P + Q, S):
        return S
    prefix, middle, suffix = greedy_factorize(ClassId.AV_312_231, S, P, Q)
    assert all(v == 1 for v in middle), "middle of a (2)-avoider is all 1s"
    if not middle:
        return S
    return prefix + (len(middle),) + suffix


def matched_avoider_bijection(class_id: ClassId, old, new) -> Callable:
    """
    Size-preserving bijection between two avoidance sets realized by
    matching elements of equal size in generation order.  Valid whenever the
    two sets are equinumerous by size, which is checked on use.
    """

    def inner(x):
        m = size_of(class_id, x)
        source = avoiding_elements(class_id, old, m)
        target = avoiding_elements(class_id, new, m)
        if len(source) != len(target):
            raise PreconditionError(
                f"avoidance sets differ in size at n={m}: "
                f"{len(source)} vs {len(target)}"
            )
        try:
            return target[source.index(x)]
        except ValueError:
            raise PreconditionError(f"{x!r} does not avoid {old!r}") from None

    return inner


def context_bijection(
    P: SumWord,
    A: SumWord,
    B: SumWord,
    Q: SumWord,
    W: SumWord,
    inner: Callable[[SumWord], SumWord],
) -> SumWord:
    """
    Lift a size-preserving bijection between sum-word avoiders of A and of B
    to one between avoiders of P A Q and of P B Q.  Avoiders of P..Q are
    fixed; otherwise the middle factor is rewritten by the inner bijection.

    Contexts must abut the middle with drop letters: P may not end, and Q
    may not begin, with a run letter, since the rewritten middle could then
    fuse with the context.
    """
    for whole in (P + A + Q, P + B + Q):
        try:
            validate_element(ClassId.AV_312_321, whole)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    if (P and P[-1] < 0) or (Q and Q[0] < 0):
        raise PreconditionError(
            "context must meet the middle with drop letters"
        )
    pattern = P + A + Q
    if class_leq(ClassId.AV_312_321, pattern, W):
        raise PreconditionError(f"{W!r} involves the pattern {pattern!r}")
    if not class_leq(ClassId.AV_312_321, sum_word_concat(P, Q), W):
        return W
    prefix, middle, suffix = greedy_factorize(ClassId.AV_312_321, W, P, Q)
    mapped = inner(middle)
    result = prefix + mapped + suffix
    validate_element(ClassId.AV_312_321, result)
    return result

"""
Structural encodings for the four permutation classes with basis {312, x}.

Each class has a fast native encoding together with a structural order test
that agrees with permutation involvement on decoded elements:

* ``AV_312_123`` -- corner triples ``(a, b, c)``: two decreasing blocks of
  sizes a and b stacked ascending, followed by a decreasing tail of size c
  holding the smallest values.  Decreasing permutations are always written
  ``(0, 0, c)``; otherwise both a and b are positive.
* ``AV_312_213`` -- wedge words: strings over ``L``/``R`` recording how the
  permutation grows from a single point by prepending a new minimum (``L``)
  or appending a new minimum (``R``), outermost step first.  A string of
  length k encodes a permutation of size k + 1; ``None`` stands for the
  empty permutation.
* ``AV_312_231`` -- layered permutations: compositions listing the layer
  sizes left to right.
* ``AV_312_321`` -- sum words: tuples of signed letters.  A negative letter
  ``-i`` is a maximal increasing run ``1 2 .. i``; a positive letter ``j``
  is the block ``2 3 .. j 1``.  Two negative letters are never adjacent
  (maximal runs merge).  In text form letters are written ``a<i>``/``b<j>``.
"""
from __future__ import annotations

import itertools
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Union

from .errors import BasisViolationError, ParseError
from .perms import Perm, direct_sum_all, involves, sum_decompose

Triple = tuple[int, int, int]
WedgeWord = Optional[str]
Composition = tuple[int, ...]
SumWord = tuple[int, ...]
ClassElement = Union[Triple, WedgeWord, Composition, SumWord]


class ClassId(Enum):
    """The four classes, tagged by their basis pairs."""

    AV_312_123 = "c1"
    AV_312_213 = "c2"
    AV_312_231 = "c3"
    AV_312_321 = "c4"

    @property
    def basis(self) -> tuple[Perm, Perm]:
        return {
            ClassId.AV_312_123: ((3, 1, 2), (1, 2, 3)),
            ClassId.AV_312_213: ((3, 1, 2), (2, 1, 3)),
            ClassId.AV_312_231: ((3, 1, 2), (2, 3, 1)),
            ClassId.AV_312_321: ((3, 1, 2), (3, 2, 1)),
        }[self]

    @classmethod
    def from_string(cls, text: str) -> "ClassId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown class {text!r}; expected c1..c4") from None


# ---------------------------------------------------------------------------
# Validation and size

def validate_element(class_id: ClassId, e: ClassElement) -> None:
    if class_id is ClassId.AV_312_123:
        if not (isinstance(e, tuple) and len(e) == 3 and all(v >= 0 for v in e)):
            raise ValueError(f"not a corner triple: {e!r}")
        a, b, _ = e
        if (a == 0) != (b == 0):
            raise ValueError(f"exactly one of a, b is zero in {e!r}")
    elif class_id is ClassId.AV_312_213:
        if e is None:
            return
        if not isinstance(e, str) or any(ch not in "LR" for ch in e):
            raise ValueError(f"not a wedge word: {e!r}")
    elif class_id is ClassId.AV_312_231:
        if not (isinstance(e, tuple) and all(isinstance(v, int) and v >= 1 for v in e)):
            raise ValueError(f"not a composition: {e!r}")
    elif class_id is ClassId.AV_312_321:
        if not (isinstance(e, tuple) and all(isinstance(v, int) and v != 0 for v in e)):
            raise ValueError(f"not a sum word: {e!r}")
        for v in e:
            if v > 0 and v < 2:
                raise ValueError(f"drop letter below 2 in {e!r}")
        for x, y in zip(e, e[1:]):
            if x < 0 and y < 0:
                raise ValueError(f"adjacent run letters in {e!r}")


def size_of(class_id: ClassId, e: ClassElement) -> int:
    if class_id is ClassId.AV_312_123:
        return sum(e)
    if class_id is ClassId.AV_312_213:
        return 0 if e is None else len(e) + 1
    return sum(abs(v) for v in e)


# ---------------------------------------------------------------------------
# Generation

def _sum_words(n: int, after_run: bool = False) -> Iterator[SumWord]:
    if n == 0:
        yield ()
        return
    if not after_run:
        for i in range(1, n + 1):
            for rest in _sum_words(n - i, True):
                yield (-i,) + rest
    for j in range(2, n + 1):
        for rest in _sum_words(n - j, False):
            yield (j,) + rest


def _compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def generate(class_id: ClassId, n: int) -> tuple[ClassElement, ...]:
    """
    All class members of size n in the native encoding, lexicographically
    ordered by encoding, without duplicates.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if class_id is ClassId.AV_312_123:
        if n == 0:
            return ((0, 0, 0),)
        corners = [
            (a, b, n - a - b)
            for a in range(1, n)
            for b in range(1, n - a + 1)
        ]
        return tuple(sorted([(0, 0, n)] + corners))
    if class_id is ClassId.AV_312_213:
        if n == 0:
            return (None,)
        return tuple("".join(s) for s in itertools.product("LR", repeat=n - 1))
    if class_id is ClassId.AV_312_231:
        return tuple(sorted(_compositions(n)))
    return tuple(sorted(_sum_words(n)))


# ---------------------------------------------------------------------------
# Decoding to permutations

def _triple_to_perm(e: Triple) -> Perm:
    a, b, c = e
    first = range(c + a, c, -1)
    second = range(c + a + b, c + a, -1)
    tail = range(c, 0, -1)
    return tuple(first) + tuple(second) + tuple(tail)


def _wedge_to_perm(e: WedgeWord) -> Perm:
    if e is None:
        return ()
    perm: Perm = (1,)
    for step in reversed(e):
        if step == "L":
            perm = (1,) + tuple(v + 1 for v in perm)
        else:
            perm = tuple(v + 1 for v in perm) + (1,)
    return perm


def _composition_to_perm(e: Composition) -> Perm:
    return direct_sum_all(tuple(range(part, 0, -1)) for part in e)


def _letter_to_perm(letter: int) -> Perm:
    if letter < 0:
        return tuple(range(1, -letter + 1))
    return tuple(range(2, letter + 1)) + (1,)


def _sum_word_to_perm(e: SumWord) -> Perm:
    return direct_sum_all(_letter_to_perm(letter) for letter in e)


def to_permutation(class_id: ClassId, e: ClassElement) -> Perm:
    validate_element(class_id, e)
    if class_id is ClassId.AV_312_123:
        return _triple_to_perm(e)
    if class_id is ClassId.AV_312_213:
        return _wedge_to_perm(e)
    if class_id is ClassId.AV_312_231:
        return _composition_to_perm(e)
    return _sum_word_to_perm(e)


# ---------------------------------------------------------------------------
# Encoding from permutations

def _check_basis(class_id: ClassId, p: Perm) -> None:
    for basis_element in class_id.basis:
        if involves(basis_element, p):
            raise BasisViolationError(p, basis_element)


def _is_decreasing(p: Perm) -> bool:
    return all(x > y for x, y in zip(p, p[1:]))


def _triple_from_perm(p: Perm) -> Triple:
    n = len(p)
    if n == 0 or _is_decreasing(p):
        return (0, 0, n)
    c = 0
    while c < n and p[n - 1 - c] == c + 1:
        c += 1
    body = tuple(v - c for v in p[: n - c])
    ascent = next(i for i in range(len(body) - 1) if body[i] < body[i + 1])
    a = ascent + 1
    b = len(body) - a
    return (a, b, c)


def _wedge_from_perm(p: Perm) -> WedgeWord:
    if not p:
        return None
    steps = []
    current = p
    while len(current) > 1:
        if current[0] == 1:
            steps.append("L")
            current = tuple(v - 1 for v in current[1:])
        else:
            steps.append("R")
            current = tuple(v - 1 for v in current[:-1])
    return "".join(steps)


def _composition_from_perm(p: Perm) -> Composition:
    return tuple(len(c) for c in sum_decompose(p))


def _sum_word_from_perm(p: Perm) -> SumWord:
    letters: list[int] = []
    run = 0
    for component in sum_decompose(p):
        if component == (1,):
            run += 1
            continue
        if run:
            letters.append(-run)
            run = 0
        letters.append(len(component))
    if run:
        letters.append(-run)
    return tuple(letters)


def from_permutation(class_id: ClassId, p: Perm) -> ClassElement:
    """
    Encode a permutation in the class-native form; inverse of to_permutation.

    Raises BasisViolationError, naming the violated basis element, when p
    lies outside the class.
    """
    _check_basis(class_id, p)
    if class_id is ClassId.AV_312_123:
        e: ClassElement = _triple_from_perm(p)
    elif class_id is ClassId.AV_312_213:
        e = _wedge_from_perm(p)
    elif class_id is ClassId.AV_312_231:
        e = _composition_from_perm(p)
    else:
        e = _sum_word_from_perm(p)
    assert to_permutation(class_id, e) == p
    return e


# ---------------------------------------------------------------------------
# Class-specific order tests

def _triple_leq(x: Triple, y: Triple) -> bool:
    a, b, c = x
    if a == 0 and b == 0:
        return c <= max(y[0], y[1]) + y[2]
    return a <= y[0] and b <= y[1] and c <= y[2]


def _wedge_leq(x: WedgeWord, y: WedgeWord) -> bool:
    # The recursive order rules on wedges amount to: x is involved in y
    # exactly when the step string of x is a subsequence of that of y.
    if x is None:
        return True
    if y is None:
        return False
    it = iter(y)
    return all(step in it for step in x)


def _composition_leq(x: Composition, y: Composition) -> bool:
    # Subword domination, matched greedily left to right.
    i = 0
    k = len(x)
    for part in y:
        if i < k and x[i] <= part:
            i += 1
    return i == k


def letter_capacity(letter: int) -> int:
    """Length of the longest increasing run a single letter contributes."""
    return -letter if letter < 0 else letter - 1


def _sum_word_leq(x: SumWord, y: SumWord) -> bool:
    # Greedy scan.  A drop letter of the pattern must embed in a single drop
    # letter of the target with index at least as large; a run letter may
    # spread over several target letters, consuming the longest increasing
    # run each provides.  A partially consumed target letter cannot also
    # host the next pattern letter, so the scan always moves past it.
    pos = 0
    n = len(y)
    for letter in x:
        if letter > 0:
            while pos < n and not (y[pos] > 0 and y[pos] >= letter):
                pos += 1
            if pos == n:
                return False
            pos += 1
        else:
            need = -letter
            while pos < n and need > 0:
                need -= letter_capacity(y[pos])
                pos += 1
            if need > 0:
                return False
    return True


_LEQ = {
    ClassId.AV_312_123: _triple_leq,
    ClassId.AV_312_213: _wedge_leq,
    ClassId.AV_312_231: _composition_leq,
    ClassId.AV_312_321: _sum_word_leq,
}


def class_leq(class_id: ClassId, x: ClassElement, y: ClassElement) -> bool:
    """Structural involvement test; agrees with involves() on decoded elements."""
    return _LEQ[class_id](x, y)


def leq_function(class_id: ClassId):
    """The raw order test for a class, for tight counting loops."""
    return _LEQ[class_id]


def avoiding_elements(class_id: ClassId, pattern: ClassElement, n: int) -> tuple:
    """Class members of size n avoiding the given pattern, in generation order."""
    leq = _LEQ[class_id]
    return tuple(e for e in generate(class_id, n) if not leq(pattern, e))


def composition_prefix_in_letter(prefix: tuple, letter: int) -> bool:
    """Oracle for the generic greedy word scan over composition letters."""
    if len(prefix) > 1:
        return False
    return not prefix or prefix[0] <= letter


def sum_word_capacity(word: SumWord) -> int:
    """Longest increasing subsequence of the decoded permutation."""
    return sum(letter_capacity(letter) for letter in word)


def sum_word_concat(x: SumWord, y: SumWord) -> SumWord:
    """Concatenate two sum words, merging runs that meet at the junction."""
    if x and y and x[-1] < 0 and y[0] < 0:
        return x[:-1] + (x[-1] + y[0],) + y[1:]
    return x + y


# ---------------------------------------------------------------------------
# Cover relations for corner triples

def triple_covers(
    x: Triple,
    n_cap: int,
    avoiding: Triple | None = None,
) -> tuple[Triple, ...]:
    """
    Minimal elements strictly above x, searched up to size n_cap.

    When ``avoiding`` is given the poset is restricted to the members that
    avoid it, where covers may skip sizes; n_cap bounds the search.
    """
    validate_element(ClassId.AV_312_123, x)
    above = []
    for m in range(size_of(ClassId.AV_312_123, x) + 1, n_cap + 1):
        for e in generate(ClassId.AV_312_123, m):
            if avoiding is not None and _triple_leq(avoiding, e):
                continue
            if _triple_leq(x, e):
                above.append(e)
    return tuple(
        e
        for e in above
        if not any(f != e and _triple_leq(f, e) for f in above)
    )


# ---------------------------------------------------------------------------
# Text formats

def format_element(class_id: ClassId, e: ClassElement) -> str:
    validate_element(class_id, e)
    if class_id is ClassId.AV_312_123:
        return "t:{},{},{}".format(*e)
    if class_id is ClassId.AV_312_213:
        return "e" if e is None else e
    if class_id is ClassId.AV_312_231:
        return "+".join(str(v) for v in e) if e else "e"
    if not e:
        return "e"
    return " ".join(f"a{-v}" if v < 0 else f"b{v}" for v in e)


def parse_element(class_id: ClassId, text: str) -> ClassElement:
    raw = text.strip()
    if class_id is ClassId.AV_312_123:
        if raw == "e":
            return (0, 0, 0)
        if not raw.startswith("t:"):
            raise ParseError("expected 't:a,b,c'", text, 0)
        parts = raw[2:].split(",")
        if len(parts) != 3 or not all(p.strip().isdigit() for p in parts):
            raise ParseError("expected three non-negative integers", text, 2)
        e = tuple(int(p) for p in parts)
        try:
            validate_element(class_id, e)
        except ValueError as exc:
            raise ParseError(str(exc), text, 2) from None
        return e
    if class_id is ClassId.AV_312_213:
        if raw == "e":
            return None
        for i, ch in enumerate(raw):
            if ch not in "LR":
                raise ParseError("expected only L and R", text, i)
        return raw
    if class_id is ClassId.AV_312_231:
        if raw == "e" or raw == "":
            return ()
        parts = raw.split("+")
        pos = 0
        values = []
        for chunk in parts:
            piece = chunk.strip()
            if not piece.isdigit() or int(piece) < 1:
                raise ParseError("expected a positive layer size", text, pos)
            values.append(int(piece))
            pos += len(chunk) + 1
        return tuple(values)
    if raw == "e" or raw == "":
        return ()
    letters = []
    pos = 0
    for chunk in raw.split():
        if len(chunk) < 2 or chunk[0] not in "ab" or not chunk[1:].isdigit():
            raise ParseError("expected letters like a2 or b3", text, pos)
        value = int(chunk[1:])
        if chunk[0] == "a":
            if value < 1:
                raise ParseError("run letter needs index >= 1", text, pos)
            letters.append(-value)
        else:
            if value < 2:
                raise ParseError("drop letter needs index >= 2", text, pos)
            letters.append(value)
        pos += len(chunk) + 1
    word = tuple(letters)
    try:
        validate_element(class_id, word)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None
    return word

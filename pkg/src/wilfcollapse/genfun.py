"""
Exact generating functions for the four classes and their principal
subclasses, the polynomials counting sum words by longest increasing
subsequence, and the real roots used to separate equivalence classes.

The layered recursion peels the first layer of the pattern: a word avoiding
a pattern starting with layer a either uses layers below a throughout, or
uses layers below a, then one layer of size at least a, then a tail avoiding
the rest of the pattern.

The sum-word involvement recursion peels the leading letter.  Peeling a drop
letter b_j is exact for any tail.  Peeling a run letter a_i uses the minimal
prefix hosting an increasing run of length i; the letter after that prefix
may not fuse with it, so the prefix generating function is split by the type
of its final letter before multiplying.  The naive product form, which skips
that split, is also provided: it factors through the run-count polynomials
and therefore vanishes at their roots, but it overcounts words with a run
letter adjacent to the junction and is kept for diagnosis only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .encodings import ClassId, Composition, SumWord, validate_element
from .errors import AmbiguousPoleError, PreconditionError
from .series import ONE, Poly, RationalGF, T

_ONE_GF = RationalGF.of(ONE)
_ONE_MINUS_T = Poly.of(1, -1)
_GEOM = RationalGF(ONE, _ONE_MINUS_T)  # 1/(1-t)


@lru_cache(maxsize=None)
def class_gf(class_id: ClassId) -> RationalGF:
    """Generating function of the whole class."""
    if class_id is ClassId.AV_312_123:
        one_minus_t = _ONE_MINUS_T
        cubic = one_minus_t * one_minus_t * one_minus_t
        return RationalGF(ONE, one_minus_t) + RationalGF(Poly.of(0, 0, 1), cubic)
    return RationalGF.of(1) + RationalGF(T, Poly.of(1, -2))


def layered_denominator(a: int) -> Poly:
    """The polynomial 1 - t - t^2 - ... - t^(a-1)."""
    return Poly.of(1, *([-1] * (a - 1)))


@lru_cache(maxsize=None)
def avoid_gf_layered(pattern: Composition) -> RationalGF:
    """
    Generating function of the layered permutations avoiding a composition
    pattern.  The empty pattern is avoided by nothing, so its value is 0.
    """
    validate_element(ClassId.AV_312_231, pattern)
    if not pattern:
        return RationalGF.of(0)
    a, rest = pattern[0], pattern[1:]
    head = RationalGF(ONE, layered_denominator(a))
    tail = RationalGF(Poly.monomial(a), _ONE_MINUS_T) * avoid_gf_layered(rest)
    return head * (_ONE_GF + tail)


# ---------------------------------------------------------------------------
# Polynomials counting sum words by longest increasing run

@lru_cache(maxsize=None)
def lis_count_poly(n: int) -> Poly:
    """
    Generating polynomial of the class members whose longest increasing
    subsequence has length exactly n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    if n == 1:
        return Poly.of(0, 1, 1)
    step = Poly.of(0, 2, 1)
    tsq = Poly.monomial(2)
    return step * lis_count_poly(n - 1) - tsq * lis_count_poly(n - 2)


@lru_cache(maxsize=None)
def reduced_lis_poly(n: int) -> Poly:
    """lis_count_poly(n) divided by t**n; degree n with constant term 1."""
    p = lis_count_poly(n)
    quot, rem = p.divmod(Poly.monomial(n))
    assert rem.is_zero(), "lowest power of the run-count polynomial is n"
    return quot


# ---------------------------------------------------------------------------
# Sum-word involvement generating functions

def _drop_context_gf(j: int) -> RationalGF:
    """GF of words whose drop letters all have index below j: (1-t)/(1-2t+t^j)."""
    den = Poly.of(1, -2) + Poly.monomial(j)
    return RationalGF(_ONE_MINUS_T, den)


def _drop_context_gf_bstart(j: int) -> RationalGF:
    """Same, restricted to words that are empty or start with a drop letter."""
    den = Poly.of(1, -2) + Poly.monomial(j)
    return RationalGF(_ONE_MINUS_T * _ONE_MINUS_T, den)


def _letters_gf(j: int) -> RationalGF:
    """GF of a single drop letter of index at least j: t^j/(1-t)."""
    return RationalGF(Poly.monomial(j), _ONE_MINUS_T)


def _bounded_words(cap_max: int):
    """
    All valid sum words with total increasing-run capacity at most cap_max,
    as (size, capacity, last_letter_sign) triples.  Finite, since every
    letter contributes capacity.
    """
    out = [(0, 0, 0)]
    frontier = [(0, 0, 0)]
    while frontier:
        nxt = []
        for size, cap, last in frontier:
            if last >= 0:
                for k in range(1, cap_max - cap + 1):
                    nxt.append((size + k, cap + k, -1))
            for j in range(2, cap_max - cap + 2):
                nxt.append((size + j, cap + j - 1, 1))
        out += nxt
        frontier = nxt
    return out


@lru_cache(maxsize=None)
def _run_prefix_gfs(i: int) -> tuple[RationalGF, RationalGF]:
    """
    Generating functions of the minimal prefixes hosting an increasing run
    of length i, split by the type of their final letter (run, drop).  Their
    sum is lis_count_poly(i)/(1-t).
    """
    ends_run = Poly(())
    ends_drop = Poly(())
    for size, cap, last in _bounded_words(i - 1):
        if last >= 0:
            # only words not ending in a run letter may precede the final run
            ends_run = ends_run + Poly.monomial(size + (i - cap))
        ends_drop = ends_drop + Poly.monomial(size + max(2, i + 1 - cap))
    geom = _GEOM
    return (
        RationalGF(ends_run, ONE) * geom,
        RationalGF(ends_drop, ONE) * geom,
    )


@lru_cache(maxsize=None)
def involve_gf_sum_word(word: SumWord) -> RationalGF:
    """
    Generating function of the class members involving the given sum word.
    Exact: expansions match brute-force counts.
    """
    validate_element(ClassId.AV_312_321, word)
    if not word:
        return class_gf(ClassId.AV_312_321)
    head, rest = word[0], word[1:]
    if head > 0:
        return _drop_context_gf(head) * _letters_gf(head) * involve_gf_sum_word(rest)
    i = -head
    if not rest:
        total = class_gf(ClassId.AV_312_321)
        for k in range(i):
            total = total - RationalGF.of(lis_count_poly(k))
        return total
    j = rest[0]
    assert j > 0, "a valid word never has two adjacent run letters"
    ends_run, ends_drop = _run_prefix_gfs(i)
    bridge = ends_run * _drop_context_gf_bstart(j) + ends_drop * _drop_context_gf(j)
    return bridge * _letters_gf(j) * involve_gf_sum_word(rest[1:])


def avoid_gf_sum_word(word: SumWord) -> RationalGF:
    """Generating function of the class members avoiding the given sum word."""
    return class_gf(ClassId.AV_312_321) - involve_gf_sum_word(word)


def involve_gf_product_form(word: SumWord) -> RationalGF:
    """
    The order-independent product form of the involvement GF: one factor per
    letter.  It factors through lis_count_poly for every run letter, hence
    vanishes at the corresponding reduced-polynomial roots, but it is NOT
    exact: it overcounts whenever a run letter abuts the minimal prefix of
    the next letter.  Diagnostic use only.
    """
    validate_element(ClassId.AV_312_321, word)
    result = class_gf(ClassId.AV_312_321)
    for letter in word:
        if letter > 0:
            result = result * _drop_context_gf(letter) * _letters_gf(letter)
        else:
            result = result * RationalGF(lis_count_poly(-letter), _ONE_MINUS_T)
    return result


def special_pair_gfs(k: int) -> tuple[RationalGF, RationalGF]:
    """
    The avoidance GFs of the patterns b2 b_k and a1 b_k a1.  The two are
    equal as rational functions for every k >= 2.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    return avoid_gf_sum_word((2, k)), avoid_gf_sum_word((-1, k, -1))


# ---------------------------------------------------------------------------
# Real roots

@dataclass(frozen=True)
class RootValue:
    value: float
    kind: str  # "layered" or "lis"
    index: int


def _bisect(f, lo: float, hi: float, tol: float) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return (lo + hi) / 2


def layered_root(a: int, tol: float = 1e-12) -> RootValue:
    """
    Least positive zero of 1 - t - ... - t^(a-1).  Exactly 1 for a = 2 and
    strictly decreasing toward 1/2 as a grows.
    """
    if a < 2:
        raise PreconditionError("a must be at least 2")
    if a == 2:
        return RootValue(1.0, "layered", a)
    poly = layered_denominator(a)
    # Strictly decreasing on (0, 1], positive at 0 and negative at 1.
    value = _bisect(lambda x: poly.eval(x), 0.0, 1.0, tol)
    return RootValue(value, "layered", a)


def lis_root(n: int, tol: float = 1e-12) -> RootValue:
    """
    Greatest real zero of the reduced run-count polynomial of index n.
    Exactly -1 for n = 1; in (-1/2, 0) and strictly increasing for n >= 2.
    Found by a downward sign-change scan on [-1, 0) followed by bisection.
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n == 1:
        return RootValue(-1.0, "lis", n)
    poly = reduced_lis_poly(n)
    step = 1.0 / 1024.0
    x = 0.0
    fx = poly.eval(0.0)
    while x > -1.0 - step:
        nxt = x - step
        fn = poly.eval(nxt)
        if fn == 0:
            return RootValue(nxt, "lis", n)
        if (fx > 0) != (fn > 0):
            value = _bisect(poly.eval, nxt, x, tol)
            return RootValue(value, "lis", n)
        x, fx = nxt, fn
    raise ArithmeticError(f"no sign change found for index {n}")


# ---------------------------------------------------------------------------
# Pole and zero checks

def classify_pole(partition: tuple[int, ...], a: int, tol: float = 1e-9) -> str:
    """
    Behaviour of the layered avoidance GF of a partition pattern at the
    least positive layered root for a: "finite" when the reduced denominator
    stays away from zero there, "infinite" when it vanishes while the
    numerator does not.
    """
    if a <= 2:
        raise PreconditionError("a must be greater than 2")
    if list(partition) != sorted(partition, reverse=True):
        raise PreconditionError("pattern must be weakly decreasing")
    gf = avoid_gf_layered(tuple(partition))
    r = layered_root(a).value
    num = abs(gf.num.eval(r))
    den = abs(gf.den.eval(r))
    if den < tol and num < tol:
        raise AmbiguousPoleError(
            f"both numerator ({num:.2e}) and denominator ({den:.2e}) vanish"
        )
    return "infinite" if den < tol else "finite"


@dataclass(frozen=True)
class ZeroReport:
    """Evaluations of an involvement GF at the run-count roots."""

    word: SumWord
    run_index: int
    root: float
    value_at_root: float
    higher: tuple[tuple[int, float, float], ...]  # (index, root, value)
    zero_within_tol: bool
    higher_nonzero: bool


def product_form_vanishes_at(word: SumWord, n: int) -> bool:
    """
    Exact test that the product-form involvement GF vanishes at every root
    of the reduced run-count polynomial of index n, by polynomial
    divisibility of its numerator.  Avoids the float fragility of point
    evaluation: the values scale like r**size and sink below any fixed
    tolerance as the root index grows.
    """
    numerator = involve_gf_product_form(word).num
    return numerator.divmod(reduced_lis_poly(n))[1].is_zero()


def zero_report(
    word: SumWord,
    tol: float = 1e-6,
    span: int = 3,
    use_product_form: bool = False,
) -> ZeroReport:
    """
    Evaluate the involvement GF of a word at the root for its largest run
    letter and at the next few larger indices.  The word must contain a run
    letter of index at least 2.
    """
    validate_element(ClassId.AV_312_321, word)
    run_indices = [-v for v in word if v < 0 and v <= -2]
    if not run_indices:
        raise PreconditionError("word has no run letter of index >= 2")
    n = max(run_indices)
    gf = involve_gf_product_form(word) if use_product_form else involve_gf_sum_word(word)
    rn = lis_root(n).value
    value = float(gf.eval(rn))
    higher = []
    for m in range(n + 1, n + span + 1):
        rm = lis_root(m).value
        higher.append((m, rm, float(gf.eval(rm))))
    return ZeroReport(
        word=word,
        run_index=n,
        root=rn,
        value_at_root=value,
        higher=tuple(higher),
        zero_within_tol=abs(value) < tol,
        higher_nonzero=all(abs(v) > tol for _, _, v in higher),
    )


# ---------------------------------------------------------------------------
# Chebyshev identity

def chebyshev_identity_holds(n: int) -> bool:
    """
    Check, as exact polynomials, that the reduced run-count polynomial of
    index n equals (-1)^n times the Chebyshev polynomial U_{2n} under the
    substitution x^2 = -t/4.  The sign alternates: the raw identity without
    it already fails at n = 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    # With x^2 = -t/4: U_{2k}(x) is a polynomial even(t) and U_{2k+1}(x) is
    # x * odd(t); the Chebyshev recurrence becomes the two steps below.
    even = ONE
    odd = Poly.of(2)
    for m in range(2, 2 * n + 1):
        if m % 2 == 0:
            even = odd.shift(1).scale(Fraction(-1, 2)) - even
        else:
            odd = even.scale(2) - odd
    expected = even.scale((-1) ** n)
    return reduced_lis_poly(n) == expected

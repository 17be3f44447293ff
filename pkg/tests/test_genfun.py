import math

import pytest

from wilfcollapse.encodings import ClassId, generate, leq_function, to_permutation
from wilfcollapse.errors import PreconditionError
from wilfcollapse.genfun import (
    avoid_gf_layered,
    avoid_gf_sum_word,
    chebyshev_identity_holds,
    class_gf,
    classify_pole,
    involve_gf_product_form,
    involve_gf_sum_word,
    layered_denominator,
    layered_root,
    lis_count_poly,
    lis_root,
    product_form_vanishes_at,
    reduced_lis_poly,
    special_pair_gfs,
    zero_report,
)
from wilfcollapse.series import ONE, Poly, RationalGF

C3 = ClassId.AV_312_231
C4 = ClassId.AV_312_321


def brute_avoider_counts(cid, pattern, depth):
    leq = leq_function(cid)
    return tuple(
        sum(1 for e in generate(cid, m) if not leq(pattern, e))
        for m in range(depth + 1)
    )


def test_class_gfs():
    assert class_gf(C4).expand(5).integers() == (1, 1, 2, 4, 8, 16)
    assert class_gf(ClassId.AV_312_123).expand(6).integers() == (1, 1, 2, 4, 7, 11, 16)


def test_layered_denominator():
    assert layered_denominator(2) == Poly.of(1, -1)
    assert layered_denominator(4) == Poly.of(1, -1, -1, -1)


def test_avoid_gf_layered_closed_forms():
    geom = RationalGF(ONE, Poly.of(1, -1))
    assert avoid_gf_layered((2,)) == geom
    assert avoid_gf_layered((1, 1)) == geom
    assert avoid_gf_layered((1,)) == RationalGF.of(1)
    assert avoid_gf_layered(()) == RationalGF.of(0)


@pytest.mark.parametrize("n", range(1, 6))
def test_avoid_gf_layered_matches_brute_force(n):
    for pattern in generate(C3, n):
        expansion = avoid_gf_layered(pattern).expand(12).integers()
        assert expansion == brute_avoider_counts(C3, pattern, 12), pattern


@pytest.mark.parametrize("n", range(1, 6))
def test_avoid_gf_sum_word_matches_brute_force(n):
    for pattern in generate(C4, n):
        expansion = avoid_gf_sum_word(pattern).expand(12).integers()
        assert expansion == brute_avoider_counts(C4, pattern, 12), pattern


def test_involve_gf_base_case():
    assert involve_gf_sum_word(()) == class_gf(C4)


def test_product_form_vanishes_but_overcounts():
    # the product form factors through the run-count polynomials, so it is
    # zero at their roots; the exact involvement GF is not, because the
    # product form overcounts words with a run letter at a junction
    exact = involve_gf_sum_word((-2,))
    product = involve_gf_product_form((-2,))
    assert exact.expand(4).integers() == (0, 0, 1, 4, 8)
    assert product.expand(4).integers() != exact.expand(4).integers()
    r2 = lis_root(2).value
    assert abs(product.eval(r2)) < 1e-9
    assert abs(exact.eval(r2)) > 1e-3


def test_leading_layer_cancellation():
    # prepending the same layer preserves equality and inequality of GFs
    pairs = [((1, 1), (2,), True), ((3,), (2, 1), False), ((2, 2), (1, 1, 2), True)]
    for left, right, equal in pairs:
        assert (avoid_gf_layered(left) == avoid_gf_layered(right)) == equal
        for a in range(1, 5):
            assert (
                avoid_gf_layered((a,) + left) == avoid_gf_layered((a,) + right)
            ) == equal


def test_two_drop_avoidance_recursion():
    # F for the pattern (b2, bk) satisfies F = 1/(1-t) + t^2/(1-t)^2 * F(bk)
    geom = RationalGF(ONE, Poly.of(1, -1))
    ratio = RationalGF(Poly.monomial(2), Poly.of(1, -2, 1))
    for k in range(2, 7):
        assert avoid_gf_sum_word((2, k)) == geom + ratio * avoid_gf_sum_word((k,))


def test_special_pair_identity():
    for k in range(2, 9):
        f, g = special_pair_gfs(k)
        assert f == g, k
    f, g = special_pair_gfs(5)
    assert f.expand(20).coeffs == g.expand(20).coeffs
    with pytest.raises(PreconditionError):
        special_pair_gfs(1)


# ---------------------------------------------------------------------------
# Run-count polynomials

def lis_length(perm):
    if not perm:
        return 0
    best = [1] * len(perm)
    for i, v in enumerate(perm):
        for j in range(i):
            if perm[j] < v:
                best[i] = max(best[i], best[j] + 1)
    return max(best)


def test_lis_poly_examples():
    assert lis_count_poly(0) == ONE
    assert lis_count_poly(1) == Poly.of(0, 1, 1)
    assert lis_count_poly(2) == Poly.of(0, 0, 1, 3, 1)
    assert reduced_lis_poly(1) == Poly.of(1, 1)


@pytest.mark.parametrize("n", range(0, 5))
def test_lis_poly_counts_by_longest_run(n):
    counts = {}
    for m in range(0, 11):
        for w in generate(C4, m):
            length = lis_length(to_permutation(C4, w))
            if length == n:
                counts[m] = counts.get(m, 0) + 1
    poly = lis_count_poly(n)
    for m in range(0, 11):
        assert poly.coefficient(m) == counts.get(m, 0), (n, m)


def test_lis_poly_degree_window():
    for n in range(1, 9):
        p = lis_count_poly(n)
        assert p.degree == 2 * n
        assert p.coefficient(n) != 0
        assert all(p.coefficient(k) == 0 for k in range(n))


# ---------------------------------------------------------------------------
# Roots

def test_lis_roots():
    assert lis_root(1).value == -1.0
    expected = (-3 + math.sqrt(5)) / 2
    assert abs(lis_root(2).value - expected) < 1e-9
    values = [lis_root(n).value for n in range(2, 11)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(-0.5 < v < 0 for v in values)
    with pytest.raises(PreconditionError):
        lis_root(0)


def test_layered_roots():
    assert layered_root(2).value == 1.0
    assert abs(layered_root(3).value - (math.sqrt(5) - 1) / 2) < 1e-9
    assert 0.5 < layered_root(10).value < 0.52
    values = [layered_root(a).value for a in range(2, 11)]
    assert all(a > b for a, b in zip(values, values[1:]))
    with pytest.raises(PreconditionError):
        layered_root(1)


# ---------------------------------------------------------------------------
# Pole classification and zero reports

def test_classify_pole_examples():
    assert classify_pole((2, 1), 3) == "finite"
    assert classify_pole((3, 1), 3) == "infinite"
    assert classify_pole((1,), 3) == "finite"
    with pytest.raises(PreconditionError):
        classify_pole((2, 1), 2)
    with pytest.raises(PreconditionError):
        classify_pole((1, 2), 3)


def test_zero_report_mechanics():
    with pytest.raises(PreconditionError):
        zero_report((2, -1))  # no run letter of index >= 2
    report = zero_report((-2,), tol=1e-6)
    assert report.run_index == 2
    assert report.higher_nonzero
    # the exact involvement GF does not vanish at the root; the claimed
    # vanishing holds only for the diagnostic product form
    assert not report.zero_within_tol
    assert abs(report.value_at_root - 0.019525612840) < 1e-9
    product_report = zero_report((-2,), tol=1e-6, use_product_form=True)
    assert product_report.zero_within_tol
    assert product_report.higher_nonzero


def test_product_form_zero_pattern_across_words():
    # for the product form the vanishing index is exactly the largest run
    # letter; checked by exact polynomial divisibility, since the values at
    # the higher roots shrink like powers of the root and defeat any fixed
    # float tolerance
    for word in [(-2,), (-2, 2), (2, -3), (-2, 3, -1), (-3, 2, -1)]:
        n = max(-v for v in word if v < 0)
        assert product_form_vanishes_at(word, n), word
        for m in range(n + 1, n + 4):
            assert not product_form_vanishes_at(word, m), (word, m)


def test_drop_words_nonzero_at_roots():
    # involvement GFs of words with no run letter of index >= 2 stay nonzero
    for word in [(2,), (3,), (2, 2), (2, -1, 2), (4, -1)]:
        gf = involve_gf_sum_word(word)
        for n in range(2, 6):
            assert abs(gf.eval(lis_root(n).value)) > 1e-6, (word, n)


def test_chebyshev_identity():
    assert chebyshev_identity_holds(0)
    assert chebyshev_identity_holds(1)
    for n in range(2, 11):
        assert chebyshev_identity_holds(n), n

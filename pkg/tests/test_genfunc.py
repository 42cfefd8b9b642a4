import pytest
from hypothesis import given, settings, strategies as st

from coprimeseq.genfunc import (
    SeriesExpansion,
    clear_denominator,
    expand_gf,
    gf_vs_sequence,
    numerator_poly,
    series_csv,
)
from coprimeseq.numtheory import euler_set, factor
from coprimeseq.sequence import eval_closed, sequence_params, shift_between
from oracles import coprime_ranks, poly_mul, series_by_division


@pytest.mark.parametrize(
    "a, N, expected",
    [(10, 5, [11, 13, 17, 19, 21]), (2, 4, [3, 5, 7, 9]), (6, 6, [7, 11, 13, 17, 19, 23])],
)
def test_expand_gf_examples(a, N, expected):
    assert list(expand_gf(a, N).terms) == expected


def _printed_form(a, N):
    """G(t) = a t/((t-1)(t^phi-1)) - (1/(t^phi-1)) sum a_v t^v, term by term."""
    m = factor(a)
    t_phi_minus_1 = [-1] + [0] * (m.phi - 1) + [1]
    first = series_by_division([0, a], poly_mul([-1, 1], t_phi_minus_1), N)
    tot = [0] + list(euler_set(a))
    second = series_by_division(tot, t_phi_minus_1, N)
    return [x - y for x, y in zip(first, second)][1:]


@pytest.mark.parametrize("a", [2, 3, 4, 6, 9, 10, 12, 30, 36])
def test_printed_signs_expand_to_the_sequence(a):
    N = 60
    ref = coprime_ranks(a, 1, N)
    assert _printed_form(a, N) == [ref[n] for n in range(1, N + 1)]
    assert list(expand_gf(a, N).terms) == [ref[n] for n in range(1, N + 1)]


def test_numerator_poly():
    # a t + (1 - t)(t + 3t^2 + 7t^3 + 9t^4)
    assert numerator_poly(10) == [0, 11, 2, 4, 2, -9]


@given(st.sampled_from([2, 3, 4, 5, 6, 8, 10, 12, 18, 30, 210, 1024]), st.integers(min_value=1, max_value=400))
@settings(max_examples=60)
def test_coefficients_are_positive_integers_matching_sequence(a, N):
    s = expand_gf(a, N)
    assert s.N == N
    assert all(isinstance(c, int) and c > 0 for c in s.terms)
    p = sequence_params(a)
    assert list(s.terms) == [eval_closed(p, n) for n in range(1, N + 1)]


@pytest.mark.parametrize("a", [2, 4, 10, 12, 30, 1024])
def test_clear_denominator(a):
    ok, deg = clear_denominator(expand_gf(a, 3000))
    assert ok and deg is None


def test_clear_denominator_detects_corruption():
    s = expand_gf(10, 50)
    bad = SeriesExpansion(10, s.terms[:20] + (s.terms[20] + 1,) + s.terms[21:])
    assert clear_denominator(bad) == (False, 21)


@pytest.mark.parametrize("a, N", [(30, 1000), (12, 100), (2, 10)])
def test_gf_vs_sequence(a, N):
    rep = gf_vs_sequence(a, N)
    assert rep.passed, rep.line()


def test_gf_a12_is_a6_shifted():
    s = shift_between(6, 12)
    p6 = sequence_params(6)
    assert list(expand_gf(12, 100).terms) == [eval_closed(p6, n + s) for n in range(1, 101)]


def test_caps():
    with pytest.raises(ValueError):
        expand_gf(10, 0)
    with pytest.raises(ValueError):
        expand_gf(10, 10**6 + 1)
    with pytest.raises(ValueError):
        expand_gf(2 * 3 * 5 * 7 * 11 * 13 * 17, 5)  # phi = 92160


def test_series_csv():
    text = series_csv(expand_gf(6, 3))
    assert text == "n,coefficient\n1,7\n2,11\n3,13\n"
    assert expand_gf(6, 3).coefficient(0) == 0

import math

import pytest

from padicsum import (
    Prime,
    bell_numbers,
    binomial,
    compute_A_family,
    compute_U_by_recurrence,
    compute_V_by_recurrence,
    is_prime,
    kurepa_digit,
    kurepa_digit_scan,
    kurepa_gcd_scan,
    left_factorial,
    paper_sequences,
)


class TestLeftFactorial:
    def test_examples(self):
        assert left_factorial(0) == 0
        assert left_factorial(1) == 1
        assert left_factorial(2) == 2
        assert left_factorial(4) == 10

    def test_matches_direct_sum(self):
        for n in range(30):
            assert left_factorial(n) == sum(math.factorial(j) for j in range(n))


class TestKurepaGcd:
    def test_small_cases(self):
        assert math.gcd(left_factorial(2), math.factorial(2)) == 2
        assert math.gcd(left_factorial(3), math.factorial(3)) == 2
        assert math.gcd(left_factorial(4), math.factorial(4)) == 2

    def test_scan(self):
        report = kurepa_gcd_scan(200)
        assert report.ok and report.gcd_ok_up_to == 200

    def test_gcd_always_even(self):
        for n in range(2, 60):
            assert math.gcd(left_factorial(n), math.factorial(n)) % 2 == 0

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            kurepa_gcd_scan(1)


class TestKurepaDigit:
    def test_examples(self):
        assert kurepa_digit(Prime(2)) == 0
        assert kurepa_digit(Prime(3)) == 1
        assert kurepa_digit(Prime(5)) == 4

    def test_truncation_is_stable(self):
        # adding further terms j! with j >= p never changes the residue
        for q in (3, 5, 7, 11, 13, 31):
            base = kurepa_digit(Prime(q))
            extended = sum(math.factorial(j) for j in range(q + 10)) % q
            assert base == extended

    def test_digit_scan(self):
        report = kurepa_digit_scan(500)
        assert report.ok
        assert report.digit_checked_primes == sum(
            1 for q in range(3, 501) if is_prime(q)
        )


class TestPaperSequences:
    def test_printed_lists(self):
        seqs = paper_sequences(6)
        assert seqs["neg_v"] == [1, -1, -1, 5, -5, -21]
        assert seqs["neg_vbar"] == [1, 3, 9, 31, 121, 523]
        assert seqs["u"] == [0, 1, -1, -2, 9, -9]
        assert seqs["neg_ubar"][:5] == [2, 5, 15, 52, 203]

    def test_bell_number_oracle(self):
        bells = bell_numbers(16)
        assert bells[:8] == [1, 1, 2, 5, 15, 52, 203, 877, 4140][:8]
        seqs = paper_sequences(15)
        for k in range(1, 16):
            assert seqs["neg_ubar"][k - 1] == bells[k + 1], k

    def test_cross_module_recurrence_path(self):
        # independent route: U/V via their own recurrences, evaluated at +-1
        kmax = 10
        us = compute_U_by_recurrence(kmax)
        vs = compute_V_by_recurrence(kmax)
        seqs = paper_sequences(kmax)
        for k in range(1, kmax + 1):
            assert seqs["neg_v"][k - 1] == -vs[k - 1](1)
            assert seqs["neg_vbar"][k - 1] == -vs[k - 1](-1)
            assert seqs["u"][k - 1] == us[k - 1](1)
            assert seqs["neg_ubar"][k - 1] == -us[k - 1](-1)

    def test_A_family_definitions(self):
        # the sequence definitions in terms of A_{k-1} at (0,1), (1,-1) etc.
        family = compute_A_family(7)
        seqs = paper_sequences(8)
        for k in range(1, 9):
            Akm1 = family[k - 1]
            assert seqs["neg_v"][k - 1] == Akm1.eval(0, 1)
            assert seqs["neg_vbar"][k - 1] == Akm1.eval(0, -1)
            assert seqs["u"][k - 1] == Akm1.eval(1, 1) - Akm1.eval(0, 1)
            assert seqs["neg_ubar"][k - 1] == Akm1.eval(1, -1) + Akm1.eval(0, -1)


def test_bell_recurrence_definition():
    bells = bell_numbers(10)
    for n in range(10):
        assert bells[n + 1] == sum(binomial(n, i) * bells[i] for i in range(n + 1))

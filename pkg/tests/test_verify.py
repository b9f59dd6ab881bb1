import random
from fractions import Fraction

import pytest

from felcheck.semigroup import make_semigroup
from felcheck.verify import (
    VerificationReport,
    effective_order,
    random_semigroup,
    verify_companions,
    verify_fel_main,
    verify_low_order,
    verify_m2_closed_form,
    verify_semigroup,
    verify_series_lemmas,
    verify_thm_kp,
)

F = Fraction


def _by_identity(report, identity):
    return [c for c in report.checks if c.identity == identity]


class TestFelMain:
    def test_worked_example(self):
        report = verify_fel_main(make_semigroup([3, 5]), 5)
        assert report.passed
        first = _by_identity(report, "FEL_MAIN")[0]
        assert (first.parameter, first.lhs, first.rhs) == (0, "15/2", "15/2")

    def test_trivial_semigroup(self):
        report = verify_fel_main(make_semigroup([1]), 3)
        assert report.passed
        for c in _by_identity(report, "FEL_MAIN"):
            assert c.lhs == c.rhs == "0"

    def test_four_generators(self):
        assert verify_fel_main(make_semigroup([5, 6, 8, 9]), 4).passed

    def test_includes_unnormalized_form(self):
        report = verify_fel_main(make_semigroup([3, 5]), 2)
        finals = _by_identity(report, "EQ_FINAL")
        assert [c.parameter for c in finals] == [0, 1, 2]
        assert all(c.status == "pass" for c in finals)
        # C_2/2! for the two-generator example with all sums equal to 15^n
        assert finals[0].lhs == str(F(15**2, 2))

    def test_random_sweep(self):
        rng = random.Random(103)
        for _ in range(15):
            S = random_semigroup(rng, 5, 40)
            assert verify_fel_main(S, 8).passed

    def test_non_minimal_generators(self):
        assert verify_fel_main(make_semigroup([2, 3]), 6).passed
        assert verify_fel_main(make_semigroup([2, 3, 4]), 6).passed


class TestThmKp:
    def test_three_generators(self):
        report = verify_thm_kp(make_semigroup([4, 5, 6]))
        assert report.passed
        recs = _by_identity(report, "THM_KP")
        assert [(c.parameter, c.lhs) for c in recs] == [(0, "1"), (1, "0"), (2, "-240")]

    def test_two_generators(self):
        report = verify_thm_kp(make_semigroup([3, 5]))
        recs = _by_identity(report, "THM_KP")
        assert [(c.parameter, c.lhs) for c in recs] == [(0, "1"), (1, "15")]

    def test_four_generators(self):
        report = verify_thm_kp(make_semigroup([5, 6, 8, 9]))
        recs = _by_identity(report, "THM_KP")
        assert [c.lhs for c in recs] == ["1", "0", "0", "12960"]

    def test_skipped_for_single_generator(self):
        report = verify_thm_kp(make_semigroup([1]))
        assert report.checks[0].status == "skip"
        assert report.passed


class TestLowOrder:
    def test_values(self):
        report = verify_low_order(make_semigroup([3, 5]))
        assert report.passed
        recs = _by_identity(report, "LOW_ORDER_K")
        assert recs[0].lhs == "15/2"
        assert recs[1].lhs == str(F(225, 6))
        assert recs[3].lhs == str(F(10125, 4))

    def test_simplest_pair(self):
        report = verify_low_order(make_semigroup([2, 3]))
        assert report.passed
        assert _by_identity(report, "LOW_ORDER_K")[0].lhs == "3"

    def test_trivial(self):
        report = verify_low_order(make_semigroup([1]))
        assert report.passed
        assert all(c.lhs == "0" for c in report.checks)


class TestM2ClosedForm:
    def test_pairs(self):
        report = verify_m2_closed_form(make_semigroup([3, 5]), 6)
        assert report.passed
        poly_rec = [c for c in report.checks if c.parameter is None][0]
        assert poly_rec.lhs == "0:1 15:-1"

    def test_skip_other_m(self):
        report = verify_m2_closed_form(make_semigroup([4, 5, 6]), 3)
        assert report.checks[0].status == "skip"


class TestSeriesLemmas:
    @pytest.mark.parametrize(
        "gens,order", [([3, 5], 8), ([1], 4), ([4, 5, 6], 9)]
    )
    def test_worked_examples(self, gens, order):
        report = verify_series_lemmas(make_semigroup(gens), order)
        assert report.passed
        assert len(report.checks) == 5

    def test_order_below_m_rejected(self):
        with pytest.raises(ValueError):
            verify_series_lemmas(make_semigroup([5, 6, 8, 9]), 3)

    def test_random_sweep(self):
        rng = random.Random(107)
        for _ in range(10):
            S = random_semigroup(rng, 5, 30)
            assert verify_series_lemmas(S, S.m + 10).passed


class TestCompanions:
    def test_passes_and_records_seed(self):
        report = verify_companions(n_max=2, samples=3, seed=5)
        assert report.passed
        assert report.seed == 5

    def test_discrepancy_reported_not_patched(self):
        report = verify_companions(n_max=1, samples=4, seed=0)
        high = [c for c in report.checks if c.identity == "FEL1_SIGNFLIP" and c.parameter >= 5]
        assert high and all("every even-index power sum" in c.note for c in high)
        assert all(c.status == "pass" for c in high)

    def test_domain_restriction(self):
        with pytest.raises(ValueError):
            verify_companions(n_max=0)
        with pytest.raises(ValueError):
            verify_companions(samples=0)


class TestAssembledReport:
    def test_sorted_deterministically(self):
        S = make_semigroup([3, 5])
        report = verify_semigroup(S, p_max=3)
        keys = [(c.identity, c.parameter) for c in report.checks]
        resorted = VerificationReport(S.generators, list(report.checks)).sort()
        assert [(c.identity, c.parameter) for c in resorted.checks] == keys

    def test_order_auto_raise(self):
        S = make_semigroup([5, 6, 8, 9])
        report = verify_semigroup(S, p_max=8, order=5)
        assert report.order == 12
        assert report.warnings and "raised" in report.warnings[0]

    def test_effective_order(self):
        assert effective_order(2, 8, None) == (12, None)
        assert effective_order(2, 8, 15) == (15, None)
        order, warning = effective_order(4, 8, 3)
        assert order == 12 and "raised" in warning

    def test_report_passes_end_to_end(self):
        rng = random.Random(109)
        for _ in range(6):
            S = random_semigroup(rng, 4, 30)
            report = verify_semigroup(S, p_max=6)
            assert report.passed


class TestCheckRecord:
    def test_pass_iff_equal(self):
        from felcheck.verify import _record

        assert _record("FEL_MAIN", 0, F(1, 2), F(1, 2)).status == "pass"
        assert _record("FEL_MAIN", 0, F(1, 2), F(1, 3)).status == "fail"

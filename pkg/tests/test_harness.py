"""Evaluation and comparison harness mechanics."""

import math

import numpy as np
import pytest

from ordsim import (
    CoverageMismatchError,
    DegenerateInputError,
    DenseVector,
    MetricKind,
    PairDataset,
    PairRecord,
    ResultsRow,
    ResultsTable,
    compare,
    cosine,
    evaluate,
    fixture_path,
    load_results,
)


def _dataset_from_sims(golds, pairs, name="synth"):
    records = tuple(
        PairRecord(gold=g, u=DenseVector(u), v=DenseVector(v))
        for g, (u, v) in zip(golds, pairs)
    )
    return PairDataset(name=name, dim=len(pairs[0][0]), records=records)


def _rank_then_pearson(sims, golds):
    def ranks(xs):
        return [
            sum(1 for x in xs if x < xi) + (sum(1 for x in xs if x == xi) + 1) / 2
            for xi in xs
        ]

    ra, rb = ranks(sims), ranks(golds)
    n = len(ra)
    ma, mb = math.fsum(ra) / n, math.fsum(rb) / n
    num = math.fsum((a - ma) * (b - mb) for a, b in zip(ra, rb))
    da = math.fsum((a - ma) ** 2 for a in ra)
    db = math.fsum((b - mb) ** 2 for b in rb)
    return num / math.sqrt(da * db)


class TestEvaluate:
    def test_perfect_agreement(self):
        rng = np.random.default_rng(163)
        pairs = [(rng.standard_normal(3), rng.standard_normal(3)) for _ in range(6)]
        golds = [cosine(u, v) for u, v in pairs]
        report = evaluate(_dataset_from_sims(golds, pairs), MetricKind.COS)
        assert report.rho_x100 == 100.0
        assert report.n_pairs == 6
        assert report.metric is MetricKind.COS

    def test_reversed_agreement(self):
        rng = np.random.default_rng(167)
        pairs = [(rng.standard_normal(3), rng.standard_normal(3)) for _ in range(6)]
        golds = [-cosine(u, v) for u, v in pairs]
        report = evaluate(_dataset_from_sims(golds, pairs), "cos")
        assert report.rho_x100 == -100.0

    def test_five_pair_oracle(self):
        rng = np.random.default_rng(173)
        pairs = [(rng.standard_normal(4), rng.standard_normal(4)) for _ in range(5)]
        golds = rng.uniform(0, 5, 5).tolist()
        report = evaluate(_dataset_from_sims(golds, pairs), MetricKind.RECOS)
        from ordsim import recos

        sims = [recos(u, v) for u, v in pairs]
        assert report.rho_x100 == pytest.approx(
            100 * _rank_then_pearson(sims, golds), abs=1e-9
        )

    def test_deterministic(self):
        rng = np.random.default_rng(179)
        pairs = [(rng.standard_normal(3), rng.standard_normal(3)) for _ in range(8)]
        golds = rng.uniform(0, 5, 8).tolist()
        ds = _dataset_from_sims(golds, pairs)
        assert evaluate(ds, "recos") == evaluate(ds, "recos")

    def test_constant_sims_degenerate(self):
        u = [1.0, 2.0]
        pairs = [(u, u), (u, u), (u, u)]
        ds = _dataset_from_sims([1.0, 2.0, 3.0], pairs)
        with pytest.raises(DegenerateInputError):
            evaluate(ds, "cos")


def _table(rows):
    return ResultsTable(tuple(ResultsRow(*r) for r in rows))


class TestCompareMechanics:
    def _synthetic(self):
        # Cent diffs m1 - m2: +10, 0, +30, -20 across 2 models x 2 datasets.
        return _table(
            [
                ("A", "m1", "D1", 50),
                ("A", "m1", "D2", 30),
                ("B", "m1", "D1", 40),
                ("B", "m1", "D2", 10),
                ("A", "m2", "D1", 40),
                ("A", "m2", "D2", 30),
                ("B", "m2", "D1", 10),
                ("B", "m2", "D2", 30),
            ]
        )

    def test_counts_and_micro_averages(self):
        r = compare(self._synthetic(), "m1", "m2")
        d = r.descriptive
        assert (d.n, d.wins, d.ties, d.losses) == (4, 2, 1, 1)
        assert r.micro_avg_a == pytest.approx(0.325, abs=1e-12)
        assert r.micro_avg_b == pytest.approx(0.275, abs=1e-12)
        assert r.method_a == "m1" and r.method_b == "m2"

    def test_wilcoxon_and_sign_hand_values(self):
        r = compare(self._synthetic(), "m1", "m2")
        # Nonzero diffs ~ (+0.1, +0.3, -0.2): magnitude ranks 1, 3, 2 -> V = 4.
        assert r.wilcoxon.statistic == 4.0
        assert r.wilcoxon.n_used == 3
        assert r.sign.statistic == 2.0
        assert r.sign.p_value == 0.5

    def test_lodo_over_datasets(self):
        r = compare(self._synthetic(), "m1", "m2")
        # Excluding D1 leaves diffs (0, -0.2); excluding D2 leaves (0.1, 0.3).
        assert r.lodo.n_used == 2

    def test_bh_covers_exactly_the_three_tests(self):
        r = compare(self._synthetic(), "m1", "m2")
        assert set(r.bh_adjusted) == {"wilcoxon", "sign", "t_test"}
        raw = {
            "wilcoxon": r.wilcoxon.p_value,
            "sign": r.sign.p_value,
            "t_test": r.t_test.p_value,
        }
        for name, adj in r.bh_adjusted.items():
            assert adj >= raw[name] - 1e-15
            assert adj <= 1.0

    def test_exact_zero_ties_from_equal_cents(self):
        r = compare(self._synthetic(), "m1", "m2")
        assert r.descriptive.ties == 1

    def test_antisymmetry_of_descriptives(self):
        t = self._synthetic()
        fwd = compare(t, "m1", "m2").descriptive
        rev = compare(t, "m2", "m1").descriptive
        assert (fwd.wins, fwd.losses) == (rev.losses, rev.wins)
        assert fwd.mean == pytest.approx(-rev.mean, abs=1e-15)

    def test_two_sided_alternative_plumbed(self):
        t = self._synthetic()
        one = compare(t, "m1", "m2", alternative="greater")
        two = compare(t, "m1", "m2", alternative="two-sided")
        assert two.sign.p_value == 1.0  # 2 of 3 successes is as central as it gets
        assert one.sign.p_value == 0.5

    def test_all_ties_degenerate(self):
        t = self._synthetic()
        with pytest.raises(DegenerateInputError):
            compare(t, "m1", "m1")

    def test_coverage_mismatch(self):
        rows = [
            ("A", "m1", "D1", 50),
            ("B", "m1", "D1", 40),
            ("A", "m2", "D1", 40),
        ]
        with pytest.raises(CoverageMismatchError, match="cover different cells"):
            compare(_table(rows), "m1", "m2")

    def test_unknown_method(self):
        with pytest.raises(CoverageMismatchError, match="no cells"):
            compare(self._synthetic(), "m1", "zzz")


class TestPublishedTableBehavior:
    def test_double_subtraction_breaks_decimal_magnitude_ties(self):
        # Two cent-equal magnitudes coming from different subtractions need
        # not tie in double arithmetic; the published ranking depends on it.
        a = 50.28 - 49.97
        b = -(31.88 - 32.19)
        assert round(a, 2) == round(b, 2) == 0.31
        assert a != b

    def test_fixture_diff_extremes_print_as_published(self):
        table = load_results(fixture_path("table2.csv"))
        r = compare(table, "recos", "cos")
        assert f"{r.descriptive.min:.2f}" == "-0.31"
        assert f"{r.descriptive.max:.2f}" == "1.36"

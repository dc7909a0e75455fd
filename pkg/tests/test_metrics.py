from __future__ import annotations

from random import Random

import pytest

from skewcodes import (
    BASE_FIELD,
    BlockLengthError,
    BlockVector,
    BudgetExceededError,
    CodeSpec,
    ConjugateRepsError,
    conjugacy_classes,
    hamming_weight,
    linalg,
    min_distance,
    rank_weight,
    sample_weight_floor,
    skew_weight,
    sum_rank_weight,
    verify_optimal,
)
from conftest import nonzero
from test_codes import (
    _nontrivial_classes,
    _random_independent_block,
    _random_invertible,
    _random_spec,
    _right_multiply,
)


def bv(field, blocks, tags):
    return BlockVector(field, tuple(tuple(b) for b in blocks), tuple(tags))


class TestHammingWeight:
    def test_zero_vector(self, gf9):
        v = bv(gf9, [(gf9.zero, gf9.zero)], [BASE_FIELD])
        assert hamming_weight(v) == 0

    def test_count(self, gf9):
        y = gf9.parse_element("0:1")
        v = bv(gf9, [(gf9.one, gf9.zero, y)], [BASE_FIELD])
        assert hamming_weight(v) == 2

    def test_permutation_invariance(self, gf9):
        rng = Random(3)
        for _ in range(50):
            entries = [gf9.random_element(rng) for _ in range(5)]
            shuffled = entries[:]
            rng.shuffle(shuffled)
            a = bv(gf9, [entries], [BASE_FIELD])
            b = bv(gf9, [shuffled], [BASE_FIELD])
            assert hamming_weight(a) == hamming_weight(b)


class TestRankWeight:
    def test_zero(self, gf9):
        assert rank_weight(gf9, BASE_FIELD, (gf9.zero, gf9.zero)) == 0

    def test_gf9_examples(self, gf9):
        y = gf9.parse_element("0:1")
        assert rank_weight(gf9, BASE_FIELD, (gf9.one, gf9.from_int(2))) == 1
        assert rank_weight(gf9, BASE_FIELD, (gf9.one, y)) == 2

    def test_rational_example(self, f3z):
        assert rank_weight(f3z, BASE_FIELD, (f3z.one, f3z.z())) == 2

    def test_equals_min_hamming_over_invertible_matrices(self, gf9):
        # Rank weight = min Hamming weight over right multiplication by
        # invertible centralizer matrices; exhaustive over 2x2 F_3 matrices.
        from itertools import product

        rng = Random(5)
        fq = gf9.subfield_elements(BASE_FIELD)
        invertibles = [
            [[a, b], [c, d]]
            for a, b, c, d in product(fq, repeat=4)
            if linalg.rank(gf9, [[a, b], [c, d]]) == 2
        ]
        for _ in range(30):
            entries = (gf9.random_element(rng), gf9.random_element(rng))
            if all(gf9.is_zero(e) for e in entries):
                continue
            observed = min(
                sum(1 for c in _right_multiply(gf9, entries, mat) if not gf9.is_zero(c))
                for mat in invertibles
            )
            assert rank_weight(gf9, BASE_FIELD, entries) == observed


class TestSumRankWeight:
    def test_all_blocks_length_one_is_hamming(self, gf3):
        rng = Random(7)
        for _ in range(50):
            entries = [gf3.random_element(rng) for _ in range(4)]
            v = bv(gf3, [(e,) for e in entries], ["full"] * 4)
            assert sum_rank_weight(v) == hamming_weight(v)

    def test_single_block_is_rank(self, gf9):
        rng = Random(11)
        for _ in range(50):
            entries = tuple(gf9.random_element(rng) for _ in range(2))
            v = bv(gf9, [entries], [BASE_FIELD])
            assert sum_rank_weight(v) == rank_weight(gf9, BASE_FIELD, entries)

    def test_frozen_example(self, gf9):
        y, y2 = gf9.parse_element("0:1"), gf9.parse_element("0:2")
        v = bv(gf9, [(gf9.one, gf9.from_int(2)), (y, y2)], [BASE_FIELD, BASE_FIELD])
        assert sum_rank_weight(v) == 2

    def test_never_exceeds_hamming(self, gf9, gf25):
        rng = Random(13)
        for field in (gf9, gf25):
            for _ in range(200):
                blocks = [
                    tuple(field.random_element(rng) for _ in range(rng.randint(1, 2)))
                    for _ in range(rng.randint(1, 3))
                ]
                v = bv(field, blocks, [BASE_FIELD] * len(blocks))
                assert sum_rank_weight(v) <= hamming_weight(v)

    def test_weight_axioms(self, gf9):
        rng = Random(17)
        tags = [BASE_FIELD, BASE_FIELD]
        for _ in range(200):
            u_blocks = [tuple(gf9.random_element(rng) for _ in range(2)) for _ in range(2)]
            v_blocks = [tuple(gf9.random_element(rng) for _ in range(2)) for _ in range(2)]
            u = bv(gf9, u_blocks, tags)
            v = bv(gf9, v_blocks, tags)
            s = bv(
                gf9,
                [
                    tuple(gf9.add(a, b) for a, b in zip(ub, vb))
                    for ub, vb in zip(u_blocks, v_blocks)
                ],
                tags,
            )
            assert (sum_rank_weight(u) == 0) == all(
                gf9.is_zero(c) for c in u.flatten()
            )
            assert sum_rank_weight(s) <= sum_rank_weight(u) + sum_rank_weight(v)

    def test_invariance_under_centralizer_matrices(self, gf9):
        rng = Random(19)
        fq = list(gf9.subfield_elements(BASE_FIELD))
        for _ in range(100):
            blocks = [tuple(gf9.random_element(rng) for _ in range(2)) for _ in range(2)]
            v = bv(gf9, blocks, [BASE_FIELD, BASE_FIELD])
            mats = [_random_invertible(gf9, fq, 2, rng) for _ in range(2)]
            w = bv(
                gf9,
                [tuple(_right_multiply(gf9, b, m)) for b, m in zip(blocks, mats)],
                [BASE_FIELD, BASE_FIELD],
            )
            assert sum_rank_weight(v) == sum_rank_weight(w)


class TestMinDistance:
    def test_full_space_has_distance_one(self, gf9):
        y = gf9.parse_element("0:1")
        spec = CodeSpec(gf9, [gf9.one], [[gf9.one, y]], 2)  # k = n
        for metric in ("hamming", "sumrank", "skew"):
            assert min_distance(spec, metric).minimum == 1

    def test_budget_guard(self, gf9_spec):
        with pytest.raises(BudgetExceededError):
            min_distance(gf9_spec, "sumrank", budget=10)

    def test_rational_rejected(self, gabidulin_f3z):
        with pytest.raises(ValueError):
            min_distance(gabidulin_f3z, "sumrank")

    def test_instance_meets_bound(self, gf9_spec):
        report = min_distance(gf9_spec, "sumrank")
        assert report.minimum == 3
        assert report.bound == 3
        assert report.meets_bound
        assert report.examined == 80

    def test_witness_weight_matches(self, gf9_spec, gf9):
        report = min_distance(gf9_spec, "sumrank")
        v = gf9_spec.encode(report.witness_message)
        assert sum_rank_weight(v) == report.minimum
        assert v.flatten() == report.witness_codeword

    def test_worker_determinism(self, gf9):
        y = gf9.parse_element("1:1")
        spec = CodeSpec(gf9, [gf9.one, y], [[gf9.one, gf9.parse_element("0:1")]] * 2, 3)
        seq = min_distance(spec, "sumrank", workers=1)
        par = min_distance(spec, "sumrank", workers=2)
        assert (seq.minimum, seq.witness_message) == (par.minimum, par.witness_message)

    def test_skew_equals_linearized_weight(self, gf9_spec):
        # Spot check: the skew path and the sum-rank path give equal minima.
        assert (
            min_distance(gf9_spec, "skew").minimum
            == min_distance(gf9_spec, "sumrank").minimum
        )


class TestSingletonBounds:
    @pytest.mark.parametrize("field_name", ["gf9", "gf25"])
    def test_random_specs_never_violate(self, field_name, request):
        field = request.getfixturevalue(field_name)
        rng = Random(23)
        classes = _nontrivial_classes(field)
        for _ in range(25):
            spec = _random_spec(field, classes, rng, max_k=2)
            bound = spec.n - spec.k + 1
            assert min_distance(spec, "sumrank").minimum <= bound
            assert min_distance(spec, "hamming").minimum <= bound


class TestVerifyOptimal:
    def test_gf9_instance(self, gf9_spec):
        report = verify_optimal(gf9_spec)
        assert report.msrd and report.mds
        assert report.sumrank.minimum == 3
        assert report.hamming.minimum == 3
        for block in report.blocks:
            # k = n_i = 2: the block bound n_i - k_i + 1 = 1 is trivially met
            assert block.dimension == 2
            assert block.bound == 1
            assert block.mrd

    def test_gf25_low_dimension(self, gf25):
        classes = _nontrivial_classes(gf25)
        y = gf25.parse_element("0:1")
        spec = CodeSpec(
            gf25, [classes[0].rep, classes[1].rep], [[gf25.one, y], [gf25.one, y]], 1
        )
        report = verify_optimal(spec)
        assert report.sumrank.minimum == 4  # n - k + 1 = 4
        assert report.msrd and report.mds
        assert report.sumrank.examined == 24
        for block in report.blocks:
            assert block.dimension == 1
            assert block.bound == 2
            assert block.mrd

    def test_pasting_regime_blocks_are_mrd(self, gf9):
        # k <= n_i: every projection is an MRD code of dimension k
        y = gf9.parse_element("0:1")
        spec = CodeSpec(
            gf9, [gf9.one, gf9.parse_element("1:1")], [[gf9.one, y], [gf9.one, y]], 1
        )
        report = verify_optimal(spec)
        for block in report.blocks:
            assert block.dimension == spec.k
            assert block.bound == block.length - spec.k + 1
            assert block.mrd


class TestLengthComparison:
    def test_gf9_max_linearized_length_is_four(self, gf9, gf9_spec):
        # (q-1)*m = 4 with q = 3, m = 2: the instance itself reaches it,
        assert gf9_spec.n == 4
        # a single Gabidulin block caps at m = 2,
        y = gf9.parse_element("0:1")
        with pytest.raises(BlockLengthError):
            CodeSpec(gf9, [gf9.one], [[gf9.one, y, gf9.parse_element("1:1")]], 1)
        # and there is no third nontrivial class to extend past 4.
        assert len(_nontrivial_classes(gf9)) == 2
        with pytest.raises(ConjugateRepsError):
            CodeSpec(
                gf9,
                [gf9.one, gf9.parse_element("1:1"), gf9.from_int(2)],
                [[gf9.one, y]] * 3,
                1,
            )

    def test_gf25_max_linearized_length_is_eight(self, gf25):
        # (q-1)*m = 8 with q = 5, m = 2
        classes = _nontrivial_classes(gf25)
        assert len(classes) == 4
        y = gf25.parse_element("0:1")
        spec = CodeSpec(gf25, [c.rep for c in classes], [[gf25.one, y]] * 4, 2)
        assert spec.n == 8


class TestSampleWeightFloor:
    def test_seed_determinism(self, gabidulin_f3z):
        a = sample_weight_floor(gabidulin_f3z, samples=50, seed=9)
        b = sample_weight_floor(gabidulin_f3z, samples=50, seed=9)
        assert a == b

    def test_report_is_labeled_unproven(self, gabidulin_f3z):
        report = sample_weight_floor(gabidulin_f3z, samples=20, seed=1)
        assert report.label == "sampled lower-bound evidence"
        assert not report.proven

    def test_floor_respects_trivial_bounds(self, f3z):
        # k = n: every nonzero codeword still has weight >= 1
        z = f3z.z()
        spec = CodeSpec(f3z, [f3z.zero], [[f3z.one, z, f3z.mul(z, z)]], 3)
        report = sample_weight_floor(spec, samples=30, seed=2)
        assert 1 <= report.min_observed <= spec.n

    def test_finite_kind_rejected(self, gf9_spec):
        with pytest.raises(ValueError):
            sample_weight_floor(gf9_spec)


class TestSkewSumrankAgreement:
    def test_spec_skew_weight_matches_closure_route(self, gf9_spec, ring9):
        rng = Random(29)
        basis = gf9_spec.skew_basis
        for _ in range(100):
            coeffs = [gf9_spec.field.random_element(rng) for _ in range(2)]
            f = ring9.poly(coeffs)
            assert gf9_spec.skew_weight(f) == skew_weight(ring9, basis, f)

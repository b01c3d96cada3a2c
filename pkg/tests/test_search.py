import pytest

from gaptri import (
    Affine,
    Constant,
    ModelSpec,
    NotAFailureError,
    ParityFlip,
    Unbounded,
    canonical_model,
    default_family,
    embedded_half_triangle,
    evaluate_candidate,
    result_record,
    run_search,
    valid_set,
    verify_row,
    witness,
)


class TestDefaultFamily:
    def test_size(self):
        family = default_family()
        assert family.size == 6216
        assert sum(1 for _ in family.candidates()) == 6216

    def test_contains_canonical(self):
        assert canonical_model() in set(default_family().candidates())

    def test_contains_constant2_affine(self):
        member = ModelSpec(Constant(2), Affine(1, 1))
        assert member in set(default_family().candidates())


class TestRunSearch:
    def test_canonical_scores_three_on_first_rows(self):
        results = run_search(default_family(), embedded_half_triangle(), range(1, 4))
        canonical = next(r for r in results if r.model == canonical_model())
        assert canonical.score == 3
        assert canonical.matched_rows == frozenset({1, 2, 3})

    def test_sorted_by_score_then_text(self):
        from gaptri import format_model

        results = run_search(default_family(), embedded_half_triangle(), range(1, 5))
        keys = [(-r.score, format_model(r.model)) for r in results]
        assert keys == sorted(keys)

    def test_byte_identical_reruns(self):
        args = (default_family(), embedded_half_triangle(), range(1, 5))
        first = [result_record(r) for r in run_search(*args)]
        second = [result_record(r) for r in run_search(*args)]
        assert first == second

    def test_gap_one_candidates_never_match_row_4(self):
        results = run_search(default_family(), embedded_half_triangle(), range(1, 5))
        for r in results:
            if r.model.gap_threshold == Constant(1):
                assert 4 not in r.matched_rows

    def test_gap_one_candidates_match_within_first_three_rows(self):
        results = run_search(default_family(), embedded_half_triangle(), range(1, 10))
        for r in results:
            if r.model.gap_threshold == Constant(1):
                assert r.matched_rows <= {1, 2, 3}

    def test_parallel_merge_equals_sequential(self):
        family = default_family()
        triangle = embedded_half_triangle()
        sequential = run_search(family, triangle, range(1, 3), workers=1)
        parallel = run_search(family, triangle, range(1, 3), workers=2)
        assert [result_record(r) for r in sequential] == [
            result_record(r) for r in parallel
        ]

    def test_ill_typed_annotation(self):
        # gap 2 at n=4 maps to k = 2 - 2 = 0 under the parity rule.
        result = evaluate_candidate(
            ModelSpec(Constant(2), ParityFlip()), embedded_half_triangle(), (3, 4)
        )
        assert 4 in result.ill_typed_rows
        assert 4 not in result.matched_rows
        assert 3 not in result.ill_typed_rows

    def test_rows_must_exist(self):
        from gaptri import MissingRowError

        with pytest.raises(MissingRowError):
            run_search(default_family(), embedded_half_triangle(), range(9, 11))


class TestWitness:
    def test_row4_type_count_deficit(self):
        text = witness(canonical_model(), embedded_half_triangle(), 4)
        assert text == "type-count deficit: provided 2 < required 3"

    def test_row5_deficit(self):
        text = witness(canonical_model(), embedded_half_triangle(), 5)
        assert "provided 2 < required 3" in text

    def test_entry_mismatch(self):
        text = witness(ModelSpec(Unbounded(), ParityFlip()), embedded_half_triangle(), 3)
        assert text.startswith("entry mismatch at k=3")

    def test_matching_row_raises(self):
        with pytest.raises(NotAFailureError):
            witness(canonical_model(), embedded_half_triangle(), 2)

    def test_agrees_with_verify_row_across_family_sample(self):
        triangle = embedded_half_triangle()
        candidates = list(default_family().candidates())[::97]
        for model in candidates:
            for n in (1, 3, 4):
                matches = verify_row(model, triangle, n).matches
                if matches:
                    with pytest.raises(NotAFailureError):
                        witness(model, triangle, n)
                else:
                    assert witness(model, triangle, n)


class TestMonotonicity:
    @pytest.mark.parametrize("c", [0, 1, 2, 3])
    def test_raising_threshold_never_shrinks_valid_set(self, c):
        for n in range(1, 13):
            smaller = set(valid_set(ModelSpec(Constant(c), ParityFlip()), n))
            larger = set(valid_set(ModelSpec(Constant(c + 1), ParityFlip()), n))
            assert smaller <= larger


class TestRecords:
    def test_record_shape(self):
        result = evaluate_candidate(canonical_model(), embedded_half_triangle(), (1, 2, 3, 4))
        assert result_record(result) == "gap<=1; type=parity-paper; bcount=*\t3\t1,2,3"

    def test_record_no_matches(self):
        model = ModelSpec(Constant(0), Affine(0, 0))
        result = evaluate_candidate(model, embedded_half_triangle(), (1,))
        assert result_record(result).endswith("\t0\t-")

from itertools import combinations

import numpy as np
import pytest

from bicover.bounds import gv_count
from bicover.codes import (BinaryCode, FieldContext, bch_dimension,
                           bch_extended_code, build_code, even_weight_code,
                           greedy_gv_code, k_best, min_distance,
                           sylvester_matrix)
from bicover.errors import (CapExceeded, DomainError, FieldError,
                            SizeLimitExceeded, TargetUnreached)


def pairwise_min_distance(words):
    """Independent exhaustive oracle."""
    return min((a ^ b).bit_count() for a, b in combinations(words, 2))


def greedy_scan_oracle(k, d):
    """Direct keep-if-far-from-everything-kept rescan of the word space."""
    kept = []
    for w in range(1 << k):
        if all((w ^ u).bit_count() >= d for u in kept):
            kept.append(w)
    return kept


def test_even_weight_small():
    c = even_weight_code(3)
    assert [c.word_text(w) for w in c.words] == ["000", "011", "101", "110"]
    assert c.min_distance == 2
    c2 = even_weight_code(2)
    assert [c2.word_text(w) for w in c2.words] == ["00", "11"]


def test_even_weight_k4_exhaustive():
    c = even_weight_code(4)
    assert len(c.words) == 8
    assert pairwise_min_distance(c.words) == 2
    assert all(w.bit_count() % 2 == 0 for w in c.words)


def test_even_weight_guards():
    with pytest.raises(DomainError):
        even_weight_code(1)
    with pytest.raises(SizeLimitExceeded):
        even_weight_code(12, word_cap=1000)


def test_gv_first_words():
    c = greedy_gv_code(5, 3, 2)
    assert [c.word_text(w) for w in c.words] == ["00000", "00111"]
    assert greedy_gv_code(4, 1, 16).words == tuple(range(16))


def test_gv_target_unreached_reports_achieved():
    with pytest.raises(TargetUnreached) as exc:
        greedy_gv_code(5, 3, 32)
    assert exc.value.achieved == 4
    assert list(exc.value.code.words) == greedy_scan_oracle(5, 3)


@pytest.mark.parametrize("k,d", [(4, 2), (5, 2), (5, 3), (6, 3), (7, 3), (8, 4)])
def test_gv_matches_direct_scan_and_bound(k, d):
    kept = greedy_scan_oracle(k, d)
    c = greedy_gv_code(k, d, len(kept))
    assert list(c.words) == kept
    assert len(kept) >= gv_count(k, d)
    if len(kept) >= 2:
        assert pairwise_min_distance(kept) >= d


def test_gv_guards():
    with pytest.raises(DomainError):
        greedy_gv_code(4, 5, 2)
    with pytest.raises(SizeLimitExceeded):
        greedy_gv_code(24, 3, 2, scan_cap=1 << 22)


def test_field_context_table_is_primitive():
    for m in range(2, 17):
        ctx = FieldContext(m)
        assert ctx.powers[ctx.order] == 1


def test_field_context_rejects_non_primitive():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5, not 15
    with pytest.raises(FieldError):
        FieldContext(4, modulus=0b11111)
    # (x^2 + x + 1)^2 is reducible
    with pytest.raises(FieldError):
        FieldContext(4, modulus=0b10101)
    with pytest.raises(FieldError):
        FieldContext(17)


def test_bch_m3_d2():
    c = bch_extended_code(3, 2)
    assert c.length == 8
    assert len(c.words) == 16
    assert c.min_distance == 4
    assert pairwise_min_distance(c.words) == 4
    assert all(w.bit_count() % 2 == 0 for w in c.words)


def test_bch_m4_d2():
    c = bch_extended_code(4, 2)
    assert c.length == 16
    assert len(c.words) == 2048
    assert c.min_distance == 4
    assert all(w.bit_count() % 2 == 0 for w in c.words)


def test_bch_m4_d3():
    c = bch_extended_code(4, 3)
    assert c.length == 16
    assert len(c.words) == 128
    assert len(c.words) >= (1 << 16) // (2 * 16 ** 2)
    assert c.min_distance == 6
    assert pairwise_min_distance(c.words) == 6


def test_bch_dimension_bound():
    for m, d in [(3, 2), (4, 2), (4, 3), (5, 3), (6, 4)]:
        assert bch_dimension(m, d) >= (1 << m) - 1 - (d - 1) * m


def test_bch_guards():
    with pytest.raises(DomainError):
        bch_extended_code(4, 1)
    with pytest.raises(FieldError):
        bch_extended_code(17, 2)
    with pytest.raises(DomainError):
        bch_extended_code(3, 5)  # designed distance 9 > 7
    with pytest.raises(CapExceeded):
        bch_extended_code(4, 2, word_cap=100)
    truncated = bch_extended_code(4, 2, target=100, word_cap=100)
    assert len(truncated.words) == 100
    assert pairwise_min_distance(truncated.words) >= 4


def test_sylvester_base_and_identity():
    h1 = sylvester_matrix(1)
    assert h1.tolist() == [[1, 1], [1, -1]]
    h2 = sylvester_matrix(2)
    assert (h2 @ h2.T == 4 * np.eye(4, dtype=int)).all()
    assert (h2[0] == 1).all()


def test_sylvester_column_agreements():
    h = sylvester_matrix(3)
    cols = h.T
    for i, j in combinations(range(8), 2):
        agreements = int((cols[i] == cols[j]).sum())
        assert agreements == 4
        # the all-ones first row accounts for one agreement
        assert int((cols[i][1:] != cols[j][1:]).sum()) == 4
    with pytest.raises(SizeLimitExceeded):
        sylvester_matrix(5, entry_cap=100)


def test_min_distance_examples_and_cache():
    c = BinaryCode(3, (0b000, 0b011, 0b101, 0b110))
    assert min_distance(c) == 2
    assert c.min_distance == 2
    assert min_distance(BinaryCode(5, (0b00000, 0b00111))) == 3
    with pytest.raises(CapExceeded):
        min_distance(BinaryCode(4, tuple(range(10))), pair_cap=10)
    with pytest.raises(DomainError):
        min_distance(BinaryCode(4, (3,)))


def test_binary_code_validation_and_json():
    with pytest.raises(DomainError):
        BinaryCode(2, (0, 0))
    with pytest.raises(DomainError):
        BinaryCode(2, (4,))
    c = bch_extended_code(3, 2)
    back = BinaryCode.from_json(c.to_json())
    assert back == c


def test_k_best_examples():
    assert k_best(4, 2) == (3, "even-weight")
    assert k_best(2, 1) == (1, "repetition")
    assert k_best(2048, 4) == (16, "extended-bch")


def test_k_best_gv_wins_medium():
    k, method = k_best(16, 1)
    assert (k, method) == (4, "gv")
    k, method = k_best(5, 3)
    code = build_code(method, 5, 3)
    assert code.length == k and len(code.words) >= 5
    assert pairwise_min_distance(code.words[:5]) >= 3


def test_build_code_families():
    for method, n, lam in [("even-weight", 6, 2), ("gv", 10, 3),
                           ("extended-bch", 16, 4), ("repetition", 2, 5),
                           ("hadamard", 8, 4)]:
        code = build_code(method, n, lam)
        assert len(code.words) >= n
        assert pairwise_min_distance(code.words[:n]) >= lam

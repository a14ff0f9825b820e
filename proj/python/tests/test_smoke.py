"""Smoke tests for the eqkl Python module. Runs under pytest or standalone."""

import json

import eqkl


def test_partitions():
    assert eqkl.make_partition([4, 2, 2, 1, 0, 0]) == (4, 2, 2, 1)
    assert eqkl.make_partition([]) == ()
    assert eqkl.conjugate([4, 2, 2, 2, 1, 1, 1]) == (7, 4, 1, 1)
    try:
        eqkl.make_partition([2, 3])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for an increasing sequence")


def test_tableau_counts():
    assert eqkl.syt_count([3, 2]) == 5
    assert eqkl.syt_count([2, 2]) == 2
    assert eqkl.skew_syt_count([7, 5, 5, 5], [3, 3, 3]) == (
        eqkl.syt_count([7, 2, 2, 2]) + eqkl.syt_count([6, 3, 2, 2]) + eqkl.syt_count([5, 4, 2, 2])
    )
    assert isinstance(eqkl.syt_count([10, 10, 10, 10]), int)


def test_schur_algebra():
    s1 = eqkl.schur([1])
    assert (s1 * s1) == eqkl.schur([2]) + eqkl.schur([1, 1])
    assert eqkl.pieri_h(s1, 1) == s1 * s1
    assert eqkl.lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2
    assert eqkl.skew_schur_expand([2, 1], [1]) == eqkl.schur([2]) + eqkl.schur([1, 1])
    assert len(eqkl.lr_tableaux([7, 5, 5, 5], [3, 3, 3], [7, 2, 2, 2])) == 1
    assert eqkl.is_lattice_word([1, 1, 2, 1, 2, 3])
    assert not eqkl.is_lattice_word([1, 2, 2])


def test_matroid_polynomials():
    p13 = eqkl.p_uniform(1, 3)
    assert p13.to_text() == "s(4) + t·s(2,2)"
    assert p13 == eqkl.p_uniform(1, 3, method="recursive")
    assert p13 == eqkl.p_uniform(1, 3, method="skew")
    assert p13.to_latex("V") == "V_{(4)} + V_{(2,2)} t"

    assert eqkl.q_boolean(3).to_text() == "s(1,1,1)"
    assert eqkl.q_uniform(1, 3) == eqkl.q_uniform(1, 3, method="recursive")
    assert eqkl.p_uniform(0, 4) == eqkl.p_boolean(4)

    assert eqkl.verify_orthogonality(2, 4).is_zero()

    kl = eqkl.ordinary_kl(1, 3)
    assert kl.coeffs() == [(0, 1), (1, 2)]
    assert kl == eqkl.ordinary_kl(1, 3, method="oracle")
    assert p13.dimension() == kl


def test_json_round_trip():
    value = eqkl.char_uniform(2, 5)
    blob = value.to_json()
    json.loads(blob)  # well-formed
    back = eqkl.graded_from_json(blob)
    assert back == value
    assert back.to_json() == blob

    kl = eqkl.ordinary_kl(2, 5)
    assert eqkl.intpoly_from_json(kl.to_json()) == kl


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_") and callable(v)]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()

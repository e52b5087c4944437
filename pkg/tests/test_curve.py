import pytest

from cartier.curve import (
    enumerate_basis,
    enumerate_paper_index_set,
    genus,
    holomorphy_valuations,
    validate_params,
)
from cartier.errors import EvenCharacteristicUnsupported, HypothesisFailure, InvalidPrime, ParameterError

GRID = [(p, s, m) for p in (5, 7, 11, 13) for s in (1, 2) for m in (2, 3, p, p * p)]


def test_validate_examples():
    c = validate_params(5, 1, 2)
    assert (c.n, c.q, c.g) == (3, 5, 1)
    assert c.hypotheses.all_hold

    c = validate_params(5, 1, 3)
    assert not c.hypotheses.gcd_n_m
    assert c.hypotheses.failed() == ["gcd_n_m"]

    c = validate_params(5, 2, 5)
    assert (c.n, c.q, c.g) == (13, 25, 24)
    assert c.hypotheses.m_form and c.hypotheses.all_hold


def test_m_form_requires_b_dividing_s():
    assert not validate_params(5, 1, 25).hypotheses.m_form
    assert validate_params(5, 2, 25).hypotheses.m_form
    assert not validate_params(5, 2, 125).hypotheses.m_form
    assert not validate_params(5, 2, 10).hypotheses.m_form


def test_validate_errors():
    with pytest.raises(InvalidPrime):
        validate_params(4, 1, 2)
    with pytest.raises(EvenCharacteristicUnsupported):
        validate_params(2, 1, 3)
    with pytest.raises(ParameterError):
        validate_params(3, 1, 2)
    with pytest.raises(ParameterError):
        validate_params(5, 0, 2)
    with pytest.raises(ParameterError):
        validate_params(5, 1, 1)
    with pytest.raises(HypothesisFailure):
        validate_params(5, 1, 3, strict=True)


@pytest.mark.parametrize("triple,g", [((5, 1, 2), 1), ((5, 2, 3), 12), ((13, 1, 13), 36)])
def test_genus_examples(triple, g):
    params = validate_params(*triple)
    assert genus(params) == g
    assert g == (params.q - 1) * (params.m - 1) // 4


def test_genus_needs_coprime_model():
    with pytest.raises(ParameterError):
        genus(validate_params(5, 1, 3))


def test_basis_examples():
    assert enumerate_basis(validate_params(5, 1, 2)).entries == ((1, 2),)
    assert enumerate_basis(validate_params(5, 2, 2)).entries == tuple((1, b) for b in range(7, 13))
    assert enumerate_basis(validate_params(7, 1, 3)).entries == ((1, 2), (1, 3), (2, 3))


@pytest.mark.parametrize("triple", GRID)
def test_basis_size_is_genus_on_grid(triple):
    params = validate_params(*triple)
    if not params.hypotheses.all_hold or params.g > 2000:
        pytest.skip("outside filtered grid")
    basis = enumerate_basis(params)
    assert len(basis) == (params.n - 1) * (params.m - 1) // 2
    assert list(basis.entries) == sorted(basis.entries, key=lambda e: (e[1], e[0]))


@pytest.mark.parametrize("triple", [(5, 1, 2), (5, 1, 5), (7, 1, 3), (5, 2, 2), (5, 2, 3), (7, 1, 7)])
def test_holomorphy_audit(triple):
    params = validate_params(*triple)
    n, m = params.n, params.m
    holomorphic = {
        (a, b)
        for a in range(1, n + m + 2)
        for b in range(-2, n + m + 2)
        if min(holomorphy_valuations(params, a, b).values()) >= 0
    }
    assert holomorphic == set(enumerate_basis(params).entries)


def test_paper_index_set_examples():
    assert enumerate_paper_index_set(validate_params(5, 1, 2)) == []
    assert enumerate_paper_index_set(validate_params(5, 2, 3)) == [(0, 1), (0, 2), (0, 3), (0, 4)]
    for triple in [(5, 2, 2), (7, 2, 3), (13, 1, 13)]:
        assert (0, 0) not in enumerate_paper_index_set(validate_params(*triple))


def test_monomial_correspondence():
    basis = enumerate_basis(validate_params(7, 1, 3))  # n = 4
    assert [basis.monomial(e) for e in basis] == [(0, 1), (0, 0), (1, 0)]
    assert basis.index_of_monomial[(1, 0)] == 2

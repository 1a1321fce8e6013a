import pytest

import hermform
from hermform import HERMITIAN, SKEW, Field


def test_invariants_of_small_form():
    f = Field(5)
    assert f.invariants("[[1, t], [-t, t^2 + 1]]") == ["1", "t^2 - 2"]


def test_star_negates_odd_terms():
    f = Field(3)
    assert f.star("1 + t + t^2") == "t^2 - t + 1"


def test_norm_factor():
    f = Field(5)
    z = f.norm_factor("1 - t^2")
    assert f.invariants(f"[[({z}) * ({f.star(z)})]]") == ["t^2 - 1"]


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("epsilon", [HERMITIAN, SKEW])
def test_canonicalize_random(p, epsilon):
    f = Field(p)
    for seed in range(1, 6):
        inst = f.random(3, epsilon, seed=seed)
        c = f.canonicalize(inst["A"], epsilon)
        assert f.verify(inst["A"], c["S"], c["B"]) is None
        assert c["factors"] == inst["factors"]
        for block in c["blocks"]:
            assert block["shape"] in ("1x1", "2x2")


def test_congruence_decision():
    f = Field(5)
    x = f.random(2, SKEW, seed=3)
    d = f.congruent(x["A"], x["C"], SKEW)
    assert d["congruent"]
    assert f.verify(x["A"], d["S"], x["C"]) is None
    assert not f.congruent("[[t, 0], [0, t]]", "[[t, 0], [0, t^3]]", SKEW)["congruent"]


def test_isotropic_vector():
    f = Field(3)
    v = f.isotropic_vector("[[0, 1], [1, t^2]]", HERMITIAN)
    assert len(v) == 2


def test_validate_sequence():
    f = Field(3)
    assert f.validate(["1", "t^2 - 1"], HERMITIAN)["valid"]
    assert not f.validate(["t"], HERMITIAN)["valid"]


def test_verify_reports_failure():
    f = Field(5)
    assert f.verify("[[1]]", "[[t]]", "[[-t^2]]") is not None


def test_errors():
    f = Field(5)
    with pytest.raises(hermform.ParseError):
        f.invariants("[[1,")
    with pytest.raises(hermform.DomainError):
        f.isotropic_vector("[[t]]", HERMITIAN)
    with pytest.raises(ValueError):
        f.canonicalize("[[1]]", 2)

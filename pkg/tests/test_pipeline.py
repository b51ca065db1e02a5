import json

import pytest

from ribet.errors import IndexOutOfRange, InputNotIrregular, NoWitnessFound, TrivialCharacter
from ribet.pipeline import (
    PROVENANCE,
    check_lemma31,
    distinguish_from_s2,
    ribet_construct,
)


@pytest.fixture(scope="module")
def report37():
    return ribet_construct(37, 32)


class TestReport:
    def test_passes(self, report37):
        assert report37.overall_pass
        assert report37.error is None

    def test_fields(self, report37):
        d = report37.to_dict()
        assert d["pair"] == {"p": 37, "k": 32}
        assert d["epsilon_exponent"] == 30
        assert d["parameters"] == {"M": 200, "A": 4, "l_bound": 13}
        assert d["constant_c"]["valuation"] >= 1 and d["constant_c"]["in_prime"]
        assert d["unit_form_case"]["tag"] == "case_ii"
        assert d["unit_form_case"]["pair"] == [2, 30]
        assert [e["l"] for e in d["eigen_verdicts"]] == [2, 3, 5, 7, 11, 13]
        assert [e["checked_up_to"] for e in d["eigen_verdicts"]] == [100, 66, 40, 28, 18, 15]
        assert d["distinguishing_prime"]["l"] == 2
        assert d["provenance"] == PROVENANCE

    def test_f_properties(self, report37):
        f = report37.f
        assert f.residues[0] == 0
        assert f.truncation == 200
        assert (f.weight, f.char_exponent) == (2, 30)

    def test_deterministic_json(self, report37):
        assert ribet_construct(37, 32).to_json() == report37.to_json()
        json.loads(report37.to_json())

    def test_text(self, report37):
        text = report37.to_text()
        assert text.splitlines()[0].startswith("Semi-cusp construction for (p, k) = (37, 32)")
        assert text.splitlines()[-1] == "overall: PASS"
        assert "case_ii (n, m) = (2, 30)" in text


@pytest.mark.parametrize("M,A", [(50, 2), (120, 3), (200, 5)])
def test_pass_is_stable_across_parameters(M, A):
    rep = ribet_construct(37, 32, M, A)
    assert rep.overall_pass
    assert rep.f.truncation == M and rep.f.prec == A


def test_c_constant_agrees_across_precisions():
    lo = ribet_construct(59, 44, 60, 2).constant_c
    hi = ribet_construct(59, 44, 60, 5).constant_c
    assert hi.reduce(2) == lo


class TestErrors:
    def test_regular_pair(self):
        with pytest.raises(InputNotIrregular):
            ribet_construct(37, 30)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            ribet_construct(37, 32, M=20)
        with pytest.raises(ValueError):
            ribet_construct(37, 32, prec=1)

    def test_out_of_range_index(self):
        with pytest.raises(IndexOutOfRange):
            ribet_construct(37, 33)

    def test_partial_report_on_arithmetic_error(self):
        # l_bound = 1 leaves no eigen checks and no witness: a partial, failing report
        rep = ribet_construct(37, 32, l_bound=1)
        assert not rep.overall_pass
        assert rep.error is not None and rep.error.startswith("NoWitnessFound")
        assert rep.constant_c is not None and rep.semicusp_verdict
        assert rep.to_dict()["distinguishing_prime"] is None


class TestWitness:
    @pytest.mark.parametrize("pair", [(37, 32), (59, 44), (67, 58), (103, 24), (157, 62)])
    def test_found(self, pair):
        w = distinguish_from_s2(*pair)
        p = pair[0]
        assert w.lhs != w.rhs and w.l != p
        eps_l = pow(w.l, pair[1] - 2, p)
        assert w.lhs == (1 + eps_l * w.l) % p and w.rhs == (w.l + eps_l) % p

    def test_trivial_character(self):
        with pytest.raises(TrivialCharacter):
            distinguish_from_s2(37, 2)

    def test_none_in_range(self):
        with pytest.raises(NoWitnessFound):
            distinguish_from_s2(37, 32, l_bound=1)


def test_check_lemma31():
    v = check_lemma31(37, 32, 100, 2)
    assert v == {"G2eps": (True, None), "G1eps": (True, None)}
    with pytest.raises(IndexOutOfRange):
        check_lemma31(37, 2)

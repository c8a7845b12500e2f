import pytest
from hypothesis import given, strategies as st

from smellforge import metrics as M
from smellforge.metrics import (
    Likelihood,
    MetricVector,
    Thresholds,
    Verdict,
    default_advisor,
)
from conftest import method_by_key

T = Thresholds()


def test_metric_oracle_classes(mini_model, metrics_expected):
    for name, want in metrics_expected["classes"].items():
        cls = mini_model.class_index[name]
        assert M.loc(cls) == want["loc"], f"{name} loc"
        assert M.nom(cls) == want["nom"], f"{name} nom"
        assert M.noa(cls) == want["noa"], f"{name} noa"


def test_metric_oracle_methods(mini_model, metrics_expected):
    for key, want in metrics_expected["methods"].items():
        _, m = method_by_key(mini_model, key)
        assert M.loc(m) == want["loc"], f"{key} loc"
        assert M.nfdi(m, mini_model) == want["nfdi"], f"{key} nfdi"


def test_nfdi_brute_force_recount(mini_model):
    # nfdi must equal a direct recount over raw sites
    from smellforge.model import ancestors

    for cls in mini_model.classes:
        anc = {a.qualified_name for a in ancestors(mini_model, cls)}
        for m in cls.methods:
            count = 0
            for acc in m.field_accesses:
                if (
                    acc.target.is_internal
                    and acc.target.name != cls.qualified_name
                    and acc.target.name not in anc
                ):
                    count += 1
            assert M.nfdi(m, mini_model) == count


def test_loc_never_exceeds_span(mini_model):
    for cls in mini_model.classes:
        assert M.loc(cls) <= cls.span[1] - cls.span[0] + 1
        for m in cls.methods:
            assert M.loc(m) <= m.span[1] - m.span[0] + 1


# -- possibility ranges ----------------------------------------------------


@pytest.mark.parametrize(
    "loc,want",
    [
        (10, Likelihood.LOW),
        (14, Likelihood.LOW),
        (15, Likelihood.MODERATE),
        (30, Likelihood.MODERATE),
        (31, Likelihood.HIGH),
        (45, Likelihood.HIGH),
    ],
)
def test_long_method_ranges(loc, want):
    assert M.likelihood_long_method(MetricVector(loc=loc), T) == want


@pytest.mark.parametrize(
    "loc,nom,noa,want",
    [
        (200, 15, 12, Likelihood.HIGH),
        (40, 3, 2, Likelihood.LOW),
        (200, 3, 2, Likelihood.MODERATE),
        (131, 11, 11, Likelihood.HIGH),
        (130, 11, 11, Likelihood.MODERATE),
        (69, 6, 4, Likelihood.LOW),
        (70, 6, 4, Likelihood.MODERATE),
    ],
)
def test_large_class_ranges(loc, nom, noa, want):
    assert M.likelihood_large_class(MetricVector(loc=loc, nom=nom, noa=noa), T) == want


@pytest.mark.parametrize(
    "nfdi,want",
    [
        (0, Likelihood.LOW),
        (1, Likelihood.LOW),
        (2, Likelihood.MODERATE),
        (3, Likelihood.MODERATE),
        (5, Likelihood.MODERATE),
        (6, Likelihood.HIGH),
    ],
)
def test_feature_envy_ranges(nfdi, want):
    assert M.likelihood_feature_envy(MetricVector(loc=1, nfdi=nfdi), T) == want


def test_thresholds_must_be_ordered():
    with pytest.raises(ValueError):
        Thresholds(lm_min=30, lm_max=30)


def test_threshold_overrides():
    t = Thresholds.from_overrides({"lm_max": 20})
    assert t.lm_max == 20 and t.lm_min == 15
    with pytest.raises(ValueError):
        Thresholds.from_overrides({"bogus": 1})


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=200))
def test_long_method_monotone_in_loc(a, b):
    lo, hi = sorted((a, b))
    x = M.likelihood_long_method(MetricVector(loc=lo), T)
    y = M.likelihood_long_method(MetricVector(loc=hi), T)
    assert x.rank <= y.rank


@given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50))
def test_feature_envy_monotone_in_nfdi(a, b):
    lo, hi = sorted((a, b))
    x = M.likelihood_feature_envy(MetricVector(loc=1, nfdi=lo), T)
    y = M.likelihood_feature_envy(MetricVector(loc=1, nfdi=hi), T)
    assert x.rank <= y.rank


@given(
    st.integers(min_value=0, max_value=300),
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=0, max_value=50),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=10),
)
def test_large_class_monotone_when_all_rise(loc, nom, noa, dl, dn, da):
    x = M.likelihood_large_class(MetricVector(loc=loc, nom=nom, noa=noa), T)
    y = M.likelihood_large_class(
        MetricVector(loc=loc + dl, nom=nom + dn, noa=noa + da), T
    )
    assert x.rank <= y.rank


@given(st.integers(min_value=0, max_value=500))
def test_likelihoods_total(loc):
    assert M.likelihood_long_method(MetricVector(loc=loc), T) in list(Likelihood)


# -- advisor ------------------------------------------------------------------


def test_advisor_straight_line_negative(mini_model):
    _, plain = method_by_key(mini_model, "shop.Wide.plain/1")
    assert default_advisor(plain, mini_model) == Verdict.NEGATIVE


def test_advisor_many_params_positive(mini_model):
    _, wide = method_by_key(mini_model, "shop.Wide.manyParams/5")
    assert default_advisor(wide, mini_model) == Verdict.POSITIVE


def test_advisor_deep_nesting_positive(mini_model):
    _, deep = method_by_key(mini_model, "shop.Wide.deepNest/1")
    assert default_advisor(deep, mini_model) == Verdict.POSITIVE

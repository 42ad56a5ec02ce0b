from fractions import Fraction

import pytest

from homstruct import catalog
from homstruct.axioms import check_class, check_multiplicative
from homstruct.core import (
    AlgebraPresentation,
    LinearMap,
    RepresentationPresentation,
)
from homstruct.representations import (
    PreconditionError,
    check_rep,
    dual_representation,
    regular_representation,
    rep_commutator,
    semidirect_product,
)

from helpers import bound_fixtures

F = Fraction


def _plp2_bimodule():
    # one-dimensional bimodule over PLP2: only the left action of e1 is nonzero
    return RepresentationPresentation(2, 1, {
        "s": (LinearMap.zero(1), LinearMap.zero(1)),
        "l": (LinearMap.from_rows([[F(3)]]), LinearMap.zero(1)),
        "r": (LinearMap.zero(1), LinearMap.zero(1)),
    }, LinearMap.zero(1))


def _hom_lie_from(a):
    return AlgebraPresentation(
        a.dim, {"bracket": a.op("bracket")}, {"alpha": a.alpha}, a.basis)


def test_regular_reps_multiplicative_fixtures():
    for name, label, a, cls in bound_fixtures():
        if not check_multiplicative(a).passed:
            continue
        rep = regular_representation(a, cls)
        assert check_rep(a, rep, cls).passed, (name, label)


def test_plp2_regular_rep_fails_twist_intertwining():
    # alpha = 2*id is not multiplicative, so left-multiplying by alpha(x)
    # does not match beta-conjugation in the regular actions
    a = catalog.get("PLP2", {"a": F(1)})
    rep = regular_representation(a, "hom-pre-lie-poisson")
    assert not check_rep(a, rep, "hom-pre-lie-poisson").passed


def test_plp2_explicit_bimodule_passes():
    a = catalog.get("PLP2", {"a": F(0)})
    rep = _plp2_bimodule()
    assert check_rep(a, rep, "hom-pre-lie-poisson").passed
    assert check_rep(a, rep, "hom-pre-lie").passed


def test_semidirect_all_classes():
    ca = catalog.get("CA2a")
    thp = catalog.get("THP2", {"lam": F(1)})
    plp = catalog.get("PLP2", {"a": F(0)})
    cases = [
        (ca, regular_representation(ca, "comm-hom-assoc"), "comm-hom-assoc"),
        (_hom_lie_from(thp),
         regular_representation(_hom_lie_from(thp), "hom-lie"), "hom-lie"),
        (thp, regular_representation(thp, "transposed-hom-poisson"),
         "transposed-hom-poisson"),
        (plp, _plp2_bimodule(), "hom-pre-lie"),
        (plp, _plp2_bimodule(), "hom-pre-lie-poisson"),
    ]
    for a, rep, cls in cases:
        sd = semidirect_product(a, rep, cls)
        assert sd.dim == a.dim + rep.module_dim
        assert check_class(sd, cls).passed, cls


def test_semidirect_rejects_bad_module():
    a = catalog.get("THP2", {"lam": F(1)})
    bad = RepresentationPresentation(2, 1, {
        "s": (LinearMap.from_rows([[F(1)]]), LinearMap.from_rows([[F(1)]])),
        "rho": (LinearMap.from_rows([[F(1)]]), LinearMap.from_rows([[F(1)]])),
    }, LinearMap.identity(1))
    with pytest.raises(PreconditionError):
        semidirect_product(a, bad, "transposed-hom-poisson")


def test_dual_representation_regular_hypotheses():
    # frozen verdicts: the mixed hypotheses fail for both regular modules,
    # and the resulting dual actions fail the transposed module axioms
    tp2 = catalog.get("TP2")
    reg = regular_representation(tp2, "transposed-hom-poisson")
    dual, hyp = dual_representation(tp2, reg)
    assert not hyp.passed
    assert sorted({w[0] for w in hyp.witnesses}) == ["hyp-mixed-1", "hyp-mixed-2"]
    assert not check_rep(tp2, dual, "transposed-hom-poisson").passed

    thp = catalog.get("THP2", {"lam": F(1)})
    reg = regular_representation(thp, "transposed-hom-poisson")
    dual, hyp = dual_representation(thp, reg)
    assert not hyp.passed
    assert sorted({w[0] for w in hyp.witnesses}) == [
        "hyp-mixed-1", "hyp-mixed-2", "hyp-strict-commute:s"]
    assert not check_rep(thp, dual, "transposed-hom-poisson").passed


def test_dual_representation_when_hypotheses_pass():
    # one-dimensional module where every hypothesis holds: the dual passes
    a = catalog.get("TP2")
    b = F(2)
    rep = RepresentationPresentation(2, 1, {
        "s": (LinearMap.zero(1), LinearMap.from_rows([[b]])),
        "rho": (LinearMap.zero(1), LinearMap.zero(1)),
    }, LinearMap.from_rows([[b]]))
    assert check_rep(a, rep, "transposed-hom-poisson").passed
    dual, hyp = dual_representation(a, rep)
    assert hyp.passed
    assert check_rep(a, dual, "transposed-hom-poisson").passed
    # dual twist is the transpose, dual rho flips sign
    assert dual.beta == rep.beta.transpose()
    assert dual.actions["s"][1] == rep.actions["s"][1].transpose()
    assert dual.actions["rho"][1] == -rep.actions["rho"][1].transpose()


def test_rep_commutator():
    plp = catalog.get("PLP2", {"a": F(0)})
    rep = _plp2_bimodule()
    rho = rep_commutator(rep)
    assert rho.actions["rho"][0] == rep.actions["l"][0] - rep.actions["r"][0]

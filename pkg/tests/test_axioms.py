from fractions import Fraction

import pytest

from homstruct import catalog
from homstruct.axioms import (
    CLASS_CHECKERS,
    MissingOperationError,
    check_class,
    check_derivation,
    check_morphism,
    check_multiplicative,
    check_poisson_intersection,
    check_transposed_consequences,
    resolve_class,
)
from homstruct.core import LinearMap

from helpers import bound_fixtures, naive_class_verdict

F = Fraction


def test_resolve_class_aliases():
    assert resolve_class("transposed-poisson") == "transposed-hom-poisson"
    assert resolve_class("comm-hom-assoc") == "comm-hom-assoc"
    with pytest.raises(KeyError):
        resolve_class("nope")


def test_all_fixtures_pass_their_class():
    for name, label, a, cls in bound_fixtures():
        rep = check_class(a, cls)
        assert rep.passed, (name, label, rep.witnesses[:2])
        assert rep.checked > 0


def test_thp2_is_hom_poisson_iff_lambda_zero():
    # the Leibniz rule picks up the lambda-scaled product
    a0 = catalog.get("THP2", {"lam": F(0)})
    assert check_class(a0, "hom-poisson").passed
    for lam in (F(1), F(5, 2), F(-1, 3)):
        a = catalog.get("THP2", {"lam": lam})
        rep = check_class(a, "hom-poisson")
        assert not rep.passed
        assert any(w[0].startswith("poisson-leibniz") for w in rep.witnesses)
        # still transposed for every lambda
        assert check_class(a, "transposed-hom-poisson").passed


def test_missing_operation():
    a = catalog.get("TP2")
    with pytest.raises(MissingOperationError):
        check_class(a, "hom-pre-lie")


def test_known_negative_fixture():
    a = catalog.get("THP2-as-hom-poisson", {"lam": F(1)})
    assert not check_class(a, "hom-poisson").passed


def test_transposed_consequences():
    for lam in (F(0), F(1), F(5, 2)):
        a = catalog.get("THP2", {"lam": lam})
        assert check_transposed_consequences(a).passed
    a = catalog.get("TP2")
    assert check_transposed_consequences(a).passed


def test_poisson_intersection():
    # lam=0 sits in the intersection; lam!=0 does not
    a0 = catalog.get("THP2", {"lam": F(0)})
    assert check_poisson_intersection(a0).passed
    a1 = catalog.get("THP2", {"lam": F(1)})
    assert not check_poisson_intersection(a1).passed


def test_multiplicativity_facts():
    # PLP2 (alpha = 2*id) and the HP3 binding are not multiplicative
    for name, label, a, cls in bound_fixtures():
        rep = check_multiplicative(a)
        if name in ("PLP2", "HP3"):
            assert not rep.passed, label
        else:
            assert rep.passed, (name, label, rep.witnesses[:2])


def test_derivation_check():
    a = catalog.get("THP2", {"lam": F(1)})
    d = LinearMap.diagonal([F(0), F(1)])
    assert check_derivation(a, "dot", d).passed
    assert not check_derivation(a, "dot", LinearMap.diagonal([F(1), F(0)])).passed


def test_morphism_check():
    a = catalog.get("TP2")
    assert check_morphism(a, a, LinearMap.identity(2)).passed
    # e1 scales linearly in both products, so diag(t,1) is a morphism
    assert check_morphism(a, a, LinearMap.diagonal([F(3), F(1)])).passed
    neg = LinearMap.diagonal([F(-1), F(-1)])
    assert not check_morphism(a, a, neg).passed
    rep = check_morphism(a, a, neg, op_names=("dot",))
    assert not rep.passed
    assert all(w[0] == "morphism:dot" for w in rep.witnesses)


def test_identity_oracles_agree_on_fixtures():
    for name, label, a, cls in bound_fixtures():
        assert naive_class_verdict(a, cls), (name, label)
        assert check_class(a, cls).passed


def test_witness_cap_and_order():
    a = catalog.get("THP2-as-hom-poisson", {"lam": F(1)})
    rep = check_class(a, "hom-poisson", max_witnesses=2)
    assert len(rep.witnesses) <= 2
    assert list(rep.witnesses) == sorted(rep.witnesses, key=lambda w: (w[0], w[1]))


def test_class_names_cover_catalog_targets():
    targets = {catalog.target_class(n) for n in catalog.names()}
    assert targets <= set(CLASS_CHECKERS)

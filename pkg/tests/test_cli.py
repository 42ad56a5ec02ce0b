import json
from fractions import Fraction

import pytest

from homstruct import catalog
from homstruct.cli import main
from homstruct.core import (
    LinearMap,
    serialize_algebra,
    serialize_comultiplications,
    serialize_o_operator,
    serialize_representation,
)
from homstruct.duality import comultiplications_from_dual_algebra, trivial_dual
from homstruct.representations import regular_representation

F = Fraction

PASS, FAIL, USAGE, PRECONDITION = 0, 1, 2, 3


@pytest.fixture
def thp2_file(tmp_path):
    p = tmp_path / "thp2.json"
    p.write_text(serialize_algebra(catalog.get("THP2", {"lam": F(1)})))
    return str(p)


@pytest.fixture
def plp2_file(tmp_path):
    p = tmp_path / "plp2.json"
    p.write_text(serialize_algebra(catalog.get("PLP2", {"a": F(0)})))
    return str(p)


@pytest.fixture
def thp2_reg_file(tmp_path):
    a = catalog.get("THP2", {"lam": F(1)})
    rep = regular_representation(a, "transposed-hom-poisson")
    p = tmp_path / "reg.json"
    p.write_text(serialize_representation(rep))
    return str(p)


def test_check_pass_and_fail(thp2_file, capsys):
    assert main(["check", thp2_file, "--class", "transposed-hom-poisson"]) == PASS
    assert main(["check", thp2_file, "--class", "hom-poisson"]) == FAIL
    out = capsys.readouterr().out
    assert "verdict: fail" in out


def test_check_json_report_schema(thp2_file, capsys):
    assert main(["check", thp2_file, "--class", "transposed-hom-poisson",
                 "--json"]) == PASS
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "check"
    assert doc["verdict"] == "pass"
    assert doc["failures"] == 0
    assert "witnesses" in doc and "sub_reports" in doc


def test_check_deterministic_output(thp2_file, capsys):
    main(["check", thp2_file, "--class", "transposed-hom-poisson", "--json"])
    first = capsys.readouterr().out
    main(["check", thp2_file, "--class", "transposed-hom-poisson", "--json"])
    assert capsys.readouterr().out == first


def test_twist_alpha_h(tmp_path, capsys):
    tp2 = tmp_path / "tp2.json"
    tp2.write_text(serialize_algebra(catalog.get("TP2")))
    out = tmp_path / "twisted.json"
    assert main(["twist", str(tp2), "--class", "transposed-hom-poisson",
                 "--alpha-h", "e1", "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_twist_derived(thp2_file, tmp_path):
    out = tmp_path / "derived.json"
    assert main(["twist", thp2_file, "--class", "transposed-hom-poisson",
                 "--derived", "1", "--type", "2", "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_tensor(thp2_file, tmp_path):
    out = tmp_path / "tensor.json"
    assert main(["tensor", thp2_file, thp2_file, "--class",
                 "transposed-hom-poisson", "-o", str(out)]) == PASS
    doc = json.loads(out.read_text())
    assert doc["dim"] == 4


def test_subadjacent(plp2_file, tmp_path):
    out = tmp_path / "sub.json"
    assert main(["subadjacent", plp2_file, "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_bracketd(tmp_path):
    # THP2 with the catalog derivation D = diag(0, lam) attached as a map
    a = catalog.get("THP2", {"lam": F(1)})
    maps = dict(a.maps)
    maps["D"] = LinearMap.diagonal([F(0), F(1)])
    from homstruct.core import AlgebraPresentation
    src = tmp_path / "alg.json"
    src.write_text(serialize_algebra(
        AlgebraPresentation(a.dim, {"dot": a.op("dot")}, maps, a.basis)))
    out = tmp_path / "built.json"
    assert main(["bracketd", str(src), "--map", "D", "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_semidirect_and_checkrep(thp2_file, thp2_reg_file, tmp_path):
    assert main(["checkrep", thp2_file, thp2_reg_file, "--class",
                 "transposed-hom-poisson"]) == PASS
    out = tmp_path / "sd.json"
    assert main(["semidirect", thp2_file, thp2_reg_file, "--class",
                 "transposed-hom-poisson", "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_dualrep(thp2_file, thp2_reg_file, tmp_path):
    dual_out = tmp_path / "dual.json"
    # hypotheses fail for the regular module, so the verdict is fail
    assert main(["dualrep", thp2_file, thp2_reg_file,
                 "--rep-output", str(dual_out)]) == FAIL
    assert dual_out.exists()
    assert main(["checkrep", thp2_file, str(dual_out), "--class",
                 "transposed-hom-poisson"]) == FAIL


def test_matched_check_and_double(thp2_file, thp2_reg_file, tmp_path):
    a = catalog.get("THP2", {"lam": F(1)})
    from homstruct.matched_pairs import (
        matched_pair_from_representation,
    )
    from homstruct.representations import regular_representation as reg
    mp = matched_pair_from_representation(
        a, reg(a, "transposed-hom-poisson"), "transposed-hom-poisson")
    b_file = tmp_path / "b.json"
    b_file.write_text(serialize_algebra(mp.algebra_b))
    ab = tmp_path / "ab.json"
    ab.write_text(serialize_representation(mp.actions_ab))
    ba = tmp_path / "ba.json"
    ba.write_text(serialize_representation(mp.actions_ba))
    argv_tail = [thp2_file, str(b_file), str(ab), str(ba),
                 "--class", "transposed-hom-poisson"]
    assert main(["matched", "check"] + argv_tail) == PASS
    out = tmp_path / "double.json"
    assert main(["matched", "double"] + argv_tail + ["-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "transposed-hom-poisson"]) == PASS


def test_manin(thp2_file, tmp_path):
    dual = tmp_path / "dual.json"
    dual.write_text(serialize_algebra(
        trivial_dual(catalog.get("THP2", {"lam": F(1)}))))
    assert main(["manin", thp2_file, str(dual)]) == FAIL


def test_bialgebra(thp2_file, tmp_path):
    a = catalog.get("THP2", {"lam": F(1)})
    coops = comultiplications_from_dual_algebra(trivial_dual(a))
    cf = tmp_path / "coops.json"
    cf.write_text(serialize_comultiplications(a.dim, coops))
    assert main(["bialgebra", thp2_file, str(cf)]) == PASS


def test_equivalence(thp2_file, tmp_path, capsys):
    dual = tmp_path / "dual.json"
    dual.write_text(serialize_algebra(
        trivial_dual(catalog.get("THP2", {"lam": F(1)}))))
    # the three verdicts disagree for the zero dual: reported as a failure
    assert main(["equivalence", thp2_file, str(dual)]) == FAIL
    assert "equivalence broken" in capsys.readouterr().err


def test_oop_check_and_induce(plp2_file, tmp_path):
    sub = tmp_path / "sub.json"
    assert main(["subadjacent", plp2_file, "-o", str(sub)]) == PASS
    from homstruct.core import parse_algebra
    a = parse_algebra(sub.read_text())
    rep = regular_representation(a, "transposed-hom-poisson")
    rf = tmp_path / "rep.json"
    rf.write_text(serialize_representation(rep))
    tf = tmp_path / "T.json"
    tf.write_text(serialize_o_operator(LinearMap.identity(2)))
    assert main(["oop", "check", str(sub), str(rf), str(tf), "--class",
                 "transposed-hom-poisson"]) == PASS
    out = tmp_path / "induced.json"
    assert main(["oop", "induce", str(sub), str(rf), str(tf), "--class",
                 "transposed-hom-poisson", "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "hom-pre-lie-poisson"]) == PASS


def test_rb_check_and_induce(thp2_file, tmp_path):
    rf = tmp_path / "R.json"
    rf.write_text(serialize_o_operator(LinearMap.zero(2)))
    assert main(["rb", "check", thp2_file, str(rf)]) == PASS
    out = tmp_path / "induced.json"
    assert main(["rb", "induce", thp2_file, str(rf), "-o", str(out)]) == PASS
    assert main(["check", str(out), "--class", "hom-pre-lie-poisson"]) == PASS


def test_derivations(thp2_file, capsys):
    assert main(["derivations", thp2_file, "--op", "dot", "--json"]) == PASS
    doc = json.loads(capsys.readouterr().out)
    assert doc["dimension"] == 1
    assert doc["basis"] == [[["0", "0"], ["0", "1"]]]


def test_catalog_list_and_show(capsys, tmp_path):
    assert main(["catalog", "list"]) == PASS
    assert "THP2" in capsys.readouterr().out
    out = tmp_path / "thp2.json"
    assert main(["catalog", "show", "THP2", "--params", "lam=1",
                 "-o", str(out)]) == PASS
    assert json.loads(out.read_text())["dim"] == 2


def test_usage_errors(tmp_path, capsys):
    assert main(["bogus"]) == USAGE
    assert main(["catalog", "show"]) == USAGE
    assert main(["check", str(tmp_path / "missing.json"),
                 "--class", "hom-lie"]) == USAGE
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert main(["check", str(bad), "--class", "hom-lie"]) == USAGE
    capsys.readouterr()


def test_precondition_exit_code(thp2_file, capsys):
    # asking for a class whose operations the algebra does not carry
    assert main(["check", thp2_file, "--class", "hom-pre-lie"]) == PRECONDITION
    capsys.readouterr()

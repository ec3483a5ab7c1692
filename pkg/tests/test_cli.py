import json

import pytest

from lietrip.cli import main
from lietrip.cohom import h2_graded
from lietrip.corpus import ab2, abl, by_name, even_line, heis, odd2, sl2graded, sl2lts
from lietrip.embed import universal_imbedding
from lietrip.exactlin import Matrix, QQ
from lietrip.grlie import GradedHom, adjoint_module, direct_sum, trivial_module
from lietrip.lts import LieTripleSystem, LtsHom
from lietrip.serialize import PayloadError, load, save


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip() else None
    return code, report, out.err


# ---------------------------------------------------------------------------
# serialization

def test_roundtrip_corpus_entries():
    names = ["abl(1)", "abl(2)", "abl(3)", "abl(4)", "odd2", "sl2lts",
             "heis", "ab2", "sl2graded", "a_of(abl(2))", "a_of(odd2)"]
    for name in names:
        obj = by_name(name)
        assert load(save(obj, name=name)) == obj


def test_roundtrip_other_kinds():
    hom = LtsHom(odd2(), sl2lts(), Matrix.make(QQ, [[0, 0], [1, 0], [0, 1]]))
    assert load(save(hom)) == hom

    env = universal_imbedding(odd2())
    assert load(save(env.upsilon)) == env.upsilon

    assert load(save(adjoint_module(sl2graded()))) == adjoint_module(sl2graded())
    assert load(save(trivial_module(heis(), 2))) == trivial_module(heis(), 2)

    rep = h2_graded(ab2(), trivial_module(ab2())).representatives[0]
    assert load(save(rep)) == rep


def test_roundtrip_over_prime_field():
    from lietrip.exactlin import Field
    obj = sl2lts(Field(5))
    payload = save(obj)
    assert payload["field"] == "Fp:5"
    assert load(payload) == obj


def test_loader_rejects_invalid_unless_unchecked():
    broken = LieTripleSystem(QQ, 1, ((((QQ.of(1),),),),), unchecked=True)
    payload = save(broken)
    with pytest.raises(ValueError):
        load(payload)
    assert load(payload, unchecked=True) == broken


def test_loader_rejects_malformed():
    with pytest.raises(PayloadError):
        load({"kind": "lts"})
    with pytest.raises(PayloadError):
        load({"format_version": 99, "kind": "lts", "field": "Q",
              "dims": {"dim": 0}, "entries": []})
    with pytest.raises(PayloadError):
        load({"format_version": 1, "kind": "nope", "field": "Q",
              "dims": {}, "entries": []})


# ---------------------------------------------------------------------------
# CLI commands

def test_cli_corpus_and_field(capsys, tmp_path):
    code, report, _ = run_cli(capsys, "corpus", "heis")
    assert code == 0
    assert load(report["derived"]["heis"]) == heis()

    code, report, _ = run_cli(capsys, "corpus", "a_of(abl(2))")
    assert code == 0
    assert load(report["derived"]["a_of(abl(2))"]).bracket == heis().bracket

    code, report, _ = run_cli(capsys, "corpus", "odd2", "--field", "Fp:3")
    assert code == 0
    assert report["field"] == "Fp:3"

    code, _, err = run_cli(capsys, "corpus", "nosuch")
    assert code == 2 and "nosuch" in err


def test_cli_rejects_non_prime_field(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["corpus", "heis", "--field", "Fp:4"])
    assert exc.value.code == 2


def test_cli_check_lts(capsys, tmp_path):
    code, report, _ = run_cli(capsys, "check-lts", "abl(3)")
    assert code == 0 and report["verdict"] == "pass"

    broken = LieTripleSystem(QQ, 1, ((((QQ.of(1),),),),), unchecked=True)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(save(broken)))
    code, report, _ = run_cli(capsys, "check-lts", str(path))
    assert code == 1 and report["verdict"] == "fail"
    assert report["witnesses"]["violations"]["count"] >= 1


def test_cli_check_graded_and_univ_pipe(capsys, tmp_path):
    code, report, _ = run_cli(capsys, "univ", "sl2lts")
    assert code == 0
    assert report["dimensions"] == {"dim0": 3, "dim1": 3, "kernel_dim": 0}
    alg_path = tmp_path / "a_of_sl2lts.json"
    alg_path.write_text(json.dumps(report["derived"]["algebra"]))
    code2, report2, _ = run_cli(capsys, "check-graded", str(alg_path))
    assert code2 == 0 and report2["verdict"] == "pass"


def test_cli_derive_inder_ste(capsys):
    code, report, _ = run_cli(capsys, "derive", "odd2")
    assert code == 0 and report["dimensions"]["dim"] == 1

    code, report, _ = run_cli(capsys, "inder", "sl2lts")
    assert code == 0 and report["dimensions"]["dim"] == 3
    assert report["witnesses"]["ideal_closure"] is True

    code, report, _ = run_cli(capsys, "ste", "odd2")
    assert code == 0 and report["dimensions"] == {"dim0": 1, "dim1": 2}
    assert load(report["derived"]["algebra"]) is not None


def test_cli_extend(capsys, tmp_path):
    hom = LtsHom(odd2(), odd2(), Matrix.identity(QQ, 2))
    hom_path = tmp_path / "hom.json"
    hom_path.write_text(json.dumps(save(hom)))
    code, report, _ = run_cli(capsys, "extend", str(hom_path), "sl2graded")
    assert code == 0
    ext = load(report["derived"]["extension"])
    assert isinstance(ext, GradedHom)
    assert ext.is_bijective()

    # a hom whose target is not the odd part of the algebra is invalid input
    bad = LtsHom(abl(2), abl(2), Matrix.identity(QQ, 2))
    bad_path = tmp_path / "bad.json"
    bad_path.write_text(json.dumps(save(bad)))
    code, _, err = run_cli(capsys, "extend", str(bad_path), "sl2graded")
    assert code == 2 and "odd part" in err


def test_cli_h2_closed(capsys):
    code, report, _ = run_cli(capsys, "h2", "heis")
    assert code == 0 and report["dimensions"]["h2"] == 0

    code, report, _ = run_cli(capsys, "h2", "ab2")
    assert code == 0 and report["dimensions"]["h2"] == 1
    assert len(report["derived"]["representatives"]) == 1

    assert run_cli(capsys, "closed", "heis")[0] == 0
    code, report, _ = run_cli(capsys, "closed", "ab2")
    assert code == 1 and report["verdict"] == "false"


def test_cli_split(capsys, tmp_path):
    proj = GradedHom(heis(), ab2(), Matrix.make(QQ, [[0, 1, 0], [0, 0, 1]]))
    path = tmp_path / "proj.json"
    path.write_text(json.dumps(save(proj)))
    code, report, _ = run_cli(capsys, "split", str(path))
    assert code == 1 and report["verdict"] == "false"
    assert report["witnesses"]["h2_dim"] == 1

    from lietrip.grlie import identity_hom
    iso_path = tmp_path / "iso.json"
    iso_path.write_text(json.dumps(save(identity_hom(heis()))))
    code, report, _ = run_cli(capsys, "split", str(iso_path))
    assert code == 0 and report["verdict"] == "true"
    psi = load(report["derived"]["splitting"])
    assert psi.matrix == Matrix.identity(QQ, 3)


def test_cli_thm_a(capsys, tmp_path):
    code, report, _ = run_cli(capsys, "thm-a", "heis")
    assert code == 0 and report["verdict"] == "true"
    assert report["witnesses"]["isomorphism"]

    code, report, _ = run_cli(capsys, "thm-a", "ab2")
    assert code == 1 and report["verdict"] == "false"
    assert "dimension 1" in report["witnesses"]["obstruction"]

    notgen = direct_sum(sl2graded(), even_line())
    path = tmp_path / "notgen.json"
    path.write_text(json.dumps(save(notgen)))
    code, report, _ = run_cli(capsys, "thm-a", str(path))
    assert code == 1
    assert "does not generate" in report["witnesses"]["obstruction"]


def test_cli_u0ext(capsys, tmp_path):
    code, report, _ = run_cli(capsys, "u0ext", "ab2")
    assert code == 0
    assert report["dimensions"]["kernel_dim"] == 1

    notgen = direct_sum(sl2graded(), even_line())
    path = tmp_path / "notgen.json"
    path.write_text(json.dumps(save(notgen)))
    code, _, err = run_cli(capsys, "u0ext", str(path))
    assert code == 2 and "generated" in err


def test_cli_malformed_file(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "check-lts", str(path))
    assert code == 2 and "junk.json" in err

    path2 = tmp_path / "wrongkind.json"
    path2.write_text(json.dumps(save(heis())))
    code, _, err = run_cli(capsys, "check-lts", str(path2))
    assert code == 2 and "expected" in err


def test_cli_unchecked_flag(capsys, tmp_path):
    broken = LieTripleSystem(QQ, 1, ((((QQ.of(1),),),),), unchecked=True)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(save(broken)))
    code, _, _ = run_cli(capsys, "derive", str(path))
    assert code == 2
    code, report, _ = run_cli(capsys, "derive", str(path), "--unchecked")
    assert code == 0


def test_cli_byte_stability(capsys):
    code1 = main(["thm-a", "heis"])
    out1 = capsys.readouterr().out
    code2 = main(["thm-a", "heis"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_out_flag(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, report, _ = run_cli(capsys, "h2", "heis", "--out", str(out_path))
    assert code == 0
    on_disk = json.loads(out_path.read_text())
    assert on_disk == report

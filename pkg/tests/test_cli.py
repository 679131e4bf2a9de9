import io
import json

import pytest

from mrcodes.cli import decode_file, encode_file, main, repair_file
from mrcodes.codespec import code_from_dict, code_to_dict, load_code, save_code
from mrcodes.errors import (MultipleErasuresInGroup, NotCorrectable, ParseError,
                            PropertyViolation)
from mrcodes.pipeline import construct


@pytest.fixture(scope="module")
def code6():
    return construct(2, 101)[0]


@pytest.fixture()
def spec_path(code6, tmp_path):
    path = tmp_path / "spec.json"
    save_code(code6, path)
    return path


class TestCodeSpec:
    def test_round_trip(self, code6):
        doc = code_to_dict(code6)
        rebuilt = code_from_dict(json.loads(json.dumps(doc)))
        assert [[e.value for e in row] for row in rebuilt.G] == \
               [[e.value for e in row] for row in code6.G]
        assert rebuilt.family.elements == code6.family.elements

    def test_save_load(self, code6, spec_path):
        loaded = load_code(spec_path)
        assert loaded.n == 6 and loaded.field.q == 101

    def test_tampered_G_rejected(self, code6):
        doc = code_to_dict(code6)
        doc["G"][0][0] = (doc["G"][0][0] + 1) % 101
        with pytest.raises(PropertyViolation):
            code_from_dict(doc)

    def test_schema_fields(self, code6):
        doc = code_to_dict(code6)
        assert doc["derived"] == {"n": 6, "k": 3, "h": 1}
        assert doc["lambda"] == {"num": 1, "den": 16}
        assert doc["rng"].startswith("mt19937")


class TestStreams:
    def test_encode(self, code6):
        out = io.StringIO()
        encode_file(code6, io.StringIO("1 0 0\n"), out)
        assert out.getvalue() == "2 27 58 4 54 65\n"

    def test_decode_round_trip(self, code6):
        out = io.StringIO()
        decode_file(code6, io.StringIO("? ? 58 4 54 65\n"), out)
        assert out.getvalue() == "1 0 0\n"

    def test_decode_full_group_erased(self, code6):
        with pytest.raises(NotCorrectable, match="block 0"):
            decode_file(code6, io.StringIO("? ? ? 4 54 65\n"), io.StringIO())

    def test_decode_with_erasure_list(self, code6):
        out = io.StringIO()
        decode_file(code6, io.StringIO("2 27 58 4 54 65\n"), out, erasures=[0, 3])
        assert out.getvalue() == "1 0 0\n"

    def test_repair(self, code6):
        out = io.StringIO()
        repair_file(code6, io.StringIO("? 27 58 4 54 ?\n"), out)
        assert out.getvalue() == "2 27 58 4 54 65\n"

    def test_repair_two_in_group(self, code6):
        with pytest.raises(MultipleErasuresInGroup, match="block 0"):
            repair_file(code6, io.StringIO("? ? 58 4 54 65\n"), io.StringIO())

    def test_multiblock(self, code6):
        out = io.StringIO()
        encode_file(code6, io.StringIO("1 0 0\n0 0 1\n"), out)
        assert out.getvalue().splitlines() == ["2 27 58 4 54 65", "7 88 80 63 4 5"]

    @pytest.mark.parametrize("text,msg", [
        ("1 x 0", "not an integer"),
        ("1 101 0", "outside"),
        ("1 0", "incomplete final block"),
        ("? 0 0", "erasure mark"),
    ])
    def test_parse_errors(self, code6, text, msg):
        with pytest.raises(ParseError, match=msg):
            encode_file(code6, io.StringIO(text), io.StringIO())

    def test_parse_error_position(self, code6):
        with pytest.raises(ParseError) as err:
            encode_file(code6, io.StringIO("1 0 0\n1 abc 0\n"), io.StringIO())
        assert err.value.line == 2 and err.value.column == 3


class TestMain:
    def test_construct_and_verify(self, tmp_path, capsys):
        out = tmp_path / "spec.json"
        assert main(["construct", "--r", "2", "--q", "101", "--out", str(out)]) == 0
        assert main(["verify", str(out), "--exhaustive"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["ok"] and report["mode"] == "exhaustive"
        assert report["mds_subsets_checked"] == 20

    def test_encode_decode_pipe(self, spec_path, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 0 0\n"))
        assert main(["encode", "--spec", str(spec_path)]) == 0
        codeword = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(codeword))
        assert main(["decode", "--spec", str(spec_path), "--erasures", "1,4"]) == 0
        assert capsys.readouterr().out == "1 0 0\n"

    def test_decode_failure_exit_code(self, spec_path, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("? ? ? 4 54 65\n"))
        assert main(["decode", "--spec", str(spec_path)]) == 1
        assert "block 0" in capsys.readouterr().err

    def test_parse_error_exit_code(self, spec_path, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("1 nope 0\n"))
        assert main(["encode", "--spec", str(spec_path)]) == 2

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["construct", "--r", "2"])  # missing --q/--out
        assert exc.value.code == 2

    def test_simulate(self, spec_path, capsys):
        assert main(["simulate", "--spec", str(spec_path), "--p", "0.1",
                     "--trials", "200", "--seed", "7"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["trials"] == 200 and report["seed"] == 7
        c = report["counts"]
        assert (c["intact"] + c["local_only"] + c["global_decodes"]
                + c["failures"]) == 200

    def test_scaling(self, capsys):
        assert main(["scaling", "--r", "2", "--q-list", "101,211"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert [row["q"] for row in rows] == [101, 211]

import pytest

from termforge import collate, emit_dialect, parse_dialect, samples
from termforge.cli import REGISTRY_ENV, run

SAMPLE = str(samples.data_path("elearning.gmt"))
WRITING = str(samples.data_path("writing_instruments.gmt"))

TWO_TOPS = ("collection t\n"
            "concept a\n  term en :: alpha\n  rel generic b\n"
            "concept b\n  term en :: beta\n"
            "concept c\n  term en :: gamma\n  rel generic b\n")


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ltml(tmp_path, elearning):
    path = tmp_path / "s.ltml"
    path.write_bytes(emit_dialect(*elearning, "listtml")[0])
    return path


class TestValidate:
    def test_sample_clean(self, capsys):
        assert cli(capsys, "validate", SAMPLE) == (0, "", "")

    def test_errors_exit_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.ltml"
        bad.write_text("collection t\nconcept a\n  term en :: x\n  rel generic a\n", encoding="utf-8")
        code, out, _ = cli(capsys, "validate", str(bad))
        assert code == 1
        assert out.startswith("ERROR\tSELF_LOOP\trel:generic:a:a\t")

    def test_warnings_and_strict(self, capsys, tmp_path):
        path = tmp_path / "tops.ltml"
        path.write_text(TWO_TOPS, encoding="utf-8")
        code, out, _ = cli(capsys, "validate", str(path))
        assert code == 0 and out.startswith("WARNING\tMULTI_TOP\t")
        assert cli(capsys, "validate", "--strict", str(path))[0] == 1

    def test_many_files(self, capsys, tmp_path):
        path = tmp_path / "tops.ltml"
        path.write_text(TWO_TOPS, encoding="utf-8")
        code, out, _ = cli(capsys, "validate", SAMPLE, WRITING, str(path))
        assert code == 0
        assert [line.split("\t")[:2] for line in out.splitlines()] == [[str(path), "WARNING"]]

    def test_parse_error_position(self, capsys, tmp_path):
        path = tmp_path / "x.ltml"
        path.write_text("collection t\nconcept c-1\n  wibble\n", encoding="utf-8")
        code, out, err = cli(capsys, "validate", str(path))
        assert code == 2 and out == ""
        assert err.startswith(f"ERROR\tSYNTAX\t{path}:3\t")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = cli(capsys, "validate", str(tmp_path / "nope.gmt"))
        assert code == 3 and "cannot read" in err

    def test_registry_flag_and_env(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "x.gmt"
        path.write_text('<tdc id="t"><gi/><te id="c-1"><feat cat="pedagogicalLevel">primary</feat>'
                        '<ls lang="en"><tl><feat cat="term">x</feat></tl></ls></te></tdc>',
                        encoding="utf-8")
        # the builtin registry does not know the category
        code, out, _ = cli(capsys, "validate", str(path))
        assert code == 1 and "UNKNOWN_CATEGORY" in out
        reg = str(samples.data_path("elearning.registry"))
        assert cli(capsys, "validate", "--registry", reg, str(path))[0] == 0
        monkeypatch.setenv(REGISTRY_ENV, reg)
        assert cli(capsys, "validate", str(path))[0] == 0

    def test_bad_registry_path(self, capsys, tmp_path):
        assert cli(capsys, "validate", "--registry", str(tmp_path / "r"), SAMPLE)[0] == 3


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [], ["frobnicate"], ["validate"], ["validate", "--dialect", "tbx", "x"],
        ["convert", "x", "--from", "gmt"], ["query", "x"], ["sort", "x"],
        ["merge", "a", "b", "--on-conflict", "coin-flip"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, err = cli(capsys, *argv)
        assert code == 2 and out == ""
        assert err.startswith("usage error:") and err.count("\n") == 1

    def test_concept_needs_lang(self, capsys):
        code, _, err = cli(capsys, "query", SAMPLE, "--concept", "c-car")
        assert code == 2 and err.startswith("usage error:")


class TestConvert:
    def test_loss_lines_on_stderr(self, capsys, ltml):
        code, out, err = cli(capsys, "convert", str(ltml), "--from", "listtml", "--to", "nesttml")
        assert code == 0 and out.startswith("collection ")
        lines = err.splitlines()
        assert lines and all(line.startswith("LOSS\t") for line in lines)
        assert any("\tsource\t" in line for line in lines)

    def test_same_dialect_is_canonical(self, capsys, ltml):
        code, out, err = cli(capsys, "convert", str(ltml), "--from", "listtml", "--to", "listtml")
        assert code == 0 and err == ""
        assert out.encode() == ltml.read_bytes()

    def test_output_file(self, capsys, tmp_path):
        dest = tmp_path / "w.ntml"
        code, out, _ = cli(capsys, "convert", WRITING, "--from", "gmt", "--to", "nesttml",
                           "-o", str(dest))
        assert code == 0 and out == ""
        coll, _, _ = parse_dialect(dest.read_bytes(), "nesttml")
        assert len(coll) == len(samples.build_writing_instruments().collection)


class TestQuery:
    def test_voiture(self, capsys):
        assert cli(capsys, "query", SAMPLE, "--term", "voiture", "--lang", "fr") == (
            0, "c-car\nc-rail-coach\n", "")

    def test_concept_terms(self, capsys):
        code, out, _ = cli(capsys, "query", SAMPLE, "--concept", "c-elearning", "--lang", "en")
        assert code == 0 and out.splitlines() == ["e-learning", "online learning"]

    def test_unknown_concept(self, capsys):
        code, out, err = cli(capsys, "query", SAMPLE, "--concept", "c-nope", "--lang", "en")
        assert code == 2 and out == "" and err.startswith("ERROR\tUNKNOWN_CONCEPT\t")

    def test_no_match_is_empty(self, capsys):
        assert cli(capsys, "query", SAMPLE, "--term", "zzz") == (0, "", "")


class TestMergeSortStats:
    def test_merge_to_file(self, capsys, tmp_path):
        dest = tmp_path / "m.gmt"
        code, out, err = cli(capsys, "merge", WRITING, SAMPLE, "-o", str(dest))
        assert code == 0 and out == ""
        assert cli(capsys, "validate", str(dest)) == (0, "", "")
        assert cli(capsys, "stats", str(dest))[1].startswith("entries\t")
        assert all(line.split("\t")[0] in {"MATCH", "CONFLICT", "HOMONYM", "RENAMED", "DROPPED"}
                   for line in err.splitlines())

    def test_merge_shared_term(self, capsys, tmp_path):
        a, b = tmp_path / "a.ltml", tmp_path / "b.ltml"
        a.write_text("collection a\nconcept c-x\n  term fr :: crayon\n", encoding="utf-8")
        b.write_text("collection b\nconcept c-y\n  term fr :: crayon\n  term en :: pencil\n",
                     encoding="utf-8")
        code, out, err = cli(capsys, "merge", str(a), str(b), "--identity", "by-shared-term",
                             "--langs", "fr", "--dialect", "listtml")
        assert code == 0
        assert err.splitlines() == ['MATCH\tc-x\tc-y\tshared:"crayon"@fr']
        assert "concept c-x\n" in out and "term en :: pencil" in out

    def test_sort(self, capsys):
        code, out, _ = cli(capsys, "sort", SAMPLE, "--lang", "fr")
        terms = [line.split("\t")[0] for line in out.splitlines()]
        assert code == 0 and "apprentissage" in terms and "voiture" in terms
        assert terms == collate(terms)

    def test_sort_profile(self, capsys, tmp_path):
        prof = tmp_path / "p.collation"
        prof.write_text("particles end\n", encoding="utf-8")
        assert cli(capsys, "sort", SAMPLE, "--lang", "en", "--collation-profile", str(prof))[0] == 0
        prof.write_text("explode x\n", encoding="utf-8")
        code, _, err = cli(capsys, "sort", SAMPLE, "--lang", "en", "--collation-profile", str(prof))
        assert code == 2 and err.startswith("ERROR\t")

    def test_stats(self, capsys):
        code, out, _ = cli(capsys, "stats", WRITING)
        rows = dict(line.split("\t") for line in out.splitlines())
        assert code == 0 and rows["tops"] == "c-writing-instrument"
        assert int(rows["entries"]) == len(samples.build_writing_instruments().collection)

    def test_deterministic(self, capsys):
        for argv in (["stats", SAMPLE], ["sort", SAMPLE, "--lang", "ar"],
                     ["convert", SAMPLE, "--from", "gmt", "--to", "listtml"]):
            assert cli(capsys, *argv) == cli(capsys, *argv)

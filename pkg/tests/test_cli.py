import json

import pytest

from monofib.cli import main
from monofib.config import ConfigError, parse_search_config
from monofib.corpus import BUILTIN_NAMES, get_example, run_example
from monofib.report import (
    CERTIFICATE_FIELDS,
    certificate_json,
    certificate_record,
    read_certificates,
)
from monofib.search import InfeasibleConfigError, SearchConfig, search, validate_certificate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestConfigFile:
    def test_full_config(self):
        cfg = parse_search_config("""
            # comment
            degree = 8
            transpositions = 2-4
            alpha_cycle_type = 7, 1
            max_results = 5
            dedup = full   # inline comment
            workers = 2
            deterministic_order = yes
            log_near_misses = false
        """.replace("\n            ", "\n"))
        assert cfg == SearchConfig(8, (2, 4), alpha_cycle_type=(7, 1), max_results=5, dedup="full",
                                   workers=2, deterministic_order=True, log_near_misses=False)

    def test_list_of_k(self):
        assert parse_search_config("degree = 8\ntranspositions = 2, 4\n").transpositions == (2, 4)

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            parse_search_config("degree = 4\ntranspositions = 2\ncolour = red\n")

    def test_missing_key(self):
        with pytest.raises(ConfigError):
            parse_search_config("degree = 4\n")

    def test_bad_value(self):
        with pytest.raises(ConfigError):
            parse_search_config("degree = four\ntranspositions = 2\n")

    def test_infeasible(self):
        with pytest.raises(InfeasibleConfigError):
            parse_search_config("degree = 4\ntranspositions = 4\n")


class TestJson:
    def test_schema_field_order(self):
        cert = next(search(SearchConfig(4, 2)))
        assert list(json.loads(certificate_json(cert))) == list(CERTIFICATE_FIELDS)

    def test_round_trip_validates(self, tmp_path):
        certs = list(search(SearchConfig(6, 2)))
        path = tmp_path / "out.jsonl"
        path.write_text("".join(certificate_json(c) + "\n" for c in certs))
        with path.open() as fh:
            back = list(read_certificates(fh))
        assert len(back) == len(certs)
        assert all(validate_certificate(c) for c in back)
        assert [certificate_record(c) for c in back] == [certificate_record(c) for c in certs]

    def test_tampered_record_fails(self):
        cert = next(search(SearchConfig(5, 2)))
        rec = certificate_record(cert)
        rec["fibre_genus"] += 1
        (back,) = read_certificates([json.dumps(rec)])
        assert not validate_certificate(back)


class TestVerify:
    def test_example_one(self, capsys):
        code, out, _ = run(capsys, "verify", "(1 2 3)", "(2 3 4)", "4", "--json")
        rec = json.loads(out)
        assert code == 0
        assert rec["valid"] and rec["curve_genus"] == 2 and rec["fibre_genus"] == 9
        assert rec["commutator"] == "(1 4)(2 3)"
        assert rec["bounds"]["all_passed"]
        # a verify report doubles as a certificate record
        (cert,) = read_certificates([out.replace("\n", " ")])
        assert validate_certificate(cert)

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "verify", "(1 2 3)", "(2 3 4)", "4")
        assert code == 0 and "VALID" in out and "g(F)          9" in out

    def test_trivial_commutator(self, capsys):
        code, out, _ = run(capsys, "verify", "(1 2)", "(1 2)", "2", "--json")
        assert code == 1 and json.loads(out)["valid"] is False

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "verify", "(1 2 3", "(1 2)", "3")
        assert code == 2 and "malformed" in err

    def test_usage_error(self, capsys):
        assert run(capsys, "verify", "(1 2)")[0] == 2


class TestExamples:
    def test_default_set(self, capsys):
        code, out, _ = run(capsys, "examples", "--json")
        recs = json.loads(out)
        assert code == 0
        assert [r["name"] for r in recs] == ["1", "2", "3@2"]
        assert all(r["matches_expected"] for r in recs)

    def test_example_two(self, capsys):
        code, out, _ = run(capsys, "examples", "2", "--json")
        (rec,) = json.loads(out)
        assert code == 0
        assert rec["report"]["commutator"] == "(1 5)(2 6)(3 4)(7 8)"
        assert rec["report"]["group_order"] == 336 and rec["report"]["fibre_genus"] == 33

    def test_as_printed_is_invalid(self, capsys):
        code, out, _ = run(capsys, "examples", "2-as-printed", "--json")
        (rec,) = json.loads(out)
        assert code == 1
        assert rec["matches_expected"] and "repeated point" in rec["error"]

    def test_family_member(self, capsys):
        code, out, _ = run(capsys, "examples", "3@3")
        assert code == 0 and "beta^11 = gamma: ok" in out

    def test_family_needs_n_at_least_two(self, capsys):
        assert run(capsys, "examples", "3@1")[0] == 2

    def test_unknown(self, capsys):
        assert run(capsys, "examples", "7")[0] == 2

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_corpus_expectations(self, name):
        assert run_example(get_example(name)).matches


class TestSearchCommand:
    def test_writes_certificates(self, capsys, tmp_path):
        cfg = tmp_path / "s.cfg"
        cfg.write_text("degree = 4\ntranspositions = 2\ndedup = full\n")
        out_path = tmp_path / "certs.jsonl"
        code, out, _ = run(capsys, "search", str(cfg), "-o", str(out_path))
        assert code == 0
        assert "classes found 4" in out
        lines = out_path.read_text().splitlines()
        assert len(lines) == 4
        assert all(validate_certificate(c) for c in read_certificates(lines))

    def test_stdout_stream(self, capsys, tmp_path):
        cfg = tmp_path / "s.cfg"
        cfg.write_text("degree = 5\ntranspositions = 2\n")
        code, out, err = run(capsys, "search", str(cfg))
        assert code == 0 and len(out.splitlines()) == 24 and "pairs scanned" in err

    @pytest.mark.parametrize("body", ["degree = 4\ntranspositions = 4\n", "degree = 5\ntranspositions = 4\n",
                                      "degree = 4\n"])
    def test_bad_config(self, capsys, tmp_path, body):
        cfg = tmp_path / "s.cfg"
        cfg.write_text(body)
        assert run(capsys, "search", str(cfg))[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "search", str(tmp_path / "nope.cfg"))[0] == 2


class TestBoundsCommand:
    def test_example_one(self, capsys):
        code, out, _ = run(capsys, "bounds", "9", "1", "8", "4", "--json")
        assert code == 0 and json.loads(out)["all_passed"]

    def test_equality_case(self, capsys):
        code, out, _ = run(capsys, "bounds", "4", "1", "3", "9")
        assert code == 0
        assert "q = 1" in out and "4 <= K^2 <= 5" in out

    def test_low_genus(self, capsys):
        code, out, _ = run(capsys, "bounds", "3", "1", "1", "1", "--json")
        entries = {e["label"]: e["status"] for e in json.loads(out)["entries"]}
        assert code == 1 and entries["g>=4"] == "fail"

    def test_genus_below_two(self, capsys):
        assert run(capsys, "bounds", "1", "0", "0", "0")[0] == 2

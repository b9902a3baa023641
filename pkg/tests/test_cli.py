import json

import pytest

from senselex.cli import run

FIX = "tests/fixtures"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLexiconCommands:
    def test_validate_ok(self, capsys):
        code, out, _ = invoke(
            capsys, "lexicon", "validate", "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi"
        )
        assert code == 0
        assert out.startswith("OK: 31 entries")

    def test_validate_failure_single_line_diagnostic(self, capsys, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("nonsense\n", encoding="utf-8")
        code, _, err = invoke(
            capsys, "lexicon", "validate", "--lexicon", str(bad), "--language", "hi"
        )
        assert code == 1
        assert err.startswith("error:")
        assert len(err.strip().splitlines()) == 1

    def test_stats_golden_tsv(self, capsys):
        code, out, _ = invoke(
            capsys,
            "lexicon", "stats",
            "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
            "--pos", "verb", "--which", "primary",
        )
        assert code == 0
        assert out == (
            "sense\tlabel\tpercent\n"
            "ME\tMeans|End\t29.4\n"
            "BA\tBefore|After\t11.8\n"
            "KK\tKnow|Known\t11.8\n"
            "LL\tLocus|Located\t11.8\n"
            "PW\tPart|Whole\t11.8\n"
            "WW\tWrap|Wrapped\t11.8\n"
            "GG\tGrip|Grasp\t11.8\n"
        )

    def test_stats_json(self, capsys):
        code, out, _ = invoke(
            capsys,
            "lexicon", "stats",
            "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
            "--pos", "adverb", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert abs(sum(payload["percent"].values()) - 100.0) < 1e-9


class TestPropagateCommand:
    ARGS = (
        "propagate",
        "cīranā", "jānanā",
        "--lexicon", f"{FIX}/hi_labeled.tsv", "--language", "hi",
        "--vectors", f"{FIX}/hi_vectors.vec", "--pos", "verb",
        "--gold", f"{FIX}/hi_gold.tsv",
    )

    def test_accuracy_report(self, capsys):
        code, out, _ = invoke(capsys, *self.ARGS)
        assert code == 0
        assert "accuracy=100.000" in out
        assert "cīranā\tproposed\tPW\tPW\ttrue" in out

    def test_deterministic_output(self, capsys, tmp_path):
        first, second = tmp_path / "a.tsv", tmp_path / "b.tsv"
        assert run(list(self.ARGS) + ["--out", str(first)]) == 0
        assert run(list(self.ARGS) + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_json_format(self, capsys):
        code, out, _ = invoke(capsys, *self.ARGS, "--format", "json")
        payload = json.loads(out)
        assert payload["accuracy"] == 100.0
        assert payload["outcomes"][0]["proposed_sense"] == "PW"

    def test_no_targets_is_an_error(self, capsys):
        code, _, err = invoke(
            capsys,
            "propagate",
            "--lexicon", f"{FIX}/hi_labeled.tsv", "--language", "hi",
            "--vectors", f"{FIX}/hi_vectors.vec", "--pos", "verb",
        )
        assert code == 1
        assert "no targets" in err


class TestKappaCommand:
    def test_text_output(self, capsys):
        code, out, _ = invoke(capsys, "kappa", "--records", f"{FIX}/records_verbs.tsv")
        assert code == 0
        assert out.startswith("n=40")
        assert "kappa=" in out and "(" in out

    def test_tsv_and_precision(self, capsys):
        code, out, _ = invoke(
            capsys,
            "kappa", "--records", f"{FIX}/records_verbs.tsv",
            "--format", "tsv", "--precision", "4",
        )
        header, row = out.strip().splitlines()
        assert header == "n\tp_o\tp_e\tkappa\tband"
        assert len(row.split("\t")[3].split(".")[1]) == 4


class TestSampleCommand:
    def test_seeded_and_deterministic(self, capsys):
        args = (
            "sample", "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
            "--pos", "verb", "--n", "5", "--seed", "42",
        )
        code, first, _ = invoke(capsys, *args)
        assert code == 0
        code, second, _ = invoke(capsys, *args)
        assert first == second
        assert len(first.strip().splitlines()) == 5


class TestCorpusCommands:
    def test_profile_adverbs(self, capsys):
        code, out, _ = invoke(
            capsys,
            "profile-adverbs", "--corpus", f"{FIX}/hi_corpus.conllu",
            "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1].startswith("verb\tfreq\tTMP\tSPT\tFRC\tMSR")
        assert any(line.startswith("khelanā\t60") for line in lines)
        assert not any(line.startswith("bahanā") for line in lines)  # freq 50 excluded

    def test_karaka_long_format(self, capsys):
        code, out, _ = invoke(
            capsys,
            "karaka", "--corpus", f"{FIX}/hi_corpus.conllu",
            "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1] == "sense\tkaraka\tcount\trow_percent"
        assert len(lines) == 2 + 7 * 8

    def test_profile_and_compare_pipeline(self, capsys, tmp_path):
        profile_a = tmp_path / "a.profile"
        profile_b = tmp_path / "b.profile"
        base = (
            "profile-senses", "--corpus", f"{FIX}/hi_corpus.conllu",
            "--lexicon", f"{FIX}/hi_core.tsv", "--language", "hi",
            "--format", "json",
        )
        assert run(list(base) + ["--name", "novel", "--out", str(profile_a)]) == 0
        assert run(list(base) + ["--name", "news", "--out", str(profile_b)]) == 0
        code, out, _ = invoke(capsys, "compare", str(profile_a), str(profile_b))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "# a=novel b=news"
        assert lines[1].startswith("sense\tlabel\tcount_a\tcount_b")
        # identical corpora: every row ll=0, direction equal
        for line in lines[2:]:
            cells = line.split("\t")
            assert cells[-1] == "equal"
            assert float(cells[-2]) == 0.0

    def test_compare_sorted_by_ll(self, capsys, tmp_path):
        novel = {
            "kind": "sense_type_profile", "name": "novel", "token_total": 99996,
            "counts": {"ME": 25215, "BA": 19084, "KK": 10216, "LL": 30817, "PW": 5917, "WW": 1360, "GG": 7387},
            "percent": {}, "unknown_verb_tokens": 0,
        }
        news = {
            "kind": "sense_type_profile", "name": "news", "token_total": 99997,
            "counts": {"ME": 38270, "BA": 15293, "KK": 5993, "LL": 23946, "PW": 5736, "WW": 977, "GG": 9782},
            "percent": {}, "unknown_verb_tokens": 0,
        }
        pa, pb = tmp_path / "novel.profile", tmp_path / "news.profile"
        pa.write_text(json.dumps(novel), encoding="utf-8")
        pb.write_text(json.dumps(news), encoding="utf-8")
        code, out, _ = invoke(capsys, "compare", str(pa), str(pb), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        lls = [row["ll"] for row in payload["rows"]]
        assert lls == sorted(lls, reverse=True)
        assert payload["most_indicative"] == "ME"
        me = payload["rows"][0]
        assert me["direction"] == "overused-in-news"

    def test_compare_adverb_profiles(self, capsys, tmp_path):
        def profile(verb, percent):
            counts = {c: (1 if percent.get(c, 0) else 0) for c in ("TMP", "SPT", "FRC", "MSR")}
            full = {c: float(percent.get(c, 0.0)) for c in ("TMP", "SPT", "FRC", "MSR")}
            return {
                "verb_lemma": verb, "verb_freq": 60, "class_counts": counts,
                "class_percent": full, "unknown_adverb_count": 0,
            }

        pa = tmp_path / "a.profile"
        pb = tmp_path / "b.profile"
        pa.write_text(
            json.dumps({"kind": "adverbial_profiles", "profiles": [profile("letnā", {"TMP": 100})]}),
            encoding="utf-8",
        )
        pb.write_text(
            json.dumps(
                {"kind": "adverbial_profiles", "profiles": [profile("letnā", {"TMP": 60, "MSR": 40})]}
            ),
            encoding="utf-8",
        )
        code, out, _ = invoke(capsys, "compare", str(pa), str(pb))
        assert code == 0
        assert "letnā\tTemporal\tTemporal, Measure" in out

    def test_mismatched_profile_kinds(self, capsys, tmp_path):
        pa = tmp_path / "a.profile"
        pb = tmp_path / "b.profile"
        pa.write_text(json.dumps({"kind": "sense_type_profile"}), encoding="utf-8")
        pb.write_text(json.dumps({"kind": "adverbial_profiles"}), encoding="utf-8")
        code, _, err = invoke(capsys, "compare", str(pa), str(pb))
        assert code == 1
        assert "different kinds" in err


class TestExitCodes:
    def test_unknown_subcommand_usage_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exit_info:
            run(["frobnicate"])
        assert exit_info.value.code == 2
        assert "usage" in capsys.readouterr().err

    def test_unknown_flag_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exit_info:
            run(["kappa", "--records", "x", "--bogus"])
        assert exit_info.value.code == 2

    def test_missing_file_exit_1(self, capsys):
        code, _, err = invoke(capsys, "kappa", "--records", "does-not-exist.tsv")
        assert code == 1
        assert err.startswith("error:")

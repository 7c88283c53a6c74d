import json

import pytest

from epigen import main
from shared.utils.text_codec import parse_transformation

FACTOR_JSON = (
    '{"n":3,"input":"2 1 1","rank":2,"factors":['
    '{"images":"1 2 2","kind":"SEED_IDEMPOTENT"},'
    '{"images":"1 3 3","kind":"LEMMA1_CASE3_E2"},'
    '{"images":"2 2 3","kind":"LEMMA1_CASE3_E3"},'
    '{"images":"1 2 1","kind":"LEMMA1_CASE3_E4"}],'
    '"verified":true}\n'
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGolden:
    def test_factor_text(self, capsys):
        code, out, _ = run(capsys, "factor", "--n", "3", "2 1 1")
        assert code == 0
        assert out.splitlines() == [
            "input: 2 1 1 (n=3, rank 2)",
            "  1 2 2  SEED_IDEMPOTENT",
            "  1 3 3  LEMMA1_CASE3_E2",
            "  2 2 3  LEMMA1_CASE3_E3",
            "  1 2 1  LEMMA1_CASE3_E4",
            "product verified",
        ]

    def test_factor_json(self, capsys):
        code, out, _ = run(capsys, "factor", "--n", "3", "2 1 1", "--json")
        assert code == 0
        assert out == FACTOR_JSON

    def test_json_is_byte_stable(self, capsys):
        _, first, _ = run(capsys, "factor-conj", "--n", "4", "3 1 1 2", "--base", "1 1 3 4", "--json")
        _, second, _ = run(capsys, "factor-conj", "--n", "4", "3 1 1 2", "--base", "1 1 3 4", "--json")
        assert first == second
        assert json.loads(first)["base"] == "1 1 3 4"

    def test_verify_theorem2(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem2", "--n", "3")
        assert (code, out) == (0, "OK\n")
        code, out, _ = run(capsys, "verify", "theorem2", "--n", "3", "--json")
        assert (code, out) == (0, '{"check":"theorem2","n":3,"verified":true}\n')

    def test_permutation_input(self, capsys):
        code, out, err = run(capsys, "factor", "--n", "3", "2 1 3")
        assert code == 2
        assert out == ""
        assert err == "error: input must be singular\n"


class TestSubcommands:
    def test_factor_conj(self, capsys):
        code, out, _ = run(capsys, "factor-conj", "--n", "3", "2 1 1", "--base", "1 1 3")
        assert code == 0
        assert "base: 1 1 3" in out
        assert "CONJUGATE  by" in out

    def test_rewrite(self, capsys):
        code, out, _ = run(capsys, "rewrite", "--n", "3", "1 2 2", "--swap", "1", "2")
        assert code == 0
        assert "  1 3 3  LEMMA1_CASE3_E2" in out.splitlines()

    def test_rewrite_with_base_json(self, capsys):
        code, out, _ = run(capsys, "rewrite", "--n", "3", "1 1 3", "--swap", "1", "2",
                           "--base", "1 1 3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["swap"] == [1, 2]
        assert payload["factors"] == [{"images": "2 2 3", "kind": "CONJUGATE", "conjugator": "(1 2)"}]

    def test_conjugate(self, capsys):
        code, out, _ = run(capsys, "conjugate", "--n", "3", "2 2 3", "--by", "(2 3)")
        assert (code, out) == (0, "3 2 3\n")

    def test_theorem5(self, capsys):
        code, out, _ = run(capsys, "theorem5", "--n", "3", "3 3 3")
        assert code == 0
        assert out.splitlines()[-1] == "product: 1 1 1 = e"

    def test_word_factor(self, capsys):
        code, out, _ = run(capsys, "word-factor", "--n", "3", "2 2 3", "--word", "(1 2) | a | ()")
        assert code == 0
        assert out.splitlines()[-1] == "product verified"

    def test_find_word(self, capsys):
        code, out, _ = run(capsys, "find-word", "--n", "3", "2 2 3", "--base", "2 2 3")
        assert (code, out) == (0, "() | a | ()\n")

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "idempotents", "--rank", "2", "--n", "3")
        assert code == 0
        assert out.splitlines()[0] == "size: 6"
        code, out, _ = run(capsys, "enumerate", "ideal", "--rank", "2", "--n", "3", "--json")
        assert json.loads(out)["size"] == 21
        code, out, _ = run(capsys, "enumerate", "class", "1 1 1", "--n", "3")
        assert out.splitlines() == ["size: 3", "1 1 1", "2 2 2", "3 3 3"]

    @pytest.mark.parametrize("check, extra", [
        ("theorem5", ["2 2 3"]), ("identity", ["--trials", "200"]), ("corollary3", []),
        ("corollary4", ["2 2 3"]), ("lemmas", []),
    ])
    def test_verify_checks(self, capsys, check, extra):
        code, out, _ = run(capsys, "verify", check, "--n", "3", *extra)
        assert (code, out) == (0, "OK\n")

    def test_verbose(self, capsys):
        code, _, _ = run(capsys, "factor", "--n", "3", "2 2 3", "--verbose")
        assert code == 0


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["factor", "--n", "3", "2 x 1"],
        ["factor", "--n", "3", "2 2"],
        ["factor-conj", "--n", "3", "2 1 1", "--base", "1 1 1"],
        ["rewrite", "--n", "3", "1 2 2", "--swap", "2", "2"],
        ["conjugate", "--n", "3", "2 2 3", "--by", "(1 1)"],
        ["enumerate", "idempotents", "--n", "3"],
        ["enumerate", "ideal", "--rank", "2", "--n", "4", "--max-n", "3"],
        ["verify", "theorem5", "--n", "3"],
        ["factor", "2 1 1"],
        ["frobnicate", "--n", "3"],
        ["verify", "identity", "--n", "0"],
        ["verify", "identity", "--n", "3", "--trials", "0"],
        ["verify", "identity", "--n", "3", "--trials", "-5"],
        ["factor", "--n", "three", "2 1 1"],
        ["factor", "--n", "3", "2 1 1", "--max-n", "0"],
    ])
    def test_invalid_input(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err

    @pytest.mark.parametrize("value", ["abc", "0", "-3"])
    def test_malformed_environment_limit(self, capsys, monkeypatch, value):
        monkeypatch.setenv("EPIGEN_MAX_N", value)
        code, out, err = run(capsys, "factor", "--n", "3", "2 2 3")
        assert code == 2
        assert out == ""
        assert err.startswith("error: invalid max_n")
        assert len(err.splitlines()) == 1

    def test_flag_overrides_malformed_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("EPIGEN_MAX_N", "abc")
        code, _, _ = run(capsys, "factor", "--n", "3", "2 2 3", "--max-n", "5")
        assert code == 0

    def test_max_n_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("EPIGEN_MAX_N", "2")
        code, _, err = run(capsys, "enumerate", "idempotents", "--rank", "2", "--n", "3")
        assert code == 2
        assert "closure limit" in err

    def test_refuted(self, capsys, monkeypatch):
        monkeypatch.setattr("algorithms.oracle.verify_theorem2", lambda n, max_n=None: False)
        code, out, _ = run(capsys, "verify", "theorem2", "--n", "3")
        assert (code, out) == (1, "REFUTED\n")

    def test_not_a_member(self, capsys):
        code, out, err = run(capsys, "find-word", "--n", "3", "2 2 3", "--base", "1 1 1")
        assert code == 3
        assert out == ""
        assert "not a member" in err

    def test_self_check_failure(self, capsys, monkeypatch):
        monkeypatch.setattr("services.factorization_service.verify_factorization", lambda f: False)
        code, out, err = run(capsys, "factor", "--n", "3", "2 1 1")
        assert code == 4
        assert out == ""
        assert "self-check" in err


class TestRoundTrip:
    @pytest.mark.parametrize("argv", [
        ["factor", "--n", "4", "3 3 1 2"],
        ["factor-conj", "--n", "4", "3 1 1 2", "--base", "1 1 3 4"],
        ["word-factor", "--n", "3", "2 2 3", "--word", "(1 2) | a | (1 3) | a | ()"],
    ])
    def test_printed_factors_reparse(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0
        payload = json.loads(out)
        for factor in payload["factors"]:
            value = parse_transformation(factor["images"], payload["n"])
            assert str(value) == factor["images"]

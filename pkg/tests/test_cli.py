"""Command-line driver: reports, JSON mode, pipes, exit codes."""

import io
import json

import gamedim as gd
from gamedim.cli import run


def call(argv, stdin_text=""):
    stdin, stdout, stderr = io.StringIO(stdin_text), io.StringIO(), io.StringIO()
    code = run(argv, stdin=stdin, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def gen(argv):
    code, out, err = call(argv)
    assert code == 0, err
    return out


class TestGen:
    def test_example1_file(self):
        out = gen(["gen", "example1", "--n", "2"])
        assert out == gd.serialize_game(gd.gen_example1(2))

    def test_ssp_file(self):
        out = gen(["gen", "ssp", "--b", "3", "--a", "1,2,3", "--d", "2"])
        assert "wmg 10 : 3 6 9 1 1 0 0" in out

    def test_unanimity_blocks(self):
        out = gen(["gen", "unanimity", "--blocks", "1100,0011"])
        game = gd.parse_game(out)
        assert gd.equivalent(game, gd.dual(gd.gen_example1(2)))

    def test_random_deterministic(self):
        first = gen(["gen", "random", "--n", "5", "--m", "4", "--seed", "3"])
        second = gen(["gen", "random", "--n", "5", "--m", "4", "--seed", "3"])
        assert first == second and first.startswith("simplegame 1\n")

    def test_json_game_document(self):
        out = gen(["gen", "example1", "--n", "2", "--json"])
        doc = json.loads(out)
        assert doc == {
            "players": 4,
            "form": "intersection",
            "parts": [
                {"quota": 1, "weights": [1, 1, 0, 0]},
                {"quota": 1, "weights": [0, 0, 1, 1]},
            ],
        }

    def test_output_file(self, tmp_path):
        target = tmp_path / "game.sg"
        code, out, _ = call(["gen", "example1", "--n", "2", "-o", str(target)])
        assert code == 0 and out == ""
        assert target.read_text() == gd.serialize_game(gd.gen_example1(2))


class TestAnalysisPipes:
    def test_gen_dim_pipe(self):
        game_text = gen(["gen", "example1", "--n", "3"])
        code, out, _ = call(["dim"], stdin_text=game_text)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "dimension 3"
        assert len(lines) == 4 and all(l.startswith("wmg ") for l in lines[1:])

    def test_dim_witness_reparses_to_equivalent_game(self):
        game = gd.gen_example1(3)
        code, out, _ = call(["dim"], stdin_text=gd.serialize_game(game))
        assert code == 0
        body = out.splitlines()[1:]
        text = "simplegame 1\nplayers 6\nform intersection\n" + "\n".join(body) + "\n"
        assert gd.equivalent(gd.parse_game(text), game)

    def test_gen_ssp_weighted_pipe(self):
        game_text = gen(["gen", "ssp", "--b", "2", "--a", "5,7", "--d", "2"])
        code, out, _ = call(["weighted"], stdin_text=game_text)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "weighted"
        tokens = lines[1].split()
        quota, weights = int(tokens[1]), [int(t) for t in tokens[3:]]
        reported = gd.SimpleGame.from_weighted(gd.make_weighted(quota, weights))
        reference = gd.SimpleGame.from_weighted(gd.make_weighted(3, [5, 7, 0, 0, 0, 0]))
        assert gd.equivalent(reported, reference)

    def test_not_weighted_report(self):
        code, out, _ = call(["weighted"], stdin_text=gd.serialize_game(gd.gen_example1(2)))
        assert code == 0 and out == "not weighted\n"

    def test_codim_report(self):
        code, out, _ = call(["codim"], stdin_text=gd.serialize_game(gd.gen_example1(2)))
        assert code == 0 and out.splitlines()[0] == "codimension 2"

    def test_mwc_report(self):
        code, out, _ = call(["mwc"], stdin_text=gd.serialize_game(gd.gen_example1(2)))
        assert code == 0
        assert out.splitlines() == [
            "minimal-winning 4",
            "win 1010",
            "win 0110",
            "win 1001",
            "win 0101",
        ]

    def test_mlc_report(self):
        code, out, _ = call(["mlc"], stdin_text=gd.serialize_game(gd.gen_example1(2)))
        assert code == 0
        assert out.splitlines() == ["maximal-losing 2", "win 1100", "win 0011"]

    def test_dual_pipe_is_involution(self):
        original = gd.serialize_game(gd.gen_example1(2))
        _, once, _ = call(["dual"], stdin_text=original)
        _, twice, _ = call(["dual"], stdin_text=once)
        assert gd.equivalent(gd.parse_game(twice), gd.gen_example1(2))

    def test_convert_minimal_union(self):
        game_text = gen(["gen", "example1", "--n", "3"])
        code, out, _ = call(
            ["convert", "--to", "union", "--mode", "minimal"], stdin_text=game_text
        )
        assert code == 0
        converted = gd.parse_game(out)
        assert converted.form == gd.UNION and len(converted.parts) == 4
        assert gd.equivalent(converted, gd.gen_example1(3))

    def test_convert_canonical_intersection(self):
        game_text = gen(["gen", "example1", "--n", "2"])
        code, out, _ = call(
            ["convert", "--to", "intersection", "--mode", "canonical"],
            stdin_text=game_text,
        )
        assert code == 0
        assert gd.equivalent(gd.parse_game(out), gd.gen_example1(2))


class TestEquiv:
    def test_same_file_twice(self, tmp_path):
        path = tmp_path / "g.sg"
        path.write_text(gd.serialize_game(gd.gen_example1(2)))
        code, out, _ = call(["equiv", str(path), str(path)])
        assert code == 0 and out == "equivalent\n"

    def test_different_games_still_exit_zero(self, tmp_path):
        p1 = tmp_path / "a.sg"
        p2 = tmp_path / "b.sg"
        p1.write_text(gd.serialize_game(gd.gen_example1(2)))
        p2.write_text(gd.serialize_game(gd.dual(gd.gen_example1(2))))
        code, out, _ = call(["equiv", str(p1), str(p2)])
        assert code == 0 and out == "different\n"

    def test_second_game_from_stdin(self, tmp_path):
        path = tmp_path / "g.sg"
        path.write_text(gd.serialize_game(gd.gen_example1(2)))
        code, out, _ = call(
            ["equiv", str(path)], stdin_text=gd.serialize_game(gd.gen_example1(2))
        )
        assert code == 0 and out == "equivalent\n"

    def test_json(self, tmp_path):
        path = tmp_path / "g.sg"
        path.write_text(gd.serialize_game(gd.gen_example1(2)))
        code, out, _ = call(["equiv", str(path), str(path), "--json"])
        assert code == 0 and json.loads(out) == {"equivalent": True}


class TestJsonAgreement:
    def test_dim_value_matches_plain_report(self):
        text = gd.serialize_game(gd.gen_example1(3))
        _, plain, _ = call(["dim"], stdin_text=text)
        _, as_json, _ = call(["dim", "--json"], stdin_text=text)
        doc = json.loads(as_json)
        assert doc["value"] == int(plain.splitlines()[0].split()[1])
        assert doc["kind"] == "intersection"
        parts = [gd.make_weighted(p["quota"], p["weights"]) for p in doc["parts"]]
        rebuilt = gd.combine(gd.INTERSECTION, parts)
        assert gd.equivalent(rebuilt, gd.gen_example1(3))

    def test_mwc_json(self):
        text = gd.serialize_game(gd.gen_example1(2))
        _, plain, _ = call(["mwc"], stdin_text=text)
        _, as_json, _ = call(["mwc", "--json"], stdin_text=text)
        doc = json.loads(as_json)
        assert doc["mwc"] == [l.split()[1] for l in plain.splitlines()[1:]]

    def test_weighted_json(self):
        text = gd.serialize_game(gd.gen_example1(2))
        _, out, _ = call(["weighted", "--json"], stdin_text=text)
        assert json.loads(out) == {"weighted": False, "parts": []}

    def test_weighted_json_positive(self):
        text = gd.serialize_game(gd.gen_example1(1))
        _, out, _ = call(["weighted", "--json"], stdin_text=text)
        doc = json.loads(out)
        assert doc["weighted"] and len(doc["parts"]) == 1
        part = gd.make_weighted(doc["parts"][0]["quota"], doc["parts"][0]["weights"])
        assert gd.equivalent(
            gd.SimpleGame.from_weighted(part), gd.gen_example1(1)
        )


class TestExitCodes:
    def test_parse_error_is_exit_one(self):
        code, out, err = call(["dim"], stdin_text="not a game file\n")
        assert code == 1 and out == "" and "bad-header" in err

    def test_validation_error_is_exit_one(self):
        code, _, err = call(
            ["dim"], stdin_text="simplegame 1\nplayers 2\nform weighted\nwmg 9 : 1 1\n"
        )
        assert code == 1 and "invalid-wmg" in err

    def test_size_limit_is_exit_two(self):
        big_majority = gd.combine(gd.INTERSECTION, [gd.make_weighted(6, [1] * 10)])
        code, _, err = call(["codim"], stdin_text=gd.serialize_game(big_majority))
        assert code == 2 and "size limit" in err

    def test_gen_size_limit_is_exit_two(self):
        code, _, err = call(["gen", "example1", "--n", "13"])
        assert code == 2 and "size limit" in err

    def test_missing_file_is_exit_one(self):
        code, _, err = call(["dim", "/nonexistent/game.sg"])
        assert code == 1 and err

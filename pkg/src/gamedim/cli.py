"""Command-line front end: analysis, conversion, generation, equivalence.

Games travel as ``simplegame`` text files; every analysis subcommand reads
a game from its positional file argument or from standard input, so the
subcommands compose in pipes::

    gamedim gen example1 --n 3 | gamedim dim
    gamedim gen ssp --b 2 --a 5,7 --d 2 | gamedim weighted

Exit codes: 0 reported an answer, 1 parse or validation failure, 2 size-limit
refusal.  ``--json`` switches the report to one JSON object with stable keys
(``value``, ``parts``, ``mwc``, ``mlc``, ``equivalent``, ``weighted``,
``players``, ``form``, ``win``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dimsolver as dim_mod
from . import structure
from .core import (
    EXPLICIT,
    INTERSECTION,
    UNION,
    Coalition,
    InvalidGameError,
    SimpleGame,
    SizeLimitError,
    WeightedGame,
)
from .gamefile import GameParseError, parse_game, serialize_game
from .generators import (
    SSPInstance,
    gen_example1,
    gen_random_monotone,
    gen_ssp,
    gen_unanimity_composition,
)


def _part_json(part: WeightedGame) -> dict:
    return {"quota": part.quota, "weights": list(part.weights)}


def _game_json(game: SimpleGame) -> dict:
    doc: dict = {"players": game.n, "form": game.form}
    if game.form == EXPLICIT:
        doc["win"] = [c.bitstring() for c in game.antichain]
    else:
        doc["parts"] = [_part_json(p) for p in game.parts]
    return doc


def _wmg_lines(parts) -> list[str]:
    return [f"wmg {p.quota} : {' '.join(map(str, p.weights))}" for p in parts]


def _load_game(path: str | None, stdin) -> SimpleGame:
    if path is None or path == "-":
        return parse_game(stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_game(handle.read())


def _emit(text: str, output: str | None, stdout) -> None:
    if output is None:
        stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise InvalidGameError(f"{what} must be a comma-separated integer list, got {raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamedim",
        description="Exact analysis of simple games: extremal coalitions, duals, "
        "weightedness, dimension, and codimension.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def game_command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("game", nargs="?", help="game file (default: standard input)")
        cmd.add_argument("-o", "--output", help="write the report to a file")
        cmd.add_argument("--json", action="store_true", help="machine-readable report")
        return cmd

    game_command("mwc", "list the minimal winning coalitions")
    game_command("mlc", "list the maximal losing coalitions")
    game_command("dual", "emit the dual game")
    game_command("weighted", "decide weightedness and report a representation")
    game_command("dim", "exact dimension with witness intersection parts")
    game_command("codim", "exact codimension with witness union parts")

    convert = game_command("convert", "re-represent as intersection or union of parts")
    convert.add_argument("--to", required=True, choices=[INTERSECTION, UNION])
    convert.add_argument("--mode", default="canonical", choices=["canonical", "minimal"])

    equiv = sub.add_parser("equiv", help="decide whether two games are equivalent")
    equiv.add_argument("game1", help="first game file")
    equiv.add_argument("game2", nargs="?", help="second game file (default: standard input)")
    equiv.add_argument("-o", "--output", help="write the report to a file")
    equiv.add_argument("--json", action="store_true")

    gen = sub.add_parser("gen", help="generate a certified instance family member")
    gen_sub = gen.add_subparsers(dest="family", required=True)

    def gen_command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = gen_sub.add_parser(name, help=help_text)
        cmd.add_argument("-o", "--output", help="write the game to a file")
        cmd.add_argument("--json", action="store_true")
        return cmd

    example1 = gen_command("example1", "pair-cover game: dimension n, codimension 2^(n-1)")
    example1.add_argument("--n", type=int, required=True, help="number of player pairs")

    ssp = gen_command("ssp", "Subset Sum reduction game over n + 2d players")
    ssp.add_argument("--b", type=int, required=True, help="subset-sum target")
    ssp.add_argument("--a", required=True, help="comma-separated positive integers")
    ssp.add_argument("--d", type=int, required=True, help="number of gadget pairs")

    unanimity = gen_command("unanimity", "union of unanimity games on disjoint blocks")
    unanimity.add_argument(
        "--blocks", required=True, help="comma-separated bitstrings, one per block"
    )

    random_cmd = gen_command("random", "seeded random monotone game (explicit form)")
    random_cmd.add_argument("--n", type=int, required=True, help="player count (1..12)")
    random_cmd.add_argument("--m", type=int, required=True, help="seed coalition count")
    random_cmd.add_argument("--seed", type=int, default=0, help="stream seed")

    return parser


def _report_coalitions(label: str, key: str, coalitions, as_json: bool) -> str:
    if as_json:
        return json.dumps({key: [c.bitstring() for c in coalitions]}) + "\n"
    lines = [f"{label} {len(coalitions)}"]
    lines.extend(f"win {c.bitstring()}" for c in coalitions)
    return "\n".join(lines) + "\n"


def _report_witness(label: str, witness, as_json: bool) -> str:
    if as_json:
        doc = {
            "value": witness.value,
            "kind": witness.kind,
            "parts": [_part_json(p) for p in witness.parts],
        }
        return json.dumps(doc) + "\n"
    lines = [f"{label} {witness.value}"]
    lines.extend(_wmg_lines(witness.parts))
    return "\n".join(lines) + "\n"


def _run_command(args, stdin, stdout) -> int:
    command = args.command

    if command == "gen":
        if args.family == "example1":
            game = gen_example1(args.n)
        elif args.family == "ssp":
            game = gen_ssp(SSPInstance(args.b, tuple(_parse_int_list(args.a, "--a")), args.d))
        elif args.family == "unanimity":
            bitstrings = [tok for tok in args.blocks.split(",") if tok]
            if not bitstrings:
                raise InvalidGameError("--blocks needs at least one bitstring")
            n = len(bitstrings[0])
            blocks = [Coalition.from_bitstring(bits, n) for bits in bitstrings]
            game = gen_unanimity_composition(blocks)
        else:
            game = gen_random_monotone(args.n, args.m, args.seed)
        text = json.dumps(_game_json(game)) + "\n" if args.json else serialize_game(game)
        _emit(text, args.output, stdout)
        return 0

    if command == "equiv":
        first = _load_game(args.game1, stdin)
        second = _load_game(args.game2, stdin)
        same = structure.equivalent(first, second)
        if args.json:
            text = json.dumps({"equivalent": same}) + "\n"
        else:
            text = ("equivalent" if same else "different") + "\n"
        _emit(text, args.output, stdout)
        return 0

    game = _load_game(args.game, stdin)

    if command == "mwc":
        text = _report_coalitions(
            "minimal-winning", "mwc", structure.minimal_winning(game), args.json
        )
    elif command == "mlc":
        text = _report_coalitions(
            "maximal-losing", "mlc", structure.maximal_losing(game), args.json
        )
    elif command == "dual":
        dual_game = structure.dual(game)
        text = json.dumps(_game_json(dual_game)) + "\n" if args.json else serialize_game(dual_game)
    elif command == "weighted":
        part = dim_mod.is_weighted(game)
        if args.json:
            doc = {"weighted": part is not None, "parts": [] if part is None else [_part_json(part)]}
            text = json.dumps(doc) + "\n"
        elif part is None:
            text = "not weighted\n"
        else:
            text = "weighted\n" + _wmg_lines([part])[0] + "\n"
    elif command == "dim":
        text = _report_witness("dimension", dim_mod.dimension(game), args.json)
    elif command == "codim":
        text = _report_witness("codimension", dim_mod.codimension(game), args.json)
    elif command == "convert":
        parts = dim_mod.convert(game, args.to, args.mode)
        converted = SimpleGame(game.n, args.to, parts=tuple(parts))
        text = json.dumps(_game_json(converted)) + "\n" if args.json else serialize_game(converted)
    else:  # pragma: no cover - argparse restricts the choices
        raise InvalidGameError(f"unknown command {command!r}")

    _emit(text, args.output, stdout)
    return 0


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    """Parse arguments and run one subcommand; returns the exit status."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run_command(args, stdin, stdout)
    except GameParseError as exc:
        print(f"gamedim: {exc}", file=stderr)
        return 1
    except SizeLimitError as exc:
        print(f"gamedim: size limit: {exc}", file=stderr)
        return 2
    except InvalidGameError as exc:
        print(f"gamedim: invalid input: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"gamedim: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run())

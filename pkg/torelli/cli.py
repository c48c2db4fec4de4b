"""
Interfaz de línea de comandos.

    torelli word eps -g 1 "z1 z2"
    torelli braid kernel -n 3 "s1 s2 s1 s2 s1 s2"
    torelli action fix -g 2 "z1 z1" --json

Códigos de salida: 0 éxito, 1 error de dominio, 2 error de uso.
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional, TextIO, Tuple

from torelli.config import configure_logging
from torelli.core.burau import strands_for_genus
from torelli.core.errors import TorelliError, WordSyntaxError
from torelli.schemas.wire import CliEnvelope
from torelli.utils import operations as ops

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"se espera un entero >= 0, se recibió {value}")
    return number


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"se espera un entero >= 1, se recibió {value}")
    return number


def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="salida JSON")
    common.add_argument("-v", "--verbose", action="count", default=0, help="más logging en stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="torelli", description="Sucesión de Birman para Torelli hiperelíptico")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    word = groups.add_parser("word", help="palabras en ζ_1..ζ_{2g+1}")
    word_cmds = word.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("reduce", "eps", "split", "kernel", "factor"):
        sub = word_cmds.add_parser(name, parents=[common])
        sub.add_argument("-g", "--genus", type=_positive, required=True)
        sub.add_argument("word", nargs="?", default="")
    sub = word_cmds.add_parser("schreier", parents=[common])
    sub.add_argument("-g", "--genus", type=_positive, required=True)
    sub.add_argument("--radius", type=_non_negative, default=0)
    sub = word_cmds.add_parser("enum", parents=[common])
    sub.add_argument("-g", "--genus", type=_positive, required=True)
    sub.add_argument("--max-len", type=_non_negative, default=2)
    sub = word_cmds.add_parser("check", parents=[common])
    sub.add_argument("-g", "--genus", type=_positive, required=True)
    sub.add_argument("--max-len", type=_non_negative, default=4)
    sub.add_argument("--workers", type=_positive, default=1)
    sub.add_argument("--samples", type=_non_negative, default=0)
    sub.add_argument("--seed", type=int, default=0)

    braid = groups.add_parser("braid", help="trenzas y Burau reducida")
    braid_cmds = braid.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("burau", "eval", "perm", "kernel", "center"):
        sub = braid_cmds.add_parser(name, parents=[common])
        sub.add_argument("-n", "--strands", type=int)
        sub.add_argument("-g", "--genus", type=_positive)
        sub.add_argument("--boundary", action="store_true", help="usar 2g+2 hebras en lugar de 2g+1")
        if name == "center":
            sub.add_argument("--kernel", action="store_true", help="generador de Z(B_n) ∩ K_n")
        else:
            sub.add_argument("word", nargs="?", default="")
        if name == "eval":
            sub.add_argument("--at", type=int, default=-1)

    action = groups.add_parser("action", help="acción en H_1(S_g, {p_1, p_2})")
    action_cmds = action.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("matrix", "fix"):
        sub = action_cmds.add_parser(name, parents=[common])
        sub.add_argument("-g", "--genus", type=_positive, required=True)
        sub.add_argument("word", nargs="?", default="")
        if name == "matrix":
            sub.add_argument("--beta", type=_positive)
    return parser


def _strands(args) -> int:
    if args.strands is not None:
        if args.strands < 2:
            raise UsageError(f"-n debe ser >= 2, se recibió {args.strands}")
        return args.strands
    if args.genus is not None:
        return strands_for_genus(args.genus, boundary=args.boundary)
    raise UsageError("se requiere -n o -g")


def _dispatch(args: argparse.Namespace) -> Tuple[Dict, ops.Result]:
    command = f"{args.group} {args.command}"
    inputs: Dict = {"command": command}
    if args.group == "word":
        inputs["genus"] = args.genus
        if args.command == "schreier":
            inputs["radius"] = args.radius
            return inputs, ops.word_schreier(args.genus, args.radius)
        if args.command == "enum":
            inputs["max_len"] = args.max_len
            return inputs, ops.word_enum(args.genus, args.max_len)
        if args.command == "check":
            inputs.update(max_len=args.max_len, samples=args.samples, seed=args.seed)
            return inputs, ops.word_check(
                args.genus, args.max_len, args.workers, args.samples, args.seed
            )
        inputs["word"] = args.word
        handler = {
            "reduce": ops.word_reduce,
            "eps": ops.word_eps,
            "split": ops.word_split,
            "kernel": ops.word_kernel,
            "factor": ops.word_factor,
        }[args.command]
        return inputs, handler(args.genus, args.word)

    if args.group == "braid":
        strands = _strands(args)
        inputs["strands"] = strands
        if args.command == "center":
            inputs["kernel"] = args.kernel
            return inputs, ops.braid_center(strands, args.kernel)
        inputs["word"] = args.word
        if args.command == "eval":
            inputs["at"] = args.at
            return inputs, ops.braid_eval(strands, args.word, args.at)
        handler = {
            "burau": ops.braid_burau,
            "perm": ops.braid_perm,
            "kernel": ops.braid_kernel,
        }[args.command]
        return inputs, handler(strands, args.word)

    inputs.update(genus=args.genus, word=args.word)
    if args.command == "matrix":
        inputs["beta"] = args.beta
        return inputs, ops.action_matrix(args.genus, args.word, args.beta)
    return inputs, ops.action_fix(args.genus, args.word)


def run(argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    configure_logging(level, stream=stderr)

    try:
        inputs, result = _dispatch(args)
    except UsageError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except WordSyntaxError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except TorelliError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN

    if args.json:
        print(CliEnvelope(inputs=inputs, result=result.data).model_dump_json(), file=stdout)
    else:
        print(result.text, file=stdout)
    logger.debug("comando %s terminado", inputs["command"])
    return EXIT_OK


def main() -> None:
    sys.exit(run())

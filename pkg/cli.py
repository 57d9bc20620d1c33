"""
Command-line front end

python cli.py measure aabaa
python cli.py gen --kind runmin --k 3
python cli.py verify --scope runmin --k 7 --format csv
python cli.py sweep --sigma 6 --trials 20 --seed 7 --oracle
python cli.py conjecture --k 5
"""

import argparse
import logging
import sys
from typing import List, Optional

from models.configs import RunConfig
from runs.commands import run
from runs.emitters import emit
from util.setup import setup_logger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parent.add_argument("--seed", type=int, default=0)
    parent.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracles")
    parent.add_argument("--big", action="store_true", help="include the large orders such as k = 22")
    parent.add_argument("--k", type=int)
    parent.add_argument("--sigma", type=int)
    parent.add_argument("--exponents", help="comma separated, highest symbol first, e.g. 2,4,3")
    parent.add_argument("--workers", type=int)
    parent.add_argument("--quiet", action="store_true", help="only warnings and errors, on stderr")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = common_options()
    parser = argparse.ArgumentParser(prog="suffixient", description="Suffixient sets, BWT runs and de Bruijn families")
    commands = parser.add_subparsers(dest="command", required=True)

    measure = commands.add_parser("measure", parents=[parent], help="all measures of one word")
    measure.add_argument("word", nargs="?")
    measure.add_argument("--input", help="read raw bytes from a file")
    measure.add_argument("--alphabet", choices=["binary", "digits", "bytes"])
    measure.add_argument("--sentinel", help="the sentinel display label; a label absent from the input by default")

    gen = commands.add_parser("gen", parents=[parent], help="generate a family member")
    gen.add_argument("--kind", choices=["clustered", "runmin", "debruijn", "lfsr"], default="runmin")
    gen.add_argument("--poly", help="a primitive polynomial, e.g. x^4+x+1 or 0x13")

    verify = commands.add_parser("verify", parents=[parent], help="check the closed forms")
    verify.add_argument("--scope", choices=["clustered", "runmin", "sigma-bounds", "primitivity", "all"], default="all")
    verify.add_argument("--trials", type=int, default=50)

    sweep = commands.add_parser("sweep", parents=[parent], help="seeded random clustered members and words")
    sweep.add_argument("--trials", type=int, default=50)

    commands.add_parser("conjecture", parents=[parent], help="dollar scan and achiever census")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run the command and emit its report
    :return: 0 when every check passed, 1 when one failed, 2 on bad input
    """
    args = build_parser().parse_args(argv)
    options = {key: value for key, value in vars(args).items() if value is not None}
    machine = options.get("format") in ("json", "csv")
    quiet = options.get("quiet", False)
    setup_logger(logging.getLogger(), logging.WARNING if quiet else logging.INFO, sys.stderr if quiet or machine else sys.stdout)
    try:
        config = RunConfig(**options)
        report = run(config)
    except (ValueError, RuntimeError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE
    emit(report, config.format)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
# src/main.py

"""
Command-line entry point for the block decomposition engine.

Every subcommand prints its result to stdout, as JSON or as text; logs go
to stderr (and to rotating files with --log-dir).
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from config.schemas import CharacterName, OutputFormat, VerifySuite
from config.settings import (
    DEFAULT_DENOMINATOR_BOUND,
    DEFAULT_SERIES_ORDER,
    EXIT_DOMAIN_ERROR,
    EXIT_FAILURE,
    EXIT_UNCLASSIFIED,
    LOG_LEVEL,
)
from src.cli_interface.command_handler import CommandHandler
from src.utils.errors import DomainError, EngineError, UnclassifiedCuspidalError
from src.utils.logger_config import setup_logging

logger = logging.getLogger(__name__)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Type label such as A2, B3 or G2.")
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value,
        help="Output format (default: text).",
    )
    common.add_argument("--cuspidal-table", help="Cuspidal table file replacing the shipped one.")
    common.add_argument("--log-level", default=LOG_LEVEL, help="Console log level (default: %(default)s).")
    common.add_argument("--log-dir", help="Directory for rotating log files.")

    parser = argparse.ArgumentParser(description="Block decomposition of character sheaves")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("decompose", parents=[common], help="Components L(S_I)/W^I with multiplicities.")
    sub.add_parser("faces", parents=[common], help="Faces of the fundamental alcove.")

    relweyl = sub.add_parser("relweyl", parents=[common], help="Relative Weyl group of a face.")
    relweyl.add_argument("--face", default="-", help="Face as affine node names, e.g. 'a0,a2'; '-' for the empty face.")

    cuspidal = sub.add_parser("cuspidal", parents=[common], help="Cuspidal multiplicities c_I.")
    cuspidal.add_argument("--face", default=None, help="Restrict to one face.")

    hom = sub.add_parser("hom", parents=[common], help="Graded Hom between two irreducible parameters.")
    hom.add_argument("--face", default="-", help="Face I of the first parameter.")
    hom.add_argument("--point", default="0", help="Torsion point s, e.g. '1/2,0'.")
    hom.add_argument("--index", type=_positive, default=1, help="Cuspidal index (1..c_I).")
    hom.add_argument("--rho", choices=[c.value for c in CharacterName], default=CharacterName.TRIVIAL.value)
    hom.add_argument("--other-face", default=None, help="Face of the second parameter (default: the first).")
    hom.add_argument("--other-point", default=None, help="Point of the second parameter (default: the first).")
    hom.add_argument("--other-index", type=_positive, default=None)
    hom.add_argument("--rho-prime", choices=[c.value for c in CharacterName], default=CharacterName.TRIVIAL.value)
    hom.add_argument("--order", type=_non_negative, default=DEFAULT_SERIES_ORDER, help="Truncation degree N.")

    adjoint = sub.add_parser("adjoint-series", parents=[common], help="Poincare series of H*(G/G).")
    adjoint.add_argument("--order", type=_non_negative, default=DEFAULT_SERIES_ORDER, help="Truncation degree N.")

    homology = sub.add_parser("homology", parents=[common], help="Homology of the augmented coset complex.")
    homology.add_argument("--affine", action="store_true", help="Use the affine Weyl group.")
    homology.add_argument("--length", type=_positive, default=6, help="Length bound N for the affine ball.")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    verify.add_argument("--suite", choices=[s.value for s in VerifySuite], default=VerifySuite.PAPER_EXAMPLES.value)

    params = sub.add_parser("params", parents=[common], help="Irreducible parameters (I, index, s).")
    params.add_argument("--bound", type=_positive, default=DEFAULT_DENOMINATOR_BOUND, help="Denominator bound.")

    restrict = sub.add_parser("restrict", parents=[common], help="Block structure of restriction J <- J'.")
    restrict.add_argument("--small", required=True, help="J, as affine node names.")
    restrict.add_argument("--large", required=True, help="J', as affine node names.")
    restrict.add_argument("--induction", action="store_true", help="Report induction J -> J' instead.")
    restrict.add_argument(
        "--all-faces", action="store_true", help="Also list faces with c_I = 0, which label no block."
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level, args.log_dir)

    try:
        handler = CommandHandler(args.cuspidal_table)
        code, model, text = handler.execute(args)
    except UnclassifiedCuspidalError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNCLASSIFIED
    except (DomainError, FileNotFoundError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except EngineError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    if args.format == OutputFormat.JSON.value:
        print(model.model_dump_json(indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

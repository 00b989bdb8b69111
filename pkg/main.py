import argparse
import asyncio
import logging
import os
import sys

# Add the project root to sys.path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config import get_settings
from context import CommandContext
from errors import HdaLangError

# Importing the tool modules registers their commands
import tools.hda_tool  # noqa: F401
import tools.ipo_tool  # noqa: F401
import tools.lang_tool  # noqa: F401
import tools.log_tool  # noqa: F401
import tools.mn_tool  # noqa: F401
from tools.registry import COMMANDS

logger = logging.getLogger("hdalang")

GROUPS = {
    "ipo": "ipomsets: canonical form, gluing, subsumption, decomposition",
    "hda": "higher-dimensional automata: validation, languages, membership, determinism",
    "lang": "finite languages: quotients, equivalences, swap-invariance",
    "mn": "Myhill-Nerode automata of finite languages",
    "log": "activity logs",
}

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-steps", type=int, help="bound on sparse path steps (HDALANG_MAX_STEPS)")
    common.add_argument("--alphabet", help="comma or space separated labels overriding language alphabets")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--log-level", help="logging level (HDALANG_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="hdalang",
        description="Higher-dimensional automata and their ipomset languages.",
        epilog="exit codes: 0 true, 1 false or counterexample, 2 error",
    )
    groups = parser.add_subparsers(dest="group", required=True)
    group_parsers = {}
    for group, help_text in GROUPS.items():
        group_parser = groups.add_parser(group, help=help_text)
        group_parsers[group] = group_parser.add_subparsers(dest="command", required=True)
    for (group, name), cmd in sorted(COMMANDS.items()):
        sub = group_parsers[group].add_parser(name, parents=[common], help=cmd.description, description=cmd.description)
        for argument in cmd.arguments:
            sub.add_argument(*argument.flags, **argument.options)
        sub.set_defaults(handler=cmd.handler)
    return parser


def make_context(args: argparse.Namespace) -> CommandContext:
    settings = get_settings()
    alphabet = None
    if args.alphabet is not None:
        alphabet = [token for token in args.alphabet.replace(",", " ").split() if token]
    return CommandContext(
        max_steps=settings.max_steps if args.max_steps is None else args.max_steps,
        tie_break=settings.tie_break,
        alphabet=alphabet,
        json_output=args.json,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        level = (args.log_level or get_settings().log_level).upper()
        logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
        ctx = make_context(args)
        logger.debug("running %s %s", args.group, args.command)
        code = asyncio.run(args.handler(ctx, args))
    except (HdaLangError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for text in ctx.output:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command registration for the CLI.

Each tool module decorates its command functions with :func:`command`;
``main`` builds the argument parser from :data:`COMMANDS`.
"""

from collections.abc import Awaitable, Callable
from typing import Any, NamedTuple

from context import CommandContext

Handler = Callable[[CommandContext, Any], Awaitable[int]]


class Argument(NamedTuple):
    flags: tuple[str, ...]
    options: dict[str, Any]


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


class Command(NamedTuple):
    group: str
    name: str
    description: str
    arguments: tuple[Argument, ...]
    handler: Handler


COMMANDS: dict[tuple[str, str], Command] = {}


def command(group: str, name_override: str, description_override: str, arguments: tuple[Argument, ...] = ()):
    def register(handler: Handler) -> Handler:
        COMMANDS[(group, name_override)] = Command(group, name_override, description_override, arguments, handler)
        return handler

    return register

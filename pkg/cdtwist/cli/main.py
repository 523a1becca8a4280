"""
Command line application for cdtwist.
"""
import logging

import click

from cdtwist.cli.commands import COMMANDS
from cdtwist.cli.dependencies import get_config

logger = logging.getLogger(__name__)


def create_cli() -> click.Group:
    """
    Create and configure the command group

    Returns:
        Configured click group with all commands registered
    """
    @click.group(
        name="cdtwist",
        help="Exact Cayley-Dickson arithmetic: twist-path products, tables, verification."
    )
    @click.version_option("1.0.0", prog_name="cdtwist")
    @click.pass_context
    def cli(ctx: click.Context):
        ctx.ensure_object(dict)
        ctx.obj.update(get_config())

    for command in COMMANDS:
        cli.add_command(command)

    logger.debug(f"Registered {len(COMMANDS)} commands")
    return cli

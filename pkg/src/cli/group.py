from __future__ import annotations

import logging
import sys

import click
import ujson

from constants import ExitCode
from utils.exceptions import GeoError

log = logging.getLogger(__name__)

__all__ = ("GeoGroup", "emit_error")


def emit_error(name: str, message: str, code: int, **extra) -> None:
    click.echo(ujson.dumps({"error": name, "message": message, "exit_code": int(code), **extra}), err=True)


class GeoGroup(click.Group):
    """
    Command group that maps failures onto exit codes: click usage errors and unreadable
    files exit 1, every GeoError its own code. Each failure also leaves one JSON line on stderr.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else ExitCode.ok
        except click.ClickException as e:
            e.show()
            emit_error(type(e).__name__, e.format_message(), ExitCode.usage)
            code = ExitCode.usage
        except click.Abort:
            emit_error("Abort", "Aborted.", ExitCode.usage)
            code = ExitCode.usage
        except GeoError as e:
            log.debug("command failed", exc_info=True)
            click.echo(ujson.dumps(e.to_dict()), err=True)
            code = e.exit_code
        except OSError as e:
            emit_error(type(e).__name__, str(e), ExitCode.usage)
            code = ExitCode.usage

        if standalone_mode:
            sys.exit(int(code))
        return int(code)

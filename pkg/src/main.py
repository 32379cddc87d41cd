from __future__ import annotations

import typing as T

__all__ = ("main",)


def main(argv: T.Optional[T.Sequence[str]] = None) -> int:
    from cli import cli

    return cli.main(args=list(argv) if argv is not None else None, prog_name="geolocal", standalone_mode=False)


if __name__ == "__main__":
    raise SystemExit(main())

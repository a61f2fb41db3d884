"""Plain-text configuration files.

::

    beta 1/2          # or: beta ~0.6180339887
    0 0 A
    1 0 B

Blank lines and ``#`` comments are ignored; duplicate coordinates are an
error.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .lattice import Beta, Configuration, Phase


class ConfigFormatError(ValueError):
    pass


def parse_configuration(text: str) -> tuple[Configuration, Beta]:
    beta: Optional[Beta] = None
    points: dict[tuple[int, int], Phase] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if beta is None:
            if len(fields) != 2 or fields[0] != "beta":
                raise ConfigFormatError(f"line {lineno}: expected 'beta <p>/<q>' or 'beta ~<x>'")
            try:
                beta = Beta.parse(fields[1])
            except ValueError as exc:
                raise ConfigFormatError(f"line {lineno}: {exc}") from None
            continue
        if len(fields) != 3:
            raise ConfigFormatError(f"line {lineno}: expected '<x> <y> <A|B>'")
        try:
            x, y = int(fields[0]), int(fields[1])
        except ValueError:
            raise ConfigFormatError(f"line {lineno}: coordinates must be integers") from None
        if fields[2] not in ("A", "B"):
            raise ConfigFormatError(f"line {lineno}: phase must be A or B, got {fields[2]!r}")
        if (x, y) in points:
            raise ConfigFormatError(f"line {lineno}: duplicate point ({x}, {y})")
        points[(x, y)] = Phase(fields[2])
    if beta is None:
        raise ConfigFormatError("missing 'beta' header line")
    try:
        return Configuration(points), beta
    except (OverflowError, ValueError) as exc:
        raise ConfigFormatError(str(exc)) from None


def format_configuration(config: Configuration, beta: Union[Beta, str]) -> str:
    lines = [f"beta {beta}"]
    lines += [f"{x} {y} {ph.value}" for (x, y), ph in config.items()]
    return "\n".join(lines) + "\n"


def read_configuration(path: Union[str, Path]) -> tuple[Configuration, Beta]:
    return parse_configuration(Path(path).read_text())


def write_configuration(path: Union[str, Path], config: Configuration, beta) -> None:
    Path(path).write_text(format_configuration(config, beta))

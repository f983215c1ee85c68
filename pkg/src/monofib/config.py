"""Flat ``key = value`` search configuration files.

Example::

    # search S_5 for pairs whose commutator is two transpositions
    degree = 5
    transpositions = 2
    dedup = full
    workers = 2

``transpositions`` accepts a single value, a comma list (``2, 4``) or an
inclusive range (``2-6``, odd values skipped). ``alpha_cycle_type`` is a
comma list of cycle lengths.
"""

from __future__ import annotations

import configparser
from pathlib import Path
from typing import Any

from .search import InfeasibleConfigError, SearchConfig

_SECTION = "search"
_KEYS = {
    "degree", "transpositions", "alpha_cycle_type", "max_results", "dedup",
    "workers", "deterministic_order", "log_near_misses",
}


class ConfigError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _transpositions(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "-" in text:
        lo, hi = (int(t) for t in text.split("-", 1))
        return tuple(k for k in range(lo, hi + 1) if k % 2 == 0)
    return tuple(_int_list(text))


def parse_search_config(text: str) -> SearchConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    try:
        parser.read_string(f"[{_SECTION}]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    raw = dict(parser[_SECTION])
    unknown = set(raw) - _KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "degree" not in raw or "transpositions" not in raw:
        raise ConfigError("config needs both 'degree' and 'transpositions'")
    section = parser[_SECTION]
    kwargs: dict[str, Any] = {}
    try:
        kwargs["degree"] = section.getint("degree")
        kwargs["transpositions"] = _transpositions(raw["transpositions"])
        if "alpha_cycle_type" in raw:
            kwargs["alpha_cycle_type"] = tuple(_int_list(raw["alpha_cycle_type"]))
        if "max_results" in raw:
            kwargs["max_results"] = section.getint("max_results")
        if "dedup" in raw:
            kwargs["dedup"] = raw["dedup"].strip()
        if "workers" in raw:
            kwargs["workers"] = section.getint("workers")
        for flag in ("deterministic_order", "log_near_misses"):
            if flag in raw:
                kwargs[flag] = section.getboolean(flag)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return SearchConfig(**kwargs)


def load_search_config(path: str | Path) -> SearchConfig:
    return parse_search_config(Path(path).read_text())


__all__ = ["ConfigError", "InfeasibleConfigError", "load_search_config", "parse_search_config"]

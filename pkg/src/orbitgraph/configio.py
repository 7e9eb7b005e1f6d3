"""Experiment config files: INI sections, each holding one subcommand plus
its options as key = value pairs, executed in file order.

Round-trips losslessly through ``ExperimentConfig.from_ini`` / ``to_ini``.
Command-line overrides take the form section.key=value and replace the file
value before execution.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field

from .errors import SpecError


@dataclass
class ExperimentConfig:
    """Ordered experiment sections; each maps option keys to string values.

    Every section needs a ``command`` key naming the subcommand pair, e.g.
    ``command = graph ladder``.
    """

    sections: list = field(default_factory=list)  # (name, {key: value})

    def validate(self) -> None:
        seen = set()
        for name, kv in self.sections:
            if name in seen:
                raise SpecError(f"duplicate config section [{name}]")
            seen.add(name)
            if "command" not in kv:
                raise SpecError(f"section [{name}] lacks a 'command' key")

    @classmethod
    def from_ini(cls, text: str) -> "ExperimentConfig":
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str  # keep key case
        parser.read_string(text)
        sections = [(name, dict(parser.items(name)))
                    for name in parser.sections()]
        cfg = cls(sections=sections)
        cfg.validate()
        return cfg

    def to_ini(self) -> str:
        lines = []
        for name, kv in self.sections:
            lines.append(f"[{name}]")
            for key, value in kv.items():
                lines.append(f"{key} = {value}")
            lines.append("")
        return "\n".join(lines)

    def apply_overrides(self, overrides) -> None:
        """Apply section.key=value strings over the file values."""
        for spec in overrides:
            if "=" not in spec:
                raise SpecError(f"override {spec!r} is not section.key=value")
            target, value = spec.split("=", 1)
            if "." not in target:
                raise SpecError(f"override {spec!r} lacks a section prefix")
            sec, key = target.split(".", 1)
            for name, kv in self.sections:
                if name == sec:
                    kv[key.strip()] = value.strip()
                    break
            else:
                raise SpecError(f"override targets unknown section [{sec}]")

    def argv_per_section(self) -> list:
        """Translate each section to a CLI argv list."""
        out = []
        for name, kv in self.sections:
            argv = kv["command"].split()
            for key, value in kv.items():
                if key == "command":
                    continue
                if value == "true":
                    argv.append(f"--{key}")
                else:
                    argv += [f"--{key}", value]
            out.append((name, argv))
        return out

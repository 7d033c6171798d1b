"""Exact verification of quasitriangular weak Hopf algebras."""

import json
from typing import NamedTuple

from ._core import WhakitError, __version__
from . import _core

__all__ = ["Run", "WhakitError", "__version__", "check", "face_bundle", "face_structure", "run"]


class Run(NamedTuple):
    code: int
    stdout: str
    stderr: str


def run(*args: str) -> Run:
    """Runs a whakit subcommand in process."""
    return Run(*_core.run_cli([str(a) for a in args]))


def check(reference: str, base_dir: str = ".") -> list[dict]:
    """Certification reports for a catalog name or bundle path."""
    return [json.loads(r) for r in _core.check(str(reference), str(base_dir))]


def face_bundle(n: int) -> str:
    return _core.face_bundle(n)


def face_structure(n: int) -> dict:
    return json.loads(_core.face_structure(n))

"""Python front end for the zgu torsion-unit analyzer."""
import json
from pathlib import Path

from . import _core
from ._core import Cyclotomic, ZguError, elementary_abelian_rank

_bundled = Path(__file__).resolve().parent / "data"
if _bundled.is_dir():
    _core.set_data_dir(str(_bundled))

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INVARIANT = 3


def run(*args):
    """Run a zgu command; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def run_json(*args):
    """Run a zgu command with --output json and return the parsed document."""
    code, out, err = run(*args, "--output", "json")
    if code != EXIT_OK:
        raise ZguError(err.strip() or f"zgu exited with {code}")
    return json.loads(out)


__all__ = ["Cyclotomic", "ZguError", "elementary_abelian_rank", "run", "run_json",
           "EXIT_OK", "EXIT_INPUT_ERROR", "EXIT_INVARIANT"]

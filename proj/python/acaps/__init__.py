"""Zero modes of planar Dirac operators with spectral boundary conditions."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import run as _run


def run(command, config, format="json"):
    """Run a CLI command. `config` is a dict or a JSON string; JSON output comes back parsed."""
    text = config if isinstance(config, str) else _json.dumps(config)
    out = _run(command, text, format)
    return _json.loads(out) if format == "json" else out

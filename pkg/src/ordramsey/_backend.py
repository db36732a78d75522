"""Pick the compiled cores when importable, else the pure-Python twins.

Set ``ORDRAMSEY_PURE=1`` to force the fallback (used by the benchmark and
by the twin-agreement tests).
"""

from __future__ import annotations

import os

from . import _embedcore_py, _satcore_py

pure_embed = _embedcore_py
pure_sat = _satcore_py

if os.environ.get("ORDRAMSEY_PURE") == "1":
    embedcore = _embedcore_py
    satcore = _satcore_py
else:
    try:
        from . import _embedcore as embedcore
    except ImportError:
        embedcore = _embedcore_py
    try:
        from . import _satcore as satcore
    except ImportError:
        satcore = _satcore_py

COMPILED = embedcore is not _embedcore_py and satcore is not _satcore_py


def describe() -> str:
    return "compiled" if COMPILED else "pure-python"

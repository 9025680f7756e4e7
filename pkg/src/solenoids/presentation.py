"""Reading and writing presentation files (JSON, ``format_version`` 1).

Vietoris solenoid::

    {"format_version": 1, "kind": "vietoris", "prefix": [12], "period": [5]}

Adic surface: the same plus ``"genus": g``. Toral solenoid::

    {"format_version": 1, "kind": "toral", "dimension": 2,
     "prefix": [], "period": [[[2, 0], [0, 2]]]}

Matrices are row-major nested integer arrays. Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .bundles import AdicSurface
from .supernatural import BondingSequence
from .toral import MatrixChain

FORMAT_VERSION = 1
KINDS = ("vietoris", "adic-surface", "toral")

Presented = Union[BondingSequence, AdicSurface, MatrixChain]

_KEYS = {
    "vietoris": {"format_version", "kind", "prefix", "period"},
    "adic-surface": {"format_version", "kind", "genus", "prefix", "period"},
    "toral": {"format_version", "kind", "dimension", "prefix", "period"},
}


class PresentationError(ValueError):
    def __init__(self, message: str, source: str = "<input>", field: str | None = None, line: int | None = None):
        self.message, self.source, self.field, self.line = message, source, field, line
        where = source if line is None else f"{source}:{line}"
        what = f" field '{field}':" if field else ""
        super().__init__(f"{where}:{what} {message}")


@dataclass(frozen=True)
class Presentation:
    kind: str
    value: Presented

    @property
    def dimension(self) -> int:
        return self.value.n if isinstance(self.value, MatrixChain) else 1


def _line_of(text: str, key: str) -> int | None:
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return i
    return None


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_presentation(text: str, source: str = "<input>") -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationError(f"invalid JSON: {e.msg}", source, line=e.lineno) from None

    def fail(message: str, field: str | None = None):
        top = field.split("[")[0] if field else None
        raise PresentationError(message, source, field, _line_of(text, top) if top else None)

    if not isinstance(data, dict):
        fail("top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        fail(f"expected {FORMAT_VERSION}, got {data.get('format_version')!r}", "format_version")
    kind = data.get("kind")
    if kind not in KINDS:
        fail(f"must be one of {', '.join(KINDS)}; got {kind!r}", "kind")
    extra = set(data) - _KEYS[kind]
    if extra:
        fail(f"unknown keys {sorted(extra)} for kind {kind!r}")
    missing = {"period"} | ({"genus"} if kind == "adic-surface" else set()) | (
        {"dimension"} if kind == "toral" else set()
    )
    for key in sorted(missing - set(data)):
        fail("missing", key)

    prefix = data.get("prefix", [])
    period = data["period"]
    for name, arr in (("prefix", prefix), ("period", period)):
        if not isinstance(arr, list):
            fail("must be an array", name)

    if kind == "toral":
        n = data["dimension"]
        if not _is_int(n) or n < 1:
            fail(f"must be a positive integer, got {n!r}", "dimension")
        for name, arr in (("prefix", prefix), ("period", period)):
            for i, mat in enumerate(arr):
                ok = (
                    isinstance(mat, list)
                    and len(mat) == n
                    and all(isinstance(r, list) and len(r) == n and all(map(_is_int, r)) for r in mat)
                )
                if not ok:
                    fail(f"must be a {n}x{n} integer matrix", f"{name}[{i}]")
        try:
            value: Presented = MatrixChain(n, tuple(prefix), tuple(period))
        except ValueError as e:
            fail(str(e), "period" if "period" in str(e) else "prefix")
        return Presentation(kind, value)

    for name, arr in (("prefix", prefix), ("period", period)):
        for i, x in enumerate(arr):
            if not _is_int(x) or x < 2:
                fail(f"covering degrees must be integers >= 2, got {x!r}", f"{name}[{i}]")
    try:
        seq = BondingSequence(tuple(prefix), tuple(period))
    except ValueError as e:
        fail(str(e), "period")
    if kind == "vietoris":
        return Presentation(kind, seq)
    genus = data["genus"]
    if not _is_int(genus) or genus < 1:
        fail(f"must be an integer >= 1, got {genus!r}", "genus")
    return Presentation(kind, AdicSurface(genus, seq))


def load_presentation(path: str | Path) -> Presentation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PresentationError(f"cannot read file: {e.strerror}", str(path)) from None
    return parse_presentation(text, str(path))


def to_document(value: Presented) -> dict:
    if isinstance(value, BondingSequence):
        return {
            "format_version": FORMAT_VERSION,
            "kind": "vietoris",
            "prefix": list(value.prefix),
            "period": list(value.period),
        }
    if isinstance(value, AdicSurface):
        return {
            "format_version": FORMAT_VERSION,
            "kind": "adic-surface",
            "genus": value.genus,
            "prefix": list(value.seq.prefix),
            "period": list(value.seq.period),
        }
    if isinstance(value, MatrixChain):
        as_lists = lambda ms: [[list(row) for row in m] for m in ms]  # noqa: E731
        return {
            "format_version": FORMAT_VERSION,
            "kind": "toral",
            "dimension": value.n,
            "prefix": as_lists(value.prefix),
            "period": as_lists(value.period),
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_presentation(value: Presented, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_document(value), indent=2) + "\n", encoding="utf-8")

"""Problem files: one JSON document describing a frame, an ideal and a resolution.

Polynomials may be written in the ring variables or may mention g1..gs,
which are substituted by the frame's sequence.

    {
      "ring": {"vars": ["x", "y"], "order": "lex"},
      "g": ["x^2+y^2", "y^3"],
      "ideal": ["g1^2*g2", "g1^4", "g2^3"],
      "ideal_order": "grevlex",
      "resolution": {"ranks": [1, 3, 2], "diffs": [[["g1^2*g2", ...]], ...]}
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

from .gframe import GFrame, make_frame, parse_with_g
from .groebner import GroebnerBasis
from .polyring import PolyError, Poly, PolyRing
from .resolution import FreeResolution, ResolutionError, load_resolution
from .wci import ideal_basis

FIXTURES = ("powers235_small", "twisted235", "gmonomial_plane", "powers235_massey", "variables_xy")


class ProblemError(PolyError):
    pass


@dataclass(eq=False)
class Problem:
    data: dict
    frame: GFrame
    ideal: list[Poly] | None
    resolution: FreeResolution | None
    name: str = ""
    ideal_order: str = "grevlex"
    _cache: dict = field(default_factory=dict, repr=False)

    def parse(self, text: str) -> Poly:
        return parse_with_g(text, self.frame)

    @cached_property
    def gbI(self) -> GroebnerBasis | None:
        if self.ideal is None:
            return None
        return ideal_basis(self.ideal, self.frame, self.ideal_order)

    def require_ideal(self) -> list[Poly]:
        if self.ideal is None:
            raise ProblemError("problem has no ideal section")
        return self.ideal

    def require_resolution(self) -> FreeResolution:
        if self.resolution is None:
            raise ProblemError("problem has no resolution section")
        return self.resolution


def _get(data, key, kind):
    if key not in data:
        raise ProblemError(f"missing {key!r}")
    v = data[key]
    if not isinstance(v, kind):
        raise ProblemError(f"{key!r} should be a {kind.__name__}")
    return v


def problem_from_dict(data: dict, name: str = "") -> Problem:
    if not isinstance(data, dict):
        raise ProblemError("problem must be a JSON object")
    ring = _get(data, "ring", dict)
    vars_ = _get(ring, "vars", list)
    if not all(isinstance(v, str) for v in vars_):
        raise ProblemError("variable names must be strings")
    order = ring.get("order", "lex")
    g = _get(data, "g", list)
    F = make_frame(PolyRing(vars_, order), g=[str(x) for x in g])
    parse = lambda t: parse_with_g(str(t), F)

    ideal = None
    if "ideal" in data:
        ideal = [parse(t) for t in _get(data, "ideal", list)]
    R = None
    if "resolution" in data:
        res = _get(data, "resolution", dict)
        ranks = [int(b) for b in _get(res, "ranks", list)]
        try:
            mats = [[[parse(e) for e in row] for row in M] for M in _get(res, "diffs", list)]
        except TypeError as exc:
            raise ProblemError(f"malformed matrices: {exc}") from exc
        R = load_resolution(ranks, mats)
        if ideal is None and ranks[0] == 1 and len(mats) >= 1:
            ideal = [e for e in mats[0][0] if e]
    return Problem(data, F, ideal, R, name or data.get("name", ""),
                   data.get("ideal_order", "grevlex"))


def load_problem(source) -> Problem:
    """Load from a path, a JSON string, a dict, or a bundled fixture name."""
    if isinstance(source, dict):
        return problem_from_dict(source)
    if isinstance(source, str) and source in FIXTURES:
        return fixture(source)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemError(f"cannot read {source}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{source}: invalid JSON at line {exc.lineno} col {exc.colno}") from exc
    return problem_from_dict(data, path.stem)


def fixture_data(name: str) -> dict:
    if name not in FIXTURES:
        raise ProblemError(f"no fixture named {name!r}")
    text = resources.files("gwci").joinpath("fixtures", f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def fixture(name: str) -> Problem:
    return problem_from_dict(fixture_data(name), name)


__all__ = ["Problem", "ProblemError", "load_problem", "problem_from_dict", "fixture",
           "fixture_data", "FIXTURES", "ResolutionError"]

"""Deformation retract data on Tot(F (x) K) and the perturbed inclusion.

Sign conventions (fixed here, used everywhere):

* total differential  D(h (x) w) = d_F(h) (x) w + (-1)^i h (x) delta(w)
  for h in F_i, so the two pieces anticommute and D^2 = 0;
* row-i homotopy      H_i = (-1)^(i+1) * h_nabla.

The contraction h_nabla itself satisfies delta h + h delta = Id - sigma pi,
so the homotopy of the retract datum (the one with
delta H + H delta = sigma pi - Id) is -h_nabla; the row sign absorbs the
(-1)^i carried by delta in row i.

The perturbed inclusion applied to h (x) 1 is the finite sum
sum_t (H d_F)^t (h (x) 1); it terminates because d_F lowers the row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .gframe import GFrame
from .koszul import KoszulElement, delta, form_from_json, form_to_json, h_nabla, sigma_pi
from .polyring import Poly
from .resolution import FreeResolution, NotGWCI, gwci_violations

Slot = tuple  # (level i, basis index j), both 0-based in j


class TotalElement:
    """Finite map (level, basis index) -> KoszulElement."""

    __slots__ = ("entries", "nvars")

    def __init__(self, nvars: int, entries: Mapping[Slot, KoszulElement] | None = None):
        self.nvars = nvars
        self.entries = {k: w for k, w in (entries or {}).items() if w}

    @classmethod
    def seed(cls, level: int, j: int, nvars: int, coeff: Poly | None = None) -> TotalElement:
        """h_j^level (x) coeff as a 0-form (coeff defaults to 1)."""
        q = coeff if coeff is not None else Poly.const(1, nvars)
        return cls(nvars, {(level, j): KoszulElement.scalar(q)})

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return isinstance(other, TotalElement) and self.entries == other.entries

    def __add__(self, other: TotalElement) -> TotalElement:
        out = dict(self.entries)
        for k, w in other.entries.items():
            out[k] = out[k] + w if k in out else w
        return TotalElement(self.nvars, out)

    def __neg__(self):
        return TotalElement(self.nvars, {k: -w for k, w in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def map_rows(self, f) -> TotalElement:
        """Apply ``f(level, w)`` slotwise, keeping the slot."""
        return TotalElement(self.nvars, {k: f(k[0], w) for k, w in self.entries.items()})

    def total_degrees(self) -> set[int]:
        return {lvl + w.degree for (lvl, _), w in self.entries.items()}

    def component(self, level: int, j: int) -> KoszulElement:
        w = self.entries.get((level, j))
        return w if w is not None else KoszulElement.zero(0, self.nvars)

    def __repr__(self):
        return f"TotalElement({self.entries!r})"


def apply_dF(w: TotalElement, R: FreeResolution) -> TotalElement:
    """The perturbation d_F (x) 1: moves level i to level i-1 by matrix action."""
    out: dict = {}
    for (lvl, p), form in w.entries.items():
        if lvl == 0:
            continue
        M = R.d(lvl)
        for m in range(len(M)):
            f = M[m][p]
            if not f:
                continue
            term = form.scale(f)
            key = (lvl - 1, m)
            out[key] = out[key] + term if key in out else term
    return TotalElement(w.nvars, out)


def apply_delta(w: TotalElement, F: GFrame) -> TotalElement:
    """Row-signed Koszul differential (-1)^i delta."""
    return w.map_rows(lambda lvl, form: delta(form, F) if lvl % 2 == 0 else -delta(form, F))


def apply_homotopy(w: TotalElement, F: GFrame) -> TotalElement:
    """Row-signed homotopy (-1)^(i+1) h_nabla."""
    return w.map_rows(lambda lvl, form: -h_nabla(form, F) if lvl % 2 == 0 else h_nabla(form, F))


def apply_sigma_pi(w: TotalElement, F: GFrame) -> TotalElement:
    return w.map_rows(lambda lvl, form: sigma_pi(form, F))


def total_diff(w: TotalElement, R: FreeResolution, F: GFrame) -> TotalElement:
    return apply_dF(w, R) + apply_delta(w, F)


def sigma_tilde(R: FreeResolution, F: GFrame, ell: int, j: int,
                check: bool = True) -> TotalElement:
    """Perturbed inclusion of h_j^ell (x) 1."""
    if check:
        bad = gwci_violations(R, F)
        if bad:
            raise NotGWCI(bad)
    if not 0 <= ell < len(R.ranks) or not 0 <= j < R.ranks[ell]:
        raise IndexError(f"no basis element {j} in F_{ell}")
    cur = TotalElement.seed(ell, j, F.nvars)
    acc = cur
    while cur:
        cur = apply_homotopy(apply_dF(cur, R), F)
        acc = acc + cur
    return acc


def bottom_form(w: TotalElement, j0: int = 0) -> KoszulElement:
    """The level-0 component at F_0 basis index j0."""
    return w.component(0, j0)


@dataclass
class RetractReport:
    checked: int = 0
    violations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def check_retract(F: GFrame, samples: Iterable[KoszulElement]) -> RetractReport:
    """Check the special deformation retract identities on each sample.

    With H = -h_nabla: delta H + H delta = sigma pi - Id, H sigma = 0,
    pi H = 0, H^2 = 0, and pi sigma = Id on reduced 0-forms.
    """
    report = RetractReport()
    for n, w in enumerate(samples):
        report.checked += 1
        Hw = -h_nabla(w, F)
        lhs = delta(Hw, F) - h_nabla(delta(w, F), F) if w.degree > 0 else delta(Hw, F)
        rhs = sigma_pi(w, F) - w
        if lhs != rhs:
            report.violations.append(("homotopy", n))
        if not h_nabla(Hw, F).is_zero():
            report.violations.append(("H^2", n))
        if not sigma_pi(Hw, F).is_zero():
            report.violations.append(("pi H", n))
        if w.degree == 0:
            s = sigma_pi(w, F)
            if not h_nabla(s, F).is_zero():
                report.violations.append(("H sigma", n))
            if sigma_pi(s, F) != s:
                report.violations.append(("pi sigma", n))
    return report


def check_total_retract(R: FreeResolution, F: GFrame,
                        samples: Iterable[TotalElement]) -> RetractReport:
    """Same identities on Tot(F (x) K) with the row-signed operators."""
    report = RetractReport()
    for n, w in enumerate(samples):
        report.checked += 1
        lhs = apply_delta(apply_homotopy(w, F), F) + apply_homotopy(apply_delta(w, F), F)
        if lhs != apply_sigma_pi(w, F) - w:
            report.violations.append(("homotopy", n))
        if apply_homotopy(apply_homotopy(w, F), F):
            report.violations.append(("H^2", n))
    return report


def check_small(R: FreeResolution, F: GFrame,
                seeds: Iterable[TotalElement] | None = None) -> bool:
    """(d_F H)^(r+1) annihilates the seeds (all h (x) 1 by default)."""
    if seeds is None:
        seeds = [TotalElement.seed(i, j, F.nvars)
                 for i, b in enumerate(R.ranks) for j in range(b)]
    r = R.length
    for w in seeds:
        for _ in range(r + 1):
            w = apply_dF(apply_homotopy(w, F), R)
        if w:
            return False
    return True


def perturbed_projection_vanishes(R: FreeResolution, F: GFrame) -> bool:
    """(1 (x) pi) d_F (1 (x) sigma) = 0, i.e. every entry of d_F reduces to 0 mod (g)."""
    return not gwci_violations(R, F)


def total_to_json(w: TotalElement, F: GFrame) -> list[dict]:
    return [{"level": lvl, "basis": j + 1, "form": form_to_json(form, F)}
            for (lvl, j), form in sorted(w.entries.items())]


def total_from_json(data: list[dict], F: GFrame) -> TotalElement:
    entries = {}
    for item in data:
        key = (int(item["level"]), int(item["basis"]) - 1)
        entries[key] = form_from_json(item["form"], F)
    return TotalElement(F.nvars, entries)

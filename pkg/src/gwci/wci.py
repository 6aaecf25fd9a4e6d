"""Derived ideals, the square-containment test, cycle products and Massey tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Mapping, Sequence

from .gframe import GFrame, g_expand, partial
from .groebner import GroebnerBasis, buchberger
from .koszul import KoszulElement, delta, form_from_json, form_to_json, reduce_mod, wedge
from .polyring import MonomialOrder, Poly, PolyError


class DegreeMismatch(PolyError):
    def __init__(self, args, expected, got):
        self.args_ = args
        super().__init__(f"mu{tuple(args)} has degree {got}, expected {expected}")


def ideal_order(F: GFrame, kind: str = "grevlex") -> MonomialOrder:
    return MonomialOrder(kind, nvars=F.nvars)


def ideal_basis(gens: Sequence[Poly], F: GFrame, kind: str = "grevlex") -> GroebnerBasis:
    return buchberger(list(gens), ideal_order(F, kind), track=False)


def partial_ideal_generators(I_gens: Sequence[Poly], F: GFrame) -> list[Poly]:
    """A finite generating set of the ideal of all d/dg_j(f), f in I.

    For a in Q and f in I, d_j(a f) differs from a d_j(f) + d_j(a) f by
    correction terms that are Q-combinations of
    sum_M d_j(b * sigma(f_M)) g^M over standard monomials b; together with
    f itself (from d_j(g_j f) = f + g_j d_j f) and d_j(f) these generate.
    """
    out: list[Poly] = []
    seen = set()

    def push(p):
        if p and p not in seen:
            seen.add(p)
            out.append(p)

    for f in I_gens:
        push(f)
    for f in I_gens:
        for j in range(F.s):
            push(partial(f, j, F))
    for f in I_gens:
        E = g_expand(f, F)
        for b in F.std_basis:
            bm = Poly.monomial(b)
            for j in range(F.s):
                t = Poly.zero(F.nvars)
                for M, c in E.items():
                    v = partial(bm * c, j, F)
                    if v:
                        t = t + v * F.gpow(M)
                push(t)
    return out


def partial_ideal(I_gens: Sequence[Poly], F: GFrame, kind: str = "grevlex") -> GroebnerBasis:
    return ideal_basis(partial_ideal_generators(I_gens, F), F, kind)


@dataclass
class PropResult:
    condition_holds: bool
    witness: Poly | None = None

    def __bool__(self):
        return self.condition_holds


def check_prop_sufficient(I_gens: Sequence[Poly], F: GFrame, kind: str = "grevlex") -> PropResult:
    """Is the square of the derived ideal inside I?

    Products of pairs of reduced basis elements are tested; the failing
    product whose leading monomial is smallest in the frame order is
    returned as witness.
    """
    gbI = ideal_basis(I_gens, F, kind)
    J = partial_ideal(I_gens, F, kind)
    order = F.order
    bad = []
    for a, b in combinations_with_replacement(J.basis, 2):
        p = a * b
        if not gbI.contains(p):
            bad.append(p)
    if not bad:
        return PropResult(True)
    bad.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return PropResult(False, bad[0])


def cycle_products(cycles: Mapping[str, KoszulElement] | Sequence[KoszulElement],
                   gbI: GroebnerBasis) -> dict:
    """All ordered pairwise wedge products, reduced mod I; keys are label pairs."""
    if not isinstance(cycles, Mapping):
        cycles = {str(k + 1): z for k, z in enumerate(cycles)}
    return {(a, b): reduce_mod(wedge(za, zb), gbI)
            for (a, za), (b, zb) in product(cycles.items(), repeat=2)}


def bar(w: KoszulElement) -> KoszulElement:
    return w if w.degree % 2 else -w


@dataclass
class MasseyTable:
    basis: dict  # label -> KoszulElement
    entries: dict = field(default_factory=dict)  # tuple of labels -> KoszulElement

    def mu(self, args: tuple, nvars: int) -> KoszulElement:
        if len(args) == 1:
            return self.basis[args[0]]
        w = self.entries.get(tuple(args))
        if w is None:
            return KoszulElement.zero(self.expected_degree(args), nvars)
        return w

    def expected_degree(self, args) -> int:
        return sum(self.basis[a].degree for a in args) + len(args) - 1

    def to_json(self, F: GFrame) -> dict:
        return {
            "basis": {k: form_to_json(v, F) for k, v in self.basis.items()},
            "mu": [{"args": list(k), "value": form_to_json(v, F)}
                   for k, v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict, F: GFrame) -> MasseyTable:
        basis = {str(k): form_from_json(v, F) for k, v in data["basis"].items()}
        entries = {}
        for item in data.get("mu", []):
            args = tuple(str(a) for a in item["args"])
            unknown = [a for a in args if a not in basis]
            if unknown:
                raise PolyError(f"mu entry names unknown labels {unknown}")
            entries[args] = form_from_json(item["value"], F)
        return cls(basis, entries)


@dataclass
class MasseyReport:
    checked: int = 0
    violations: list = field(default_factory=list)  # (args, lhs, rhs)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_massey(T: MasseyTable, F: GFrame, gbI: GroebnerBasis,
                  max_p: int | None = None) -> MasseyReport:
    """Check d mu(a_1..a_p) = sum_j bar(mu(a_1..a_j)) mu(a_{j+1}..a_p) mod I."""
    if max_p is None:
        max_p = F.s + 1
    n = F.nvars
    for args, w in T.entries.items():
        want = T.expected_degree(args)
        if w and w.degree != want:
            raise DegreeMismatch(args, want, w.degree)
    report = MasseyReport()
    labels = list(T.basis)
    for p in range(2, max_p + 1):
        for args in product(labels, repeat=p):
            report.checked += 1
            deg = T.expected_degree(args)
            if deg - 1 > F.s:
                continue  # both sides live above the top Koszul degree
            lhs = reduce_mod(delta(T.mu(args, n), F), gbI)
            rhs = KoszulElement.zero(deg - 1, n)
            for j in range(1, p):
                rhs = rhs + wedge(bar(T.mu(args[:j], n)), T.mu(args[j:], n))
            rhs = reduce_mod(rhs, gbI)
            if lhs != rhs:
                report.violations.append((args, lhs, rhs))
    return report


def products_vanish(cycles: Mapping[str, KoszulElement] | Sequence[KoszulElement],
                    F: GFrame, gbI: GroebnerBasis) -> tuple[bool, MasseyTable | None]:
    """True with the all-zero table as certificate when every product is 0 mod I."""
    if not isinstance(cycles, Mapping):
        cycles = {str(k + 1): z for k, z in enumerate(cycles)}
    table = cycle_products(cycles, gbI)
    if any(w for w in table.values()):
        return False, None
    return True, MasseyTable(dict(cycles))


__all__ = [
    "partial_ideal", "partial_ideal_generators", "check_prop_sufficient", "PropResult",
    "cycle_products", "MasseyTable", "MasseyReport", "verify_massey", "products_vanish",
    "DegreeMismatch", "ideal_basis", "bar",
]

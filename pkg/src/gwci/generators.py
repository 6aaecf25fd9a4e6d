"""Explicit cycles representing a basis of H_ell(g; M).

Five routes produce them:

* ``generators_main``: the iterated hatted-partial formula;
* ``generators_via_retract``: the level-0 row of the perturbed inclusion
  (operator level, independent of the closed forms);
* ``generators_g_homogeneous``: the same iteration with plain partials and a
  product of reciprocal degree sums, valid when every entry is homogeneous
  in g;
* ``generators_k_coeff``: Jacobian determinants, valid when every entry has
  constant expansion coefficients;
* ``generators_shifted``: the iteration with weight N_j/(|N| + t - 1) at
  step t, i.e. the closed form of the retract's contraction on (t-1)-forms.

The iterated hatted-partial formula divides by |N| at every step while the
contraction divides by |N| plus the form degree, so for ell >= 2 the first
route agrees with the retract only up to per-path positive factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .gframe import GFrame, g_degree, g_expand, has_constant_coefficients, hatted_partial, partial
from .groebner import GroebnerBasis
from .koszul import KoszulElement, form_sum, form_to_json, is_cycle_mod, reduce_mod, sort_sign
from .perturb import bottom_form, sigma_tilde
from .polyring import Poly, PolyError, poly_sum
from .resolution import FreeResolution, NotGWCI, gwci_violations


class DegreeOutOfRange(PolyError):
    pass


class NotGHomogeneous(PolyError):
    def __init__(self, entry):
        self.entry = entry
        super().__init__(f"entry {entry} is not homogeneous in g")


class NotKCoefficient(PolyError):
    def __init__(self, entry):
        self.entry = entry
        super().__init__(f"entry {entry} has non-constant expansion coefficients")


class NonpositiveDenominator(PolyError):
    pass


@dataclass
class GeneratorSet:
    degree: int
    generators: list[KoszulElement]
    provenance: str
    cycle_ok: list[bool] = field(default_factory=list)
    retract_match: list[bool] | None = None
    sign: int | None = None

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, k):
        return self.generators[k]

    @property
    def all_cycles(self) -> bool:
        return all(self.cycle_ok)

    def to_json(self, F: GFrame) -> dict:
        return {
            "degree": self.degree,
            "generators": [form_to_json(z, F) for z in self.generators],
            "verified": {
                "cycle": self.all_cycles if self.cycle_ok else None,
                "retract_match": (all(self.retract_match)
                                  if self.retract_match is not None else None),
                "sign": self.sign,
            },
        }


def _precheck(R: FreeResolution, F: GFrame, ell: int):
    bad = gwci_violations(R, F)
    if bad:
        raise NotGWCI(bad)
    if ell < 0:
        raise DegreeOutOfRange(f"degree {ell} is negative")


def _out_of_range(R: FreeResolution, F: GFrame, ell: int) -> bool:
    return ell >= len(R.ranks) or R.ranks[ell] == 0 or ell > F.s


def _finish(ell, forms, F, gbI, provenance) -> GeneratorSet:
    if gbI is not None:
        forms = [reduce_mod(z, gbI) for z in forms]
        cyc = [is_cycle_mod(z, F, gbI) for z in forms]
    else:
        cyc = []
    return GeneratorSet(ell, forms, provenance, cyc)


def _iterate(R: FreeResolution, F: GFrame, ell: int, j1: int,
             step: Callable[[Poly, int, tuple, int], Poly],
             track_degree: bool = False) -> list[KoszulElement]:
    """Run the nested sum for one j1; returns one form per F_0 basis index.

    ``step(p, k, path_info, t)`` is the operator applied to the product
    f * (previous) with respect to g_k at step t (from 1); ``path_info``
    is the running tuple of g-degrees of the entries used so far (when
    tracked).
    """
    n = F.nvars
    # state: (basis index at current level, ks so far, degrees so far) -> coefficient
    state: dict = {(j1, (), ()): Poly.const(1, n)}
    for level in range(ell, 0, -1):
        M = R.d(level)
        nxt: dict = {}
        for (j, ks, degs), c in state.items():
            for m in range(len(M)):
                f = M[m][j]
                if not f:
                    continue
                p = f * c
                d = (g_degree(f, F),) if track_degree else ()
                info = degs + d
                t = ell - level + 1
                for k in range(F.s):
                    v = step(p, k, info, t)
                    if not v:
                        continue
                    key = (m, ks + (k,), info)
                    cur = nxt.get(key)
                    nxt[key] = v if cur is None else cur + v
        state = {k: v for k, v in nxt.items() if v}
    out = []
    for j0 in range(R.ranks[0]):
        terms: dict = {}
        for (j, ks, _), c in state.items():
            if j != j0:
                continue
            sign, key = sort_sign(ks)
            if not sign:
                continue
            cur = terms.get(key)
            c = c if sign > 0 else -c
            terms[key] = c if cur is None else cur + c
        out.append(KoszulElement(ell, n, {k: v for k, v in terms.items() if v}))
    return out


def _unit_forms(R, F, ell):
    # degree 0: the class of each F_0 basis element is the 0-form 1
    return [KoszulElement.scalar(Poly.const(1, F.nvars)) for _ in range(R.ranks[0])]


def _collect(R, F, ell, gbI, provenance, per_j1) -> GeneratorSet:
    _precheck(R, F, ell)
    if _out_of_range(R, F, ell):
        return GeneratorSet(ell, [], provenance, [])
    if ell == 0:
        return _finish(ell, _unit_forms(R, F, ell), F, gbI, provenance)
    forms = []
    for j1 in range(R.ranks[ell]):
        parts = per_j1(j1)
        # one form per F_0 basis element; for cyclic modules there is exactly one
        forms.append(parts[0] if R.ranks[0] == 1 else parts)
    if R.ranks[0] != 1:
        flat = [z for parts in forms for z in parts]
        return GeneratorSet(ell, flat, provenance, [])
    return _finish(ell, forms, F, gbI, provenance)


def generators_main(R: FreeResolution, F: GFrame, ell: int,
                    gbI: GroebnerBasis | None = None) -> GeneratorSet:
    """Iterated hatted partials along every path of matrix entries.

    For b_0 > 1 one form is produced per (j1, F_0 index) and no reduction
    modulo an ideal is attempted.
    """
    def step(p, k, _info, _t):
        return hatted_partial(p, k, F)
    return _collect(R, F, ell, gbI, "main",
                    lambda j1: _iterate(R, F, ell, j1, step))


def generators_via_retract(R: FreeResolution, F: GFrame, ell: int,
                           gbI: GroebnerBasis | None = None) -> GeneratorSet:
    """Level-0 row of the perturbed inclusion of h_j^ell (x) 1."""
    def per_j1(j1):
        w = sigma_tilde(R, F, ell, j1, check=False)
        return [bottom_form(w, j0) for j0 in range(R.ranks[0])]
    gs = _collect(R, F, ell, gbI, "retract", per_j1)
    return gs


def shifted_partial(q: Poly, j: int, shift: int, F: GFrame) -> Poly:
    """sum_N N_j/(|N| + shift) c_N g^(N - e_j)."""
    E = g_expand(q, F)
    return poly_sum((c.scale(Fraction(N[j], sum(N) + shift)) * F.gpow(N[:j] + (N[j] - 1,) + N[j + 1:])
                     for N, c in E.items() if N[j]), F.nvars)


def generators_shifted(R: FreeResolution, F: GFrame, ell: int,
                       gbI: GroebnerBasis | None = None) -> GeneratorSet:
    """Iteration whose step t divides by |N| + t - 1 instead of |N|.

    Equals (-1)^ell times the retract oracle, and gives cycles whether or
    not the entries are homogeneous in g.
    """
    def step(p, k, _info, t):
        return shifted_partial(p, k, t - 1, F)
    return _collect(R, F, ell, gbI, "shifted",
                    lambda j1: _iterate(R, F, ell, j1, step))


def d_constant(degrees: Sequence[int]) -> Fraction:
    """prod_t 1 / (d_1 + ... + d_t - (t - 1)), degrees listed innermost first.

    ``degrees[0]`` is the g-degree of the entry of d_ell, ``degrees[1]`` that
    of d_{ell-1}, and so on.
    """
    out = Fraction(1)
    running = 0
    for t, d in enumerate(degrees):
        running += d
        den = running - t
        if den <= 0:
            raise NonpositiveDenominator(f"degree sum {den} at step {t + 1} for {list(degrees)}")
        out /= den
    return out


def _require_g_homogeneous(R, F, ell):
    for i, m, p, e in R.entries():
        if i <= ell and e and g_degree(e, F) is None:
            raise NotGHomogeneous((i, m, p))


def generators_g_homogeneous(R: FreeResolution, F: GFrame, ell: int,
                             gbI: GroebnerBasis | None = None) -> GeneratorSet:
    """Plain partials with the reciprocal degree-sum prefactor."""
    _require_g_homogeneous(R, F, ell)

    def step(p, k, info, _t):
        t = len(info)
        den = sum(info) - (t - 1)
        if den <= 0:
            raise NonpositiveDenominator(f"degree sum {den} along path {info}")
        return partial(p, k, F).scale(Fraction(1, den))
    return _collect(R, F, ell, gbI, "g-homogeneous",
                    lambda j1: _iterate(R, F, ell, j1, step, track_degree=True))


def jacobian_det(fs: Sequence[Poly], ks: Sequence[int], F: GFrame) -> Poly:
    """det (d f_l / d g_{k_j})_{j,l}: rows follow ks, columns follow fs."""
    if len(fs) != len(ks):
        raise PolyError("need as many functions as g-indices")
    n = len(fs)
    if n == 0:
        return Poly.const(1, F.nvars)
    entries = [[partial(f, k, F) for f in fs] for k in ks]
    return _det(entries, F.nvars)


def _det(A: list[list[Poly]], nvars: int) -> Poly:
    n = len(A)
    if n == 1:
        return A[0][0]
    total = Poly.zero(nvars)
    for col in range(n):
        if not A[0][col]:
            continue
        minor = [row[:col] + row[col + 1:] for row in A[1:]]
        term = A[0][col] * _det(minor, nvars)
        total = total + term if col % 2 == 0 else total - term
    return total


def _require_k_coeff(R, F, ell):
    for i, m, p, e in R.entries():
        if i <= ell and e and not has_constant_coefficients(e, F):
            raise NotKCoefficient((i, m, p))


def generators_k_coeff(R: FreeResolution, F: GFrame, ell: int,
                       gbI: GroebnerBasis | None = None) -> GeneratorSet:
    """Sum over index paths of D * Jacobian determinants on increasing g-indices."""
    _require_k_coeff(R, F, ell)
    _require_g_homogeneous(R, F, ell)

    def per_j1(j1):
        n = F.nvars
        # enumerate paths j1 -> j2 -> ... -> j_{ell+1} (an F_0 index)
        paths = [((j1,), (), ())]  # (basis chain, entries innermost first, degrees)
        for level in range(ell, 0, -1):
            M = R.d(level)
            nxt = []
            for chain, fs, degs in paths:
                j = chain[-1]
                for m in range(len(M)):
                    f = M[m][j]
                    if f:
                        nxt.append((chain + (m,), fs + (f,), degs + (g_degree(f, F),)))
            paths = nxt
        out = []
        for j0 in range(R.ranks[0]):
            pieces = []
            for chain, fs, degs in paths:
                if chain[-1] != j0:
                    continue
                D = d_constant(degs)
                outer_first = list(reversed(fs))  # (f^1, f^2, ..., f^ell)
                terms = {}
                for ks in combinations(range(F.s), ell):
                    v = jacobian_det(outer_first, ks, F)
                    if v:
                        terms[ks] = v.scale(D)
                pieces.append(KoszulElement(ell, n, terms))
            out.append(form_sum(pieces, ell, n))
        return out
    return _collect(R, F, ell, gbI, "k-coefficient", per_j1)


def relative_sign(a: GeneratorSet, b: GeneratorSet) -> int | None:
    """The single eps in {+1, -1} with a == eps * b generator-wise, else None.

    Two all-zero sets compare with eps = +1.
    """
    if len(a) != len(b):
        return None
    eps = None
    for x, y in zip(a, b):
        if x == y and x == -y:  # both zero
            continue
        if x == y:
            e = 1
        elif x == -y:
            e = -1
        else:
            return None
        if eps is None:
            eps = e
        elif eps != e:
            return None
    return 1 if eps is None else eps


def compute_generators(R: FreeResolution, F: GFrame, ell: int, gbI: GroebnerBasis | None,
                       verify: bool = True) -> GeneratorSet:
    """``generators_main`` plus cross-validation against the retract oracle."""
    gs = generators_main(R, F, ell, gbI)
    if verify and gs.generators:
        oracle = generators_via_retract(R, F, ell, gbI)
        eps = relative_sign(oracle, gs)
        gs.sign = eps
        gs.retract_match = [eps is not None] * len(gs)
    return gs


def reduced_difference(a: KoszulElement, b: KoszulElement, gbI: GroebnerBasis) -> KoszulElement:
    return reduce_mod(a - b, gbI)


__all__ = [
    "GeneratorSet", "generators_main", "generators_via_retract", "generators_g_homogeneous",
    "generators_k_coeff", "generators_shifted", "shifted_partial", "d_constant", "jacobian_det", "relative_sign", "compute_generators",
    "DegreeOutOfRange", "NotGHomogeneous", "NotKCoefficient", "NonpositiveDenominator",
]

"""Free resolutions given by their differential matrices.

``diffs[i - 1]`` is the matrix of d_i : F_i -> F_{i-1}, of shape
``ranks[i-1] x ranks[i]``; entry ``[m][p]`` is the coefficient of basis
element m of F_{i-1} in d_i(h_p).

Only the complex property is verified on load. Exactness is taken on trust:
checking it would need syzygy computations over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .gframe import GExpansion, GFrame, g_expand, g_reconstruct
from .polyring import Poly, PolyError, PolyRing, exact_scalar, poly_sum

Matrix = list  # list[list[Poly]]


class ResolutionError(PolyError):
    pass


class ShapeMismatch(ResolutionError):
    pass


class NotAComplex(ResolutionError):
    def __init__(self, i: int, entry: tuple[int, int]):
        self.i = i
        self.entry = entry
        super().__init__(f"d_{i} * d_{i + 1} is nonzero at entry {entry}")


class NotGWCI(ResolutionError):
    def __init__(self, offending):
        self.offending = offending
        super().__init__(f"entries not in (g): {offending}")


class LengthExceedsS(ResolutionError):
    pass


@dataclass
class FreeResolution:
    ranks: list[int]
    diffs: list[Matrix]
    expansions: list[list[list[GExpansion]]] | None = field(default=None, repr=False)

    @property
    def length(self) -> int:
        """Index of the last nonzero module."""
        r = len(self.ranks) - 1
        while r > 0 and self.ranks[r] == 0:
            r -= 1
        return r

    @property
    def nvars(self) -> int:
        for M in self.diffs:
            for row in M:
                for e in row:
                    return e.nvars
        raise ResolutionError("resolution has no entries")

    def d(self, i: int) -> Matrix:
        """The matrix of d_i (1-based)."""
        return self.diffs[i - 1]

    def entry(self, i: int, m: int, p: int) -> Poly:
        return self.diffs[i - 1][m][p]

    def entries(self):
        """Yield ``(i, m, p, entry)`` over all differentials."""
        for i, M in enumerate(self.diffs, start=1):
            for m, row in enumerate(M):
                for p, e in enumerate(row):
                    yield i, m, p, e

    def scale_basis(self, level: int, j: int, c) -> FreeResolution:
        """Replace basis element h_j of F_level by c*h_j (c a nonzero scalar).

        Column j of d_level is multiplied by c and row j of d_{level+1} by 1/c.
        """
        c = exact_scalar(c)
        diffs = [[list(row) for row in M] for M in self.diffs]
        if level >= 1:
            M = diffs[level - 1]
            for row in M:
                row[j] = row[j].scale(c)
        if level < len(diffs):
            M = diffs[level]
            M[j] = [e.scale(1 / c) for e in M[j]]
        return FreeResolution(list(self.ranks), diffs)


def _matmul(A: Matrix, B: Matrix, nvars: int) -> Matrix:
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    return [[poly_sum((A[r][k] * B[k][c] for k in range(inner)), nvars) for c in range(cols)]
            for r in range(rows)]


def load_resolution(ranks: Sequence[int], matrices: Sequence[Matrix]) -> FreeResolution:
    """Validate shapes and d_i d_{i+1} = 0, then wrap."""
    ranks = list(ranks)
    mats = [[list(row) for row in M] for M in matrices]
    if len(mats) != len(ranks) - 1:
        raise ShapeMismatch(f"{len(ranks)} ranks need {len(ranks) - 1} matrices, got {len(mats)}")
    nvars = None
    for i, M in enumerate(mats, start=1):
        if len(M) != ranks[i - 1] or any(len(row) != ranks[i] for row in M):
            raise ShapeMismatch(f"d_{i} should be {ranks[i - 1]}x{ranks[i]}")
        for row in M:
            for e in row:
                if nvars is None:
                    nvars = e.nvars
                elif e.nvars != nvars:
                    raise ShapeMismatch("entries live in different rings")
    for i in range(1, len(mats)):
        prod = _matmul(mats[i - 1], mats[i], nvars)
        for r, row in enumerate(prod):
            for c, e in enumerate(row):
                if e:
                    raise NotAComplex(i, (r, c))
    return FreeResolution(ranks, mats)


def gwci_violations(R: FreeResolution, F: GFrame) -> list[tuple[int, int, int]]:
    """Entries ``(i, m, p)`` (d_i is 1-based) not lying in (g)."""
    return [(i, m, p) for i, m, p, e in R.entries() if F.sigma(e)]


def check_gwci(R: FreeResolution, F: GFrame) -> bool:
    """Every differential lands in (g)F."""
    return not gwci_violations(R, F)


def check_minimal(R: FreeResolution) -> bool:
    """No entry has a nonzero constant term."""
    return not any(e.constant_term() for _, _, _, e in R.entries())


def rewrite_in_g(R: FreeResolution, F: GFrame) -> FreeResolution:
    """Attach the g-expansion of every entry; entries must lie in (g)."""
    bad = gwci_violations(R, F)
    if bad:
        raise NotGWCI(bad)
    exps = [[[g_expand(e, F) for e in row] for row in M] for M in R.diffs]
    return FreeResolution(list(R.ranks), R.diffs, exps)


def reconstruct_matrices(R: FreeResolution, F: GFrame) -> list[Matrix]:
    if R.expansions is None:
        raise ResolutionError("resolution carries no expansions")
    return [[[g_reconstruct(E, F) for E in row] for row in M] for M in R.expansions]


def homology_rank(R: FreeResolution, F: GFrame, ell: int) -> int:
    """dim over Q/(g) of H_ell(g; M), which equals the rank of F_ell."""
    if not check_gwci(R, F):
        raise NotGWCI(gwci_violations(R, F))
    if R.length > F.s:
        raise LengthExceedsS(f"resolution has F_{R.length} != 0 but s = {F.s}")
    if ell < 0 or ell >= len(R.ranks):
        return 0
    return R.ranks[ell]


def taylor_resolution(exponents: Sequence[Sequence[int]], F: GFrame) -> FreeResolution:
    """Taylor complex on the g-monomials g^A_1, ..., g^A_t.

    Degree p is free on the p-subsets of {0..t-1} in lexicographic order;
    removing the m-th smallest element (m from 1) carries sign (-1)^(m+1).
    Entries are g-monomials or units (when two lcms coincide).
    """
    tuples = [tuple(int(x) for x in A) for A in exponents]
    if len(set(tuples)) != len(tuples):
        raise ResolutionError("exponent tuples must be distinct")
    if any(len(A) != F.s for A in tuples):
        raise ResolutionError(f"exponent tuples must have length {F.s}")
    if any(not any(A) for A in tuples):
        raise ResolutionError("exponent tuples must be nonzero")
    t = len(tuples)
    s = F.s

    def lcm(S):
        out = [0] * s
        for k in S:
            out = [max(a, b) for a, b in zip(out, tuples[k])]
        return tuple(out)

    subsets = [list(combinations(range(t), p)) for p in range(t + 1)]
    pos = [{S: n for n, S in enumerate(level)} for level in subsets]
    ranks = [len(level) for level in subsets]
    diffs = []
    for p in range(1, t + 1):
        M = [[Poly.zero(F.nvars) for _ in subsets[p]] for _ in subsets[p - 1]]
        for col, S in enumerate(subsets[p]):
            top = lcm(S)
            for m, k in enumerate(S, start=1):
                T = S[:m - 1] + S[m:]
                low = lcm(T)
                e = F.gpow(tuple(a - b for a, b in zip(top, low)))
                M[pos[p - 1][T]][col] = e if m % 2 else -e
        diffs.append(M)
    return load_resolution(ranks, diffs)


def resolution_to_json(R: FreeResolution, ring: PolyRing) -> dict:
    return {"ranks": list(R.ranks),
            "diffs": [[[ring.format(e) for e in row] for row in M] for M in R.diffs]}


def resolution_from_json(data: dict, ring: PolyRing) -> FreeResolution:
    try:
        ranks = [int(b) for b in data["ranks"]]
        mats = [[[ring.parse(e) for e in row] for row in M] for M in data["diffs"]]
    except (KeyError, TypeError) as exc:
        raise ResolutionError(f"malformed resolution: {exc}") from exc
    return load_resolution(ranks, mats)

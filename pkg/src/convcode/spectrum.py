"""Weight enumerators, the adjacency matrix and the weight distribution.

A WeightEnum is a polynomial in the weight marker W with arbitrary
precision integer coefficients.  The adjacency matrix of a state diagram
holds one WeightEnum per ordered vertex pair, counting edges by output
weight (the zero self-transition at the zero state is excluded).  Powers
of the matrix count paths; the generating series

    Phi = 1 + sum_l (Lambda^l)_{0,0} L^l        (molecular codewords)
    Omega = 1 - Phi^{-1}                        (atomic codewords)

are computed as truncated series in L with WeightEnum coefficients, the
(0,0) entries of the powers obtained by iterating the first row vector so
no full matrix power is ever materialized.  Free distance, extended row
distances and active burst distances are read off Omega and Phi.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LimitError
from .polyalg import PolyMatrix, poly_eval
from .statediag import StateDiagram


def default_truncation(gamma: int) -> int:
    return 4 * gamma + 8


class WeightEnum:
    """Integer-coefficient polynomial in W, stored sparsely by weight."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {a: c for a, c in dict(terms).items() if c}

    @classmethod
    def zero(cls) -> "WeightEnum":
        return cls()

    @classmethod
    def one(cls) -> "WeightEnum":
        return cls({0: 1})

    @classmethod
    def monomial(cls, alpha: int, c: int = 1) -> "WeightEnum":
        return cls({alpha: c})

    def coeff(self, alpha: int) -> int:
        return self._terms.get(alpha, 0)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Sorted (weight, count) pairs; usable as a canonical key."""
        return tuple(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightEnum) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms())

    def __add__(self, other: "WeightEnum") -> "WeightEnum":
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return WeightEnum(out)

    def __sub__(self, other: "WeightEnum") -> "WeightEnum":
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) - c
        return WeightEnum(out)

    def __mul__(self, other: "WeightEnum") -> "WeightEnum":
        out: dict[int, int] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                key = a + b
                out[key] = out.get(key, 0) + c * d
        return WeightEnum(out)

    def min_weight(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_weight(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def count(self) -> int:
        """Sum of all coefficients (number of counted objects)."""
        return sum(self._terms.values())

    def nonzero_terms(self) -> int:
        return len(self._terms)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for a, c in self.terms():
            if a == 0:
                parts.append(str(c))
            else:
                w = "W" if a == 1 else f"W^{a}"
                parts.append(w if c == 1 else f"{c}{w}")
        return " + ".join(parts)

    __repr__ = __str__


class AdjMatrix:
    """Square matrix of weight enumerators indexed by state."""

    __slots__ = ("entries", "q", "n", "extended")

    def __init__(self, entries, q: int, n: int, extended: bool = False):
        self.entries = tuple(tuple(row) for row in entries)
        self.q = q
        self.n = n
        self.extended = extended

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> WeightEnum:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[WeightEnum, ...]:
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AdjMatrix)
            and (self.q, self.n, self.extended) == (other.q, other.n, other.extended)
            and self.entries == other.entries
        )

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )


def adjacency(sd: StateDiagram) -> AdjMatrix:
    """Tally the diagram's edges by (source, destination, output weight)."""
    s = sd.num_states
    cells = [[{} for _ in range(s)] for _ in range(s)]
    for e in sd.edges():
        cell = cells[e.src][e.dst]
        cell[e.weight] = cell.get(e.weight, 0) + 1
    cells[0][0].pop(0, None)  # the zero self-transition is never counted
    return AdjMatrix(
        [[WeightEnum(c) for c in row] for row in cells], q=sd.field.q, n=sd.n
    )


def extend(lam: AdjMatrix) -> AdjMatrix:
    """Gamma = Lambda + E_{0,0}: include the zero self-loop."""
    if lam.extended:
        raise ValueError("matrix is already extended")
    rows = [list(r) for r in lam.entries]
    rows[0][0] = rows[0][0] + WeightEnum.one()
    return AdjMatrix(rows, q=lam.q, n=lam.n, extended=True)


def adj_power(lam: AdjMatrix, l: int) -> AdjMatrix:
    """Naive l-th power; entry (i, j) enumerates length-l paths by weight."""
    if l < 1:
        raise ValueError("power must be >= 1")
    out = lam
    for _ in range(l - 1):
        out = _mat_mul(out, lam)
    return out


def _mat_mul(a: AdjMatrix, b: AdjMatrix) -> AdjMatrix:
    s = a.size
    zero = WeightEnum.zero()
    rows = []
    for i in range(s):
        acc = [zero] * s
        for t in range(s):
            e = a.entries[i][t]
            if not e:
                continue
            brow = b.entries[t]
            for j in range(s):
                if brow[j]:
                    acc[j] = acc[j] + e * brow[j]
        rows.append(acc)
    return AdjMatrix(rows, q=a.q, n=a.n, extended=a.extended)


def row_iterate(row: Sequence[WeightEnum], lam: AdjMatrix) -> tuple[WeightEnum, ...]:
    """One step of r <- r * Lambda."""
    s = lam.size
    zero = WeightEnum.zero()
    acc = [zero] * s
    for i, e in enumerate(row):
        if not e:
            continue
        lrow = lam.entries[i]
        for j in range(s):
            if lrow[j]:
                acc[j] = acc[j] + e * lrow[j]
    return tuple(acc)


class LSeries:
    """Truncated power series in L with WeightEnum coefficients."""

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs: Sequence[WeightEnum]):
        if len(coeffs) != trunc + 1:
            raise ValueError("coefficient list does not match the truncation order")
        self.trunc = trunc
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, trunc: int) -> "LSeries":
        return cls(trunc, [WeightEnum.one()] + [WeightEnum.zero()] * trunc)

    @classmethod
    def zero(cls, trunc: int) -> "LSeries":
        return cls(trunc, [WeightEnum.zero()] * (trunc + 1))

    def coeff(self, l: int) -> WeightEnum:
        return self.coeffs[l]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LSeries)
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "LSeries") -> "LSeries":
        self._match(other)
        return LSeries(self.trunc, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LSeries") -> "LSeries":
        self._match(other)
        return LSeries(self.trunc, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "LSeries") -> "LSeries":
        self._match(other)
        out = [WeightEnum.zero() for _ in range(self.trunc + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.trunc + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return LSeries(self.trunc, out)

    def _match(self, other: "LSeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")

    def inverse(self) -> "LSeries":
        """Series inverse; requires constant coefficient exactly 1."""
        if self.coeffs[0] != WeightEnum.one():
            raise ValueError("series inverse requires constant coefficient 1")
        inv = [WeightEnum.one()]
        for l in range(1, self.trunc + 1):
            acc = WeightEnum.zero()
            for j in range(1, l + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * inv[l - j]
            inv.append(WeightEnum.zero() - acc)
        return LSeries(self.trunc, inv)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_series(self)

    __repr__ = __str__


def phi_series(lam: AdjMatrix, trunc: int) -> LSeries:
    """Molecular weight distribution: coefficient l is (Lambda^l)_{0,0}."""
    if lam.extended:
        raise ValueError("use the plain adjacency matrix, not the extended one")
    if trunc < 1:
        raise ValueError("truncation must be >= 1")
    coeffs = [WeightEnum.one()]
    row: tuple[WeightEnum, ...] = tuple(
        WeightEnum.one() if j == 0 else WeightEnum.zero() for j in range(lam.size)
    )
    for _ in range(trunc):
        row = row_iterate(row, lam)
        coeffs.append(row[0])
    return LSeries(trunc, coeffs)


def omega_series(phi: LSeries) -> LSeries:
    """Atomic weight distribution Omega = 1 - Phi^{-1}."""
    return LSeries.one(phi.trunc) - phi.inverse()


@dataclass(frozen=True)
class FreeDistance:
    value: int
    certified: bool


def free_distance(omega: LSeries, *, atomic_gap: Optional[int] = None) -> FreeDistance:
    """Smallest weight with a nonzero atomic count within the truncation.

    `atomic_gap` is the bound m + mhat on the spacing of nonzero codeword
    coefficients in an atomic word (memory plus the right inverse's max
    row degree).  When supplied, the result is certified exact if every
    atomic word of weight <= value must have length <= the truncation,
    i.e. (value - 1) * atomic_gap + 1 <= trunc; otherwise the value is an
    upper bound only.
    """
    best = None
    for c in omega.coeffs[1:]:
        w = c.min_weight()
        if w is not None and (best is None or w < best):
            best = w
    if best is None:
        raise LimitError(
            f"free distance undetermined at truncation {omega.trunc}: "
            "no atomic codeword within range"
        )
    certified = atomic_gap is not None and (best - 1) * atomic_gap + 1 <= omega.trunc
    return FreeDistance(value=best, certified=certified)


def extended_row_distances(omega: LSeries) -> tuple[Optional[int], ...]:
    """Minimum atomic weight by codeword degree; None encodes +infinity."""
    return tuple(omega.coeffs[l + 1].min_weight() for l in range(omega.trunc))


def active_burst_distances(phi: LSeries) -> tuple[Optional[int], ...]:
    """Minimum molecular weight by codeword degree; None encodes +infinity."""
    return tuple(phi.coeffs[l + 1].min_weight() for l in range(phi.trunc))


# ---------------------------------------------------------------------------
# degenerate path for constant generator matrices (gamma = 0 block codes)
# ---------------------------------------------------------------------------


def block_weight_enumerator(g: PolyMatrix) -> WeightEnum:
    """Classical enumerator of the nonzero words of a constant matrix."""
    fld = g.field
    if any(c for row in g.rows for e in row for c in e[1:]):
        raise ValueError("matrix is not constant")
    const = [[poly_eval(fld, e, 0) for e in row] for row in g.rows]
    out: dict[int, int] = {}
    k, n = g.k, g.n
    for iu in range(1, fld.q**k):
        u = []
        r = iu
        for _ in range(k):
            r, d = divmod(r, fld.q)
            u.append(d)
        v = [0] * n
        for ui, row in zip(u, const):
            if ui:
                for j, c in enumerate(row):
                    if c:
                        v[j] = fld.add(v[j], fld.mul(ui, c))
        w = sum(1 for c in v if c)
        out[w] = out.get(w, 0) + 1
    return WeightEnum(out)


def block_omega(g: PolyMatrix, trunc: int) -> LSeries:
    """Omega = Lambda * L for a block code (single-step codewords only)."""
    coeffs = [WeightEnum.zero() for _ in range(trunc + 1)]
    if trunc >= 1:
        coeffs[1] = block_weight_enumerator(g)
    return LSeries(trunc, coeffs)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def format_series(ls: LSeries, var: str = "L") -> str:
    """Weight-major rendering: (L^a + 2L^b) W^alpha + ... + O(trunc)."""
    by_weight: dict[int, dict[int, int]] = {}
    for l, c in enumerate(ls.coeffs):
        for alpha, cnt in c.terms():
            by_weight.setdefault(alpha, {})[l] = cnt
    if not by_weight:
        return "0"
    parts = []
    for alpha in sorted(by_weight):
        lterms = []
        for l in sorted(by_weight[alpha]):
            cnt = by_weight[alpha][l]
            lpow = "1" if l == 0 else (var if l == 1 else f"{var}^{l}")
            lterms.append(lpow if cnt == 1 else f"{cnt}{lpow}")
        inner = " + ".join(lterms)
        if alpha == 0:
            parts.append(inner if len(lterms) == 1 else f"({inner})")
        else:
            w = "W" if alpha == 1 else f"W^{alpha}"
            parts.append(f"{inner} {w}" if len(lterms) == 1 else f"({inner}) {w}")
    return " + ".join(parts)

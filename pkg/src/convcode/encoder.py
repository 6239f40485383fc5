"""Controller canonical form (A, B, C, D) and shift-register simulation.

For a generator matrix with row degrees g_1..g_k and their sum gamma > 0,
A is the gamma x gamma block matrix of upper-shift blocks (one per nonzero
row degree), B marks each block's first column (zero rows for degree-0
rows), C stacks the coefficient rows at powers z^1..z^(g_i), and D is the
matrix value at z = 0.  The register recursion

    x_{t+1} = x_t A + u_t B,   v_t = x_t C + u_t D,   x_0 = 0

reproduces v = uG exactly; classification of a codeword (atomic /
tightly concatenated / loosely concatenated) reads off the times at which
the state returns to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import polyalg
from .galois import FieldSpec
from .polyalg import Poly, PolyMatrix, coeff, deg

ATOMIC = "atomic"
MOLECULAR_TIGHT = "molecular-tight"
CONCATENATED_LOOSE = "concatenated-loose"


@dataclass(frozen=True)
class ControllerForm:
    field: FieldSpec
    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    block_degrees: tuple[int, ...]
    gamma: int
    generator: PolyMatrix
    minimal: bool

    @property
    def k(self) -> int:
        return self.generator.k

    @property
    def n(self) -> int:
        return self.generator.n

    @property
    def memory(self) -> int:
        return max(self.block_degrees)


def controller_form(g: PolyMatrix, *, require_minimal: bool = True) -> ControllerForm:
    """Assemble (A, B, C, D) from a generator matrix.

    With `require_minimal` (the default) the input must be basic and
    minimal; the relaxed form is used for catastrophicity diagnostics on
    arbitrary full-rank matrices.  Requires gamma > 0.
    """
    info = polyalg.encoder_info(g)
    if require_minimal and not info.is_minimal:
        raise ValueError("generator matrix is not minimal; row-reduce it first")
    degs = info.row_degrees
    gamma = sum(degs)
    if gamma == 0:
        raise ValueError("constant generator matrix (gamma = 0) has no register form")
    k, n = g.k, g.n
    offsets = []
    pos = 0
    for d in degs:
        offsets.append(pos)
        pos += d
    a = [[0] * gamma for _ in range(gamma)]
    b = [[0] * gamma for _ in range(k)]
    c = [[0] * n for _ in range(gamma)]
    for i, d in enumerate(degs):
        o = offsets[i]
        for r in range(d - 1):
            a[o + r][o + r + 1] = 1
        if d > 0:
            b[i][o] = 1
        for r in range(1, d + 1):
            for j in range(n):
                c[o + r - 1][j] = coeff(g.rows[i][j], r)
    d_mat = polyalg.pm_eval0(g)
    return ControllerForm(
        field=g.field,
        A=tuple(tuple(r) for r in a),
        B=tuple(tuple(r) for r in b),
        C=tuple(tuple(r) for r in c),
        D=d_mat,
        block_degrees=degs,
        gamma=gamma,
        generator=g,
        minimal=info.is_minimal,
    )


def realization_check(cf: ControllerForm, order: int | None = None) -> bool:
    """Verify G = z B (I - zA)^{-1} C + D by expanding the finite series
    D + sum_j z^(j+1) B A^j C (A is nilpotent, so the expansion is exact)."""
    if order is None:
        order = cf.gamma
    if order < cf.gamma:
        raise ValueError("expansion order must be at least gamma")
    fld = cf.field
    k, n = cf.k, cf.n
    coeff_mats = [cf.D]
    left = cf.B
    for _ in range(order):
        coeff_mats.append(polyalg.mat_mul(fld, left, cf.C))
        left = polyalg.mat_mul(fld, left, cf.A)
    rows = []
    for i in range(k):
        rows.append(tuple(
            polyalg.poly(tuple(cm[i][j] for cm in coeff_mats)) for j in range(n)
        ))
    return PolyMatrix(fld, tuple(rows)) == cf.generator


def _input_coeff(u: Sequence[Poly], t: int) -> tuple[int, ...]:
    return tuple(coeff(ui, t) for ui in u)


def state_sequence(cf: ControllerForm, u: Sequence[Poly]):
    """Run the register on a polynomial input.

    Returns (states, outputs) with states = (x_0, ..., x_{N+1}) and
    outputs = (v_0, ..., v_N) where N = deg(uG); for u = 0 the result is
    ((0,), ()).  Inputs are per-row polynomials over the form's field.
    """
    if len(u) != cf.k:
        raise ValueError(f"input needs {cf.k} component polynomials")
    u = tuple(polyalg.poly(ui) for ui in u)
    fld = cf.field
    for ui in u:
        for c in ui:
            if not 0 <= c < fld.q:
                raise ValueError("input coefficient out of field range")
    zero_state = (0,) * cf.gamma
    if all(not ui for ui in u):
        return (zero_state,), ()
    horizon = max(
        cf.block_degrees[i] + int(deg(ui)) for i, ui in enumerate(u) if ui
    )
    states = [zero_state]
    outputs = []
    x = zero_state
    for t in range(horizon + 1):
        ut = _input_coeff(u, t)
        v = polyalg.vec_mat(fld, x, cf.C)
        ud = polyalg.vec_mat(fld, ut, cf.D)
        v = tuple(fld.add(a, b) for a, b in zip(v, ud))
        xa = polyalg.vec_mat(fld, x, cf.A)
        ub = polyalg.vec_mat(fld, ut, cf.B)
        x = tuple(fld.add(a, b) for a, b in zip(xa, ub))
        outputs.append(v)
        states.append(x)
    n_deg = max(t for t, v in enumerate(outputs) if any(v))
    if cf.minimal:
        assert not any(states[n_deg + 1])
    return tuple(states[: n_deg + 2]), tuple(outputs[: n_deg + 1])


@dataclass(frozen=True)
class Classification:
    kind: str
    concat_times: tuple[int, ...]
    tight_times: tuple[int, ...]

    @property
    def is_molecular(self) -> bool:
        return self.kind != CONCATENATED_LOOSE


def classify(cf: ControllerForm, u: Sequence[Poly]) -> Classification:
    """Classify the codeword uG via the state criterion.

    The word is concatenated at time L exactly when the state returns to
    zero there (1 <= L <= deg v), tightly so when additionally v_L != 0.
    The zero-state criterion is only valid for minimal encoders.  Inputs
    must start at time zero (u_0 != 0); callers normalize shifts.
    """
    if not cf.minimal:
        raise ValueError("classification requires a minimal encoder")
    u = tuple(polyalg.poly(ui) for ui in u)
    if all(not ui for ui in u):
        raise ValueError("cannot classify the zero codeword")
    if not any(_input_coeff(u, 0)):
        raise ValueError("input must have a nonzero constant coefficient")
    states, outputs = state_sequence(cf, u)
    n_deg = len(outputs) - 1
    concat = tuple(
        t for t in range(1, n_deg + 1) if not any(states[t])
    )
    tight = tuple(t for t in concat if any(outputs[t]))
    if not concat:
        kind = ATOMIC
    elif tight == concat:
        kind = MOLECULAR_TIGHT
    else:
        kind = CONCATENATED_LOOSE
    return Classification(kind=kind, concat_times=concat, tight_times=tight)

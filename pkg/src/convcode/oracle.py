"""Independent brute-force ground truth for the weight distribution.

Inputs are enumerated directly (per-row degree bounds chosen so that every
codeword up to the requested length appears exactly once), each codeword
is computed by polynomial multiplication, and every word is classified
twice: once by the register-state criterion and once by a direct
splitting search that asks whether each truncation is itself a codeword.
The two classifications must agree on every word; a mismatch aborts the
run, since it would falsify the state criterion.  Nothing here touches
the adjacency matrix or the series machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polyalg
from .encoder import controller_form
from .errors import LimitError
from .polyalg import PolyMatrix
from .statediag import state_index

DEFAULT_BUDGET = 1 << 24

Table = dict  # {(length, weight): count}


def _max_zero_run(word: tuple[tuple[int, ...], ...]) -> int:
    """Longest run of all-zero coefficient vectors inside a codeword."""
    best = run = 0
    for vec in word:
        if any(vec):
            run = 0
        else:
            run += 1
            best = max(best, run)
    return best


@dataclass(frozen=True)
class OracleSurvey:
    l_max: int
    atomic: Table
    molecular: Table
    gap_bound: int
    gap_violation: tuple | None
    words: int

    @property
    def gap_bound_ok(self) -> bool:
        return self.gap_violation is None


def survey(g: PolyMatrix, l_max: int, *, budget: int = DEFAULT_BUDGET) -> OracleSurvey:
    """Tally atomic and molecular codewords of length <= l_max.

    Requires a minimal generator matrix; the degree formula for minimal
    encoders makes the enumeration domain exact: row i of the input runs
    over degrees <= l_max - 1 - (row degree i).
    """
    info = polyalg.encoder_info(g)
    if not info.is_minimal:
        raise ValueError("the enumeration domain is exact for minimal matrices only")
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    fld = g.field
    q = fld.q
    k, n = g.k, g.n
    degs = info.row_degrees
    gamma = sum(degs)
    ghat, mhat = polyalg.right_inverse(g)
    gap_bound = info.memory + mhat - 1

    widths = [max(l_max - d, 0) for d in degs]  # coefficients per input row
    total = 1
    for w in widths:
        total *= q**w
    if total > budget:
        raise LimitError(f"{total} codeword evaluations exceed the budget {budget}")

    # register transition table on packed states; single state for gamma = 0
    if gamma > 0:
        cf = controller_form(g)
        trans = []
        for si in range(q**gamma):
            xvec = tuple(_unpack(si, q, gamma))
            xa = polyalg.vec_mat(fld, xvec, cf.A)
            row = []
            for ui in range(q**k):
                uvec = _unpack(ui, q, k)
                ub = polyalg.vec_mat(fld, uvec, cf.B)
                row.append(state_index(q, tuple(fld.add(a, b) for a, b in zip(xa, ub))))
            trans.append(row)
    else:
        trans = [[0] * (q**k)]

    words = []
    codeword_set = set()
    for u_rows in _input_box(q, widths):
        if not any(r[0] if r else 0 for r in u_rows):
            continue  # codewords are normalized to start at time 0
        u = tuple(polyalg.poly(r) for r in u_rows)
        v = [polyalg.ZERO] * n
        for ui, grow in zip(u, g.rows):
            if ui:
                for j in range(n):
                    v[j] = polyalg.poly_add(fld, v[j], polyalg.poly_mul(fld, ui, grow[j]))
        n_deg = max(len(e) - 1 for e in v)
        word = tuple(
            tuple(polyalg.coeff(e, t) for e in v) for t in range(n_deg + 1)
        )
        packed = tuple(state_index(q, vec) for vec in word)
        codeword_set.add(packed)
        words.append((u_rows, word, packed))

    atomic: Table = {}
    molecular: Table = {}
    gap_violation = None
    for u_rows, word, packed in words:
        n_deg = len(word) - 1
        # state criterion
        state = 0
        state_times = []
        for t in range(1, n_deg + 1):
            ut = state_index(q, tuple(r[t - 1] if t - 1 < len(r) else 0 for r in u_rows))
            state = trans[state][ut]
            if state == 0:
                state_times.append(t)
        # splitting search: does the truncation at L stay a codeword?
        split_times = []
        for t in range(1, n_deg + 1):
            prefix = packed[:t]
            while prefix and prefix[-1] == 0:
                prefix = prefix[:-1]
            if prefix in codeword_set:
                split_times.append(t)
        if state_times != split_times:
            raise RuntimeError(
                "state and splitting classifications disagree on "
                f"input {u_rows}: {state_times} vs {split_times}"
            )
        length = n_deg + 1
        weight = sum(1 for vec in word for c in vec if c)
        if not state_times:
            atomic[(length, weight)] = atomic.get((length, weight), 0) + 1
            molecular[(length, weight)] = molecular.get((length, weight), 0) + 1
            if gap_violation is None and _max_zero_run(word) > gap_bound:
                gap_violation = word
        elif all(any(word[t]) for t in state_times):
            molecular[(length, weight)] = molecular.get((length, weight), 0) + 1
    return OracleSurvey(
        l_max=l_max,
        atomic=atomic,
        molecular=molecular,
        gap_bound=gap_bound,
        gap_violation=gap_violation,
        words=len(words),
    )


def _unpack(value: int, q: int, width: int) -> tuple[int, ...]:
    out = [0] * width
    for i in range(width - 1, -1, -1):
        value, out[i] = divmod(value, q)
    return tuple(out)


def _input_box(q: int, widths: list[int]):
    """All tuples of coefficient rows, row i of length widths[i]."""
    def rec(i):
        if i == len(widths):
            yield []
            return
        for rest in rec(i + 1):
            for packed in range(q ** widths[i]):
                row = []
                val = packed
                for _ in range(widths[i]):
                    val, d = divmod(val, q)
                    row.append(d)
                yield [row] + rest
    yield from rec(0)


def enumerate_atomic(g: PolyMatrix, l_max: int, *, budget: int = DEFAULT_BUDGET) -> Table:
    """{(length, weight): count} over atomic codewords, by exhaustion."""
    return survey(g, l_max, budget=budget).atomic


def enumerate_molecular(g: PolyMatrix, l_max: int, *, budget: int = DEFAULT_BUDGET) -> Table:
    """{(length, weight): count} over molecular codewords, by exhaustion."""
    return survey(g, l_max, budget=budget).molecular


def gap_bound_check(g: PolyMatrix, l_max: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """Every atomic word found respects the zero-run bound m + mhat - 1."""
    return survey(g, l_max, budget=budget).gap_bound_ok

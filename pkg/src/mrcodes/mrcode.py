"""The (r+1) x n generator matrix, its verifier, and erasure decoding.

Column j is built from exponent a = elements[j] of the zero-sum family:
rows 1..r hold gamma^(l*a), row r+1 holds gamma^((r+1)*a) + (-1)^(r+1).
Columns are in the family's canonical order, so repair group i occupies
the contiguous index block [i*(r+1), (i+1)*(r+1)).

The structural claim verified at runtime: an (r+1)-column subset is rank
deficient (rank r) exactly when it is a repair group, and every r columns
inside a group are independent.  Message recovery from erasures reduces to
linear algebra over GF(q).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional, Sequence

from .errors import (Inconsistent, LengthMismatch, Mismatch,
                     MultipleErasuresInGroup, NotCorrectable, NotInGroup, TooLarge)
from .family import ZeroSumFamily
from .field import Field, FieldElement

_MAX_N = 10**3
_EXHAUSTIVE_SUBSET_GUARD = 10**7
_SAMPLED_SUBSETS = 10**5

Matrix = tuple[tuple[FieldElement, ...], ...]


@dataclass(frozen=True)
class MrCode:
    field: Field
    family: ZeroSumFamily
    r: int
    n: int
    k: int
    G: Matrix                                 # (r+1) rows x n columns
    repair_groups: tuple[tuple[int, ...], ...]

    @property
    def h(self) -> int:
        """Global erasures correctable beyond one per group."""
        return self.n * self.r // (self.r + 1) - self.k

    def group_of(self, column: int) -> int:
        return column // (self.r + 1)

    def columns(self, indices: Sequence[int]) -> Matrix:
        return tuple(tuple(row[j] for j in indices) for row in self.G)


@dataclass(frozen=True)
class ErasurePattern:
    erased: frozenset[int]

    @classmethod
    def from_indices(cls, indices, n: int) -> "ErasurePattern":
        indices = list(indices)
        if len(indices) != len(set(indices)):
            raise ValueError("duplicate erasure indices")
        if any(not 0 <= i < n for i in indices):
            raise ValueError(f"erasure index out of range [0, {n})")
        return cls(frozenset(indices))

    @classmethod
    def from_group_positions(cls, pairs, r: int, n: int) -> "ErasurePattern":
        """pairs of (group_index, position_in_group), zero-based."""
        return cls.from_indices((g * (r + 1) + p for g, p in pairs), n)


def build_code(field: Field, family: ZeroSumFamily) -> MrCode:
    if family.params.N != field.N:
        raise Mismatch(f"family N={family.params.N} != field N={field.N}")
    r = family.r
    n = family.n
    if n > _MAX_N:
        raise Mismatch(f"n={n} exceeds the desk-scale bound {_MAX_N}")
    sign = field.minus_one_pow(r + 1)
    G = tuple(
        tuple(field.gamma_pow(ell * a) for a in family.elements)
        for ell in range(1, r + 1)
    ) + (
        tuple(field.gamma_pow((r + 1) * a) + sign for a in family.elements),
    )
    groups = tuple(tuple(range(i * (r + 1), (i + 1) * (r + 1)))
                   for i in range(n // (r + 1)))
    return MrCode(field=field, family=family, r=r, n=n, k=r + 1,
                  G=G, repair_groups=groups)


def rank(matrix: Sequence[Sequence[FieldElement]]) -> int:
    """Row-echelon rank, exact field arithmetic, first-nonzero pivot."""
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = rows[rk][col].inv()
        rows[rk] = [x * inv for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


@dataclass
class MrReport:
    mode: str  # "exhaustive" | "sampled"
    mds_subsets_checked: int = 0
    deficient_subsets: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)
    local_distance_ok: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations and self.local_distance_ok


def verify_mr(code: MrCode, seed: int = 0, mode: str = "auto") -> MrReport:
    """Rank scan over (r+1)-column subsets plus the in-group distance check.

    Exhaustive when C(n, r+1) is within the guard; otherwise all repair
    groups plus uniformly sampled subsets (flagged in report.mode).
    mode forces one behavior: "exhaustive" raises TooLarge past the guard,
    "sampled" always samples.
    """
    r, k = code.r, code.k
    group_sets = {frozenset(g): g for g in code.repair_groups}
    within_guard = math.comb(code.n, k) <= _EXHAUSTIVE_SUBSET_GUARD
    if mode == "exhaustive" and not within_guard:
        raise TooLarge(f"C({code.n}, {k}) exceeds the exhaustive guard")
    exhaustive = within_guard if mode == "auto" else mode == "exhaustive"
    if exhaustive:
        subsets = combinations(range(code.n), k)
    else:
        rng = random.Random(seed)
        sampled = {tuple(sorted(rng.sample(range(code.n), k)))
                   for _ in range(_SAMPLED_SUBSETS)}
        sampled.update(tuple(g) for g in code.repair_groups)
        subsets = iter(sampled)
    report = MrReport(mode="exhaustive" if exhaustive else "sampled")
    for subset in subsets:
        rk = rank(code.columns(subset))
        expected = r if frozenset(subset) in group_sets else k
        report.mds_subsets_checked += 1
        if rk == r:
            report.deficient_subsets.append(tuple(subset))
        if rk != expected:
            report.violations.append((tuple(subset), rk, expected))
    for group in code.repair_groups:
        for subset in combinations(group, r):
            if rank(code.columns(subset)) != r:
                report.local_distance_ok = False
                report.violations.append((tuple(subset), rank(code.columns(subset)), r))
    return report


def _as_element(code: MrCode, x) -> FieldElement:
    return x if isinstance(x, FieldElement) else code.field.element(x)


def encode(code: MrCode, message: Sequence) -> list[FieldElement]:
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != k={code.k}")
    msg = [_as_element(code, x) for x in message]
    return [sum((m * code.G[i][j] for i, m in enumerate(msg)), code.field.zero)
            for j in range(code.n)]


def _solve(matrix: list[list[FieldElement]], rhs: list[FieldElement],
           zero: FieldElement) -> Optional[list[FieldElement]]:
    """Solve matrix * x = rhs by Gauss-Jordan; None if inconsistent.

    Requires the solution, when it exists, to be unique (full column rank).
    """
    rows = [row[:] + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivots = []
    rk = 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = rows[rk][col].inv()
        rows[rk] = [x * inv for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        pivots.append(col)
        rk += 1
    if rk < ncols:
        return None  # underdetermined; callers guarantee full column rank
    for i in range(rk, len(rows)):
        if rows[i][-1]:
            return None  # inconsistent
    solution = [zero] * ncols
    for i, col in enumerate(pivots):
        solution[col] = rows[i][-1]
    return solution


def local_repair(code: MrCode, received: Sequence, erased_index: int) -> FieldElement:
    """Recover one erased symbol from the r other symbols of its group.

    Reads exactly the r in-group positions; nothing outside the group is
    touched.
    """
    if not 0 <= erased_index < code.n:
        raise NotInGroup(f"column {erased_index} out of range [0, {code.n})")
    group = code.repair_groups[code.group_of(erased_index)]
    others = [j for j in group if j != erased_index]
    symbols = []
    for j in others:
        s = received[j]
        if s is None:
            raise MultipleErasuresInGroup(f"group {code.group_of(erased_index)} "
                                          f"has another erasure at column {j}")
        symbols.append(_as_element(code, s))
    # g_erased is in the span of the other r group columns (group rank is r,
    # any r of them independent); solve for the combination then apply it
    A = [[code.G[i][j] for j in others] for i in range(code.k)]
    g = [code.G[i][erased_index] for i in range(code.k)]
    coeffs = _solve(A, g, code.field.zero)
    if coeffs is None:
        raise AssertionError("repair system unsolvable; code structure violated")
    return sum((c * s for c, s in zip(coeffs, symbols)), code.field.zero)


def _erased_indices(code: MrCode, pattern) -> frozenset[int]:
    if isinstance(pattern, ErasurePattern):
        return pattern.erased
    return ErasurePattern.from_indices(pattern, code.n).erased


def is_correctable(code: MrCode, pattern) -> bool:
    """True iff the surviving columns span the full message space."""
    erased = _erased_indices(code, pattern)
    survivors = [j for j in range(code.n) if j not in erased]
    return rank(code.columns(survivors)) == code.k


def decode(code: MrCode, received: Sequence) -> list[FieldElement]:
    """Recover the message from a codeword with None marking erasures.

    Single-erasure groups are repaired locally first; the message is then
    solved from k independent surviving columns (greedy left-to-right) and
    cross-checked against every originally present symbol.
    """
    if len(received) != code.n:
        raise LengthMismatch(f"received length {len(received)} != n={code.n}")
    erased = frozenset(j for j, s in enumerate(received) if s is None)
    if not is_correctable(code, ErasurePattern(erased)):
        raise NotCorrectable(f"erasure pattern {sorted(erased)} is not correctable")
    working: list[Optional[FieldElement]] = [
        None if s is None else _as_element(code, s) for s in received
    ]
    for group in code.repair_groups:
        missing = [j for j in group if working[j] is None]
        if len(missing) == 1:
            working[missing[0]] = local_repair(code, working, missing[0])
    # greedy pivot columns among the known positions
    known = [j for j in range(code.n) if working[j] is not None]
    pivot_cols: list[int] = []
    for j in known:
        if rank(code.columns(pivot_cols + [j])) > len(pivot_cols):
            pivot_cols.append(j)
        if len(pivot_cols) == code.k:
            break
    A = [[code.G[i][j] for j in pivot_cols] for i in range(code.k)]
    # message * G = codeword  <=>  transpose(G_cols) * message = symbols
    At = [[A[i][c] for i in range(code.k)] for c in range(len(pivot_cols))]
    rhs = [working[j] for j in pivot_cols]
    message = _solve(At, rhs, code.field.zero)
    if message is None:
        raise AssertionError("pivot system unsolvable despite full rank")
    reencoded = encode(code, message)
    for j in range(code.n):
        if j not in erased and reencoded[j] != _as_element(code, received[j]):
            raise Inconsistent(f"symbol at column {j} contradicts the decoded message")
    return message

"""End-to-end pipeline: parameters -> set -> family -> code -> verification,
plus the erasure simulation harness and the field-size scaling report.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import FieldTooSmall, NotCorrectable, PropertyViolation, TargetUnreachable
from .family import FamilyParams, build_family, trim_family
from .field import make_field
from .mrcode import MrCode, MrReport, build_code, decode, encode, is_correctable, verify_mr
from .progfree import ProgressionFreeSet, alon_construct, exhaustive_best

_EXHAUSTIVE_D_MAX = 24


def _choose_set(d: int, r: int) -> ProgressionFreeSet:
    """Pick D for the given bound: exhaustive search where feasible, digit
    construction beyond, never worse than the capped exhaustive set (any
    valid subset of {1..24} stays valid for larger d)."""
    if d <= _EXHAUSTIVE_D_MAX:
        return exhaustive_best(d, r)
    alon = alon_construct(d, r)
    capped = exhaustive_best(_EXHAUSTIVE_D_MAX, r)
    return alon if len(alon) >= len(capped) else capped


def choose_params(r: int, q: int) -> FamilyParams:
    """Default family parameters: lambda = 1/(2 r^3), delta = lambda/(r+1).

    Both sit strictly inside the required ranges; d scales like N/r^4.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    field = make_field(q)  # validates primality
    lam = Fraction(1, 2 * r**3)
    delta = lam / (r + 1)
    N = field.N
    if math.floor(delta * N) < 1:
        raise FieldTooSmall(f"q={q} gives d=0 for r={r}; need N >= {delta.denominator}")
    return FamilyParams(N=N, r=r, lam=lam, delta=delta)


def construct(r: int, q: int, target_n: Optional[int] = None) -> tuple[MrCode, MrReport]:
    """Full construction pipeline; fails loudly if any verifier fails."""
    field = make_field(q)
    params = choose_params(r, q)
    family = build_family(params, _choose_set(params.d, r))
    if target_n is not None:
        if target_n % (r + 1) != 0:
            raise ValueError(f"target_n={target_n} is not a multiple of r+1={r + 1}")
        if family.n < target_n:
            raise TargetUnreachable(f"construction reaches n={family.n} < target {target_n}")
        family = trim_family(family, target_n // (r + 1))
    code = build_code(field, family)
    report = verify_mr(code)
    if not report.ok:
        raise PropertyViolation(f"constructed code failed verification: "
                                f"{report.violations[:3]}")
    return code, report


@dataclass
class SimReport:
    trials: int
    p: float
    seed: int
    rng: str
    counts: dict = dc_field(default_factory=dict)
    avg_symbols_read_per_repair: float = 0.0

    @property
    def failure_rate(self) -> float:
        return self.counts["failures"] / self.trials if self.trials else 0.0


def simulate(code: MrCode, p: float, trials: int, seed: int) -> SimReport:
    """Monte-Carlo erasure trials with i.i.d. per-symbol loss probability p.

    Groups with exactly one erasure are repaired locally (reading r symbols
    each); trials with heavier groups go through the global decoder.
    Deterministic given the seed (Mersenne Twister).
    """
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    from .codespec import RNG_NAME
    rng = random.Random(seed)
    q, k, n, r = code.field.q, code.k, code.n, code.r
    counts = {"intact": 0, "local_only": 0, "global_decodes": 0,
              "failures": 0, "locally_repaired_groups": 0}
    symbols_read = 0
    repairs = 0
    for _ in range(trials):
        message = [rng.randrange(q) for _ in range(k)]
        codeword = encode(code, message)
        erased = [rng.random() < p for _ in range(n)]
        received = [None if e else s for s, e in zip(codeword, erased)]
        single_groups = sum(
            1 for g in code.repair_groups if sum(erased[j] for j in g) == 1
        )
        counts["locally_repaired_groups"] += single_groups
        symbols_read += single_groups * r
        repairs += single_groups
        if not any(erased):
            counts["intact"] += 1
            continue
        heavy = any(sum(erased[j] for j in g) > 1 for g in code.repair_groups)
        try:
            recovered = decode(code, received)
        except NotCorrectable:
            counts["failures"] += 1
            continue
        assert [x.value for x in recovered] == message
        counts["global_decodes" if heavy else "local_only"] += 1
    return SimReport(trials=trials, p=p, seed=seed, rng=RNG_NAME, counts=counts,
                     avg_symbols_read_per_repair=symbols_read / repairs if repairs else 0.0)


def exact_failure_probability(code: MrCode, p: float) -> float:
    """Sum of p^|E| (1-p)^(n-|E|) over the incorrectable erasure patterns E,
    by exhausting all 2^n patterns.  Desk-scale reference for simulate()."""
    if code.n > 24:
        raise ValueError("pattern exhaustion limited to n <= 24")
    total = 0.0
    for size in range(code.n + 1):
        weight = p**size * (1 - p) ** (code.n - size)
        if weight == 0.0:
            continue
        for pattern in combinations(range(code.n), size):
            if not is_correctable(code, pattern):
                total += weight
    return total


def scaling_table(r: int, q_list) -> list[dict]:
    """Field-size scaling rows for fixed locality r.

    Indicative only: the asymptotic field-size claim is not testable at desk
    scale; rows report log q / log n and the construction's length bound
    ln q - 3 ln r - 5 sqrt(ln(q/r^4) ln r) for comparison.
    """
    rows = []
    for q in q_list:
        field = make_field(q)
        params = choose_params(r, q)
        family = build_family(params, _choose_set(params.d, r))
        code = build_code(field, family)
        report = verify_mr(code)
        if not report.ok:
            raise PropertyViolation(f"scaling instance q={q} failed verification")
        n = code.n
        ratio = math.log(q) / math.log(n) if n > 1 else float("inf")
        lower = math.log(q) - 3 * math.log(r) - 5 * math.sqrt(
            max(math.log(q / r**4), 0.0) * math.log(r)
        )
        rows.append({"q": q, "r": r, "n": n, "log_q_over_log_n": ratio,
                     "log_n_lower_bound": lower, "verification": report.mode,
                     "note": "indicative -- asymptotic claim not testable at desk scale"})
    return rows

"""Verification harness binding the order predicates to group-level truth.

Negative verdicts are backed by constructing every diagnosed witness and
running the matching group-level test on it; positive verdicts are sampled
against a deterministic battery of groups of that order.  A witness that
unexpectedly has the property is a hard error: it falsifies either the
predicate or the constructor, and the suite aborts with the locus.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Optional

from .analysis import (
    GROUP_TESTS,
    element_order,
    is_nilpotent_group,
    is_solvable_group,
    minimal_normal_subgroups,
)
from .arith import factorize_range
from .classify import PROPERTIES, diagnose, property_flags
from .construct import (
    WitnessRecipe,
    make_cyclic,
    make_semidirect_elem_abelian,
    make_witness,
    recipe_for,
)
from .groups import FiniteGroup, Subgroup, direct_product

__all__ = [
    "WITNESS_CAP",
    "VerificationError",
    "VerificationRecord",
    "SuiteResult",
    "verify_negative",
    "verify_positive",
    "run_suite",
    "write_report",
]

WITNESS_CAP = 300


class VerificationError(AssertionError):
    """A cross-check failed; carries n, property and recipe in the message."""


@dataclass
class VerificationRecord:
    n: int
    property: str
    predicate_verdict: bool
    witness_built: Optional[WitnessRecipe]
    group_verdict: Optional[bool]
    status: str  # confirmed_negative | sampled_positive | skipped_cap

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "property": self.property,
            "status": self.status,
            "recipe": self.witness_built.line() if self.witness_built else None,
        }


def _flags_for(n: int):
    from .arith import factorize

    return dict(zip(PROPERTIES, property_flags(factorize(n))))


def _is_elementary_abelian(G: FiniteGroup, H: Subgroup) -> bool:
    orders = {element_order(G, int(g)) for g in H.members if int(g) != G.identity}
    if len(orders) != 1:
        return False
    sub = G.table[H.members][:, H.members]
    return bool((sub == sub.T).all())


def verify_negative(
    n: int,
    prop: str,
    cap: int = WITNESS_CAP,
    on_witness: Optional[Callable] = None,
) -> VerificationRecord:
    """Build every diagnosed witness of order n and confirm the property fails.

    The recorded recipe is the first (canonical) diagnosis; all other
    diagnoses are verified as well since each must yield a counterexample.
    """
    diags = diagnose(n, prop)  # raises if the predicate is true
    if n > cap:
        return VerificationRecord(n, prop, False, None, None, "skipped_cap")
    test = GROUP_TESTS[prop]
    first_recipe = None
    for diag in diags:
        recipe = recipe_for(n, diag)
        if first_recipe is None:
            first_recipe = recipe
        witness = make_witness(recipe)
        if witness.order != n:
            raise VerificationError(
                f"n={n} {prop}: recipe {recipe.line()} built order {witness.order}"
            )
        if prop == "nilpotent":
            verdict = is_nilpotent_group(witness, cross_check=True)
        else:
            verdict = test(witness)
        if verdict:
            raise VerificationError(
                f"n={n} {prop}: witness {recipe.line()} unexpectedly has the property"
            )
        if prop == "supersolvable" and not is_solvable_group(witness):
            raise VerificationError(
                f"n={n} {prop}: witness {recipe.line()} should still be solvable"
            )
        if on_witness is not None:
            on_witness(n, prop, recipe, witness)
    return VerificationRecord(n, prop, False, first_recipe, False, "confirmed_negative")


def _positive_battery(n: int, budget: int) -> list[FiniteGroup]:
    """Deterministic groups of order n from the constructor vocabulary.

    The cyclic group comes first, then any buildable semidirect pieces
    (completed by a cyclic cofactor), then cyclic divisor pairs.
    """
    from .arith import factorize

    groups = [make_cyclic(n)]
    f = factorize(n)
    for q, a in f.factors:
        for p, _ in f.factors:
            if p == q or len(groups) >= budget:
                continue
            x = 1
            for k in range(1, a + 1):
                x = (x * q) % p
                if x == 1 and n % (p * q**k) == 0:
                    piece = make_semidirect_elem_abelian(q, k, p)
                    cof = n // piece.order
                    groups.append(
                        piece if cof == 1 else direct_product(piece, make_cyclic(cof))
                    )
                    break
    for d in range(2, n):
        if len(groups) >= budget:
            break
        if n % d == 0 and d * d <= n:
            groups.append(direct_product(make_cyclic(d), make_cyclic(n // d)))
    return groups[:budget]


def verify_positive(
    n: int,
    prop: str,
    sample_budget: int = 3,
    cap: int = WITNESS_CAP,
    battery: Optional[list[FiniteGroup]] = None,
) -> VerificationRecord:
    """Check the property on a battery of constructible groups of order n."""
    flags = _flags_for(n)
    if not flags[prop]:
        raise ValueError(f"{n} is not a {prop} number; use verify_negative")
    if n > cap:
        return VerificationRecord(n, prop, True, None, None, "skipped_cap")
    if battery is None:
        battery = _positive_battery(n, sample_budget)
    test = GROUP_TESTS[prop]
    for G in battery:
        if G.order != n:
            raise VerificationError(f"battery group {G.name} has order {G.order} != {n}")
        if not test(G):
            raise VerificationError(
                f"n={n} {prop}: battery group {G.name} lacks the property; "
                "a sufficiency theorem or a group test is wrong"
            )
    return VerificationRecord(n, prop, True, None, True, "sampled_positive")


@dataclass
class SuiteResult:
    max_n: int
    records: list
    counts: dict

    def summary(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"suite over 1..{self.max_n}: {parts}"


def run_suite(
    max_n: int = WITNESS_CAP,
    properties=PROPERTIES,
    witness_cap: int = WITNESS_CAP,
    sample_budget: int = 2,
    spot_check_stride: int = 25,
    on_witness: Optional[Callable] = None,
    progress=None,
) -> SuiteResult:
    """Chain/equivalence invariants plus per-n negative and positive checks.

    Any single failure aborts with the offending n, property and recipe.
    """
    for prop in properties:
        if prop not in PROPERTIES:
            raise ValueError(f"unknown property {prop!r}")
    records = []
    spot = [0]

    def watch(n, prop, recipe, witness):
        # occasional structural spot-check: minimal normal subgroups of
        # solvable witnesses are elementary abelian
        spot[0] += 1
        if spot_check_stride and spot[0] % spot_check_stride == 0 and witness.order <= 100:
            if is_solvable_group(witness):
                for M in minimal_normal_subgroups(witness):
                    if not _is_elementary_abelian(witness, M):
                        raise VerificationError(
                            f"n={n} {prop}: minimal normal subgroup of "
                            f"{recipe.line()} is not elementary abelian"
                        )
        if on_witness is not None:
            on_witness(n, prop, recipe, witness)

    for n, f in factorize_range(1, max_n):
        flags = dict(zip(PROPERTIES, property_flags(f)))
        values = [flags[p] for p in PROPERTIES]
        for earlier, later in zip(values, values[1:]):
            if earlier and not later:
                raise VerificationError(f"verdict chain broken at n={n}")
        if flags["cyclic"] != (f.is_square_free() and flags["nilpotent"]):
            raise VerificationError(f"cyclic equivalence broken at n={n}")
        if flags["abelian"] != (f.is_cube_free() and flags["nilpotent"]):
            raise VerificationError(f"abelian equivalence broken at n={n}")
        battery = None
        for prop in properties:
            if flags[prop]:
                if battery is None and n <= witness_cap:
                    battery = _positive_battery(n, sample_budget)
                rec = verify_positive(
                    n, prop, sample_budget, cap=witness_cap, battery=battery
                )
            else:
                rec = verify_negative(n, prop, cap=witness_cap, on_witness=watch)
            records.append(rec)
        if progress is not None and n % 50 == 0:
            print(f"  ... n={n}", file=progress)
    counts = {}
    for rec in records:
        counts[rec.status] = counts.get(rec.status, 0) + 1
    return SuiteResult(max_n, records, counts)


def write_report(records, fh=sys.stdout) -> None:
    """One machine-readable JSON record per line: n, property, status, recipe."""
    import json

    for rec in records:
        fh.write(json.dumps(rec.as_dict()) + "\n")

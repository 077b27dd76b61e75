"""Arithmetic predicates on group orders, with structured violation diagnosis.

Each predicate answers "does every group of order n have this property?"
from the factorization of n alone.  ``diagnose`` turns a negative verdict
into parameters from which ``construct`` can build a concrete witness group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .arith import (
    Factorization,
    factorize,
    factorize_range,
    multiplicative_order,
    phi_of,
    psi_prime_power,
)

__all__ = [
    "PROPERTIES",
    "DIAGNOSIS_KINDS",
    "ViolationDiagnosis",
    "ClassificationReport",
    "is_cyclic_number",
    "has_nilpotent_factorization",
    "is_nilpotent_number",
    "is_abelian_number",
    "is_ordered_sylow_number",
    "is_supersolvable_number",
    "abelian_group_count",
    "property_flags",
    "classify",
    "classify_range",
    "diagnose",
]

# Verdict chain order: each property implies the next.
PROPERTIES = ("cyclic", "abelian", "nilpotent", "supersolvable", "ordered_sylow")

# Deterministic ordering of diagnosis kinds (ties broken by parameters).
DIAGNOSIS_KINDS = (
    "square_factor",
    "cube_factor",
    "divisibility_pair",
    "ss_f1",
    "ss_f2",
    "ss_f3",
    "ss_f4",
    "tower_psi",
)

_PARAM_ORDER = {
    "square_factor": ("q",),
    "cube_factor": ("p",),
    "divisibility_pair": ("p", "q", "k"),
    "ss_f1": ("p", "q", "v"),
    "ss_f2": ("p", "pprime", "q"),
    "ss_f3": ("p", "q"),
    "ss_f4": ("p", "q"),
    "tower_psi": ("p", "q", "k"),
}


@dataclass(frozen=True)
class ViolationDiagnosis:
    """Why a property fails at n, in witness-buildable form.

    ``params`` holds named integers in the canonical order for the kind,
    e.g. ``ss_f1`` carries (p, q, v) with v = ord(q mod p) >= 2 and
    p * q^v dividing n.
    """

    property: str
    kind: str
    params: tuple[tuple[str, int], ...]

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "property": self.property,
            "kind": self.kind,
            "params": {k: v for k, v in self.params},
        }

    def sort_key(self):
        return (DIAGNOSIS_KINDS.index(self.kind), tuple(v for _, v in self.params))

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


def _diag(prop: str, kind: str, **params: int) -> ViolationDiagnosis:
    ordered = tuple((name, params[name]) for name in _PARAM_ORDER[kind])
    return ViolationDiagnosis(prop, kind, ordered)


# ---------------------------------------------------------------------------
# Predicates


def is_cyclic_number(n: int) -> bool:
    """True iff every group of order n is cyclic, i.e. gcd(n, phi(n)) = 1."""
    f = factorize(n)
    return gcd(f.n, phi_of(f)) == 1


def has_nilpotent_factorization(f: Factorization) -> bool:
    """No prime of n divides p^k - 1 for another prime power p^k inside n."""
    for p, _ in f.factors:
        for q, a in f.factors:
            if p == q:
                continue
            x = 1
            for _ in range(a):
                x = (x * q) % p
                if x == 1:
                    return False
    return True


def is_nilpotent_number(n: int) -> bool:
    """True iff every group of order n is nilpotent."""
    return has_nilpotent_factorization(factorize(n))


def is_abelian_number(n: int) -> bool:
    """True iff every group of order n is abelian: cube-free and nilpotent."""
    f = factorize(n)
    return f.is_cube_free() and has_nilpotent_factorization(f)


def _abelian_number_direct(f: Factorization) -> bool:
    """Closed form: every exponent <= 2 and gcd(p_i, p_j^{a_j} - 1) = 1.

    Kept as an alternate route so tests can compare it against the
    cube-free-nilpotent formulation on ranges.
    """
    if not f.is_cube_free():
        return False
    for p, _ in f.factors:
        for q, a in f.factors:
            if p != q and gcd(p, q**a - 1) != 1:
                return False
    return True


def is_ordered_sylow_number(n: int) -> bool:
    """True iff every group of order n has an ordered Sylow tower.

    Condition: for each prime power p_i^{a_i} (primes ascending), the tail
    product p_i^{a_i} ... p_r^{a_r} is coprime to psi(p_i^{a_i}).
    """
    return _ordered_sylow_of(factorize(n))


def _supersolvable(f: Factorization) -> bool:
    factors = f.factors
    primes = f.primes()
    # (1) gcd(n, psi(p^a)) and gcd(n, p - 1) must share the same prime set.
    for p, a in factors:
        ps = psi_prime_power(p, a)
        for r in primes:
            if ps % r == 0 and (p - 1) % r != 0:
                return False
    # (2) applies whenever some prime p_i is at most another exponent a_k.
    for p, ai in factors:
        for q, ak in factors:
            if p == q or p > ak:
                continue
            for r in primes:
                if (r - 1) % p == 0 and (q - 1) % r == 0:
                    return False  # (2a)
            if ai > 2:
                return False  # (2b)
            if ai == 2 and (q - 1) % (p * p) != 0:
                return False  # (2b)
    return True


def is_supersolvable_number(n: int) -> bool:
    """True iff every group of order n is supersolvable."""
    return _supersolvable(factorize(n))


def abelian_group_count(n: int) -> int:
    """Number of groups of order n when n is an abelian number: prod 2^(a-1)."""
    f = factorize(n)
    if not (f.is_cube_free() and has_nilpotent_factorization(f)):
        raise ValueError(f"{n} is not an abelian number; the count formula does not apply")
    out = 1
    for _, a in f.factors:
        out *= 2 ** (a - 1)
    return out


def _ordered_sylow_of(f: Factorization) -> bool:
    tail = f.n
    for p, a in f.factors:
        if gcd(tail, psi_prime_power(p, a)) != 1:
            return False
        tail //= p**a
    return True


def property_flags(f: Factorization) -> tuple[bool, bool, bool, bool, bool]:
    """(cyclic, abelian, nilpotent, supersolvable, ordered_sylow) for one n.

    Each flag is computed from its own criterion, with no shortcut through
    the implication chain; the chain is a theorem of the five criteria and
    stays a checkable property.
    """
    nilpotent = has_nilpotent_factorization(f)
    cyclic = gcd(f.n, phi_of(f)) == 1
    abelian = nilpotent and f.is_cube_free()
    supersolvable = _supersolvable(f)
    ordered = _ordered_sylow_of(f)
    return cyclic, abelian, nilpotent, supersolvable, ordered


# ---------------------------------------------------------------------------
# Diagnosis


def _diagnose_cyclic(f: Factorization) -> list[ViolationDiagnosis]:
    out = []
    for q, a in f.factors:
        if a >= 2:
            out.append(_diag("cyclic", "square_factor", q=q))
    for p, _ in f.factors:
        for q, _ in f.factors:
            if p != q and (q - 1) % p == 0:
                out.append(_diag("cyclic", "divisibility_pair", p=p, q=q, k=1))
    return out


def _pair_violations(f: Factorization, max_k: Optional[int] = None):
    """(p, q, k) with p | q^k - 1, k minimal and k <= a_q (optionally <= max_k)."""
    for p, _ in f.factors:
        for q, a in f.factors:
            if p == q:
                continue
            bound = a if max_k is None else min(a, max_k)
            x = 1
            for k in range(1, bound + 1):
                x = (x * q) % p
                if x == 1:
                    yield p, q, k
                    break


def _diagnose_abelian(f: Factorization) -> list[ViolationDiagnosis]:
    out = []
    for p, a in f.factors:
        if a >= 3:
            out.append(_diag("abelian", "cube_factor", p=p))
    for p, q, k in _pair_violations(f, max_k=2):
        out.append(_diag("abelian", "divisibility_pair", p=p, q=q, k=k))
    return out


def _diagnose_nilpotent(f: Factorization) -> list[ViolationDiagnosis]:
    return [
        _diag("nilpotent", "divisibility_pair", p=p, q=q, k=k)
        for p, q, k in _pair_violations(f)
    ]


def _diagnose_ordered_sylow(f: Factorization) -> list[ViolationDiagnosis]:
    out = []
    for p, q, k in _pair_violations(f):
        if p > q:
            out.append(_diag("ordered_sylow", "tower_psi", p=p, q=q, k=k))
    return out


def _diagnose_supersolvable(f: Factorization) -> list[ViolationDiagnosis]:
    out = []
    primes = f.primes()
    for q, a in f.factors:
        ps = psi_prime_power(q, a)
        for p in primes:
            if p != q and ps % p == 0 and (q - 1) % p != 0:
                v = multiplicative_order(q, p)
                # p divides q^v - 1 but not q - 1, so 2 <= v <= a.
                out.append(_diag("supersolvable", "ss_f1", p=p, q=q, v=v))
    for p, ai in f.factors:
        for q, ak in f.factors:
            if p == q or p > ak:
                continue
            for r in primes:
                if (r - 1) % p == 0 and (q - 1) % r == 0:
                    out.append(_diag("supersolvable", "ss_f2", p=p, pprime=r, q=q))
            p_div = (q - 1) % p == 0
            p2_div = (q - 1) % (p * p) == 0
            if ai >= 3 and p2_div:
                out.append(_diag("supersolvable", "ss_f4", p=p, q=q))
            elif ai >= 2 and p_div and not p2_div:
                # covers a_i = 2 violations and the fallback for a_i >= 3
                # when p^2 does not divide q - 1
                out.append(_diag("supersolvable", "ss_f3", p=p, q=q))
    return out


_DIAGNOSERS = {
    "cyclic": _diagnose_cyclic,
    "abelian": _diagnose_abelian,
    "nilpotent": _diagnose_nilpotent,
    "supersolvable": _diagnose_supersolvable,
    "ordered_sylow": _diagnose_ordered_sylow,
}


def diagnose(n: int, prop: str) -> list[ViolationDiagnosis]:
    """All violations of ``prop`` at n, deterministically ordered.

    Rejects calls where the predicate is true.  The first diagnosis is the
    one realized by ``construct.make_witness``.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    f = factorize(n)
    flags = dict(zip(PROPERTIES, property_flags(f)))
    if flags[prop]:
        raise ValueError(f"{n} is a {prop} number; nothing to diagnose")
    found = sorted(set(_DIAGNOSERS[prop](f)), key=ViolationDiagnosis.sort_key)
    assert found, f"predicate {prop} false at {n} but no violation located"
    return found


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts for all five properties at one n, plus diagnoses."""

    n: int
    factorization: Factorization
    cyclic: bool
    abelian: bool
    nilpotent: bool
    supersolvable: bool
    ordered_sylow: bool
    abelian_count: Optional[int]
    diagnoses: tuple[ViolationDiagnosis, ...]

    def flags(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.cyclic, self.abelian, self.nilpotent, self.supersolvable,
                self.ordered_sylow)

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "factorization": [[p, a] for p, a in self.factorization.factors],
            "cyclic": self.cyclic,
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "supersolvable": self.supersolvable,
            "ordered_sylow": self.ordered_sylow,
            "diagnoses": [d.as_dict() for d in self.diagnoses],
        }
        if self.abelian_count is not None:
            out["abelian_count"] = self.abelian_count
        return out


def _report(f: Factorization) -> ClassificationReport:
    flags = property_flags(f)
    # The implication chain is a theorem of the five criteria; a break here
    # means a predicate is wrong.
    for earlier, later in zip(flags, flags[1:]):
        assert not earlier or later, f"verdict chain broken at n={f.n}"
    diagnoses = []
    for prop, verdict in zip(PROPERTIES, flags):
        if not verdict:
            found = sorted(set(_DIAGNOSERS[prop](f)), key=ViolationDiagnosis.sort_key)
            assert found, f"no diagnosis for false {prop} verdict at n={f.n}"
            diagnoses.extend(found)
    count = None
    if flags[1]:
        count = 1
        for _, a in f.factors:
            count *= 2 ** (a - 1)
    return ClassificationReport(f.n, f, *flags, count, tuple(diagnoses))


def classify(n: int) -> ClassificationReport:
    """Evaluate all five predicates at n with a diagnosis per false verdict."""
    return _report(factorize(n))


def classify_range(lo: int, hi: int) -> Iterator[ClassificationReport]:
    """Reports for lo..hi inclusive, sieve-backed; identical to classify(n)."""
    for _, f in factorize_range(lo, hi):
        yield _report(f)

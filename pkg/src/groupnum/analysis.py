"""Group-level property tests: the oracle side of the order predicates.

Sylow subgroups are found by normalizer ascent, Hall subgroups by an
exhaustive walk over the lattice of pi-subgroups, and the recursive
supersolvability / Sylow-tower tests memoize verdicts by table digest
since quotients repeat across branches.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _core
from .arith import factorize, is_prime
from .groups import (
    TABLE_CAP,
    FiniteGroup,
    Subgroup,
    _derived_members,
    centralizer,
    commutator_subgroup,
    derived_series,
    is_normal,
    normalizer,
    quotient_group,
    subgroup_closure,
    upper_central_series,
)

__all__ = [
    "element_order",
    "sylow_subgroup",
    "sylow_count",
    "hall_subgroup",
    "is_cyclic_group",
    "is_abelian_group",
    "is_nilpotent_group",
    "sylow_direct_factorization",
    "is_solvable_group",
    "has_ordered_sylow_tower",
    "is_supersolvable_group",
    "prime_order_normal_subgroups",
    "minimal_normal_subgroups",
    "TransferMap",
    "transfer",
    "burnside_complement",
    "GROUP_TESTS",
]

HALL_SEARCH_CAP = 60


def element_order(G: FiniteGroup, g: int) -> int:
    """Least k >= 1 with g^k = e."""
    k, x = 1, g
    while x != G.identity:
        x = G.mul(x, g)
        k += 1
    return k


def _orders(G: FiniteGroup) -> np.ndarray:
    if "orders" not in G._cache:
        out = np.empty(G.order, dtype=np.int64)
        for g in range(G.order):
            out[g] = element_order(G, g)
        out.flags.writeable = False
        G._cache["orders"] = out
    return G._cache["orders"]


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup by normalizer ascent, minimal-index tie-breaking.

    Start from the cyclic subgroup of a minimal p-element, then repeatedly
    adjoin a p-element of the normalizer that grows the p-group; a
    non-Sylow p-subgroup always grows inside its normalizer.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    target = _p_part(G.order, p)
    if target == 1:
        result = G.trivial_subgroup()
    else:
        orders = _orders(G)
        g = int(np.flatnonzero(orders % p == 0)[0])
        P = subgroup_closure(G, [G.power(g, int(orders[g]) // p)])
        while P.order < target:
            grown = None
            for y in normalizer(G, P).members:
                y = int(y)
                if y in P or _p_part(int(orders[y]), p) != int(orders[y]):
                    continue
                C = subgroup_closure(G, list(P.members) + [y])
                if C.order > P.order and _p_part(C.order, p) == C.order:
                    grown = C
                    break
            assert grown is not None, "Sylow ascent stalled; kernel bug"
            P = grown
        result = P
    G._cache[key] = result
    return result


def _conjugate_count(G: FiniteGroup, H: Subgroup) -> int:
    conj = G.table[G.table[:, H.members], G.inverse[:, None]]
    rows = np.sort(conj, axis=1)
    return int(np.unique(rows, axis=0).shape[0])


def sylow_count(G: FiniteGroup, p: int) -> int:
    """n_p, with the congruence n_p = 1 (mod p) and n_p = |G : N_G(P)| asserted."""
    P = sylow_subgroup(G, p)
    count = _conjugate_count(G, P)
    assert count % p == 1, f"n_{p} = {count} not 1 mod {p}"
    assert count == G.order // normalizer(G, P).order, "n_p != |G : N_G(P)|"
    return count


def _pi_number(x: int, pi: frozenset) -> bool:
    for r in pi:
        while x % r == 0:
            x //= r
    return x == 1


def hall_subgroup(G: FiniteGroup, pi, cap: int = HALL_SEARCH_CAP) -> Optional[Subgroup]:
    """A subgroup of order the full pi-part of |G|, or None if none exists.

    Walks the whole lattice of pi-subgroups by adjoining one pi-element at
    a time; every pi-subgroup is reached this way, so None is a proof of
    absence, not a search failure.
    """
    if G.order > cap:
        raise ValueError(f"order {G.order} above hall search cap {cap}")
    pi = frozenset(int(r) for r in pi)
    for r in pi:
        if not is_prime(r):
            raise ValueError(f"{r} is not prime")
    m = 1
    for r in pi:
        m *= _p_part(G.order, r)
    if m == 1:
        return G.trivial_subgroup()
    if m == G.order:
        return G.whole_subgroup()
    orders = _orders(G)
    candidates = [
        g for g in range(G.order)
        if g != G.identity and _pi_number(int(orders[g]), pi)
    ]
    start = np.array([G.identity], dtype=np.int32)
    seen = {start.tobytes()}
    frontier = [start]
    while frontier:
        fresh = []
        for S in frontier:
            inside = set(int(t) for t in S)
            for g in candidates:
                if g in inside:
                    continue
                C = _core.closure(G.table, list(S) + [g])
                key = C.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                if not _pi_number(int(C.size), pi):
                    continue
                if C.size == m:
                    return Subgroup(G, C)
                fresh.append(C)
        frontier = fresh
    return None


def is_cyclic_group(G: FiniteGroup) -> bool:
    return bool((_orders(G) == G.order).any())


def is_abelian_group(G: FiniteGroup) -> bool:
    return bool((G.table == G.table.T).all())


def sylow_direct_factorization(G: FiniteGroup) -> bool:
    """Whether G is the internal direct product of its Sylow subgroups:
    elements of distinct Sylows commute and products cover G exactly."""
    primes = factorize(G.order).primes()
    sylows = [sylow_subgroup(G, p) for p in primes]
    for i, P in enumerate(sylows):
        for Q in sylows[i + 1 :]:
            forward = G.table[np.ix_(P.members, Q.members)]
            backward = G.table[np.ix_(Q.members, P.members)]
            if not (forward == backward.T).all():
                return False
    span = np.array([G.identity], dtype=np.int32)
    for P in sylows:
        span = np.unique(G.table[np.ix_(span, P.members)])
    return span.size == G.order


def is_nilpotent_group(G: FiniteGroup, cross_check: bool = False) -> bool:
    """Every Sylow subgroup normal; optionally verified against the other
    two equivalent criteria (central series reaching G, Sylow direct
    product)."""
    verdict = all(
        is_normal(G, sylow_subgroup(G, p)) for p in factorize(G.order).primes()
    )
    if cross_check:
        reaches = upper_central_series(G)[-1].order == G.order
        direct = sylow_direct_factorization(G)
        assert verdict == reaches == direct, (
            f"nilpotency criteria disagree on {G.name}: "
            f"sylow-normal={verdict} central-series={reaches} direct={direct}"
        )
    return verdict


def is_solvable_group(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def _digest(G: FiniteGroup) -> bytes:
    return hashlib.blake2b(G.table.tobytes(), digest_size=16).digest()


_TOWER_MEMO: dict[bytes, bool] = {}


def has_ordered_sylow_tower(G: FiniteGroup) -> bool:
    """Normal series with indices the prime-power parts in increasing prime
    order; tested recursively via the largest prime."""
    if G.order == 1:
        return True
    key = _digest(G)
    hit = _TOWER_MEMO.get(key)
    if hit is not None:
        return hit
    p = factorize(G.order).primes()[-1]
    P = sylow_subgroup(G, p)
    if not is_normal(G, P):
        verdict = False
    else:
        verdict = has_ordered_sylow_tower(quotient_group(G, P))
    _TOWER_MEMO[key] = verdict
    return verdict


def prime_order_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Normal subgroups of prime order, ordered by minimal generator index."""
    orders = _orders(G)
    out = []
    seen = set()
    for g in range(G.order):
        if not is_prime(int(orders[g])):
            continue
        members = _core.closure(G.table, [g])
        key = members.tobytes()
        if key in seen:
            continue
        seen.add(key)
        H = Subgroup(G, members)
        if is_normal(G, H):
            out.append(H)
    return out


_SUPER_MEMO: dict[bytes, bool] = {}


def is_supersolvable_group(G: FiniteGroup, cap: int = TABLE_CAP) -> bool:
    """Normal series with all terms normal in G and cyclic quotients.

    Equivalent recursion: G is supersolvable iff some normal subgroup of
    prime order has a supersolvable quotient (downward: a normal series
    with cyclic quotients refines to one with prime steps).
    """
    if G.order > cap:
        raise ValueError(f"order {G.order} above cap {cap}")
    if G.order == 1:
        return True
    key = _digest(G)
    hit = _SUPER_MEMO.get(key)
    if hit is not None:
        return hit
    verdict = False
    for N in prime_order_normal_subgroups(G):
        if is_supersolvable_group(quotient_group(G, N), cap=cap):
            verdict = True
            break
    _SUPER_MEMO[key] = verdict
    return verdict


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Inclusion-minimal nontrivial normal subgroups (normal closures of
    single elements, filtered to the minimal ones)."""
    if G.order == 1:
        return []
    closures = {}
    for g in range(G.order):
        if g == G.identity:
            continue
        conj = np.unique(G.table[G.table[:, g], G.inverse])
        members = _core.closure(G.table, conj)
        closures[members.tobytes()] = members
    keep = []
    items = sorted(closures.values(), key=lambda m: (m.size, m.tobytes()))
    for cand in items:
        cand_set = set(int(t) for t in cand)
        if not any(set(int(t) for t in small) <= cand_set for small in keep):
            keep.append(cand)
    return [Subgroup(G, m) for m in keep]


# ---------------------------------------------------------------------------
# Transfer


@dataclass
class TransferMap:
    """The transfer of G into H, as coset indices in the abelianization H/H'.

    Built with minimal-index right-coset representatives; construction
    re-evaluates under a randomized representative choice and checks the
    homomorphism property on all pairs, so a TransferMap is self-verified.
    """

    source: FiniteGroup
    target: Subgroup
    target_derived: Subgroup
    abelianization: FiniteGroup
    images: np.ndarray

    def image_order(self) -> int:
        return int(np.unique(self.images).size)

    def kernel(self) -> Subgroup:
        e = self.abelianization.identity
        return Subgroup(self.source, np.flatnonzero(self.images == e))


def _right_cosets(G: FiniteGroup, H: Subgroup):
    rep_of = G.table[H.members, :].min(axis=0)  # min of H*g, per g
    reps = np.unique(rep_of)
    coset_id = np.searchsorted(reps, rep_of)
    return reps, coset_id


def _evaluate_transfer(G, H, reps, coset_id, positions, abelianization):
    n = G.order
    table = G.table
    inverse = G.inverse
    images = np.empty(n, dtype=np.int32)
    coset_count = len(reps)
    for g in range(n):
        prod = G.identity
        for c in range(coset_count):
            moved = int(table[reps[c], g])
            factor = int(table[moved, inverse[reps[coset_id[moved]]]])
            prod = int(table[prod, factor])
        images[g] = abelianization.coset_of[positions[prod]]
    return images


def transfer(G: FiniteGroup, H: Subgroup, representatives=None) -> TransferMap:
    """Evaluate the transfer homomorphism of G into H/H' on every element.

    ``representatives`` overrides the default minimal-index right-coset
    representatives (one per coset, any order).
    """
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    derived = Subgroup(G, _derived_members(G, H.members))
    Hgrp = H.as_group()
    derived_positions = [H.position(int(x)) for x in derived.members]
    abelianization = quotient_group(Hgrp, Subgroup(Hgrp, derived_positions))
    positions = np.full(G.order, -1, dtype=np.int64)
    positions[H.members] = np.arange(H.order)
    reps_min, coset_id = _right_cosets(G, H)
    if representatives is None:
        reps = reps_min
    else:
        reps = np.asarray(sorted(int(r) for r in representatives), dtype=np.int64)
        if reps.size != reps_min.size or len(set(coset_id[reps])) != reps_min.size:
            raise ValueError("need exactly one representative per right coset")
        # order them by coset id so rep lookup by coset index works
        reps = reps[np.argsort(coset_id[reps])]
    images = _evaluate_transfer(G, H, reps, coset_id, positions, abelianization)
    # homomorphism on all pairs
    atab = abelianization.table
    assert (images[G.table] == atab[images[:, None], images[None, :]]).all(), (
        "transfer is not a homomorphism; kernel bug"
    )
    # independence from the representative choice (randomized re-evaluation)
    rng = random.Random(G.order * 1_000_003 + H.order)
    redraw = [
        int(rng.choice(np.flatnonzero(coset_id == c))) for c in range(len(reps_min))
    ]
    again = _evaluate_transfer(G, H, np.array(redraw), coset_id, positions, abelianization)
    assert np.array_equal(images, again), "transfer depends on the representatives"
    h_primes = factorize(H.order).primes()
    if len(h_primes) == 1 and H.order == _p_part(G.order, h_primes[0]):
        # Sylow target: image must be P/(P meet G')
        gprime = commutator_subgroup(G)
        meet = np.intersect1d(H.members, gprime.members)
        expect = H.order // int(meet.size)
        got = int(np.unique(images).size)
        assert got == expect, f"transfer image order {got}, expected {expect}"
    images.flags.writeable = False
    return TransferMap(G, H, derived, abelianization, images)


def burnside_complement(G: FiniteGroup, P: Subgroup) -> Optional[Subgroup]:
    """Kernel of the transfer into P when P sits in the center of its
    normalizer; None when the hypothesis fails."""
    N = normalizer(G, P)
    central = centralizer(G, N.members)
    if not all(int(x) in central for x in P.members):
        return None
    K = transfer(G, P).kernel()
    assert is_normal(G, K), "Burnside kernel must be normal"
    assert G.order // K.order == P.order, "complement index must be |P|"
    return K


GROUP_TESTS = {
    "cyclic": is_cyclic_group,
    "abelian": is_abelian_group,
    "nilpotent": is_nilpotent_group,
    "supersolvable": is_supersolvable_group,
    "ordered_sylow": has_ordered_sylow_tower,
}

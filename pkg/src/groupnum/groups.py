"""Concrete finite groups as full Cayley tables, with subgroup algebra.

Elements are dense indices 0..n-1.  Construction always validates identity,
inverses and (below the table cap) full associativity, because a wrong table
silently corrupts every theorem check downstream.  Groups and subgroups are
immutable after construction.
"""

from __future__ import annotations

import numpy as np

from . import _core

__all__ = [
    "TABLE_CAP",
    "PERM_CLOSURE_CAP",
    "TableError",
    "NoIdentityError",
    "NoInverseError",
    "NotAssociativeError",
    "FiniteGroup",
    "Subgroup",
    "from_table",
    "from_permutations",
    "subgroup_closure",
    "is_normal",
    "quotient_group",
    "center",
    "centralizer",
    "normalizer",
    "commutator_subgroup",
    "derived_series",
    "upper_central_series",
    "direct_product",
    "dumps",
    "loads",
]

# Table-backed groups are O(n^2) memory and O(n^3) to validate; everything
# the witness constructions need fits well below this.
TABLE_CAP = 512
PERM_CLOSURE_CAP = 20160


class TableError(ValueError):
    """A multiplication table that does not define a usable group."""


class NoIdentityError(TableError):
    pass


class NoInverseError(TableError):
    pass


class NotAssociativeError(TableError):
    pass


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.flags.writeable = False
    return arr


class FiniteGroup:
    """Immutable finite group; build via from_table / from_permutations."""

    def __init__(self, table, identity, inverse, labels=None, name=None):
        self.table = _freeze(table)
        self.order = int(self.table.shape[0])
        self.identity = int(identity)
        self.inverse = _freeze(inverse)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name if name else f"group{self.order}"
        self.coset_of = None  # set on quotients: parent index -> coset index
        self._cache = {}

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        base = g
        while k:
            if k & 1:
                out = int(self.table[out, base])
            base = int(self.table[base, base])
            k >>= 1
        return out

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity])

    def whole_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))

    def table_key(self) -> bytes:
        return self.table.tobytes()

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _find_identity(table: np.ndarray):
    n = table.shape[0]
    idx = np.arange(n, dtype=np.int32)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def from_table(table, labels=None, name=None, cap=TABLE_CAP) -> FiniteGroup:
    """Validate a square index table and wrap it as a FiniteGroup.

    Identity, inverses and associativity failures are reported distinctly.
    Tables above ``cap`` are refused rather than trusted.
    """
    arr = np.ascontiguousarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise TableError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise TableError("empty table")
    if n > cap:
        raise TableError(f"order {n} above table cap {cap}")
    if arr.min() < 0 or arr.max() >= n:
        raise TableError("table entries out of element range")
    e = _find_identity(arr)
    if e is None:
        raise NoIdentityError("no two-sided identity element")
    inverse = np.empty(n, dtype=np.int32)
    for i in range(n):
        hits = np.flatnonzero(arr[i] == e)
        if hits.size == 0 or arr[hits[0], i] != e:
            raise NoInverseError(f"element {i} has no two-sided inverse")
        inverse[i] = hits[0]
    defect = _core.associativity_defect(arr)
    if defect is not None:
        i, j, k = defect
        raise NotAssociativeError(f"(g{i}*g{j})*g{k} != g{i}*(g{j}*g{k})")
    return FiniteGroup(arr, e, inverse, labels=labels, name=name)


def _trusted_group(table, labels=None, name=None) -> FiniteGroup:
    """Construction path for tables associative by provenance (permutation
    composition); still locates identity and inverses."""
    arr = np.ascontiguousarray(table, dtype=np.int32)
    e = _find_identity(arr)
    if e is None:
        raise NoIdentityError("no two-sided identity element")
    inverse = np.empty(arr.shape[0], dtype=np.int32)
    for i in range(arr.shape[0]):
        inverse[i] = np.flatnonzero(arr[i] == e)[0]
    return FiniteGroup(arr, e, inverse, labels=labels, name=name)


def _perm_label(p: tuple[int, ...]) -> str:
    # disjoint cycle notation; fixed points dropped
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def from_permutations(generators, cap=PERM_CLOSURE_CAP, name=None) -> FiniteGroup:
    """Close a list of permutations of {0..d-1} under composition.

    The closure becomes a Cayley table on the lexicographically sorted
    elements (so the identity permutation is element 0).
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    d = len(gens[0])
    for g in gens:
        if len(g) != d or sorted(g) != list(range(d)):
            raise ValueError(f"not a permutation of 0..{d - 1}: {g}")
    ident = tuple(range(d))
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[x]] for x in range(d))  # p after g
                if q not in elements:
                    if len(elements) >= cap:
                        raise ValueError(f"closure exceeds cap {cap}")
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    elems = sorted(elements)
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(p[q[x]] for x in range(d))]
    labels = [_perm_label(p) for p in elems]
    if n <= TABLE_CAP:
        return from_table(table, labels=labels, name=name)
    return _trusted_group(table, labels=labels, name=name)


class Subgroup:
    """A verified subgroup of a FiniteGroup, stored as sorted member indices."""

    def __init__(self, parent: FiniteGroup, members):
        self.parent = parent
        arr = np.unique(np.asarray(list(members), dtype=np.int32))
        if arr.size == 0 or arr[0] < 0 or arr[-1] >= parent.order:
            raise ValueError("subgroup members out of range or empty")
        mask = np.zeros(parent.order, dtype=bool)
        mask[arr] = True
        if not mask[parent.identity]:
            raise ValueError("subgroup must contain the identity")
        if not mask[parent.table[np.ix_(arr, arr)]].all():
            raise ValueError("member set is not closed under the product")
        assert parent.order % arr.size == 0, "Lagrange violated; table is corrupt"
        self.members = _freeze(arr)
        self.mask = mask
        self.mask.flags.writeable = False

    @property
    def order(self) -> int:
        return int(self.members.size)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask[g])

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and np.array_equal(other.members, self.members)
        )

    def __hash__(self):
        return hash((id(self.parent), self.members.tobytes()))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def position(self, g: int) -> int:
        """Index of g within the sorted member list."""
        pos = int(np.searchsorted(self.members, g))
        if pos >= self.order or self.members[pos] != g:
            raise KeyError(f"{g} not in subgroup")
        return pos

    def as_group(self) -> FiniteGroup:
        """This subgroup reindexed to 0..h-1 as its own FiniteGroup."""
        m = self.members
        lookup = np.zeros(self.parent.order, dtype=np.int32)
        lookup[m] = np.arange(self.order, dtype=np.int32)
        table = lookup[self.parent.table[np.ix_(m, m)]]
        return from_table(table, name=f"{self.parent.name}|sub{self.order}")

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name})"


def subgroup_closure(G: FiniteGroup, seed) -> Subgroup:
    """Smallest subgroup of G containing ``seed``."""
    seed = [int(g) for g in seed]
    if not seed:
        return G.trivial_subgroup()
    if min(seed) < 0 or max(seed) >= G.order:
        raise ValueError("seed elements out of range")
    return Subgroup(G, _core.closure(G.table, seed))


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """gHg^{-1} = H for every g in G."""
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    return _core.is_normal(G.table, G.inverse, H.members)


def quotient_group(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """G/N on cosets, labelled by minimal coset representatives.

    The natural projection is recorded on the result as ``coset_of``
    (parent element index -> coset index).
    """
    if not is_normal(G, N):
        raise ValueError("quotient requires a normal subgroup")
    rep_of = G.table[N.members, :].min(axis=0)  # min of N*g per column g
    reps = np.unique(rep_of)
    coset_id = np.searchsorted(reps, rep_of).astype(np.int32)
    qtable = coset_id[G.table[np.ix_(reps, reps)]]
    q = from_table(
        qtable,
        labels=[f"[{int(r)}]" for r in reps],
        name=f"{G.name}/{N.order}",
    )
    q.coset_of = _freeze(coset_id)
    return q


def center(G: FiniteGroup) -> Subgroup:
    members = np.flatnonzero((G.table == G.table.T).all(axis=1))
    return Subgroup(G, members)


def centralizer(G: FiniteGroup, elems) -> Subgroup:
    s = np.asarray(list(elems), dtype=np.int32)
    agree = G.table[:, s] == G.table[s, :].T
    return Subgroup(G, np.flatnonzero(agree.all(axis=1)))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    m = H.members
    conj = G.table[G.table[:, m], G.inverse[:, None]]  # row g = g H g^{-1}
    ok = (np.sort(conj, axis=1) == m).all(axis=1)
    return Subgroup(G, np.flatnonzero(ok))


def _derived_members(G: FiniteGroup, members: np.ndarray) -> np.ndarray:
    comm = _core.commutator_set(G.table, G.inverse, members)
    return _core.closure(G.table, comm)


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    key = "derived"
    if key not in G._cache:
        members = _derived_members(G, np.arange(G.order, dtype=np.int32))
        G._cache[key] = Subgroup(G, members)
    return G._cache[key]


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    """G >= G' >= G'' >= ... until the series stabilizes.

    A final repeated term is kept only when the series stalls above the
    identity (the nonsolvable case).
    """
    series = [G.whole_subgroup()]
    while True:
        cur = series[-1]
        nxt = Subgroup(G, _derived_members(G, cur.members))
        if nxt == cur:
            if not cur.is_trivial():
                series.append(nxt)
            return series
        series.append(nxt)


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """Z_0 <= Z_1 <= ... via centers of successive quotients, lifted back."""
    series = [G.trivial_subgroup()]
    while True:
        z = series[-1]
        if z.is_whole():
            return series
        q = quotient_group(G, z)
        central = center(q)
        lifted = Subgroup(G, np.flatnonzero(central.mask[q.coset_of]))
        series.append(lifted)
        if lifted.order == z.order:
            return series


def direct_product(G: FiniteGroup, H: FiniteGroup, cap=TABLE_CAP) -> FiniteGroup:
    """Componentwise product on pairs, element (g, h) -> g*|H| + h."""
    n = G.order * H.order
    if n > cap:
        raise TableError(f"product order {n} above cap {cap}")
    table = (
        G.table[:, None, :, None].astype(np.int64) * H.order
        + H.table[None, :, None, :]
    ).reshape(n, n)
    labels = None
    if G.labels or H.labels:
        labels = [
            f"({G.label(i)},{H.label(j)})" for i in range(G.order) for j in range(H.order)
        ]
    return from_table(table, labels=labels, name=f"{G.name}x{H.name}")


def dumps(G: FiniteGroup) -> str:
    """Text form: order, then the table rows, then the identity index."""
    lines = [str(G.order)]
    lines.extend(" ".join(str(int(x)) for x in row) for row in G.table)
    lines.append(str(G.identity))
    return "\n".join(lines) + "\n"


def loads(text: str, name=None) -> FiniteGroup:
    """Parse and fully validate the ``dumps`` text format."""
    tokens = text.split()
    if not tokens:
        raise TableError("empty group text")
    n = int(tokens[0])
    if len(tokens) != 1 + n * n + 1:
        raise TableError(
            f"expected {1 + n * n + 1} numbers for order {n}, got {len(tokens)}"
        )
    table = np.array(tokens[1 : 1 + n * n], dtype=np.int32).reshape(n, n)
    declared = int(tokens[-1])
    G = from_table(table, name=name)
    if G.identity != declared:
        raise TableError(f"declared identity {declared}, table says {G.identity}")
    return G

"""Constructors for every counterexample family, plus witness recipes.

Witness groups are built as a base group (cyclic piece, Heisenberg group,
elementary-abelian semidirect product, skew product, or one of the three
monomial affine families) direct-multiplied with a cyclic cofactor so the
total order is exactly the n being refuted.  Construction is deterministic:
fields use the least irreducible modulus, unit generators and twist
parameters are minimal, so the same recipe always yields the same table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _core
from .arith import is_prime, multiplicative_order
from .classify import ViolationDiagnosis
from .fields import field
from .groups import (
    TABLE_CAP,
    FiniteGroup,
    Subgroup,
    direct_product,
    from_table,
    is_normal,
)

__all__ = [
    "WITNESS_KINDS",
    "WitnessRecipe",
    "make_cyclic",
    "make_heisenberg",
    "make_semidirect_elem_abelian",
    "make_redei",
    "make_case_group",
    "make_witness",
    "recipe_for",
]

WITNESS_KINDS = (
    "cyclic_square",
    "cyclic_pair",
    "abelian_cube",
    "semidirect_elem_abelian",
    "redei_f1",
    "case_f2",
    "case_f3",
    "case_f4",
)

_RECIPE_PARAMS = {
    "cyclic_square": ("q",),
    "cyclic_pair": ("p", "q"),
    "abelian_cube": ("p",),
    "semidirect_elem_abelian": ("p", "k", "m"),
    "redei_f1": ("p", "q", "u"),
    "case_f2": ("p", "pprime", "q"),
    "case_f3": ("p", "q"),
    "case_f4": ("p", "q"),
}


@dataclass(frozen=True)
class WitnessRecipe:
    """Declarative description of a counterexample group of order n.

    The base family is named by ``kind``; ``cofactor`` is the order of the
    cyclic completion, so base order times cofactor is the target n.
    """

    kind: str
    params: tuple[tuple[str, int], ...]
    cofactor: int

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        names = tuple(k for k, _ in self.params)
        if names != _RECIPE_PARAMS[self.kind]:
            raise ValueError(f"{self.kind} expects params {_RECIPE_PARAMS[self.kind]}")
        if self.cofactor < 1:
            raise ValueError("cofactor must be >= 1")

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def base_order(self) -> int:
        p = dict(self.params)
        if self.kind == "cyclic_square":
            return p["q"]
        if self.kind == "cyclic_pair":
            return p["p"] * p["q"]
        if self.kind == "abelian_cube":
            return p["p"] ** 3
        if self.kind == "semidirect_elem_abelian":
            return p["m"] * p["p"] ** p["k"]
        if self.kind == "redei_f1":
            v = multiplicative_order(p["q"], p["p"])
            return p["p"] ** p["u"] * p["q"] ** v
        if self.kind == "case_f2":
            return p["p"] * p["pprime"] * p["q"] ** p["p"]
        if self.kind == "case_f3":
            return p["p"] ** 2 * p["q"] ** p["p"]
        return p["p"] ** 3 * p["q"] ** p["p"]  # case_f4

    def order(self) -> int:
        return self.base_order() * self.cofactor

    def line(self) -> str:
        inner = " ".join(f"{k}={v}" for k, v in self.params)
        return f"kind={self.kind} {inner} cofactor={self.cofactor}"

    @staticmethod
    def parse(text: str) -> "WitnessRecipe":
        fields = {}
        for token in text.split():
            key, _, value = token.partition("=")
            if not _:
                raise ValueError(f"malformed recipe token {token!r}")
            fields[key] = value
        kind = fields.pop("kind", None)
        if kind not in WITNESS_KINDS:
            raise ValueError(f"missing or unknown kind in recipe {text!r}")
        cofactor = int(fields.pop("cofactor", "1"))
        params = tuple((name, int(fields.pop(name))) for name in _RECIPE_PARAMS[kind])
        if fields:
            raise ValueError(f"unexpected recipe fields {sorted(fields)}")
        return WitnessRecipe(kind, params, cofactor)


# ---------------------------------------------------------------------------
# Elementary constructors


def make_cyclic(m: int, cap: int = TABLE_CAP) -> FiniteGroup:
    """C_m as addition mod m."""
    if not 1 <= m <= cap:
        raise ValueError(f"cyclic order {m} outside 1..{cap}")
    idx = np.arange(m, dtype=np.int64)
    table = (idx[:, None] + idx[None, :]) % m
    return from_table(table, labels=[str(i) for i in range(m)], name=f"C{m}")


def make_heisenberg(p: int, cap: int = TABLE_CAP) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_p; nonabelian of order p^3.

    Element (a, b, c) is the matrix with first row (1, a, b) and second row
    (0, 1, c), encoded as a + p*b + p^2*c.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p**3
    if n > cap:
        raise ValueError(f"order {n} above cap {cap}")
    idx = np.arange(n, dtype=np.int64)
    a, b, c = idx % p, (idx // p) % p, idx // (p * p)
    a1, a2 = a[:, None], a[None, :]
    b1, b2 = b[:, None], b[None, :]
    c1, c2 = c[:, None], c[None, :]
    table = (a1 + a2) % p + p * ((b1 + b2 + a1 * c2) % p) + p * p * ((c1 + c2) % p)
    G = from_table(table, name=f"Heis({p})")
    # the two matrices from the defining computation must not commute
    m1 = 1 + p * 1 + p * p * 1  # (1, 1, 1)
    m2 = 1  # (1, 0, 0)
    assert G.mul(m1, m2) != G.mul(m2, m1), "Heisenberg table is abelian; bug"
    return G


def _digit_vectors(q: int, dim: int) -> np.ndarray:
    idx = np.arange(q**dim, dtype=np.int64)
    return np.stack([(idx // q**i) % q for i in range(dim)], axis=1)


def _vector_add_table(q: int, dim: int) -> np.ndarray:
    digits = _digit_vectors(q, dim)
    weights = q ** np.arange(dim, dtype=np.int64)
    return ((digits[:, None, :] + digits[None, :, :]) % q) @ weights


def _matrix_vector_perm(mat: np.ndarray, q: int) -> np.ndarray:
    """The permutation w -> Mw of vector indices in F_q^dim."""
    digits = _digit_vectors(q, mat.shape[0])
    weights = q ** np.arange(mat.shape[0], dtype=np.int64)
    return (digits @ mat.T % q) @ weights


def _pair_group_table(vec_count: int, add_table, perms, second_table) -> np.ndarray:
    """Cayley table for pairs (v, t) with (v,t)(w,s) = (v + act_t(w), t*s).

    ``perms[t]`` is the action of the second coordinate t on vector indices
    and ``second_table`` the group table of the second coordinate.
    """
    m = len(perms)
    n = vec_count * m
    table = np.empty((n, n), dtype=np.int64)
    for t1 in range(m):
        moved = add_table[:, perms[t1]]  # (v1, v2) -> v1 + act_{t1}(v2)
        for t2 in range(m):
            block = moved + vec_count * int(second_table[t1][t2])
            table[
                t1 * vec_count : (t1 + 1) * vec_count,
                t2 * vec_count : (t2 + 1) * vec_count,
            ] = block
    return table


def _matrix_order(mat: np.ndarray, q: int, limit: int = 10**6) -> int:
    """Multiplicative order of an invertible matrix, or 0 if above limit."""
    ident = np.eye(mat.shape[0], dtype=np.int64)
    power = mat.copy()
    for k in range(1, limit + 1):
        if np.array_equal(power, ident):
            return k
        power = power @ mat % q
    return 0


def _order_m_matrix(p: int, k: int, m: int) -> np.ndarray:
    """Deterministic k x k matrix over F_p of multiplicative order exactly m.

    When m divides p^k - 1 the matrix is multiplication by g^((p^k-1)/m) in
    GF(p^k) written on the polynomial basis; otherwise a bounded
    lexicographic search runs over all matrices.
    """
    if m < 2:
        raise ValueError("action order must be >= 2 for a nontrivial product")
    size = p**k
    if (size - 1) % m == 0:
        F = field(p, k)
        z = F.pow(F.generator(), (size - 1) // m)
        cols = []
        for j in range(k):
            image = F.mul(z, p**j)  # z * x^j
            cols.append([(image // p**i) % p for i in range(k)])
        mat = np.array(cols, dtype=np.int64).T
        assert _matrix_order(mat, p) == m
        return mat
    total = p ** (k * k)
    if total > 1 << 16:
        raise ValueError(f"no fast order-{m} matrix in GL_{k}(F_{p}); search too large")
    for code in range(total):
        entries = [(code // p**i) % p for i in range(k * k)]
        mat = np.array(entries, dtype=np.int64).reshape(k, k)
        if round(np.linalg.det(mat)) % p == 0:
            continue
        if _matrix_order(mat, p, limit=4 * m) == m:
            return mat
    raise ValueError(f"GL_{k}(F_{p}) has no element of order {m}")


def make_semidirect_elem_abelian(p: int, k: int, m: int, cap: int = TABLE_CAP) -> FiniteGroup:
    """(C_p)^k semidirect C_m, the action a matrix of order m on F_p^k.

    Elements are pairs (v, t) with (v,t)(w,s) = (v + A^t w, t+s mod m).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("need at least one copy of C_p")
    n = m * p**k
    if n > cap:
        raise ValueError(f"order {n} above cap {cap}")
    A = _order_m_matrix(p, k, m)
    vec_count = p**k
    add_table = _vector_add_table(p, k)
    power = np.eye(k, dtype=np.int64)
    perms = []
    for _ in range(m):
        perms.append(_matrix_vector_perm(power, p))
        power = power @ A % p
    second = [[(t1 + t2) % m for t2 in range(m)] for t1 in range(m)]
    table = _pair_group_table(vec_count, add_table, perms, second)
    G = from_table(table, name=f"E({p}^{k}):C{m}")
    assert not np.array_equal(G.table, G.table.T), "semidirect action collapsed"
    return G


def make_redei(p: int, q: int, u: int = 1, cap: int = TABLE_CAP) -> FiniteGroup:
    """The skew product of GF(q^v) with C_{p^u}, v = ord(q mod p) >= 2.

    Pairs (a, t) multiply as (a, t)(b, s) = (a + zeta^t * b, t+s mod p^u)
    where zeta = g^((q^v - 1)/p) for the minimal unit-group generator g, so
    the twist homomorphism has kernel of index exactly p.
    """
    if not (is_prime(p) and is_prime(q) and p != q):
        raise ValueError("need two distinct primes")
    if u < 1:
        raise ValueError("cyclic exponent must be >= 1")
    v = multiplicative_order(q, p)
    if v < 2:
        raise ValueError(f"ord({q} mod {p}) = 1; not the skew-product case")
    size = q**v
    pu = p**u
    n = size * pu
    if n > cap:
        raise ValueError(f"order {n} above cap {cap}")
    F = field(q, v)
    zeta = F.pow(F.generator(), (size - 1) // p)
    twists = []
    t = 1
    for _ in range(pu):
        twists.append(F.scale_perm(t))
        t = F.mul(t, zeta)
    kernel = sum(1 for s in range(pu) if F.pow(zeta, s) == 1)
    assert pu // kernel == p, "twist homomorphism kernel must have index p"
    second = [[(t1 + t2) % pu for t2 in range(pu)] for t1 in range(pu)]
    table = _pair_group_table(size, F.add_table.astype(np.int64), twists, second)
    return from_table(table, name=f"R({p},{q},{u})")


# ---------------------------------------------------------------------------
# The three presentation families, as monomial affine groups on F_q^p


def _least_of_order(order: int, modulus: int) -> int:
    """Minimal x >= 1 with multiplicative order ``order`` mod ``modulus``."""
    for x in range(1, modulus):
        if multiplicative_order(x, modulus) == order:
            return x
    raise ValueError(f"no element of order {order} mod {modulus}")


def _close_matrices(gens: list[np.ndarray], q: int, expected: int) -> list[np.ndarray]:
    found = {tuple(g.ravel() % q) for g in gens}
    dim = gens[0].shape[0]
    found.add(tuple(np.eye(dim, dtype=np.int64).ravel()))
    frontier = list(found)
    while frontier:
        fresh = []
        for t in frontier:
            a = np.array(t, dtype=np.int64).reshape(dim, dim)
            for g in gens:
                prod = tuple((a @ g % q).ravel())
                if prod not in found:
                    found.add(prod)
                    fresh.append(prod)
                if len(found) > expected:
                    raise AssertionError("matrix closure larger than presented order")
        frontier = fresh
    assert len(found) == expected, "matrix closure smaller than presented order"
    return [np.array(t, dtype=np.int64).reshape(dim, dim) for t in sorted(found)]


def _affine_group(q: int, matrices: list[np.ndarray], name: str, cap: int) -> tuple[FiniteGroup, dict]:
    """All pairs (v, M) over F_q^dim with (v,M)(w,N) = (v + Mw, MN).

    Returns the group and a lookup from matrix tuples to second-coordinate
    indices; element index is vec_index + vec_count * matrix_index.
    """
    dim = matrices[0].shape[0]
    vec_count = q**dim
    n = vec_count * len(matrices)
    if n > cap:
        raise ValueError(f"order {n} above cap {cap}")
    key_of = {tuple(m.ravel()): i for i, m in enumerate(matrices)}
    perms = [_matrix_vector_perm(m, q) for m in matrices]
    second = [
        [key_of[tuple((m1 @ m2 % q).ravel())] for m2 in matrices] for m1 in matrices
    ]
    add_table = _vector_add_table(q, dim)
    table = _pair_group_table(vec_count, add_table, perms, second)
    return from_table(table, name=name), key_of


def _cycle_down_matrix(p: int) -> np.ndarray:
    """e_j -> e_{j-1 mod p}; conjugation by (0, M) then cycles b_j -> b_{j+1}."""
    mat = np.zeros((p, p), dtype=np.int64)
    for j in range(p):
        mat[(j - 1) % p, j] = 1
    return mat


def _assert_no_normal_prime_subgroup(G: FiniteGroup, r: int):
    """Scan every subgroup of order r (r prime) and require non-normality."""
    seen = set()
    for g in range(G.order):
        o, x = 1, g
        while x != G.identity:
            x = G.mul(x, g)
            o += 1
        if o != r:
            continue
        members = tuple(int(t) for t in _core.closure(G.table, [g]))
        if members in seen:
            continue
        seen.add(members)
        assert not is_normal(G, Subgroup(G, members)), (
            f"{G.name} has a normal subgroup of order {r}; construction is wrong"
        )


def _check_relation(G: FiniteGroup, lhs: int, rhs: int, what: str):
    assert lhs == rhs, f"{G.name}: presentation relation {what} fails"


def make_case_group(kind: str, p: int, q: int, pprime: int | None = None,
                    cap: int = TABLE_CAP) -> FiniteGroup:
    """The non-supersolvable groups of order p*p'*q^p, p^2*q^p and p^3*q^p.

    Realized as affine groups on F_q^p: translations are the commuting
    generators of order q, and the linear parts are the coordinate-cycling
    matrix together with the diagonal twists dictated by the conjugation
    relations.  The defining relations are re-checked as table identities
    and the group is confirmed to have no normal subgroup of order q.
    """
    if kind not in ("f2", "f3", "f4"):
        raise ValueError(f"unknown case kind {kind!r}")
    if not (is_prime(p) and is_prime(q)):
        raise ValueError("parameters must be prime")
    vec_count = q**p
    cycle = _cycle_down_matrix(p)

    if kind == "f2":
        if pprime is None or not is_prime(pprime):
            raise ValueError("case f2 needs the middle prime pprime")
        if (pprime - 1) % p != 0 or (q - 1) % pprime != 0:
            raise ValueError("case f2 needs p | pprime-1 and pprime | q-1")
        rho = _least_of_order(p, pprime)
        sigma = _least_of_order(pprime, q)
        # conjugation by a' sends b_j to b_j^(sigma^(rho^-j)), so the matrix
        # of a' carries the inverse twists on the diagonal
        diag = np.zeros((p, p), dtype=np.int64)
        for j in range(p):
            e = pow(rho, -j, pprime)
            diag[j, j] = pow(pow(sigma, e, q), -1, q)
        order_linear = p * pprime
        name = f"F2({p},{pprime},{q})"
        gens = [cycle, diag]
    elif kind == "f3":
        if (q - 1) % p != 0 or (q - 1) % (p * p) == 0:
            raise ValueError("case f3 needs p | q-1 and p^2 not dividing q-1")
        rho = _least_of_order(p, q)
        twisted = np.zeros((p, p), dtype=np.int64)
        for j in range(1, p):
            twisted[j - 1, j] = 1
        twisted[p - 1, 0] = pow(rho, -1, q)
        order_linear = p * p
        name = f"F3({p},{q})"
        gens = [twisted]
    else:  # f4
        if (q - 1) % (p * p) != 0:
            raise ValueError("case f4 needs p^2 | q-1")
        rho = _least_of_order(p * p, q)
        diag = np.zeros((p, p), dtype=np.int64)
        for j in range(p):
            diag[j, j] = pow(pow(rho, 1 - j * p, q), -1, q)
        order_linear = p**3
        name = f"F4({p},{q})"
        gens = [cycle, diag]

    matrices = _close_matrices(gens, q, order_linear)
    G, key_of = _affine_group(q, matrices, name, cap)

    def elem(vec_index: int, mat: np.ndarray) -> int:
        return vec_index + vec_count * key_of[tuple(mat.ravel() % q)]

    def conj(g: int, x: int) -> int:
        return G.mul(G.mul(G.inv(g), x), g)

    ident = np.eye(p, dtype=np.int64)
    b = [elem(q**j, ident) for j in range(p)]  # b_1..b_p as translations
    for j in range(p):
        _check_relation(G, G.power(b[j], q), G.identity, "b^q = e")
        for i in range(p):
            _check_relation(G, G.mul(b[i], b[j]), G.mul(b[j], b[i]), "b_i b_j = b_j b_i")

    if kind == "f2":
        a = elem(0, cycle)
        a2 = elem(0, diag)
        _check_relation(G, G.power(a, p), G.identity, "a^p = e")
        _check_relation(G, G.power(a2, pprime), G.identity, "a'^p' = e")
        _check_relation(G, conj(a, a2), G.power(a2, rho), "a^-1 a' a = a'^rho")
        for j in range(p):
            _check_relation(G, conj(a, b[j]), b[(j + 1) % p], "a^-1 b_i a = b_{i+1}")
        _check_relation(G, conj(a2, b[0]), G.power(b[0], sigma), "a'^-1 b_1 a' = b_1^sigma")
    elif kind == "f3":
        a = elem(0, twisted)
        _check_relation(G, G.power(a, p * p), G.identity, "a^(p^2) = e")
        for j in range(p - 1):
            _check_relation(G, conj(a, b[j]), b[j + 1], "a^-1 b_i a = b_{i+1}")
        _check_relation(G, conj(a, b[p - 1]), G.power(b[0], rho), "a^-1 b_p a = b_1^rho")
    else:
        a1 = elem(0, cycle)
        a2 = elem(0, diag)
        _check_relation(G, G.power(a1, p), G.identity, "a1^p = e")
        _check_relation(G, G.power(a2, p * p), G.identity, "a2^(p^2) = e")
        _check_relation(G, conj(a1, a2), G.power(a2, 1 + p), "a1^-1 a2 a1 = a2^(1+p)")
        for j in range(p):
            _check_relation(G, conj(a1, b[j]), b[(j + 1) % p], "a1^-1 b_i a1 = b_{i+1}")
        for j in range(p):
            expo = pow(rho, 1 - j * p, q)
            _check_relation(
                G, conj(a2, b[j]), G.power(b[j], expo), "a2^-1 b_i a2 = b_i^rho^(1+(1-i)p)"
            )

    _assert_no_normal_prime_subgroup(G, q)
    return G


# ---------------------------------------------------------------------------
# Witness realization


@lru_cache(maxsize=128)
def _base_group(kind: str, params: tuple[tuple[str, int], ...]) -> FiniteGroup:
    p = dict(params)
    if kind == "cyclic_square":
        return make_cyclic(p["q"])
    if kind == "cyclic_pair":
        return make_semidirect_elem_abelian(p["q"], 1, p["p"])
    if kind == "abelian_cube":
        return make_heisenberg(p["p"])
    if kind == "semidirect_elem_abelian":
        return make_semidirect_elem_abelian(p["p"], p["k"], p["m"])
    if kind == "redei_f1":
        return make_redei(p["p"], p["q"], p["u"])
    if kind == "case_f2":
        return make_case_group("f2", p["p"], p["q"], pprime=p["pprime"])
    if kind == "case_f3":
        return make_case_group("f3", p["p"], p["q"])
    return make_case_group("f4", p["p"], p["q"])


def make_witness(recipe: WitnessRecipe, cap: int = TABLE_CAP) -> FiniteGroup:
    """Realize a recipe: the base family times a cyclic cofactor."""
    total = recipe.order()
    if total > cap:
        raise ValueError(f"witness order {total} above cap {cap}")
    base = _base_group(recipe.kind, recipe.params)
    if recipe.cofactor == 1:
        result = base
    else:
        result = direct_product(base, make_cyclic(recipe.cofactor), cap=cap)
    assert result.order == total
    return result


def recipe_for(n: int, diag: ViolationDiagnosis) -> WitnessRecipe:
    """Translate a violation diagnosis at n into a buildable recipe."""
    d = dict(diag.params)
    if diag.kind == "square_factor":
        kind, params = "cyclic_square", (("q", d["q"]),)
    elif diag.kind == "cube_factor":
        kind, params = "abelian_cube", (("p", d["p"]),)
    elif diag.kind == "divisibility_pair" and diag.property == "cyclic":
        kind, params = "cyclic_pair", (("p", d["p"]), ("q", d["q"]))
    elif diag.kind in ("divisibility_pair", "tower_psi"):
        # p | q^k - 1: the acting factor has order p on (C_q)^k
        kind = "semidirect_elem_abelian"
        params = (("p", d["q"]), ("k", d["k"]), ("m", d["p"]))
    elif diag.kind == "ss_f1":
        kind, params = "redei_f1", (("p", d["p"]), ("q", d["q"]), ("u", 1))
    elif diag.kind == "ss_f2":
        kind = "case_f2"
        params = (("p", d["p"]), ("pprime", d["pprime"]), ("q", d["q"]))
    elif diag.kind == "ss_f3":
        kind, params = "case_f3", (("p", d["p"]), ("q", d["q"]))
    elif diag.kind == "ss_f4":
        kind, params = "case_f4", (("p", d["p"]), ("q", d["q"]))
    else:
        raise ValueError(f"no witness family for diagnosis kind {diag.kind!r}")
    probe = WitnessRecipe(kind, params, 1)
    base = probe.base_order()
    if n % base != 0:
        raise ValueError(f"diagnosis {diag} does not divide n={n}")
    return WitnessRecipe(kind, params, n // base)

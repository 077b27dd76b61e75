import numpy as np
import pytest

from groupnum.groups import (
    NoIdentityError,
    NotAssociativeError,
    Subgroup,
    TableError,
    center,
    centralizer,
    derived_series,
    direct_product,
    dumps,
    from_permutations,
    from_table,
    is_normal,
    loads,
    normalizer,
    quotient_group,
    subgroup_closure,
    upper_central_series,
)
from groupnum.construct import make_cyclic


def z_table(m):
    idx = np.arange(m)
    return (idx[:, None] + idx[None, :]) % m


def test_from_table_trivial():
    G = from_table([[0]])
    assert G.order == 1 and G.identity == 0


def test_from_table_z3():
    G = from_table(z_table(3))
    assert G.order == 3
    assert G.mul(1, 2) == 0
    assert G.inv(1) == 2


def test_from_table_rejects_broken_associativity():
    t = z_table(3)
    t[1][2] = 1  # any associativity violation must be rejected
    with pytest.raises(TableError):
        from_table(t)
    # an order-5 loop: identity and two-sided inverses exist, but the
    # product is not associative, so the error is specifically that one
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociativeError):
        from_table(loop)


def test_from_table_rejects_no_identity():
    with pytest.raises(NoIdentityError):
        from_table([[0, 0], [0, 0]])


def test_from_table_rejects_missing_inverse():
    from groupnum.groups import NoInverseError

    with pytest.raises(NoInverseError):
        from_table([[0, 1, 2], [1, 1, 1], [2, 1, 0]])


def test_from_table_rejects_out_of_range():
    with pytest.raises(TableError):
        from_table([[0, 2], [2, 0]])


def test_from_table_cap():
    with pytest.raises(TableError):
        from_table(z_table(600))
    assert from_table(z_table(600), cap=1024).order == 600


def test_from_permutations_c3():
    G = from_permutations([(1, 2, 0)])
    assert G.order == 3


def test_from_permutations_s3_and_a4():
    S3 = from_permutations([(1, 2, 0), (1, 0, 2)])
    assert S3.order == 6
    A4 = from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)])
    assert A4.order == 12


def test_from_permutations_rejects_non_bijection():
    with pytest.raises(ValueError):
        from_permutations([(0, 0, 1)])


def test_from_permutations_cap():
    with pytest.raises(ValueError):
        from_permutations([(1, 2, 3, 4, 0), (0, 1, 3, 4, 2)], cap=30)


def test_subgroup_closure_examples(s3):
    assert subgroup_closure(s3, [s3.identity]).order == 1
    assert subgroup_closure(s3, []).order == 1
    transpositions = [g for g in range(6) if g != s3.identity and s3.mul(g, g) == s3.identity]
    assert subgroup_closure(s3, transpositions[:1]).order == 2
    assert subgroup_closure(s3, transpositions[:2]).order == 6


def test_subgroup_validation(s3):
    with pytest.raises(ValueError):
        Subgroup(s3, [1, 2])  # not closed / missing identity


def test_is_normal(s3):
    a3 = subgroup_closure(s3, [g for g in range(6) if _order(s3, g) == 3][:1])
    assert a3.order == 3 and is_normal(s3, a3)
    t = [g for g in range(6) if _order(s3, g) == 2][0]
    assert not is_normal(s3, subgroup_closure(s3, [t]))


def test_normal_in_abelian():
    G = make_cyclic(12)
    for g in range(12):
        assert is_normal(G, subgroup_closure(G, [g]))


def _order(G, g):
    k, x = 1, g
    while x != G.identity:
        x = G.mul(x, g)
        k += 1
    return k


def test_quotient_examples(s3):
    a3 = [g for g in range(6) if _order(s3, g) in (1, 3)]
    q = quotient_group(s3, Subgroup(s3, a3))
    assert q.order == 2
    # G / trivial is G up to relabeling
    q2 = quotient_group(s3, s3.trivial_subgroup())
    assert q2.order == 6 and np.array_equal(q2.table, s3.table)
    c6 = make_cyclic(6)
    c2 = subgroup_closure(c6, [3])
    assert quotient_group(c6, c2).order == 3
    assert _order(quotient_group(c6, c2), 1) == 3  # cyclic of order 3


def test_quotient_rejects_non_normal(s3):
    t = [g for g in range(6) if _order(s3, g) == 2][0]
    with pytest.raises(ValueError):
        quotient_group(s3, subgroup_closure(s3, [t]))


def test_quotient_projection_is_homomorphism(s3):
    a3 = Subgroup(s3, [g for g in range(6) if _order(s3, g) in (1, 3)])
    q = quotient_group(s3, a3)
    proj = q.coset_of
    for x in range(6):
        for y in range(6):
            assert proj[s3.mul(x, y)] == q.mul(int(proj[x]), int(proj[y]))


def test_center_examples(s3, heis3):
    assert center(s3).order == 1
    assert center(heis3).order == 3
    assert center(make_cyclic(8)).order == 8


def test_centralizer_and_normalizer(s3, a4):
    t = [g for g in range(6) if _order(s3, g) == 2][0]
    cz = centralizer(s3, [t])
    assert cz.order == 2
    p3 = subgroup_closure(a4, [[g for g in range(12) if _order(a4, g) == 3][0]])
    assert normalizer(a4, p3).order == 3  # self-normalizing Sylow-3


def test_derived_series(s3, a5):
    assert [h.order for h in derived_series(s3)] == [6, 3, 1]
    assert [h.order for h in derived_series(make_cyclic(10))] == [10, 1]
    assert [h.order for h in derived_series(a5)] == [60, 60]


def test_derived_terms_normal_in_whole(s3, a4, heis3):
    for G in (s3, a4, heis3):
        for term in derived_series(G):
            assert is_normal(G, term)


def test_upper_central_series(s3, heis3):
    assert [z.order for z in upper_central_series(make_cyclic(9))] == [1, 9]
    assert [z.order for z in upper_central_series(heis3)] == [1, 3, 27]
    assert [z.order for z in upper_central_series(s3)] == [1, 1]


def test_upper_central_series_terms_normal_and_monotone(a4, heis3):
    for G in (a4, heis3):
        series = upper_central_series(G)
        for z in series:
            assert is_normal(G, z)
        for small, big in zip(series, series[1:]):
            assert small.order <= big.order


def test_direct_product():
    c2, c3 = make_cyclic(2), make_cyclic(3)
    c6 = direct_product(c2, c3)
    assert c6.order == 6
    assert max(_order(c6, g) for g in range(6)) == 6  # cyclic, coprime parts
    klein = direct_product(c2, make_cyclic(2))
    assert all(_order(klein, g) in (1, 2) for g in range(4))
    g1 = direct_product(make_cyclic(5), make_cyclic(1))
    assert g1.order == 5
    with pytest.raises(TableError):
        direct_product(make_cyclic(30), make_cyclic(30))


def test_direct_product_center_splits(s3, heis3):
    prod = direct_product(s3, heis3)
    zc = center(prod)
    expected = {
        int(i) * heis3.order + int(j)
        for i in center(s3).members
        for j in center(heis3).members
    }
    assert set(int(x) for x in zc.members) == expected


def test_lagrange_for_generated_subgroups(a4, heis2):
    for G in (a4, heis2):
        for g in range(G.order):
            assert G.order % subgroup_closure(G, [g]).order == 0


def test_serialization_round_trip(s3, heis2):
    for G in (s3, heis2, make_cyclic(12)):
        text = dumps(G)
        H = loads(text)
        assert H.order == G.order
        assert np.array_equal(H.table, G.table)
        assert H.identity == G.identity


def test_loads_rejects_malformed():
    with pytest.raises(TableError):
        loads("2\n0 1\n1 0\n")  # missing identity line
    with pytest.raises(TableError):
        loads("2\n0 1\n1 0\n1\n")  # wrong declared identity


from hypothesis import given, settings
from hypothesis import strategies as st


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=1, max_size=3))
def test_random_cyclic_products_behave(parts):
    from math import lcm

    total = 1
    for d in parts:
        total *= d
    if total > 200:
        return
    G = make_cyclic(parts[0])
    for d in parts[1:]:
        G = direct_product(G, make_cyclic(d))
    assert G.order == total
    assert center(G).order == total  # abelian
    assert [h.order for h in derived_series(G)] == ([total, 1] if total > 1 else [1])
    exponent = lcm(*parts)
    for g in range(G.order):
        assert G.power(g, exponent) == G.identity
    # quotient by a random cyclic subgroup splits the order
    H = subgroup_closure(G, [G.order - 1])
    q = quotient_group(G, H)
    assert q.order * H.order == G.order


def test_subgroup_as_group(s3):
    a3 = Subgroup(s3, [g for g in range(6) if _order(s3, g) in (1, 3)])
    H = a3.as_group()
    assert H.order == 3
    assert _order(H, 1) == 3

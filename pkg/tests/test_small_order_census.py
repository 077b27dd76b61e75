"""Exhaustive check of all five predicates against the full catalog of
groups of order <= 15 (one representative per isomorphism class).

For these orders the classification is classical and complete, so
"every group of order n has P" can be tested literally.
"""

import numpy as np
import pytest

from groupnum.analysis import GROUP_TESTS, is_abelian_group
from groupnum.classify import PROPERTIES, abelian_group_count, property_flags
from groupnum.arith import factorize
from groupnum.construct import make_cyclic, make_heisenberg, make_semidirect_elem_abelian
from groupnum.groups import direct_product, from_permutations, from_table


def dihedral(n):
    """D_n of order 2n: pairs (i, j) with (i1,j1)(i2,j2) = (i1 + (-1)^j1 i2, j1^j2)."""
    size = 2 * n
    table = np.empty((size, size), dtype=np.int32)
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    i = (i1 + (i2 if j1 == 0 else -i2)) % n
                    table[i1 * 2 + j1, i2 * 2 + j2] = i * 2 + (j1 ^ j2)
    return from_table(table, name=f"D{n}")


def dicyclic(n):
    """Dic_n of order 4n: <a, b | a^(2n), b^2 = a^n, b a b^-1 = a^-1>."""
    size = 4 * n
    table = np.empty((size, size), dtype=np.int32)
    for i1 in range(2 * n):
        for j1 in range(2):
            for i2 in range(2 * n):
                for j2 in range(2):
                    if j1 == 0:
                        i, j = (i1 + i2) % (2 * n), j2
                    elif j2 == 0:
                        i, j = (i1 - i2) % (2 * n), 1
                    else:
                        i, j = (i1 - i2 + n) % (2 * n), 0
                    table[i1 * 2 + j1, i2 * 2 + j2] = i * 2 + j
    return from_table(table, name=f"Dic{n}")


def modular27():
    """C9 : C3 with b^-1 a b = a^4 (the exponent-9 extraspecial group)."""
    table = np.empty((27, 27), dtype=np.int32)
    for i1 in range(9):
        for j1 in range(3):
            for i2 in range(9):
                for j2 in range(3):
                    i = (i1 + pow(4, j1, 9) * i2) % 9
                    table[i1 * 3 + j1, i2 * 3 + j2] = i * 3 + (j1 + j2) % 3
    return from_table(table, name="M27")


def catalog():
    """Every group of order <= 15, one per isomorphism class (classical)."""
    c = make_cyclic
    s3 = from_permutations([(1, 2, 0), (1, 0, 2)], name="S3")
    a4 = from_permutations([(1, 2, 0, 3), (0, 2, 3, 1)], name="A4")
    return {
        1: [c(1)],
        2: [c(2)],
        3: [c(3)],
        4: [c(4), direct_product(c(2), c(2))],
        5: [c(5)],
        6: [c(6), s3],
        7: [c(7)],
        8: [
            c(8),
            direct_product(c(4), c(2)),
            direct_product(c(2), direct_product(c(2), c(2))),
            make_heisenberg(2),  # D4
            dicyclic(2),  # Q8
        ],
        9: [c(9), direct_product(c(3), c(3))],
        10: [c(10), dihedral(5)],
        11: [c(11)],
        12: [
            c(12),
            direct_product(c(6), c(2)),
            a4,
            dihedral(6),
            dicyclic(3),
        ],
        13: [c(13)],
        14: [c(14), dihedral(7)],
        15: [c(15)],
    }


def catalog_beyond_15():
    """Complete catalogs for a few larger orders with classical lists."""
    c = make_cyclic
    s3 = from_permutations([(1, 2, 0), (1, 0, 2)], name="S3")
    return {
        18: [
            c(18),
            direct_product(c(6), c(3)),
            dihedral(9),
            direct_product(s3, c(3)),
            make_semidirect_elem_abelian(3, 2, 2),  # (C3 x C3) : C2, inversion
        ],
        20: [
            c(20),
            direct_product(c(10), c(2)),
            dihedral(10),
            dicyclic(5),
            make_semidirect_elem_abelian(5, 1, 4),  # Frobenius F20
        ],
        21: [c(21), make_semidirect_elem_abelian(7, 1, 3)],
        27: [
            c(27),
            direct_product(c(9), c(3)),
            direct_product(c(3), direct_product(c(3), c(3))),
            make_heisenberg(3),
            modular27(),
        ],
    }


def test_quaternion_group_shape():
    q8 = dicyclic(2)
    assert q8.order == 8 and not is_abelian_group(q8)
    from groupnum.analysis import element_order

    orders = sorted(element_order(q8, g) for g in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]  # unique involution


def test_dihedral_shape():
    d6 = dihedral(6)
    assert d6.order == 12 and not is_abelian_group(d6)
    q8 = dicyclic(3)
    assert q8.order == 12


def test_predicates_match_the_full_catalog():
    groups_of = {**catalog(), **catalog_beyond_15()}
    for n, groups in groups_of.items():
        assert all(G.order == n for G in groups)
        flags = dict(zip(PROPERTIES, property_flags(factorize(n))))
        for prop in PROPERTIES:
            truth = all(GROUP_TESTS[prop](G) for G in groups)
            assert flags[prop] == truth, (n, prop, flags[prop], truth)


def test_catalog_members_pairwise_distinguishable():
    # lightweight isomorphism-class sanity: within one order the groups
    # must differ in some invariant profile (element orders, abelianness)
    from groupnum.analysis import element_order
    from groupnum.groups import center

    for n, groups in {**catalog(), **catalog_beyond_15()}.items():
        profiles = [
            (
                tuple(sorted(element_order(G, g) for g in range(G.order))),
                is_abelian_group(G),
                center(G).order,
            )
            for G in groups
        ]
        assert len(set(profiles)) == len(profiles), f"duplicate class at order {n}"


def test_abelian_count_matches_the_catalog():
    groups_of = catalog()
    for n, groups in groups_of.items():
        flags = dict(zip(PROPERTIES, property_flags(factorize(n))))
        if flags["abelian"]:
            assert abelian_group_count(n) == len(groups), n


def test_cyclic_numbers_have_one_group():
    groups_of = catalog()
    for n, groups in groups_of.items():
        flags = dict(zip(PROPERTIES, property_flags(factorize(n))))
        if flags["cyclic"]:
            assert len(groups) == 1, n

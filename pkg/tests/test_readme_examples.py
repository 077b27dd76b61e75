"""The README's library walkthrough must keep working verbatim."""

import groupnum as gn


def test_readme_walkthrough():
    assert gn.is_supersolvable_number(294) is False
    diags = gn.diagnose(294, "supersolvable")
    assert [d.kind for d in diags] == ["ss_f2"]
    assert dict(diags[0].params) == {"p": 2, "pprime": 3, "q": 7}

    recipe = gn.recipe_for(294, diags[0])
    W = gn.make_witness(recipe)
    assert W.order == 294
    assert gn.is_supersolvable_group(W) is False
    assert gn.has_ordered_sylow_tower(W) is True

    A5 = gn.from_permutations([(1, 2, 3, 4, 0), (0, 1, 3, 4, 2)])
    assert gn.hall_subgroup(A5, {2, 3}).order == 12
    assert gn.hall_subgroup(A5, {2, 5}) is None

    S3 = gn.from_permutations([(1, 2, 0), (1, 0, 2)])
    V = gn.transfer(S3, gn.sylow_subgroup(S3, 3))
    assert V.image_order() == 1

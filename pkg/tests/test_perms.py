import random
from itertools import permutations

import pytest

from steinerkit.designs import construct_boolean, fano_plane
from steinerkit.errors import CapacityError, NotAutomorphismError
from steinerkit.perms import (
    Permutation,
    PermutationGroup,
    group_from_json_dict,
    group_to_json_dict,
    homogeneity,
    induced_block_action,
    parse_cycles,
)


def closure(gens, degree):
    """Naive closure, used as an oracle for small groups."""
    elements = {Permutation.identity(degree)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = e * g
                if h not in elements:
                    elements.add(h)
                    nxt.append(h)
        frontier = nxt
    return elements


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 2])


def test_composition_is_left_to_right():
    p = parse_cycles("(0 1)", 3)
    q = parse_cycles("(1 2)", 3)
    assert (p * q)(0) == q(p(0)) == 2
    assert (q * p)(0) == 1


def test_inverse_pow_order():
    p = parse_cycles("(0 1 2 3 4)(5 6)", 7)
    assert (p * p.inverse()).is_identity()
    assert p**10 == (p**2) ** 5
    assert p.order() == 10
    assert p ** (-1) == p.inverse()


def test_cycle_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        images = list(range(9))
        rng.shuffle(images)
        p = Permutation(images)
        assert parse_cycles(p.cycle_string(), 9) == p


def test_parse_cycles_variants():
    assert parse_cycles("(0 1 2)(3 4)") == parse_cycles("(0,1,2) (3,4)")
    assert parse_cycles("()", 4).is_identity()
    with pytest.raises(ValueError):
        parse_cycles("(0 1) junk")
    with pytest.raises(ValueError):
        parse_cycles("(0 0 1)")


@pytest.mark.parametrize(
    "cycles, degree, order",
    [
        (["(0 1)", "(0 1 2 3)"], 4, 24),  # S4
        (["(0 1 2)", "(0 1 2 3 4)"], 5, 60),  # A5
        (["(0 1 2 3 4 5 6)"], 7, 7),  # C7
        (["(0 1 2 3)", "(1 3)"], 4, 8),  # dihedral of the square
    ],
)
def test_chain_orders(cycles, degree, order):
    group = PermutationGroup([parse_cycles(c, degree) for c in cycles])
    assert group.order == order
    assert group.order == len(closure(group.generators, degree))


def test_trivial_group():
    group = PermutationGroup.trivial(10)
    assert group.order == 1
    assert Permutation.identity(10) in group
    assert parse_cycles("(0 1)", 10) not in group


def test_membership_exact():
    s4 = PermutationGroup([parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)])
    for images in permutations(range(4)):
        assert Permutation(images) in s4
    a4 = PermutationGroup([parse_cycles("(0 1 2)", 4), parse_cycles("(1 2 3)", 4)])
    assert a4.order == 12
    assert parse_cycles("(0 1)", 4) not in a4
    assert parse_cycles("(0 1)(2 3)", 4) in a4


def test_random_generator_words_are_members():
    group = PermutationGroup([parse_cycles("(0 1 2)", 7), parse_cycles("(2 3 4 5 6)", 7)])
    rng = random.Random(11)
    gens = list(group.generators) + [g.inverse() for g in group.generators]
    for _ in range(100):
        word = Permutation.identity(7)
        for _ in range(rng.randrange(1, 12)):
            word = word * rng.choice(gens)
        assert word in group


def test_elements_enumeration_matches_closure():
    group = PermutationGroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(3 4)", 5)])
    listed = list(group.elements())
    assert len(listed) == group.order == len(set(listed))
    assert set(listed) == closure(group.generators, 5)


def test_orbits_and_point_orbits():
    group = PermutationGroup([parse_cycles("(0 1 2)", 6), parse_cycles("(3 4)", 6)])
    assert group.orbit(0) == (0, 1, 2)
    assert group.point_orbits() == [(0, 1, 2), (3, 4), (5,)]
    assert not group.is_transitive()


def test_orbit_stabilizer_identity():
    groups = [
        PermutationGroup([parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)]),
        PermutationGroup([parse_cycles("(0 1 2)", 7), parse_cycles("(0 1 2 3 4 5 6)", 7)]),
    ]
    rng = random.Random(3)
    for group in groups:
        for _ in range(10):
            x = rng.randrange(group.degree)
            stab = group.stabilizer_point(x)
            assert group.order == stab.order * len(group.orbit(x))


def test_pointwise_and_setwise_stabilizers_vs_bruteforce():
    s5 = PermutationGroup([parse_cycles("(0 1)", 5), parse_cycles("(0 1 2 3 4)", 5)])
    all_elements = closure(s5.generators, 5)
    block = (1, 3)
    expected_setwise = {g for g in all_elements if g.apply_set(block) == block}
    setwise = s5.stabilizer_setwise(block)
    assert setwise.order == len(expected_setwise) == 12
    assert set(setwise.elements()) == expected_setwise

    expected_pair = {g for g in all_elements if g(1) == 1 and g(3) == 3}
    pair = s5.stabilizer_pair(1, 3)
    assert pair.order == len(expected_pair) == 6
    assert set(pair.elements()) == expected_pair


def test_stabilizer_point_in_block():
    s5 = PermutationGroup([parse_cycles("(0 1)", 5), parse_cycles("(0 1 2 3 4)", 5)])
    sub = s5.stabilizer_point_in_block(1, (1, 3))
    # fix 1, fix {1,3} setwise => fix 3 too; S_3 remains on {0,2,4}
    assert sub.order == 6
    with pytest.raises(ValueError):
        s5.stabilizer_point_in_block(0, (1, 3))


def test_stabilizer_of_fixed_point_is_whole_group():
    group = PermutationGroup([parse_cycles("(1 2 3)", 5), parse_cycles("(2 3 4)", 5)])
    assert group.stabilizer_point(0).order == group.order


def test_subset_orbits_c7():
    c7 = PermutationGroup([parse_cycles("(0 1 2 3 4 5 6)", 7)])
    orbits2 = c7.subset_orbits(2)
    assert [size for _, size in orbits2] == [7, 7, 7]
    orbits3 = c7.subset_orbits(3)
    assert len(orbits3) == 5 and all(size == 7 for _, size in orbits3)
    for rep, _ in orbits3:
        assert rep == min(_orbit_of(c7, rep))


def _orbit_of(group, subset):
    orbit = {subset}
    queue = [subset]
    for sub in queue:
        for g in group.generators:
            image = g.apply_set(sub)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def test_subset_orbits_trivial_group():
    group = PermutationGroup.trivial(4)
    orbits = group.subset_orbits(2)
    assert len(orbits) == 6 and all(size == 1 for _, size in orbits)


def test_subset_orbit_sizes_divide_group_order():
    group = PermutationGroup([parse_cycles("(0 1 2)", 6), parse_cycles("(0 1)(2 3)(4 5)", 6)])
    for m in (1, 2, 3):
        for _, size in group.subset_orbits(m):
            assert group.order % size == 0


def test_homogeneity_symmetric_group():
    s6 = PermutationGroup([parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)])
    report = homogeneity(s6, 6)
    assert report.transitivity_degree == 6
    assert report.homogeneity_degree == 6


def test_homogeneity_monotone():
    groups = [
        PermutationGroup([parse_cycles("(0 1 2 3 4 5 6)", 7)]),
        PermutationGroup([parse_cycles("(0 1 2)", 6), parse_cycles("(0 1 2 3 4 5)", 6)]),
        PermutationGroup([parse_cycles("(0 1 2)", 7), parse_cycles("(0 1 2 3 4 5 6)", 7)]),
    ]
    for group in groups:
        report = homogeneity(group, 3)
        for t in range(1, report.transitivity_degree + 1):
            assert group.is_transitive_on_tuples(t)
            assert group.is_homogeneous(t)
        assert report.homogeneity_degree >= report.transitivity_degree


def test_capacity_errors():
    group = PermutationGroup([parse_cycles("(0 1 2 3 4 5 6 7 8 9)", 10)])
    with pytest.raises(CapacityError):
        group.subset_orbits(5, cap=10)
    with pytest.raises(CapacityError):
        homogeneity(group, 5, cap=10)
    with pytest.raises(CapacityError):
        list(group.elements(max_elements=5))


def test_induced_block_action_fano():
    fano = fano_plane()
    c7 = PermutationGroup([parse_cycles("(0 1 2 3 4 5 6)", 7)])
    report = induced_block_action(c7, fano)
    assert report.is_block_transitive
    assert report.is_point_transitive
    assert report.block_orbit_count == 1

    identity = PermutationGroup.trivial(7)
    report = induced_block_action(identity, fano)
    assert report.block_orbit_count == 7
    assert not report.is_block_transitive


def test_induced_block_action_boolean():
    from steinerkit.catalog import affine_group

    design = construct_boolean(3)
    agl = affine_group("AGL(3,2)")
    report = induced_block_action(agl, design)
    assert report.is_block_transitive and report.is_flag_transitive and report.is_point_transitive


def test_induced_block_action_rejects_non_automorphism():
    fano = fano_plane()
    bad = PermutationGroup([parse_cycles("(0 1)", 7)])
    with pytest.raises(NotAutomorphismError) as info:
        induced_block_action(bad, fano)
    assert info.value.block is not None


def test_group_json_roundtrip():
    group = PermutationGroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(3 4)", 5)])
    data = group_to_json_dict(group)
    again = group_from_json_dict(data)
    assert again.order == group.order and again.degree == group.degree


def test_group_json_cycle_text_form():
    data = {"degree": 5, "generators": ["(0 1 2)", [1, 0, 2, 4, 3]]}
    group = group_from_json_dict(data)
    assert group.order == PermutationGroup(
        [parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(3 4)", 5)]
    ).order


def test_group_json_errors():
    with pytest.raises(ValueError):
        group_from_json_dict({"degree": 5})
    with pytest.raises(ValueError):
        group_from_json_dict({"degree": 5, "generators": [[0, 1]]})
    with pytest.raises(ValueError):
        group_from_json_dict({"degree": 5, "generators": [[0, 0, 1, 2, 3]]})


def test_base_prefix_kept():
    s4 = PermutationGroup(
        [parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)], base_prefix=(2, 0)
    )
    assert s4.order == 24
    assert s4.base[:2] == [2, 0]


def test_chain_against_closure_random_battery():
    # random generator sets on up to 7 points; the chain order, membership
    # test, and stabilizers must agree with the naive closure
    rng = random.Random(1234)
    for trial in range(30):
        degree = rng.randrange(3, 8)
        gens = []
        for _ in range(rng.randrange(1, 4)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(images))
        group = PermutationGroup(gens, degree=degree)
        elements = closure(group.generators, degree)
        assert group.order == len(elements), (trial, degree)
        sample = rng.sample(sorted(elements, key=lambda p: p.images), min(6, len(elements)))
        for p in sample:
            assert p in group
        images = list(range(degree))
        rng.shuffle(images)
        outsider = Permutation(images)
        assert (outsider in group) == (outsider in elements)

        x = rng.randrange(degree)
        expected_stab = sum(1 for p in elements if p(x) == x)
        assert group.stabilizer_point(x).order == expected_stab

        size = rng.randrange(1, degree)
        block = tuple(sorted(rng.sample(range(degree), size)))
        expected_setwise = sum(1 for p in elements if p.apply_set(block) == block)
        assert group.stabilizer_setwise(block).order == expected_setwise, (trial, block)

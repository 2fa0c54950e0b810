import random
from math import comb

import pytest

from steinerkit.catalog import projective_group, symmetric_group
from steinerkit.designs import verify
from steinerkit.kramer_mesner import (
    Selection,
    build_orbit_matrix,
    expand_selection,
    solve,
    solve_brute_force,
    search_design,
)
from steinerkit.perms import Permutation, PermutationGroup, induced_block_action


def cyclic_group(n):
    return PermutationGroup([Permutation([(i + 1) % n for i in range(n)])])


def brute_force_reference(matrix, lam):
    """Test-local exhaustive reference, independent of the library's."""
    ncols = len(matrix.col_reps)
    nrows = len(matrix.entries)
    hits = []
    for mask in range(1 << ncols):
        cols = tuple(j for j in range(ncols) if (mask >> j) & 1)
        if all(sum(matrix.entries[i][j] for j in cols) == lam for i in range(nrows)):
            hits.append(cols)
    return sorted(hits)


def test_c7_matrix_shape_and_row_sums():
    matrix = build_orbit_matrix(cyclic_group(7), 2, 3, group_name="C7")
    assert len(matrix.row_reps) == 3
    assert len(matrix.col_reps) == 5
    assert all(sum(row) == comb(5, 1) for row in matrix.entries)
    assert all(size == 7 for size in matrix.col_sizes)


def test_t_equals_k_is_orbit_identity_matrix():
    group = cyclic_group(7)
    matrix = build_orbit_matrix(group, 3, 3)
    assert matrix.row_reps == matrix.col_reps
    for i, row in enumerate(matrix.entries):
        assert all(value == (1 if i == j else 0) for j, value in enumerate(row))


def test_psl211_matrix_row_sums():
    matrix = build_orbit_matrix(projective_group("PSL", 11), 5, 6)
    assert all(sum(row) == comb(7, 1) for row in matrix.entries)
    assert sum(matrix.col_sizes) == comb(12, 6)


def test_row_well_defined_under_alternate_representatives():
    group = projective_group("PSL", 7)
    matrix = build_orbit_matrix(group, 2, 3)
    _, _, col_index = group.subset_orbit_partition(3)
    reps, _, row_index = group.subset_orbit_partition(2)
    rng = random.Random(41)
    all_pairs = [
        (i, subset)
        for subset, i in row_index.items()
    ]
    for _ in range(100):
        i, subset = rng.choice(all_pairs)
        row = [0] * len(matrix.col_reps)
        rest = [p for p in range(group.degree) if p not in subset]
        from itertools import combinations

        for extra in combinations(rest, 1):
            superset = tuple(sorted(subset + extra))
            row[col_index[superset]] += 1
        assert tuple(row) == matrix.entries[i]


def test_solver_finds_fano_difference_set():
    matrix = build_orbit_matrix(cyclic_group(7), 2, 3, group_name="C7")
    selections = solve(matrix, 1)
    rep_sets = [tuple(matrix.col_reps[j] for j in s.columns) for s in selections]
    assert ((0, 1, 3),) in rep_sets
    for selection in selections:
        assert selection.block_count == 7


def test_solver_lambda_zero():
    matrix = build_orbit_matrix(cyclic_group(7), 2, 3)
    assert solve(matrix, 0) == [Selection(columns=(), block_count=0)]


def test_solver_matches_brute_force():
    cases = [
        (build_orbit_matrix(cyclic_group(7), 2, 3), 1),
        (build_orbit_matrix(cyclic_group(7), 2, 3), 2),
        (build_orbit_matrix(cyclic_group(7), 2, 4), 2),
        (build_orbit_matrix(PermutationGroup.trivial(5), 1, 2), 1),
        (build_orbit_matrix(cyclic_group(9), 2, 3), 1),
    ]
    for matrix, lam in cases:
        assert len(matrix.col_reps) <= 12
        got = sorted(s.columns for s in solve(matrix, lam))
        expected = brute_force_reference(matrix, lam)
        assert got == expected
        assert got == sorted(s.columns for s in solve_brute_force(matrix, lam))


def test_solver_limit():
    matrix = build_orbit_matrix(cyclic_group(7), 2, 3)
    assert len(solve(matrix, 1, limit=1)) == 1


def test_expand_and_verify_lambda2():
    group = cyclic_group(7)
    matrix = build_orbit_matrix(group, 2, 3, group_name="C7")
    for selection in solve(matrix, 2):
        design = expand_selection(group, matrix, selection, 2)
        assert verify(design).covered_lambda == 2


def test_search_design_fano():
    designs = search_design(cyclic_group(7), 2, 3, 1, group_name="C7")
    assert designs
    for design in designs:
        assert design.b == 7
        assert verify(design).covered_lambda == 1


def test_search_design_small_witt():
    group = projective_group("PSL", 11)
    designs = search_design(group, 5, 6, 1, group_name="PSL(2,11)")
    assert designs
    for design in designs:
        assert design.b == 132
        assert verify(design).covered_lambda == 1
        action = induced_block_action(group, design)
        assert action.is_block_transitive
        assert group.order // design.b == 5


def test_search_design_outputs_pass_admissibility():
    from steinerkit.admissibility import check

    found = search_design(cyclic_group(7), 2, 3, 1) + search_design(
        projective_group("PSL", 11), 5, 6, 1, limit=1
    )
    for design in found:
        assert check(design.params).admissible


def test_search_design_infeasible_returns_empty():
    # the full symmetric group has a single k-orbit, whose row entry exceeds 1
    assert search_design(symmetric_group(5), 2, 3, 1) == []


def test_search_design_parameters_validated():
    with pytest.raises(ValueError):
        build_orbit_matrix(cyclic_group(7), 4, 3)
    with pytest.raises(ValueError):
        solve(build_orbit_matrix(cyclic_group(7), 2, 3), -1)


def test_matrix_json_dump_shape():
    matrix = build_orbit_matrix(cyclic_group(7), 2, 3, group_name="C7")
    data = matrix.to_json_dict()
    assert data["t"] == 2 and data["k"] == 3
    assert data["col_sizes"] == [7, 7, 7, 7, 7]
    assert len(data["entries"]) == 3

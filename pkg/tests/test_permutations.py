"""Permutation groups, centralizers, multiplication tables, regular actions.

The centralizer algorithm is validated against a brute-force oracle that
scans every permutation of six points (720 candidates) — small enough to
enumerate, large enough to be an honest independent check.
"""

from itertools import permutations as all_perms

import pytest

from tonnetz.permutations import (
    GroupTableError,
    PermGroup,
    Permutation,
    centralizer_semiregular,
    centralizer_within,
    commutes,
    cyclic_table,
    dihedral_table,
    from_elements,
    generate,
    is_dihedral_24,
    is_simply_transitive,
    orbit,
    regular_representations,
    stabilizer,
    symmetric_table,
    validate_group_table,
)

# A non-associative loop of order 5: it has an identity (0), two-sided
# inverses (every element is self-inverse), and is a Latin square, but
# (1*2)*2 = 4 while 1*(2*2) = 1.
NONASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def brute_force_centralizer(group: PermGroup) -> set:
    """Scan the whole symmetric group; only usable at tiny degree."""
    result = set()
    for images in all_perms(range(group.degree)):
        candidate = Permutation(images)
        if all(commutes(candidate, g) for g in group):
            result.add(candidate)
    return result


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 2))


def test_composition_is_right_to_left():
    a = Permutation((1, 0, 2))  # swap 0,1
    b = Permutation((0, 2, 1))  # swap 1,2
    assert (a * b).images == (1, 2, 0)  # b first: 1->2 then a leaves 2
    assert (b * a).images == (2, 0, 1)
    with pytest.raises(ValueError):
        a * Permutation((0, 1))


def test_inverse_and_order():
    cycle = Permutation((1, 2, 3, 0))
    assert cycle.inverse() == Permutation((3, 0, 1, 2))
    assert cycle.order() == 4
    assert (cycle * cycle.inverse()).is_identity
    assert Permutation.identity(5).order() == 1


def test_generate_closure_of_a_three_cycle():
    group = generate((Permutation((1, 2, 0)),))
    assert len(group) == 3
    assert Permutation.identity(3) in group


def test_generate_trivial_group_needs_degree():
    trivial = generate((), degree=4)
    assert len(trivial) == 1
    assert trivial.degree == 4
    with pytest.raises(ValueError):
        generate(())


def test_generate_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        generate((Permutation((1, 0)), Permutation((1, 2, 0))))


def test_from_elements_requires_identity_and_inverses():
    with pytest.raises(ValueError, match="identity"):
        from_elements([Permutation((1, 2, 0))])
    with pytest.raises(ValueError, match="inverse"):
        from_elements([Permutation.identity(3), Permutation((1, 2, 0))])


def test_orbit_and_stabilizer():
    # S3 on three points: one orbit, stabilizers of order 2.
    s3 = generate((Permutation((1, 0, 2)), Permutation((1, 2, 0))))
    assert len(s3) == 6
    assert orbit(s3, 0) == frozenset({0, 1, 2})
    stab = stabilizer(s3, 0)
    assert len(stab) == 2
    # Orbit-stabilizer: |orbit| * |stabilizer| = |group|.
    assert len(orbit(s3, 0)) * len(stab) == len(s3)


def test_simple_transitivity():
    s3 = generate((Permutation((1, 0, 2)), Permutation((1, 2, 0))))
    assert not is_simply_transitive(s3)  # order 6 on 3 points
    left, _ = regular_representations(symmetric_table(3))
    assert is_simply_transitive(left)


def test_centralizer_semiregular_matches_brute_force_for_s3_regular():
    left, right = regular_representations(symmetric_table(3))
    assert centralizer_semiregular(left).element_set == frozenset(
        brute_force_centralizer(left)
    )
    assert centralizer_semiregular(right).element_set == frozenset(
        brute_force_centralizer(right)
    )


def test_left_and_right_regular_reps_centralize_each_other():
    for table in (symmetric_table(3), cyclic_table(6), dihedral_table(3)):
        left, right = regular_representations(table)
        assert centralizer_semiregular(left).element_set == right.element_set
        assert centralizer_semiregular(right).element_set == left.element_set


def test_left_meets_right_in_the_center():
    left, right = regular_representations(dihedral_table(12))
    overlap = left.element_set & right.element_set
    assert len(overlap) == 2  # the center of the order-24 dihedral group
    left, right = regular_representations(cyclic_table(12))
    assert left.element_set == right.element_set  # abelian: both actions agree
    left, right = regular_representations(symmetric_table(3))
    assert left.element_set & right.element_set == {Permutation.identity(6)}


def test_centralizer_semiregular_rejects_groups_with_fixed_points():
    swap_with_fixed_point = generate((Permutation((1, 0, 2)),))
    with pytest.raises(ValueError, match="not semiregular"):
        centralizer_semiregular(swap_with_fixed_point)


def test_centralizer_semiregular_refuses_absurd_enumeration():
    # The trivial group on 12 points is semiregular, but its centralizer
    # is all of Sym(12); the base-point bound must trip first.
    with pytest.raises(ValueError, match="refusing"):
        centralizer_semiregular(generate((), degree=12))


def test_centralizer_within_requires_subgroup():
    s3 = generate((Permutation((1, 0, 2)), Permutation((1, 2, 0))))
    rotations = generate((Permutation((1, 2, 0)),))
    assert centralizer_within(rotations, s3).element_set == rotations.element_set
    with pytest.raises(ValueError, match="subgroup"):
        centralizer_within(s3, rotations)


def test_validate_group_table_reports_failures_in_axiom_order():
    with pytest.raises(GroupTableError) as info:
        validate_group_table([[0, 1], [1, 2]])
    assert info.value.axiom == "closure"

    with pytest.raises(GroupTableError) as info:
        validate_group_table([[0, 1], [1]])
    assert info.value.axiom == "closure"

    with pytest.raises(GroupTableError) as info:
        validate_group_table([[1, 1], [1, 1]])
    assert info.value.axiom == "identity"

    with pytest.raises(GroupTableError) as info:
        validate_group_table([[0, 1], [1, 1]])  # a monoid, not a group
    assert info.value.axiom == "inverses"

    with pytest.raises(GroupTableError) as info:
        validate_group_table(NONASSOCIATIVE_LOOP)
    assert info.value.axiom == "associativity"


def test_validate_group_table_returns_identity_index():
    assert validate_group_table(cyclic_table(6)) == 0
    assert validate_group_table(dihedral_table(12)) == 0
    assert validate_group_table(symmetric_table(3)) == 0


def test_table_sizes():
    assert len(cyclic_table(12)) == 12
    assert len(dihedral_table(12)) == 24
    assert len(symmetric_table(3)) == 6
    assert len(symmetric_table(4)) == 24


def test_dihedral_table_relations():
    # Rotations are 0..n-1, reflections n..2n-1; check t s t = s^{-1}.
    n = 12
    table = dihedral_table(n)
    s, t = 1, n  # a generating rotation and a reflection
    tst = table[table[t][s]][t]
    assert tst == (n - 1)  # s^{-1} is the rotation by -1
    assert table[t][t] == 0


def test_is_dihedral_24_accepts_the_dihedral_group():
    left, _ = regular_representations(dihedral_table(12))
    ok, witness = is_dihedral_24(left)
    assert ok
    s, t = witness
    assert s.order() == 12 and t.order() == 2
    assert t * s * t == s.inverse()


def test_is_dihedral_24_rejects_cyclic_and_wrong_orders():
    left, _ = regular_representations(cyclic_table(24))
    assert is_dihedral_24(left) == (False, None)
    small, _ = regular_representations(cyclic_table(6))
    assert is_dihedral_24(small) == (False, None)

"""Group construction, validation witnesses, and subgroup closure."""
import pytest

from gradedmorita.groups import (
    FiniteGroup,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    conjugate,
    cyclic_group,
    make_group,
    perm_parity,
    stabilizer_closure,
    symmetric_group,
    trivial_group,
)


def test_trivial_group_is_a_point():
    g = trivial_group()
    assert g.order == 1
    assert g.mul(0, 0) == 0
    assert g.inv(0) == 0


def test_cyclic_group_arithmetic():
    c6 = cyclic_group(6)
    assert c6.order == 6
    for i in c6.elements():
        assert c6.mul(0, i) == i and c6.mul(i, 0) == i
        assert c6.inv(i) == (6 - i) % 6
        for j in c6.elements():
            assert c6.mul(i, j) == (i + j) % 6


def test_cyclic_group_rejects_nonpositive_order():
    with pytest.raises(ValueError):
        cyclic_group(0)


def test_symmetric_group_composition_convention():
    s3, perms = symmetric_group(3)
    assert s3.order == 6
    assert perms[0] == (0, 1, 2)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            composed = tuple(p[q[i]] for i in range(3))
            assert perms[s3.mul(a, b)] == composed


def test_perm_parity_is_a_homomorphism():
    s3, perms = symmetric_group(3)
    parities = [perm_parity(p) for p in perms]
    assert parities.count(0) == 3 and parities.count(1) == 3
    assert parities[0] == 0
    for a in s3.elements():
        for b in s3.elements():
            assert parities[s3.mul(a, b)] == (parities[a] + parities[b]) % 2


def test_make_group_accepts_valid_table():
    g = make_group([[0, 1], [1, 0]])
    assert isinstance(g, FiniteGroup) and g.order == 2


def test_make_group_rejects_malformed_tables():
    with pytest.raises(ValueError):
        make_group([])
    with pytest.raises(ValueError):
        make_group([[0, 1], [1]])
    with pytest.raises(ValueError):
        make_group([[0, 7], [1, 0]])


def test_make_group_identity_witness():
    with pytest.raises(NoIdentity) as exc:
        make_group([[1, 0], [0, 1]])
    assert exc.value.witness == 0


def test_make_group_associativity_witness():
    table = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
    with pytest.raises(NotAssociative) as exc:
        make_group(table)
    i, j, k = exc.value.witness
    assert table[table[i][j]][k] != table[i][table[j][k]]


def test_make_group_inverse_witness():
    # "or" on {0,1}: associative monoid with identity 0, but 1 is absorbing.
    with pytest.raises(NoInverse) as exc:
        make_group([[0, 1], [1, 1]])
    assert exc.value.witness == 1


def test_finite_group_inv_raises_on_monoid():
    monoid = FiniteGroup(((0, 1), (1, 1)))
    with pytest.raises(NoInverse):
        monoid.inv(1)


def test_conjugation_is_an_automorphism_preserving_parity():
    s3, perms = symmetric_group(3)
    parities = [perm_parity(p) for p in perms]
    for g in s3.elements():
        for h in s3.elements():
            assert parities[conjugate(s3, g, h)] == parities[h]
            for k in s3.elements():
                assert conjugate(s3, g, s3.mul(h, k)) == s3.mul(
                    conjugate(s3, g, h), conjugate(s3, g, k)
                )


def test_stabilizer_closure_accepts_even_permutations():
    s3, perms = symmetric_group(3)
    even = [i for i, p in enumerate(perms) if perm_parity(p) == 0]
    sub = stabilizer_closure(s3, reversed(even))
    assert sub.members == tuple(sorted(even))
    assert 0 in sub and all(g in sub for g in even)
    odd = next(i for i, p in enumerate(perms) if perm_parity(p) == 1)
    assert odd not in sub


def test_stabilizer_closure_rejects_non_subgroups():
    c4 = cyclic_group(4)
    with pytest.raises(NotClosed) as exc:
        stabilizer_closure(c4, [0, 1])
    assert exc.value.witness == (1, 1)
    with pytest.raises(NotClosed) as exc:
        stabilizer_closure(c4, [1, 3])
    assert exc.value.witness == "identity missing"

"""Finite groups as explicit multiplication tables.

Elements are indices 0..n-1 into the table; the identity sits at index 0.
Groups stay tiny (desk scale), so all validation is exhaustive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class NoIdentity(ValueError):
    """Index 0 does not act as a two-sided identity; .witness is an element."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"index 0 is not an identity (fails at element {witness})")


class NotAssociative(ValueError):
    """Multiplication fails associativity; .witness is the offending triple."""

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"(g*h)*k != g*(h*k) at {witness}")


class NoInverse(ValueError):
    """Some element has no two-sided inverse; .witness is that element."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"element {witness} has no two-sided inverse")


class NotClosed(ValueError):
    """A member set is not a subgroup; .witness explains why."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"member set is not closed: {witness}")


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table."""

    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        for h in self.elements():
            if self.table[g][h] == 0 and self.table[h][g] == 0:
                return h
        raise NoInverse(g)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def make_group(table) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a FiniteGroup.

    Checks, in order: well-formed table, identity at index 0, associativity
    on all triples, two-sided inverses. Each failure names a witness.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise ValueError("empty table")
    for r in rows:
        if len(r) != n or any(not isinstance(x, int) or not 0 <= x < n for x in r):
            raise ValueError("malformed table")
    for j in range(n):
        if rows[0][j] != j or rows[j][0] != j:
            raise NoIdentity(j)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                    raise NotAssociative((i, j, k))
    for i in range(n):
        if not any(rows[i][j] == 0 and rows[j][i] == 0 for j in range(n)):
            raise NoInverse(i)
    return FiniteGroup(tuple(tuple(r) for r in rows))


def conjugate(group: FiniteGroup, g: int, h: int) -> int:
    """g * h * g^{-1}."""
    return group.mul(group.mul(g, h), group.inv(g))


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    members: tuple[int, ...] = field(default=())

    def __contains__(self, g: int) -> bool:
        return g in self.members


def stabilizer_closure(group: FiniteGroup, members) -> Subgroup:
    """Check a member set is a subgroup and return it (members sorted).

    Raises NotClosed naming the violation: a missing identity or a product
    that escapes the set. Inverses follow from closure in a finite group but
    are verified anyway.
    """
    mset = sorted(set(members))
    if 0 not in mset:
        raise NotClosed("identity missing")
    for g in mset:
        for h in mset:
            if group.mul(g, h) not in mset:
                raise NotClosed((g, h))
    for g in mset:
        if group.inv(g) not in mset:
            raise NotClosed(("inverse", g))
    return Subgroup(group, tuple(mset))


def trivial_group() -> FiniteGroup:
    return FiniteGroup(((0,),))


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def symmetric_group(n: int) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """S_n with elements in lexicographic order (identity first).

    Returns the group together with the permutation tuples backing each
    index, composition convention (p*q)(i) = p(q(i)).
    """
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms
    )
    return FiniteGroup(table), perms


def perm_parity(perm: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return inversions % 2

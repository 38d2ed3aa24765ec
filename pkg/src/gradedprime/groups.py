"""Grading groups: finite groups as Cayley tables, plus the integers.

Finite group elements are indices 0..order-1.  The infinite cyclic group is
represented by the ``Z`` singleton whose elements are plain Python ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import ClassVar, Sequence

from .errors import SpecError


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    op_table: tuple[tuple[int, ...], ...]
    identity: int
    inv_table: tuple[int, ...]
    names: tuple[str, ...]

    is_finite: ClassVar[bool] = True

    def op(self, x: int, y: int) -> int:
        return self.op_table[x][y]

    def inverse(self, x: int) -> int:
        return self.inv_table[x]

    def elements(self) -> range:
        return range(self.order)

    def name(self, x: int) -> str:
        return self.names[x]

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


class IntegerGroup:
    """The ordered group of integers under addition."""

    is_finite = False
    identity = 0

    def op(self, x: int, y: int) -> int:
        return x + y

    def inverse(self, x: int) -> int:
        return -x

    def name(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return "Z"


Z = IntegerGroup()


def group_from_table(op_rows: Sequence[Sequence[int]], names=None) -> FiniteGroup:
    """Build a finite group from its operation table, validating the axioms."""
    n = len(op_rows)
    if n == 0:
        raise SpecError("group must be nonempty")
    table = tuple(tuple(int(v) for v in row) for row in op_rows)
    for row in table:
        if len(row) != n or any(v < 0 or v >= n for v in row):
            raise SpecError("group table is not square over 0..order-1")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise SpecError("group operation is not associative")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise SpecError("group has no identity element")
    inv = []
    for x in range(n):
        ys = [y for y in range(n) if table[x][y] == identity]
        if len(ys) != 1:
            raise SpecError(f"element {x} has no unique inverse")
        inv.append(ys[0])
    if names is None:
        names = tuple(str(i) for i in range(n))
    else:
        names = tuple(names)
        if len(names) != n:
            raise SpecError("wrong number of element names")
    return FiniteGroup(n, table, identity, tuple(inv), names)


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n, written additively; element i is i mod n."""
    if n < 1:
        raise SpecError("cyclic group order must be positive")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = tuple("e" if i == 0 else f"g^{i}" for i in range(n))
    return group_from_table(rows, names)


def symmetric_group(n: int) -> FiniteGroup:
    """Symmetric group on n letters; elements are permutations in lex order.

    The product sigma*tau maps i to sigma[tau[i]] (tau applied first).
    """
    if n < 1:
        raise SpecError("symmetric group degree must be positive")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [
        [index[tuple(p[q[i]] for i in range(n))] for q in perms]
        for p in perms
    ]
    names = tuple("".join(map(str, p)) for p in perms)
    return group_from_table(rows, names)

"""Closed-form Cremmer-Gervais matrices and structure constants.

The braid matrix on small indices 1..n is

    sigma^{ij}_{kl} = delta(i,l) delta(j,k)
                    + b * (sum_{k<=s<l} - sum_{l<=s<k}) delta(i,s) delta(j,k+l-s),

its one-parameter deformation multiplies the flip term by p^(k-l) and the
summand by p^(k-s).  The structure constants are

    C^j_{kl} = C * (delta(1,l) delta(j,k) - delta(1,k) delta(j,l)),

and the extended braid matrix packages both into a single operator on the
capital indices 0..n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .operators import Entry, Operator
from .scalars import BETA, C, ONE, Scalar


def sigma_cg(n: int) -> Operator:
    """The Cremmer-Gervais braid matrix on small indices 1..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ent: dict[Entry, Scalar] = {}
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            _acc(ent, (l, k), (k, l), ONE)
            sign = 1 if k < l else -1
            for s in range(min(k, l), max(k, l)):
                _acc(ent, (s, k + l - s), (k, l), BETA * sign)
    return Operator(n, 2, ent, lo=1)


def sigma_cg_family(n: int) -> Operator:
    """The p-deformed family; specializing p = 1 recovers sigma_cg(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ent: dict[Entry, Scalar] = {}
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            _acc(ent, (l, k), (k, l), Scalar.monomial((0, 0, k - l)))
            sign = 1 if k < l else -1
            for s in range(min(k, l), max(k, l)):
                _acc(
                    ent,
                    (s, k + l - s),
                    (k, l),
                    Scalar.monomial((1, 0, k - s), sign),
                )
    return Operator(n, 2, ent, lo=1)


@dataclass
class StructureTensor:
    """Sparse rank-3 tensor C^k_{ij}: upper index k, lower pair (i, j)."""

    n: int
    entries: dict[tuple[int, int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        canon = {}
        for (k, i, j), coeff in self.entries.items():
            for idx in (k, i, j):
                if idx < 1 or idx > self.n:
                    raise ValueError(f"index {idx} outside 1..{self.n}")
            if coeff:
                canon[(k, i, j)] = coeff
        self.entries = canon

    def coeff(self, k: int, i: int, j: int) -> Scalar:
        return self.entries.get((k, i, j), Scalar.zero())

    def with_entry(self, k: int, i: int, j: int, coeff: Scalar) -> "StructureTensor":
        ent = dict(self.entries)
        if coeff:
            ent[(k, i, j)] = coeff
        else:
            ent.pop((k, i, j), None)
        return StructureTensor(self.n, ent)

    def sorted_entries(self) -> Iterator[tuple[tuple[int, int, int], Scalar]]:
        return iter(sorted(self.entries.items()))

    def to_json_dict(self) -> dict:
        return {
            "entries": [
                {"upper": k, "lower": [i, j], "coeff": str(coeff)}
                for (k, i, j), coeff in self.sorted_entries()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["upper,lower,coeff"]
        for (k, i, j), coeff in self.sorted_entries():
            lines.append(f"{k},{i} {j},{coeff}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"structure constants n={self.n} entries={len(self.entries)}"]
        for (k, i, j), coeff in self.sorted_entries():
            lines.append(f"C[{k};{i},{j}] = {coeff}")
        return "\n".join(lines) + "\n"


def structure_constants(n: int) -> StructureTensor:
    """Structure constants of the quantum Lie algebra: C^j_{j1} = -C^j_{1j} = C.

    The formula cancels to zero at j = 1, so nonzero entries exist only for
    j = 2..n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ent: dict[tuple[int, int, int], Scalar] = {}
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                coeff = Scalar.zero()
                if l == 1 and j == k:
                    coeff = coeff + C
                if k == 1 and j == l:
                    coeff = coeff - C
                if coeff:
                    ent[(j, k, l)] = coeff
    return StructureTensor(n, ent)


def extended_rhat(
    n: int, constants: Optional[StructureTensor] = None
) -> Operator:
    """The extended braid matrix on capital indices 0..n.

    Blocks: the small-index block is sigma_cg(n); row pairs (0, j) against
    column pairs (k, l) hold the structure constants; the two delta blocks
    exchange index 0 with any capital index; every other entry is zero.
    Passing a custom structure tensor supports mutation testing.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if constants is None:
        constants = structure_constants(n)
    ent: dict[Entry, Scalar] = {}
    for key, coeff in sigma_cg(n).entries.items():
        ent[key] = coeff
    for (k, i, j), coeff in constants.entries.items():
        _acc(ent, (0, k), (i, j), coeff)
    for a in range(0, n + 1):
        ent[((0, a), (a, 0))] = ONE
        ent[((a, 0), (0, a))] = ONE
    return Operator(n, 2, ent, lo=0)


def _acc(ent: dict[Entry, Scalar], out: tuple[int, int], inp: tuple[int, int], coeff: Scalar) -> None:
    key = (out, inp)
    acc = ent.get(key)
    acc = coeff if acc is None else acc + coeff
    if acc:
        ent[key] = acc
    else:
        ent.pop(key, None)

"""Truncated Laurent-function spaces and the functional braid operator.

The single space V is spanned by x^(-1), x^0, ..., x^(n-1): polynomials of
degree at most n divided by x.  Tensor powers V (x) V and V (x) V (x) V are
functions of two and three variables with every exponent in [-1, n-1].

The braid operator acts on a function F of two active variables as

    (Rhat F)(x, y) = F(y, x) + b * y * (f(y,x) - f(x,y)) / (x - y)
                   + C * (f(y,0) - f(0,y)) / x

where f is the part of F regular in the two active variables.  On three
variables an operator acts on a chosen pair of slots, treating the third
exponent as a passive index.  Divided differences are expanded through the
closed geometric-sum formula per monomial, so the division by x - y never
materializes an out-of-range term.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional, Union

from .scalars import BETA, C, ONE, Scalar

Slots = tuple[int, int]


@dataclass(frozen=True)
class SpaceConfig:
    """Truncation level: dim V = n + 1, exponents range over [-1, n-1]."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"space size must be >= 1, got n={self.n}")

    @property
    def min_exp(self) -> int:
        return -1

    @property
    def max_exp(self) -> int:
        return self.n - 1


class LaurentFn:
    """Sparse element of V, V (x) V or V (x) V (x) V over the scalar ring."""

    __slots__ = ("cfg", "arity", "_terms")

    def __init__(
        self,
        cfg: SpaceConfig,
        arity: int,
        terms: Optional[Mapping[tuple[int, ...], Scalar]] = None,
    ):
        if arity not in (1, 2, 3):
            raise ValueError(f"arity must be 1, 2 or 3, got {arity}")
        self.cfg = cfg
        self.arity = arity
        canon: dict[tuple[int, ...], Scalar] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != arity:
                    raise ValueError(f"exponent vector {exps} has wrong length")
                for e in exps:
                    if e < cfg.min_exp or e > cfg.max_exp:
                        raise ValueError(
                            f"exponent {e} outside [{cfg.min_exp}, {cfg.max_exp}] "
                            f"for n={cfg.n}"
                        )
                if coeff:
                    canon[tuple(exps)] = coeff
        self._terms = canon

    @classmethod
    def zero(cls, cfg: SpaceConfig, arity: int) -> "LaurentFn":
        return cls(cfg, arity)

    @classmethod
    def monomial(
        cls,
        cfg: SpaceConfig,
        exps: tuple[int, ...],
        coeff: Scalar = ONE,
    ) -> "LaurentFn":
        return cls(cfg, len(exps), {tuple(exps): coeff})

    def terms(self) -> Iterator[tuple[tuple[int, ...], Scalar]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentFn):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other: "LaurentFn") -> "LaurentFn":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return self._wrap(out)

    def __neg__(self) -> "LaurentFn":
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentFn") -> "LaurentFn":
        return self + (-other)

    def scale(self, factor: Union[Scalar, int]) -> "LaurentFn":
        if isinstance(factor, int):
            factor = Scalar.rational(factor)
        out = {}
        for exps, coeff in self._terms.items():
            acc = coeff * factor
            if acc:
                out[exps] = acc
        return self._wrap(out)

    def _wrap(self, terms: dict[tuple[int, ...], Scalar]) -> "LaurentFn":
        fn = LaurentFn.__new__(LaurentFn)
        fn.cfg = self.cfg
        fn.arity = self.arity
        fn._terms = terms
        return fn

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = "xyz"[: self.arity]
        parts = []
        for exps, coeff in self.terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e != 0
            ]
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentFn({self})"


def basis_monomials(
    cfg: SpaceConfig, arity: int, lo: Optional[int] = None, hi: Optional[int] = None
) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of the monomial basis, lexicographically ordered.

    Defaults to the full truncated space [-1, n-1]; pass lo=0 to range over
    plain polynomial monomials.
    """
    lo = cfg.min_exp if lo is None else lo
    hi = cfg.max_exp if hi is None else hi
    return product(range(lo, hi + 1), repeat=arity)


def _check_slots(fn: LaurentFn, slots: Slots) -> None:
    a, b = slots
    if a == b or not (0 <= a < fn.arity) or not (0 <= b < fn.arity):
        raise ValueError(f"bad slot pair {slots} for arity {fn.arity}")


def reg(fn: LaurentFn, slots: Optional[Slots] = None) -> LaurentFn:
    """Regular part: drop terms with a negative exponent.

    With slots given, only those two positions are inspected; exponents of a
    spectator variable pass through untouched (they play the role of a
    coefficient index).
    """
    active = range(fn.arity) if slots is None else slots
    out = {
        exps: coeff
        for exps, coeff in fn._terms.items()
        if all(exps[i] >= 0 for i in active)
    }
    return fn._wrap(out)


def permute(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """Exchange the two variables in the given slots; an involution."""
    _check_slots(fn, slots)
    a, b = slots
    out = {}
    for exps, coeff in fn._terms.items():
        e = list(exps)
        e[a], e[b] = e[b], e[a]
        out[tuple(e)] = coeff
    return fn._wrap(out)


def divided_difference(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """(f(..y..x..) - f(..x..y..)) / (x - y) on the active slots.

    Requires the active exponents to be nonnegative; the quotient is then an
    honest polynomial in the active variables, computed term by term from the
    geometric-sum identity
        (x^a y^b - x^b y^a) / (x - y) = sum_t x^(b+t) y^(a-1-t),  a > b,
    so no intermediate term ever leaves the truncated space.
    """
    _check_slots(fn, slots)
    a, b = slots
    out: dict[tuple[int, ...], Scalar] = {}
    for exps, coeff in fn._terms.items():
        ea, eb = exps[a], exps[b]
        if ea < 0 or eb < 0:
            raise ValueError(f"divided difference on a singular term {exps}")
        if ea == eb:
            continue
        # swap minus identity on x^ea y^eb gives -(sign) * geometric sum
        sign = -1 if ea > eb else 1
        lo, hi = min(ea, eb), max(ea, eb)
        for t in range(hi - lo):
            e = list(exps)
            e[a] = lo + t
            e[b] = hi - 1 - t
            key = tuple(e)
            acc = out.get(key)
            acc = coeff * sign if acc is None else acc + coeff * sign
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return fn._wrap(out)


def op_rho(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """(rho F)(x, y) = x * (f(y,x) - f(x,y)) / (x - y), f the regular part."""
    _check_slots(fn, slots)
    a, _ = slots
    dd = divided_difference(reg(fn, slots), slots)
    out = {}
    for exps, coeff in dd._terms.items():
        e = list(exps)
        e[a] += 1
        out[tuple(e)] = coeff
    return fn._wrap(out)


def op_s(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """(s F)(x, y) = (f(x, 0) - f(0, x)) / y, f the regular part."""
    _check_slots(fn, slots)
    a, b = slots
    f = reg(fn, slots)
    out: dict[tuple[int, ...], Scalar] = {}
    for exps, coeff in f._terms.items():
        # f(x, 0): terms constant in slot b, exponent kept in slot a
        if exps[b] == 0:
            e = list(exps)
            e[b] = -1
            _accumulate(out, tuple(e), coeff)
        # f(0, x): terms constant in slot a, their slot-b exponent moves to a
        if exps[a] == 0:
            e = list(exps)
            e[a] = exps[b]
            e[b] = -1
            _accumulate(out, tuple(e), -coeff)
    return fn._wrap(out)


def op_r(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """(r F) = b * (rho F) + C * (s F); the classical r-matrix operator."""
    return op_rho(fn, slots).scale(BETA) + op_s(fn, slots).scale(C)


def op_rhat(fn: LaurentFn, slots: Slots = (0, 1)) -> LaurentFn:
    """The braid operator, by its three-term closed form.

    Equals permute o (identity + r) as an operator; both routes are compared
    in the test suite.
    """
    return permute(fn, slots) + _rhat_beta_term(fn, slots) + _rhat_c_term(fn, slots)


def _rhat_beta_term(fn: LaurentFn, slots: Slots) -> LaurentFn:
    # b * y * (f(y,x) - f(x,y)) / (x - y)
    _check_slots(fn, slots)
    _, b = slots
    dd = divided_difference(reg(fn, slots), slots)
    out = {}
    for exps, coeff in dd._terms.items():
        e = list(exps)
        e[b] += 1
        out[tuple(e)] = coeff * BETA
    return fn._wrap(out)


def _rhat_c_term(fn: LaurentFn, slots: Slots) -> LaurentFn:
    # C * (f(y,0) - f(0,y)) / x : a function of y alone, divided by x
    _check_slots(fn, slots)
    a, b = slots
    f = reg(fn, slots)
    out: dict[tuple[int, ...], Scalar] = {}
    for exps, coeff in f._terms.items():
        if exps[b] == 0:
            e = list(exps)
            e[a] = -1
            e[b] = exps[a]
            _accumulate(out, tuple(e), coeff * C)
        if exps[a] == 0:
            e = list(exps)
            e[a] = -1
            e[b] = exps[b]
            _accumulate(out, tuple(e), -(coeff * C))
    return fn._wrap(out)


def _accumulate(
    out: dict[tuple[int, ...], Scalar], key: tuple[int, ...], coeff: Scalar
) -> None:
    acc = out.get(key)
    acc = coeff if acc is None else acc + coeff
    if acc:
        out[key] = acc
    else:
        out.pop(key, None)

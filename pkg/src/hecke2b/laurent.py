"""Laurent polynomials in W_0, W_1, ..., W_k with exact coefficients.

A polynomial is a mapping from exponent tuples ``(e_0, e_1, ..., e_k)`` to
:class:`ScalarValue` coefficients.  ``W_0`` is central and fixed by the finite
Weyl group; ``s_0`` inverts ``W_1`` and ``s_i`` swaps ``W_i`` and ``W_{i+1}``.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DomainError, SizeMismatch
from .scalar import ONE, ZERO, ScalarValue, coerce

__all__ = ["LaurentPoly", "divided_difference"]

Exponent = Tuple[int, ...]


class LaurentPoly:
    """An exact Laurent polynomial in ``k + 1`` commuting variables."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Exponent, object] | None = None):
        self.k = k
        clean: Dict[Exponent, ScalarValue] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != k + 1:
                raise SizeMismatch(f"exponent {exp} has length {len(exp)}, expected {k + 1}")
            c = coerce(coef)
            if c is NotImplemented:
                raise DomainError(f"unsupported coefficient {coef!r}")
            if c:
                clean[exp] = clean.get(exp, ZERO) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -----------------------------------------------------------
    @staticmethod
    def constant(k: int, value=1) -> "LaurentPoly":
        return LaurentPoly(k, {(0,) * (k + 1): value})

    @staticmethod
    def monomial(k: int, exponents: Sequence[int], coef=1) -> "LaurentPoly":
        """``coef * W_1^{e_1} ... W_k^{e_k}``; a length-k+1 tuple also sets the W_0 power."""
        exp = tuple(exponents)
        if len(exp) == k:
            exp = (0,) + exp
        return LaurentPoly(k, {exp: coef})

    @staticmethod
    def var(k: int, i: int, power: int = 1) -> "LaurentPoly":
        """The variable ``W_i^{power}`` (``i = 0`` is the central generator)."""
        if not 0 <= i <= k:
            raise DomainError(f"W_{i} is not a variable for k={k}")
        exp = [0] * (k + 1)
        exp[i] = power
        return LaurentPoly(k, {tuple(exp): ONE})

    # -- arithmetic -------------------------------------------------------------
    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.k != self.k:
                raise SizeMismatch(f"k={self.k} and k={other.k} polynomials do not mix")
            return other
        return LaurentPoly.constant(self.k, other)

    def __add__(self, other) -> "LaurentPoly":
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return LaurentPoly(self.k, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        o = self._lift(other)
        out: Dict[Exponent, ScalarValue] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return LaurentPoly(self.k, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = self._lift(other)
            except DomainError:
                return NotImplemented
        return self.k == other.k and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            mono = "*".join(f"W{i}^{p}" if p != 1 else f"W{i}" for i, p in enumerate(e) if p)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # -- Weyl group action ------------------------------------------------------
    def reflect(self, i: int) -> "LaurentPoly":
        """Apply the simple reflection ``s_i`` (0 <= i < k)."""
        if not 0 <= i < self.k:
            raise DomainError(f"s_{i} is not a generator for k={self.k}")
        out: Dict[Exponent, ScalarValue] = {}
        for e, c in self.terms.items():
            out[_reflect_exponent(e, i)] = c
        return LaurentPoly(self.k, out)

    def is_invariant(self) -> bool:
        return all(self.reflect(i) == self for i in range(self.k))

    # -- evaluation -------------------------------------------------------------
    def evaluate(self, values: Sequence, one=ONE, mul: Callable | None = None, power: Callable | None = None):
        """Substitute ``W_i -> values[i]`` (values has length k+1).

        Scalars work with the defaults.  For matrices pass the identity as
        ``one`` and ``operator.matmul`` as ``mul``; ``power(x, n)`` defaults to
        ``x ** n``.
        """
        if len(values) != self.k + 1:
            raise SizeMismatch(f"need {self.k + 1} values, got {len(values)}")
        times = mul or (lambda a, b: a * b)
        pw = power or (lambda x, n: x ** n)
        cache: Dict[Tuple[int, int], object] = {}
        total = one * ZERO
        for e, c in sorted(self.terms.items()):
            term = one
            for i, p in enumerate(e):
                if p:
                    if (i, p) not in cache:
                        cache[(i, p)] = pw(values[i], p)
                    term = times(term, cache[(i, p)])
            total = total + term * c
        return total


def _reflect_exponent(e: Exponent, i: int) -> Exponent:
    lst = list(e)
    if i == 0:
        lst[1] = -lst[1]
    else:
        lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


def _geometric(n: int) -> Iterable[Tuple[int, int]]:
    """Terms (power, sign) of ``(y^n - 1)/(1 - y)`` as a Laurent polynomial in y."""
    if n > 0:
        return [(p, -1) for p in range(n)]
    if n < 0:
        return [(p, 1) for p in range(n, 0)]
    return []


def divided_difference(f: LaurentPoly, i: int) -> LaurentPoly:
    """``(f - s_i f) / (1 - y_i)`` with ``y_0 = W_1^{-2}`` and ``y_i = W_i W_{i+1}^{-1}``.

    The quotient is always a Laurent polynomial.
    """
    out: Dict[Exponent, ScalarValue] = {}
    for e, c in f.terms.items():
        base = _reflect_exponent(e, i)
        if i == 0:
            n = -e[1]  # W^e = W^{s_0 e} * y^n with y = W_1^{-2}
            step = [0] * (f.k + 1)
            step[1] = -2
        else:
            n = e[i] - e[i + 1]
            step = [0] * (f.k + 1)
            step[i], step[i + 1] = 1, -1
        for p, sign in _geometric(n):
            exp = tuple(b + p * s for b, s in zip(base, step))
            out[exp] = out.get(exp, ZERO) + c * sign
    return LaurentPoly(f.k, out)

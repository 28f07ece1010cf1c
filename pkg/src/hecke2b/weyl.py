"""Signed permutations: the Weyl group of type C_k.

A :class:`SignedPermutation` stores its window ``(w(1), ..., w(k))``; the
values at negative arguments follow from ``w(-i) = -w(i)``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import BoundExceeded, DomainError, SizeMismatch

__all__ = [
    "SignedPermutation",
    "Root",
    "WeightVector",
    "generators",
    "identity",
    "compose",
    "inverse",
    "inversion_set",
    "positive_roots",
    "act_on_weight",
    "act_on_tuple",
    "enumerate_group",
    "max_k",
    "parse_root",
]

EPS_I = 0
EPS_J_MINUS_EPS_I = 1
EPS_J_PLUS_EPS_I = 2


def max_k(default: int = 8) -> int:
    """Brute-force bound on k, overridable through ``HECKE2B_MAX_K``."""
    raw = os.environ.get("HECKE2B_MAX_K")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"HECKE2B_MAX_K must be an integer, got {raw!r}") from exc


@dataclass(frozen=True, order=True)
class Root:
    """A positive root of type C: ``eps_i`` (kind 0), ``eps_j - eps_i`` (1), ``eps_j + eps_i`` (2).

    For kind 0 only ``i`` is meaningful and ``j`` is 0.  Ordering is by
    ``(kind, i, j)``.
    """

    kind: int
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind == EPS_I:
            if self.i < 1 or self.j != 0:
                raise DomainError(f"invalid root eps_{self.i}")
        elif self.kind in (EPS_J_MINUS_EPS_I, EPS_J_PLUS_EPS_I):
            if not 0 < self.i < self.j:
                raise DomainError(f"root indices must satisfy 0 < i < j, got i={self.i}, j={self.j}")
        else:
            raise DomainError(f"unknown root kind {self.kind}")

    @staticmethod
    def eps(i: int) -> "Root":
        return Root(EPS_I, i)

    @staticmethod
    def minus(j: int, i: int) -> "Root":
        """``eps_j - eps_i`` with ``i < j``."""
        return Root(EPS_J_MINUS_EPS_I, i, j)

    @staticmethod
    def plus(j: int, i: int) -> "Root":
        """``eps_j + eps_i``; the indices may be given in either order."""
        lo, hi = sorted((i, j))
        return Root(EPS_J_PLUS_EPS_I, lo, hi)

    def coefficients(self, k: int) -> Tuple[int, ...]:
        v = [0] * k
        if self.kind == EPS_I:
            v[self.i - 1] = 1
        else:
            v[self.j - 1] = 1
            v[self.i - 1] += -1 if self.kind == EPS_J_MINUS_EPS_I else 1
        return tuple(v)

    def max_index(self) -> int:
        return self.i if self.kind == EPS_I else self.j

    def __str__(self) -> str:
        if self.kind == EPS_I:
            return f"e{self.i}"
        op = "-" if self.kind == EPS_J_MINUS_EPS_I else "+"
        return f"e{self.j}{op}e{self.i}"


def parse_root(text: str) -> Root:
    """Parse ``"ei"``, ``"ej-ei"`` or ``"ej+ei"`` (1-based indices)."""
    s = text.strip().replace(" ", "")
    try:
        if "-" in s[1:] or "+" in s:
            op = "+" if "+" in s else "-"
            left, right = s.split(op)
            if not (left.startswith("e") and right.startswith("e")):
                raise ValueError
            j, i = int(left[1:]), int(right[1:])
            if op == "+":
                return Root.plus(j, i)
            if i > j:
                raise DomainError(f"{text!r} is a negative root")
            return Root.minus(j, i)
        if not s.startswith("e"):
            raise ValueError
        return Root.eps(int(s[1:]))
    except (ValueError, IndexError) as exc:
        raise DomainError(f"cannot parse root {text!r}") from exc


def positive_roots(k: int) -> List[Root]:
    roots = [Root.eps(i) for i in range(1, k + 1)]
    roots += [Root.minus(j, i) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    roots += [Root.plus(j, i) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    return sorted(roots)


class SignedPermutation:
    """Bijection w of {-k..-1, 1..k} with w(-i) = -w(i), stored as its window."""

    __slots__ = ("window", "_hash")

    def __init__(self, window: Sequence[int]):
        win = tuple(int(x) for x in window)
        k = len(win)
        if sorted(abs(x) for x in win) != list(range(1, k + 1)):
            raise DomainError(f"{list(win)} is not a signed permutation window")
        self.window = win
        self._hash = hash(win)

    @property
    def k(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.window[i - 1]
        if i < 0:
            return -self.window[-i - 1]
        raise DomainError("signed permutations are not defined at 0")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self.window < other.window

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def __matmul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def length(self) -> int:
        return len(inversion_set(self))

    def right_descents(self) -> List[int]:
        """Indices i with ell(w s_i) < ell(w)."""
        out = []
        if self.window[0] < 0:
            out.append(0)
        for i in range(1, self.k):
            if self.window[i - 1] > self.window[i]:
                out.append(i)
        return out

    def left_descents(self) -> List[int]:
        return inverse(self).right_descents()

    def reduced_word(self) -> List[int]:
        """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
        word: List[int] = []
        w = self
        gens = generators(self.k)
        while True:
            desc = w.right_descents()
            if not desc:
                break
            i = desc[0]
            word.append(i)
            w = compose(w, gens[i])
        word.reverse()
        return word


def identity(k: int) -> SignedPermutation:
    return SignedPermutation(range(1, k + 1))


def generators(k: int) -> List[SignedPermutation]:
    """``[s_0, s_1, ..., s_{k-1}]``."""
    if k < 1:
        raise DomainError("k must be at least 1")
    gens = [SignedPermutation([-1] + list(range(2, k + 1)))]
    for i in range(1, k):
        win = list(range(1, k + 1))
        win[i - 1], win[i] = win[i], win[i - 1]
        gens.append(SignedPermutation(win))
    return gens


def compose(u: SignedPermutation, w: SignedPermutation) -> SignedPermutation:
    """``(u o w)(i) = u(w(i))``."""
    if u.k != w.k:
        raise SizeMismatch(f"cannot compose k={u.k} with k={w.k}")
    return SignedPermutation([u(x) for x in w.window])


def inverse(w: SignedPermutation) -> SignedPermutation:
    win = [0] * w.k
    for i, x in enumerate(w.window, start=1):
        if x > 0:
            win[x - 1] = i
        else:
            win[-x - 1] = -i
    return SignedPermutation(win)


def inversion_set(w: SignedPermutation) -> frozenset:
    """R(w) = {alpha in R+ : w alpha not in R+} via the explicit case description."""
    win = w.window
    k = len(win)
    out = []
    for i in range(1, k + 1):
        wi = win[i - 1]
        if wi < 0:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            wj = win[j - 1]
            if wi > wj:
                out.append(Root.minus(j, i))
            if -wi > wj:
                out.append(Root.plus(j, i))
    return frozenset(out)


@dataclass(frozen=True)
class WeightVector:
    """A weight (z, c_1, ..., c_k): ``z`` is kept as given, ``c2`` holds the doubled c_i."""

    c2: Tuple[int, ...]
    z: object = None

    @property
    def k(self) -> int:
        return len(self.c2)


def act_on_tuple(w: SignedPermutation, values: Sequence, negate=lambda x: -x) -> tuple:
    """``(w v)_i = v_{w^{-1}(i)}`` where ``v_{-i}`` is ``negate(v_i)``.

    ``negate`` lets callers act on multiplicative weights (use inversion).
    """
    if len(values) != w.k:
        raise SizeMismatch(f"weight of length {len(values)} for k={w.k}")
    winv = inverse(w)
    out = []
    for i in range(1, w.k + 1):
        src = winv(i)
        out.append(values[src - 1] if src > 0 else negate(values[-src - 1]))
    return tuple(out)


def act_on_weight(w: SignedPermutation, v: WeightVector) -> WeightVector:
    return WeightVector(tuple(act_on_tuple(w, v.c2)), v.z)


def enumerate_group(k: int, bound: Optional[int] = None) -> Iterator[SignedPermutation]:
    """Every element of W_0 exactly once, in lexicographic window order."""
    limit = max_k() if bound is None else bound
    if k > limit:
        raise BoundExceeded(f"k={k} exceeds the brute-force bound {limit}")
    if k < 0:
        raise DomainError("k must be nonnegative")
    signs = sorted(itertools.product((-1, 1), repeat=k))
    windows = [tuple(s * p for s, p in zip(sg, perm)) for perm in itertools.permutations(range(1, k + 1)) for sg in signs]
    for win in sorted(windows):
        yield SignedPermutation(win)

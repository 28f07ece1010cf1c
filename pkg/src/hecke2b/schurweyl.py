"""Schur-Weyl combinatorics for ``M = L(a^c)``, ``N = L(b^d)`` and ``V = L(box)`` over gl_n.

The irreducible summands of ``M (x) N (x) V^{(x)k}`` are indexed by the
partitions at level k of a Bratteli diagram: level -1 is ``(a^c)``, level 0
holds the summands of ``M (x) N`` and each later level adds one box.  The
multiplicity space of ``L(lambda)`` carries a calibrated Hecke module with a
basis of paths to ``lambda``; this module builds that basis, its eigenvalue
data and its generator matrices, and maps ``lambda`` to the data
``(z, c, J)`` of the matching calibrated module.

Boxes are ``(row, col)`` pairs, 1-based, with content ``col - row``.  Shifted
contents are stored doubled: ``2 c~(box) = 2 (col - row) - (a - c + b - d)``.
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    BoundExceeded,
    DomainError,
    GenericityViolated,
    InconsistentPath,
    InconsistentRegion,
    NotReachable,
    NotSkew,
    TooManyRows,
)
from .hecke import (
    CalibratedModule,
    GenericModule,
    HeckeParams,
    build_calibrated,
    generalized_weight_spaces,
    is_irreducible,
    relations_pass,
    verify_relations,
)
from .linalg import Matrix
from .regions import (
    BoxConfiguration,
    ContentVector,
    LocalRegion,
    _constraint_edges,
    configuration,
    is_skew,
    z_set,
)
from .scalar import I, ONE, ScalarValue, approx_sqrt, coerce, int_power, parse_scalar, to_complex
from .weyl import Root, SignedPermutation, compose, inverse, inversion_set, max_k

__all__ = [
    "Partition",
    "RectPair",
    "Level0Vertex",
    "BratteliDiagram",
    "Path",
    "ZcJ",
    "PathModule",
    "content",
    "shifted2",
    "rect_tensor",
    "add_box_expansion",
    "bratteli",
    "paths_to",
    "iter_paths",
    "count_paths",
    "path_from_filling",
    "s0max",
    "index_boxes",
    "c0_doubled",
    "lambda_to_zcJ",
    "path_to_w",
    "s_move",
    "build_path_module",
    "path_intertwiner_check",
    "configuration_from_lambda",
    "dim_gl",
    "ssyt_count",
    "dimension_identity",
    "verify_path_module",
]

Box = Tuple[int, int]


# -- partitions --------------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros are dropped)."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise DomainError(f"negative part in {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"{list(parts)} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def parse(text: str) -> "Partition":
        """``"9,9,6"`` or ``"(9,9,6)"``; an empty string is the empty partition."""
        s = text.strip().strip("()[]").replace(" ", "")
        if not s:
            return Partition()
        try:
            return Partition(tuple(int(x) for x in s.split(",") if x))
        except ValueError as exc:
            raise DomainError(f"cannot parse partition {text!r}") from exc

    @staticmethod
    def rectangle(width: int, height: int) -> "Partition":
        return Partition((width,) * height)

    def __len__(self) -> int:
        return len(self.parts)

    def row(self, i: int) -> int:
        """Length of row i (1-based); 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self) -> List[Box]:
        return [(r, j) for r, length in enumerate(self.parts, start=1) for j in range(1, length + 1)]

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self.row(i) >= other.row(i) for i in range(1, len(other) + 1))

    def content_sum(self) -> int:
        return sum(length * (length + 1) // 2 - r * length for r, length in enumerate(self.parts, start=1))

    def addable_rows(self) -> List[int]:
        return [i for i in range(1, len(self) + 2) if i == 1 or self.row(i - 1) > self.row(i)]

    def removable_rows(self) -> List[int]:
        return [i for i in range(1, len(self) + 1) if self.row(i) > self.row(i + 1)]

    def add_box(self, i: int) -> "Partition":
        parts = list(self.parts) + [0]
        parts[i - 1] += 1
        return Partition(tuple(parts))

    def remove_box(self, i: int) -> "Partition":
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(tuple(parts))

    def skew_boxes(self, inner: "Partition") -> List[Box]:
        """Boxes of ``self / inner`` in row-major order."""
        if not self.contains(inner):
            raise DomainError(f"{inner} is not contained in {self}")
        return [(r, j) for r in range(1, len(self) + 1) for j in range(inner.row(r) + 1, self.row(r) + 1)]

    def with_box(self, box: Box) -> Optional["Partition"]:
        """``self`` plus one box, or None when the result is not a partition."""
        r, j = box
        if self.row(r) != j - 1 or (r > 1 and self.row(r - 1) < j):
            return None
        return self.add_box(r)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"

    def to_json(self) -> List[int]:
        return list(self.parts)


def _as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(tuple(x))


def content(box: Box) -> int:
    return box[1] - box[0]


# -- rectangle pairs -----------------------------------------------------------------------------


@dataclass(frozen=True)
class RectPair:
    """The rectangles ``(a^c)`` and ``(b^d)`` together with the value of q.

    ``r1`` and ``r2`` are doubled: ``2 r_1 = (a + c) - (b + d)`` and
    ``2 r_2 = a + c + b + d``.  ``shift`` is ``a - c + b - d``, twice the
    amount subtracted from contents to get shifted contents.
    """

    a: int
    c: int
    b: int
    d: int
    q: ScalarValue = field(default_factory=lambda: coerce(2))
    root_bound: int = 64

    def __post_init__(self):
        for name in ("a", "c", "b", "d"):
            v = int(getattr(self, name))
            if v <= 0:
                raise DomainError(f"{name} must be a positive integer, got {v}")
            object.__setattr__(self, name, v)
        qv = parse_scalar(self.q) if isinstance(self.q, str) else coerce(self.q)
        if qv is NotImplemented or not qv:
            raise DomainError(f"q must be a nonzero scalar, got {self.q!r}")
        object.__setattr__(self, "q", qv)

    @staticmethod
    def parse(text: str, q=2) -> "RectPair":
        try:
            a, c, b, d = (int(x) for x in text.replace(" ", "").split(","))
        except ValueError as exc:
            raise DomainError(f"--rect expects a,c,b,d; got {text!r}") from exc
        return RectPair(a, c, b, d, q)

    @property
    def r1(self) -> int:
        return (self.a + self.c) - (self.b + self.d)

    @property
    def r2(self) -> int:
        return self.a + self.c + self.b + self.d

    @property
    def shift(self) -> int:
        return self.a - self.c + self.b - self.d

    @property
    def swapped(self) -> bool:
        """True when c < d, so level 0 is built with the roles of the rectangles exchanged."""
        return self.c < self.d

    def frame(self) -> Tuple[int, int, int, int]:
        """``(A, C, B, D)`` with ``C >= D`` used to draw the level-0 partitions."""
        if self.swapped:
            return self.b, self.d, self.a, self.c
        return self.a, self.c, self.b, self.d

    @property
    def note(self) -> Optional[str]:
        if self.swapped:
            return "c < d: level 0 is built from L(b^d) (x) L(a^c); the Hecke parameters keep M = L(a^c) first"
        return None

    @property
    def top(self) -> Partition:
        """The level -1 vertex ``(a^c)``."""
        return Partition.rectangle(self.a, self.c)

    def genericity_problems(self) -> List[str]:
        out = []
        for n in range(1, self.root_bound + 1):
            if int_power(self.q, n) == ONE:
                out.append(f"q is a root of unity of order {n}")
                break
        if self.r1 in (0, 1, -1, 2, -2):
            out.append(f"(a+c)-(b+d) = {self.r1} lies in {{0, +-1, +-2}}")
        return out

    def require_generic(self) -> None:
        problems = self.genericity_problems()
        if problems:
            raise GenericityViolated("; ".join(problems))

    def params(self, check: bool = True) -> HeckeParams:
        return HeckeParams.from_rectangles(self.a, self.c, self.b, self.d, self.q, check=check)

    def to_json(self) -> dict:
        out = {"a": self.a, "c": self.c, "b": self.b, "d": self.d, "q": str(self.q)}
        if self.note:
            out["note"] = self.note
        return out


def shifted2(box: Box, p: RectPair) -> int:
    """Doubled shifted content ``2 c~(box)``."""
    return 2 * content(box) - p.shift


# -- level 0 ----------------------------------------------------------------------------------------


class Level0Vertex(NamedTuple):
    mu: Partition
    shape: Partition
    e0: int


def _ring(mu: Partition, p: RectPair) -> Partition:
    """The level-0 partition attached to ``mu`` inside the ``min(A,B) x D`` rectangle."""
    A, C, B, D = p.frame()
    m, M = min(A, B), max(A, B)
    rows = [M + mu.row(i) for i in range(1, D + 1)]
    rows += [A] * (C - D)
    rows += [m - mu.row(D + 1 - i) for i in range(1, D + 1)]
    return Partition(tuple(rows))


def e0_label(shape: Partition, p: RectPair) -> int:
    """``-(ac/2)(a-c) - (bd/2)(b-d) + sum of contents``; always an integer."""
    a, c, b, d = p.a, p.c, p.b, p.d
    return -(a * c * (a - c) + b * d * (b - d)) // 2 + shape.content_sum()


def _sub_partitions(width: int, height: int) -> Iterator[Partition]:
    def rec(prefix: Tuple[int, ...], cap: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == height:
            yield prefix
            return
        for x in range(cap, -1, -1):
            yield from rec(prefix + (x,), x)

    for parts in rec((), width):
        yield Partition(parts)


def rect_tensor(p: RectPair) -> List[Level0Vertex]:
    """The summands of ``L(a^c) (x) L(b^d)`` with their level-0 edge labels.

    Ordered by ``mu`` from largest to smallest in reverse lexicographic order.
    The combinatorics does not depend on q; nongeneric parameters only warn.
    """
    problems = p.genericity_problems()
    if problems:
        warnings.warn("; ".join(problems), stacklevel=2)
    return _level0(p)


@functools.lru_cache(maxsize=None)
def _level0_cached(a: int, c: int, b: int, d: int) -> Tuple[Level0Vertex, ...]:
    p = RectPair(a, c, b, d)
    A, C, B, D = p.frame()
    out = []
    for mu in _sub_partitions(min(A, B), D):
        shape = _ring(mu, p)
        out.append(Level0Vertex(mu, shape, e0_label(shape, p)))
    return tuple(out)


def _level0(p: RectPair) -> List[Level0Vertex]:
    return list(_level0_cached(p.a, p.c, p.b, p.d))


def _level0_shapes(p: RectPair) -> Dict[Partition, int]:
    return {v.shape: v.e0 for v in _level0(p)}


def add_box_expansion(mu, n_bound: Optional[int] = None) -> List[Tuple[Partition, int]]:
    """Every partition obtained by adding one box to ``mu``, labeled by the box content."""
    mu = _as_partition(mu)
    out = []
    for i in mu.addable_rows():
        if n_bound is not None and i > n_bound:
            continue
        out.append((mu.add_box(i), mu.row(i) + 1 - i))
    return out


# -- Bratteli diagram ---------------------------------------------------------------------------


@dataclass
class BratteliDiagram:
    """Levels ``-1 .. k`` and labeled edges ``(source level, source, target, label)``."""

    rect: RectPair
    k: int
    levels: Dict[int, List[Partition]]
    edges: List[Tuple[int, Partition, Partition, int]]
    n_bound: Optional[int] = None

    @property
    def note(self) -> Optional[str]:
        return self.rect.note

    def vertex_count(self, level: int) -> int:
        return len(self.levels[level])

    def out_edges(self, level: int, mu) -> List[Tuple[Partition, int]]:
        mu = _as_partition(mu)
        return [(t, lab) for lev, s, t, lab in self.edges if lev == level and s == mu]

    def in_edges(self, level: int, lam) -> List[Tuple[Partition, int]]:
        """Edges into ``lam`` (which sits at ``level``) as (source, label)."""
        lam = _as_partition(lam)
        return [(s, lab) for lev, s, t, lab in self.edges if lev == level - 1 and t == lam]

    def to_json(self) -> dict:
        out = {
            "rect": self.rect.to_json(),
            "k": self.k,
            "levels": {str(lev): [v.to_json() for v in vs] for lev, vs in sorted(self.levels.items())},
            "edges": [
                {"level": lev, "source": s.to_json(), "target": t.to_json(), "label": lab}
                for lev, s, t, lab in self.edges
            ],
        }
        if self.n_bound is not None:
            out["n_bound"] = self.n_bound
        if self.note:
            out["note"] = self.note
        return out

    def to_dot(self) -> str:
        ids: Dict[Tuple[int, Partition], str] = {}
        lines = ["digraph bratteli {", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
        if self.note:
            lines.append(f'  label="{self.note}";')
        for lev in sorted(self.levels):
            names = []
            for pos, v in enumerate(self.levels[lev]):
                name = f"L{lev}_{pos}".replace("-", "m")
                ids[(lev, v)] = name
                names.append(name)
                lines.append(f'  {name} [label="{v}"];')
            lines.append("  { rank=same; " + " ".join(names) + " }")
        for lev, s, t, lab in self.edges:
            lines.append(f'  {ids[(lev, s)]} -> {ids[(lev + 1, t)]} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def bratteli(p: RectPair, k: int, n_bound: Optional[int] = None) -> BratteliDiagram:
    """Levels -1 through k; with ``n_bound`` partitions with more rows are dropped."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    limit = max_k()
    if k > limit:
        raise BoundExceeded(f"k={k} exceeds the bound {limit} (set HECKE2B_MAX_K to raise it)")
    top = p.top
    level0 = [v for v in _level0(p) if n_bound is None or len(v.shape) <= n_bound]
    levels: Dict[int, List[Partition]] = {-1: [top], 0: [v.shape for v in level0]}
    edges: List[Tuple[int, Partition, Partition, int]] = [(-1, top, v.shape, v.e0) for v in level0]
    for lev in range(k):
        seen: Dict[Partition, None] = {}
        for mu in levels[lev]:
            for lam, lab in add_box_expansion(mu, n_bound):
                edges.append((lev, mu, lam, lab))
                seen.setdefault(lam, None)
        levels[lev + 1] = sorted(seen, reverse=True)
    return BratteliDiagram(p, k, levels, edges, n_bound)


# -- paths ------------------------------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """A path ``(a^c) -> S^(0) -> S^(1) -> ... -> S^(k)``; ``shapes[j]`` is ``S^(j)``."""

    shapes: Tuple[Partition, ...]

    def __post_init__(self):
        shapes = tuple(_as_partition(s) for s in self.shapes)
        if not shapes:
            raise InconsistentPath("a path needs at least its level-0 vertex")
        for j in range(1, len(shapes)):
            prev, cur = shapes[j - 1], shapes[j]
            if not cur.contains(prev) or cur.size != prev.size + 1:
                raise InconsistentPath(f"step {j}: {cur} is not {prev} plus one box")
        object.__setattr__(self, "shapes", shapes)

    @property
    def k(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    def box(self, j: int) -> Box:
        """The box ``S^(j) / S^(j-1)`` for ``1 <= j <= k``."""
        (b,) = self.shapes[j].skew_boxes(self.shapes[j - 1])
        return b

    def boxes(self) -> List[Box]:
        return [self.box(j) for j in range(1, self.k + 1)]

    def filling(self) -> Dict[Box, int]:
        return {b: j for j, b in enumerate(self.boxes(), start=1)}

    def to_json(self) -> dict:
        return {"shapes": [s.to_json() for s in self.shapes], "boxes": [list(b) for b in self.boxes()]}


def path_from_filling(start, filling: Mapping[Box, int]) -> Path:
    """The path that starts at ``start`` and adds the box holding j at step j."""
    shape = _as_partition(start)
    order = sorted(filling.items(), key=lambda kv: kv[1])
    if [v for _, v in order] != list(range(1, len(order) + 1)):
        raise InconsistentPath("filling entries must be 1..k")
    shapes = [shape]
    for b, _ in order:
        nxt = shapes[-1].with_box(tuple(b))
        if nxt is None:
            raise InconsistentPath(f"adding box {b} to {shapes[-1]} is not a partition")
        shapes.append(nxt)
    return Path(tuple(shapes))


def _s0max_or_none(lam: Partition, p: RectPair) -> Optional[Partition]:
    A, C, B, D = p.frame()
    m = min(A, B)
    mu_c = [min(lam.row(C + i), m) for i in range(1, D + 1)]
    mu = Partition(tuple(m - mu_c[D - j] for j in range(1, D + 1)))
    shape = _ring(mu, p)
    return shape if lam.contains(shape) else None


def s0max(lam, p: RectPair) -> Partition:
    """The largest level-0 partition inside ``lam`` (its B' block is ``lam`` cut to B')."""
    lam = _as_partition(lam)
    shape = _s0max_or_none(lam, p)
    if shape is None:
        raise NotReachable(f"{lam} contains no level-0 partition for {p.frame()}")
    return shape


def _check_level(lam: Partition, p: RectPair, k: int) -> None:
    expected = p.a * p.c + p.b * p.d + k
    if lam.size != expected:
        raise NotReachable(f"{lam} has {lam.size} boxes; level {k} partitions have {expected}")


def iter_paths(p: RectPair, lam, k: int) -> Iterator[Path]:
    """All paths to ``lam`` at level k, by removing boxes back to level 0."""
    lam = _as_partition(lam)
    _check_level(lam, p, k)
    level0 = _level0_shapes(p)

    def back(shape: Partition, j: int, tail: Tuple[Partition, ...]) -> Iterator[Path]:
        if j == 0:
            if shape in level0:
                yield Path((shape,) + tail)
            return
        for r in reversed(shape.removable_rows()):
            prev = shape.remove_box(r)
            if _s0max_or_none(prev, p) is not None:
                yield from back(prev, j - 1, (shape,) + tail)

    yield from back(lam, k, ())


def count_paths(p: RectPair, lam, k: int) -> int:
    """``|T_k^lam|`` without listing the paths."""
    lam = _as_partition(lam)
    _check_level(lam, p, k)
    level0 = _level0_shapes(p)

    @functools.lru_cache(maxsize=None)
    def count(shape: Partition, j: int) -> int:
        if j == 0:
            return 1 if shape in level0 else 0
        total = 0
        for r in shape.removable_rows():
            prev = shape.remove_box(r)
            if _s0max_or_none(prev, p) is not None:
                total += count(prev, j - 1)
        return total

    return count(lam, k)


def paths_to(diagram: BratteliDiagram, lam) -> List[Path]:
    """``T_k^lam`` read off the diagram by backward traversal."""
    lam = _as_partition(lam)
    if lam not in diagram.levels.get(diagram.k, []):
        raise NotReachable(f"{lam} is not a vertex on level {diagram.k}")
    preds: Dict[Tuple[int, Partition], List[Partition]] = {}
    for lev, s, t, _ in diagram.edges:
        if lev >= 0:
            preds.setdefault((lev + 1, t), []).append(s)
    out: List[Path] = []

    def back(shape: Partition, j: int, tail: Tuple[Partition, ...]) -> None:
        if j == 0:
            out.append(Path((shape,) + tail))
            return
        for prev in preds.get((j, shape), []):
            back(prev, j - 1, (shape,) + tail)

    back(lam, diagram.k, ())
    return sorted(out, key=lambda s: [x.parts for x in s.shapes])


# -- lambda -> (z, c, J) ----------------------------------------------------------------------------


def _index_key(box: Box, p: RectPair) -> Tuple[int, int, int]:
    x = shifted2(box, p)
    if x < 0:
        return (-x, 0, -box[0])
    return (x, 1, box[0])


def index_boxes(boxes: Sequence[Box], p: RectPair) -> List[Box]:
    """Order boxes so that ``|c~|`` weakly increases, negative shifted contents
    come before positive ones of the same size, equal negative values run SE to
    NW and equal nonnegative values run NW to SE."""
    return sorted(boxes, key=lambda b: _index_key(b, p))


def c0_doubled(lam, p: RectPair, k: int) -> int:
    """``2 c_0`` where ``z = (-1)^k q^{2 c_0}``."""
    lam = _as_partition(lam)
    a, c, b, d = p.a, p.c, p.b, p.d
    return -(k * p.shift + a * c * (a - c) + b * d * (b - d)) + 2 * lam.content_sum()


def _zeta(lam: Partition, p: RectPair, k: int) -> ScalarValue:
    z = int_power(p.q, c0_doubled(lam, p, k))
    return -z if k % 2 else z


def _nw(u: Box, v: Box) -> bool:
    return u != v and u[0] <= v[0] and u[1] <= v[1]


def _j_from_boxes(boxes: Sequence[Box], p: RectPair) -> FrozenSet[Root]:
    xs = [shifted2(b, p) for b in boxes]
    neg_marks = {-abs(p.r1), -abs(p.r2)}
    out = []
    k = len(boxes)
    for i in range(1, k + 1):
        xi, bi = xs[i - 1], boxes[i - 1]
        if xi in neg_marks:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            xj, bj = xs[j - 1], boxes[j - 1]
            if (
                (xj == xi + 2 and xj > 0 and _nw(bj, bi))
                or (xj == xi - 2 and xj < 0 and _nw(bi, bj))
                or (xj == -xi - 2 and xj < 0 <= xi)
            ):
                out.append(Root.minus(j, i))
            if (
                (xj == -2 and xi == 0 and _nw(bi, bj))
                or (xj == 1 and xi == -1 and _nw(bj, bi))
                or (xj == -1 and xi == -1)
            ):
                out.append(Root.plus(j, i))
    return frozenset(out)


class ZcJ(NamedTuple):
    z: ScalarValue
    c: ContentVector
    J: FrozenSet[Root]

    @property
    def region(self) -> LocalRegion:
        return LocalRegion(self.c, self.J)


def lambda_to_zcJ(lam, p: RectPair, k: int, check_skew: bool = True, check_generic: bool = True) -> ZcJ:
    """``(z, c, J)`` of the calibrated module isomorphic to the multiplicity space of ``lam``.

    ``check_generic=False`` skips the genericity test so the combinatorial data
    can be read off at nongeneric rectangles; no module is built in that case.
    """
    lam = _as_partition(lam)
    if check_generic:
        p.require_generic()
    _check_level(lam, p, k)
    start = s0max(lam, p)
    boxes = index_boxes(lam.skew_boxes(start), p)
    c2 = tuple(abs(shifted2(b, p)) for b in boxes)
    cv = ContentVector(c2, p.r1, p.r2)
    J = _j_from_boxes(boxes, p)
    try:
        region = LocalRegion(cv, J)
    except DomainError as exc:
        raise InconsistentRegion(f"J read off {lam} is not inside P(c): {exc}") from exc
    if check_skew and k and not is_skew(region):
        raise NotSkew(f"the local region attached to {lam} is not skew")
    return ZcJ(_zeta(lam, p, k), cv, J)


def _path_data(S: Path, p: RectPair) -> Tuple[List[Box], List[int], ContentVector]:
    boxes = index_boxes(S.shape.skew_boxes(S.shapes[0]), p)
    c2 = tuple(abs(shifted2(b, p)) for b in boxes)
    return boxes, [shifted2(S.box(j), p) for j in range(1, S.k + 1)], ContentVector(c2, p.r1, p.r2)


def path_to_w(S: Path, p: RectPair) -> SignedPermutation:
    """The signed permutation ``w_S``: ``w_S(i) = sgn(c~(box_i)) * (step adding box_i)``."""
    if S.k == 0:
        return SignedPermutation(())
    boxes, steps, cv = _path_data(S, p)
    fill = S.filling()
    w = SignedPermutation([(-1 if shifted2(b, p) < 0 else 1) * fill[b] for b in boxes])
    winv = inverse(w)
    wc = [cv.signed(winv(j)) for j in range(1, S.k + 1)]
    if wc != steps:
        raise InconsistentPath(f"w_S c = {wc} differs from the path contents {steps}")
    if inversion_set(w) & z_set(cv):
        raise InconsistentPath("R(w_S) meets Z(c)")
    return w


def s_move(S: Path, j: int, p: RectPair) -> Optional[Path]:
    """The path ``s_j S`` that differs from S only at level j, or None."""
    if not 0 <= j < S.k:
        raise DomainError(f"s_{j} is not defined for paths of length {S.k}")
    shapes = list(S.shapes)
    if j == 0:
        level0 = _level0_shapes(p)
        here = shapes[0]
        for r in shapes[1].removable_rows():
            other = shapes[1].remove_box(r)
            if other != here and other in level0:
                shapes[0] = other
                return Path(tuple(shapes))
        return None
    alt = shapes[j - 1].with_box(S.box(j + 1))
    if alt is None:
        return None
    shapes[j] = alt
    return Path(tuple(shapes))


# -- the path module ------------------------------------------------------------------------------


class PathModule(GenericModule):
    """The multiplicity space of ``L(lam)`` on the basis ``{v_S}`` of paths."""

    def __init__(self, lam, rect, k, paths, words, weights, mats, params, z, backend):
        self.lam = lam
        self.rect = rect
        self.paths = list(paths)
        self.words = list(words)
        self.weights = list(weights)
        super().__init__(
            [str(list(w.window)) for w in self.words],
            mats,
            params,
            k,
            z=z,
            backend=backend,
            weight_candidates=self.weights,
            name=f"path module {lam}",
        )

    def to_json(self) -> dict:
        out = super().to_json()
        out["lambda"] = self.lam.to_json()
        out["rect"] = self.rect.to_json()
        out["paths"] = [s.to_json() for s in self.paths]
        out["w"] = [list(w.window) for w in self.words]
        return out


def build_path_module(lam, p: RectPair, k: int, backend: str = "exact") -> PathModule:
    """Generator matrices on the path basis of ``B_k^lam``.

    ``P``, ``Z_i`` and ``W_i`` are diagonal with eigenvalues ``q^{2 e_0}``,
    ``q^{2 c(box)}`` and ``-q^{2 c~(box)}``.  ``T_i`` and ``Y_1`` have the
    seminormal diagonal entries and couple ``v_S`` with ``v_{s_i S}``.  The exact
    backend puts 1 on the entry that raises ``l(w_S w_0^{-1})`` and the
    product ``-(d - a)(d + a^{-1})`` on the other one (``a = q`` for ``T_i`` and
    ``a = t_0^{1/2}`` for ``T_0``); the float backend splits the product
    symmetrically.  ``Y_1 = i q^{b-d} T_0`` and
    ``X_1 = a_1 + a_2 - a_1 a_2 Y_1 Z_1^{-1}``.
    """
    if backend not in ("exact", "float"):
        raise DomainError(f"unknown backend {backend!r}")
    lam = _as_partition(lam)
    p.require_generic()
    params = p.params()
    paths = list(iter_paths(p, lam, k))
    if not paths:
        raise NotReachable(f"no path reaches {lam} at level {k}")
    words = [path_to_w(S, p) for S in paths]
    order = sorted(range(len(paths)), key=lambda i: words[i].window)
    paths = [paths[i] for i in order]
    words = [words[i] for i in order]
    idx = {S: pos for pos, S in enumerate(paths)}
    n = len(paths)
    q = p.q
    qi = q.inv()
    exact = backend == "exact"
    a, c, b, d = p.a, p.c, p.b, p.d

    conts = [[content(S.box(j)) for j in range(1, k + 1)] for S in paths]
    weights = [tuple(-int_power(q, 2 * x - p.shift) for x in row) for row in conts]
    z = _zeta(lam, p, k)

    w0 = min(words, key=lambda w: (w.length(), w.window))
    w0inv = inverse(w0)
    rel_len = [compose(w, w0inv).length() for w in words]

    def t_diag(S_pos: int, i: int) -> ScalarValue:
        row = conts[S_pos]
        if i == 0:
            c1 = row[0]
            num = (int_power(q, 2 * b) + int_power(q, -2 * d)) - (int_power(q, 2 * a) + int_power(q, -2 * c)) * int_power(
                q, 2 * (b - d) - 2 * c1
            )
            den = ONE - int_power(q, 2 * p.shift - 4 * c1)
            y = num / den
            return y / (I * int_power(q, b - d))
        return (q - qi) / (ONE - int_power(q, 2 * (row[i - 1] - row[i])))

    t0h = params.t0_half
    entries: List[Dict[Tuple[int, int], object]] = []
    for i in range(k):
        alpha = t0h if i == 0 else q
        e: Dict[Tuple[int, int], object] = {}
        for col, S in enumerate(paths):
            dg = t_diag(col, i)
            e[(col, col)] = dg if exact else to_complex(dg)
            other = s_move(S, i, p)
            if other is None:
                continue
            row = idx.get(other)
            if row is None:
                raise InconsistentPath(f"s_{i} moves a path to {lam} outside T_k^lambda")
            prodv = -(dg - alpha) * (dg + alpha.inv())
            if exact:
                e[(row, col)] = ONE if rel_len[row] > rel_len[col] else prodv
            else:
                e[(row, col)] = approx_sqrt(to_complex(prodv))
        entries.append(e)

    if exact:
        def diag(vals):
            return Matrix.diag(list(vals))

        def from_entries(e):
            rows: Dict[int, Dict[int, ScalarValue]] = {}
            for (r, cc), v in e.items():
                rows.setdefault(r, {})[cc] = v
            return Matrix(n, n, rows)

        scal = lambda v: v  # noqa: E731
        inv_diag = lambda m: m.inverse()  # noqa: E731
    else:
        def diag(vals):
            return np.diag(np.array([to_complex(v) for v in vals], dtype=complex))

        def from_entries(e):
            arr = np.zeros((n, n), dtype=complex)
            for (r, cc), v in e.items():
                arr[r, cc] = v
            return arr

        scal = to_complex
        inv_diag = np.linalg.inv

    mats: Dict[str, object] = {"W0": diag([z] * n)}
    for i in range(1, k + 1):
        mats[f"W{i}"] = diag([wt[i - 1] for wt in weights])
    for i in range(k):
        mats[f"T{i}"] = from_entries(entries[i])
    mats["P"] = diag([int_power(q, 2 * e0_label(S.shapes[0], p)) for S in paths])
    for i in range(1, k + 1):
        mats[f"Z{i}"] = diag([int_power(q, 2 * row[i - 1]) for row in conts])
    if k >= 1:
        mats["Y1"] = mats["T0"] * scal(I * int_power(q, b - d))
        a1, a2 = int_power(q, 2 * a), int_power(q, -2 * c)
        ident = diag([ONE] * n)
        mats["X1"] = ident * scal(a1 + a2) - (mats["Y1"] @ inv_diag(mats["Z1"])) * scal(a1 * a2)
    return PathModule(lam, p, k, paths, words, weights, mats, params, z, backend)


def path_intertwiner_check(pm: PathModule, cm: CalibratedModule) -> dict:
    """Compare ``pm`` with ``cm`` under ``v_S -> v_{w_S}``.

    Returns ``{"bijective": ..., "equal_generators": [...], "different_generators": [...]}``.
    When every generator agrees the basis map is an explicit isomorphism.
    """
    pos = {w: i for i, w in enumerate(cm.basis)}
    bij = len(pm.words) == len(cm.basis) and set(pm.words) == set(pos)
    same, diff = [], []
    if bij:
        perm = [pos[w] for w in pm.words]
        for name in pm.generator_names():
            if name not in cm.mats:
                continue
            A, B = pm.mats[name], cm.mats[name]
            ok = all(A[r, cc] == B[perm[r], perm[cc]] for r in range(pm.dim) for cc in range(pm.dim))
            (same if ok else diff).append(name)
    return {"bijective": bij, "equal_generators": same, "different_generators": diff}


def verify_path_module(lam, p: RectPair, k: int) -> dict:
    """Relations, irreducibility, weight-space dimensions and the comparison with
    the calibrated module of ``lambda_to_zcJ(lam)``."""
    pm = build_path_module(lam, p, k)
    report = verify_relations(pm)
    zcj = lambda_to_zcJ(lam, p, k)
    cm = build_calibrated(zcj.z, zcj.region, pm.params)
    spaces = generalized_weight_spaces(pm)
    inter = path_intertwiner_check(pm, cm)
    return {
        "lambda": _as_partition(lam).to_json(),
        "dim": pm.dim,
        "relations": report,
        "relations_pass": relations_pass(report),
        "irreducible": is_irreducible(pm),
        "max_weight_space_dim": max(len(bs) for _, bs in spaces),
        "weights_match": sorted(map(str, pm.weights)) == sorted(map(str, cm.weights)) and pm.z == cm.z,
        "explicit_isomorphism": inter["bijective"] and not inter["different_generators"],
    }


# -- the doubled configuration --------------------------------------------------------------------


def configuration_from_lambda(lam, p: RectPair, k: int) -> BoxConfiguration:
    """The configuration ``rot(lam / S0max)`` together with ``lam / S0max``.

    The i-th box of ``lam / S0max`` in the indexing order is the region's box
    ``i`` when its shifted content is nonnegative and box ``-i`` otherwise; its
    partner is its image under the 180 degree turn that maps the NE corner of
    the rectangle B onto the SW corner of B'.  Every NW relation the region
    records between two boxes is read off these positions.  Boxes of
    ``lam / S0max`` on a marked diagonal lie SE of the marking and their turned
    partners lie NW of it.  The result is checked against
    :func:`regions.configuration` of ``lambda_to_zcJ(lam)``.
    """
    lam = _as_partition(lam)
    zcj = lambda_to_zcJ(lam, p, k, check_skew=False)
    region = zcj.region
    reference = configuration(region)
    if k == 0:
        return reference
    boxes = index_boxes(lam.skew_boxes(s0max(lam, p)), p)
    A, C, B, D = p.frame()
    turn_r, turn_c = C + D + 1, A + B + 1
    pos: Dict[int, Box] = {}
    outer: Dict[int, bool] = {}
    for i, (r, cc) in enumerate(boxes, start=1):
        label = i if shifted2((r, cc), p) >= 0 else -i
        pos[label] = (r, cc)
        pos[-label] = (turn_r - r, turn_c - cc)
        outer[label], outer[-label] = True, False
    edges = set()
    for u, v in _constraint_edges(region):
        if u[0] == "b" and v[0] == "b":
            x, y = u[1], v[1]
            first, second = (x, y) if _nw(pos[x], pos[y]) else (y, x)
            edges.add((("b", first), ("b", second)))
        else:
            box = u if u[0] == "b" else v
            mark = v if u[0] == "b" else u
            edges.add((mark, box) if outer[box[1]] else (box, mark))
    if edges != set(reference.edges):
        raise InconsistentRegion("the doubled skew shape disagrees with the configuration of (c, J)")
    return BoxConfiguration(region, frozenset(edges), reference.depth)


# -- gl_n dimensions ------------------------------------------------------------------------------


def dim_gl(lam, n: int) -> int:
    """Dimension of the gl_n module ``L(lam)`` by the hook-content formula."""
    lam = _as_partition(lam)
    if len(lam) > n:
        raise TooManyRows(f"{lam} has {len(lam)} rows but n = {n}")
    cols = [sum(1 for x in lam.parts if x >= j) for j in range(1, lam.row(1) + 1)]
    num = 1
    den = 1
    for r, j in lam.boxes():
        num *= n + j - r
        den *= (lam.row(r) - j) + (cols[j - 1] - r) + 1
    return num // den


def ssyt_count(lam, n: int) -> int:
    """Number of semistandard tableaux of shape ``lam`` with entries in 1..n (brute force)."""
    lam = _as_partition(lam)
    cells = lam.boxes()
    filled: Dict[Box, int] = {}

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, j = cells[pos]
        lo = max(filled.get((r, j - 1), 1), filled.get((r - 1, j), 0) + 1)
        total = 0
        for v in range(lo, n + 1):
            filled[(r, j)] = v
            total += rec(pos + 1)
        filled.pop((r, j), None)
        return total

    return rec(0)


def dimension_identity(p: RectPair, n: int, k: int) -> dict:
    """Compare ``sum |T_k^lam| dim L(lam)`` with ``dim L(a^c) dim L(b^d) n^k``."""
    diagram = bratteli(p, k, n_bound=n)
    terms = []
    lhs = 0
    for lam in diagram.levels[k]:
        mult = count_paths(p, lam, k)
        dim = dim_gl(lam, n)
        lhs += mult * dim
        terms.append({"lambda": lam.to_json(), "paths": mult, "dim": dim})
    ac = Partition.rectangle(p.a, p.c)
    bd = Partition.rectangle(p.b, p.d)
    rhs = (dim_gl(ac, n) if len(ac) <= n else 0) * (dim_gl(bd, n) if len(bd) <= n else 0) * n**k
    return {"rect": p.to_json(), "n": n, "k": k, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs, "terms": terms}

"""Local regions (c, J), their standard tableaux, box configurations and fillings.

All contents are doubled integers: ``c2[i] = 2*c_{i+1}``.  The marking
diagonals ``r1`` and ``r2`` are stored as nonnegative doubled integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError, InconsistentRegion, NotInRegion
from .weyl import (
    Root,
    SignedPermutation,
    act_on_tuple,
    enumerate_group,
    inversion_set,
)

__all__ = [
    "ContentVector",
    "LocalRegion",
    "BoxConfiguration",
    "StandardFilling",
    "doubled",
    "format_half",
    "z_set",
    "p_set",
    "standard_tableaux",
    "is_skew",
    "skew_violations",
    "configuration",
    "standard_fillings",
    "iter_standard_fillings",
    "count_standard_fillings",
    "skew_by_fillings",
    "is_standard_filling",
    "filling_from_w",
    "w_from_filling",
    "roots_sorted",
    "fixture_local_regions",
    "FIXTURE_MARKINGS",
]


def doubled(x) -> int:
    """Convert an integer or half-integer (int, Fraction, or string like ``"3/2"``) to 2x."""
    f = Fraction(x) if not isinstance(x, Fraction) else x
    d = 2 * f
    if d.denominator != 1:
        raise DomainError(f"{x} is not an integer or half-integer")
    return int(d)


def format_half(d2: int) -> str:
    """Render a doubled integer as ``"n"`` or ``"p/2"``."""
    return str(d2 // 2) if d2 % 2 == 0 else f"{d2}/2"


def roots_sorted(roots: Iterable[Root]) -> List[Root]:
    return sorted(roots)


@dataclass(frozen=True)
class ContentVector:
    """The weight c (doubled) together with the marking diagonals r1, r2 (doubled, >= 0)."""

    c2: Tuple[int, ...]
    r1: int
    r2: int

    def __post_init__(self):
        object.__setattr__(self, "c2", tuple(int(x) for x in self.c2))
        object.__setattr__(self, "r1", abs(int(self.r1)))
        object.__setattr__(self, "r2", abs(int(self.r2)))
        if self.c2 and len({x % 2 for x in self.c2}) > 1:
            raise DomainError("contents must all be integers or all be half-integers")
        if self.r1 == self.r2:
            raise DomainError("marking diagonals r1 and r2 must differ")

    @staticmethod
    def from_values(c: Sequence, r1, r2) -> "ContentVector":
        """Build from undoubled values (ints, Fractions or strings such as ``"1/2"``)."""
        return ContentVector(tuple(doubled(x) for x in c), doubled(r1), doubled(r2))

    @property
    def k(self) -> int:
        return len(self.c2)

    def signed(self, i: int) -> int:
        """Doubled content of box_i for a signed index i."""
        return self.c2[i - 1] if i > 0 else -self.c2[-i - 1]

    def is_canonical(self) -> bool:
        return all(x >= 0 for x in self.c2) and list(self.c2) == sorted(self.c2)

    def markings(self) -> Tuple[int, ...]:
        return tuple(sorted({self.r1, -self.r1, self.r2, -self.r2}))

    def to_json(self) -> dict:
        return {
            "c": [format_half(x) for x in self.c2],
            "r1": format_half(self.r1),
            "r2": format_half(self.r2),
        }


@dataclass(frozen=True)
class LocalRegion:
    """A pair (c, J) with J a subset of P(c)."""

    c: ContentVector
    J: FrozenSet[Root] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        for root in self.J:
            if root.max_index() > self.c.k:
                raise DomainError(f"root {root} out of range for k={self.c.k}")
        if not self.J <= p_set(self.c):
            raise DomainError("J not subset of P(c)")

    @property
    def k(self) -> int:
        return self.c.k

    def to_json(self) -> dict:
        out = self.c.to_json()
        out["J"] = [str(r) for r in roots_sorted(self.J)]
        return out


# -- Z(c), P(c), F^{(c,J)} ----------------------------------------------------------


def z_set(c: ContentVector) -> FrozenSet[Root]:
    out = []
    k = c.k
    for i in range(1, k + 1):
        ci = c.c2[i - 1]
        if ci == 0:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            cj = c.c2[j - 1]
            if cj == ci:
                out.append(Root.minus(j, i))
            if cj + ci == 0:
                out.append(Root.plus(j, i))
    return frozenset(out)


def p_set(c: ContentVector) -> FrozenSet[Root]:
    marks = {c.r1, -c.r1, c.r2, -c.r2}
    out = []
    k = c.k
    for i in range(1, k + 1):
        ci = c.c2[i - 1]
        if ci in marks:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            cj = c.c2[j - 1]
            if abs(cj - ci) == 2:
                out.append(Root.minus(j, i))
            if abs(cj + ci) == 2:
                out.append(Root.plus(j, i))
    return frozenset(out)


def in_region(w: SignedPermutation, z: FrozenSet[Root], p: FrozenSet[Root], J: FrozenSet[Root]) -> bool:
    inv = inversion_set(w)
    return not (inv & z) and (inv & p) == J


def standard_tableaux(region: LocalRegion, via: str = "brute") -> FrozenSet[SignedPermutation]:
    """F^{(c,J)}.

    ``via="brute"`` filters the whole group (bounded by ``HECKE2B_MAX_K``);
    ``via="fillings"`` goes through the standard fillings of the box
    configuration and needs canonical c.
    """
    if via == "fillings":
        kappa = configuration(region)
        return frozenset(w_from_filling(kappa, s) for s in standard_fillings(kappa))
    if via != "brute":
        raise DomainError(f"unknown enumeration method {via!r}")
    z, p = z_set(region.c), p_set(region.c)
    return frozenset(w for w in enumerate_group(region.k) if in_region(w, z, p, region.J))


def _auto_tableaux(region: LocalRegion) -> FrozenSet[SignedPermutation]:
    if region.c.is_canonical():
        return standard_tableaux(region, via="fillings")
    return standard_tableaux(region, via="brute")


def skew_violations(c2: Sequence[int]) -> List[str]:
    """Conditions of the skew test that fail for a (doubled) weight wc."""
    k = len(c2)
    bad = []
    if k >= 1 and c2[0] == 0:
        bad.append("(wc)_1 = 0")
    if k >= 2:
        if c2[1] == 0:
            bad.append("(wc)_2 = 0")
        if c2[0] == -c2[1]:
            bad.append("(wc)_1 = -(wc)_2")
    for i in range(k - 1):
        if c2[i] == c2[i + 1]:
            bad.append(f"(wc)_{i + 1} = (wc)_{i + 2}")
    for i in range(k - 2):
        if c2[i] == c2[i + 2]:
            bad.append(f"(wc)_{i + 1} = (wc)_{i + 3}")
    return bad


def is_skew(region: LocalRegion, tableaux: Optional[Iterable[SignedPermutation]] = None) -> bool:
    """True iff every w in F^{(c,J)} passes the skew conditions on wc.

    An empty F is reported as not skew, since no module is attached to it.
    """
    if tableaux is None and region.c.is_canonical():
        return skew_by_fillings(configuration(region))
    ws = list(_auto_tableaux(region) if tableaux is None else tableaux)
    if not ws:
        return False
    return all(not skew_violations(act_on_tuple(w, region.c.c2)) for w in ws)


# -- box configurations ---------------------------------------------------------------

Node = Tuple[str, int]  # ("b", signed index) or ("m", doubled diagonal)


def _mirror(node: Node) -> Node:
    return (node[0], -node[1])


@dataclass(frozen=True)
class BoxConfiguration:
    """The 2k boxes of a local region with the relative order data.

    ``edges`` holds every recorded relation "a is NW of b" between two boxes
    or between a box and a marking.  ``depth`` is an antisymmetric position
    along the NW-to-SE direction (in quarter-box units) that realizes every
    edge strictly; it is used for rendering and geometric queries only.
    """

    region: LocalRegion
    edges: FrozenSet[Tuple[Node, Node]]
    depth: Dict[Node, int] = field(compare=False, hash=False)

    @property
    def c(self) -> ContentVector:
        return self.region.c

    @property
    def k(self) -> int:
        return self.region.k

    def diagonal(self, x: int) -> int:
        return self.c.signed(x)

    def box_edges(self) -> List[Tuple[int, int]]:
        return sorted((a[1], b[1]) for a, b in self.edges if a[0] == "b" and b[0] == "b")

    def is_nw(self, x: int, y: int) -> Optional[bool]:
        """Whether box_x is NW of box_y when the configuration records it, else None."""
        if (("b", x), ("b", y)) in self.edges:
            return True
        if (("b", y), ("b", x)) in self.edges:
            return False
        return None

    def marking_side(self, x: int) -> Optional[str]:
        """'NW' or 'SE' for a box on a marked diagonal, else None."""
        d = self.diagonal(x)
        if (("b", x), ("m", d)) in self.edges:
            return "NW"
        if (("m", d), ("b", x)) in self.edges:
            return "SE"
        return None

    def position(self, node: Node) -> Tuple[int, int]:
        """(row, column) of a box, or of the box whose NW corner holds a marking.

        Columns satisfy ``col - row = c`` on integer diagonals and
        ``col - row = c - 1/2`` on half-integer ones.
        """
        s2 = self.depth[node]
        d2 = self.c.signed(node[1]) if node[0] == "b" else node[1]
        row = (s2 - d2 - (2 if node[0] == "b" else 0)) // 4
        return row, row + (d2 // 2 if d2 % 2 == 0 else (d2 - 1) // 2)

    def reconstruct(self) -> Tuple[FrozenSet[Root], FrozenSet[Root], FrozenSet[Root]]:
        """Read (Z(c), P(c), J) back off the configuration."""
        k = self.k
        d = self.diagonal
        marks = set(self.c.markings())
        z, p, j = [], [], []
        for i in range(1, k + 1):
            if d(i) == 0:
                z.append(Root.eps(i))
            if d(i) in marks and d(i) != 0:
                p.append(Root.eps(i))
                if self.marking_side(i) == "NW":
                    j.append(Root.eps(i))
            for jj in range(i + 1, k + 1):
                if d(i) == d(jj):
                    z.append(Root.minus(jj, i))
                if d(i) == 0 and d(jj) == 0:
                    z.append(Root.plus(jj, i))
                if abs(d(jj) - d(i)) == 2:
                    p.append(Root.minus(jj, i))
                    if self.is_nw(jj, i):
                        j.append(Root.minus(jj, i))
                if abs(d(jj) - d(-i)) == 2:
                    p.append(Root.plus(jj, i))
                    if self.is_nw(jj, -i):
                        j.append(Root.plus(jj, i))
        return frozenset(z), frozenset(p), frozenset(j)

    def render(self, filling: Optional["StandardFilling"] = None) -> str:
        """ASCII drawing: one cell per box, ``*`` for markings that touch a box."""
        labels: Dict[Tuple[int, int], str] = {}
        for x in [i for i in range(-self.k, self.k + 1) if i]:
            text = str(filling.value(x) if filling else x)
            labels[self.position(("b", x))] = text
        if not labels:
            return ""
        rows = [r for r, _ in labels]
        cols = [c for _, c in labels]
        width = max(len(v) for v in labels.values()) + 1
        lines = []
        for r in range(min(rows), max(rows) + 1):
            cells = []
            for c in range(min(cols), max(cols) + 1):
                cells.append(labels.get((r, c), ".").rjust(width))
            lines.append("".join(cells).rstrip())
        marks = []
        for m in self.c.markings():
            touching = sorted(
                (n[1], "NW" if (n, ("m", m)) in self.edges else "SE")
                for n in (e[0] if e[1] == ("m", m) else e[1] for e in self.edges if ("m", m) in e)
            )
            if touching:
                marks.append(f"marking {format_half(m)}: " + ", ".join(f"box{b} {s}" for b, s in touching))
        return "\n".join(lines + marks)

    def to_json(self) -> dict:
        boxes = []
        for x in [i for i in range(-self.k, self.k + 1) if i]:
            r, c = self.position(("b", x))
            boxes.append({"box": x, "diagonal": format_half(self.diagonal(x)), "row": r, "col": c})
        marks = []
        for m in self.c.markings():
            r, c = self.position(("m", m))
            marks.append({"diagonal": format_half(m), "row": r, "col": c})
        return {
            "boxes": boxes,
            "markings": marks,
            "nw_relations": [[a, b] for a, b in self.box_edges()],
        }


def _constraint_edges(region: LocalRegion) -> List[Tuple[Node, Node]]:
    c = region.c
    k = c.k
    J = region.J
    P = p_set(c)
    edges: List[Tuple[Node, Node]] = []

    def nw(a: Node, b: Node) -> None:
        edges.append((a, b))
        edges.append((_mirror(b), _mirror(a)))

    signed = [i for i in range(-k, k + 1) if i]
    for a in signed:
        for b in signed:
            if a < b and c.signed(a) == c.signed(b):
                edges.append((("b", a), ("b", b)))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            r = Root.minus(j, i)
            if r in P:
                if r in J:
                    nw(("b", j), ("b", i))
                else:
                    nw(("b", i), ("b", j))
            r = Root.plus(j, i)
            if r in P:
                if r in J:
                    nw(("b", j), ("b", -i))
                else:
                    nw(("b", -i), ("b", j))
        r = Root.eps(i)
        if r in P:
            m = ("m", c.c2[i - 1])
            if r in J:
                nw(("b", i), m)
            else:
                nw(m, ("b", i))
    return sorted(set(edges))


def configuration(region: LocalRegion) -> BoxConfiguration:
    """Place the 2k boxes and four markings per the location, order and marking rules."""
    c = region.c
    if not c.is_canonical():
        raise DomainError("configuration needs canonical contents 0 <= c_1 <= ... <= c_k")
    if 0 in (c.r1, c.r2):
        raise DomainError("marking diagonals must be nonzero")
    edges = _constraint_edges(region)
    nodes: List[Node] = [("b", i) for i in range(-c.k, c.k + 1) if i]
    nodes += [("m", m) for m in c.markings()]
    succ: Dict[Node, List[Node]] = {n: [] for n in nodes}
    indeg: Dict[Node, int] = {n: 0 for n in nodes}
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    height: Dict[Node, int] = {n: 0 for n in nodes}
    ready = sorted(n for n in nodes if indeg[n] == 0)
    seen = 0
    while ready:
        n = ready.pop()
        seen += 1
        for m in succ[n]:
            height[m] = max(height[m], height[n] + 1)
            indeg[m] -= 1
            if indeg[m] == 0:
                ready.append(m)
    if seen != len(nodes):
        raise InconsistentRegion("the order constraints of this region contain a cycle")
    depth: Dict[Node, int] = {}
    for n in nodes:
        d = height[n] - height[_mirror(n)]
        if n[0] == "b":
            d2 = c.signed(n[1])
            depth[n] = 4 * d + d2 + (2 if n[1] > 0 else -2)
        else:
            depth[n] = 4 * d + n[1]
    _compact(depth, edges)
    return BoxConfiguration(region, frozenset(edges), depth)


def _compact(depth: Dict[Node, int], edges: Sequence[Tuple[Node, Node]]) -> None:
    """Slide mirror pairs toward the centre while every edge stays strict."""
    touching: Dict[Node, List[Tuple[Node, Node]]] = {n: [] for n in depth}
    for e in edges:
        touching[e[0]].append(e)
        touching[e[1]].append(e)
    reps = sorted(n for n in depth if n[1] > 0)
    moved = True
    while moved:
        moved = False
        for n in reps:
            cur = depth[n]
            step = -4 if cur > 0 else 4
            if abs(cur + step) >= abs(cur):
                continue
            mirror = _mirror(n)
            depth[n], depth[mirror] = cur + step, -(cur + step)
            if all(depth[a] < depth[b] for a, b in touching[n] + touching[mirror]):
                moved = True
            else:
                depth[n], depth[mirror] = cur, -cur


# -- standard fillings -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class StandardFilling:
    """A filling S with S(box_{-i}) = -S(box_i); ``values[i-1] = S(box_i)``."""

    values: Tuple[int, ...]

    def value(self, x: int) -> int:
        return self.values[x - 1] if x > 0 else -self.values[-x - 1]

    def to_json(self) -> dict:
        return {str(i): v for i, v in enumerate(self.values, start=1)}


def _filling_ok(kappa: BoxConfiguration, s: StandardFilling) -> bool:
    for a, b in kappa.edges:
        if a[0] == "b" and b[0] == "b":
            if not s.value(a[1]) < s.value(b[1]):
                return False
        elif a[0] == "b":  # box NW of marking
            if not s.value(a[1]) < 0:
                return False
        else:  # box SE of marking
            if not s.value(b[1]) > 0:
                return False
    return True


def is_standard_filling(kappa: BoxConfiguration, s: StandardFilling) -> bool:
    if sorted(abs(v) for v in s.values) != list(range(1, kappa.k + 1)):
        return False
    return _filling_ok(kappa, s)


def _filling_dag(kappa: BoxConfiguration) -> Tuple[Dict[int, Tuple[int, ...]], FrozenSet[int]]:
    """Box predecessors (NW neighbours) and the boxes forced positive by a marking."""
    k = kappa.k
    preds: Dict[int, List[int]] = {x: [] for x in range(-k, k + 1) if x}
    positive = set()
    for a, b in kappa.edges:
        if a[0] == "b" and b[0] == "b":
            preds[b[1]].append(a[1])
        elif a[0] == "m":
            positive.add(b[1])
    return {x: tuple(v) for x, v in preds.items()}, frozenset(positive)


def iter_standard_fillings(kappa: BoxConfiguration) -> Iterator[StandardFilling]:
    """Lazily yield every standard filling.

    The negative values -k, ..., -1 are handed out in increasing order, each
    to a box whose NW neighbours already hold negative values and which is not
    SE of a marking; the mirror box receives the opposite value.  Every
    recorded order relation then holds by construction.
    """
    k = kappa.k
    preds, positive = _filling_dag(kappa)
    order = sorted(preds)
    assign: Dict[int, int] = {}

    def dfs(v: int) -> Iterator[StandardFilling]:
        if v == 0:
            yield StandardFilling(tuple(assign[i] for i in range(1, k + 1)))
            return
        for x in order:
            if x in assign or x in positive:
                continue
            if all(assign.get(p, 0) < 0 for p in preds[x]):
                assign[x] = v
                assign[-x] = -v
                yield from dfs(v + 1)
                del assign[x]
                del assign[-x]

    yield from dfs(-k)


def standard_fillings(kappa: BoxConfiguration) -> List[StandardFilling]:
    """All standard fillings, sorted by their value tuples."""
    return sorted(iter_standard_fillings(kappa))


def count_standard_fillings(kappa: BoxConfiguration) -> int:
    """Number of standard fillings, by memoizing over the set of negatively filled boxes."""
    k = kappa.k
    preds, positive = _filling_dag(kappa)
    memo: Dict[FrozenSet[int], int] = {}

    def count(neg: FrozenSet[int]) -> int:
        if len(neg) == k:
            return 1
        if neg in memo:
            return memo[neg]
        total = 0
        for x in preds:
            if x in neg or -x in neg or x in positive:
                continue
            if all(p in neg for p in preds[x]):
                total += count(neg | {x})
        memo[neg] = total
        return total

    return count(frozenset())


def skew_by_fillings(kappa: BoxConfiguration) -> bool:
    """The skew test run over all standard fillings without listing them.

    With S = S_w, the entry (wc)_i is the diagonal of the box holding i.  Every
    skew condition compares the boxes holding -i, -i-1 and -i-2, which are
    consecutive in the filling order used by :func:`iter_standard_fillings`,
    so a memoized search over (filled set, last two boxes) suffices.
    """
    k = kappa.k
    preds, positive = _filling_dag(kappa)
    diag = kappa.diagonal
    memo: Dict[Tuple[FrozenSet[int], int, int], bool] = {}

    def ok(neg: FrozenSet[int], prev1: int, prev2: int) -> bool:
        # prev1 holds the latest value v-1, prev2 holds v-2 (0 when absent).
        if len(neg) == k:
            if diag(prev1) == 0:
                return False
            if k >= 2 and (diag(prev2) == 0 or diag(prev1) == -diag(prev2)):
                return False
            return True
        key = (neg, prev1, prev2)
        if key in memo:
            return memo[key]
        result = True
        for x in preds:
            if x in neg or -x in neg or x in positive:
                continue
            if not all(p in neg for p in preds[x]):
                continue
            if prev1 and diag(x) == diag(prev1):
                result = False
            elif prev2 and diag(x) == diag(prev2):
                result = False
            else:
                result = ok(neg | {x}, x, prev1)
            if not result:
                break
        memo[key] = result
        return result

    return count_standard_fillings(kappa) > 0 and ok(frozenset(), 0, 0)


def filling_from_w(kappa: BoxConfiguration, w: SignedPermutation) -> StandardFilling:
    region = kappa.region
    if w.k != kappa.k or not in_region(w, z_set(region.c), p_set(region.c), region.J):
        raise NotInRegion(f"{list(w.window)} is not a standard tableau of this region")
    return StandardFilling(tuple(w.window))


def w_from_filling(kappa: BoxConfiguration, s: StandardFilling) -> SignedPermutation:
    if not is_standard_filling(kappa, s):
        raise NotInRegion(f"{list(s.values)} is not a standard filling of this configuration")
    return SignedPermutation(s.values)


# -- fixtures ---------------------------------------------------------------------------------

FIXTURE_MARKINGS: Tuple[Tuple[str, str], ...] = (("2", "5"), ("3/2", "7/2"))
"""Marking diagonals (r1, r2) for the content-vector fixtures: one integral, one half-integral."""


def fixture_local_regions(max_k: int = 3, top: int = 6) -> List[LocalRegion]:
    """Every local region (c, J) with canonical c, 1 <= k <= max_k, J subset of P(c).

    For each marking pair the entries of c run over the integers (or half-integers)
    from 0 (resp. 1/2) up to ``top / 2``, so each content vector meets both
    markings and the adjacency and zero conditions.
    """
    out: List[LocalRegion] = []
    for r1, r2 in FIXTURE_MARKINGS:
        d1, d2 = doubled(r1), doubled(r2)
        values = list(range(d1 % 2, top + 1, 2))
        for k in range(1, max_k + 1):
            for c2 in itertools.combinations_with_replacement(values, k):
                c = ContentVector(c2, d1, d2)
                p = sorted(p_set(c))
                for size in range(len(p) + 1):
                    for J in itertools.combinations(p, size):
                        out.append(LocalRegion(c, frozenset(J)))
    return out

"""Calibrated and induced modules of the extended two-boundary Hecke algebra of type C.

Generators are ``W_0`` (central), ``W_1 .. W_k``, ``T_0 .. T_{k-1}`` together
with the derived elements ``P``, ``X_1``, ``Y_1`` and ``Z_1 .. Z_k``.  Exact
modules store :class:`~hecke2b.linalg.Matrix` objects over Q(i); float
modules store numpy arrays.

Weights are multiplicative: a weight is the tuple ``gamma`` of eigenvalues of
``W_1 .. W_k``.  For content vectors ``gamma_i = -t^{c_i}``.
"""

from __future__ import annotations

import itertools
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    DivisionByZero,
    DomainError,
    FloatBackendUnsupported,
    GenericityViolated,
    NotInvariant,
    NotSkew,
    UndefinedIntertwiner,
    UnknownClass,
)
from .laurent import LaurentPoly, divided_difference
from .linalg import Matrix, kernel
from .regions import ContentVector, LocalRegion, _auto_tableaux, is_skew
from .regions import doubled as _doubled
from .scalar import I, ONE, ZERO, ScalarValue, approx_sqrt, coerce, int_power, parse_scalar, to_complex
from .weyl import (
    Root,
    SignedPermutation,
    act_on_tuple,
    compose,
    enumerate_group,
    generators,
    inverse,
    inversion_set,
)

__all__ = [
    "HeckeParams",
    "GammaRegion",
    "GenericModule",
    "CalibratedModule",
    "gamma_from_c",
    "symbolic_gamma",
    "gamma_z_set",
    "gamma_p_set",
    "gamma_tableaux",
    "gamma_is_skew",
    "build_calibrated",
    "verify_relations",
    "relations_pass",
    "intertwiner",
    "tau_square_scalar",
    "tau_square_check",
    "tau_weyl_check",
    "central_scalar_check",
    "rank2_characters",
    "rank2_induced",
    "RANK2_FAMILIES",
    "generalized_weight_spaces",
    "joint_eigenspaces",
    "is_calibrated",
    "is_irreducible",
    "direct_sum",
    "spectra",
    "compare_spectra",
    "fixture_regions",
    "FIXTURE_WEIGHTS",
    "module_from_json",
]

Scalar = ScalarValue


# -- parameters --------------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeParams:
    """Parameters ``t^{1/2}``, ``t_0^{1/2}``, ``t_k^{1/2}`` and the split of the boundary ones.

    The boundary parameters factor as ``t_k^{1/2} = a_1^{1/2} / (-a_2)^{1/2}`` and
    ``t_0^{1/2} = b_1^{1/2} / (-b_2)^{1/2}``.  The four square roots enter the
    matrices of ``X_1``, ``Y_1`` and ``Z_i``; when omitted they default to
    ``a_1^{1/2} = t_k^{1/2}``, ``(-a_2)^{1/2} = 1`` and likewise for b.

    ``r1`` and ``r2`` (doubled integers) are set only for parameters coming from
    rectangles, where ``t^{r}`` is an integral power of ``t^{1/2}``.
    """

    t_half: ScalarValue
    t0_half: ScalarValue
    tk_half: ScalarValue
    a1_half: Optional[ScalarValue] = None
    neg_a2_half: Optional[ScalarValue] = None
    b1_half: Optional[ScalarValue] = None
    neg_b2_half: Optional[ScalarValue] = None
    r1: Optional[int] = None
    r2: Optional[int] = None
    root_bound: int = 64
    check: bool = True

    def __post_init__(self):
        for name in ("t_half", "t0_half", "tk_half", "a1_half", "neg_a2_half", "b1_half", "neg_b2_half"):
            value = getattr(self, name)
            if value is None:
                continue
            v = value if isinstance(value, ScalarValue) else parse_scalar(str(value))
            if not v:
                raise GenericityViolated(f"{name} must be invertible")
            object.__setattr__(self, name, v)
        if self.a1_half is None:
            object.__setattr__(self, "a1_half", self.tk_half)
        if self.neg_a2_half is None:
            object.__setattr__(self, "neg_a2_half", self.a1_half / self.tk_half)
        if self.b1_half is None:
            object.__setattr__(self, "b1_half", self.t0_half)
        if self.neg_b2_half is None:
            object.__setattr__(self, "neg_b2_half", self.b1_half / self.t0_half)
        if self.a1_half / self.neg_a2_half != self.tk_half:
            raise DomainError("a1^{1/2} / (-a2)^{1/2} must equal t_k^{1/2}")
        if self.b1_half / self.neg_b2_half != self.t0_half:
            raise DomainError("b1^{1/2} / (-b2)^{1/2} must equal t_0^{1/2}")
        if self.check:
            problems = self.genericity_problems()
            if problems:
                raise GenericityViolated("; ".join(problems))

    # -- constructors --------------------------------------------------------------
    @staticmethod
    def default() -> "HeckeParams":
        return HeckeParams(Scalar(2), Scalar(3), Scalar(5))

    @staticmethod
    def from_rectangles(a: int, c: int, b: int, d: int, q=2, check: bool = True) -> "HeckeParams":
        """Parameters ``a_1 = q^{2a}``, ``a_2 = q^{-2c}``, ``b_1 = q^{2b}``, ``b_2 = q^{-2d}``, ``t^{1/2} = q``."""
        qv = coerce(q) if not isinstance(q, str) else parse_scalar(q)
        a1h = int_power(qv, a)
        na2h = I * int_power(qv, -c)
        b1h = int_power(qv, b)
        nb2h = I * int_power(qv, -d)
        return HeckeParams(
            t_half=qv,
            t0_half=b1h / nb2h,
            tk_half=a1h / na2h,
            a1_half=a1h,
            neg_a2_half=na2h,
            b1_half=b1h,
            neg_b2_half=nb2h,
            r1=(a + c) - (b + d),
            r2=a + c + b + d,
            check=check,
        )

    @staticmethod
    def from_markings(r1, r2, q=2, check: bool = True) -> "HeckeParams":
        """Parameters whose markings sit on the diagonals ``r1`` and ``r2`` (integers or half-integers).

        ``t^{1/2} = q^2`` so that every ``t^{r}`` with half-integral r is an
        integral power of q; then ``t_k^{1/2} t_0^{-1/2} = t^{r1}`` and
        ``t_k^{1/2} t_0^{1/2} = -t^{r2}``.
        """
        qv = coerce(q) if not isinstance(q, str) else parse_scalar(q)
        d1, d2 = _doubled(r1), _doubled(r2)
        return HeckeParams(
            t_half=qv * qv,
            t0_half=-I * int_power(qv, d2 - d1),
            tk_half=-I * int_power(qv, d1 + d2),
            r1=d1,
            r2=d2,
            check=check,
        )

    # -- derived quantities ---------------------------------------------------------
    @property
    def t(self) -> ScalarValue:
        return self.t_half * self.t_half

    @property
    def delta(self) -> ScalarValue:
        """``t^{1/2} - t^{-1/2}``."""
        return self.t_half - self.t_half.inv()

    @property
    def t0_delta(self) -> ScalarValue:
        return self.t0_half - self.t0_half.inv()

    @property
    def tk_delta(self) -> ScalarValue:
        return self.tk_half - self.tk_half.inv()

    @property
    def sqrt_abab(self) -> ScalarValue:
        """``(a_1 a_2 b_1 b_2)^{1/2}`` for the chosen square roots, so that ``Z_i = -sqrt_abab W_i``."""
        return -(self.a1_half * self.neg_a2_half * self.b1_half * self.neg_b2_half)

    @property
    def a1(self) -> ScalarValue:
        return self.a1_half * self.a1_half

    @property
    def a2(self) -> ScalarValue:
        return -(self.neg_a2_half * self.neg_a2_half)

    @property
    def b1(self) -> ScalarValue:
        return self.b1_half * self.b1_half

    @property
    def b2(self) -> ScalarValue:
        return -(self.neg_b2_half * self.neg_b2_half)

    @property
    def mark1(self) -> ScalarValue:
        """``-t^{r_1} = -t_k^{1/2} t_0^{-1/2}``."""
        return -(self.tk_half / self.t0_half)

    @property
    def mark2(self) -> ScalarValue:
        """``-t^{r_2} = t_k^{1/2} t_0^{1/2}``."""
        return self.tk_half * self.t0_half

    def marking_values(self) -> FrozenSet[ScalarValue]:
        m1, m2 = self.mark1, self.mark2
        return frozenset({m1, m1.inv(), m2, m2.inv()})

    def t_pow2(self, d2: int) -> ScalarValue:
        """``t^{d2/2}`` for a doubled exponent."""
        return int_power(self.t_half, d2)

    def genericity_problems(self) -> List[str]:
        out = []
        th = self.t_half
        for n in range(1, self.root_bound + 1):
            if int_power(th, n) == ONE:
                out.append(f"t^(1/2) is a root of unity of order {n}")
                break
        forbidden = set()
        for p in (0, 1, 2):
            v = int_power(th, p)
            for x in (v, v.inv()):
                forbidden.add(x)
                forbidden.add(-x)
        x = self.t0_half * self.tk_half
        y = -(self.tk_half / self.t0_half)
        if x in forbidden:
            out.append("t0^(1/2) tk^(1/2) lies in {+-1, +-t^(+-1/2), +-t^(+-1)}")
        if y in forbidden:
            out.append("-t0^(-1/2) tk^(1/2) lies in {+-1, +-t^(+-1/2), +-t^(+-1)}")
        if x == y or x == y.inv():
            out.append("t0^(1/2) tk^(1/2) equals (-t0^(-1/2) tk^(1/2))^(+-1)")
        return out

    def to_json(self) -> dict:
        out = {
            "t_half": str(self.t_half),
            "t0_half": str(self.t0_half),
            "tk_half": str(self.tk_half),
            "a1_half": str(self.a1_half),
            "neg_a2_half": str(self.neg_a2_half),
            "b1_half": str(self.b1_half),
            "neg_b2_half": str(self.neg_b2_half),
        }
        if self.r1 is not None:
            out["r1"] = _half(self.r1)
            out["r2"] = _half(self.r2)
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "HeckeParams":
        kwargs = {k: parse_scalar(obj[k]) for k in ("t_half", "t0_half", "tk_half", "a1_half", "neg_a2_half", "b1_half", "neg_b2_half") if k in obj}
        for key in ("r1", "r2"):
            if key in obj:
                kwargs[key] = int(Fraction(obj[key]) * 2)
        return HeckeParams(**kwargs)


def _half(d2: int) -> str:
    return str(d2 // 2) if d2 % 2 == 0 else f"{d2}/2"


# -- weights and gamma regions -------------------------------------------------------------


def gamma_from_c(c: ContentVector, params: HeckeParams) -> Tuple[ScalarValue, ...]:
    """``gamma_i = -t^{c_i}``; the markings of c must match the parameters."""
    th = params.t_half
    m1 = int_power(th, c.r1)
    m2 = int_power(th, c.r2)
    if not ({-m1, -m1.inv()} & {params.mark1, params.mark1.inv()}) or not (
        {-m2, -m2.inv()} & {params.mark2, params.mark2.inv()}
    ):
        raise GenericityViolated("marking diagonals r1, r2 do not match the parameters")
    return tuple(-int_power(th, x) for x in c.c2)


DEFAULT_ANCHORS: Dict[str, ScalarValue] = {
    "c1": Scalar(7),
    "c2": Scalar(11),
    "c3": Scalar(13),
    "c4": Scalar(17),
}
"""Values of ``t^{c_n}`` for the free symbols ``c1 .. c4`` in symbolic weights."""

_TERM_RE = re.compile(r"\s*([+-]?)\s*([^+\-\s]+)")


def _t_power_of(expr: str, params: HeckeParams, anchors: Mapping[str, ScalarValue]) -> ScalarValue:
    text = expr.replace(" ", "")
    if not text:
        raise DomainError("empty weight expression")
    pos = 0
    value = ONE
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise DomainError(f"cannot parse weight expression {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        pos = m.end()
        if body == "r1":
            base = params.tk_half / params.t0_half
        elif body == "r2":
            base = -(params.tk_half * params.t0_half)
        elif body in anchors:
            base = anchors[body]
        else:
            try:
                num = Fraction(body)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"unknown symbol {body!r} in {expr!r}") from exc
            if (2 * num).denominator != 1:
                raise DomainError(f"{body} is not a half-integer")
            base = params.t_pow2(int(2 * num))
        value = value * (base if sign > 0 else base.inv())
    return value


def symbolic_gamma(
    entries: Sequence[str], params: HeckeParams, anchors: Optional[Mapping[str, ScalarValue]] = None
) -> Tuple[ScalarValue, ...]:
    """Weights from expressions such as ``"r1-1"``, ``"-c1+1"`` or ``"1/2"``.

    Each entry x becomes ``gamma = -t^{x}`` with ``t^{r1} = t_k^{1/2}/t_0^{1/2}``,
    ``t^{r2} = -t_0^{1/2} t_k^{1/2}`` and ``t^{cn}`` taken from ``anchors``.
    """
    table = dict(DEFAULT_ANCHORS)
    if anchors:
        table.update(anchors)
    return tuple(-_t_power_of(e, params, table) for e in entries)


def gamma_z_set(gamma: Sequence[ScalarValue]) -> FrozenSet[Root]:
    out = []
    k = len(gamma)
    for i in range(1, k + 1):
        gi = gamma[i - 1]
        if gi == ONE or gi == -ONE:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            gj = gamma[j - 1]
            if gi == gj:
                out.append(Root.minus(j, i))
            if gi * gj == ONE:
                out.append(Root.plus(j, i))
    return frozenset(out)


def gamma_p_set(gamma: Sequence[ScalarValue], params: HeckeParams) -> FrozenSet[Root]:
    marks = params.marking_values()
    t = params.t
    tt = {t, t.inv()}
    out = []
    k = len(gamma)
    for i in range(1, k + 1):
        gi = gamma[i - 1]
        if gi in marks:
            out.append(Root.eps(i))
        for j in range(i + 1, k + 1):
            gj = gamma[j - 1]
            if gi / gj in tt:
                out.append(Root.minus(j, i))
            if gi * gj in tt:
                out.append(Root.plus(j, i))
    return frozenset(out)


@dataclass(frozen=True)
class GammaRegion:
    """A local region given directly by a multiplicative weight."""

    gamma: Tuple[ScalarValue, ...]
    params: HeckeParams
    J: FrozenSet[Root] = field(default_factory=frozenset)
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(coerce(g) for g in self.gamma))
        object.__setattr__(self, "J", frozenset(self.J))
        if any(not g for g in self.gamma):
            raise DomainError("weights must be invertible")
        for root in self.J:
            if root.max_index() > self.k:
                raise DomainError(f"root {root} out of range for k={self.k}")
        if not self.J <= self.p_set():
            raise DomainError("J not subset of P(c)")

    @property
    def k(self) -> int:
        return len(self.gamma)

    def z_set(self) -> FrozenSet[Root]:
        return gamma_z_set(self.gamma)

    def p_set(self) -> FrozenSet[Root]:
        return gamma_p_set(self.gamma, self.params)

    def to_json(self) -> dict:
        out = {"gamma": [str(g) for g in self.gamma], "J": [str(r) for r in sorted(self.J)]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out


def act_gamma(w: SignedPermutation, gamma: Sequence[ScalarValue]) -> Tuple[ScalarValue, ...]:
    """``w gamma`` with ``gamma_{-i} = gamma_i^{-1}``."""
    return act_on_tuple(w, gamma, negate=lambda x: x.inv())


def gamma_tableaux(region: GammaRegion) -> List[SignedPermutation]:
    """F^{(gamma,J)} by filtering the whole group, sorted by window."""
    z, p = region.z_set(), region.p_set()
    out = []
    for w in enumerate_group(region.k):
        inv = inversion_set(w)
        if not (inv & z) and (inv & p) == region.J:
            out.append(w)
    return out


def _gamma_skew_ok(g: Sequence[ScalarValue]) -> bool:
    k = len(g)
    pm1 = (ONE, -ONE)
    if k >= 1 and g[0] in pm1:
        return False
    if k >= 2 and (g[1] in pm1 or g[0] * g[1] == ONE):
        return False
    for i in range(k - 1):
        if g[i] == g[i + 1]:
            return False
    for i in range(k - 2):
        if g[i] == g[i + 2]:
            return False
    return True


def gamma_is_skew(region: GammaRegion, tableaux: Optional[Sequence[SignedPermutation]] = None) -> bool:
    ws = gamma_tableaux(region) if tableaux is None else list(tableaux)
    if not ws:
        return False
    return all(_gamma_skew_ok(act_gamma(w, region.gamma)) for w in ws)


# -- modules ---------------------------------------------------------------------------------


def _generator_names(k: int) -> List[str]:
    names = [f"W{i}" for i in range(k + 1)]
    names += [f"T{i}" for i in range(k)]
    names += ["P", "X1", "Y1"]
    names += [f"Z{i}" for i in range(1, k + 1)]
    return names


class GenericModule:
    """A finite-dimensional module given by generator matrices."""

    def __init__(
        self,
        labels: Sequence[str],
        mats: Mapping[str, object],
        params: HeckeParams,
        k: int,
        z: object = ONE,
        backend: str = "exact",
        weight_candidates: Optional[Sequence[Tuple[ScalarValue, ...]]] = None,
        name: str = "",
    ):
        if backend not in ("exact", "float"):
            raise DomainError(f"unknown backend {backend!r}")
        self.labels = list(labels)
        self.mats = dict(mats)
        self.params = params
        self.k = k
        self.z = z
        self.backend = backend
        self.weight_candidates = list(weight_candidates) if weight_candidates is not None else None
        self.name = name
        self._weight_cache: Optional[List[Tuple[Tuple[ScalarValue, ...], List[List[ScalarValue]]]]] = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def W(self, i: int):
        return self.mats[f"W{i}"]

    def T(self, i: int):
        return self.mats[f"T{i}"]

    def generator_names(self) -> List[str]:
        return [n for n in _generator_names(self.k) if n in self.mats]

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "k": self.k,
            "backend": self.backend,
            "dim": self.dim,
            "labels": self.labels,
            "z": _scalar_text(self.z),
            "params": self.params.to_json(),
            "matrices": {n: _matrix_json(self.mats[n]) for n in self.generator_names()},
        }
        if self.weight_candidates is not None:
            out["weight_candidates"] = [[str(g) for g in w] for w in self.weight_candidates]
        return out


class CalibratedModule(GenericModule):
    """A calibrated module on the basis ``{v_w : w in F}``; every ``W_i`` is diagonal."""

    def __init__(
        self,
        basis: Sequence[SignedPermutation],
        gamma: Tuple[ScalarValue, ...],
        mats: Mapping[str, object],
        params: HeckeParams,
        z: ScalarValue,
        backend: str,
        normalization: str,
        J: FrozenSet[Root] = frozenset(),
    ):
        self.basis = list(basis)
        self.gamma = tuple(gamma)
        self.weights = [act_gamma(w, gamma) for w in self.basis]
        self.normalization = normalization
        self.J = frozenset(J)
        super().__init__(
            [str(list(w.window)) for w in self.basis],
            mats,
            params,
            len(gamma),
            z=z,
            backend=backend,
            weight_candidates=self.weights,
            name="calibrated",
        )

    def to_json(self) -> dict:
        out = super().to_json()
        out["basis"] = [list(w.window) for w in self.basis]
        out["gamma"] = [str(g) for g in self.gamma]
        out["J"] = [str(r) for r in sorted(self.J)]
        out["normalization"] = self.normalization
        out["weights"] = [[str(g) for g in w] for w in self.weights]
        return out


def _scalar_text(x) -> Union[str, List[float]]:
    if isinstance(x, ScalarValue):
        return str(x)
    c = complex(x)
    return [c.real, c.imag]


def _matrix_json(m) -> list:
    if isinstance(m, Matrix):
        return [[str(v) for v in row] for row in m.to_dense()]
    return [[[complex(v).real, complex(v).imag] for v in row] for row in np.asarray(m)]


def module_from_json(obj: Mapping) -> GenericModule:
    """Rebuild an exact module from :meth:`GenericModule.to_json` output."""
    if obj.get("backend", "exact") != "exact":
        raise FloatBackendUnsupported("only exact modules can be reloaded")
    params = HeckeParams.from_json(obj["params"])
    mats = {n: Matrix.from_dense([[parse_scalar(v) for v in row] for row in rows]) for n, rows in obj["matrices"].items()}
    cands = None
    if "weight_candidates" in obj:
        cands = [tuple(parse_scalar(g) for g in w) for w in obj["weight_candidates"]]
    return GenericModule(
        obj["labels"], mats, params, int(obj["k"]), z=parse_scalar(obj["z"]), weight_candidates=cands, name=obj.get("name", "")
    )


# -- calibrated construction ----------------------------------------------------------------


def _as_gamma_region(region, params: HeckeParams) -> Tuple[Tuple[ScalarValue, ...], FrozenSet[Root], List[SignedPermutation], bool]:
    """(gamma, J, F sorted by window, skew flag) for a content or gamma region."""
    if isinstance(region, LocalRegion):
        gamma = gamma_from_c(region.c, params)
        ws = sorted(_auto_tableaux(region))
        skew = is_skew(region, ws) if ws else False
        return gamma, region.J, ws, skew
    if isinstance(region, GammaRegion):
        ws = gamma_tableaux(region)
        return region.gamma, region.J, ws, gamma_is_skew(region, ws)
    raise DomainError(f"unsupported region type {type(region).__name__}")


def _t_diag(params: HeckeParams, i: int, g: Sequence[ScalarValue]) -> ScalarValue:
    """Diagonal entry of ``T_i`` on a weight vector of weight g."""
    try:
        if i == 0:
            x = g[0].inv()
            return (params.t0_delta + params.tk_delta * x) / (ONE - x * x)
        return params.delta / (ONE - g[i - 1] / g[i])
    except DivisionByZero as exc:
        raise NotSkew(f"T_{i} diagonal entry undefined at weight {[str(v) for v in g]}") from exc


def build_calibrated(
    z,
    region: Union[LocalRegion, GammaRegion],
    params: HeckeParams,
    normalization: str = "tau_basis",
) -> CalibratedModule:
    """The irreducible calibrated module attached to a skew local region.

    ``tau_basis`` gives exact matrices: for ``u = s_i w`` in F the entry
    ``[T_i]_{u,w}`` is 1 when ``u w_0^{-1}`` is longer than ``w w_0^{-1}``
    (``w_0`` the shortest element of F) and otherwise the product
    ``-([T_i]_{ww} - a)([T_i]_{ww} + a^{-1})``.  ``symmetric_float`` puts the
    square root of that product on both sides and works in complex floats.
    """
    if normalization not in ("tau_basis", "symmetric_float"):
        raise DomainError(f"unknown normalization {normalization!r}")
    z = coerce(z) if not isinstance(z, str) else parse_scalar(z)
    gamma, J, ws, skew = _as_gamma_region(region, params)
    if not skew:
        raise NotSkew("the local region is not skew")
    k = len(gamma)
    n = len(ws)
    idx = {w: pos for pos, w in enumerate(ws)}
    weights = [act_gamma(w, gamma) for w in ws]
    w0 = min(ws, key=lambda w: (w.length(), w.window))
    w0inv = inverse(w0)
    rel_len = {w: compose(w, w0inv).length() for w in ws}
    gens = generators(k) if k else []
    exact = normalization == "tau_basis"

    def alpha(i: int) -> ScalarValue:
        return params.t0_half if i == 0 else params.t_half

    t_entries: List[Dict[Tuple[int, int], object]] = []
    for i in range(k):
        entries: Dict[Tuple[int, int], object] = {}
        a_i = alpha(i)
        for w in ws:
            col = idx[w]
            d = _t_diag(params, i, weights[col])
            entries[(col, col)] = d if exact else to_complex(d)
            u = compose(gens[i], w)
            row = idx.get(u)
            if row is None:
                continue
            prod = -(d - a_i) * (d + a_i.inv())
            if exact:
                entries[(row, col)] = ONE if rel_len[u] > rel_len[w] else prod
            else:
                entries[(row, col)] = approx_sqrt(to_complex(prod))
        t_entries.append(entries)

    mats: Dict[str, object] = {}
    if exact:
        def diag(vals):
            return Matrix.diag(list(vals))

        def from_entries(e):
            rows: Dict[int, Dict[int, ScalarValue]] = {}
            for (r, c), v in e.items():
                rows.setdefault(r, {})[c] = v
            return Matrix(n, n, rows)

        scal = lambda v: v  # noqa: E731
    else:
        def diag(vals):
            return np.diag(np.array([to_complex(v) for v in vals], dtype=complex))

        def from_entries(e):
            arr = np.zeros((n, n), dtype=complex)
            for (r, c), v in e.items():
                arr[r, c] = v
            return arr

        scal = to_complex

    mats["W0"] = diag([z] * n)
    for i in range(1, k + 1):
        mats[f"W{i}"] = diag([g[i - 1] for g in weights])
    for i in range(k):
        mats[f"T{i}"] = from_entries(t_entries[i])
    prods = []
    for g in weights:
        p = ONE
        for x in g:
            p = p * x
        prods.append(z / p)
    mats["P"] = diag(prods)
    for i in range(1, k + 1):
        mats[f"Z{i}"] = diag([-params.sqrt_abab * g[i - 1] for g in weights])
    if k >= 1:
        t0 = mats["T0"]
        ident = diag([ONE] * n)
        t0_inv = t0 - ident * scal(params.t0_delta)
        mats["Y1"] = t0 * scal(params.b1_half * params.neg_b2_half)
        mats["X1"] = (mats["W1"] @ t0_inv) * scal(params.a1_half * params.neg_a2_half)
    return CalibratedModule(ws, gamma, mats, params, z, "exact" if exact else "float", normalization, J)


# -- backend helpers -------------------------------------------------------------------------


class _Ops:
    """Uniform matrix operations over the exact and float backends."""

    def __init__(self, m: GenericModule):
        self.exact = m.backend == "exact"
        self.n = m.dim

    def eye(self):
        return Matrix.identity(self.n) if self.exact else np.eye(self.n, dtype=complex)

    def s(self, x):
        return x if self.exact else to_complex(x)

    def inv(self, a):
        if self.exact:
            return a.inverse()
        if abs(np.linalg.det(a)) < 1e-300:
            raise DivisionByZero("singular matrix")
        return np.linalg.inv(a)

    def power(self, a, p: int):
        if self.exact:
            return a ** p
        if p < 0:
            return np.linalg.matrix_power(self.inv(a), -p)
        return np.linalg.matrix_power(a, p)

    def norm(self, a) -> float:
        """An upper bound for the operator norm (float backend only)."""
        return float(np.max(np.abs(a))) * self.n if self.n else 0.0

    def compare(self, lhs, rhs, scale: float = 0.0) -> Tuple[bool, float]:
        """Exact equality, or for floats a residual within 1e-9 of the largest magnitude involved.

        ``scale`` lets a relation of the form ``A B = 0`` supply ``|A| |B|``,
        since the product itself carries no magnitude.
        """
        if self.exact:
            diff = lhs - rhs
            if diff.is_zero():
                return True, 0.0
            return False, max(abs(complex(v)) for _, _, v in diff.items())
        diff = np.max(np.abs(lhs - rhs)) if self.n else 0.0
        bound = max(1.0, scale, float(np.max(np.abs(lhs))) if self.n else 0.0, float(np.max(np.abs(rhs))) if self.n else 0.0)
        return bool(diff <= 1e-9 * bound), float(diff)

    def status(self, ok: bool) -> str:
        if not ok:
            return "FAIL"
        return "PASS exact" if self.exact else "PASS tol=1e-9"


def _entry(ops: _Ops, name: str, lhs, rhs, scale: float = 0.0) -> dict:
    ok, res = ops.compare(lhs, rhs, scale)
    return {"relation": name, "status": ops.status(ok), "max_residual": res}


def verify_relations(m: GenericModule, params: Optional[HeckeParams] = None) -> List[dict]:
    """Evaluate every defining relation as a matrix identity."""
    p = params or m.params
    ops = _Ops(m)

    def quadratic(name: str, a, b) -> dict:
        scale = 0.0 if ops.exact else ops.norm(a) * ops.norm(b)
        return _entry(ops, name, a @ b, I_ * ops.s(ZERO), scale)

    k = m.k
    W = [m.W(i) for i in range(k + 1)]
    T = [m.T(i) for i in range(k)]
    I_ = ops.eye()
    out: List[dict] = []
    gens = [("W" + str(i), W[i]) for i in range(1, k + 1)] + [("T" + str(i), T[i]) for i in range(k)]
    for name, g in gens:
        out.append(_entry(ops, f"B1 W0 commutes with {name}", W[0] @ g, g @ W[0]))
    if k >= 2:
        out.append(_entry(ops, "B1 T0T1T0T1 = T1T0T1T0", T[0] @ T[1] @ T[0] @ T[1], T[1] @ T[0] @ T[1] @ T[0]))
    for i in range(1, k - 1):
        out.append(
            _entry(ops, f"B1 T{i}T{i+1}T{i} = T{i+1}T{i}T{i+1}", T[i] @ T[i + 1] @ T[i], T[i + 1] @ T[i] @ T[i + 1])
        )
    for i in range(k):
        for j in range(i + 2, k):
            out.append(_entry(ops, f"B1 T{i}T{j} = T{j}T{i}", T[i] @ T[j], T[j] @ T[i]))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            out.append(_entry(ops, f"B2 W{i}W{j} = W{j}W{i}", W[i] @ W[j], W[j] @ W[i]))
    for j in range(2, k + 1):
        out.append(_entry(ops, f"B3 T0W{j} = W{j}T0", T[0] @ W[j], W[j] @ T[0]))
    for i in range(1, k):
        for j in range(1, k + 1):
            if j not in (i, i + 1):
                out.append(_entry(ops, f"B4 T{i}W{j} = W{j}T{i}", T[i] @ W[j], W[j] @ T[i]))
    th, t0h = ops.s(p.t_half), ops.s(p.t0_half)
    for i in range(1, k):
        out.append(quadratic(f"H (T{i}-t^1/2)(T{i}+t^-1/2) = 0", T[i] - I_ * th, T[i] + I_ * ops.s(p.t_half.inv())))
    if k >= 1:
        out.append(quadratic("H (T0-t0^1/2)(T0+t0^-1/2) = 0", T[0] - I_ * t0h, T[0] + I_ * ops.s(p.t0_half.inv())))
    delta = ops.s(p.delta)
    for i in range(1, k):
        out.append(
            _entry(ops, f"C1 T{i}W{i} = W{i+1}T{i} - (t^1/2-t^-1/2)W{i+1}", T[i] @ W[i], W[i + 1] @ T[i] - W[i + 1] * delta)
        )
        out.append(
            _entry(ops, f"C1 T{i}W{i+1} = W{i}T{i} + (t^1/2-t^-1/2)W{i+1}", T[i] @ W[i + 1], W[i] @ T[i] + W[i + 1] * delta)
        )
    if k >= 1:
        w1inv = ops.inv(W[1])
        rhs = w1inv @ T[0] + W[1] * ops.s(p.t0_delta) + I_ * ops.s(p.tk_delta)
        out.append(_entry(ops, "C2 T0W1 = W1^-1T0 + (t0^1/2-t0^-1/2)W1 + (tk^1/2-tk^-1/2)", T[0] @ W[1], rhs))
    if "X1" in m.mats:
        X = m.mats["X1"]
        out.append(quadratic("X1 (X1-a1)(X1-a2) = 0", X - I_ * ops.s(p.a1), X - I_ * ops.s(p.a2)))
    if "Y1" in m.mats:
        Y = m.mats["Y1"]
        out.append(quadratic("Y1 (Y1-b1)(Y1-b2) = 0", Y - I_ * ops.s(p.b1), Y - I_ * ops.s(p.b2)))
    if "P" in m.mats:
        prod = m.mats["P"]
        for i in range(1, k + 1):
            prod = prod @ W[i]
        out.append(_entry(ops, "W0 = PW1...Wk", prod, W[0]))
    for i in range(1, k + 1):
        key = f"Z{i}"
        if key in m.mats:
            out.append(_entry(ops, f"Z{i} = -(a1a2b1b2)^1/2 W{i}", m.mats[key], W[i] * ops.s(-p.sqrt_abab)))
    return out


def relations_pass(report: Iterable[dict]) -> bool:
    return all(r["status"].startswith("PASS") for r in report)


# -- intertwiners ---------------------------------------------------------------------------


def intertwiner(m: GenericModule, i: int):
    """``tau_i = T_i - (t^{1/2}-t^{-1/2})(1 - W_i W_{i+1}^{-1})^{-1}``; for i = 0 the boundary version."""
    if not 0 <= i < m.k:
        raise DomainError(f"tau_{i} is not defined for k={m.k}")
    ops = _Ops(m)
    p = m.params
    I_ = ops.eye()
    try:
        if i == 0:
            x = ops.inv(m.W(1))
            num = I_ * ops.s(p.t0_delta) + x * ops.s(p.tk_delta)
            return m.T(0) - num @ ops.inv(I_ - x @ x)
        ratio = m.W(i) @ ops.inv(m.W(i + 1))
        return m.T(i) - ops.inv(I_ - ratio) * ops.s(p.delta)
    except DivisionByZero as exc:
        raise UndefinedIntertwiner(f"tau_{i} is undefined on this module") from exc


def tau_square_scalar(params: HeckeParams, i: int, g: Sequence[ScalarValue]) -> ScalarValue:
    """The scalar by which ``tau_i^2`` acts on a weight vector of weight g."""
    th = params.t_half
    try:
        if i == 0:
            x = g[0].inv()
            a = params.t0_half * params.tk_half
            b = params.t0_half / params.tk_half
            num = (ONE - a * x) * (ONE + b * x) * (ONE + b.inv() * x) * (ONE - a.inv() * x)
            den = (ONE - x) * (ONE - x) * (ONE + x) * (ONE + x)
            return num / den
        u = g[i - 1].inv() * g[i]
        num = (th - th.inv() * u) * (th - th.inv() * u.inv())
        den = (ONE - u) * (ONE - u.inv())
        return num / den
    except DivisionByZero as exc:
        raise UndefinedIntertwiner(f"tau_{i}^2 is undefined at weight {[str(v) for v in g]}") from exc


def _tau_square_matrix(m: GenericModule, i: int):
    """The right side of the tau^2 identity evaluated on the W matrices."""
    ops = _Ops(m)
    p = m.params
    I_ = ops.eye()
    s = ops.s
    try:
        if i == 0:
            x = ops.inv(m.W(1))
            a = p.t0_half * p.tk_half
            b = p.t0_half / p.tk_half
            num = (I_ - x * s(a)) @ (I_ + x * s(b)) @ (I_ + x * s(b.inv())) @ (I_ - x * s(a.inv()))
            half = (I_ - x) @ (I_ + x)
            return num @ ops.inv(half @ half)
        u = ops.inv(m.W(i)) @ m.W(i + 1)
        uinv = ops.inv(u)
        th = p.t_half
        num = (I_ * s(th) - u * s(th.inv())) @ (I_ * s(th) - uinv * s(th.inv()))
        den = (I_ - u) @ (I_ - uinv)
        return num @ ops.inv(den)
    except DivisionByZero as exc:
        raise UndefinedIntertwiner(f"tau_{i}^2 is undefined on this module") from exc


def tau_square_check(m: GenericModule) -> List[dict]:
    """Compare ``tau_i^2`` with the scalar formula on every weight space."""
    ops = _Ops(m)
    out = []
    for i in range(m.k):
        tau = intertwiner(m, i)
        if isinstance(m, CalibratedModule):
            vals = [tau_square_scalar(m.params, i, g) for g in m.weights]
            rhs = Matrix.diag(vals) if ops.exact else np.diag([to_complex(v) for v in vals])
        else:
            rhs = _tau_square_matrix(m, i)
        out.append(_entry(ops, f"tau{i}^2 = scalar on weight spaces", tau @ tau, rhs))
    return out


def _monomial(m: GenericModule, ops: _Ops, lam: Sequence[int], cache: Dict):
    out = ops.eye()
    for j, e in enumerate(lam, start=1):
        if e:
            key = (j, e)
            if key not in cache:
                cache[key] = ops.power(m.W(j), e)
            out = out @ cache[key]
    return out


def tau_weyl_check(m: GenericModule, bound: int = 2) -> List[dict]:
    """``tau_i W^lam = W^{s_i lam} tau_i`` for all exponent vectors with entries in [-bound, bound]."""
    ops = _Ops(m)
    cache: Dict = {}
    out = []
    diagonal = ops.exact and all(m.W(j).is_diagonal() for j in range(1, m.k + 1))
    for i in range(m.k):
        tau = intertwiner(m, i)
        if diagonal:
            out.append(_tau_weyl_diagonal(m, i, tau, bound))
            continue
        worst = 0.0
        ok_all = True
        count = 0
        for lam in itertools.product(range(-bound, bound + 1), repeat=m.k):
            slam = list(lam)
            if i == 0:
                slam[0] = -slam[0]
            else:
                slam[i - 1], slam[i] = slam[i], slam[i - 1]
            ok, res = ops.compare(tau @ _monomial(m, ops, lam, cache), _monomial(m, ops, slam, cache) @ tau)
            ok_all &= ok
            worst = max(worst, res)
            count += 1
        out.append({"relation": f"tau{i} W^lam = W^(s{i} lam) tau{i} ({count} monomials)", "status": ops.status(ok_all), "max_residual": worst})
    return out


def _tau_weyl_diagonal(m: GenericModule, i: int, tau: Matrix, bound: int) -> dict:
    """Entrywise form of the identity when every W_j is diagonal.

    With ``W^lam = diag(d(lam))`` the identity reads
    ``tau[r, c] * d_c(lam) = d_r(s_i lam) * tau[r, c]`` on each nonzero entry.
    """
    exps = list(itertools.product(range(-bound, bound + 1), repeat=m.k))
    values: List[Dict[Tuple[int, ...], ScalarValue]] = []
    for x in range(m.dim):
        pw = [{e: int_power(m.W(j)[x, x], e) for e in range(-bound, bound + 1)} for j in range(1, m.k + 1)]
        table = {}
        for lam in exps:
            v = ONE
            for j, e in enumerate(lam):
                if e:
                    v = v * pw[j][e]
            table[lam] = v
        values.append(table)
    entries = list(tau.items())
    ok_all = True
    worst = 0.0
    for lam in exps:
        slam = list(lam)
        if i == 0:
            slam[0] = -slam[0]
        else:
            slam[i - 1], slam[i] = slam[i], slam[i - 1]
        slam_t = tuple(slam)
        for r, c, v in entries:
            left, right = values[c][lam], values[r][slam_t]
            if left != right:
                ok_all = False
                worst = max(worst, abs(complex(v * (left - right))))
    count = len(exps)
    status = "PASS exact" if ok_all else "FAIL"
    return {"relation": f"tau{i} W^lam = W^(s{i} lam) tau{i} ({count} monomials)", "status": status, "max_residual": worst}


# -- centre ------------------------------------------------------------------------------------


def central_scalar_check(m: GenericModule, poly: LaurentPoly) -> dict:
    """Evaluate a symmetric Laurent polynomial in W_0..W_k and check that it acts by a scalar."""
    if poly.k != m.k:
        raise DomainError(f"polynomial in k={poly.k} variables applied to a k={m.k} module")
    if not poly.is_invariant():
        raise NotInvariant("polynomial is not invariant under the finite Weyl group")
    ops = _Ops(m)
    values = [m.W(i) for i in range(m.k + 1)]
    if ops.exact:
        mat = poly.evaluate(values, one=ops.eye(), mul=operator.matmul, power=ops.power)
    else:
        mat = ops.eye() * 0
        for e, c in poly.terms.items():
            term = ops.eye()
            for j, pw in enumerate(e):
                if pw:
                    term = term @ ops.power(values[j], pw)
            mat = mat + term * to_complex(c)
    scalar = mat[0, 0] if m.dim else ZERO
    ok, res = ops.compare(mat, ops.eye() * scalar)
    return {"relation": "central element acts by a scalar", "status": ops.status(ok), "max_residual": res, "scalar": _scalar_text(scalar)}


# -- weight spaces and irreducibility -------------------------------------------------------


def _stack_kernel(mats: Sequence[Matrix], n: int) -> List[List[ScalarValue]]:
    rows: Dict[int, Dict[int, ScalarValue]] = {}
    offset = 0
    for a in mats:
        for i, row in a.rows.items():
            rows[offset + i] = dict(row)
        offset += a.nrows
    return kernel(Matrix(offset, n, rows))


def _weight_spaces(m: GenericModule, power: int) -> List[Tuple[Tuple[ScalarValue, ...], List[List[ScalarValue]]]]:
    if m.backend != "exact":
        raise FloatBackendUnsupported("weight spaces need the exact backend")
    cands = m.weight_candidates
    if cands is None:
        raise DomainError("module carries no weight candidates")
    seen = []
    out = []
    n = m.dim
    for g in cands:
        g = tuple(g)
        if g in seen:
            continue
        seen.append(g)
        shifted = [(m.W(i + 1) - Matrix.scalar(n, g[i])) ** power for i in range(m.k)]
        basis = _stack_kernel(shifted, n)
        if basis:
            out.append((g, basis))
    return out


def generalized_weight_spaces(m: GenericModule):
    """List of (weight, basis) for the nonzero generalized weight spaces; they span the module."""
    if m._weight_cache is None:
        spaces = _weight_spaces(m, max(1, m.dim))
        total = sum(len(b) for _, b in spaces)
        if total != m.dim:
            raise DomainError(f"generalized weight spaces have total dimension {total}, expected {m.dim}")
        m._weight_cache = spaces
    return m._weight_cache


def joint_eigenspaces(m: GenericModule):
    return _weight_spaces(m, 1)


def is_calibrated(m: GenericModule) -> bool:
    """True iff every generalized weight space is an honest eigenspace."""
    gen = {g: len(b) for g, b in generalized_weight_spaces(m)}
    eig = {g: len(b) for g, b in joint_eigenspaces(m)}
    return gen == eig


class _Echelon:
    """Incrementally maintained row-echelon basis of a subspace."""

    def __init__(self, n: int):
        self.n = n
        self.rows: Dict[int, List[ScalarValue]] = {}

    def reduce(self, v: Sequence[ScalarValue]) -> List[ScalarValue]:
        v = list(v)
        for piv in sorted(self.rows):
            if v[piv]:
                f = v[piv]
                row = self.rows[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence[ScalarValue]) -> bool:
        r = self.reduce(v)
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            return False
        inv = r[piv].inv()
        r = [x * inv for x in r]
        for p, row in list(self.rows.items()):
            if row[piv]:
                f = row[piv]
                self.rows[p] = [a - f * b for a, b in zip(row, r)]
        self.rows[piv] = r
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def _action_mats(m: GenericModule) -> List[Matrix]:
    return [m.W(i) for i in range(1, m.k + 1)] + [m.T(i) for i in range(m.k)]


def _cyclic_dim(m: GenericModule, v: Sequence[ScalarValue]) -> int:
    span = _Echelon(m.dim)
    span.add(v)
    frontier = [list(v)]
    gens = _action_mats(m)
    while frontier and span.dim < m.dim:
        nxt = []
        for vec in frontier:
            for g in gens:
                img = g.apply(vec)
                if span.add(img):
                    nxt.append(img)
        frontier = nxt
    return span.dim


def _burnside_dim(m: GenericModule) -> int:
    n = m.dim
    gens = _action_mats(m)
    span = _Echelon(n * n)

    def flat(a: Matrix) -> List[ScalarValue]:
        return [x for row in a.to_dense() for x in row]

    ident = Matrix.identity(n)
    span.add(flat(ident))
    frontier = [ident]
    while frontier and span.dim < n * n:
        nxt = []
        for a in frontier:
            for g in gens:
                b = g @ a
                if span.add(flat(b)):
                    nxt.append(b)
        frontier = nxt
    return span.dim


def is_irreducible(m: GenericModule) -> bool:
    """Exact irreducibility test.

    Any submodule is spanned by its generalized weight components and so
    contains a joint eigenvector.  When every joint eigenspace is a line the
    module is irreducible iff each eigenvector generates everything; this is
    read off a graph when the W's are diagonal.  Otherwise the algebra
    generated by the action is compared with the full matrix algebra.
    """
    if m.backend != "exact":
        raise FloatBackendUnsupported("irreducibility is decided over the exact backend")
    n = m.dim
    if n == 0:
        return False
    if n == 1:
        return True
    ws = [m.W(i) for i in range(1, m.k + 1)]
    if all(w.is_diagonal() for w in ws):
        diag = [tuple(w[j, j] for w in ws) for j in range(n)]
        if len(set(diag)) == n:
            adj: Dict[int, set] = {j: set() for j in range(n)}
            for g in _action_mats(m):
                for r, c, _ in g.items():
                    if r != c:
                        adj[c].add(r)
            return _strongly_connected(adj)
    eig = joint_eigenspaces(m)
    if all(len(b) <= 1 for _, b in eig):
        return all(_cyclic_dim(m, b[0]) == n for _, b in eig)
    return _burnside_dim(m) == n * n


def _strongly_connected(adj: Mapping[int, set]) -> bool:
    nodes = list(adj)
    if not nodes:
        return False

    def reach(graph: Mapping[int, set]) -> set:
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            x = stack.pop()
            for y in graph[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    rev: Dict[int, set] = {x: set() for x in nodes}
    for x, ys in adj.items():
        for y in ys:
            rev[y].add(x)
    return len(reach(adj)) == len(nodes) and len(reach(rev)) == len(nodes)


def direct_sum(a: GenericModule, b: GenericModule) -> GenericModule:
    """Block-diagonal sum of two exact modules with the same k and parameters."""
    if a.k != b.k:
        raise DomainError("direct sum of modules with different k")
    na = a.dim
    mats = {}
    for name in a.generator_names():
        if name not in b.mats:
            continue
        rows: Dict[int, Dict[int, ScalarValue]] = {i: dict(r) for i, r in a.mats[name].rows.items()}
        for i, r in b.mats[name].rows.items():
            rows[na + i] = {na + j: v for j, v in r.items()}
        mats[name] = Matrix(na + b.dim, na + b.dim, rows)
    cands = None
    if a.weight_candidates is not None and b.weight_candidates is not None:
        cands = list(a.weight_candidates) + list(b.weight_candidates)
    return GenericModule(a.labels + b.labels, mats, a.params, a.k, z=a.z, weight_candidates=cands, name="direct sum")


# -- spectra ---------------------------------------------------------------------------------------


def spectra(m: GenericModule) -> Dict[str, np.ndarray]:
    """Eigenvalues of each generator matrix (numerically, as complex arrays)."""
    out = {}
    for name in m.generator_names():
        a = m.mats[name]
        arr = a.to_numpy() if isinstance(a, Matrix) else np.asarray(a)
        out[name] = np.linalg.eigvals(arr) if arr.size else np.zeros(0, dtype=complex)
    return out


def compare_spectra(a: GenericModule, b: GenericModule, rel: float = 1e-9) -> List[dict]:
    """Match eigenvalue multisets generator by generator (greedy nearest matching)."""
    sa, sb = spectra(a), spectra(b)
    out = []
    for name in sa:
        if name not in sb:
            continue
        xs, ys = list(sa[name]), list(sb[name])
        worst = 0.0
        ok = len(xs) == len(ys)
        for x in xs:
            if not ys:
                ok = False
                break
            j = min(range(len(ys)), key=lambda t: abs(ys[t] - x))
            err = abs(ys[j] - x) / max(1.0, abs(x))
            worst = max(worst, err)
            ys.pop(j)
        ok = ok and worst <= rel
        out.append({"relation": f"spectrum of {name}", "status": "PASS tol=1e-9" if ok else "FAIL", "max_residual": worst})
    return out


# -- rank two ---------------------------------------------------------------------------------------

RANK2_REGULAR = [
    ("r1", "r2"),
    ("r1-1", "r1"),
    ("r2-1", "r2"),
    ("r1", "r1+1"),
    ("r2", "r2+1"),
    ("c1", "c1+1"),
    ("c1", "r2"),
    ("c1", "r1"),
    ("r1", "c2"),
    ("r2", "c2"),
    ("c1", "c2"),
    ("c1", "-c1+1"),
]
RANK2_NONREGULAR = [
    ("0", "r2"),
    ("0", "c2"),
    ("0", "r1"),
    ("1/2", "1/2"),
    ("r1", "r1"),
    ("c1", "c1"),
    ("r2", "r2"),
    ("0", "0"),
    ("0", "1"),
]


def _rank2_table(params: HeckeParams) -> List[Tuple[str, List[Tuple[ScalarValue, ScalarValue]]]]:
    th = params.t_half
    x = params.t0_half * params.tk_half
    y = -(params.tk_half / params.t0_half)
    t = params.t
    return [
        ("table row 1", [(th, th), (-th, -th)]),
        ("table row 2", [(x, x), (y, y)]),
        ("table row 3", [(ONE, t), (-ONE, -t)]),
        ("table row 4", [(ONE, x), (-ONE, x), (ONE, y), (-ONE, y)]),
        ("item (a)", [(ONE, ONE)]),
    ]


def rank2_characters(params: HeckeParams) -> List[dict]:
    """Representative weights of the rank-two classification with their Z and P sets."""
    if params.genericity_problems():
        raise GenericityViolated("; ".join(params.genericity_problems()))
    out = []

    def record(gamma, tag, label=None):
        entry = {
            "gamma": tuple(gamma),
            "Z": gamma_z_set(gamma),
            "P": gamma_p_set(gamma, params),
            "tag": tag,
        }
        if label is not None:
            entry["label"] = label
        out.append(entry)

    for symbols in RANK2_REGULAR:
        record(symbolic_gamma(symbols, params), "regular", f"({symbols[0]},{symbols[1]})")
    for symbols in RANK2_NONREGULAR:
        record(symbolic_gamma(symbols, params), "nonregular", f"({symbols[0]},{symbols[1]})")
    for tag, gammas in _rank2_table(params):
        for g in gammas:
            record(g, tag)
    return out


@dataclass(frozen=True)
class _Rank2Family:
    sub: int  # index j of the parabolic generator T_j
    plus: Tuple[str, str]  # symbolic (W1, W2) eigenvalues as exponents of -t
    minus: Tuple[str, str]


RANK2_FAMILIES: Dict[str, _Rank2Family] = {
    "(0,r1)": _Rank2Family(0, ("-r1", "0"), ("r1", "0")),
    "(0,r2)": _Rank2Family(0, ("r2", "0"), ("-r2", "0")),
    "(1/2,1/2)": _Rank2Family(1, ("-1/2", "1/2"), ("1/2", "-1/2")),
    "(r1,r1)": _Rank2Family(0, ("-r1", "r1"), ("r1", "-r1")),
    "(r2,r2)": _Rank2Family(0, ("r2", "-r2"), ("-r2", "r2")),
    "(0,1)": _Rank2Family(1, ("-1", "0"), ("1", "0")),
}
"""The induced families.  For r1 the inducing weight is ``-t^{-r1}`` so that the
one-dimensional character satisfies the boundary cross relation with
``T_0 = t_0^{1/2}`` under the convention ``-t^{r1} = -t_k^{1/2} t_0^{-1/2}``."""

_FAMILY_RE = re.compile(r"^\s*L\s*([+-])?\s*(\(.*\))\s*$")


def _parse_family(cls: str, sign: Optional[str]) -> Tuple[str, str]:
    m = _FAMILY_RE.match(cls)
    if m:
        s, key = m.group(1), m.group(2)
    else:
        s, key = None, cls.strip()
    key = key.replace(" ", "").replace("½", "1/2")
    if sign is not None:
        s = sign
    if s not in ("+", "-"):
        raise UnknownClass(f"missing or invalid sign for {cls!r}")
    if key not in RANK2_FAMILIES:
        raise UnknownClass(f"unknown rank-two family {cls!r}; expected one of {sorted(RANK2_FAMILIES)}")
    return key, s


def _hecke_left_mult(i: int, w: SignedPermutation, gens, alpha: ScalarValue) -> Dict[SignedPermutation, ScalarValue]:
    """``T_i T_w`` in the finite Hecke algebra."""
    u = compose(gens[i], w)
    if u.length() > w.length():
        return {u: ONE}
    return {u: ONE, w: alpha - alpha.inv()}


def rank2_induced(cls: str, sign: Optional[str] = None, params: Optional[HeckeParams] = None, z=ONE) -> GenericModule:
    """The four-dimensional induced module ``L^{+-}`` of a rank-two family.

    ``cls`` is a family key such as ``"(r1,r1)"`` or a full name such as
    ``"L+(0,r2)"``.  The basis is ``T_d v`` for the minimal coset
    representatives d, ordered (1, T1, T0T1, T1T0T1) when inducing from the
    subalgebra containing T0 and (1, T0, T1T0, T0T1T0) otherwise.
    """
    params = params or HeckeParams.default()
    key, s = _parse_family(cls, sign)
    fam = RANK2_FAMILIES[key]
    z = coerce(z) if not isinstance(z, str) else parse_scalar(z)
    k = 2
    gens = generators(k)
    j = fam.sub
    other = 1 - j
    words = [[], [other], [j, other], [other, j, other]]
    labels = ["v"] + ["T" + "T".join(str(x) for x in wd) + " v" for wd in words[1:]]
    reps = []
    for wd in words:
        w = SignedPermutation(range(1, k + 1))
        for x in wd:
            w = compose(w, gens[x])
        reps.append(w)
    index = {w: n for n, w in enumerate(reps)}
    symbols = fam.plus if s == "+" else fam.minus
    chi_w = symbolic_gamma(symbols, params)
    alpha_j = params.t0_half if j == 0 else params.t_half
    chi_t = alpha_j if s == "+" else -alpha_j.inv()
    alphas = [params.t0_half, params.t_half]

    def reduce(elem: Dict[SignedPermutation, ScalarValue]) -> List[ScalarValue]:
        vec = [ZERO] * 4
        for x, c in elem.items():
            if x in index:
                vec[index[x]] = vec[index[x]] + c
            else:
                d = compose(x, gens[j])
                vec[index[d]] = vec[index[d]] + c * chi_t
        return vec

    t_mats = []
    for i in range(k):
        cols = [reduce(_hecke_left_mult(i, w, gens, alphas[i])) for w in reps]
        t_mats.append(Matrix.from_dense([[cols[c][r] for c in range(4)] for r in range(4)]))

    def coeff_poly(i: int) -> LaurentPoly:
        if i == 0:
            return LaurentPoly.constant(k, params.t0_delta) + LaurentPoly.var(k, 1, -1) * params.tk_delta
        return LaurentPoly.constant(k, params.delta)

    values = (z,) + chi_w

    def act(f: LaurentPoly, word: Sequence[int]) -> List[ScalarValue]:
        if not word:
            vec = [ZERO] * 4
            vec[0] = f.evaluate(values)
            return vec
        i, rest = word[0], word[1:]
        g = f.reflect(i)
        left = t_mats[i].apply(act(g, rest))
        corr = coeff_poly(i) * divided_difference(g, i)
        right = act(corr, rest) if not corr.is_zero() else [ZERO] * 4
        return [a - b for a, b in zip(left, right)]

    mats: Dict[str, Matrix] = {"W0": Matrix.scalar(4, z)}
    for v in (1, 2):
        cols = [act(LaurentPoly.var(k, v), wd) for wd in words]
        mats[f"W{v}"] = Matrix.from_dense([[cols[c][r] for c in range(4)] for r in range(4)])
    mats["T0"], mats["T1"] = t_mats
    mats["P"] = mats["W0"] @ (mats["W1"] @ mats["W2"]).inverse()
    t0_inv = mats["T0"] - Matrix.scalar(4, params.t0_delta)
    mats["Y1"] = mats["T0"] * (params.b1_half * params.neg_b2_half)
    mats["X1"] = (mats["W1"] @ t0_inv) * (params.a1_half * params.neg_a2_half)
    for v in (1, 2):
        mats[f"Z{v}"] = mats[f"W{v}"] * (-params.sqrt_abab)
    orbit = sorted({act_gamma(w, chi_w) for w in enumerate_group(k)}, key=lambda g: [(x.re, x.im) for x in g])
    return GenericModule(labels, mats, params, k, z=z, weight_candidates=orbit, name=f"L{s}{key}")


# -- fixtures ----------------------------------------------------------------------------------------

FIXTURE_WEIGHTS: List[Tuple[str, ...]] = [
    ("c1",),
    ("r1",),
    ("r2",),
    ("1/2",),
    ("c1", "c2"),
    ("c1", "c1+1"),
    ("r1", "r1+1"),
    ("r2", "r2+1"),
    ("r1-1", "r1"),
    ("r2-1", "r2"),
    ("c1", "r2"),
    ("c1", "r1"),
    ("r1", "r2"),
    ("c1", "-c1+1"),
    ("1/2", "3/2"),
    ("c1", "c1+1", "c1+2"),
    ("c1", "c1+1", "c2"),
    ("r1", "r1+1", "r1+2"),
    ("r2-1", "r2", "r2+1"),
    ("c1", "c2", "c3"),
    ("c1", "r1", "r2"),
    ("1/2", "3/2", "5/2"),
    ("c1", "c1+1", "-c1+2"),
]
"""Symbolic weights whose local regions (all admissible J) form the test fixture set."""


def fixture_regions(params: Optional[HeckeParams] = None, max_k: int = 3) -> List[GammaRegion]:
    """Skew gamma-regions built from :data:`FIXTURE_WEIGHTS` over every subset J of P."""
    params = params or HeckeParams.default()
    out = []
    for symbols in FIXTURE_WEIGHTS:
        if len(symbols) > max_k:
            continue
        gamma = symbolic_gamma(symbols, params)
        p = sorted(gamma_p_set(gamma, params))
        for r in range(len(p) + 1):
            for J in itertools.combinations(p, r):
                region = GammaRegion(gamma, params, frozenset(J), labels=tuple(symbols))
                if gamma_is_skew(region):
                    out.append(region)
    return out

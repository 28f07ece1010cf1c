"""Calibrated representations of the two-boundary affine Hecke algebra of type C."""

from .errors import (
    BoundExceeded,
    DivisionByZero,
    DomainError,
    FloatBackendUnsupported,
    GenericityViolated,
    Hecke2bError,
    InconsistentPath,
    InconsistentRegion,
    NotInRegion,
    NotInvariant,
    NotReachable,
    NotSkew,
    SizeMismatch,
    TooManyRows,
    UndefinedIntertwiner,
    UnknownClass,
)
from .hecke import (
    CalibratedModule,
    GammaRegion,
    GenericModule,
    HeckeParams,
    build_calibrated,
    is_irreducible,
    rank2_induced,
    relations_pass,
    verify_relations,
)
from .laurent import LaurentPoly
from .regions import ContentVector, LocalRegion, configuration, is_skew, standard_fillings, standard_tableaux
from .scalar import ScalarValue, parse_scalar
from .schurweyl import (
    Partition,
    RectPair,
    bratteli,
    build_path_module,
    dimension_identity,
    lambda_to_zcJ,
    paths_to,
)
from .weyl import Root, SignedPermutation, inversion_set, parse_root

__all__ = [
    "BoundExceeded",
    "CalibratedModule",
    "ContentVector",
    "DivisionByZero",
    "DomainError",
    "FloatBackendUnsupported",
    "GammaRegion",
    "GenericModule",
    "GenericityViolated",
    "Hecke2bError",
    "HeckeParams",
    "InconsistentPath",
    "InconsistentRegion",
    "LaurentPoly",
    "LocalRegion",
    "NotInRegion",
    "NotInvariant",
    "NotReachable",
    "NotSkew",
    "Partition",
    "RectPair",
    "Root",
    "ScalarValue",
    "SignedPermutation",
    "SizeMismatch",
    "TooManyRows",
    "UndefinedIntertwiner",
    "UnknownClass",
    "bratteli",
    "build_calibrated",
    "build_path_module",
    "configuration",
    "dimension_identity",
    "inversion_set",
    "is_irreducible",
    "is_skew",
    "lambda_to_zcJ",
    "parse_root",
    "parse_scalar",
    "paths_to",
    "rank2_induced",
    "relations_pass",
    "standard_fillings",
    "standard_tableaux",
    "verify_relations",
]

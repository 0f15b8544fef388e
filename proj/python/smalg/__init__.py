"""Exact multibracket algebras, semigroup expansions and resonant reductions."""

from ._core import *  # noqa: F401,F403
from ._core import (
    AntisymmetryError,
    ClosureError,
    ExpandedAlgebra,
    InvalidSemigroup,
    MatrixRep,
    MultiAlgebra,
    NoZeroElement,
    NotReducible,
    NotResonant,
    ParseError,
    RankError,
    Semigroup,
    SmalgError,
)

__version__ = "0.1.0"

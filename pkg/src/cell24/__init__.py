"""Exact combinatorics of hyperbolic 4-manifolds built from the ideal 24-cell.

Typical use::

    from cell24 import load_manifold, analyze_cusps, cusp_string
    desc = load_manifold("manifold3.rt")
    cusp_string(analyze_cusps(desc))     # ('BAAFB', 'AABBF')
"""

from importlib.resources import files

from .cusp import (
    FLAT_TYPES,
    AffineIsometry3,
    BieberbachGroup,
    CuspReport,
    FlatType,
    VertexClass,
    affine_of_word,
    analyze_cusps,
    classify_flat,
    cusp_presentation,
    cusp_string,
    develop_cusp,
    vertex_classes,
)
from .cycles import (
    HandleCounts,
    RidgeCycle,
    edge_cycles,
    fundamental_presentation,
    handle_counts,
    is_orientable,
    ridge_cycles,
)
from .errors import (
    Cell24Error,
    CuspError,
    CycleError,
    FibreError,
    NotSidePreservingError,
    ParseError,
    UnknownVertexError,
    ValidationError,
)
from .filling import Certificate, FillingSpec, certify, fill, parse_filling, validate_fibre
from .groups import (
    AbelianInvariants,
    Presentation,
    abelianization,
    reidemeister_schreier,
    tietze_simplify,
    todd_coxeter,
    two_characters,
)
from .pairing import (
    ManifoldDescription,
    SidePairing,
    apply_word,
    format_word,
    image_side,
    invert_in_sphere,
    orientation_character,
    parse_manifold,
    parse_word,
)
from .polytope import Polytope24, build_polytope

__version__ = "0.1.0"


def data_text(name: str) -> str:
    """Contents of a shipped data file (``manifold3.rt``, ``manifold1011.rt``, ``fill1011.rt``)."""
    return files("cell24.data").joinpath(name).read_text()


def load_manifold(name: str) -> ManifoldDescription:
    return parse_manifold(data_text(name), source=name)


def load_filling(name: str, desc: ManifoldDescription) -> FillingSpec:
    return parse_filling(data_text(name), desc, source=name)

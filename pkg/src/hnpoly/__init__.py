"""Exact slope-polygon calculus for vector bundles ``O(d/h)^m``."""

from hnpoly.bundles import (
    O,
    Bundle,
    Slope,
    StableSummand,
    degree,
    direct_sum,
    dual,
    hom_bundle,
    is_semistable,
    is_stable,
    make_bundle,
    mu,
    rank,
    tensor,
    truncate,
)
from hnpoly.errors import DomainError, ParseError
from hnpoly.extensions import (
    FiltrationWitness,
    build_filtration_witness,
    enumerate_extensions,
    exists_extension,
    exists_filtration,
    necessary_condition,
    split_common_top,
)
from hnpoly.moduli import (
    StratumDim,
    dim_aut,
    dim_ext_stratum,
    dim_h0,
    dim_hom,
    dim_hom_stratum,
    dim_surj_with_kernel,
)
from hnpoly.polygons import (
    HNVector,
    Polygon,
    bundle_of,
    deg_hom,
    deg_hom_nonneg,
    hn_vectors,
    instability,
    polygon_leq,
    polygon_of,
    twice_area_between,
    vec_cross,
    vec_prec,
    vec_preceq,
)
from hnpoly.strata import StrataPoset, down_set, hasse_diagram, in_closure, to_dot
from hnpoly.textio import format_bundle, parse_bundle

__all__ = [name for name in dir() if not name.startswith("_")]

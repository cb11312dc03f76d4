"""Exact Thom-Boardman symbols of polynomial map-germs at the origin."""
from .algebra import Fraction, Polynomial, RingMismatchError
from .boardman import (
    DepthError,
    ExtensionStep,
    IdealPresentation,
    TBSymbol,
    corank_at_origin,
    critical_extension,
    is_unit_ideal_at_origin,
    jacobian,
    tb_symbol,
)
from .germs import (
    DomainError,
    EuclidRun,
    SymbolSpec,
    cartesian_product,
    euclid_run,
    euclid_symbol,
    mu,
    product_of,
    realize,
    symbol_add,
    symbol_prefix_eq,
    zero_germ,
)
from .ideal_io import (
    ParseError,
    SymbolReport,
    parse_ideal_file,
    parse_poly,
    parse_symbol_spec,
    print_ideal_file,
    print_poly,
    symbol_report_json,
)
from .linalg import (
    MatrixPoly,
    MatrixQ,
    det_poly,
    det_q,
    enumerate_minors,
    qlinear_interreduce,
    rank_q,
)

__version__ = "0.1.0"

__all__ = [
    "cartesian_product",
    "corank_at_origin",
    "critical_extension",
    "DepthError",
    "det_poly",
    "det_q",
    "DomainError",
    "enumerate_minors",
    "euclid_run",
    "euclid_symbol",
    "EuclidRun",
    "ExtensionStep",
    "Fraction",
    "IdealPresentation",
    "is_unit_ideal_at_origin",
    "jacobian",
    "MatrixPoly",
    "MatrixQ",
    "mu",
    "parse_ideal_file",
    "parse_poly",
    "parse_symbol_spec",
    "ParseError",
    "Polynomial",
    "print_ideal_file",
    "print_poly",
    "product_of",
    "qlinear_interreduce",
    "rank_q",
    "realize",
    "RingMismatchError",
    "symbol_add",
    "symbol_prefix_eq",
    "symbol_report_json",
    "SymbolReport",
    "SymbolSpec",
    "tb_symbol",
    "TBSymbol",
    "zero_germ",
]

"""Exact enumeration of bounded lattice paths, alternating sequences, heaps
and alternating tableaux, with executable determinant reciprocity checks."""

from .exact import LinRec, RatFunc, UniPoly, linrec_eval, linrec_from_ratfunc, negative_series
from .multipoly import MultiPoly, XPoly, XRatFunc, render
from .paths import UpDownPath, count_paths, path_gf_closed, path_value, weighted_path_value
from .altseq import count_altseq, cumulative_gf, enumerate_altseqs
from .determinants import det
from .tableaux import AltTableau, TableauShape, tableau_gf, tableau_gf_determinant
from .verify import REGISTRY, Certificate, DomainViolation, run_check, run_suite, scan_conjecture

__version__ = "0.1.0"

__all__ = [
    "LinRec", "RatFunc", "UniPoly", "linrec_eval", "linrec_from_ratfunc", "negative_series",
    "MultiPoly", "XPoly", "XRatFunc", "render",
    "UpDownPath", "count_paths", "path_gf_closed", "path_value", "weighted_path_value",
    "count_altseq", "cumulative_gf", "enumerate_altseqs",
    "det",
    "AltTableau", "TableauShape", "tableau_gf", "tableau_gf_determinant",
    "REGISTRY", "Certificate", "DomainViolation", "run_check", "run_suite", "scan_conjecture",
]

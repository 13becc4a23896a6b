"""q-ary graphs, their incidence matrices over F_{q^m}, and the associated q-matroids."""

from .fields import ExtField, FieldError, FieldSpec, check_spec, u_vector
from .incidence import (
    EdgeRep,
    IncidenceMatrix,
    all_representations,
    audit,
    build_incidence,
    ingest_matrix,
    propagate,
    represent_edge,
)
from .kernels import BACKEND
from .qgraph import QGraph, closure, family, validate
from .qmatroid import QMatroid, check_axioms, compare_incidence_matroids, rank_signature
from .spaces import Subspace, enumerate_all, enumerate_subspaces, gaussian_binomial, span

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EdgeRep", "ExtField", "FieldError", "FieldSpec", "IncidenceMatrix", "QGraph",
    "QMatroid", "Subspace", "all_representations", "audit", "build_incidence", "check_axioms",
    "check_spec", "closure", "compare_incidence_matroids", "enumerate_all", "enumerate_subspaces",
    "family", "gaussian_binomial", "ingest_matrix", "propagate", "rank_signature",
    "represent_edge", "span", "u_vector", "validate",
]

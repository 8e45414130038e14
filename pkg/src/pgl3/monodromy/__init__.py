# src/pgl3/monodromy/__init__.py
from pgl3.monodromy.graph import LoopWord, MonodromyGraph, build_graph, monodromy
from pgl3.monodromy.matrices import E, Matrix3, T, T_inv, product, specialize
from pgl3.monodromy.positivity import (
    TPStatus,
    certify_loop,
    certify_total_positivity,
    check_regular_hyperbolic,
    hyperbolicity_check,
)
from pgl3.monodromy.traces import trace_decomposition_search, trace_of_power

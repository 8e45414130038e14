# src/pgl3/quantum/__init__.py
from pgl3.quantum.flips import (
    quantum_flip,
    quantum_flip_chain,
    quantum_flip_sequence,
    quantum_flip_stage,
)
from pgl3.quantum.maps import (
    Factor,
    QRationalMap,
    compose,
    quantum_mutation,
    specialize_q1,
)
from pgl3.quantum.representation import clock_shift_representation, evaluate, evaluate_chain
from pgl3.quantum.torus import QLaurent, QTorusElem, qmul, star
from pgl3.quantum.verify import (
    ResidualReport,
    verify_all,
    verify_commuting_flips,
    verify_flip_formulas,
    verify_flip_square,
    verify_quantum_pentagon,
)

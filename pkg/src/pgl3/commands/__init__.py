# src/pgl3/commands/__init__.py
from pgl3.commands import (
    classify,
    flip,
    monodromy,
    mutate,
    quantum_flip,
    reconstruct,
    render,
    trace,
    triangulate,
    verify,
)

COMMANDS = (triangulate, flip, quantum_flip, mutate, monodromy, trace, verify, classify, reconstruct, render)

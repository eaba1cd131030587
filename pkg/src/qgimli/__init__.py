"""In-place reversible circuit for the Gimli permutation, with resource metrics."""

from qgimli.gimli_ref import DEFAULT_CONSTANT, GimliState, Params, gimli_permute, round_tweak, sp_box
from qgimli.circuit import Circuit, Gate, LabelMap, ResourceReport, depth, gate_counts, t_depth
from qgimli.builder import build_gimli_circuit, build_inverse
from qgimli.lowering import block_unitary, lower_toffoli
from qgimli.simulator import pack, run, unpack, verify_equivalence

__all__ = [
    "DEFAULT_CONSTANT",
    "Circuit",
    "Gate",
    "GimliState",
    "LabelMap",
    "Params",
    "ResourceReport",
    "block_unitary",
    "build_gimli_circuit",
    "build_inverse",
    "depth",
    "gate_counts",
    "gimli_permute",
    "lower_toffoli",
    "pack",
    "round_tweak",
    "run",
    "sp_box",
    "t_depth",
    "unpack",
    "verify_equivalence",
]

"""Invariant kinds, joint parameters and their byte signatures."""

from .signatures import (
    Flavor, InvariantKind, JointParam, Parameter, ParamKey,
    parse_parameter, parameter_kinds,
    signature, joint_signature, graph_signatures, signature_rows,
    encode_value, decode_key,
)

__all__ = [
    'Flavor', 'InvariantKind', 'JointParam', 'Parameter', 'ParamKey',
    'parse_parameter', 'parameter_kinds',
    'signature', 'joint_signature', 'graph_signatures', 'signature_rows',
    'encode_value', 'decode_key',
]

"""
Invariant choices and their canonical byte signatures.

A ParamKey is a self-delimiting byte string. Each component starts with a
header byte (flavor in bit 5, matrix kind index in bits 0-4) followed by
length-prefixed integers:

    Spec:  count, c_n, c_(n-1), ..., c_0
    Snf:   order, rank, f_1, ..., f_r

Every integer is written as a sign byte, a two-byte big-endian magnitude
length and the big-endian magnitude. Equal invariant values give equal bytes
and decode_key inverts the encoding.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from ..errors import DisconnectedGraph, UnknownInvariant
from ..graphs.graph import Graph, is_connected
from ..graphs.graph6 import parse_graph6, to_graph6_str
from ..matrices.builders import IntMatrix, MatrixBuilder
from ..matrices.charpoly import char_poly
from ..matrices.kinds import MatrixKind
from ..matrices.smith import snf

logger = logging.getLogger(__name__)

ParamKey = bytes

_KIND_INDEX = {kind: i for i, kind in enumerate(MatrixKind)}
_KINDS_BY_INDEX = list(MatrixKind)


class Flavor(Enum):
    SPEC = "spec"
    SNF = "snf"


@dataclass(frozen=True)
class InvariantKind:
    """Spectrum or Smith normal form of one matrix kind."""
    flavor: Flavor
    matrix: MatrixKind

    @property
    def token(self) -> str:
        return f"{self.flavor.value}:{self.matrix.value}"

    @property
    def label(self) -> str:
        name = "Spec" if self.flavor is Flavor.SPEC else "SNF"
        return f"{name}({self.matrix.label})"

    @classmethod
    def parse(cls, token: str) -> 'InvariantKind':
        """Parse `flavor:Matrix`, e.g. spec:A or snf:WDdegPlus (case-insensitive)."""
        flavor_text, sep, matrix_text = token.strip().partition(':')
        flavors = {f.value: f for f in Flavor}
        flavor = flavors.get(flavor_text.strip().lower())
        if not sep or flavor is None:
            raise UnknownInvariant(
                f"invalid invariant {token!r}; expected spec:<matrix> or snf:<matrix>, "
                f"matrix one of: {', '.join(k.value for k in MatrixKind)}"
            )
        return cls(flavor, MatrixKind.parse(matrix_text))

    @classmethod
    def all(cls) -> List['InvariantKind']:
        return [cls(flavor, kind) for flavor in Flavor for kind in MatrixKind]

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class JointParam:
    """Two invariants that a mate must match simultaneously."""
    first: InvariantKind
    second: InvariantKind

    @property
    def token(self) -> str:
        return f"{self.first.token}+{self.second.token}"

    @property
    def label(self) -> str:
        return f"{self.first.label} & {self.second.label}"

    @property
    def kinds(self) -> Tuple[InvariantKind, InvariantKind]:
        return (self.first, self.second)

    @classmethod
    def parse(cls, token: str) -> 'JointParam':
        parts = _split_joint(token)
        if len(parts) != 2:
            raise UnknownInvariant(f"invalid joint parameter {token!r}; expected <inv>+<inv>")
        return cls(InvariantKind.parse(parts[0]), InvariantKind.parse(parts[1]))

    def __str__(self) -> str:
        return self.token


Parameter = Union[InvariantKind, JointParam]


def parameter_kinds(p: Parameter) -> Tuple[InvariantKind, ...]:
    return p.kinds if isinstance(p, JointParam) else (p,)


def parse_parameter(tokens: Sequence[str]) -> Parameter:
    """One token gives a single invariant; two tokens (or `a+b`) give a joint parameter."""
    parts: List[str] = []
    for token in tokens:
        parts.extend(_split_joint(token))
    if len(parts) == 1:
        return InvariantKind.parse(parts[0])
    if len(parts) == 2:
        return JointParam(InvariantKind.parse(parts[0]), InvariantKind.parse(parts[1]))
    raise UnknownInvariant(f"expected one or two invariants, got {len(parts)}: {' '.join(parts)}")


def _split_joint(token: str) -> List[str]:
    """Split `spec:A+snf:L` at the '+' that starts a new flavor prefix."""
    parts = []
    current = ""
    for piece in token.split('+'):
        if current and ':' in piece:
            parts.append(current)
            current = piece
        else:
            current = f"{current}+{piece}" if current else piece
    if current:
        parts.append(current)
    return parts


# -- encoding -----------------------------------------------------------------

def _encode_int(value: int) -> bytes:
    magnitude = abs(value)
    body = magnitude.to_bytes((magnitude.bit_length() + 7) // 8, 'big')
    return bytes([1 if value < 0 else 0]) + len(body).to_bytes(2, 'big') + body


def _decode_int(data: bytes, offset: int) -> Tuple[int, int]:
    sign = data[offset]
    length = int.from_bytes(data[offset + 1:offset + 3], 'big')
    start = offset + 3
    magnitude = int.from_bytes(data[start:start + length], 'big')
    return (-magnitude if sign else magnitude), start + length


def _header(k: InvariantKind) -> bytes:
    flavor_bit = 0x20 if k.flavor is Flavor.SNF else 0
    return bytes([flavor_bit | _KIND_INDEX[k.matrix]])


def encode_value(k: InvariantKind, m: IntMatrix) -> ParamKey:
    """Signature of the given matrix under invariant k."""
    if k.flavor is Flavor.SPEC:
        coeffs = char_poly(m).coeffs
        payload = [len(coeffs), *coeffs]
    else:
        result = snf(m)
        payload = [result.order, result.rank, *result.factors]
    return _header(k) + b"".join(_encode_int(x) for x in payload)


def decode_key(key: ParamKey) -> List[Tuple[InvariantKind, Tuple[int, ...]]]:
    """
    Split a key back into its components.

    Spec components decode to the coefficient tuple, Snf components to
    (order, rank, f_1, ..., f_r).
    """
    components = []
    offset = 0
    while offset < len(key):
        header = key[offset]
        offset += 1
        flavor = Flavor.SNF if header & 0x20 else Flavor.SPEC
        kind = InvariantKind(flavor, _KINDS_BY_INDEX[header & 0x1F])
        if flavor is Flavor.SPEC:
            count, offset = _decode_int(key, offset)
        else:
            order, offset = _decode_int(key, offset)
            rank, offset = _decode_int(key, offset)
            count = rank
        values = []
        for _ in range(count):
            x, offset = _decode_int(key, offset)
            values.append(x)
        if flavor is Flavor.SNF:
            values = [order, rank, *values]
        components.append((kind, tuple(values)))
    return components


# -- signatures -----------------------------------------------------------------

def graph_signatures(g: Graph, kinds: Iterable[InvariantKind]) -> Dict[InvariantKind, ParamKey]:
    """Signatures of g for several invariants, building each matrix once."""
    if not is_connected(g):
        raise DisconnectedGraph(to_graph6_str(g))
    builder = MatrixBuilder(g)
    matrices: Dict[MatrixKind, IntMatrix] = {}
    result = {}
    for k in kinds:
        if k in result:
            continue
        if k.matrix not in matrices:
            matrices[k.matrix] = builder.build(k.matrix)
        result[k] = encode_value(k, matrices[k.matrix])
    return result


def signature(g: Graph, k: InvariantKind) -> ParamKey:
    """Canonical key of g's invariant k."""
    return graph_signatures(g, [k])[k]


def joint_signature(g: Graph, p: JointParam) -> ParamKey:
    """Concatenation of both component keys in stored order."""
    keys = graph_signatures(g, p.kinds)
    return keys[p.first] + keys[p.second]


def signature_rows(records: Sequence[str], kinds: Sequence[InvariantKind]) -> List[Tuple[ParamKey, ...]]:
    """Worker task: one tuple of keys (aligned with kinds) per graph6 record."""
    rows = []
    for record in records:
        keys = graph_signatures(parse_graph6(record), kinds)
        rows.append(tuple(keys[k] for k in kinds))
    return rows

"""The twenty matrix kinds associated with a graph."""

from enum import Enum
from typing import List, Optional

from ..errors import UnknownInvariant


class MatrixKind(Enum):
    """
    Ten base matrices and the walk lift W_B = [e, Be, ..., B^(n-1)e] of each.

    Values are the CLI names.
    """
    A = "A"
    L = "L"
    Q = "Q"
    D = "D"
    DL = "DL"
    DQ = "DQ"
    DDEG = "Ddeg"
    DDEG_PLUS = "DdegPlus"
    ATR = "Atr"
    ATR_PLUS = "AtrPlus"
    WA = "WA"
    WL = "WL"
    WQ = "WQ"
    WD = "WD"
    WDL = "WDL"
    WDQ = "WDQ"
    WDDEG = "WDdeg"
    WDDEG_PLUS = "WDdegPlus"
    WATR = "WAtr"
    WATR_PLUS = "WAtrPlus"

    @property
    def is_walk(self) -> bool:
        return self in _WALK_BASE

    @property
    def base(self) -> 'MatrixKind':
        """The matrix the walk lift is built from; base kinds return themselves."""
        return _WALK_BASE.get(self, self)

    @property
    def needs_distances(self) -> bool:
        return self.base not in (MatrixKind.A, MatrixKind.L, MatrixKind.Q)

    @property
    def label(self) -> str:
        """Conventional notation, e.g. W_{D^Q}."""
        return _LABELS[self]

    @classmethod
    def base_kinds(cls) -> List['MatrixKind']:
        return [kind for kind in cls if not kind.is_walk]

    @classmethod
    def walk_of(cls, base: 'MatrixKind') -> 'MatrixKind':
        for walk, b in _WALK_BASE.items():
            if b is base:
                return walk
        raise ValueError(f"{base.value} is already a walk matrix")

    @classmethod
    def parse(cls, token: str) -> 'MatrixKind':
        """Case-insensitive; also accepts the W_{D^Q} / D^deg_+ spellings."""
        kind = _lookup(token)
        if kind is None:
            names = ", ".join(kind.value for kind in cls)
            raise UnknownInvariant(f"unknown matrix {token!r}; valid names: {names}")
        return kind


def _normalise(token: str) -> str:
    text = token.strip().lower()
    for junk in ("_", "^", "{", "}", "\\", " "):
        text = text.replace(junk, "")
    return text.replace("+", "plus")


def _lookup(token: str) -> Optional[MatrixKind]:
    wanted = _normalise(token)
    for kind in MatrixKind:
        if _normalise(kind.value) == wanted:
            return kind
    return None


_WALK_BASE = {
    MatrixKind.WA: MatrixKind.A,
    MatrixKind.WL: MatrixKind.L,
    MatrixKind.WQ: MatrixKind.Q,
    MatrixKind.WD: MatrixKind.D,
    MatrixKind.WDL: MatrixKind.DL,
    MatrixKind.WDQ: MatrixKind.DQ,
    MatrixKind.WDDEG: MatrixKind.DDEG,
    MatrixKind.WDDEG_PLUS: MatrixKind.DDEG_PLUS,
    MatrixKind.WATR: MatrixKind.ATR,
    MatrixKind.WATR_PLUS: MatrixKind.ATR_PLUS,
}

_BASE_LABELS = {
    MatrixKind.A: "A",
    MatrixKind.L: "L",
    MatrixKind.Q: "Q",
    MatrixKind.D: "D",
    MatrixKind.DL: "D^L",
    MatrixKind.DQ: "D^Q",
    MatrixKind.DDEG: "D^deg",
    MatrixKind.DDEG_PLUS: "D^deg_+",
    MatrixKind.ATR: "A^tr",
    MatrixKind.ATR_PLUS: "A^tr_+",
}

_LABELS = dict(_BASE_LABELS)
_LABELS.update({walk: f"W_{{{_BASE_LABELS[base]}}}" for walk, base in _WALK_BASE.items()})

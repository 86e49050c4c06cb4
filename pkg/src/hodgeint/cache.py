"""Canonical integral keys and the write-once memo table shared by the engines."""
from __future__ import annotations

import threading
from fractions import Fraction
from pathlib import Path
from typing import Iterable, NamedTuple

__all__ = ["Key", "make_key", "IntegralCache", "CacheConflict"]


class Key(NamedTuple):
    """An integral over M_{g,n}bar of psi monomials, kappa classes and ch(E) insertions.

    ``psi`` holds one exponent per marking; ``kappa`` holds Arbarello-Cornalba
    kappa indices; ``ch`` holds odd Chern-character degrees.  All three are
    sorted descending.
    """

    g: int
    psi: tuple
    kappa: tuple = ()
    ch: tuple = ()

    @property
    def n(self) -> int:
        return len(self.psi)

    @property
    def degree(self) -> int:
        return sum(self.psi) + sum(self.kappa) + sum(self.ch)

    @property
    def dimension(self) -> int:
        return 3 * self.g - 3 + len(self.psi)

    def is_stable(self) -> bool:
        return self.g >= 0 and 2 * self.g - 2 + len(self.psi) > 0

    def text(self) -> str:
        j = lambda xs: ",".join(map(str, xs))
        return f"{self.g}|psi:{j(self.psi)}|kappa:{j(self.kappa)}|ch:{j(self.ch)}"

    @classmethod
    def parse(cls, text: str) -> "Key":
        g, *fields = text.split("|")
        parts = {}
        for f in fields:
            name, _, body = f.partition(":")
            parts[name] = tuple(int(x) for x in body.split(",") if x)
        return make_key(int(g), parts.get("psi", ()), parts.get("kappa", ()), parts.get("ch", ()))


def make_key(g: int, psi: Iterable[int] = (), kappa: Iterable[int] = (), ch: Iterable[int] = ()) -> Key:
    return Key(
        g,
        tuple(sorted(psi, reverse=True)),
        tuple(sorted(kappa, reverse=True)),
        tuple(sorted(ch, reverse=True)),
    )


class CacheConflict(RuntimeError):
    pass


class IntegralCache:
    """Memo table from :class:`Key` to Fraction.

    Reads are lock free.  Inserts take a lock and are write-once: storing a
    different value under an existing key raises :class:`CacheConflict`.
    Two threads computing the same key is harmless.
    """

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def put(self, key, value: Fraction) -> Fraction:
        with self._lock:
            old = self._data.get(key)
            if old is None:
                self._data[key] = value
                return value
        if old != value:
            raise CacheConflict(f"{key}: cached {old}, new {value}")
        return old

    def items(self):
        return list(self._data.items())

    def dump(self, path) -> None:
        lines = sorted(f"{k.text()}\t{v}" for k, v in self.items() if isinstance(k, Key))
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))

    def load(self, path) -> int:
        count = 0
        for line in Path(path).read_text().splitlines():
            if not line.strip():
                continue
            key, value = line.split("\t")
            self.put(Key.parse(key), Fraction(value))
            count += 1
        return count

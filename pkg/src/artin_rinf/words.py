"""Words over named generators: tuples of ``(name, exponent)`` letters."""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Letter = tuple[str, int]
Word = tuple[Letter, ...]

_LETTER_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?\Z")


class WordError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """``"t1 t2^-1 t3^2"`` -> letters with unit exponents."""
    out: list[Letter] = []
    for tok in text.replace(",", " ").split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise WordError(f"bad letter {tok!r}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k == 0:
            raise WordError(f"zero exponent in {tok!r}")
        out.extend([(m.group(1), 1 if k > 0 else -1)] * abs(k))
    return tuple(out)


def format_letter(letter: Letter) -> str:
    name, e = letter
    return name if e == 1 else f"{name}^-1"


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(format_letter(x) for x in w)


def word(*names: str) -> Word:
    return tuple((n, 1) for n in names)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((n, -e) for n, e in reversed(w))


def power(w: Sequence[Letter], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return base * abs(k)


def free_reduce(w: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for n, e in w:
        if out and out[-1] == (n, -e):
            out.pop()
        else:
            out.append((n, e))
    return tuple(out)


def alternating(a: str, b: str, m: int) -> Word:
    """The positive word ``a b a b ...`` with ``m`` letters."""
    return tuple(((a, b)[i % 2], 1) for i in range(m))


def exponent_sum(w: Iterable[Letter], weights: dict[str, int] | None = None) -> int:
    if weights is None:
        return sum(e for _, e in w)
    return sum(e * weights.get(n, 0) for n, e in w)


def letters_used(w: Iterable[Letter]) -> set[str]:
    return {n for n, _ in w}

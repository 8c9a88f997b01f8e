"""Oriented chord diagrams on 2n circle nodes.

A diagram is a perfect matching of the nodes 1..2n into n oriented
chords.  Canonical form orients every chord low-to-high and lists chords
by increasing first node; enumeration and basis ordering rely on the
lexicographic order of the flattened index string a1,b1,...,an,bn.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_NODES_N = 6

Chord = tuple[int, int]


@dataclass(frozen=True)
class ChordDiagram:
    """A perfect matching of 1..2n into oriented chords."""

    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if len(self.chords) != self.n:
            raise ValueError(f"expected {self.n} chords, got {len(self.chords)}")
        seen: set[int] = set()
        for a, b in self.chords:
            if a == b:
                raise ValueError(f"degenerate chord ({a}, {b})")
            seen.update((a, b))
        if seen != set(range(1, 2 * self.n + 1)):
            raise ValueError("chords must cover each node 1..2n exactly once")

    @classmethod
    def from_pairs(cls, pairs) -> "ChordDiagram":
        chords = tuple((int(a), int(b)) for a, b in pairs)
        return cls(len(chords), chords)

    def is_canonical(self) -> bool:
        firsts = [a for a, _ in self.chords]
        return all(a < b for a, b in self.chords) and firsts == sorted(firsts)

    def canonicalize(self) -> tuple["ChordDiagram", int]:
        """Canonical form and the sign (-1)^(number of reversed chords)."""
        sign = 1
        fixed = []
        for a, b in self.chords:
            if a > b:
                a, b = b, a
                sign = -sign
            fixed.append((a, b))
        fixed.sort()
        return ChordDiagram(self.n, tuple(fixed)), sign

    def index_string(self) -> tuple[int, ...]:
        """Flattened a1,b1,...,an,bn used for lexicographic comparison."""
        return tuple(v for chord in self.chords for v in chord)

    def unoriented(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(chord) for chord in self.chords)

    def is_noncrossing(self) -> bool:
        """True when no two chords interleave around the circle."""
        spans = [tuple(sorted(chord)) for chord in self.chords]
        for i, (a, b) in enumerate(spans):
            for c, d in spans[i + 1:]:
                if (a < c < b < d) or (c < a < d < b):
                    return False
        return True

    def rotate_half_turn(self) -> "ChordDiagram":
        """Shift every node by n mod 2n, keeping each chord's orientation."""
        two_n = 2 * self.n
        shifted = tuple(
            (
                (a + self.n - 1) % two_n + 1,
                (b + self.n - 1) % two_n + 1,
            )
            for a, b in self.chords
        )
        return ChordDiagram(self.n, shifted)

    def has_half_turn_symmetry(self) -> bool:
        return self.unoriented() == self.rotate_half_turn().unoriented()

    def midline_crossing_count(self) -> int:
        """Chords with one node in 1..n and the other in n+1..2n."""
        return sum(
            1 for a, b in self.chords if (a <= self.n) != (b <= self.n)
        )


def lex_compare(d: ChordDiagram, e: ChordDiagram) -> int:
    """-1, 0, or 1 ordering canonical diagrams by index string."""
    if d.n != e.n:
        raise ValueError(f"cannot compare diagrams with n={d.n} and n={e.n}")
    left, right = d.index_string(), e.index_string()
    return (left > right) - (left < right)


def pizza_diagram(n: int) -> ChordDiagram:
    """The diagram pairing node i with node i+n for i = 1..n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return ChordDiagram(n, tuple((i, i + n) for i in range(1, n + 1)))


def enumerate_noncrossing(n: int) -> list[ChordDiagram]:
    """All noncrossing diagrams on 2n nodes, canonical, in lex order.

    The count is the n-th Catalan number.
    """
    if not 1 <= n <= MAX_NODES_N:
        raise ValueError(f"n must be in 1..{MAX_NODES_N}, got {n}")
    nodes = tuple(range(1, 2 * n + 1))
    diagrams = [
        ChordDiagram(n, chords) for chords in _noncrossing_matchings(nodes)
    ]
    diagrams.sort(key=ChordDiagram.index_string)
    return diagrams


def representative_set(n: int) -> list[ChordDiagram]:
    """One diagram from each non-symmetric half-turn pair, in lex order.

    A non-symmetric noncrossing diagram D is kept when it precedes the
    canonical form of its half-turn rotation lexicographically.
    """
    kept = []
    for diagram in enumerate_noncrossing(n):
        if diagram.has_half_turn_symmetry():
            continue
        rotated, _ = diagram.rotate_half_turn().canonicalize()
        if lex_compare(diagram, rotated) < 0:
            kept.append(diagram)
    return kept


def format_diagram(d: ChordDiagram) -> str:
    """Text form ``n; a1-b1, a2-b2, ...``."""
    body = ", ".join(f"{a}-{b}" for a, b in d.chords)
    return f"{d.n}; {body}"


def parse_diagram(text: str) -> ChordDiagram:
    """Parse the ``n; a1-b1, a2-b2, ...`` text form."""
    try:
        head, _, body = text.partition(";")
        n = int(head.strip())
        chords = []
        for item in body.split(","):
            a, _, b = item.strip().partition("-")
            chords.append((int(a), int(b)))
        return ChordDiagram(n, tuple(chords))
    except ValueError:
        raise
    except Exception as exc:  # int() and partition misuse on malformed text
        raise ValueError(f"malformed diagram literal: {text!r}") from exc


def _noncrossing_matchings(nodes: tuple[int, ...]) -> Iterator[tuple[Chord, ...]]:
    if not nodes:
        yield ()
        return
    first = nodes[0]
    # Partner must leave an even number of nodes strictly inside, and the
    # inside must match within itself: that is exactly noncrossing.
    for idx in range(1, len(nodes), 2):
        partner = nodes[idx]
        inside, outside = nodes[1:idx], nodes[idx + 1:]
        for inner in _noncrossing_matchings(inside):
            for outer in _noncrossing_matchings(outside):
                yield ((first, partner),) + inner + outer

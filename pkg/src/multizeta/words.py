"""Compositions, binary words, and block vectors.

Conventions used throughout the package:

* A multiple zeta value is indexed by a composition (n_1, ..., n_r) and sums
  over 0 < k_1 < k_2 < ... < k_r, so convergence requires the *last* part to
  be at least 2.
* The binary word of a composition is the full integration word, boundary
  symbols included: 0, then 1 0^(n_1 - 1) ... 1 0^(n_r - 1), then 1.  Its
  length is weight + 2, and admissibility of the composition is equivalent to
  the word starting with 01 and ending with 01.
* A block vector (b_0, ..., b_{2n}) with an odd number of entries encodes the
  interleaved composition ({2}^b_0, 1, {2}^b_1, 3, ..., 3, {2}^b_{2n}); its
  word is a concatenation of alternating two-symbol blocks, (01)^(b_i + 1)
  for even i and (10)^(b_i + 1) for odd i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

__all__ = [
    "Composition",
    "BinaryWord",
    "BlockVector",
    "composition_to_word",
    "blockvector_to_composition",
    "blockvector_to_word",
    "weight_of",
    "sign_of",
]


@dataclass(frozen=True)
class Composition:
    """A finite sequence of positive integer parts indexing a zeta value."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def is_admissible(self) -> bool:
        """True when the associated series converges (last part >= 2).

        The empty composition is admissible by convention; it evaluates to 1.
        """
        if not self.parts:
            return True
        return self.parts[-1] >= 2

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class BinaryWord:
    """A word over {0, 1}, boundary symbols included."""

    symbols: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.symbols) < 2:
            raise ValueError("a full word has at least 2 symbols (its boundaries)")
        for s in self.symbols:
            if s not in (0, 1):
                raise ValueError(f"word symbols must be 0 or 1, got {s!r}")

    @classmethod
    def from_string(cls, text: str) -> "BinaryWord":
        return cls(tuple(int(ch) for ch in text))

    @property
    def interior_length(self) -> int:
        """Number of symbols strictly between the two boundaries."""
        return len(self.symbols) - 2

    def reverse(self) -> "BinaryWord":
        return BinaryWord(tuple(reversed(self.symbols)))

    def is_admissible(self) -> bool:
        # The length-2 boundary word stands for the empty integral, value 1.
        if len(self.symbols) == 2:
            return self.symbols == (0, 1)
        return (
            len(self.symbols) >= 4
            and self.symbols[:2] == (0, 1)
            and self.symbols[-2:] == (0, 1)
        )

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return "".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class BlockVector:
    """Nonnegative insertion counts (b_0, ..., b_{2n}), always of odd length."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) % 2 == 0 or not self.entries:
            raise ValueError(
                f"a block vector has an odd number of entries, got {len(self.entries)}"
            )
        for b in self.entries:
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"block vector entries must be >= 0, got {b!r}")

    @property
    def n(self) -> int:
        """Half the number of 1,3 separator pairs; entry count is 2n + 1."""
        return (len(self.entries) - 1) // 2

    @property
    def weight(self) -> int:
        return weight_of(self)

    @property
    def depth(self) -> int:
        return 2 * self.n + sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.entries) + "]"


def composition_to_word(c: Composition) -> BinaryWord:
    """Full integration word of an admissible composition.

    Raises ValueError when the composition is non-admissible, since the
    integral representation only exists for convergent values.
    """
    symbols = [0]
    for p in c.parts:
        symbols.append(1)
        symbols.extend([0] * (p - 1))
    symbols.append(1)
    word = BinaryWord(tuple(symbols))
    if not word.is_admissible():
        raise ValueError(f"composition {c} is not admissible (last part must be >= 2)")
    return word


def blockvector_to_composition(b: BlockVector) -> Composition:
    """Interleave runs of 2s with the alternating 1, 3, 1, 3, ..., 3 spine."""
    parts = []
    separators = [1, 3] * b.n
    for i, count in enumerate(b.entries):
        parts.extend([2] * count)
        if i < len(separators):
            parts.append(separators[i])
    return Composition(tuple(parts))


def blockvector_to_word(b: BlockVector) -> BinaryWord:
    """Concatenate the alternating blocks (01)^(b_i+1), (10)^(b_i+1)."""
    symbols = []
    for i, count in enumerate(b.entries):
        block = (0, 1) if i % 2 == 0 else (1, 0)
        symbols.extend(block * (count + 1))
    return BinaryWord(tuple(symbols))


def weight_of(b: BlockVector) -> int:
    """Weight of the encoded zeta value: 4n + 2 * sum(b_i)."""
    return 4 * b.n + 2 * sum(b.entries)


def sign_of(c: Composition) -> int:
    """Depth sign (-1)^depth relating the series to its word integral."""
    return -1 if c.depth % 2 else 1

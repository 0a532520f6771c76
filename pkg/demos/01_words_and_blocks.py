"""Tour of the notation: compositions, integration words, block vectors.

Run as: python3 demos/01_words_and_blocks.py
"""

from multizeta import (
    BlockVector,
    Composition,
    blockvector_to_composition,
    blockvector_to_word,
    composition_to_word,
    sign_of,
    weight_of,
)

# A multiple zeta value is indexed by a composition; it converges when the
# last part is at least 2.
c = Composition((1, 3))
print(f"composition {c}: weight {c.weight}, depth {c.depth}, "
      f"admissible: {c.is_admissible()}")

# Its integration word keeps both boundary symbols, so the length is
# weight + 2.  Admissibility is visible at the word level: the word starts
# with 01 and ends with 01.
word = composition_to_word(c)
print(f"word of {c}: {word} (interior length {word.interior_length})")

# Interleaving runs of 2s with the alternating 1,3 spine is recorded by a
# block vector with an odd number of entries.
b = BlockVector((1, 1, 1))
print(f"\nblock vector {b}: n = {b.n}, weight {weight_of(b)}, depth {b.depth}")
print(f"encoded composition: {blockvector_to_composition(b)}")

# The word of a block vector is a chain of two-symbol blocks, alternating
# 01 and 10; entry b_i contributes b_i + 1 copies of its block.
print(f"block word: {blockvector_to_word(b)}")
print(f"same word from the composition: "
      f"{composition_to_word(blockvector_to_composition(b))}")

# The series and its word integral differ by the depth sign.
for entries in [(0, 0, 0), (1, 0, 0), (1, 1, 1)]:
    vec = BlockVector(entries)
    comp = blockvector_to_composition(vec)
    print(f"{vec} -> {comp}, sign {sign_of(comp):+d}")

# Non-admissible compositions have no integral representation and are
# rejected up front.
try:
    composition_to_word(Composition((3, 1)))
except ValueError as exc:
    print(f"\nrejected as expected: {exc}")

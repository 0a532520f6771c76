"""Cancellation certificates for symmetrized insertion sums.

An instance is built from a block vector a: its word set C consists of the
distinct permutations of a's entries, each standing for one zeta value of
the symmetrized sum, together with the multiplicity lambda = (2n+1)! / |C|
carried by every word.  Because lambda and the common depth sign factor out
of every degree-r derivation, the verifier works with unweighted, unsigned
term lists and records both constants in the certificate.

Each odd degree r is checked along two independent routes:

1. Orbit route: all odd encodings of length r + 2 over C are enumerated and
   paired under the offset-swapping involution.  Each orbit is checked to
   consist of mutually reversed cut subwords (odd interior, so their
   integrals are opposite) sitting over equal quotient words, which makes
   the paired terms cancel.  The encodings found are also checked to match,
   word by word, the windows of the degree-r cut that survive the boundary
   filter.
2. Expansion route: the degree-r terms of every word in C are expanded and
   accumulated modulo left-factor reversal; the result must be the empty
   multiset.

A certificate collects one record per odd degree 3 <= r < weight together
with a verdict.  Serialization is deterministic: fixed key order, no
timestamps, and a digest of the sorted encoding list per check.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, List, Tuple, Union

from .coaction import TermMultiset, dr_candidate_windows, dr_terms, accumulate
from .encodings import (
    _pair_up,
    enumerate_odd_encodings,
    quotient_of,
    subsequence_of,
    window_of,
)
from .words import BlockVector, blockvector_to_word, weight_of

__all__ = [
    "InsertionInstance",
    "CheckRecord",
    "CancellationCertificate",
    "build_instance",
    "expansion_residual",
    "verify_cancellation",
    "verify_instance",
]

BlockVectorLike = Union[BlockVector, Iterable[int]]


@dataclass(frozen=True)
class InsertionInstance:
    """A symmetrized insertion sum: word set, multiplicity, and global sign."""

    base: BlockVector
    words: Tuple[BlockVector, ...]
    multiplicity: int
    weight: int
    sign: int

    @property
    def n(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one degree-r check."""

    r: int
    window_count: int
    encoding_count: int
    orbit_count: int
    residual_size: int
    encodings_sha256: str
    failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.residual_size == 0 and not self.failures


@dataclass(frozen=True)
class CancellationCertificate:
    instance: InsertionInstance
    checks: Tuple[CheckRecord, ...]

    @property
    def verdict(self) -> str:
        return "verified" if all(c.ok for c in self.checks) else "failed"

    def to_json_dict(self) -> dict:
        checks = []
        for c in self.checks:
            entry = {
                "r": c.r,
                "windows": c.window_count,
                "encodings": c.encoding_count,
                "orbits": c.orbit_count,
                "residual": c.residual_size,
                "encodings_sha256": c.encodings_sha256,
            }
            if c.failures:
                entry["failures"] = list(c.failures)
            checks.append(entry)
        inst = self.instance
        return {
            "version": "cert-v1",
            "a": list(inst.base.entries),
            "n": inst.n,
            "weight": inst.weight,
            "lambda": inst.multiplicity,
            "word_count": len(inst.words),
            "sign": inst.sign,
            "checks": checks,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def build_instance(a: BlockVectorLike) -> InsertionInstance:
    """Expand a block vector into its full permutation instance.

    The multiplicity satisfies lambda * |C| = (2n+1)! exactly, and the depth
    of the encoded composition is the same for every word (permutations move
    insertion counts around without changing their sum), so the instance
    carries a single well-defined sign.
    """
    base = a if isinstance(a, BlockVector) else BlockVector(tuple(a))
    words = tuple(BlockVector(p) for p in sorted(set(permutations(base.entries))))
    order = factorial(len(base))
    multiplicity, rem = divmod(order, len(words))
    if rem:
        raise AssertionError(f"word count {len(words)} does not divide {order}")
    depths = {w.depth for w in words}
    if len(depths) != 1:
        raise AssertionError(f"depth not constant across permutations of {base}")
    sign = -1 if depths.pop() % 2 else 1
    return InsertionInstance(
        base=base,
        words=words,
        multiplicity=multiplicity,
        weight=weight_of(base),
        sign=sign,
    )


def expansion_residual(words: Iterable[BlockVector], r: int) -> TermMultiset:
    """Accumulated degree-r terms of a word collection; empty means they sum to zero."""
    terms = []
    for w in words:
        terms.extend(dr_terms(blockvector_to_word(w), r))
    return accumulate(terms)


def verify_cancellation(instance: InsertionInstance, r: int) -> CheckRecord:
    """Run both proof routes for one odd degree and record the outcome."""
    if r % 2 == 0 or r < 3:
        raise ValueError(f"cancellation degree must be odd and >= 3, got {r}")
    if r >= instance.weight:
        raise ValueError(f"degree {r} is not below the weight {instance.weight}")

    failures: List[str] = []
    window_count = 0
    encodings = []
    for w in instance.words:
        word = blockvector_to_word(w)
        candidates = dr_candidate_windows(word, r)
        window_count += len(candidates)
        surviving = {
            (v.start, v.start + v.length)
            for v in candidates
            if word[v.start] != word[v.start + v.length - 1]
        }
        encs = enumerate_odd_encodings(w, r + 2)
        encodings.extend(encs)
        positions = {window_of(e) for e in encs}
        if positions != surviving:
            failures.append(
                f"window sets disagree on {w} at r={r}: "
                f"encoded {sorted(positions)} vs surviving {sorted(surviving)}"
            )

    orbits, pair_failures = _pair_up(encodings)
    failures.extend(pair_failures)
    for orb in orbits:
        sub_a = subsequence_of(orb.first)
        sub_b = subsequence_of(orb.second)
        if sub_a.symbols != tuple(reversed(sub_b.symbols)):
            failures.append(
                f"orbit subwords are not mutual reversals: {orb.first} / {orb.second}"
            )
        if quotient_of(orb.first) != quotient_of(orb.second):
            failures.append(f"orbit quotients differ: {orb.first} / {orb.second}")

    residual = expansion_residual(instance.words, r)
    for (left, right), coeff in residual.items():
        failures.append(f"residual term left={left} right={right} coefficient={coeff}")

    digest = hashlib.sha256(
        "\n".join(sorted(str(e) for e in encodings)).encode("ascii")
    ).hexdigest()
    return CheckRecord(
        r=r,
        window_count=window_count,
        encoding_count=len(encodings),
        orbit_count=len(orbits),
        residual_size=len(residual),
        encodings_sha256=digest,
        failures=tuple(failures),
    )


def verify_instance(instance: InsertionInstance) -> CancellationCertificate:
    """Check every odd degree 3 <= r < weight and assemble the certificate."""
    checks = tuple(
        verify_cancellation(instance, r) for r in range(3, instance.weight, 2)
    )
    return CancellationCertificate(instance=instance, checks=checks)

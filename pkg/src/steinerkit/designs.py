"""Designs on points 0..v-1: counts, verification, and explicit constructions.

All arithmetic is exact; block-count formulas return Fractions so that
non-integrality is visible to the admissibility layer instead of being
rounded away.  Blocks are strictly increasing tuples and a design's block
list is duplicate-free and lexicographically sorted, giving deterministic
equality and diffable serialized output.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from math import comb
from typing import Optional

from .errors import CapacityError

DEFAULT_VERIFY_CAP = 10**8
DEFAULT_BOOLEAN_CAP = 16


@dataclass(frozen=True)
class DesignParameters:
    """The quadruple (t, v, k, lambda) with basic range validation."""

    t: int
    v: int
    k: int
    lam: int

    def __post_init__(self):
        for name in ("t", "v", "k", "lam"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError("%s must be a positive integer, got %r" % (name, value))
        if not self.t <= self.k <= self.v:
            raise ValueError(
                "need t <= k <= v, got t=%d k=%d v=%d" % (self.t, self.k, self.v)
            )

    def nontrivial(self):
        return self.t < self.k < self.v

    def block_count(self):
        """Exact b = lambda * C(v,t) / C(k,t), as a Fraction."""
        return lambda_s(self, 0)

    def replication(self):
        """Exact r = lambda_1."""
        return lambda_s(self, 1) if self.t >= 1 else Fraction(self.lam)


def lambda_s(params, s):
    """Blocks through a fixed s-subset: lambda * C(v-s, t-s) / C(k-s, t-s).

    Exact rational; integrality is a separate admissibility question.
    """
    if not 0 <= s <= params.t:
        raise ValueError("s must lie in [0, t]=[0, %d], got %r" % (params.t, s))
    return Fraction(
        params.lam * comb(params.v - s, params.t - s), comb(params.k - s, params.t - s)
    )


class Design:
    """A block design: parameters plus a sorted, duplicate-free block list."""

    __slots__ = ("params", "blocks")

    def __init__(self, params, blocks):
        seen = set()
        canon = []
        blocks = list(blocks)
        for i, block in enumerate(blocks):
            block = tuple(block)
            if len(block) != params.k:
                raise ValueError(
                    "blocks[%d] has %d points, expected k=%d" % (i, len(block), params.k)
                )
            for j, p in enumerate(block):
                if not isinstance(p, int) or not 0 <= p < params.v:
                    raise ValueError(
                        "blocks[%d][%d]=%r out of point range [0, %d)" % (i, j, p, params.v)
                    )
                if j and block[j - 1] >= p:
                    raise ValueError(
                        "blocks[%d] is not strictly increasing at position %d" % (i, j)
                    )
            if block in seen:
                raise ValueError("duplicate block %r (blocks[%d])" % (block, i))
            seen.add(block)
            canon.append(block)
        canon.sort()
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "blocks", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("Design is immutable")

    @property
    def b(self):
        return len(self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, Design)
            and self.params == other.params
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.params, self.blocks))

    def __repr__(self):
        p = self.params
        return "Design(%d-(%d,%d,%d), %d blocks)" % (p.t, p.v, p.k, p.lam, self.b)


@dataclass(frozen=True)
class Flag:
    """An incident point-block pair; the block is referenced by index."""

    point: int
    block_index: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exhaustive cover-count check.

    covered_lambda is present exactly when every t-subset of the point set
    lies in the same number of blocks (that common count); otherwise
    failing_witness holds the lexicographically least t-subset whose count
    differs from the declared lambda, paired with its count.
    """

    is_uniform: bool
    covered_lambda: Optional[int]
    failing_witness: Optional[tuple]

    def matches(self, params):
        return self.covered_lambda == params.lam


def verify(design, cap=DEFAULT_VERIFY_CAP, workers=1):
    """Exhaustively count block covers of every t-subset of the point set.

    Counting walks each block's C(k,t) sub-subsets (total lambda*C(v,t)
    increments for a valid design); the t-subsets themselves are only
    enumerated on the failure path, lexicographically, so the reported
    witness is the lexicographic minimum.  Refuses (CapacityError) when
    C(v,t) exceeds ``cap``.
    """
    params = design.params
    t, v = params.t, params.v
    total = comb(v, t)
    if total > cap:
        raise CapacityError(
            "verify would cover C(%d,%d)=%d t-subsets, above the cap %d" % (v, t, total, cap)
        )
    is_uniform = all(len(block) == params.k for block in design.blocks)
    counts = _cover_counts(design.blocks, t, workers)
    if len(counts) == total:
        values = set(counts.values())
        if len(values) == 1:
            common = values.pop()
            witness = None
            if common != params.lam:
                witness = (min(counts), common)
            return VerificationReport(is_uniform, common, witness)
    elif not counts:
        # no blocks at all: every t-subset is covered zero times
        witness = None if params.lam == 0 else (tuple(range(t)), 0)
        return VerificationReport(is_uniform, 0, witness)
    for subset in combinations(range(v), t):
        count = counts.get(subset, 0)
        if count != params.lam:
            return VerificationReport(is_uniform, None, (subset, count))
    raise AssertionError("unreachable: non-constant counts with no witness")


def _count_chunk(blocks, t):
    counts = {}
    for block in blocks:
        for sub in combinations(block, t):
            counts[sub] = counts.get(sub, 0) + 1
    return counts


def _cover_counts(blocks, t, workers):
    if workers <= 1 or len(blocks) < 4 * workers or len(blocks) < 50000:
        return _count_chunk(blocks, t)
    import multiprocessing

    chunk = (len(blocks) + workers - 1) // workers
    pieces = [blocks[i : i + chunk] for i in range(0, len(blocks), chunk)]
    with multiprocessing.Pool(workers) as pool:
        results = pool.starmap(_count_chunk, [(piece, t) for piece in pieces])
    merged = results[0]
    for extra in results[1:]:
        for key, value in extra.items():
            merged[key] = merged.get(key, 0) + value
    return merged


def derived(design, x):
    """Design on the blocks through x with x removed, points relabelled.

    Parameters map (t,v,k,lam) -> (t-1, v-1, k-1, lam); points above x
    shift down by one.
    """
    params = design.params
    if params.t < 2:
        raise ValueError("derived design needs t >= 2, got t=%d" % params.t)
    if not 0 <= x < params.v:
        raise ValueError("point %r out of range [0, %d)" % (x, params.v))
    new_params = DesignParameters(params.t - 1, params.v - 1, params.k - 1, params.lam)
    new_blocks = []
    for block in design.blocks:
        if x in block:
            new_blocks.append(tuple(p if p < x else p - 1 for p in block if p != x))
    return Design(new_params, new_blocks)


def construct_boolean(n, cap=DEFAULT_BOOLEAN_CAP, verify_cap=DEFAULT_VERIFY_CAP):
    """The quadruple system on the 2^n bit vectors: blocks are the 4-sets
    with zero XOR.

    Every 3-set {a,b,c} extends by d = a^b^c to exactly one block, so the
    result is a 3-(2^n, 4, 1) design; for small n this is re-checked by the
    exhaustive verifier.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError("n must be an integer >= 3, got %r" % (n,))
    if n >= cap:
        raise CapacityError("boolean construction cap: need n < %d, got %d" % (cap, n))
    v = 2**n
    blocks = []
    for a, b, c in combinations(range(v), 3):
        d = a ^ b ^ c
        if d > c:
            blocks.append((a, b, c, d))
    design = Design(DesignParameters(3, v, 4, 1), blocks)
    if comb(v, 3) <= verify_cap:
        report = verify(design, cap=verify_cap)
        if report.covered_lambda != 1:
            raise AssertionError("boolean construction failed verification (bug)")
    return design


def flags(design):
    """All incident point-block pairs, ordered by (block index, point)."""
    return [
        Flag(point=x, block_index=bi)
        for bi in range(len(design.blocks))
        for x in design.blocks[bi]
    ]


def complete_design(v, k, t):
    """All k-subsets of [0, v): a t-(v, k, C(v-t, k-t)) design."""
    if not 1 <= t <= k <= v:
        raise ValueError("need 1 <= t <= k <= v")
    params = DesignParameters(t, v, k, comb(v - t, k - t))
    return Design(params, combinations(range(v), k))


def fano_plane():
    """The 2-(7,3,1) design generated by the difference set {0,1,3} mod 7."""
    blocks = [tuple(sorted(((0 + i) % 7, (1 + i) % 7, (3 + i) % 7))) for i in range(7)]
    return Design(DesignParameters(2, 7, 3, 1), blocks)


# -- interchange format -------------------------------------------------------


def design_to_json_dict(design):
    p = design.params
    return {
        "t": p.t,
        "v": p.v,
        "k": p.k,
        "lambda": p.lam,
        "blocks": [list(block) for block in design.blocks],
    }


def design_to_json(design, indent=None):
    return json.dumps(design_to_json_dict(design), indent=indent)


def design_from_json_dict(data):
    """Validate and load the interchange object; errors carry positions."""
    if not isinstance(data, dict):
        raise ValueError("design json: expected an object")
    for key in ("t", "v", "k", "lambda", "blocks"):
        if key not in data:
            raise ValueError("design json: missing key %r" % key)
    for key in ("t", "v", "k", "lambda"):
        if not isinstance(data[key], int):
            raise ValueError("design json: %r must be an integer, got %r" % (key, data[key]))
    params = DesignParameters(data["t"], data["v"], data["k"], data["lambda"])
    blocks = data["blocks"]
    if not isinstance(blocks, list):
        raise ValueError("design json: 'blocks' must be an array")
    for i, block in enumerate(blocks):
        if not isinstance(block, list):
            raise ValueError("design json: blocks[%d] must be an array" % i)
    design = Design(params, [tuple(block) for block in blocks])
    if list(design.blocks) != [tuple(block) for block in blocks]:
        raise ValueError("design json: blocks must be sorted lexicographically")
    return design


def design_from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError("design json: %s" % exc) from exc
    return design_from_json_dict(data)


def blocks_through(design, subset):
    """Indices of blocks containing every point of ``subset`` (exact count check)."""
    subset = set(subset)
    return [i for i, block in enumerate(design.blocks) if subset.issubset(block)]


def head_blocks(design, count):
    """First ``count`` blocks in canonical order (for reports)."""
    return list(islice(design.blocks, count))

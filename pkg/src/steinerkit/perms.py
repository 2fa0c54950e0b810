"""Permutations and permutation groups with exact stabilizer-chain machinery.

Permutations act on points 0..degree-1.  Composition is left-to-right:
``(p * q)(x) == q(p(x))``, i.e. apply ``p`` first.  Groups build a
deterministic stabilizer chain eagerly at construction (base points chosen
smallest-moved-point first, optionally behind a caller-supplied base prefix),
which gives exact orders as products of transversal lengths and exact
membership tests by sifting.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError, MembershipError, NotAutomorphismError

DEFAULT_SUBSET_CAP = 10**7


class Permutation:
    """An immutable bijection on 0..degree-1, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images are not a bijection on 0..%d" % (len(images) - 1))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build a permutation from disjoint (or successively applied) cycles."""
        images = list(range(degree))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError("repeated point in cycle %r" % (cycle,))
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        # apply self, then other
        q = other.images
        return Permutation(q[x] for x in self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def apply_set(self, points):
        """Image of a point set, returned as a sorted tuple."""
        return tuple(sorted(self.images[p] for p in points))

    def apply_tuple(self, points):
        """Image of an ordered point tuple."""
        return tuple(self.images[p] for p in points)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def min_moved(self):
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def order(self):
        seen = [False] * self.degree
        result = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            result = _lcm(result, length)
        return result

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            j = self.images[start]
            while j != start:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(%s)" % " ".join(map(str, c)) for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % self.cycle_string()


def _lcm(a, b):
    from math import gcd

    return a // gcd(a, b) * b


_CYCLE_RE = re.compile(r"\(([\d\s,]*)\)")


def parse_cycles(text, degree=None):
    """Parse disjoint cycle notation like ``"(0 1 2)(3 4)"``.

    Whitespace and commas both separate points.  ``degree`` defaults to one
    more than the largest point mentioned.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        if degree is None:
            raise ValueError("cannot infer degree from identity cycle text")
        return Permutation.identity(degree)
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise ValueError("could not parse cycle text %r (unexpected %r)" % (text, leftover))
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        body = match.group(1).strip()
        if body:
            cycles.append([int(tok) for tok in re.split(r"[\s,]+", body)])
    if not cycles:
        if degree is None:
            raise ValueError("cannot infer degree from identity cycle text")
        return Permutation.identity(degree)
    if degree is None:
        degree = max(max(c) for c in cycles) + 1
    return Permutation.from_cycles(degree, cycles)


class PermutationGroup:
    """A permutation group given by generators, with an eager stabilizer chain.

    The chain is deterministic: base points come from ``base_prefix`` first,
    then smallest moved points of offending residues; transversals are built
    by breadth-first search in generator order.  ``order`` is the exact
    product of transversal lengths.
    """

    def __init__(self, generators, degree=None, base_prefix=()):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a generator-free group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree %d != group degree %d" % (g.degree, degree))
        self.degree = degree
        seen = set()
        kept = []
        for g in gens:
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            kept.append(g)
        self.generators = tuple(kept)

        self.base = [int(b) for b in base_prefix]
        if len(set(self.base)) != len(self.base):
            raise ValueError("base prefix contains repeats")
        for b in self.base:
            if not 0 <= b < degree:
                raise ValueError("base point %d out of range" % b)
        # level i holds the strong generators fixing base[:i]
        self._level_gens = [list(self.generators)]
        for i, b in enumerate(self.base):
            self._level_gens.append([g for g in self._level_gens[i] if g(b) == b])
        for g in self.generators:
            if all(g(b) == b for b in self.base):
                mm = g.min_moved()
                self.base.append(mm)
                self._level_gens.append([h for h in self._level_gens[-1] if h(mm) == mm])
        self._transversals = [None] * len(self.base)
        self._schreier_sims()
        order = 1
        for trans in self._transversals:
            order *= len(trans)
        self.order = order

    # -- chain construction -------------------------------------------------

    def _orbit_transversal(self, level):
        b = self.base[level]
        gens = self._level_gens[level]
        trans = {b: Permutation.identity(self.degree)}
        queue = [b]
        for point in queue:
            u = trans[point]
            for g in gens:
                image = g(point)
                if image not in trans:
                    trans[image] = u * g
                    queue.append(image)
        self._transversals[level] = trans

    def _sift_from(self, perm, level):
        """Reduce ``perm`` through levels >= ``level``.

        Returns ``(residue, dropout)`` where ``dropout`` is the first level
        whose transversal cannot absorb the residue, or ``len(base)`` if the
        residue passed every level (identity iff membership).
        """
        g = perm
        for lev in range(level, len(self.base)):
            image = g(self.base[lev])
            trans = self._transversals[lev]
            if image not in trans:
                return g, lev
            g = g * trans[image].inverse()
        return g, len(self.base)

    def _schreier_sims(self):
        if not self.base:
            return
        for level in range(len(self.base)):
            self._orbit_transversal(level)
        level = len(self.base) - 1
        while level >= 0:
            jump = self._close_level(level)
            if jump is None:
                level -= 1
            else:
                level = jump

    def _close_level(self, level):
        """Sift all Schreier generators of ``level`` through deeper levels.

        Returns the level to reprocess when a new strong generator was
        installed, or None when the level verified clean.
        """
        self._orbit_transversal(level)
        trans = self._transversals[level]
        gens = self._level_gens[level]
        for point in sorted(trans):
            u = trans[point]
            for s in gens:
                image = s(point)
                schreier = u * s * trans[image].inverse()
                if schreier.is_identity():
                    continue
                residue, dropout = self._sift_from(schreier, level + 1)
                if residue.is_identity():
                    continue
                if dropout == len(self.base):
                    new_point = residue.min_moved()
                    self.base.append(new_point)
                    self._level_gens.append([])
                    self._transversals.append(None)
                for j in range(level + 1, dropout + 1):
                    self._level_gens[j].append(residue)
                self._orbit_transversal(dropout)
                return dropout
        return None

    # -- queries ------------------------------------------------------------

    @classmethod
    def trivial(cls, degree):
        return cls([], degree=degree)

    def sift(self, perm):
        """Full sift from the top; identity residue means membership."""
        if perm.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, _ = self._sift_from(perm, 0)
        return residue

    def __contains__(self, perm):
        return self.sift(perm).is_identity()

    def orbit(self, point):
        """Orbit of a point, sorted."""
        seen = {point}
        queue = [point]
        for p in queue:
            for g in self.generators:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return tuple(sorted(seen))

    def point_orbits(self):
        """All point orbits, each sorted, ordered by least element."""
        remaining = set(range(self.degree))
        out = []
        while remaining:
            seed = min(remaining)
            orb = self.orbit(seed)
            out.append(orb)
            remaining.difference_update(orb)
        return out

    def is_transitive(self):
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def elements(self, max_elements=10**6):
        """Iterate all group elements (deterministic order)."""
        if self.order > max_elements:
            raise CapacityError(
                "group order %d exceeds element enumeration cap %d" % (self.order, max_elements)
            )
        identity = Permutation.identity(self.degree)
        if not self.base:
            yield identity
            return

        def rec(level, tail):
            if level == len(self.base):
                yield tail
                return
            trans = self._transversals[level]
            for point in sorted(trans):
                yield from rec(level + 1, trans[point] * tail)

        # tail accumulates shallower transversal factors, applied last
        yield from rec(0, identity)

    # -- stabilizers ----------------------------------------------------------

    def stabilizer_point(self, x):
        """Stabilizer of a point (exact, via a chain based at x)."""
        return self.stabilizer_pointwise([x])

    def stabilizer_pair(self, x, y):
        """Stabilizer of an ordered point pair (fixes both points)."""
        if x == y:
            raise ValueError("pair stabilizer needs two distinct points")
        return self.stabilizer_pointwise([x, y])

    def stabilizer_pointwise(self, points):
        """Subgroup fixing every listed point."""
        points = list(points)
        for p in points:
            if not 0 <= p < self.degree:
                raise ValueError("point %d out of range" % p)
        rebased = PermutationGroup(self.generators, self.degree, base_prefix=points)
        gens = rebased._level_gens[len(points)]
        return PermutationGroup(gens, self.degree)

    def stabilizer_setwise(self, block):
        """Setwise stabilizer of a point set, by backtracking over the chain.

        Exhaustively enumerates the elements mapping the set onto itself,
        pruning branches whose decided base-point images already violate set
        membership.  Exact; intended for desk-scale groups.
        """
        block = sorted(set(block))
        for p in block:
            if not 0 <= p < self.degree:
                raise ValueError("point %d out of range" % p)
        bset = frozenset(block)
        chain = PermutationGroup(self.generators, self.degree, base_prefix=block)
        base = chain.base
        nlevels = len(base)
        identity = Permutation.identity(self.degree)
        target = tuple(block)
        found = []
        known = PermutationGroup.trivial(self.degree)

        def rec(level, post):
            # post = composition of the transversal elements chosen at
            # shallower levels; the final image of base[level] is post(gamma).
            nonlocal known
            if level == nlevels:
                if post.apply_set(block) == target and not post.is_identity():
                    if post not in known:
                        found.append(post)
                        known = PermutationGroup(found, self.degree)
                return
            trans = chain._transversals[level]
            inside = base[level] in bset
            post_images = post.images
            for gamma in sorted(trans):
                if (post_images[gamma] in bset) != inside:
                    continue
                rec(level + 1, trans[gamma] * post)

        rec(0, identity)
        return known

    def stabilizer_point_in_block(self, x, block):
        """Stabilizer of an incident point-and-set pair (G_x intersect G_B)."""
        if x not in set(block):
            raise ValueError("point %d is not in the block" % x)
        return self.stabilizer_point(x).stabilizer_setwise(block)

    # -- subset / tuple actions ----------------------------------------------

    def subset_orbits(self, m, cap=DEFAULT_SUBSET_CAP):
        """Orbit representatives and sizes of the action on m-subsets.

        Representatives are the lexicographically least members of their
        orbits, listed in lexicographic order; sizes sum to C(degree, m).
        """
        reps, sizes, _ = self.subset_orbit_partition(m, cap=cap)
        return list(zip(reps, sizes))

    def subset_orbit_partition(self, m, cap=DEFAULT_SUBSET_CAP):
        """Full orbit partition on m-subsets: (reps, sizes, subset -> index)."""
        total = comb(self.degree, m)
        if total > cap:
            raise CapacityError(
                "%d-subset enumeration size %d exceeds cap %d" % (m, total, cap)
            )
        index_of = {}
        reps = []
        sizes = []
        for seed in combinations(range(self.degree), m):
            if seed in index_of:
                continue
            idx = len(reps)
            orbit = {seed}
            queue = [seed]
            for sub in queue:
                for g in self.generators:
                    image = g.apply_set(sub)
                    if image not in orbit:
                        orbit.add(image)
                        queue.append(image)
            for sub in orbit:
                index_of[sub] = idx
            reps.append(seed)
            sizes.append(len(orbit))
        return reps, sizes, index_of

    def _tuple_orbit_size(self, t):
        seed = tuple(range(t))
        orbit = {seed}
        queue = [seed]
        for tup in queue:
            for g in self.generators:
                image = g.apply_tuple(tup)
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        return len(orbit)

    def _subset_orbit_size(self, m):
        seed = tuple(range(m))
        orbit = {seed}
        queue = [seed]
        for sub in queue:
            for g in self.generators:
                image = g.apply_set(sub)
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        return len(orbit)

    def is_transitive_on_tuples(self, t, cap=DEFAULT_SUBSET_CAP):
        """Exact t-transitivity test (single orbit on distinct t-tuples)."""
        total = 1
        for i in range(t):
            total *= self.degree - i
        if total > cap:
            raise CapacityError("t=%d tuple enumeration size %d exceeds cap %d" % (t, total, cap))
        if total == 0:
            return False
        return self._tuple_orbit_size(t) == total

    def is_homogeneous(self, m, cap=DEFAULT_SUBSET_CAP):
        """Exact m-homogeneity test (single orbit on m-subsets)."""
        total = comb(self.degree, m)
        if total > cap:
            raise CapacityError("t=%d subset enumeration size %d exceeds cap %d" % (m, total, cap))
        if total == 0:
            return False
        return self._subset_orbit_size(m) == total


@dataclass(frozen=True)
class ActionReport:
    """Point-action summary: orbits plus exact transitivity/homogeneity degrees."""

    orbit_count_points: int
    orbit_lengths: tuple
    transitivity_degree: int
    homogeneity_degree: int
    tested_t_max: int


def homogeneity(group, t_max, cap=DEFAULT_SUBSET_CAP):
    """Exact transitivity and homogeneity degrees up to ``t_max``.

    Decided by explicit orbit counting on t-subsets and on distinct
    t-tuples; raises CapacityError naming the offending t when an
    enumeration would exceed ``cap``.
    """
    t_max = min(t_max, group.degree)
    orbits = group.point_orbits()
    trans_degree = 0
    homog_degree = 0
    trans_alive = True
    homog_alive = True
    for t in range(1, t_max + 1):
        if homog_alive and group.is_homogeneous(t, cap=cap):
            homog_degree = t
        else:
            homog_alive = False
        if trans_alive and group.is_transitive_on_tuples(t, cap=cap):
            trans_degree = t
        else:
            trans_alive = False
        if not homog_alive and not trans_alive:
            break
    return ActionReport(
        orbit_count_points=len(orbits),
        orbit_lengths=tuple(sorted(len(o) for o in orbits)),
        transitivity_degree=trans_degree,
        homogeneity_degree=homog_degree,
        tested_t_max=t_max,
    )


@dataclass(frozen=True)
class BlockActionReport:
    """Induced action of a group on a design's blocks and flags."""

    is_automorphism_group: bool
    block_orbit_count: int
    flag_orbit_count: int
    point_orbit_count: int
    is_block_transitive: bool
    is_flag_transitive: bool
    is_point_transitive: bool


def induced_block_action(group, design):
    """Check a group acts on a design and report its block/flag/point orbits.

    Every generator must map blocks to blocks; otherwise
    NotAutomorphismError carries the offending generator and block.
    """
    if group.degree != design.params.v:
        raise ValueError(
            "group degree %d != design point count %d" % (group.degree, design.params.v)
        )
    block_index = {blk: i for i, blk in enumerate(design.blocks)}
    induced = []
    for g in group.generators:
        images = []
        for blk in design.blocks:
            image = g.apply_set(blk)
            if image not in block_index:
                raise NotAutomorphismError(
                    "generator %s maps block %s outside the block set"
                    % (g.cycle_string(), blk),
                    generator=g,
                    block=blk,
                )
            images.append(block_index[image])
        induced.append(images)

    nblocks = len(design.blocks)
    block_orbits = _orbit_count(range(nblocks), [img.__getitem__ for img in induced])
    point_orbits = len(group.point_orbits())
    flags = [(x, bi) for bi in range(nblocks) for x in design.blocks[bi]]
    flag_maps = [
        (lambda flag, g=g, img=img: (g(flag[0]), img[flag[1]]))
        for g, img in zip(group.generators, induced)
    ]
    flag_orbits = _orbit_count(flags, flag_maps)
    return BlockActionReport(
        is_automorphism_group=True,
        block_orbit_count=block_orbits,
        flag_orbit_count=flag_orbits,
        point_orbit_count=point_orbits,
        is_block_transitive=block_orbits == 1,
        is_flag_transitive=flag_orbits == 1 and nblocks > 0,
        is_point_transitive=point_orbits == 1,
    )


def _orbit_count(items, maps):
    items = list(items)
    remaining = set(items)
    count = 0
    while remaining:
        seed = remaining.pop()
        queue = [seed]
        for item in queue:
            for f in maps:
                image = f(item)
                if image in remaining:
                    remaining.remove(image)
                    queue.append(image)
        count += 1
    return count


def group_to_json_dict(group):
    """Interchange form: degree plus generator image arrays."""
    return {
        "degree": group.degree,
        "generators": [list(g.images) for g in group.generators],
    }


def group_from_json_dict(data):
    """Read the interchange form; generators may be image arrays or cycle text."""
    if not isinstance(data, dict):
        raise ValueError("group json: expected an object")
    if "degree" not in data or "generators" not in data:
        raise ValueError("group json: missing 'degree' or 'generators'")
    degree = data["degree"]
    if not isinstance(degree, int) or degree <= 0:
        raise ValueError("group json: degree must be a positive integer")
    gens = []
    for i, entry in enumerate(data["generators"]):
        if isinstance(entry, str):
            gens.append(parse_cycles(entry, degree=degree))
        elif isinstance(entry, list):
            if len(entry) != degree:
                raise ValueError(
                    "group json: generators[%d] has length %d, expected %d"
                    % (i, len(entry), degree)
                )
            try:
                gens.append(Permutation(entry))
            except ValueError as exc:
                raise ValueError("group json: generators[%d]: %s" % (i, exc)) from exc
        else:
            raise ValueError("group json: generators[%d] must be an array or cycle text" % i)
    return PermutationGroup(gens, degree=degree)


def check_membership(group, perms):
    """Sift-check a batch of permutations; raise MembershipError on the first failure."""
    for p in perms:
        if p not in group:
            raise MembershipError("permutation %s is not a group member" % p.cycle_string())
    return True

"""Concrete permutation groups for the families the screening pipeline tests.

Projective groups act on the projective line over GF(q): point indices
0..q-1 are the field elements in the fixed basis order and index q is the
point at infinity.  Affine groups over GF(2) act on bit-vector indices.
Mathieu groups (and the affine group with point stabilizer A_7 on 16
points) load from bundled generator files whose expected orders are
re-verified by the stabilizer chain on every load; a mismatch fails closed.

Entries above the construction caps stay symbolic: they carry the family's
closed-form order so divisibility screening can run without building the
group.

The affine side of the candidate listing implements exactly the printed
classification list (AGL(1,8), AGammaL(1,8), AGammaL(1,32), the
2^d:SL(d,2) series, and 2^4:A7); whether that enumeration of affine cases
is exhaustive is a question the listing does not decide.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field as dc_field
from math import comb, factorial, gcd

from .errors import DataIntegrityError
from .gf import field, prime_power_decomposition
from .perms import Permutation, PermutationGroup

DEFAULT_DEGREE_CAP = 4096
PROJECTIVE_CONSTRUCT_CAP = 300
AFFINE_CONSTRUCT_CAP = 64
ALTERNATING_CONSTRUCT_CAP = 16

MATHIEU_ORDERS = {11: 7920, 12: 95040, 22: 443520, 23: 10200960, 24: 244823040}

DATA_ENV_VAR = "STEINERKIT_DATA"


# -- closed-form orders -------------------------------------------------------


def psl_order(q):
    return q * (q * q - 1) // gcd(2, q - 1)


def pgl_order(q):
    return q * (q * q - 1)


def pgammal_order(q):
    _, e = prime_power_decomposition(q)
    return e * pgl_order(q)


def psigmal_order(q):
    _, e = prime_power_decomposition(q)
    return e * psl_order(q)


def agl1_order(q):
    return q * (q - 1)


def agammal1_order(q):
    _, e = prime_power_decomposition(q)
    return q * (q - 1) * e


def agl_d2_order(d):
    order = 2**d
    for i in range(d):
        order *= 2**d - 2**i
    return order


# -- projective line constructions -------------------------------------------


def projective_translation(q):
    """x -> x + 1 on the projective line (infinity fixed)."""
    f = field(q)
    images = [f.add(x, 1) for x in range(q)] + [q]
    return Permutation(images)


def projective_scaling(q, square=False):
    """x -> c*x for the canonical generator c (or x -> c^2*x), fixing 0 and infinity."""
    f = field(q)
    c = f.mul(f.generator, f.generator) if square else f.generator
    images = [f.mul(c, x) for x in range(q)] + [q]
    return Permutation(images)


def projective_inversion(q):
    """x -> -1/x, swapping 0 and infinity (reduces to x -> 1/x in characteristic 2)."""
    f = field(q)
    images = [q] + [f.neg(f.inv(x)) for x in range(1, q)] + [0]
    return Permutation(images)


def projective_frobenius(q):
    """x -> x^p on the projective line (infinity fixed)."""
    f = field(q)
    images = [f.frobenius(x) for x in range(q)] + [q]
    return Permutation(images)


PROJECTIVE_KINDS = ("PSL", "PGL", "PSigmaL", "PGammaL")


def projective_group(kind, q):
    """PSL/PGL/PSigmaL/PGammaL(2,q) on the q+1 points of the projective line.

    Generated by x -> x+1, a scaling (primitive square for PSL/PSigmaL,
    primitive for PGL/PGammaL), x -> -1/x, plus the Frobenius x -> x^p for
    the semilinear kinds.  The stabilizer chain order is checked against
    the closed form at construction.
    """
    if kind not in PROJECTIVE_KINDS:
        raise ValueError("unknown projective kind %r" % (kind,))
    if prime_power_decomposition(q) is None or q <= 3:
        raise ValueError("q must be a prime power > 3, got %r" % (q,))
    gens = [
        projective_translation(q),
        projective_scaling(q, square=kind in ("PSL", "PSigmaL")),
        projective_inversion(q),
    ]
    if kind in ("PSigmaL", "PGammaL"):
        gens.append(projective_frobenius(q))
    expected = {
        "PSL": psl_order,
        "PGL": pgl_order,
        "PSigmaL": psigmal_order,
        "PGammaL": pgammal_order,
    }[kind](q)
    group = PermutationGroup(gens, degree=q + 1)
    if group.order != expected:
        raise DataIntegrityError(
            "%s(2,%d): chain order %d != closed form %d" % (kind, q, group.order, expected)
        )
    return group


def borel_generators(q):
    """Generators of the Borel subgroup of PSL(2,q): x -> x+1 and x -> c^2*x."""
    return [projective_translation(q), projective_scaling(q, square=True)]


def cyclic_scaling_generators(q):
    """Generator of the cyclic subgroup x -> c*x of PGL(2,q)."""
    return [projective_scaling(q)]


# -- affine constructions ------------------------------------------------------


def _transvection_perm(d, i, j):
    # linear map adding coordinate j into coordinate i on V(d,2)
    return Permutation([x ^ (((x >> j) & 1) << i) for x in range(2**d)])


def _agl_d2_group(d):
    if not 2 <= d <= 6:
        raise ValueError("AGL(d,2) constructible for 2 <= d <= 6, got d=%d" % d)
    gens = [Permutation([x ^ 1 for x in range(2**d)])]
    for i in range(d):
        for j in range(d):
            if i != j:
                gens.append(_transvection_perm(d, i, j))
    group = PermutationGroup(gens, degree=2**d)
    expected = agl_d2_order(d)
    if group.order != expected:
        raise DataIntegrityError("AGL(%d,2): chain order %d != %d" % (d, group.order, expected))
    return group


def _affine_1dim_group(q, semilinear):
    f = field(q)
    gens = [
        Permutation([f.add(x, 1) for x in range(q)]),
        Permutation([f.mul(f.generator, x) for x in range(q)]),
    ]
    if semilinear:
        gens.append(Permutation([f.frobenius(x) for x in range(q)]))
    group = PermutationGroup(gens, degree=q)
    expected = agammal1_order(q) if semilinear else agl1_order(q)
    if group.order != expected:
        raise DataIntegrityError(
            "affine 1-dim group over GF(%d): chain order %d != %d" % (q, group.order, expected)
        )
    return group


AFFINE_SPECS = ("AGL(1,8)", "AGammaL(1,8)", "AGammaL(1,32)", "2^4:A7") + tuple(
    "AGL(%d,2)" % d for d in range(2, 7)
)


def affine_group(spec, data_dir=None):
    """Build one of the affine families by name.

    Accepted specs: ``AGL(1,8)``, ``AGammaL(1,8)``, ``AGammaL(1,32)``,
    ``AGL(d,2)`` for 2 <= d <= 6, and ``2^4:A7`` (the degree-16 affine
    group whose point stabilizer is A_7, loaded from the bundle).
    """
    if spec == "AGL(1,8)":
        return _affine_1dim_group(8, semilinear=False)
    if spec == "AGammaL(1,8)":
        return _affine_1dim_group(8, semilinear=True)
    if spec == "AGammaL(1,32)":
        return _affine_1dim_group(32, semilinear=True)
    if spec == "2^4:A7":
        return load_bundled_group("a7_16", data_dir=data_dir)
    if spec.startswith("AGL(") and spec.endswith(",2)"):
        try:
            d = int(spec[4:-3])
        except ValueError:
            raise ValueError("unknown affine spec %r" % (spec,)) from None
        return _agl_d2_group(d)
    raise ValueError("unknown affine spec %r" % (spec,))


# -- alternating / symmetric ---------------------------------------------------


def alternating_group(v):
    """A_v on v points (a 3-cycle plus a long even cycle)."""
    if v < 3:
        raise ValueError("alternating group needs v >= 3")
    three = Permutation.from_cycles(v, [[0, 1, 2]])
    if v % 2 == 1:
        long = Permutation.from_cycles(v, [list(range(v))])
    else:
        long = Permutation.from_cycles(v, [list(range(1, v))])
    group = PermutationGroup([three, long], degree=v)
    if group.order != factorial(v) // 2:
        raise DataIntegrityError("A_%d: chain order %d != %d" % (v, group.order, factorial(v) // 2))
    return group


def symmetric_group(v):
    if v < 2:
        raise ValueError("symmetric group needs v >= 2")
    gens = [Permutation.from_cycles(v, [[0, 1]]), Permutation.from_cycles(v, [list(range(v))])]
    return PermutationGroup(gens, degree=v)


# -- bundled generator data ------------------------------------------------------


def data_directory(override=None):
    """Directory holding bundled generator files (flag > env var > package data)."""
    if override:
        return str(override)
    env = os.environ.get(DATA_ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data", "groups")


def _bundle_metadata(data_dir):
    path = os.path.join(data_dir, "metadata.json")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            meta = json.load(handle)
    except FileNotFoundError:
        raise DataIntegrityError("bundle metadata not found at %s" % path) from None
    return {entry["name"]: entry for entry in meta["groups"]}


def load_bundled_group(name, data_dir=None):
    """Load a bundled group and verify its chain order against the metadata."""
    data_dir = data_directory(data_dir)
    meta = _bundle_metadata(data_dir)
    if name not in meta:
        raise DataIntegrityError("no bundled group named %r" % (name,))
    entry = meta[name]
    path = os.path.join(data_dir, entry["file"])
    with open(path, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    if payload.get("name") != name or payload.get("degree") != entry["degree"]:
        raise DataIntegrityError("bundle %s does not match its metadata entry" % path)
    gens = [Permutation(images) for images in payload["generators"]]
    group = PermutationGroup(gens, degree=entry["degree"])
    if group.order != entry["expected_order"]:
        raise DataIntegrityError(
            "bundle %s: chain order %d != expected %d (corrupt bundle)"
            % (path, group.order, entry["expected_order"])
        )
    return group


def mathieu(v, data_dir=None):
    """The Mathieu group M_v in its natural degree-v action, from the bundle."""
    if v not in MATHIEU_ORDERS:
        raise ValueError("Mathieu groups exist for v in 11,12,22,23,24; got %r" % (v,))
    return load_bundled_group("m%d" % v, data_dir=data_dir)


def mathieu_m11_degree12(data_dir=None):
    """M_11 in its exceptional 3-transitive action on 12 points."""
    return load_bundled_group("m11_deg12", data_dir=data_dir)


# -- catalog entries ---------------------------------------------------------


@dataclass
class CatalogEntry:
    """One group family member at a fixed degree.

    ``order`` is exact (closed form or bundle metadata).  ``group()``
    constructs lazily and caches; symbolic entries raise.  The
    ``three_homogeneous`` annotation records the family's known
    3-homogeneity status (None = not annotated, must be tested).
    ``k_homogeneous_all`` marks families transitive on m-subsets for every
    m (alternating/symmetric), which forces any invariant block set to be
    complete.
    """

    name: str
    family: str
    degree: int
    order: int
    char: int | None = None
    three_homogeneous: bool | None = None
    k_homogeneous_all: bool = False
    notes: str = ""
    constructible: bool = False
    _builder: object = dc_field(default=None, repr=False, compare=False)
    _group: object = dc_field(default=None, repr=False, compare=False)

    def group(self):
        if self._group is None:
            if not self.constructible or self._builder is None:
                raise ValueError("catalog entry %s is symbolic (no construction)" % self.name)
            built = self._builder()
            if built.order != self.order:
                raise DataIntegrityError(
                    "%s: constructed order %d != catalog order %d"
                    % (self.name, built.order, self.order)
                )
            self._group = built
        return self._group

    def known_homogeneity(self, m):
        """Annotation-level m-homogeneity: True/False if certain, None if unknown.

        Uses family facts for m <= 3 and the order bound |G| >= C(v, m)
        (with C(v,m) evaluated at m' = min(m, v-m)) for larger m.
        """
        if m <= 1:
            return True
        if self.k_homogeneous_all:
            return True
        if m == 2:
            return True  # every catalog family is 2-transitive
        if m == 3:
            return self.three_homogeneous
        needed = comb(self.degree, m)
        if needed > 0 and self.order < needed:
            return False
        return None


def _projective_entries(v):
    q = v - 1
    decomp = prime_power_decomposition(q)
    if decomp is None or q <= 3:
        return []
    p, e = decomp
    constructible = v <= PROJECTIVE_CONSTRUCT_CAP
    psl_3hom = (q % 2 == 0) or (q % 4 == 3)
    psl_note = "3-homogeneous" if psl_3hom else "not 3-homogeneous (q = 1 mod 4)"
    entries = [
        CatalogEntry(
            name="PSL(2,%d)" % q,
            family="projective",
            degree=v,
            order=psl_order(q),
            char=p,
            three_homogeneous=psl_3hom,
            notes=psl_note,
            constructible=constructible,
            _builder=lambda q=q: projective_group("PSL", q),
        )
    ]
    if q % 2 == 1:
        entries.append(
            CatalogEntry(
                name="PGL(2,%d)" % q,
                family="projective",
                degree=v,
                order=pgl_order(q),
                char=p,
                three_homogeneous=True,
                notes="sharply 3-transitive",
                constructible=constructible,
                _builder=lambda q=q: projective_group("PGL", q),
            )
        )
        if e > 1:
            entries.append(
                CatalogEntry(
                    name="PSigmaL(2,%d)" % q,
                    family="projective",
                    degree=v,
                    order=psigmal_order(q),
                    char=p,
                    three_homogeneous=None,
                    notes="PSL extended by the field automorphisms",
                    constructible=constructible,
                    _builder=lambda q=q: projective_group("PSigmaL", q),
                )
            )
    if e > 1:
        entries.append(
            CatalogEntry(
                name="PGammaL(2,%d)" % q,
                family="projective",
                degree=v,
                order=pgammal_order(q),
                char=p,
                three_homogeneous=True,
                notes="contains sharply 3-transitive PGL(2,%d)" % q,
                constructible=constructible,
                _builder=lambda q=q: projective_group("PGammaL", q),
            )
        )
    return entries


def _affine_entries(v, data_dir=None):
    if v < 4 or v & (v - 1):
        return []
    d = v.bit_length() - 1
    entries = [
        CatalogEntry(
            name="AGL(%d,2)" % d,
            family="affine",
            degree=v,
            order=agl_d2_order(d),
            char=2,
            three_homogeneous=True,
            notes="3-transitive (no three collinear points over GF(2))",
            constructible=v <= AFFINE_CONSTRUCT_CAP and d <= 6,
            _builder=lambda d=d: _agl_d2_group(d),
        )
    ]
    if v == 8:
        entries.append(
            CatalogEntry(
                name="AGL(1,8)",
                family="affine",
                degree=8,
                order=agl1_order(8),
                char=2,
                three_homogeneous=True,
                notes="sharply 1-dimensional affine",
                constructible=True,
                _builder=lambda: _affine_1dim_group(8, semilinear=False),
            )
        )
        entries.append(
            CatalogEntry(
                name="AGammaL(1,8)",
                family="affine",
                degree=8,
                order=agammal1_order(8),
                char=2,
                three_homogeneous=True,
                constructible=True,
                _builder=lambda: _affine_1dim_group(8, semilinear=True),
            )
        )
    if v == 16:
        entries.append(
            CatalogEntry(
                name="2^4:A7",
                family="affine",
                degree=16,
                order=40320,
                char=2,
                three_homogeneous=True,
                notes="translations extended by the exceptional A_7 < GL(4,2)",
                constructible=True,
                _builder=lambda data_dir=data_dir: load_bundled_group("a7_16", data_dir=data_dir),
            )
        )
    if v == 32:
        entries.append(
            CatalogEntry(
                name="AGammaL(1,32)",
                family="affine",
                degree=32,
                order=agammal1_order(32),
                char=2,
                three_homogeneous=True,
                notes="sharply 3-homogeneous",
                constructible=True,
                _builder=lambda: _affine_1dim_group(32, semilinear=True),
            )
        )
    return entries


def _mathieu_entries(v, data_dir=None):
    entries = []
    if v in MATHIEU_ORDERS:
        entries.append(
            CatalogEntry(
                name="M_%d" % v,
                family="mathieu",
                degree=v,
                order=MATHIEU_ORDERS[v],
                three_homogeneous=True,
                notes="%d-transitive" % (5 if v in (12, 24) else 4 if v in (11, 23) else 3),
                constructible=True,
                _builder=lambda v=v, data_dir=data_dir: mathieu(v, data_dir=data_dir),
            )
        )
    if v == 12:
        entries.append(
            CatalogEntry(
                name="M_11(deg12)",
                family="mathieu",
                degree=12,
                order=MATHIEU_ORDERS[11],
                three_homogeneous=True,
                notes="M_11 in its 3-transitive action on 12 points",
                constructible=True,
                _builder=lambda data_dir=data_dir: mathieu_m11_degree12(data_dir=data_dir),
            )
        )
    if v == 22:
        entries.append(
            CatalogEntry(
                name="M_22:2",
                family="mathieu",
                degree=22,
                order=2 * MATHIEU_ORDERS[22],
                three_homogeneous=True,
                notes="automorphism extension of M_22 (symbolic)",
                constructible=False,
            )
        )
    return entries


def _alternating_entries(v):
    if v < 5:
        return []
    return [
        CatalogEntry(
            name="A_%d" % v,
            family="alternating",
            degree=v,
            order=factorial(v) // 2,
            three_homogeneous=True,
            k_homogeneous_all=True,
            notes="socle entry; the S_%d overgroup is covered by the same orbit argument" % v,
            constructible=v <= ALTERNATING_CONSTRUCT_CAP,
            _builder=lambda v=v: alternating_group(v),
        )
    ]


def candidates_for_degree(v, degree_cap=DEFAULT_DEGREE_CAP, data_dir=None):
    """All catalog family members acting on v points.

    Ordered affine, alternating, mathieu, projective (then by name) for
    deterministic reports.  Entries above the per-family construction caps
    are symbolic but still carry exact orders.
    """
    if v < 4:
        raise ValueError("catalog degrees start at 4")
    if v > degree_cap:
        raise ValueError("degree %d exceeds catalog cap %d" % (v, degree_cap))
    entries = (
        sorted(_affine_entries(v, data_dir=data_dir), key=lambda c: c.name)
        + _alternating_entries(v)
        + sorted(_mathieu_entries(v, data_dir=data_dir), key=lambda c: c.name)
        + sorted(_projective_entries(v), key=lambda c: c.name)
    )
    return entries


def catalog_entry_by_name(name, data_dir=None):
    """Resolve names like ``PSL(2,7)``, ``M_12``, ``AGL(3,2)``, ``A_8``, ``2^4:A7``."""
    import re

    m = re.fullmatch(r"(PSL|PGL|PSigmaL|PGammaL)\(2,(\d+)\)", name)
    if m:
        q = int(m.group(2))
        for entry in _projective_entries(q + 1):
            if entry.name == name:
                return entry
        raise ValueError("no projective entry %r" % (name,))
    m = re.fullmatch(r"M_(\d+)", name)
    if m:
        v = int(m.group(1))
        for entry in _mathieu_entries(v, data_dir=data_dir):
            if entry.name == name:
                return entry
        raise ValueError("no Mathieu entry %r" % (name,))
    if name == "M_11(deg12)":
        for entry in _mathieu_entries(12, data_dir=data_dir):
            if entry.name == name:
                return entry
    m = re.fullmatch(r"A_(\d+)", name)
    if m:
        entries = _alternating_entries(int(m.group(1)))
        if entries:
            return entries[0]
        raise ValueError("no alternating entry %r" % (name,))
    m = re.fullmatch(r"AGL\((\d+),2\)", name)
    if m:
        d = int(m.group(1))
        for entry in _affine_entries(2**d, data_dir=data_dir):
            if entry.name == name:
                return entry
        raise ValueError("no affine entry %r" % (name,))
    if name in ("AGL(1,8)", "AGammaL(1,8)", "AGammaL(1,32)", "2^4:A7"):
        degree = {"AGL(1,8)": 8, "AGammaL(1,8)": 8, "AGammaL(1,32)": 32, "2^4:A7": 16}[name]
        for entry in _affine_entries(degree, data_dir=data_dir):
            if entry.name == name:
                return entry
    raise ValueError("unknown catalog entry %r" % (name,))

"""Quotient maps, small-group identification, structural queries."""

from __future__ import annotations

from dataclasses import dataclass

from .group import PermGroup
from .lattice import SubgroupRecord, _set_key, subgroup_lattice
from .perm import Perm


@dataclass(frozen=True)
class SmallTypeTag:
    """Isomorphism-type tag: Cyclic(n), KleinFour, Dihedral8, Dihedral2p(p), Other."""

    variant: str
    n: int | None = None

    def __str__(self):
        if self.variant == "Cyclic":
            return "Cyclic(%d)" % self.n
        if self.variant == "Dihedral2p":
            return "Dihedral2p(%d)" % self.n
        return self.variant


CYCLIC = "Cyclic"
KLEIN_FOUR = "KleinFour"
DIHEDRAL_8 = "Dihedral8"
DIHEDRAL_2P = "Dihedral2p"
OTHER = "Other"


def identify_small_type(G: PermGroup) -> SmallTypeTag:
    """Classify G among the tagged small types, verifying presentations."""
    n = G.order()
    if G.is_cyclic():
        return SmallTypeTag(CYCLIC, n)
    if n == 4 and G.exponent() == 2:
        return SmallTypeTag(KLEIN_FOUR)
    if n == 8 and not G.is_abelian() and G.exponent() == 4:
        noncentral_involution_classes = [
            c for c in G.conjugacy_classes() if c.order == 2 and c.size > 1
        ]
        if len(noncentral_involution_classes) >= 2 and _dihedral_presentation(G, 4):
            return SmallTypeTag(DIHEDRAL_8)
    if n % 2 == 0 and not G.is_abelian():
        p = n // 2
        if p % 2 == 1 and _is_prime(p) and _dihedral_presentation(G, p):
            return SmallTypeTag(DIHEDRAL_2P, p)
    return SmallTypeTag(OTHER)


def _dihedral_presentation(G: PermGroup, m: int) -> bool:
    """Find r of order m and s of order 2 with (r*s)**2 = 1 generating G."""
    elts = G.elements()
    degree = G.degree
    rs = [g for g in elts if g.order() == m]
    ss = [g for g in elts if g.order() == 2]
    for r in rs:
        for s in ss:
            if not (r * s * r * s).is_identity():
                continue
            if s in G.subgroup([r]).elements():
                continue
            if G.subgroup([r, s]).order() == G.order():
                return True
    return False


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class QuotientMap:
    """The quotient G/N realised as a faithful action on the cosets of N."""

    def __init__(self, source: PermGroup, kernel):
        if isinstance(kernel, SubgroupRecord):
            if kernel.parent is not source:
                raise ValueError("kernel record belongs to a different group")
            if not kernel.normal:
                raise ValueError("kernel is not normal")
            n_set = kernel.element_set()
        else:
            n_set = frozenset(kernel)
            gens = [p for p in source.generators]
            if not _is_normal_in(n_set, gens):
                raise ValueError("kernel is not normal")
        self.source = source
        self.kernel = kernel
        self.kernel_set = n_set
        elts = source.elements()
        coset_of = {}
        cosets = []
        for g in elts:
            if g in coset_of:
                continue
            coset = sorted(x * g for x in n_set)
            idx = len(cosets)
            cosets.append(coset)
            for y in coset:
                coset_of[y] = idx
        order = [i for i, _ in sorted(enumerate(cosets), key=lambda t: t[1][0].images)]
        relabel = {old: new for new, old in enumerate(order)}
        self._cosets = [cosets[i] for i in order]
        self._coset_of = {y: relabel[i] for y, i in coset_of.items()}
        self._reps = [c[0] for c in self._cosets]
        gens = [self.map_element(g) for g in source.generators]
        self.image = PermGroup(gens, degree=len(self._cosets))

    def map_element(self, g: Perm) -> Perm:
        return Perm(tuple(self._coset_of[rep * g] for rep in self._reps))

    def preimage_set(self, image_elements) -> frozenset:
        """All source elements mapping into the given set of image elements."""
        wanted = {p.images for p in image_elements}
        out = []
        for idx, coset in enumerate(self._cosets):
            if self._image_of_coset(idx).images in wanted:
                out.extend(coset)
        return frozenset(out)

    def _image_of_coset(self, idx: int) -> Perm:
        return self.map_element(self._reps[idx])

    def section(self, q: Perm) -> Perm:
        """One source element mapping to the given image element."""
        for idx, rep in enumerate(self._reps):
            if self.map_element(rep) == q:
                return rep
        raise KeyError("element not in quotient image")


def quotient(G: PermGroup, N: SubgroupRecord) -> QuotientMap:
    return QuotientMap(G, N)


def is_hyperelementary(G: PermGroup):
    """Smallest prime p and largest normal cyclic N, coprime to p, with G/N a p-group."""
    order = G.order()
    primes = sorted({2} | _prime_factors(order))
    lattice = subgroup_lattice(G)
    for p in primes:
        best = None
        for rec in lattice.records:
            if not rec.normal:
                continue
            idx = order // rec.order
            if rec.order % p == 0 and rec.order > 1:
                continue
            if not _is_p_power(idx, p):
                continue
            if not rec.as_group().is_cyclic():
                continue
            if best is None or rec.order > best.order:
                best = rec
        if best is not None:
            return (p, best)
    return None


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True)
class DihedralSubquotient:
    """A pair N normal-in H with H/N of Klein-four or dihedral type."""

    h_record: SubgroupRecord
    n_elements: frozenset
    n_class_id: int
    tag: SmallTypeTag


def dihedral_subquotients(G: PermGroup):
    """All (H, N, tag) pairs up to G-conjugacy with H/N Klein-four, D8, or D2p.

    H runs over lattice class representatives; N-choices within one H are
    deduplicated under conjugation by the normalizer of H, which realises
    G-conjugacy of pairs.
    """
    if "dihedral_subquotients" in G._cache:
        return G._cache["dihedral_subquotients"]
    lattice = subgroup_lattice(G)
    all_sets = [fs for orbit in lattice.class_sets for fs in orbit]
    out = []
    for h_rec in lattice.records:
        h_set = h_rec.element_set()
        h_order = h_rec.order
        ratios = _allowed_ratios(h_order)
        if not ratios:
            continue
        h_gens = [p for p in h_set if not p.is_identity()]
        candidates = sorted(
            (
                n_set
                for n_set in all_sets
                if h_order % len(n_set) == 0
                and h_order // len(n_set) in ratios
                and n_set <= h_set
                and _is_normal_in(n_set, h_gens)
            ),
            key=_set_key,
        )
        if not candidates:
            continue
        normalizer = [
            g
            for g in G.elements()
            if frozenset(g.inverse() * x * g for x in h_set) == h_set
        ]
        H = PermGroup(h_gens, degree=G.degree)
        seen = set()
        for n_set in candidates:
            if n_set in seen:
                continue
            orbit = {
                frozenset(g.inverse() * x * g for x in n_set) for g in normalizer
            }
            seen |= orbit
            tag = _quotient_tag(H, n_set)
            if tag is None:
                continue
            out.append(
                DihedralSubquotient(
                    h_record=h_rec,
                    n_elements=n_set,
                    n_class_id=lattice.class_of_set(n_set),
                    tag=tag,
                )
            )
    out.sort(
        key=lambda d: (
            d.h_record.class_id,
            d.n_class_id,
            str(d.tag),
            tuple(sorted(p.images for p in d.n_elements)),
        )
    )
    G._cache["dihedral_subquotients"] = out
    return out


def _allowed_ratios(h_order: int):
    ratios = set()
    for r in (4, 8):
        if h_order % r == 0:
            ratios.add(r)
    for p in _prime_factors(h_order):
        if p % 2 == 1 and h_order % (2 * p) == 0:
            ratios.add(2 * p)
    return ratios


def _is_normal_in(n_set: frozenset, h_gens) -> bool:
    for g in h_gens:
        gi = g.inverse()
        for x in n_set:
            if gi * x * g not in n_set:
                return False
    return True


def _quotient_tag(H: PermGroup, n_set):
    Q = QuotientMap(H, n_set).image
    tag = identify_small_type(Q)
    if tag.variant in (KLEIN_FOUR, DIHEDRAL_8, DIHEDRAL_2P):
        return tag
    return None




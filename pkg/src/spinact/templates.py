"""Scenario templates for the two equivariant connected-sum families.

The involution family glues l sphere-product summands carrying a factor
rotation onto k pairs of negative-E8 pieces exchanged by the involution.
The Klein family hangs two chains of rotated sphere products off a
common core and exchanges four negative-E8 clusters in a free orbit of
the whole group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equivariant_sum import (
    ActionScenario,
    GeneratorAction,
    ROTATE_FIRST,
    ROTATE_SECOND,
    S2XS2,
    MINUS_E8,
    Summand,
    TotalInvariants,
    Z2,
    Z2XZ2,
    total_invariants,
)
from .lattice import direct_sum_all, is_even, make_standard, signature_profile


def z2_template(l: int, k: int) -> ActionScenario:
    """Involution on l(S2xS2) # 2k(-E8): factor rotations plus cluster swap."""
    if l < 0 or k < 0:
        raise ValueError("template parameters must be nonnegative")
    summands = [Summand(f"s{i}", S2XS2) for i in range(l)]
    summands += [Summand(f"w{i}", MINUS_E8) for i in range(2 * k)]
    perm = tuple((f"w{i}", f"w{k + i}") for i in range(k))
    local = {f"s{i}": ROTATE_FIRST for i in range(l)}
    return ActionScenario(Z2, tuple(summands), GeneratorAction(perm, local))


def klein_template(l1: int, l2: int, k: int) -> ActionScenario:
    """Klein four-group action on (2l1+2l2+1)(S2xS2) # 4k(-E8).

    gen1 rotates the core and the first chain (2l1 summands, swapped in
    pairs by gen2); gen2 rotates the core and the second chain; the four
    E8 clusters of k summands each form one free orbit of the group.
    """
    if l1 < 0 or l2 < 0 or k < 0:
        raise ValueError("template parameters must be nonnegative")
    summands = [Summand("core", S2XS2)]
    summands += [Summand(f"a{i}", S2XS2) for i in range(2 * l1)]
    summands += [Summand(f"b{i}", S2XS2) for i in range(2 * l2)]
    for cluster in range(4):
        summands += [Summand(f"w{cluster}_{i}", MINUS_E8) for i in range(k)]

    perm1 = tuple((f"b{2 * i}", f"b{2 * i + 1}") for i in range(l2))
    perm1 += tuple((f"w0_{i}", f"w1_{i}") for i in range(k))
    perm1 += tuple((f"w2_{i}", f"w3_{i}") for i in range(k))
    local1 = {"core": ROTATE_FIRST}
    local1.update({f"a{i}": ROTATE_FIRST for i in range(2 * l1)})

    perm2 = tuple((f"a{2 * i}", f"a{2 * i + 1}") for i in range(l1))
    perm2 += tuple((f"w0_{i}", f"w2_{i}") for i in range(k))
    perm2 += tuple((f"w1_{i}", f"w3_{i}") for i in range(k))
    local2 = {"core": ROTATE_SECOND}
    local2.update({f"b{i}": ROTATE_SECOND for i in range(2 * l2)})

    return ActionScenario(
        Z2XZ2,
        tuple(summands),
        GeneratorAction(perm1, local1),
        GeneratorAction(perm2, local2),
    )


@dataclass(frozen=True)
class KleinShape:
    l1: int
    l2: int
    k: int


def recognize_klein_template(s: ActionScenario) -> KleinShape | None:
    """Match a scenario against the Klein family shape, up to summand names.

    Returns the parameters when the scenario is (a relabelling of) the
    template: one jointly rotated core, one chain per generator swapped
    pairwise by the other, and negative-E8 summands in free four-element
    orbits split evenly by both generators. Anything else returns None.
    """
    if s.group != Z2XZ2 or s.gen2 is None:
        return None
    ids = [sm.id for sm in s.summands]
    kinds = {sm.id: sm.kind for sm in s.summands}
    if any(kind not in (S2XS2, MINUS_E8) for kind in kinds.values()):
        return None
    p1 = s.gen1.perm_map(ids)
    p2 = s.gen2.perm_map(ids)
    core = chain1 = chain2 = e8 = 0
    for i in ids:
        fixed1, fixed2 = p1[i] == i, p2[i] == i
        if kinds[i] == MINUS_E8:
            if fixed1 or fixed2 or p1[p2[i]] == i:
                return None
            e8 += 1
        elif fixed1 and fixed2:
            if s.gen1.local.get(i) != ROTATE_FIRST or s.gen2.local.get(i) != ROTATE_SECOND:
                return None
            core += 1
        elif fixed1:
            if s.gen1.local.get(i) != ROTATE_FIRST:
                return None
            chain1 += 1
        elif fixed2:
            if s.gen2.local.get(i) != ROTATE_SECOND:
                return None
            chain2 += 1
        else:
            return None
    if core != 1 or chain1 % 2 or chain2 % 2 or e8 % 4:
        return None
    return KleinShape(chain1 // 2, chain2 // 2, e8 // 4)


def advertised_headline_lattice(l1: int, l2: int, k: int):
    """Total form the headline family statement claims: the sum of
    (2l1+2l2+1-6k) sphere products and 4k K3 pieces."""
    spheres = 2 * l1 + 2 * l2 + 1 - 6 * k
    if spheres < 0:
        raise ValueError("headline statement needs 2l1+2l2+1 >= 6k")
    pieces = [make_standard("s2xs2")] * spheres + [make_standard("k3")] * (4 * k)
    return direct_sum_all(pieces)


@dataclass(frozen=True)
class FamilyComparison:
    constructed: TotalInvariants
    advertised: TotalInvariants
    match: bool


def klein_family_comparison(l1: int, l2: int, k: int) -> FamilyComparison:
    """Compare the constructed Klein-family total against the advertised
    homeomorphism type; the two disagree for k >= 1 and the mismatch is
    reported rather than silently repaired."""
    constructed = total_invariants(klein_template(l1, l2, k))
    lat = advertised_headline_lattice(l1, l2, k)
    profile = signature_profile(lat)
    advertised = TotalInvariants(lat.rank, profile.signature, is_even(lat))
    return FamilyComparison(constructed, advertised, constructed == advertised)

"""Semidirect products N x| G as permutation groups; complements of N."""

from __future__ import annotations

from dataclasses import dataclass

from .affine import linear_perm, standard_translations
from .modrep import (
    LinearRepresentation,
    is_faithful,
    module_from_conjugation,
)
from .perm import SUBGROUP_ORDER_GUARD, GuardError, PermutationGroup, _lattice, subgroup_mask

__all__ = [
    "ExtensionPresentation",
    "extension",
    "semidirect",
    "complements",
    "complement_classes",
    "is_split",
    "SEMIDIRECT_GUARD",
]

SEMIDIRECT_GUARD = 512


@dataclass(frozen=True, eq=False)
class ExtensionPresentation:
    """L with a distinguished elementary abelian normal subgroup N."""

    L: PermutationGroup
    N: PermutationGroup
    induced: LinearRepresentation
    faithful: bool = True

    def to_group_file(self) -> str:
        from .groupio import format_group

        lines = [format_group(self.L).rstrip("\n"), "# normal subgroup generators"]
        lines += ["# " + " ".join(map(str, g.images)) for g in self.N.generators]
        return "\n".join(lines) + "\n"


def extension(L: PermutationGroup, N: PermutationGroup, basis=None) -> ExtensionPresentation:
    _, induced = module_from_conjugation(L, N, basis)
    return ExtensionPresentation(L, N, induced, is_faithful(induced))


def semidirect(rep: LinearRepresentation) -> ExtensionPresentation:
    """F_l^n x| G acting on the l^n vectors: translations plus rep's matrices.

    For a non-faithful rep the result is F_l^n x| rho(G) and is flagged.
    """
    l, n = rep.l, rep.n
    if l**n > SEMIDIRECT_GUARD:
        raise GuardError("l^n", SEMIDIRECT_GUARD, l**n)
    trans = standard_translations(n, l)
    N = PermutationGroup(trans, degree=l**n)
    L = PermutationGroup(trans + [linear_perm(m) for m in rep.images], degree=l**n)
    _, induced = module_from_conjugation(L, N, basis=trans)
    return ExtensionPresentation(L, N, induced, is_faithful(rep))


def _check_guard(E: ExtensionPresentation) -> None:
    order = E.L.order()
    if order > SUBGROUP_ORDER_GUARD:
        raise GuardError("group order", SUBGROUP_ORDER_GUARD, order)


def _complement_scan(E: ExtensionPresentation):
    _check_guard(E)
    nmask = subgroup_mask(E.L, E.N)
    target = E.L.order() // E.N.order()
    # meeting N trivially is inherited by subgroups, so it can prune the scan
    t, found = _lattice(E.L, keep=lambda m: m & nmask == 1)
    masks = sorted(m for m in found if m.bit_count() == target)
    return t, found, masks


def complements(E: ExtensionPresentation) -> list[PermutationGroup]:
    """All subgroups H with H meet N = 1 and |H| = |L|/|N|."""
    t, found, masks = _complement_scan(E)
    return [t.subgroup(found[m]) for m in masks]


def complement_classes(E: ExtensionPresentation) -> int:
    """Number of L-conjugacy classes of complements."""
    t, _, masks = _complement_scan(E)
    return len({t.canonical(m) for m in masks})


def is_split(E: ExtensionPresentation) -> bool:
    return bool(_complement_scan(E)[2])

"""Small named permutation groups used by tests, demos and the CLI examples."""

from __future__ import annotations

import itertools

from .perm import Permutation, PermutationGroup

__all__ = ["named", "transitive_fixtures", "FIXTURES"]


def _cyc(degree: int, *cycles) -> Permutation:
    return Permutation.from_cycles(degree, *cycles)


def _on_pairs(gens: list[Permutation]) -> PermutationGroup:
    """Induced action on the 2-subsets of the points."""
    pairs = list(itertools.combinations(range(gens[0].degree), 2))
    index = {p: i for i, p in enumerate(pairs)}
    out = []
    for g in gens:
        out.append(Permutation(index[tuple(sorted((g(a), g(b))))] for a, b in pairs))
    return PermutationGroup(out)


def _projective_line(maps, q: int) -> PermutationGroup:
    # points 0..q-1 are field elements, point q is infinity
    gens = []
    for f in maps:
        gens.append(Permutation(f(x) for x in range(q + 1)))
    return PermutationGroup(gens)


def _regular_s3() -> PermutationGroup:
    S3 = PermutationGroup([[1, 0, 2], [1, 2, 0]])
    els = [g.images for g in S3.elements()]
    index = {e: i for i, e in enumerate(els)}
    gens = []
    for g in S3.generators:
        gens.append(Permutation(index[tuple(g.images[j] for j in e)] for e in els))
    return PermutationGroup(gens)


def _pgl25_maps(include_nonsquare: bool):
    q = 5
    inf = q

    def translate(x):
        return inf if x == inf else (x + 1) % q

    def scale(k):
        return lambda x: inf if x == inf else (k * x) % q

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, q)) % q

    return [translate, scale(2 if include_nonsquare else 4), invert]


def named() -> dict[str, PermutationGroup]:
    s4 = [_cyc(4, (0, 1)), _cyc(4, (0, 1, 2, 3))]
    return {
        "C2": PermutationGroup([[1, 0]]),
        "C3": PermutationGroup([[1, 2, 0]]),
        "S3": PermutationGroup([[1, 0, 2], [1, 2, 0]]),
        "C4": PermutationGroup([[1, 2, 3, 0]]),
        "V4": PermutationGroup([[1, 0, 3, 2], [2, 3, 0, 1]]),
        "D4": PermutationGroup([[1, 2, 3, 0], [0, 3, 2, 1]]),
        "A4": PermutationGroup([[1, 0, 3, 2], [1, 2, 0, 3]]),
        "S4": PermutationGroup([[1, 0, 2, 3], [1, 2, 3, 0]]),
        "C5": PermutationGroup([_cyc(5, (0, 1, 2, 3, 4))]),
        "D5": PermutationGroup([_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (1, 4), (2, 3))]),
        "F20": PermutationGroup([_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (1, 2, 4, 3))]),
        "A5": PermutationGroup([_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (0, 1, 2))]),
        "S5": PermutationGroup([_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (0, 1))]),
        "C6": PermutationGroup([_cyc(6, (0, 1, 2, 3, 4, 5))]),
        "S3reg": _regular_s3(),
        "D6": PermutationGroup([_cyc(6, (0, 1, 2, 3, 4, 5)), _cyc(6, (1, 5), (2, 4))]),
        "A4on6": _on_pairs([_cyc(4, (0, 1), (2, 3)), _cyc(4, (0, 1, 2))]),
        "S4on6": _on_pairs(s4),
        "PSL25": _projective_line(_pgl25_maps(False), 5),
        "PGL25": _projective_line(_pgl25_maps(True), 5),
    }


FIXTURES = named()

# degree 4 transitive groups and the degree <= 6 corpus
DEGREE4 = ["C4", "V4", "D4", "A4", "S4"]
SMALL_TRANSITIVE = ["C2", "C3", "S3"] + DEGREE4 + ["C5", "D5", "F20", "A5", "S5"] + [
    "C6", "S3reg", "D6", "A4on6", "S4on6", "PSL25", "PGL25"
]


def transitive_fixtures() -> dict[str, PermutationGroup]:
    return {k: FIXTURES[k] for k in SMALL_TRANSITIVE}

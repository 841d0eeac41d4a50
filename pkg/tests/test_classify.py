import itertools
import json

import pytest

from primex.blocks import is_primitive
from primex.classify import conjugating_permutation, permutation_isomorphic, solvable_primitive_groups, write_enumeration
from primex.fixtures import FIXTURES
from primex.groupio import GroupFileError, format_group, parse_group, read_group
from primex.perm import Permutation, PermutationGroup, is_solvable


def brute_isomorphic(G, H):
    if G.order() != H.order():
        return False
    hs = {g.images for g in H.elements()}
    for sigma in itertools.permutations(range(G.degree)):
        s = Permutation(sigma)
        si = s.inverse()
        if all((s * g * si).images in hs for g in G.generators):
            return True
    return False


@pytest.mark.parametrize(
    "l, n, orders",
    [
        (2, 1, [2]),
        (3, 1, [3, 6]),
        (2, 2, [12, 24]),
        (5, 1, [5, 10, 20]),
        (7, 1, [7, 14, 21, 42]),
        (2, 3, [56, 168]),
        (3, 2, [36, 72, 72, 72, 144, 216, 432]),
    ],
)
def test_enumeration_orders(l, n, orders):
    entries = solvable_primitive_groups(l, n)
    assert [e.order for e in entries] == orders
    for e in entries:
        assert e.group.degree == l**n
        assert is_solvable(e.group) and is_primitive(e.group)


def test_degree_four_labels_and_fixtures():
    a4, s4 = solvable_primitive_groups(2, 2)
    assert (a4.label, s4.label) == ("A4", "S4")
    assert brute_isomorphic(a4.group, FIXTURES["A4"])
    assert brute_isomorphic(s4.group, FIXTURES["S4"])


def test_degree_nine_entries_are_pairwise_distinct():
    entries = solvable_primitive_groups(3, 2)
    for a, b in itertools.combinations(entries, 2):
        assert not permutation_isomorphic(a.group, b.group)
    assert len({e.label for e in entries}) == len(entries)
    assert entries[-1].label == "AGL(2,3)"


@pytest.mark.parametrize("a, b", [("A4", "S4"), ("C4", "V4"), ("D4", "D4"), ("A4", "A4")])
def test_isomorphism_against_brute_force(a, b):
    G, H = FIXTURES[a], FIXTURES[b]
    assert permutation_isomorphic(G, H) == brute_isomorphic(G, H)


def test_conjugator_conjugates():
    G = FIXTURES["F20"]
    s = Permutation([3, 0, 4, 1, 2])
    H = PermutationGroup([s * g * s.inverse() for g in G.generators])
    sigma = conjugating_permutation(G, H)
    assert sigma is not None
    assert all(H.contains(sigma * g * sigma.inverse()) for g in G.generators)
    assert conjugating_permutation(FIXTURES["C4"], FIXTURES["V4"]) is None


def test_write_enumeration(tmp_path):
    entries = solvable_primitive_groups(2, 2)
    manifest = write_enumeration(entries, tmp_path, 2, 2)
    assert manifest["count"] == 2
    on_disk = json.loads((tmp_path / "manifest.json").read_text())
    assert on_disk == manifest
    for item, e in zip(on_disk["entries"], entries):
        G = read_group(tmp_path / item["file"])
        assert G.order() == item["order"] == e.order
        assert item["rep_matrices"]


def test_group_file_round_trip():
    G = FIXTURES["S4"]
    text = format_group(G, comment="S4")
    assert text.splitlines()[:2] == ["# S4", "degree 4"]
    H = parse_group(text)
    assert H.same_group(G)
    assert format_group(H, comment="S4") == text


@pytest.mark.parametrize(
    "text, line",
    [
        ("degree 3\n0 1\n", 2),
        ("degree 3\n0 0 1\n", 2),
        ("deg 3\n", 1),
        ("# only a comment\n", None),
        ("degree 3\n0 1 x\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(GroupFileError) as info:
        parse_group(text)
    assert info.value.line == line


def test_data_files(data_dir):
    assert read_group(data_dir / "s4.grp").order() == 24
    assert read_group(data_dir / "a4.grp").order() == 12
    with pytest.raises(GroupFileError):
        read_group(data_dir / "malformed.grp")

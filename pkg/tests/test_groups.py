import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from orbihrr import linalg
from orbihrr.arith import root_of_unity
from orbihrr.groups import (
    GroupTooLargeError,
    PermGroup,
    Representation,
    RepresentationError,
    character_of,
    compose,
    cyclic_group,
    dump_representation,
    hom_fixed_dim_oracle,
    linear_character_rep,
    load_group,
    load_representation,
    permutation_rep,
    regular_rep,
    rep_dsum,
    rep_dual,
    rep_tensor,
    s3_standard_rep,
    symmetric_group,
    trivial_rep,
)

DATA = Path(__file__).resolve().parent.parent / "data"

GROUPS = {
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
    "D4": lambda: PermGroup(4, [[1, 2, 3, 0], [3, 2, 1, 0]]),
    "A4": lambda: PermGroup(4, [[1, 2, 0, 3], [1, 0, 3, 2]]),
    "C6": lambda: cyclic_group(6),
    "C1": lambda: cyclic_group(1),
}

EXPECTED = {"S3": (6, 3), "S4": (24, 5), "D4": (8, 5), "A4": (12, 4), "C6": (6, 6), "C1": (1, 1)}


@pytest.mark.parametrize("name", GROUPS)
def test_orders_and_class_counts(name):
    g = GROUPS[name]()
    assert (g.order, len(g.classes)) == EXPECTED[name]


@pytest.mark.parametrize("name", GROUPS)
def test_class_equation(name):
    g = GROUPS[name]()
    assert sum(c.size for c in g.classes) == g.order
    for c in g.classes:
        assert c.size * c.centralizer_order == g.order
        assert len(c.members) == c.size


def test_s3_classes():
    s3 = symmetric_group(3)
    sizes = sorted((c.representative_order, c.size) for c in s3.classes)
    assert sizes == [(1, 1), (2, 3), (3, 2)]


def test_group_bound_is_enforced(monkeypatch):
    with pytest.raises(GroupTooLargeError):
        PermGroup(6, [[1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]], max_order=100)
    monkeypatch.setenv("ORBIHRR_MAX_GROUP_ORDER", "20")
    with pytest.raises(GroupTooLargeError):
        symmetric_group(4)


@pytest.mark.parametrize("bad", [[0, 0, 1], [0, 1], [0, 1, 3]])
def test_malformed_permutation(bad):
    with pytest.raises(ValueError):
        PermGroup(3, [bad])


def test_standard_rep_character(s3_pool):
    s3 = s3_pool["std"].group
    chi = character_of(s3_pool["std"])
    by_order = {c.representative_order: v for c, v in zip(s3.classes, chi.values)}
    assert by_order == {1: 2, 2: 0, 3: -1}


def test_bad_matrices_are_rejected(s3):
    z = root_of_unity(3)
    # rotation of order 3 paired with a non-commuting swap that breaks the relation
    with pytest.raises(RepresentationError):
        Representation(s3, 3, [[[1, 0], [0, 1]], [[z, 0], [0, z]]], 2, verify=True)
    with pytest.raises(RepresentationError):
        Representation(s3, 1, [[[2]], [[1]]], 1)
    with pytest.raises(RepresentationError):
        Representation(s3, 1, [[[1]]], 1)


def test_verify_homomorphism_catches_relation_failure():
    s3 = symmetric_group(3)
    z = root_of_unity(3)
    # generator orders are right but swap * rot * swap != rot^-1
    with pytest.raises(RepresentationError):
        Representation(s3, 3, [[[-1, 0], [0, 1]], [[z, 0], [0, z * z]]], 2, verify=True)


def test_characters_of_constructions(s3_pool):
    std, sign = s3_pool["std"], s3_pool["sign"]
    assert character_of(rep_dsum(std, sign)) == character_of(std) + character_of(sign)
    assert character_of(rep_tensor(std, sign)) == character_of(std) * character_of(sign)
    assert character_of(rep_dual(std)).values == tuple(v.conjugate() for v in character_of(std).values)


def test_regular_rep_character():
    g = symmetric_group(3)
    chi = character_of(regular_rep(g))
    for c, v in zip(g.classes, chi.values):
        assert v == (6 if c.representative_order == 1 else 0)


def test_hom_oracle_on_s3(s3_pool):
    pool = s3_pool
    assert hom_fixed_dim_oracle(pool["std"], pool["std"]) == 1
    assert hom_fixed_dim_oracle(pool["trivial"], pool["sign"]) == 0
    perm = permutation_rep(pool["std"].group)
    assert hom_fixed_dim_oracle(pool["trivial"], perm) == 1
    assert hom_fixed_dim_oracle(pool["std"], perm) == 1


@given(st.integers(1, 8), st.integers(0, 7), st.integers(0, 7))
def test_hom_oracle_on_cyclic_characters(n, a, b):
    g = cyclic_group(n)
    if n == 1:
        return
    ra = linear_character_rep(g, n, [a])
    rb = linear_character_rep(g, n, [b])
    assert hom_fixed_dim_oracle(ra, rb) == (1 if (a - b) % n == 0 else 0)


def test_load_from_json():
    g = load_group(DATA / "s3.json")
    assert g.order == 6
    std = load_representation(g, DATA / "s3_std.json")
    assert character_of(std) == character_of(s3_standard_rep(g))
    mu4 = load_group(DATA / "mu4.json")
    assert len(mu4.classes) == 4
    rep = load_representation(mu4, DATA / "mu4_x1.json")
    assert rep.dimension == 1


def test_dump_round_trip(s3, tmp_path):
    std = s3_standard_rep(s3)
    path = tmp_path / "std.json"
    path.write_text(json.dumps(dump_representation(std)))
    again = load_representation(s3, path)
    assert again.matrices == std.matrices


def test_rep_values_are_multiplicative(s3):
    std = s3_standard_rep(s3)
    for i, a in enumerate(s3.elements):
        for j, b in enumerate(s3.elements):
            k = s3.index[compose(a, b)]
            assert linalg.matmul(std(i), std(j)) == std(k)

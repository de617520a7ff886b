import pytest

from weakhopf.groupoid import (Groupoid, GroupoidError, Morphism, builtin_i2,
                               cyclic_group, disjoint_union, from_group,
                               pair_groupoid, validate_groupoid)


def test_single_object_valid():
    g = Groupoid(["e"], [Morphism("e", "e", "e", "e")], {("e", "e"): "e"})
    assert validate_groupoid(g).ok


def test_builtin_i2_valid():
    g = builtin_i2()
    rep = validate_groupoid(g)
    assert rep.ok
    assert g.compose("g", "gi") == "x"
    assert g.compose("gi", "g") == "y"
    assert g.compose("x", "x") == "x"
    assert g.compose("g", "g") is None  # tgt(g)=y != src(g)=x


def test_i2_with_wrong_inverse_product_fails():
    g = builtin_i2()
    comp = dict(g.comp)
    comp[("g", "gi")] = "y"
    broken = Groupoid(g.objects, g.morphisms, comp)
    rep = validate_groupoid(broken)
    assert not rep.ok
    checks = rep.checks_failed()
    assert "inverse-right" in checks
    witnesses = [f.witness for f in rep.findings if f.check == "inverse-right"]
    assert "g" in witnesses


def test_composable_pairs_i2():
    g = builtin_i2()
    pairs = g.composable_pairs()
    assert set(pairs) == {("x", "x"), ("x", "g"), ("g", "y"), ("g", "gi"),
                          ("y", "y"), ("y", "gi"), ("gi", "x"), ("gi", "g")}
    assert len(pairs) == 8
    assert pairs == g.composable_pairs()  # deterministic order


def test_composable_pairs_group():
    g = cyclic_group(2)
    assert len(g.composable_pairs()) == 4


def test_compose_unknown_id():
    g = builtin_i2()
    with pytest.raises(GroupoidError):
        g.compose("g", "nope")


def test_from_group_z2():
    g = cyclic_group(2)
    assert len(g.objects) == 1
    assert len(g.morphisms) == 2
    assert validate_groupoid(g).ok


def test_from_group_rejects_non_group():
    elements = ["e", "a"]
    bad = {(x, y): "e" for x in elements for y in elements}  # constant, no identity on a
    with pytest.raises(GroupoidError):
        from_group(elements, bad)


def test_from_group_rejects_non_associative():
    # a "subtraction table" is not associative
    els = ["0", "1", "2"]
    table = {(a, b): str((int(a) - int(b)) % 3) for a in els for b in els}
    with pytest.raises(GroupoidError):
        from_group(els, table)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_groupoid(n):
    g = pair_groupoid(n)
    assert len(g.objects) == n
    assert len(g.morphisms) == n * n
    assert validate_groupoid(g).ok
    for e in g.objects:
        for f in g.objects:
            assert len(g.hom(e, f)) == 1


def test_disjoint_union():
    g = disjoint_union(cyclic_group(2), builtin_i2())
    assert len(g.objects) == 3
    assert len(g.morphisms) == 6
    assert validate_groupoid(g).ok
    for a in g.morphism_ids():
        for b in g.morphism_ids():
            if a.startswith("l.") != b.startswith("l."):
                assert g.compose(a, b) is None


def test_inverse_involution_everywhere():
    for g in (builtin_i2(), cyclic_group(3), pair_groupoid(2)):
        for m in g.morphism_ids():
            assert g.inv(g.inv(m)) == m


def test_product_endpoint_bookkeeping():
    for g in (builtin_i2(), pair_groupoid(3)):
        for a, b in g.composable_pairs():
            c = g.compose(a, b)
            assert g.src(c) == g.src(a)
            assert g.tgt(c) == g.tgt(b)


def test_dangling_reference_is_input_error():
    with pytest.raises(GroupoidError):
        Groupoid(["e"], [Morphism("e", "e", "e", "missing")], {})
    with pytest.raises(GroupoidError):
        Groupoid(["e"], [Morphism("e", "e", "bad", "e")], {})
    with pytest.raises(GroupoidError):
        Groupoid(["e"], [], {})  # object without identity record

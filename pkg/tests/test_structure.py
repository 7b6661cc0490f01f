import pytest

from parity_inductor.groupspec import parse_group_spec
from parity_inductor.lattice import subgroup_lattice, subgroups_up_to_conjugacy
from parity_inductor.structure import (
    QuotientMap,
    dihedral_subquotients,
    identify_small_type,
    is_hyperelementary,
    quotient,
)


def record_of_order(G, n, normal=None):
    for r in subgroups_up_to_conjugacy(G):
        if r.order == n and (normal is None or r.normal == normal):
            return r
    raise AssertionError("no subgroup of order %d" % n)


def test_identify_small_type():
    assert str(identify_small_type(parse_group_spec("C4"))) == "Cyclic(4)"
    assert str(identify_small_type(parse_group_spec("C6"))) == "Cyclic(6)"
    assert str(identify_small_type(parse_group_spec("D4"))) == "KleinFour"
    assert str(identify_small_type(parse_group_spec("D8"))) == "Dihedral8"
    assert str(identify_small_type(parse_group_spec("Q8"))) == "Other"
    assert str(identify_small_type(parse_group_spec("S3"))) == "Dihedral2p(3)"
    assert str(identify_small_type(parse_group_spec("D14"))) == "Dihedral2p(7)"
    assert str(identify_small_type(parse_group_spec("D12"))) == "Other"
    assert str(identify_small_type(parse_group_spec("S4"))) == "Other"


def test_quotient_c4_by_c2():
    G = parse_group_spec("C4")
    q = quotient(G, record_of_order(G, 2))
    assert q.image.order() == 2


def test_quotient_d42_by_c7():
    G = parse_group_spec("D42")
    n = record_of_order(G, 7)
    q = quotient(G, n)
    assert q.image.order() == 6
    assert str(identify_small_type(q.image)) == "Dihedral2p(3)"


def test_quotient_by_whole_group():
    G = parse_group_spec("S3")
    q = quotient(G, record_of_order(G, 6))
    assert q.image.order() == 1


def test_quotient_is_homomorphism():
    G = parse_group_spec("D12")
    n = record_of_order(G, 3)
    q = quotient(G, n)
    elts = G.elements()
    for a in elts:
        for b in G.generators:
            assert q.map_element(a * b) == q.map_element(a) * q.map_element(b)
    for x in n.element_set():
        assert q.map_element(x).is_identity()


def test_quotient_rejects_non_normal():
    G = parse_group_spec("S3")
    with pytest.raises(ValueError):
        quotient(G, record_of_order(G, 2, normal=False))


def test_quotient_map_accepts_raw_set():
    G = parse_group_spec("C6")
    n = record_of_order(G, 3)
    q = QuotientMap(G, n.element_set())
    assert q.image.order() == 2
    with pytest.raises(ValueError):
        QuotientMap(parse_group_spec("S3"), record_of_order(parse_group_spec("S3"), 2).element_set())


def test_quotient_preimage_and_section():
    G = parse_group_spec("D42")
    n = record_of_order(G, 7)
    q = quotient(G, n)
    assert q.preimage_set(q.image.elements()) == frozenset(G.elements())
    ident = [p for p in q.image.elements() if p.is_identity()]
    assert q.preimage_set(ident) == n.element_set()
    for img in q.image.elements():
        assert q.map_element(q.section(img)) == img


def test_is_hyperelementary():
    p, n = is_hyperelementary(parse_group_spec("S3"))
    assert p == 2 and n.order == 3
    p, n = is_hyperelementary(parse_group_spec("C12"))
    assert p == 2 and n.order == 3
    p, n = is_hyperelementary(parse_group_spec("Q8"))
    assert p == 2 and n.order == 1
    p, n = is_hyperelementary(parse_group_spec("D42"))
    assert p == 2 and n.order == 21
    p, n = is_hyperelementary(parse_group_spec("C15"))
    assert p == 2 and n.order == 15
    assert is_hyperelementary(parse_group_spec("A4")) is None
    assert is_hyperelementary(parse_group_spec("S4")) is None
    assert is_hyperelementary(parse_group_spec("A5")) is None


def test_dihedral_subquotients_d42():
    pairs = dihedral_subquotients(parse_group_spec("D42"))
    tags = sorted(str(p.tag) for p in pairs)
    assert tags == ["Dihedral2p(3)", "Dihedral2p(3)", "Dihedral2p(7)", "Dihedral2p(7)"]
    assert {(p.h_record.order, len(p.n_elements)) for p in pairs} == {
        (6, 1),
        (14, 1),
        (42, 7),
        (42, 3),
    }


def test_dihedral_subquotients_klein():
    pairs = dihedral_subquotients(parse_group_spec("D4"))
    assert len(pairs) == 1
    assert str(pairs[0].tag) == "KleinFour"
    assert pairs[0].h_record.order == 4 and len(pairs[0].n_elements) == 1


def test_dihedral_subquotients_c15_empty():
    assert dihedral_subquotients(parse_group_spec("C15")) == []


def test_dihedral_subquotients_s4():
    pairs = dihedral_subquotients(parse_group_spec("S4"))
    tags = sorted(str(p.tag) for p in pairs)
    assert tags == [
        "Dihedral2p(3)",
        "Dihedral2p(3)",
        "Dihedral8",
        "KleinFour",
        "KleinFour",
        "KleinFour",
    ]
    for p in pairs:
        assert p.n_elements <= p.h_record.element_set()


def test_dihedral_subquotients_a4():
    pairs = dihedral_subquotients(parse_group_spec("A4"))
    assert len(pairs) == 1 and str(pairs[0].tag) == "KleinFour"

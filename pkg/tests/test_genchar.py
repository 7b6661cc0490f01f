"""Virtual character operations: frozen examples, reciprocity, determinant laws."""

import random

import pytest

from parity_inductor.chartab import CharTableError, character_table
from parity_inductor.cyclotomic import Cyclo
from parity_inductor.genchar import (
    GenChar,
    LinearChar,
    determinant,
    from_values,
    induce,
    inflate,
    inner_product,
    irreducible_char,
    order2_linear_chars,
    perm_char,
    restrict,
    rho_H,
    trivial_char,
)
from parity_inductor.groupspec import group_from_cycles, parse_group_spec
from parity_inductor.lattice import subgroup_lattice
from parity_inductor.perm import Perm
from parity_inductor.structure import quotient


def records(G):
    return subgroup_lattice(G).records


def record_of_order(G, n, which=0):
    return [r for r in records(G) if r.order == n][which]


def test_genchar_algebra():
    t = character_table(parse_group_spec("S3"))
    a = irreducible_char(t, 2)
    b = trivial_char(t)
    assert (a + b).coeffs == (1, 0, 1)
    assert (a - b).coeffs == (-1, 0, 1)
    assert (-a).coeffs == (0, 0, -1)
    assert (3 * a).coeffs == (0, 0, 3)
    assert a.degree == 2 and b.degree == 1
    assert (a - b).value(0) == 1
    assert not (a - b).is_zero()
    assert (a - a).is_zero()


def test_conjugation_and_reality():
    C4 = parse_group_spec("C4")
    t = character_table(C4)
    chi = irreducible_char(t, 1)
    assert not chi.is_real()
    assert chi.conj().coeffs == (0, 0, 1, 0)
    assert (chi + chi.conj()).is_real()
    t3 = character_table(parse_group_spec("S3"))
    assert irreducible_char(t3, 2).is_real()


def test_inner_product_regular_character():
    G = parse_group_spec("S4")
    t = character_table(G)
    reg = perm_char(G, record_of_order(G, 1))
    assert reg.coeffs == t.degrees
    for i in range(t.class_count()):
        assert inner_product(reg, irreducible_char(t, i)) == t.degrees[i]


def test_inner_product_induced_trivial():
    G = parse_group_spec("S4")
    for rec in records(G):
        pc = perm_char(G, rec)
        assert inner_product(pc, trivial_char(pc.table)) == 1


def test_perm_char_frozen_examples():
    S3 = parse_group_spec("S3")
    t = character_table(S3)
    assert perm_char(S3, record_of_order(S3, 3)).coeffs == (1, 1, 0)
    assert perm_char(S3, record_of_order(S3, 6)).coeffs == (1, 0, 0)
    assert perm_char(S3, record_of_order(S3, 1)).coeffs == (1, 1, 2)


def test_perm_char_equals_induced_trivial():
    for spec in ["S3", "D8", "Q8", "A4", "S4", "D12"]:
        G = parse_group_spec(spec)
        for rec in records(G):
            ht = character_table(rec.as_group())
            assert perm_char(G, rec) == induce(rec, trivial_char(ht))


def test_induce_frozen_examples():
    S3 = parse_group_spec("S3")
    C2 = record_of_order(S3, 2)
    ind = induce(C2, trivial_char(character_table(C2.as_group())))
    assert ind.coeffs == (1, 0, 1)
    assert ind.degree == 3

    C2g = parse_group_spec("C2")
    one = record_of_order(C2g, 1)
    ind2 = induce(one, trivial_char(character_table(one.as_group())))
    assert ind2.coeffs == (1, 1)

    full = record_of_order(S3, 6)
    tau = irreducible_char(character_table(full.as_group()), 2)
    assert induce(full, tau).coeffs == tau.coeffs


def test_induce_degree_scaling():
    G = parse_group_spec("S4")
    for rec in records(G):
        ht = character_table(rec.as_group())
        for i in range(ht.class_count()):
            ind = induce(rec, irreducible_char(ht, i))
            assert ind.degree == rec.index * ht.degrees[i]


def test_frobenius_reciprocity():
    for spec in ["S3", "D8", "S4"]:
        G = parse_group_spec(spec)
        gt = character_table(G)
        for rec in records(G):
            ht = character_table(rec.as_group())
            for i in range(ht.class_count()):
                tau = irreducible_char(ht, i)
                ind = induce(rec, tau)
                for j in range(gt.class_count()):
                    chi = irreducible_char(gt, j)
                    assert inner_product(ind, chi) == inner_product(
                        tau, restrict(chi, rec)
                    )


def test_restrict_frozen_examples():
    S3 = parse_group_spec("S3")
    t = character_table(S3)
    sigma = irreducible_char(t, 2)
    C3 = record_of_order(S3, 3)
    res = restrict(sigma, C3)
    assert res.coeffs == (0, 1, 1)
    one = record_of_order(S3, 1)
    res1 = restrict(sigma, one)
    assert res1.coeffs == (2,)


def test_restrict_error_on_foreign_subgroup():
    S3 = parse_group_spec("S3")
    t = character_table(S3)
    alien = group_from_cycles(["(1 2 3 4)"])
    with pytest.raises(ValueError):
        restrict(trivial_char(t), alien)


def test_inflate_examples():
    C4 = parse_group_spec("C4")
    N = record_of_order(C4, 2)
    q = quotient(C4, N)
    eps = irreducible_char(character_table(q.image), 1)
    lifted = inflate(q, eps)
    assert lifted.degree == 1
    assert [lifted.value(c) for c in range(4)] == [1, 1, -1, -1]

    D42 = parse_group_spec("D42")
    C7 = record_of_order(D42, 7)
    q2 = quotient(D42, C7)
    assert q2.image.order() == 6
    qt = character_table(q2.image)
    sigma = irreducible_char(qt, 2)
    assert qt.degrees[2] == 2
    lifted2 = inflate(q2, sigma)
    assert lifted2.degree == 2
    # the lift kills every element of the order-7 kernel
    for p in C7.element_set():
        assert lifted2.value_at(p) == 2


def test_determinant_examples():
    S3 = parse_group_spec("S3")
    t = character_table(S3)
    assert determinant(trivial_char(t)).is_trivial()
    sigma = irreducible_char(t, 2)
    d = determinant(sigma)
    assert d.row == 1 and not d.is_trivial()

    C4 = parse_group_spec("C4")
    t4 = character_table(C4)
    chi = irreducible_char(t4, 1)
    pair = chi + chi.conj()
    assert determinant(pair).is_trivial()


def test_determinant_of_difference_rule():
    # det(a - b) = det(a) * conj(det b), checked via values
    G = parse_group_spec("D8")
    t = character_table(G)
    rng = random.Random(11)
    chars = [irreducible_char(t, i) for i in range(t.class_count())]
    for _ in range(25):
        a = sum((rng.randrange(0, 3) * c for c in chars), 0 * chars[0])
        b = sum((rng.randrange(0, 3) * c for c in chars), 0 * chars[0])
        da, db, dd = determinant(a), determinant(b), determinant(a - b)
        for c in range(t.class_count()):
            assert dd.value(c) == da.value(c) * db.value(c).conj()


def test_determinant_tensor_law_random():
    for spec, seed in [("S4", 3), ("Q8", 5), ("D12", 9)]:
        G = parse_group_spec(spec)
        t = character_table(G)
        rng = random.Random(seed)
        chars = [irreducible_char(t, i) for i in range(t.class_count())]
        for _ in range(20):
            a = sum((rng.randrange(-2, 3) * c for c in chars), 0 * chars[0])
            b = sum((rng.randrange(-2, 3) * c for c in chars), 0 * chars[0])
            da, db, ds = determinant(a), determinant(b), determinant(a + b)
            for c in range(t.class_count()):
                assert ds.value(c) == da.value(c) * db.value(c)


def test_determinant_of_induced_trivial_is_coset_sign():
    # the determinant of a coset character is the sign of the coset action
    for spec in ["S3", "D8", "A4", "S4", "D10"]:
        G = parse_group_spec(spec)
        for rec in records(G):
            pc = perm_char(G, rec)
            det = determinant(pc)
            h_set = rec.element_set()
            reps = []
            seen = set()
            for x in G.elements():
                if x in seen:
                    continue
                reps.append(x)
                seen.update(h * x for h in h_set)
            coset_index = {}
            for i, x in enumerate(reps):
                for h in h_set:
                    coset_index[h * x] = i
            for ci, cls in enumerate(pc.table.classes):
                images = [coset_index[x * cls.rep] for x in reps]
                sign = Perm(tuple(images)).sign()
                assert det.value(ci) == sign


def test_even_degree_trivial_det_induction_law():
    # trivial-determinant, even-degree characters induce with trivial determinant
    S3 = parse_group_spec("S3")
    rng = random.Random(23)
    for rec in records(S3):
        ht = character_table(rec.as_group())
        chars = [irreducible_char(ht, i) for i in range(ht.class_count())]
        for _ in range(10):
            base = sum((rng.randrange(-2, 3) * c for c in chars), 0 * chars[0])
            tau = base + base.conj()
            for lc in order2_linear_chars(rec.as_group()):
                tau = tau + 2 * rng.randrange(0, 2) * lc.genchar
            assert tau.degree % 2 == 0
            if not determinant(tau).is_trivial():
                continue
            assert determinant(induce(rec, tau)).is_trivial()


def test_rho_frozen_examples():
    S3 = parse_group_spec("S3")
    assert rho_H(S3, record_of_order(S3, 2)).coeffs == (-1, -1, 1)
    assert rho_H(S3, record_of_order(S3, 6)).is_zero()
    C4 = parse_group_spec("C4")
    assert rho_H(C4, record_of_order(C4, 1)).coeffs == (-2, 1, 1, 0)


def test_rho_degree_zero_trivial_det_everywhere():
    for spec in ["S3", "D8", "Q8", "A4", "S4", "D42"]:
        G = parse_group_spec(spec)
        for rec in records(G):
            r = rho_H(G, rec)
            assert r.degree == 0
            assert determinant(r).is_trivial()
            assert r.is_real()


def test_order2_linear_chars():
    S3 = parse_group_spec("S3")
    chars = order2_linear_chars(S3)
    assert len(chars) == 1 and chars[0].row == 1

    V = group_from_cycles(["(1 2)", "(3 4)"])
    vchars = order2_linear_chars(V)
    assert len(vchars) == 3
    kernels = {c.kernel_record().class_id for c in vchars}
    index2 = {r.class_id for r in records(V) if r.index == 2}
    assert kernels == index2

    assert order2_linear_chars(parse_group_spec("A5")) == ()
    assert len(order2_linear_chars(parse_group_spec("D8"))) == 3


def test_linear_char_behaviour():
    S3 = parse_group_spec("S3")
    t = character_table(S3)
    eps = order2_linear_chars(S3)[0]
    assert eps.order() == 2
    assert (eps * eps).is_trivial()
    assert eps.conj() == eps
    assert eps.kernel_record().order == 3
    assert eps.genchar.coeffs == (0, 1, 0)

    C4 = parse_group_spec("C4")
    t4 = character_table(C4)
    chi = LinearChar(t4, 1)
    assert chi.order() == 4
    assert chi.conj().row == 2


def test_from_values_round_trip():
    G = parse_group_spec("D8")
    t = character_table(G)
    rng = random.Random(5)
    for _ in range(10):
        coeffs = [rng.randrange(-3, 4) for _ in range(t.class_count())]
        g = GenChar(t, coeffs)
        assert from_values(t, g.values()) == g


def test_defect_on_non_integral_decomposition():
    G = parse_group_spec("S3")
    t = character_table(G)
    bad = [Cyclo.rational(1), Cyclo.rational(1), Cyclo.rational(0)]
    with pytest.raises(CharTableError):
        from_values(t, bad)

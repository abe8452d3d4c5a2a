import random
from fractions import Fraction

import pytest

from ramify.algebra import Cyclotomic
from ramify.characters import (
    ClassFunction,
    augmentation_character,
    decompose,
    fixed_space_dim,
    induce,
    inner_product,
    irreducible_characters,
    regular_character,
    restrict,
    standard_characters,
    trivial_character,
)
from ramify.errors import (
    GroupMismatch,
    InputError,
    NonIntegerDimension,
    NotAHomomorphism,
    OrderBoundExceeded,
)
from ramify.groups import FiniteGroup, Hom


def brute_force_classes(G):
    seen, classes = set(), []
    for g in range(G.n):
        if g in seen:
            continue
        cls = sorted({G.mul(G.mul(x, g), G.inv(x)) for x in range(G.n)})
        seen.update(cls)
        classes.append(tuple(cls))
    return tuple(sorted(classes))


class TestGroups:
    def test_builders_orders(self):
        assert len(FiniteGroup.cyclic(6)) == 6
        assert len(FiniteGroup.elementary_abelian(2, 3)) == 8
        assert len(FiniteGroup.dihedral(4)) == 8
        assert len(FiniteGroup.quaternion8()) == 8
        P = FiniteGroup.direct_product(FiniteGroup.cyclic(2), FiniteGroup.cyclic(3))
        assert P.exponent() == 6 and P.is_abelian()

    def test_quaternion_structure(self):
        Q = FiniteGroup.quaternion8()
        assert Q.center() == frozenset({0, 1})
        assert Q.element_order(1) == 2  # -1
        assert all(Q.element_order(g) == 4 for g in range(2, 8))
        assert Q.conjugacy_classes() == ((0,), (1,), (2, 3), (4, 5), (6, 7))

    def test_classes_match_brute_force(self):
        for G in (FiniteGroup.dihedral(3), FiniteGroup.quaternion8(), FiniteGroup.cyclic(5)):
            assert G.conjugacy_classes() == brute_force_classes(G)

    def test_cyclic_classes_are_singletons(self):
        G = FiniteGroup.cyclic(7)
        assert all(len(c) == 1 for c in G.conjugacy_classes())

    def test_s3_has_three_classes(self):
        assert len(FiniteGroup.dihedral(3).conjugacy_classes()) == 3

    def test_from_table_validates(self):
        with pytest.raises(InputError):
            FiniteGroup.from_table([[0, 1], [1, 1]])
        # broken associativity but valid Latin square: octonion-style sign flip
        G = FiniteGroup.from_table([[0, 1], [1, 0]])
        assert G.identity == 0

    def test_subgroup_and_quotient(self):
        G = FiniteGroup.cyclic(6)
        H, incl = G.subgroup(G.closure([2]))
        assert len(H) == 3 and incl.is_injective()
        Q, proj = G.quotient(G.closure([2]))
        assert len(Q) == 2 and proj.is_surjective()

    def test_hom_validation(self):
        G = FiniteGroup.cyclic(4)
        H = FiniteGroup.cyclic(2)
        Hom(G, H, (0, 1, 0, 1))
        with pytest.raises(NotAHomomorphism):
            Hom(G, H, (0, 1, 1, 0))


class TestCharacters:
    def test_standard_characters(self):
        G = FiniteGroup.dihedral(3)
        one, reg, aug = standard_characters(G)
        assert reg(G.identity) == Cyclotomic.rational(6)
        assert all(reg(g) == Cyclotomic.zero() for g in range(1, 6))
        assert all(aug(g) == Cyclotomic.rational(-1) for g in range(1, 6))
        assert one == trivial_character(G)

    def test_inner_products(self):
        G = FiniteGroup.quaternion8()
        one, reg, _ = standard_characters(G)
        assert inner_product(one, one) == Cyclotomic.one()
        for chi in irreducible_characters(G):
            assert inner_product(reg, chi) == chi.degree()

    def test_group_mismatch(self):
        with pytest.raises(GroupMismatch):
            inner_product(trivial_character(FiniteGroup.cyclic(2)),
                          trivial_character(FiniteGroup.cyclic(3)))

    def test_cyclic3_table(self):
        G = FiniteGroup.cyclic(3)
        table = irreducible_characters(G)
        z = Cyclotomic.zeta(3)
        assert len(table) == 3
        # the table consists exactly of g -> zeta^(jk)
        for k in range(3):
            assert any(all(chi(g) == z ** (k * g) for g in range(3)) for chi in table)

    def test_quaternion_table(self):
        Q = FiniteGroup.quaternion8()
        table = irreducible_characters(Q)
        degrees = sorted(chi.degree().integer_value() for chi in table)
        assert degrees == [1, 1, 1, 1, 2]
        two = table[-1]
        assert two.degree().integer_value() == 2
        assert two(1) == Cyclotomic.rational(-2)  # -1 in Q8
        for g in range(2, 8):  # +-i, +-j, +-k
            assert two(g) == Cyclotomic.zero()

    def test_s3_table(self):
        S3 = FiniteGroup.dihedral(3)
        table = irreducible_characters(S3)
        # classes in canonical order: {e}, {reflections}, {r, r^2}
        class_values = sorted(tuple(v.rational_value() for v in chi.class_values())
                              for chi in table)
        assert class_values == [(1, -1, 1), (1, 1, 1), (2, 0, -1)]

    def test_sum_of_degree_squares(self):
        for G in (FiniteGroup.cyclic(12), FiniteGroup.dihedral(4), FiniteGroup.dihedral(6),
                  FiniteGroup.quaternion8(), FiniteGroup.elementary_abelian(3, 2)):
            table = irreducible_characters(G)
            assert sum(chi.degree().integer_value() ** 2 for chi in table) == G.n
            assert len(table) == len(G.conjugacy_classes())

    def test_order_bound(self):
        G = FiniteGroup.cyclic(3)
        with pytest.raises(OrderBoundExceeded):
            irreducible_characters(G, bound=2)

    def test_induce_trivial_from_unit_gives_regular(self):
        G = FiniteGroup.dihedral(4)
        E, incl = G.subgroup([G.identity])
        assert induce(incl, trivial_character(E)) == regular_character(G)

    def test_induce_along_surjection_of_trivial(self):
        G = FiniteGroup.cyclic(4)
        Q, proj = G.quotient(G.closure([2]))
        ind = induce(proj, trivial_character(G))
        assert ind == trivial_character(Q)

    def test_induce_sign_character_z2_in_z4(self):
        G = FiniteGroup.cyclic(4)
        H, incl = G.subgroup(G.closure([2]))
        sign = ClassFunction(H, [1, -1])
        ind = induce(incl, sign)
        # value at a generator of Z/4 is 0
        assert ind(1) == Cyclotomic.zero()
        assert ind(0) == Cyclotomic.rational(2)
        assert ind(2) == Cyclotomic.rational(-2)

    def test_induce_brute_force_oracle(self):
        # injective-case formula checked against direct summation
        rng = random.Random(17)
        G = FiniteGroup.dihedral(4)
        H, incl = G.subgroup(G.closure([2]))  # rotation subgroup
        for _ in range(5):
            vals = [rng.randrange(-3, 4) for _ in range(len(H))]
            # make class-constant (H abelian: automatic)
            phi = ClassFunction(H, vals)
            ind = induce(incl, phi)
            for g in range(G.n):
                acc = Cyclotomic.zero()
                for x in range(G.n):
                    c = G.conj(g, x)
                    if c in incl.image():
                        h = incl.mapping.index(c)
                        acc = acc + phi(h)
                assert ind(g) == acc * Fraction(1, len(H))

    def test_restrict(self):
        G = FiniteGroup.dihedral(3)
        H, incl = G.subgroup(G.closure([2]))
        assert restrict(incl, trivial_character(G)) == trivial_character(H)
        reg = restrict(incl, regular_character(G))
        assert reg(H.identity) == Cyclotomic.rational(6)
        assert restrict(Hom.identity(G), regular_character(G)) == regular_character(G)

    def test_frobenius_reciprocity_randomized(self):
        rng = random.Random(23)
        pool = [FiniteGroup.dihedral(3), FiniteGroup.quaternion8(),
                FiniteGroup.cyclic(6), FiniteGroup.dihedral(4)]
        for _ in range(40):
            G = rng.choice(pool)
            gens = [rng.randrange(G.n) for _ in range(rng.randrange(1, 3))]
            H, incl = G.subgroup(G.closure(gens))
            psi = ClassFunction.from_class_values(
                H, [rng.randrange(-3, 4) for _ in H.conjugacy_classes()])
            phi = ClassFunction.from_class_values(
                G, [rng.randrange(-3, 4) for _ in G.conjugacy_classes()])
            lhs = inner_product(psi, restrict(incl, phi))
            rhs = inner_product(induce(incl, psi), phi)
            assert lhs == rhs

    def test_decompose_regular(self):
        for G in (FiniteGroup.dihedral(3), FiniteGroup.cyclic(4)):
            dec = decompose(regular_character(G))
            assert dec.is_character
            assert dec.integer_multiplicities() == [
                chi.degree().integer_value() for chi in irreducible_characters(G)]

    def test_decompose_augmentation(self):
        G = FiniteGroup.quaternion8()
        dec = decompose(augmentation_character(G))
        assert dec.is_character
        table = irreducible_characters(G)
        for chi, mult in zip(table, dec.multiplicities):
            expect = chi.degree().integer_value()
            if chi == trivial_character(G):
                expect -= 1
            assert mult == Cyclotomic.rational(expect)

    def test_decompose_non_character(self):
        G = FiniteGroup.cyclic(3)
        table = irreducible_characters(G)
        nontrivial = next(chi for chi in table if chi != trivial_character(G))
        virtual = 2 * trivial_character(G) - nontrivial
        assert not decompose(virtual).is_character

    def test_dual_consistency(self):
        G = FiniteGroup.quaternion8()
        for chi in irreducible_characters(G):
            dual = chi.dual()
            for g in range(G.n):
                assert dual(g) == chi(G.inv(g))

    def test_fixed_space_dim(self):
        Q = FiniteGroup.quaternion8()
        table = irreducible_characters(Q)
        two = table[-1]
        assert fixed_space_dim(two, [Q.identity]) == 2
        assert fixed_space_dim(two, Q.center()) == 0
        linear_nontrivial = next(chi for chi in table
                                 if chi.degree() == Cyclotomic.one()
                                 and chi != trivial_character(Q))
        assert fixed_space_dim(linear_nontrivial, range(Q.n)) == 0
        with pytest.raises(NonIntegerDimension):
            fixed_space_dim(ClassFunction.from_class_values(
                Q, [Fraction(1, 2), 0, 0, 0, 0]), [Q.identity])

    def test_induce_restrict_identity(self):
        G = FiniteGroup.dihedral(3)
        phi = ClassFunction.from_class_values(G, [3, -1, 0])
        assert induce(Hom.identity(G), phi) == phi
        assert restrict(Hom.identity(G), phi) == phi

    def test_product_pairing_against_dual(self):
        G = FiniteGroup.quaternion8()
        one = trivial_character(G)
        table = irreducible_characters(G)
        for chi in table:
            for psi in table:
                assert inner_product(chi * psi, one) == inner_product(chi, psi.dual())

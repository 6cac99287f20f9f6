import random

import pytest

from vkgroups.braids import Rep, parse_braid
from vkgroups.catalog import CATALOG
from vkgroups.errors import AlphabetMismatch, DecodeError, PresentationError
from vkgroups.lattice import AbelianInvariants
from vkgroups.lcs import lcs_quotients
from vkgroups.presentations import (
    Presentation, TietzeSimplifier, abelianization, add_relators, eliminate_generator, group_from_braid,
    introduce_generator, kauffman_quotient, tietze_simplify
)

from .common import random_braid, random_word


def test_presentations_drop_trivial_relators_and_duplicate_rotations():
    # Given relators that are rotations and inverses of one another
    p = Presentation.from_text(["x", "y"], [
        "x y x^-1 y^-1",
        "y x^-1 y^-1 x",
        "y x y^-1 x^-1",
        "x x^-1",
    ])

    # Then a single relator should remain
    assert len(p.relators) == 1


def test_presentations_require_free_alphabets():
    from vkgroups.braids import alphabet_m

    with pytest.raises(PresentationError):
        Presentation(alphabet_m(2))


def test_presentations_survive_a_dict_round_trip():
    p = Presentation.from_text(["a", "b"], ["a b a^-1 b^-2"])
    assert Presentation.from_dict(p.asdict()) == p


def test_presentation_documents_must_name_generators():
    with pytest.raises(DecodeError):
        Presentation.from_dict({"relators": ["x"]})


def test_renaming_keeps_relators():
    # Given a presentation
    p = Presentation.from_text(["x1", "y"], ["x1 y x1^-1 y^-1"])

    # When I rename one of its generators
    renamed = p.rename({"x1": "x"})

    # Then the relator should be spelled with the new name
    assert renamed.generators.names == ("x", "y")
    assert [str(r) for r in renamed.relators] == [str(r).replace("x1", "x") for r in p.relators]


def test_tietze_eliminates_generators_that_occur_once():
    # Given a presentation in which a occurs once
    p = Presentation.from_text(["a", "b", "c"], ["c^-1 a b"])

    # When I simplify it
    simplifier = TietzeSimplifier()
    simplified = simplifier.simplify(p)

    # Then a should be gone and nothing else left to do
    assert simplified.generators.names == ("b", "c")
    assert simplified.relators == ()
    assert [step.generator for step in simplifier.eliminations] == ["a"]


def test_tietze_flags_presentations_left_incomplete_by_its_budget():
    p = Presentation.from_text(["a", "b", "c"], ["a b", "b c"])
    simplified = tietze_simplify(p, budget=1)
    assert simplified.incomplete
    assert simplified.rank == 2


def test_trivial_braid_gives_a_free_group_of_rank_two():
    # Given the empty braid on one strand
    p = group_from_braid(Rep.A, parse_braid("", 1))

    # Then its group should be free on x1 and y
    assert p.generators.names == ("x1", "y")
    assert p.relators == ()
    assert abelianization(p) == AbelianInvariants(2)


def test_k1_simplifies_to_one_relator_on_two_generators():
    # Given the group of the closure of s1^-2 r1
    p = group_from_braid(Rep.A, parse_braid("s1^-2 r1", 2))

    # When I simplify it
    simplified = tietze_simplify(p)

    # Then x2 should be eliminated, leaving one commutator relator
    assert simplified.generators.names == ("x1", "y")
    assert len(simplified.relators) == 1
    assert abelianization(simplified) == AbelianInvariants(2)


@pytest.mark.parametrize("rep,expected", [
    (Rep.A, AbelianInvariants(3)),
    (Rep.M, AbelianInvariants(4)),
])
def test_hopf_link_abelianizations_differ_between_representations(rep, expected):
    p = group_from_braid(rep, parse_braid("s1^-1 r1", 2))
    assert abelianization(p) == expected


def test_m_groups_present_the_abelian_block_by_commutators():
    p = group_from_braid(Rep.M, parse_braid("", 3))
    assert p.generators.names == ("y1", "y2", "y3", "v1", "v2", "v3")
    assert len(p.relators) == 3


def test_kauffman_quotient_of_k1_has_infinite_cyclic_abelianization():
    p = group_from_braid(Rep.A, parse_braid("s1^-2 r1", 2))
    quotient = kauffman_quotient(p)
    assert "y" not in quotient.generators
    assert abelianization(quotient) == AbelianInvariants(1)


def test_kauffman_quotient_needs_a_y_generator():
    with pytest.raises(PresentationError):
        kauffman_quotient(Presentation.free(["a", "b"]))


def test_add_relators_checks_the_alphabet():
    p = Presentation.free(["a"])
    q = Presentation.free(["b"])
    with pytest.raises(AlphabetMismatch):
        add_relators(p, [q.word("b")])


def test_k3_keeps_three_generators_and_gains_torsion_mod_y_squared():
    # Given the group of the closure of r1 s1^-2 r1 s1
    p = group_from_braid(Rep.A, parse_braid("r1 s1^-2 r1 s1", 2))
    simplified = tietze_simplify(p)

    # Then no generator can be eliminated
    assert simplified.generators.names == ("x1", "x2", "y")
    assert abelianization(simplified) == AbelianInvariants(2)

    # When I add y^2 as a relator
    squared = add_relators(p, [p.word("y^2")])

    # Then the abelianization should pick up a Z_2
    assert abelianization(squared) == AbelianInvariants(1, (2,))


def test_k3_kauffman_quotient_reaches_two_generators_through_an_extra_generator():
    # Given the Kauffman quotient of K3
    p = tietze_simplify(kauffman_quotient(group_from_braid(Rep.A, parse_braid("r1 s1^-2 r1 s1", 2))))

    # When I introduce z = x2^-1 x1 and eliminate x2
    q = eliminate_generator(introduce_generator(p, "z", p.word("x2^-1 x1")), "x2")

    # Then two generators should remain and gamma_2 / gamma_3 should vanish
    assert q.generators.names == ("x1", "z")
    assert abelianization(q) == AbelianInvariants(1)
    assert lcs_quotients(q, 2)[1].is_trivial


def test_introduce_generator_rejects_existing_names():
    p = Presentation.free(["a"])
    with pytest.raises(PresentationError):
        introduce_generator(p, "a", p.word("a"))


def test_eliminate_generator_needs_a_single_occurrence():
    p = Presentation.from_text(["a", "b"], ["a^2 b^2"])
    with pytest.raises(PresentationError):
        eliminate_generator(p, "a")


def test_abelianization_is_invariant_under_braid_conjugation():
    rng = random.Random(3)
    for _ in range(50):
        # Given a random braid and a random conjugate of it
        b = random_braid(3, rng.randint(1, 5), rng=rng)
        c = random_braid(3, rng.randint(1, 3), rng=rng)
        conjugated = c * b * c.inverse()

        # Then both representations should give the same abelianizations
        for rep in (Rep.A, Rep.M):
            assert abelianization(group_from_braid(rep, b)) == abelianization(group_from_braid(rep, conjugated))


def test_class_4_quotients_are_invariant_under_braid_conjugation():
    rng = random.Random(5)
    for _ in range(50):
        # Given a random braid and a random conjugate of it
        b = random_braid(2, rng.randint(1, 4), rng=rng)
        c = random_braid(2, rng.randint(1, 2), rng=rng)
        ours = tietze_simplify(group_from_braid(Rep.A, b))
        theirs = tietze_simplify(group_from_braid(Rep.A, c * b * c.inverse()))

        # Then their quotients up to class 4 should agree
        assert lcs_quotients(ours, 4) == lcs_quotients(theirs, 4)


def test_tietze_preserves_abelianization_of_random_presentations():
    rng = random.Random(13)
    alphabet = Presentation.free(["a", "b", "c"]).generators
    for _ in range(200):
        # Given a random presentation on three generators
        relators = tuple(random_word(alphabet, rng.randint(1, 8), rng=rng) for _ in range(rng.randint(1, 3)))
        p = Presentation(alphabet, relators)

        # When I simplify it
        simplified = tietze_simplify(p)

        # Then its abelianization should be unchanged
        assert abelianization(simplified) == abelianization(p), p.asdict()


@pytest.mark.parametrize("entry_id,rep,cls", [
    ("K1", Rep.A, 4),
    ("K1", Rep.M, 4),
    ("K3", Rep.A, 4),
    ("K3", Rep.M, 4),
    ("HOPF", Rep.A, 4),
    ("HOPF", Rep.M, 4),
    ("K2", Rep.A, 2),
    ("K4", Rep.A, 2),
])
def test_tietze_preserves_catalog_invariants(session_pipeline, entry_id, rep, cls):
    # Given a catalog group as built from its braid or diagram
    raw = CATALOG[entry_id].group(session_pipeline, rep)

    # When I simplify it
    simplified = tietze_simplify(raw)

    # Then its abelianization and lower central quotients should be unchanged
    assert abelianization(simplified) == abelianization(raw)
    assert lcs_quotients(simplified, cls) == lcs_quotients(raw, cls)


@pytest.mark.parametrize("entry_id", ["K1", "K2", "K3", "K4"])
def test_kauffman_quotients_of_knots_match_killing_y(session_pipeline, entry_id):
    # Given the A group of a catalog knot
    raw = CATALOG[entry_id].group(session_pipeline)

    # When I take its Kauffman quotient and, separately, add y as a relator
    quotient = tietze_simplify(kauffman_quotient(raw))
    killed = tietze_simplify(add_relators(raw, [raw.word("y")]))

    # Then both should have abelianization Z
    assert abelianization(quotient) == AbelianInvariants(1)
    assert abelianization(killed) == AbelianInvariants(1)

    # And the same quotients up to class 3
    assert lcs_quotients(quotient, 3) == lcs_quotients(killed, 3)

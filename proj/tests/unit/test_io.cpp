#include <doctest.h>

#include "orbitspan/commands.hpp"
#include "orbitspan/errors.hpp"
#include "orbitspan/io.hpp"
#include "orbitspan/prng.hpp"

#include "oracles.hpp"

using namespace orbitspan;
namespace oracle = orbitspan::testing;

TEST_CASE("map file format") {
    Json j = Json::parse(R"({ "exceptions": {"0": 0, "5": 2}, "tail_offset": 1 })");
    SelfMap phi = parse_selfmap(j);
    CHECK(phi.evaluate(0) == 0);
    CHECK(phi.evaluate(5) == 2);
    CHECK(phi.evaluate(3) == 4);
    CHECK(phi.tail_threshold() == 6);  // computed on load

    CHECK_THROWS_AS(parse_selfmap(Json::parse(R"({ "exceptions": {} })")), InputError);
    CHECK_THROWS_AS(
        parse_selfmap(Json::parse(R"({ "exceptions": {"x": 1}, "tail_offset": 1 })")),
        InputError);
}

TEST_CASE("vector and matrix literals") {
    QVector v = parse_qvector(Json::parse(R"([[0, "1"], [3, "-3/7"], [5, 2]])"));
    CHECK(v.at(0) == Rational(1));
    CHECK(v.at(3) == Rational(-3, 7));
    CHECK(v.at(5) == Rational(2));
    CHECK(v.at(1).is_zero());

    // unicode minus from typeset text
    QVector u = parse_qvector(Json::parse("[[1, \"−3/7\"]]"));
    CHECK(u.at(1) == Rational(-3, 7));

    QMatrix m = parse_qmatrix(Json::parse(R"([[[0, "1"]], [[1, "5"]]])"));
    CHECK(m.nrows() == 2);
    CHECK(m.rows()[1].at(1) == Rational(5));

    CHECK_THROWS_AS(parse_qvector(Json::parse(R"([["a", 1]])")), InputError);
    CHECK_THROWS_AS(parse_rational(Json::parse("1.5")), InputError);
}

TEST_CASE("vector round trip on random values") {
    Prng rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        QVector v;
        for (std::size_t i = 0; i < 8; ++i)
            if (rng.chance(1, 2))
                v.set(i, Rational((long long)rng.below(19) - 9,
                                  (long long)rng.below(7) + 1));
        CHECK(parse_qvector(qvector_to_json(v)) == v);
    }
}

TEST_CASE("structure file round trip") {
    SigmaStructure f2 = oracle::f2_square();
    SigmaStructure back = parse_structure(structure_to_json(f2));
    CHECK(back.size() == f2.size());
    CHECK(back.tables() == f2.tables());
    CHECK_THROWS_AS(
        parse_structure(Json::parse(R"({"size": 2, "symbols": [{"name": "f"}]})")),
        InputError);
}

TEST_CASE("shift file: sequential and family shapes") {
    Json seq = Json::parse(R"({
        "vectors": [[[0, "1"]], [[1, "1"]]],
        "operator": [[], [[0, "1"]], [[1, "1"]]]
    })");
    ShiftFile f = parse_shift_file(seq);
    CHECK_FALSE(f.is_family_shape());
    CHECK(f.vectors.size() == 2);

    SelfMap phi = SelfMap::make({}, 2);
    CounterexampleBundle bundle = build_zero_orbit(phi, 0, 12);
    ShiftFile ff = shift_file_from_bundle(bundle, phi);
    Json encoded = shift_file_to_json(ff);
    ShiftFile back = parse_shift_file(encoded);
    CHECK(back.is_family_shape());
    CHECK(back.family == ff.family);
    CHECK(back.op == ff.op);
    REQUIRE(back.dependence.has_value());
    CHECK(back.dependence->coefficients == bundle.dependence.coefficients);
    CHECK(back.rank_deficit == bundle.rank_deficit);

    // byte stability of the emitted form
    CHECK(shift_file_to_json(back).dump() == encoded.dump());
}

TEST_CASE("lemma instance files round trip through the checker") {
    Prng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Lemma33Instance inst = generate_lemma33_instance(rng);
        LemmaCheck direct = check_lemma_33(inst.S, inst.p, inst.f, inst.e, inst.b,
                                           inst.m_star);
        LemmaInstanceFile file = parse_lemma_instance(lemma_instance_to_json(inst));
        REQUIRE(file.l33.has_value());
        LemmaCheck replayed = check_lemma_33(file.l33->S, file.l33->p, file.l33->f,
                                             file.l33->e, file.l33->b, file.l33->m_star);
        CHECK(direct.hypotheses == replayed.hypotheses);
        CHECK(direct.conclusion == replayed.conclusion);
    }
    for (int trial = 0; trial < 20; ++trial) {
        Lemma31Instance inst = generate_lemma31_instance(rng);
        LemmaCheck direct = check_lemma_31(inst.P, inst.p, inst.f, inst.a, inst.b);
        LemmaInstanceFile file = parse_lemma_instance(lemma_instance_to_json(inst));
        REQUIRE(file.l31.has_value());
        LemmaCheck replayed =
            check_lemma_31(file.l31->P, file.l31->p, file.l31->f, file.l31->a, file.l31->b);
        CHECK(direct.hypotheses == replayed.hypotheses);
        CHECK(direct.conclusion == replayed.conclusion);
    }
}

TEST_CASE("general instance file round trip") {
    auto [inst, witness] =
        make_planted_dependence_instance({Rational(-1), Rational(-1), Rational(1)}, 8);
    GeneralFile file{inst, witness};
    Json encoded = general_file_to_json(file);
    GeneralFile back = parse_general_file(encoded);
    CHECK(back.instance.family == inst.family);
    CHECK(back.instance.i_star == inst.i_star);
    CHECK(back.instance.control.pairs == inst.control.pairs);
    CHECK(back.instance.v == inst.v);
    REQUIRE(back.dependence.has_value());

    ConditionReport a = check_conditions(inst);
    ConditionReport b = check_conditions(back.instance);
    CHECK(a.all() == b.all());
    CHECK(a.rank == b.rank);

    InductionReport ia = verify_induction_claim(inst, witness, 4);
    InductionReport ib = verify_induction_claim(back.instance, *back.dependence, 4);
    CHECK(ia.span_rank == ib.span_rank);
    CHECK(ia.bound_dim == ib.bound_dim);
}

TEST_CASE("reports render deterministically") {
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}}, 1);
    RunReport a = analyze_map_report(phi, 20);
    RunReport b = analyze_map_report(phi, 20);
    CHECK(a.render_text() == b.render_text());
    CHECK(a.render_lines() == b.render_lines());
    RunReport l1 = lemmas_report(5, 60);
    RunReport l2 = lemmas_report(5, 60);
    CHECK(l1.render_lines() == l2.render_lines());
}

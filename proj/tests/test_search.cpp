#include <doctest.h>

#include "suplogic/search.hpp"
#include "suplogic/semantics.hpp"
#include "suplogic/syntax.hpp"

#include "test_util.hpp"

using namespace suplogic;

namespace {

SearchBounds ternary2() {
  return {2, {"p", "q"}, RelationKind::Ternary, std::nullopt};
}

}  // namespace

TEST_CASE("exhaustive validity verdicts") {
  CHECK(check_validity(parse_formula("p <| p"), ternary2(), FrameClass::All)
            .kind == SearchVerdict::Kind::Valid);
  CHECK(check_validity(parse_formula("true"), ternary2(), FrameClass::All)
            .kind == SearchVerdict::Kind::Valid);

  SearchVerdict v = check_validity(parse_formula("(p <| q) -> (q <| p)"),
                                   ternary2(), FrameClass::All);
  REQUIRE(v.kind == SearchVerdict::Kind::Countermodel);
  REQUIRE(v.witness);
  CHECK(!eval(v.witness->model, v.witness->point,
              parse_formula("(p <| q) -> (q <| p)")));
}

TEST_CASE("exhaustive satisfiability verdicts") {
  SearchVerdict sat = check_sat(parse_formula("~(p <| q)"), ternary2(),
                                FrameClass::All);
  REQUIRE(sat.kind == SearchVerdict::Kind::Satisfiable);
  CHECK(eval(sat.witness->model, sat.witness->point,
             parse_formula("~(p <| q)")));

  CHECK(check_sat(parse_formula("p & ~p"), ternary2(), FrameClass::All).kind ==
        SearchVerdict::Kind::Unsatisfiable);

  SearchBounds binary3{3, {"p"}, RelationKind::Binary, std::nullopt};
  CHECK(check_sat(parse_formula("Delta p & ~(Box p | Box ~p)"), binary3,
                  FrameClass::All)
            .kind == SearchVerdict::Kind::Unsatisfiable);
}

TEST_CASE("sampling produces Unknown or a re-verifying witness") {
  SearchBounds sampled{4, {"p", "q"}, RelationKind::Ternary,
                       SampleMode{200, 99, 0.3}};
  SearchVerdict unknown = check_validity(parse_formula("p <| p"), sampled,
                                         FrameClass::All);
  CHECK(unknown.kind == SearchVerdict::Kind::Unknown);
  CHECK(unknown.trials == 200);

  SearchVerdict counter = check_validity(parse_formula("O p"), sampled,
                                         FrameClass::All);
  REQUIRE(counter.kind == SearchVerdict::Kind::Countermodel);
  CHECK(!eval(counter.witness->model, counter.witness->point,
              parse_formula("O p")));
}

TEST_CASE("bounds violations are rejected") {
  SearchBounds over_ternary{3, {"p"}, RelationKind::Ternary, std::nullopt};
  CHECK_THROWS_AS(
      check_validity(parse_formula("p <| p"), over_ternary, FrameClass::All),
      BoundsError);

  SearchBounds over_binary{4, {"p"}, RelationKind::Binary, std::nullopt};
  CHECK_THROWS_AS(
      check_validity(parse_formula("Delta p"), over_binary, FrameClass::All),
      BoundsError);

  // class constraints need the binary relation
  CHECK_THROWS_AS(check_validity(parse_formula("p <| p"), ternary2(),
                                 FrameClass::Reflexive),
                  BoundsError);

  // formula/relation mismatch
  CHECK_THROWS_AS(
      check_validity(parse_formula("Delta p"), ternary2(), FrameClass::All),
      BoundsError);
  SearchBounds binary2{2, {"p"}, RelationKind::Binary, std::nullopt};
  CHECK_THROWS_AS(
      check_validity(parse_formula("O p"), binary2, FrameClass::All),
      BoundsError);
}

TEST_CASE("class-constrained exhaustive search") {
  // Delta p -> p is the T axiom shape; valid on reflexive frames only
  SearchBounds binary3{3, {"p"}, RelationKind::Binary, std::nullopt};
  Formula t_shape = parse_formula("Delta p & p -> Box p");
  CHECK(check_validity(t_shape, binary3, FrameClass::Reflexive).kind ==
        SearchVerdict::Kind::Valid);
  CHECK(check_validity(t_shape, binary3, FrameClass::All).kind ==
        SearchVerdict::Kind::Countermodel);
}

TEST_CASE("random models are deterministic per seed") {
  SearchBounds b{4, {"p", "q"}, RelationKind::Both, std::nullopt};
  GeneralizedModel a = random_model(b, FrameClass::All, 12345);
  GeneralizedModel c = random_model(b, FrameClass::All, 12345);
  CHECK(model_to_json(a) == model_to_json(c));
  GeneralizedModel d = random_model(b, FrameClass::All, 12346);
  CHECK(model_to_json(a) != model_to_json(d));  // overwhelmingly likely
}

TEST_CASE("random frames satisfy their class constraints") {
  for (FrameClass c :
       {FrameClass::Serial, FrameClass::Reflexive, FrameClass::Transitive,
        FrameClass::Euclidean, FrameClass::Symmetric, FrameClass::S4,
        FrameClass::S5, FrameClass::FourFive, FrameClass::KD45,
        FrameClass::Universal}) {
    for (int seed = 0; seed < 100; ++seed) {
      SearchBounds b{4, {"p"}, RelationKind::Binary, std::nullopt};
      GeneralizedModel m = random_model(b, c, seed);
      CHECK(frame_in_class(m, c));
    }
  }
  SearchBounds b{3, {"p"}, RelationKind::Binary, std::nullopt};
  GeneralizedModel u = random_model(b, FrameClass::Universal, 5);
  CHECK(u.binary_successors(0) == u.full_mask());
}

TEST_CASE("exhaustive verdicts are reproducible") {
  Formula f = parse_formula("(p <| q) -> (q <| p)");
  SearchVerdict a = check_validity(f, ternary2(), FrameClass::All);
  SearchVerdict b = check_validity(f, ternary2(), FrameClass::All);
  REQUIRE(a.kind == SearchVerdict::Kind::Countermodel);
  CHECK(model_to_json(a.witness->model) == model_to_json(b.witness->model));
  CHECK(a.witness->point == b.witness->point);
}

TEST_CASE("enumeration visits the advertised space") {
  // binary models, 1 atom: 2^(k^2) frames x 2^k valuations for k = 1..3
  int count = 0;
  SearchBounds b{3, {"p"}, RelationKind::Binary, std::nullopt};
  for_each_model(b, FrameClass::All, [&](const GeneralizedModel&) {
    ++count;
    return true;
  });
  CHECK(count == 2 * 2 + 16 * 4 + 512 * 8);

  int ternary_count = 0;
  SearchBounds t{2, {"p"}, RelationKind::Ternary, std::nullopt};
  for_each_model(t, FrameClass::All, [&](const GeneralizedModel&) {
    ++ternary_count;
    return true;
  });
  CHECK(ternary_count == 2 * 2 + 256 * 4);

  int both_count = 0;
  SearchBounds both{2, {"p"}, RelationKind::Both, std::nullopt};
  for_each_model(both, FrameClass::All, [&](const GeneralizedModel& m) {
    ++both_count;
    return m.has_binary() && m.has_ternary();
  });
  CHECK(both_count == 2 * 2 * 2 + 16 * 256 * 4);
}

#include <doctest.h>

#include "suplogic/model.hpp"
#include "suplogic/search.hpp"
#include "suplogic/semantics.hpp"

#include "test_util.hpp"

using namespace suplogic;

namespace {

GeneralizedModel binary_model(
    std::vector<std::string> worlds,
    GeneralizedModel::BinaryByName binary,
    GeneralizedModel::ValuationByName valuation = {}) {
  return GeneralizedModel(std::move(worlds), std::nullopt, std::move(binary),
                          valuation);
}

}  // namespace

TEST_CASE("derive_ternary takes the per-world square of R") {
  GeneralizedModel m = binary_model({"u", "v", "w"}, {{"w", {"u", "v"}}});
  GeneralizedModel d = derive_ternary(m);
  CHECK(d.has_binary());
  CHECK(d.has_ternary());
  int w = *d.world_index("w"), u = *d.world_index("u"), v = *d.world_index("v");
  CHECK(d.ternary_row(w, u) == ((WorldMask{1} << u) | (WorldMask{1} << v)));
  CHECK(d.ternary_row(w, v) == ((WorldMask{1} << u) | (WorldMask{1} << v)));
  CHECK(d.ternary_row(w, w) == 0);
  CHECK(d.ternary_row(u, u) == 0);  // empty R(u) gives empty product

  GeneralizedModel uni = universal_model({"a", "b"}, {});
  for (int ww = 0; ww < 2; ++ww)
    for (int uu = 0; uu < 2; ++uu)
      CHECK(uni.ternary_row(ww, uu) == uni.full_mask());

  CHECK_THROWS_AS(
      derive_ternary(testutil::load_data_model("moreexp_m.json")), ModelError);
}

TEST_CASE("frame class membership") {
  GeneralizedModel identity =
      binary_model({"a", "b"}, {{"a", {"a"}}, {"b", {"b"}}});
  CHECK(frame_in_class(identity, FrameClass::Reflexive));
  CHECK(frame_in_class(identity, FrameClass::Euclidean));
  CHECK(frame_in_class(identity, FrameClass::Serial));
  CHECK(frame_in_class(identity, FrameClass::Transitive));
  CHECK(frame_in_class(identity, FrameClass::Symmetric));
  CHECK(!frame_in_class(identity, FrameClass::Universal));

  GeneralizedModel empty = binary_model({"a"}, {});
  CHECK(!frame_in_class(empty, FrameClass::Serial));
  CHECK(frame_in_class(empty, FrameClass::Transitive));

  GeneralizedModel full = universal_model({"a", "b", "c"}, {});
  for (FrameClass c :
       {FrameClass::All, FrameClass::Serial, FrameClass::Reflexive,
        FrameClass::Transitive, FrameClass::Euclidean, FrameClass::Symmetric,
        FrameClass::S4, FrameClass::S5, FrameClass::FourFive, FrameClass::KD45,
        FrameClass::Universal})
    CHECK(frame_in_class(full, c));
}

TEST_CASE("combined classes are conjunctions of their parts") {
  for (int seed = 0; seed < 200; ++seed) {
    SearchBounds b{3, {"p"}, RelationKind::Binary, std::nullopt};
    GeneralizedModel m = random_model(b, FrameClass::All, seed);
    CHECK(frame_in_class(m, FrameClass::S5) ==
          (frame_in_class(m, FrameClass::Reflexive) &&
           frame_in_class(m, FrameClass::Euclidean)));
    CHECK(frame_in_class(m, FrameClass::S4) ==
          (frame_in_class(m, FrameClass::Reflexive) &&
           frame_in_class(m, FrameClass::Transitive)));
    CHECK(frame_in_class(m, FrameClass::KD45) ==
          (frame_in_class(m, FrameClass::Serial) &&
           frame_in_class(m, FrameClass::FourFive)));
  }
}

TEST_CASE("universal_model") {
  GeneralizedModel one = universal_model({"a"}, {{"p", {"a"}}});
  CHECK(one.binary_successors(0) == 1);
  CHECK(one.ternary_row(0, 0) == 1);
  CHECK(one.atom_mask("p") == 1);

  GeneralizedModel two = universal_model({"a", "b"}, {});
  CHECK(frame_in_class(two, FrameClass::Universal));

  CHECK_THROWS_AS(universal_model({}, {}), ModelError);
}

TEST_CASE("generated_submodel restricts to reachable worlds") {
  GeneralizedModel chain =
      binary_model({"a", "b", "c"}, {{"a", {"b"}}, {"b", {"c"}}});
  GeneralizedModel from_b = generated_submodel(chain, "b");
  CHECK(from_b.worlds() == std::vector<std::string>{"b", "c"});

  GeneralizedModel uni = universal_model({"a", "b"}, {{"p", {"a"}}});
  GeneralizedModel same = generated_submodel(uni, "b");
  CHECK(same.worlds() == uni.worlds());
  CHECK(same.atom_mask("p") == uni.atom_mask("p"));

  GeneralizedModel isolated = binary_model({"a", "b"}, {{"b", {"a"}}});
  CHECK(generated_submodel(isolated, "a").worlds() ==
        std::vector<std::string>{"a"});

  CHECK_THROWS_AS(
      generated_submodel(testutil::load_data_model("moreexp_m.json"), "s"),
      ModelError);
}

TEST_CASE("derived ternary collapses the agreement operator onto Delta") {
  Rng rng(99);
  for (int seed = 0; seed < 200; ++seed) {
    SearchBounds b{4, {"p", "q"}, RelationKind::Binary, std::nullopt};
    GeneralizedModel m =
        derive_ternary(random_model(b, FrameClass::All, 500 + seed));
    testutil::GenOptions opts;
    opts.delta = true;
    Formula body = testutil::random_formula(rng, opts, 2);
    CHECK(extension(m, Formula::delta(body)) ==
          extension(m, Formula::agree(body)));
  }
}

TEST_CASE("generating from a world of an s5 frame yields a universal model") {
  Formula f = parse_formula("D(p; q) & (Delta q -> Box (q | ~p))");
  for (int seed = 0; seed < 150; ++seed) {
    SearchBounds b{5, {"p", "q"}, RelationKind::Binary, std::nullopt};
    GeneralizedModel m = random_model(b, FrameClass::S5, seed);
    for (const auto& w : m.worlds()) {
      GeneralizedModel sub = generated_submodel(m, w);
      CHECK(frame_in_class(sub, FrameClass::Universal));
      CHECK(eval(m, w, f) == eval(sub, w, f));
    }
  }
}

TEST_CASE("generated submodels preserve truth at the root") {
  testutil::GenOptions opts;
  opts.box = opts.delta = opts.det = opts.strict = true;
  Rng rng(123);
  for (int seed = 0; seed < 300; ++seed) {
    SearchBounds b{4, {"p", "q"}, RelationKind::Binary, std::nullopt};
    GeneralizedModel m = random_model(b, FrameClass::All, 9000 + seed);
    std::string root = m.world_name(rng.below(m.world_count()));
    GeneralizedModel sub = generated_submodel(m, root);
    Formula f = testutil::random_formula(rng, opts, 3);
    CHECK(eval(m, root, f) == eval(sub, root, f));
  }
}

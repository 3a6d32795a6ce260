#include <gtest/gtest.h>

#include "dfinv/error.hpp"
#include "dfinv/fox.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace dfinv {
namespace {

using testing::character;
using testing::span_of;

const char* kOneTorus = "<x1,x2 | x1 x2^2 x1^-1 x2^-2>";
const char* kOmegaClosed = "<x1,x2,x3 | [x1^2,x2], [x1,x3], x1 [x2,x3] x1^-1 [x2,x3]>";

TEST(Words, FreeReduction) {
  FreeWord w = FreeWord::generator(0) * FreeWord::generator(1, 2) * FreeWord::generator(1, -2);
  EXPECT_EQ(w, FreeWord::generator(0));
  EXPECT_TRUE((w * w.inverse()).is_identity());
  EXPECT_EQ(FreeWord::generator(0).pow(3), FreeWord::generator(0, 3));
  FreeWord a = FreeWord::generator(0), b = FreeWord::generator(1);
  EXPECT_EQ(commutator(a, b), a * b * a.inverse() * b.inverse());
  EXPECT_EQ(conjugate(a, b), b.inverse() * a * b);
}

TEST(Parsing, OneTorusRelator) {
  Presentation p = parse_presentation(kOneTorus);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0].size(), 4u);
}

TEST(Parsing, CommutatorSugar) {
  Presentation p = parse_presentation("<a,b | [a,b]>");
  FreeWord a = FreeWord::generator(0), b = FreeWord::generator(1);
  EXPECT_EQ(p.relators.at(0), a * b * a.inverse() * b.inverse());
  EXPECT_EQ(to_string(p.relators[0], p), "a b a^-1 b^-1");
}

TEST(Parsing, Stallings) {
  Presentation p = parse_presentation(testing::slurp(testing::data_path("stallings.pres")));
  EXPECT_EQ(p.num_generators(), 5u);
  ASSERT_EQ(p.relators.size(), 7u);
  // [a^-1 x, c] = a^-1 x c x^-1 a c^-1.
  EXPECT_EQ(p.relators[4].size(), 6u);
  EXPECT_EQ(to_string(p.relators[4], p), "a^-1 x c x^-1 a c^-1");
}

TEST(Parsing, EquationsConjugatesAndPowers) {
  Presentation p = parse_presentation("<x,y | x y^2 = y^2 x, x^y, (x y)^-2 * 1>");
  FreeWord x = FreeWord::generator(0), y = FreeWord::generator(1);
  EXPECT_EQ(p.relators[0], x * y.pow(2) * (y.pow(2) * x).inverse());
  EXPECT_EQ(p.relators[1], y.inverse() * x * y);
  EXPECT_EQ(p.relators[2], (x * y).pow(-2));
  EXPECT_EQ(parse_presentation(to_string(p)).relators, p.relators);
}

TEST(Parsing, Errors) {
  EXPECT_THROW(parse_presentation("<x,x | x>"), ParseError);
  EXPECT_THROW(parse_presentation("<x | y>"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x"), ParseError);
  EXPECT_THROW(parse_presentation("<x | [x>"), ParseError);
}

TEST(Abelianization, Examples) {
  Abelianization a = abelianize(parse_presentation(kOmegaClosed));
  EXPECT_EQ(a.free_rank, 3u);
  EXPECT_EQ(a.projection, IntegerMatrix::identity(3));
  EXPECT_TRUE(a.torsion.empty());

  Abelianization b = abelianize(parse_presentation("<x | x^2>"));
  EXPECT_EQ(b.free_rank, 0u);
  EXPECT_EQ(b.torsion, std::vector<Integer>{2});

  // F_2 * Z_3 * Z_4.
  Abelianization c = abelianize(parse_presentation("<a,b,c,d | c^2, d^4>"));
  EXPECT_EQ(c.free_rank, 2u);
  EXPECT_EQ(c.torsion, (std::vector<Integer>{2, 4}));
  // Invariant factors: Z_3 + Z_4 is cyclic of order 12.
  EXPECT_EQ(abelianize(parse_presentation("<c,d | c^3, d^4>")).torsion, std::vector<Integer>{12});
  EXPECT_EQ(c.image(2), (Exponent{0, 0}));
}

TEST(Fox, DerivativesByHand) {
  Presentation p = parse_presentation(kOneTorus);
  Abelianization a = abelianize(p);
  EXPECT_EQ(fox_derivative_abelianized(p.relators[0], 0, a), parse_laurent("1-t2^2"));
  EXPECT_EQ(fox_derivative_abelianized(p.relators[0], 1, a), parse_laurent("(t1-1)*(1+t2)"));
  EXPECT_TRUE(fox_derivative_abelianized(FreeWord::generator(0), 1, a).is_zero());
  EXPECT_EQ(fox_derivative_abelianized(FreeWord::generator(0, -1), 0, a), parse_laurent("-t1^-1", 2));
}

TEST(Alexander, Commutator) {
  AlexanderMatrix m = alexander_matrix(parse_presentation("<x1,x2 | [x1,x2]>"));
  EXPECT_EQ(m.entries(0, 0), parse_laurent("1-t2"));
  EXPECT_EQ(m.entries(0, 1), parse_laurent("t1-1", 2));
}

TEST(Alexander, NoRelators) {
  AlexanderMatrix m = alexander_matrix(parse_presentation("<x1,x2 | >"));
  EXPECT_EQ(m.entries.rows(), 0u);
  EXPECT_EQ(m.num_generators(), 2u);
}

TEST(Alexander, OmegaClosedFirstRow) {
  Presentation p = parse_presentation(kOmegaClosed);
  for (auto& r : p.relators) r = r.inverse();
  AlexanderMatrix m = alexander_matrix(p);
  EXPECT_EQ(m.entries(0, 0), parse_laurent("(t2-1)*(1+t1)", 3));
  EXPECT_EQ(m.entries(0, 1), parse_laurent("(1-t1)*(1+t1)", 3));
  EXPECT_TRUE(m.entries(0, 2).is_zero());
}

TEST(Ranks, OmegaClosed) {
  AlexanderMatrix m = alexander_matrix(parse_presentation(kOmegaClosed));
  EXPECT_LE(rank_at_character(m.entries, character({Rational(1, 2), Rational(1, 3), Rational(1, 5)})), 1u);
  EXPECT_EQ(rank_at_character(m.entries, character({Rational(1, 3), 0, 0})), 2u);
  EXPECT_EQ(rank_at_character(Matrix<LaurentPoly>(2, 2, LaurentPoly(3)), character({0, 0, 0})), 0u);
  TranslatedTorus t1(character({Rational(1, 2), 0, 0}), span_of(3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(generic_rank_on_torus(m.entries, t1), 1u);
  EXPECT_EQ(generic_rank_on_torus(m.entries, TranslatedTorus::full(3)), 2u);
  Matrix<LaurentPoly> single(1, 1, parse_laurent("t1-1"));
  EXPECT_EQ(generic_rank_on_torus(single, TranslatedTorus::subtorus(span_of(1, {}))), 0u);
}

TEST(Depth1, OneTorus) {
  Presentation p = parse_presentation(kOneTorus);
  EXPECT_TRUE(depth1_membership(p, character({0, Rational(1, 2)})));
  EXPECT_FALSE(depth1_membership(p, character({Rational(1, 2), 0})));
  EXPECT_TRUE(depth1_membership(p, character({0, 0})));
  EXPECT_FALSE(contains_translated_torus(p, TranslatedTorus::full(2)));
}

TEST(Depth1, FreeGroup) {
  Presentation f2 = parse_presentation("<a,b | >");
  EXPECT_TRUE(depth1_membership(f2, character({Rational(1, 3), Rational(2, 5)})));
  EXPECT_TRUE(contains_translated_torus(f2, TranslatedTorus::full(2)));
}

TEST(Depth1, Ccm) {
  Presentation p = parse_presentation(testing::slurp(testing::data_path("ccm.pres")));
  TranslatedTorus t1 = TranslatedTorus::subtorus(
      span_of(6, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
  TranslatedTorus t2 = TranslatedTorus::subtorus(span_of(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}));
  TranslatedTorus rho_t2(character({0, 0, Rational(1, 2), 0, 0, 0}), t2.subspace());
  EXPECT_TRUE(contains_translated_torus(p, t1));
  EXPECT_TRUE(contains_translated_torus(p, rho_t2));
  EXPECT_FALSE(contains_translated_torus(p, t2));
  EXPECT_FALSE(contains_translated_torus(p, TranslatedTorus::full(6)));
}

TEST(Depth1, GenericRelatorMissesTheFullTorus) {
  AlexanderMatrix m = alexander_matrix(parse_presentation("<a,b | [a,b^2][a^2,b]>"));
  ASSERT_EQ(m.num_vars(), 2u);
  EXPECT_EQ(generic_rank_on_torus(m.entries, TranslatedTorus::full(2)), 1u);
  EXPECT_FALSE(contains_translated_torus(m, TranslatedTorus::full(2)));
}

TEST(Depth1, MinorsAndRanksAgree) {
  std::vector<std::string> texts = {kOneTorus, kOmegaClosed, "<x1,x2 | [x1,x2]>",
                                    testing::slurp(testing::data_path("stallings.pres")),
                                    testing::slurp(testing::data_path("ccm.pres")),
                                    testing::slurp(testing::data_path("one_torus.pres"))};
  testing::Rng rng(12);
  for (const auto& text : texts) {
    Presentation p = parse_presentation(text);
    AlexanderMatrix m = alexander_matrix(p);
    if (m.num_generators() > 5) continue;  // Leibniz determinants get slow beyond this
    for (int i = 0; i < 100; ++i) {
      TorsionCharacter x = rng.character(m.num_vars(), 6);
      EXPECT_EQ(depth1_membership(m, x), testing::depth1_by_minors(m, x)) << text;
    }
  }
}

TEST(Depth1, SpecializationNeverRaisesRank) {
  testing::Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    Presentation p = rng.presentation(rng.integer(1, 3), rng.integer(1, 3), 4);
    AlexanderMatrix m = alexander_matrix(p);
    std::size_t generic = generic_rank_on_torus(m.entries, TranslatedTorus::full(m.num_vars()));
    TorsionCharacter x = rng.character(m.num_vars(), 6);
    EXPECT_GE(generic, rank_at_character(m.entries, x)) << to_string(p);
  }
}

}  // namespace
}  // namespace dfinv

#include <gtest/gtest.h>

#include <set>

#include "polargrass/error.hpp"
#include "polargrass/field.hpp"

using namespace polargrass;

TEST(Field, PrimeFieldGF2) {
  auto F = Field::make(2, 1);
  EXPECT_EQ(F->order(), 2);
  EXPECT_EQ(F->degree(), 1);
  EXPECT_TRUE(F->modulus().empty());
  EXPECT_EQ(F->add(1, 1), 0);
  EXPECT_EQ(F->mul(1, 1), 1);
}

TEST(Field, GF3Arithmetic) {
  auto F = Field::make(3, 1);
  auto two = F->element(2);
  EXPECT_EQ((two + two), F->element(1));
  EXPECT_EQ(two.inv(), two);
  EXPECT_EQ((-two), F->element(1));
}

TEST(Field, GF4Modulus) {
  auto F = Field::make(2, 2);
  EXPECT_EQ(F->modulus(), (std::vector<int>{1, 1, 1}));
  auto t = F->element(0, 1);
  EXPECT_EQ(t * t, F->element(1, 1));
}

TEST(Field, GF4Frobenius) {
  auto F = Field::make(2, 2);
  EXPECT_EQ(F->element(0).frobenius(), F->element(0));
  EXPECT_EQ(F->element(1).frobenius(), F->element(1));
  EXPECT_EQ(F->element(0, 1).frobenius(), F->element(1, 1));
  for (int c = 0; c < 4; ++c) {
    Elem e = static_cast<Elem>(c);
    EXPECT_EQ(F->conj(F->conj(e)), e);
    EXPECT_EQ(F->conj(e), F->mul(e, e));
  }
}

TEST(Field, GF9FrobeniusIsInvolution) {
  auto F = Field::make(3, 2);
  for (int c = 0; c < 9; ++c) {
    auto x = FieldElement(F.get(), static_cast<Elem>(c));
    EXPECT_EQ(x.frobenius().frobenius(), x);
  }
}

TEST(Field, NormSurjectiveOntoFixedField) {
  for (int p : {2, 3, 5}) {
    auto F = Field::make(p, 2);
    std::set<int> image;
    for (int c = 0; c < F->order(); ++c) {
      Elem n = F->norm(static_cast<Elem>(c));
      ASSERT_TRUE(F->in_prime_subfield(n));
      image.insert(n);
    }
    EXPECT_EQ(static_cast<int>(image.size()), p) << "p=" << p;
  }
}

TEST(Field, FieldAxiomsExhaustive) {
  for (int q : {2, 3, 4, 5, 7, 9, 25}) {
    auto F = Field::from_order(q);
    for (int a = 0; a < q; ++a) {
      Elem x = static_cast<Elem>(a);
      EXPECT_EQ(F->add(x, F->neg(x)), 0);
      if (a) EXPECT_EQ(F->mul(x, F->inv(x)), 1);
      for (int b = 0; b < q; ++b) {
        Elem y = static_cast<Elem>(b);
        EXPECT_EQ(F->add(x, y), F->add(y, x));
        EXPECT_EQ(F->mul(x, y), F->mul(y, x));
        EXPECT_EQ(F->conj(F->mul(x, y)), F->mul(F->conj(x), F->conj(y)));
      }
    }
  }
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::make(4, 1), InvalidArgument);
  EXPECT_THROW(Field::make(2, 3), Error);
  EXPECT_THROW(Field::from_order(6), InvalidArgument);
  auto F = Field::make(3, 1);
  EXPECT_THROW(F->element(0).inv(), InvalidArgument);
  EXPECT_THROW(F->element(1).frobenius(), InvalidArgument);
  auto G = Field::make(5, 1);
  EXPECT_THROW(F->element(1) + G->element(1), InvalidArgument);
}

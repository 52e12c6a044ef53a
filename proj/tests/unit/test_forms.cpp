#include <gtest/gtest.h>

#include "polargrass/error.hpp"
#include "polargrass/forms.hpp"
#include "polargrass/polargeom.hpp"

using namespace polargrass;

namespace {
std::size_t singular_points(const Form& f) {
  std::size_t c = 0;
  for (const auto& v : projective_points(f.field(), Subspace::full(f.dim())))
    if (f.is_singular(v)) ++c;
  return c;
}
Subspace span(const Form& f, std::vector<Vector> rows) { return canonicalize(f.field(), f.dim(), rows); }
}  // namespace

TEST(Forms, SingularPointCounts) {
  auto F2 = Field::make(2, 1);
  EXPECT_EQ(singular_points(Form::standard(FormKind::hyperbolic, 3, F2)), 35u);
  EXPECT_EQ(singular_points(Form::standard(FormKind::parabolic, 3, F2)), 63u);
  // Q^-(7,2): (q^4 + 1)(q^3 - 1)/(q - 1) = 17 * 7.
  EXPECT_EQ(singular_points(Form::standard(FormKind::elliptic, 3, F2)), 119u);
}

TEST(Forms, WittIndices) {
  auto F2 = Field::make(2, 1);
  auto F3 = Field::make(3, 1);
  auto F4 = Field::make(2, 2);
  EXPECT_EQ(Form::standard(FormKind::parabolic, 3, F3).witt_index(), 3);
  EXPECT_EQ(Form::standard(FormKind::elliptic, 2, F2).witt_index(), 2);
  EXPECT_EQ(Form::standard(FormKind::symplectic, 3, F3).witt_index(), 3);
  auto h = Form::standard(FormKind::hermitian, 2, F4, 5);
  EXPECT_EQ(h.dim(), 5);
  EXPECT_EQ(h.witt_index(), 2);
}

TEST(Forms, FrameIsHyperbolic) {
  auto F2 = Field::make(2, 1);
  auto f = Form::standard(FormKind::hyperbolic, 5, F2);
  auto fr = f.standard_frame();
  ASSERT_EQ(fr.pairs.size(), 5u);
  EXPECT_TRUE(fr.anisotropic.empty());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(f.beta(fr.pairs[i].first, fr.pairs[j].second), i == j ? 1 : 0);
      EXPECT_EQ(f.beta(fr.pairs[i].first, fr.pairs[j].first), 0);
      EXPECT_TRUE(f.is_singular(fr.pairs[i].first));
      EXPECT_TRUE(f.is_singular(fr.pairs[i].second));
    }
  auto p = Form::standard(FormKind::parabolic, 3, Field::make(3, 1)).standard_frame();
  EXPECT_EQ(p.pairs.size(), 3u);
  EXPECT_EQ(p.anisotropic.size(), 1u);
}

TEST(Forms, EvalAndIsotropy) {
  auto F3 = Field::make(3, 1);
  for (auto kind : {FormKind::symplectic, FormKind::parabolic, FormKind::hyperbolic, FormKind::elliptic}) {
    auto f = Form::standard(kind, 2, F3);
    auto fr = f.standard_frame();
    auto [e1, f1] = fr.pairs[0];
    auto e2 = fr.pairs[1].first;
    EXPECT_EQ(f.eval_beta(e1, f1), F3->element(1)) << to_string(kind);
    EXPECT_EQ(f.eval_beta(e1, e2), F3->element(0));
    EXPECT_TRUE(f.is_totally_isotropic(span(f, {e1, e2})));
    EXPECT_FALSE(f.is_totally_isotropic(span(f, {e1, f1})));
  }
}

TEST(Forms, Perp) {
  auto F3 = Field::make(3, 1);
  auto f = Form::standard(FormKind::symplectic, 3, F3);
  EXPECT_EQ(f.perp(Subspace::zero(6)), Subspace::full(6));
  EXPECT_TRUE(f.perp(Subspace::full(6)).is_zero());
  auto e1 = span(f, {f.standard_frame().pairs[0].first});
  auto P = f.perp(e1);
  EXPECT_EQ(P.dim(), 5);
  EXPECT_TRUE(contains(*F3, P, e1));
  for (const auto& v : projective_points(*F3, Subspace::full(6)))
    EXPECT_EQ(contains_vector(*F3, P, v), f.beta(e1.row(0), v) == 0);
}

TEST(Forms, HermitianIsSesquilinear) {
  auto F4 = Field::make(2, 2);
  auto f = Form::standard(FormKind::hermitian, 2, F4);
  Vector u{1, 2, 0, 3}, v{3, 1, 1, 0};
  EXPECT_EQ(f.beta(u, v), F4->conj(f.beta(v, u)));
  Vector su = u;
  for (auto& x : su) x = F4->mul(2, x);
  EXPECT_EQ(f.beta(su, v), F4->mul(2, f.beta(u, v)));
}

TEST(Forms, KindNames) {
  for (auto k : {FormKind::symplectic, FormKind::hermitian, FormKind::parabolic, FormKind::hyperbolic,
                 FormKind::elliptic})
    EXPECT_EQ(form_kind_from_string(to_string(k)), k);
  EXPECT_THROW(form_kind_from_string("unitary"), InvalidArgument);
}

TEST(Forms, Errors) {
  auto F2 = Field::make(2, 1);
  auto F3 = Field::make(3, 1);
  EXPECT_THROW(Form::standard(FormKind::symplectic, 2, F2), InvalidArgument);
  EXPECT_THROW(Form::standard(FormKind::hermitian, 2, F3), InvalidArgument);
  EXPECT_THROW(Form::standard(FormKind::hyperbolic, 0, F3), InvalidArgument);
  EXPECT_THROW(Form::custom(FormKind::symplectic, 1, F3, 2, {0, 1, 1, 0}, {}), InvalidArgument);
  EXPECT_THROW(enumerate_ti(Form::standard(FormKind::hyperbolic, 2, F3), 3), InvalidArgument);
  auto f = Form::standard(FormKind::symplectic, 2, F3);
  EXPECT_THROW(f.q(Vector{1, 0, 0, 0}), InvalidArgument);
  EXPECT_THROW(f.eval_beta(Vector{1, 0}, Vector{1, 0}), InvalidArgument);
}

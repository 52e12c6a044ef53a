#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace polargrass {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Elements are stored as a single code a + b*p (b = 0 in prime fields), so
// every operation below is a table lookup. Codes fit in a byte since |F| <= 32.
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 32;

class FieldElement;

class Field {
 public:
  // GF(p) for degree 1, GF(p^2) for degree 2. The degree-2 modulus is the
  // monic t^2 + c1 t + c0 with (c0, c1) lexicographically least irreducible.
  static FieldPtr make(int p, int degree);

  // Accepts a prime power q = p or p^2.
  static FieldPtr from_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return degree_; }
  int order() const { return q_; }

  // [c0, c1, 1] for degree 2, empty for prime fields.
  std::vector<int> modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem inv_unchecked(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, unsigned e) const;

  // x -> x^p. Identity on prime fields; the public FieldElement::frobenius
  // rejects that case, internal callers use it as the trivial involution.
  Elem conj(Elem a) const { return frob_[a]; }
  Elem norm(Elem a) const { return mul(a, frob_[a]); }
  Elem trace(Elem a) const { return add(a, frob_[a]); }

  // Canonical pair (a, b) meaning a + b*t.
  std::pair<int, int> rep(Elem e) const { return {e % p_, e / p_}; }
  Elem encode(int a, int b = 0) const;
  // Reduces an arbitrary integer into the prime subfield.
  Elem from_int(long long v) const;

  bool in_prime_subfield(Elem e) const { return e < p_; }

  FieldElement element(int a, int b = 0) const;

  std::string name() const;

 private:
  Field(int p, int degree);

  int p_ = 0;
  int degree_ = 0;
  int q_ = 0;
  std::array<int, 2> mod_{};  // c0, c1
  std::vector<Elem> add_, mul_, neg_, inv_, frob_;
};

// Value type carrying its owning field; used at API boundaries and in tests.
// Hot loops work on raw Elem codes through Field directly.
class FieldElement {
 public:
  FieldElement(const Field* owner, Elem code) : owner_(owner), code_(code) {}

  const Field& owner() const { return *owner_; }
  Elem code() const { return code_; }
  std::pair<int, int> rep() const { return owner_->rep(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement frobenius() const;
  FieldElement norm() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.owner_ == b.owner_ && a.code_ == b.code_;
  }

 private:
  void check_same(const FieldElement& o) const;

  const Field* owner_;
  Elem code_;
};

bool is_prime(int p);

}  // namespace polargrass

#include "polargrass/field.hpp"

#include "polargrass/error.hpp"

namespace polargrass {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// t^2 + c1 t + c0 has no root in GF(p).
bool irreducible(int p, int c0, int c1) {
  for (int x = 0; x < p; ++x)
    if ((x * x + c1 * x + c0) % p == 0) return false;
  return true;
}

}  // namespace

FieldPtr Field::make(int p, int degree) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
  if (degree != 1 && degree != 2) throw InvalidArgument("field degree must be 1 or 2");
  int q = degree == 1 ? p : p * p;
  if (q > kMaxFieldOrder) throw Unsupported("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxFieldOrder));
  return FieldPtr(new Field(p, degree));
}

FieldPtr Field::from_order(int q) {
  if (is_prime(q)) return make(q, 1);
  for (int p = 2; p * p <= q; ++p)
    if (p * p == q && is_prime(p)) return make(p, 2);
  throw InvalidArgument("field order must be a prime or the square of a prime, got " + std::to_string(q));
}

Field::Field(int p, int degree) : p_(p), degree_(degree), q_(degree == 1 ? p : p * p) {
  if (degree_ == 2) {
    bool found = false;
    for (int c0 = 0; c0 < p_ && !found; ++c0)
      for (int c1 = 0; c1 < p_ && !found; ++c1)
        if (irreducible(p_, c0, c1)) {
          mod_ = {c0, c1};
          found = true;
        }
  }
  const int n = q_;
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  frob_.resize(n);
  for (int x = 0; x < n; ++x) {
    auto [a1, b1] = rep(static_cast<Elem>(x));
    neg_[x] = encode((p_ - a1) % p_, (p_ - b1) % p_);
    for (int y = 0; y < n; ++y) {
      auto [a2, b2] = rep(static_cast<Elem>(y));
      add_[x * n + y] = encode((a1 + a2) % p_, (b1 + b2) % p_);
      // (a1 + b1 t)(a2 + b2 t) with t^2 = -c1 t - c0
      int c = a1 * a2;
      int t = a1 * b2 + a2 * b1;
      int tt = b1 * b2;
      c -= tt * mod_[0];
      t -= tt * mod_[1];
      c = ((c % p_) + p_) % p_;
      t = ((t % p_) + p_) % p_;
      mul_[x * n + y] = encode(c, t);
    }
  }
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (mul_[x * n + y] == 1) inv_[x] = static_cast<Elem>(y);
  for (int x = 0; x < n; ++x) frob_[x] = degree_ == 1 ? static_cast<Elem>(x) : pow(static_cast<Elem>(x), p_);
}

std::vector<int> Field::modulus() const {
  if (degree_ == 1) return {};
  return {mod_[0], mod_[1], 1};
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, unsigned e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::encode(int a, int b) const {
  if (a < 0 || a >= p_ || b < 0 || b >= p_ || (degree_ == 1 && b != 0))
    throw InvalidArgument("element representation out of range");
  return static_cast<Elem>(a + b * p_);
}

Elem Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FieldElement Field::element(int a, int b) const { return FieldElement(this, encode(a, b)); }

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

void FieldElement::check_same(const FieldElement& o) const {
  if (owner_ != o.owner_) throw InvalidArgument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {owner_, owner_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {owner_, owner_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {owner_, owner_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {owner_, owner_->neg(code_)}; }

FieldElement FieldElement::inv() const { return {owner_, owner_->inv(code_)}; }

FieldElement FieldElement::frobenius() const {
  if (owner_->degree() != 2) throw InvalidArgument("frobenius requires a quadratic extension field");
  return {owner_, owner_->conj(code_)};
}

FieldElement FieldElement::norm() const { return {owner_, owner_->norm(code_)}; }

}  // namespace polargrass

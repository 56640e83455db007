#ifndef EXGEO_FIELD_HPP
#define EXGEO_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace exgeo {

/// A single field element: canonical residue in [0, p) for prime fields,
/// reduced fraction with positive denominator for the rationals.
class Fv {
 public:
  Fv() : v_(int64_t{0}) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  int64_t residue() const { return std::get<int64_t>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  bool operator==(const Fv& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (is_rational()) return cmp(rat(), o.rat()) == 0;
    return residue() == o.residue();
  }
  bool operator!=(const Fv& o) const { return !(*this == o); }

 private:
  friend class Field;
  explicit Fv(int64_t r) : v_(r) {}
  explicit Fv(mpq_class q) : v_(std::move(q)) {}
  std::variant<int64_t, mpq_class> v_;
};

/// Field descriptor: a prime field F_p or the rationals Q. All element
/// arithmetic is routed through the Field so prime residues never pay for
/// arbitrary-precision storage.
class Field {
 public:
  static Field prime(int64_t p);
  static Field rationals() { return Field(0); }

  bool is_prime_field() const { return p_ != 0; }
  int64_t characteristic() const { return p_; }
  /// Number of elements; only valid for prime fields.
  int64_t order() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  Fv zero() const { return p_ ? Fv(int64_t{0}) : Fv(mpq_class(0)); }
  Fv one() const { return from_int(1); }
  Fv from_int(int64_t n) const;
  Fv from_fraction(int64_t num, int64_t den) const;
  /// k-th element of a prime field, k in [0, p).
  Fv element(int64_t k) const;

  bool is_zero(const Fv& a) const;
  bool is_one(const Fv& a) const;

  Fv add(const Fv& a, const Fv& b) const;
  Fv sub(const Fv& a, const Fv& b) const;
  Fv mul(const Fv& a, const Fv& b) const;
  /// Throws std::domain_error on division by zero.
  Fv div(const Fv& a, const Fv& b) const;
  Fv neg(const Fv& a) const;
  Fv inv(const Fv& a) const;

  /// a + b*c, the fused step used by all elimination loops.
  Fv addmul(const Fv& a, const Fv& b, const Fv& c) const;

  std::string str(const Fv& a) const;
  std::string str() const { return p_ ? std::to_string(p_) : "Q"; }

 private:
  explicit Field(int64_t p) : p_(p) {}
  int64_t p_;  // 0 encodes Q
};

bool is_prime_number(int64_t n);

/// Extended-Euclid inverse of a mod p, a not divisible by p.
int64_t mod_inverse(int64_t a, int64_t p);

}  // namespace exgeo

#endif

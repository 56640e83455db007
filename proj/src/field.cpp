#include "exgeo/field.hpp"

namespace exgeo {

bool is_prime_number(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  return ((t % p) + p) % p;
}

Field Field::prime(int64_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  return Field(p);
}

int64_t Field::order() const {
  if (!p_) throw std::logic_error("order() requested for an infinite field");
  return p_;
}

Fv Field::from_int(int64_t n) const {
  if (!p_) return Fv(mpq_class(n));
  int64_t r = n % p_;
  if (r < 0) r += p_;
  return Fv(r);
}

Fv Field::from_fraction(int64_t num, int64_t den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (!p_) {
    mpq_class q(num, den);
    q.canonicalize();
    return Fv(q);
  }
  return div(from_int(num), from_int(den));
}

Fv Field::element(int64_t k) const {
  if (!p_) throw std::logic_error("element enumeration requires a finite field");
  if (k < 0 || k >= p_) throw std::out_of_range("field element index");
  return Fv(k);
}

bool Field::is_zero(const Fv& a) const {
  return p_ ? a.residue() == 0 : sgn(a.rat()) == 0;
}

bool Field::is_one(const Fv& a) const {
  return p_ ? a.residue() == 1 : cmp(a.rat(), 1) == 0;
}

Fv Field::add(const Fv& a, const Fv& b) const {
  if (!p_) return Fv(mpq_class(a.rat() + b.rat()));
  int64_t r = a.residue() + b.residue();
  if (r >= p_) r -= p_;
  return Fv(r);
}

Fv Field::sub(const Fv& a, const Fv& b) const {
  if (!p_) return Fv(mpq_class(a.rat() - b.rat()));
  int64_t r = a.residue() - b.residue();
  if (r < 0) r += p_;
  return Fv(r);
}

Fv Field::mul(const Fv& a, const Fv& b) const {
  if (!p_) return Fv(mpq_class(a.rat() * b.rat()));
  return Fv(static_cast<int64_t>(static_cast<unsigned __int128>(a.residue()) * b.residue() % p_));
}

Fv Field::neg(const Fv& a) const {
  if (!p_) return Fv(mpq_class(-a.rat()));
  return a.residue() == 0 ? a : Fv(p_ - a.residue());
}

Fv Field::inv(const Fv& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (!p_) return Fv(mpq_class(1 / a.rat()));
  return Fv(mod_inverse(a.residue(), p_));
}

Fv Field::div(const Fv& a, const Fv& b) const { return mul(a, inv(b)); }

Fv Field::addmul(const Fv& a, const Fv& b, const Fv& c) const {
  if (!p_) return Fv(mpq_class(a.rat() + b.rat() * c.rat()));
  int64_t r = static_cast<int64_t>(
      (static_cast<unsigned __int128>(b.residue()) * c.residue() + a.residue()) % p_);
  return Fv(r);
}

std::string Field::str(const Fv& a) const {
  if (!p_) return a.rat().get_str();
  return std::to_string(a.residue());
}

}  // namespace exgeo

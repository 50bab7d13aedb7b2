#include "parsmash/field.hpp"

#include <cctype>
#include <string>

#include "parsmash/errors.hpp"

namespace parsmash {

namespace {

// Values beyond this magnitude are handed to GMP; products of two small
// values then always fit in a signed 128-bit accumulator.
constexpr int64_t kSmallLimit = int64_t{1} << 62;

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
  while (b != 0) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(__int128 v) {
  u128 mag = abs128(v);
  uint64_t words[2] = {static_cast<uint64_t>(mag), static_cast<uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, words);
  if (v < 0) z = -z;
  return z;
}

bool is_prime_number(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(int64_t value) {
  if (value > -kSmallLimit && value < kSmallLimit) {
    num_ = value;
  } else {
    big_ = std::make_unique<mpq_class>(static_cast<long>(value));
    num_ = 0;
  }
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nn = n.get_si();
    long dd = d.get_si();
    if (nn > -kSmallLimit && nn < kSmallLimit && dd < kSmallLimit) {
      num_ = nn;
      den_ = dd;
      return;
    }
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
}

Scalar::Scalar(const Scalar& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_ = std::make_unique<mpq_class>(*other.big_);
  else
    big_.reset();
  return *this;
}

Scalar Scalar::from_parts(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (num == 0) return Scalar();
  if (num > -kSmallLimit && num < kSmallLimit && den < kSmallLimit) {
    Scalar s;
    s.num_ = static_cast<int64_t>(num);
    s.den_ = static_cast<int64_t>(den);
    return s;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  return Scalar(q);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(static_cast<long>(num_), static_cast<unsigned long>(den_));
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

// ----------------------------------------------------------------- Field

Field Field::prime(int64_t p) {
  if (p >= (int64_t{1} << 31) || !is_prime_number(p))
    throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

Field Field::parse(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "Q" || s == "QQ" || s == "Rationals" || s == "rationals") return rationals();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.rfind("F_", 0) == 0)
    digits = s.substr(2);
  else if (s.rfind("F", 0) == 0)
    digits = s.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("unknown field '" + std::string(name) + "'");
  return prime(std::stoll(digits));
}

std::string Field::name() const {
  if (kind_ == Kind::rationals) return "Q";
  return "F" + std::to_string(p_);
}

int64_t Field::reduce(__int128 v) const {
  __int128 r = v % p_;
  if (r < 0) r += p_;
  return static_cast<int64_t>(r);
}

Scalar Field::from_int(int64_t v) const {
  if (kind_ == Kind::prime) return Scalar(reduce(v));
  return Scalar(v);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::rationals) return Scalar(q);
  mpz_class p(static_cast<long>(p_));
  mpz_class n = q.get_num() % p;
  mpz_class d = q.get_den() % p;
  if (d == 0) throw InputError("denominator vanishes in " + name());
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (n * dinv) % p;
  if (r < 0) r += p;
  return Scalar(static_cast<int64_t>(r.get_si()));
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty scalar literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed scalar literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::q_add(const Scalar& a, const Scalar& b, bool subtract) const {
  if (!a.big_ && !b.big_) {
    __int128 an = a.num_, bn = subtract ? -static_cast<__int128>(b.num_) : b.num_;
    if (a.den_ == 1 && b.den_ == 1) return Scalar::from_parts(an + bn, 1);
    uint64_t g = gcd64(static_cast<uint64_t>(a.den_), static_cast<uint64_t>(b.den_));
    __int128 ad = a.den_ / static_cast<int64_t>(g);
    __int128 bd = b.den_ / static_cast<int64_t>(g);
    return Scalar::from_parts(an * bd + bn * ad, ad * b.den_);
  }
  mpq_class r = a.to_mpq();
  if (subtract)
    r -= b.to_mpq();
  else
    r += b.to_mpq();
  return Scalar(r);
}

Scalar Field::q_mul(const Scalar& a, const Scalar& b) const {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    if (a.den_ == 1 && b.den_ == 1)
      return Scalar::from_parts(static_cast<__int128>(a.num_) * b.num_, 1);
    return Scalar::from_parts(static_cast<__int128>(a.num_) * b.num_,
                              static_cast<__int128>(a.den_) * b.den_);
  }
  mpq_class r = a.to_mpq() * b.to_mpq();
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) return Scalar(reduce(static_cast<__int128>(a.num_) + b.num_));
  return q_add(a, b, false);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) return Scalar(reduce(static_cast<__int128>(a.num_) - b.num_));
  return q_add(a, b, true);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) return Scalar(reduce(static_cast<__int128>(a.num_) * b.num_));
  return q_mul(a, b);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::prime) return Scalar(reduce(-static_cast<__int128>(a.num_)));
  if (a.big_) return Scalar(mpq_class(-*a.big_));
  Scalar r;
  r.num_ = -a.num_;
  r.den_ = a.den_;
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("division by zero in " + name());
  if (kind_ == Kind::prime) {
    // extended Euclid
    int64_t t = 0, new_t = 1, r = p_, new_r = a.num_;
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return Scalar(reduce(t));
  }
  if (a.big_) return Scalar(mpq_class(1 / *a.big_));
  return Scalar::from_parts(a.den_, a.num_);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

void Field::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    acc.num_ = reduce(static_cast<__int128>(a.num_) * b.num_ + acc.num_);
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  if (!acc.big_ && !a.big_ && !b.big_ && acc.den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    acc = Scalar::from_parts(static_cast<__int128>(a.num_) * b.num_ + acc.num_, 1);
    return;
  }
  acc = q_add(acc, q_mul(a, b), false);
}

void Field::sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime) {
    acc.num_ = reduce(acc.num_ - static_cast<__int128>(a.num_) * b.num_);
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  if (!acc.big_ && !a.big_ && !b.big_ && acc.den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    acc = Scalar::from_parts(acc.num_ - static_cast<__int128>(a.num_) * b.num_, 1);
    return;
  }
  acc = q_add(acc, q_mul(a, b), true);
}

}  // namespace parsmash

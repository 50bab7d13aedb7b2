#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parsmash {

class Field;

// An exact field element. Rationals live in a pair of machine words while
// they fit and spill into a GMP rational otherwise; prime-field residues are
// always stored as a reduced machine word. The representation is canonical,
// so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(int64_t value);
  explicit Scalar(const mpq_class& value);

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept = default;
  ~Scalar() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const noexcept { return !big_; }
  int64_t small_num() const noexcept { return num_; }
  int64_t small_den() const noexcept { return den_; }

  mpq_class to_mpq() const;
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  friend class Field;
  static Scalar from_parts(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

// The coefficient field: either the rationals or F_p for a prime p < 2^31.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(int64_t p);
  /// Accepts "Q", "QQ", "F2", "F_7", "GF(5)".
  static Field parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  int64_t characteristic() const noexcept { return p_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::string name() const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(int64_t{1}); }
  Scalar from_int(int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "n", "-n" or "n/d". Throws InputError on a zero denominator in F_p.
  Scalar parse_scalar(std::string_view text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  /// acc += a * b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
  /// acc -= a * b
  void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;

  std::string to_string(const Scalar& a) const { return a.to_string(); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind kind, int64_t p) : kind_(kind), p_(p) {}

  int64_t reduce(__int128 v) const;
  Scalar q_add(const Scalar& a, const Scalar& b, bool subtract) const;
  Scalar q_mul(const Scalar& a, const Scalar& b) const;

  Kind kind_;
  int64_t p_;
};

}  // namespace parsmash

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace infsimp {

// Exact field element: a rational number, or a residue modulo an odd prime.
// Rationals live in an int64 fast path and promote to GMP on overflow.
// Integer-valued scalars without a modulus mix freely with residues.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)

  static Scalar fraction(long long num, long long den);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar residue(long long v, std::uint32_t modulus);

  std::uint32_t modulus() const { return mod_; }
  bool is_zero() const { return num_ == 0 && !big_; }
  bool is_one() const;
  bool is_rational() const { return mod_ == 0; }

  // Rational value (throws for residues).
  mpq_class to_mpq() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;

  // Rationals as "p/q" (or "p" when integral), residues as "k".
  std::string to_string() const;

 private:
  static Scalar normalize_big(mpq_class q);
  void coerce_pair(Scalar& o);
  Scalar to_residue(std::uint32_t p) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t mod_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

// Coefficient field of an instance: Q when modulus == 0, else Z/p.
struct Ring {
  std::uint32_t modulus = 0;

  static Ring rationals() { return {}; }
  static Ring prime(std::uint32_t p);
  static Ring parse(std::string_view text);  // "Q" or "Z/p"

  bool is_rational() const { return modulus == 0; }
  Scalar make(long long v) const;
  Scalar parse_scalar(std::string_view text) const;
  std::string to_string() const;
  bool operator==(const Ring&) const = default;
};

inline Scalar sign_scalar(int exponent) { return (exponent & 1) ? Scalar(-1) : Scalar(1); }

}  // namespace infsimp

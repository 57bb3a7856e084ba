#include "infsimp/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "infsimp/errors.hpp"

namespace infsimp {
namespace {

using i128 = __int128;
constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::int64_t inv_mod(std::int64_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in Z/" + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  i128 n = num, d = den;
  if (d < 0) n = -n, d = -d;
  i128 g = gcd128(n, d);
  if (g > 1) n /= g, d /= g;
  if (fits(n) && fits(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return normalize_big(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return normalize_big(std::move(c));
}

Scalar Scalar::normalize_big(mpq_class q) {
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (fits(n) && fits(d)) {
      s.num_ = n;
      s.den_ = d;
      return s;
    }
  }
  s.num_ = 1;  // nonzero marker; value lives in big_
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::residue(long long v, std::uint32_t modulus) {
  if (modulus == 0) return Scalar(v);
  Scalar s;
  s.mod_ = modulus;
  s.num_ = reduce_mod(v, modulus);
  return s;
}

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

mpq_class Scalar::to_mpq() const {
  if (mod_ != 0) throw StructuralError("residue has no rational value");
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

Scalar Scalar::to_residue(std::uint32_t p) const {
  if (mod_ == p) return *this;
  if (mod_ != 0) throw StructuralError("mixing Z/" + std::to_string(mod_) + " with Z/" + std::to_string(p));
  if (big_) {
    mpz_class n = big_->get_num() % p, d = big_->get_den() % p;
    std::int64_t dn = reduce_mod(d.get_si(), p);
    if (dn == 0) throw std::domain_error("denominator vanishes in Z/" + std::to_string(p));
    return residue(static_cast<long long>((static_cast<unsigned __int128>(reduce_mod(n.get_si(), p)) * inv_mod(dn, p)) % p), p);
  }
  std::int64_t dn = reduce_mod(den_, p);
  if (dn == 0) throw std::domain_error("denominator vanishes in Z/" + std::to_string(p));
  return residue(static_cast<long long>((static_cast<std::uint64_t>(reduce_mod(num_, p)) * inv_mod(dn, p)) % p), p);
}

void Scalar::coerce_pair(Scalar& o) {
  if (mod_ == o.mod_) return;
  if (mod_ == 0) *this = to_residue(o.mod_);
  else o = o.to_residue(mod_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mod_ != 0) {
    r.num_ = num_ == 0 ? 0 : mod_ - num_;
  } else if (big_) {
    r.big_ = std::make_shared<const mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar o = other;
  coerce_pair(o);
  if (mod_ != 0) {
    std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
    num_ = static_cast<std::int64_t>(s >= mod_ ? s - mod_ : s);
    return *this;
  }
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    } else {
      i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
      i128 d = static_cast<i128>(den_) * o.den_;
      i128 g = gcd128(n, d);
      if (g > 1) n /= g, d /= g;
      if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  *this = normalize_big(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar o = other;
  coerce_pair(o);
  if (mod_ != 0) {
    num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_)) % mod_);
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (!big_ && !o.big_) {
    i128 n = static_cast<i128>(num_) * o.num_;
    i128 d = static_cast<i128>(den_) * o.den_;
    if (d != 1) {
      i128 g = gcd128(n, d);
      if (g > 1) n /= g, d /= g;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  *this = normalize_big(to_mpq() * o.to_mpq());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (mod_ != 0) return residue(inv_mod(num_, mod_), mod_);
  if (big_) return normalize_big(1 / *big_);
  return fraction(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& other) {
  Scalar o = other;
  coerce_pair(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    Scalar x = a, y = b;
    x.coerce_pair(y);
    return x == y;
  }
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (mod_ != 0) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ring Ring::prime(std::uint32_t p) {
  if (!is_odd_prime(p)) throw StructuralError("modulus must be an odd prime, got " + std::to_string(p));
  return Ring{p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    std::uint32_t p = 0;
    auto body = text.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw StructuralError("unknown ring '" + std::string(text) + "' (expected Q or Z/p)");
}

Scalar Ring::make(long long v) const { return modulus ? Scalar::residue(v, modulus) : Scalar(v); }

Scalar Ring::parse_scalar(std::string_view text) const {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (d < 0) throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  if (q.get_den() != d) throw std::invalid_argument("scalar '" + std::string(text) + "' not in lowest terms");
  Scalar s = Scalar::from_mpq(q);
  if (modulus) {
    s = s * Scalar::residue(1, modulus);
  }
  return s;
}

std::string Ring::to_string() const { return modulus ? "Z/" + std::to_string(modulus) : "Q"; }

}  // namespace infsimp

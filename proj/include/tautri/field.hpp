// field.hpp
//
// Exact coefficient arithmetic: prime fields F_p (word-sized p) and
// arbitrary-precision rationals.  Algorithms are templated on a field
// context object that owns the modulus; elements themselves are plain
// values (uint64_t resp. mpq_class).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace tautri {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Field specification (runtime description, serializable as "fp:<p>" or "q")

struct FieldSpec {
  enum class Kind { Prime, Rationals };
  Kind kind = Kind::Prime;
  std::uint64_t p = 32003;

  static FieldSpec prime(std::uint64_t p) { return FieldSpec{Kind::Prime, p}; }
  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const {
    return kind == Kind::Prime ? "fp:" + std::to_string(p) : "q";
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  void validate() const {
    if (kind == Kind::Prime) {
      if (p >= (1ull << 31)) throw error("field: prime modulus must be < 2^31");
      if (!is_prime(p)) throw error("field: " + std::to_string(p) + " is not prime");
    }
  }

  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "rationals") return rationals();
    if (s.rfind("fp:", 0) == 0) {
      FieldSpec f = prime(std::stoull(s.substr(3)));
      f.validate();
      return f;
    }
    throw error("field: cannot parse spec '" + s + "' (expected fp:<p> or q)");
  }
};

// ---------------------------------------------------------------------------
// F_p with word arithmetic.  p < 2^31 so products fit in uint64_t.

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    FieldSpec::prime(p).validate();
  }

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

  Elem inv(Elem a) const {
    if (a == 0) throw error("field: division by zero");
    // Fermat: a^(p-2)
    Elem r = 1, base = a;
    std::uint64_t e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
  }
  // numerator/denominator pair reduced into the field
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) throw error("field: fraction with zero denominator");
    return div(from_int(num), from_int(den));
  }

  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Q via GMP.  mpq_class keeps values canonical after arithmetic.

class RationalField {
 public:
  using Elem = mpq_class;

  RationalField() = default;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw error("field: division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) throw error("field: fraction with zero denominator");
    Elem e(static_cast<long>(num), static_cast<long>(den));
    e.canonicalize();
    return e;
  }

  std::string str(const Elem& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace tautri

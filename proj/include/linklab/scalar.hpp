#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "linklab/errors.hpp"

namespace linklab {

// Coefficient field: the rationals when p == 0, otherwise F_p for prime
// p < 2^31 (so residue products fit in unsigned 64-bit arithmetic).
struct FieldSpec {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  std::uint32_t characteristic() const { return p; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime_u32(std::uint32_t n);

// One exact field element. Rationals live in lowest terms with positive
// denominator (the mpq invariant); residues are reduced into [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar integer(long v, FieldSpec f);
  static Scalar from_mpz(const mpz_class& v, FieldSpec f);
  static Scalar rational(mpq_class v);
  static Scalar residue(std::uint64_t v, std::uint32_t p);

  FieldSpec field() const { return {p_}; }
  bool is_zero() const;
  bool is_one() const;
  // Residues report sign 0 or +1; rationals the usual -1/0/+1.
  int sign() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  // Total order used only for canonical sorting of generator lists.
  int cmp(const Scalar& o) const;

  const mpq_class& rat() const;
  std::uint64_t res() const { return r_; }
  Scalar abs() const;
  std::string str() const;

 private:
  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;

  void check_same(const Scalar& o) const;
};

}  // namespace linklab

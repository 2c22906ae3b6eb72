#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fdeg {

/// Element of F_q encoded as the integer sum c_i p^i of its coefficient vector
/// over the modulus basis 1, x, ..., x^(e-1).
using FE = std::uint32_t;

/// The finite field F_{p^e} with q <= 2^16.
///
/// The modulus is the monic irreducible polynomial of degree e whose
/// coefficients, read from x^(e-1) down to the constant term as base-p
/// digits, form the smallest integer.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, constant term first, length e + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// A fixed primitive element.
  FE primitive() const { return exp_[1]; }

  FE add(FE a, FE b) const;
  FE neg(FE a) const;
  FE sub(FE a, FE b) const { return add(a, neg(b)); }
  FE mul(FE a, FE b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InputError on zero.
  FE inv(FE a) const;
  FE div(FE a, FE b) const { return mul(a, inv(b)); }
  FE pow(FE a, std::uint64_t k) const;
  /// a^(p^t); t may be any integer, taken modulo e.
  FE frobenius(FE a, long t) const;
  /// Image of the integer k under Z -> F_p.
  FE from_int(long k) const;
  bool is_square(FE a) const;
  /// Discrete log of a nonzero element with respect to primitive().
  std::uint32_t log(FE a) const { return log_[a]; }
  FE exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }

  std::vector<std::uint32_t> coefficients(FE a) const;
  /// Throws InputError when a coefficient is out of range or there are too many.
  FE from_coefficients(const std::vector<std::uint32_t>& c) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

 private:
  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FE> exp_;               // length 2(q-1) to skip a reduction
  std::vector<std::uint32_t> log_;
  std::vector<FE> add_table_;         // filled for q <= 256
};

using FieldPtr = std::shared_ptr<const Field>;

/// Checks p prime and p^e <= 2^16; throws InputError otherwise.
FieldPtr make_field(std::uint32_t p, std::uint32_t e);

/// x^(p^t).
inline FE frobenius(const Field& f, FE x, long t) { return f.frobenius(x, t); }

bool is_prime(std::uint64_t n);

}  // namespace fdeg

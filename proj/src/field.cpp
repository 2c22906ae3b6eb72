#include "fdeg/field.hpp"

#include <algorithm>

#include "fdeg/error.hpp"

namespace fdeg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<std::uint32_t>((r[i + j] + a[i] * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly digits(std::uint32_t x, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t lower = 0; lower < count; ++lower) {
      Poly g = digits(lower, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime");
  if (e == 0) throw InputError("field degree must be positive");
  for (std::uint32_t i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > 65536) throw InputError("field too large");
  }
  // Lower coefficients enumerated as base-p integers with c_{e-1} most significant.
  for (std::uint32_t lower = 0; lower < q_; ++lower) {
    Poly f = digits(lower, p, e);
    f.push_back(1);
    if (e == 1 || irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  auto slow_mul = [&](FE a, FE b) {
    return encode(poly_mul_mod(digits(a, p, e), digits(b, p, e), modulus_, p), p);
  };
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t n = q_ - 1;
    for (std::uint32_t r = 2; r * r <= n; ++r) {
      if (n % r == 0) prime_factors.push_back(r);
      while (n % r == 0) n /= r;
    }
    if (n > 1) prime_factors.push_back(n);
  }
  auto slow_pow = [&](FE a, std::uint32_t k) {
    FE r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  FE gen = 1;
  for (FE g = 1; g < q_; ++g) {
    bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                 [&](std::uint32_t r) { return slow_pow(g, (q_ - 1) / r) != 1; });
    if (primitive) {
      gen = g;
      break;
    }
  }
  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  FE x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (FE a = 0; a < q_; ++a) {
      for (FE b = 0; b < q_; ++b) {
        Poly da = digits(a, p, e), db = digits(b, p, e);
        for (std::uint32_t i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = encode(da, p);
      }
    }
  }
}

FE Field::add(FE a, FE b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  FE r = 0, radix = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * radix;
    a /= p_;
    b /= p_;
    radix *= p_;
  }
  return r;
}

FE Field::neg(FE a) const {
  if (p_ == 2) return a;
  FE r = 0, radix = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * radix;
    a /= p_;
    radix *= p_;
  }
  return r;
}

FE Field::inv(FE a) const {
  if (a == 0) throw InputError("division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FE Field::pow(FE a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1))];
}

FE Field::frobenius(FE a, long t) const {
  long r = ((t % static_cast<long>(e_)) + static_cast<long>(e_)) % static_cast<long>(e_);
  std::uint64_t k = 1;
  for (long i = 0; i < r; ++i) k *= p_;
  return pow(a, k);
}

FE Field::from_int(long k) const {
  long r = ((k % static_cast<long>(p_)) + static_cast<long>(p_)) % static_cast<long>(p_);
  return static_cast<FE>(r);
}

bool Field::is_square(FE a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

std::vector<std::uint32_t> Field::coefficients(FE a) const { return digits(a, p_, e_); }

FE Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > e_) throw InputError("too many field coefficients");
  for (auto x : c) {
    if (x >= p_) throw InputError("field coefficient out of range");
  }
  return encode(c, p_);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) { return std::make_shared<const Field>(p, e); }

}  // namespace fdeg

// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAYLEY_CYCLOTOMIC_HPP
#define CAYLEY_CYCLOTOMIC_HPP

// Exact arithmetic in Z[eta], eta a primitive m-th root of unity.
//
// Values are kept in the power basis 1, eta, ..., eta^(phi(m)-1), reduced
// modulo the m-th cyclotomic polynomial, so equality is coefficient equality.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/error.hpp"
#include "cayley/galois.hpp"

namespace cayley {

using Integer = boost::multiprecision::cpp_int;

/// Coefficients of Phi_m, constant term first.
inline std::vector<Integer> cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw InputError("cyclotomic_polynomial: m must be positive");
  // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d, for each d | m in turn.
  std::map<std::uint64_t, std::vector<Integer>> known;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::vector<Integer> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (const auto& [e, den] : known) {
      if (d % e != 0) continue;
      const std::size_t dd = den.size() - 1;
      std::vector<Integer> quot(num.size() - dd, 0);
      for (std::size_t i = num.size(); i-- > dd;) {
        const Integer c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      }
      for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw ConsistencyError("cyclotomic division left a remainder");
      num = std::move(quot);
    }
    known.emplace(d, std::move(num));
  }
  return known.at(m);
}

class CycContext {
 public:
  explicit CycContext(std::uint64_t m) : m_(m), phi_(cyclotomic_polynomial(m)) {
    phi_small_.reserve(phi_.size());
    for (const auto& c : phi_) phi_small_.push_back(static_cast<long long>(c));
  }

  static std::shared_ptr<const CycContext> make(std::uint64_t m) {
    return std::make_shared<const CycContext>(m);
  }

  std::uint64_t m() const { return m_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<Integer>& phi() const { return phi_; }

  /// Reduces a polynomial in eta (any length) modulo Phi_m in place and
  /// truncates to phi(m) coefficients.
  void reduce_in_place(std::vector<Integer>& v) const {
    const std::size_t deg = degree();
    for (std::size_t i = v.size(); i-- > deg;) {
      if (v[i] == 0) continue;
      const Integer c = v[i];
      for (std::size_t j = 0; j < deg; ++j)
        if (phi_small_[j] != 0) v[i - deg + j] -= c * phi_small_[j];
      v[i] = 0;
    }
    v.resize(deg, 0);
  }

 private:
  std::uint64_t m_;
  std::vector<Integer> phi_;
  std::vector<long long> phi_small_;
};

using CycContextPtr = std::shared_ptr<const CycContext>;

class CycInt {
 public:
  CycInt() : CycInt(CycContext::make(1)) {}
  explicit CycInt(CycContextPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), 0) {}

  static CycInt from_integer(CycContextPtr ctx, const Integer& c) {
    CycInt r(std::move(ctx));
    r.coeffs_[0] = c;
    return r;
  }
  /// eta^j for any integer j.
  static CycInt root_power(CycContextPtr ctx, long long j) {
    const auto m = static_cast<long long>(ctx->m());
    std::vector<Integer> raw(static_cast<std::size_t>(m), 0);
    raw[static_cast<std::size_t>(((j % m) + m) % m)] = 1;
    return reduce(raw, std::move(ctx));
  }
  /// Sum of raw[j] * eta^j over j < raw.size(); the raw form is exponent-indexed.
  static CycInt reduce(std::vector<Integer> raw, CycContextPtr ctx) {
    ctx->reduce_in_place(raw);
    CycInt r(std::move(ctx));
    r.coeffs_ = std::move(raw);
    return r;
  }

  const CycContextPtr& context() const { return ctx_; }
  std::uint64_t conductor() const { return ctx_->m(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  std::optional<Integer> as_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return std::nullopt;
    return coeffs_[0];
  }

  CycInt& operator+=(const CycInt& o) {
    check_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    check_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  CycInt& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(CycInt a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend CycInt operator*(CycInt a, const Integer& s) { return a *= s; }
  friend CycInt operator*(const Integer& s, CycInt a) { return a *= s; }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const std::size_t d = a.coeffs_.size();
    std::vector<Integer> raw(d == 0 ? 0 : 2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return reduce(std::move(raw), a.ctx_);
  }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
  }

  /// Coefficient-wise exact division; nullopt if some coefficient is not divisible.
  std::optional<CycInt> divide_exact(const Integer& d) const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) {
      if (c % d != 0) return std::nullopt;
      c /= d;
    }
    return r;
  }

  /// The image of this value under eta -> eta^(m / conductor) in conductor m.
  CycInt embed(const CycContextPtr& target) const {
    const std::uint64_t m = target->m();
    if (m % conductor() != 0)
      throw InputError("cannot embed conductor " + std::to_string(conductor()) + " into " +
                       std::to_string(m));
    const std::uint64_t scale = m / conductor();
    std::vector<Integer> raw(m, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[(j * scale) % m] += coeffs_[j];
    return reduce(std::move(raw), target);
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double m = static_cast<double>(conductor());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / m;
      z += static_cast<double>(coeffs_[j]) * std::polar(1.0, angle);
    }
    return z;
  }

  /// Polynomial in eta, highest power first, e.g. "2*eta^3 - eta + 1".
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
      const Integer& c = coeffs_[j];
      if (c == 0) continue;
      const Integer mag = abs(c);
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (j == 0) {
        out << mag;
        continue;
      }
      if (mag != 1) out << mag << '*';
      out << "eta";
      if (j > 1) out << '^' << j;
    }
    return first ? "0" : out.str();
  }

 private:
  void check_same(const CycInt& o) const {
    if (conductor() != o.conductor())
      throw InputError("cyclotomic context mismatch: " + std::to_string(conductor()) + " vs " +
                       std::to_string(o.conductor()));
  }

  CycContextPtr ctx_;
  std::vector<Integer> coeffs_;
};

/// sigma_t: eta -> eta^t. Requires gcd(t, m) = 1.
inline CycInt galois_apply(long long t, const CycInt& a) {
  const std::uint64_t m = a.conductor();
  const std::uint64_t r = unit_residue(t, m);
  if (std::gcd(r, m) != 1)
    throw InputError(std::to_string(t) + " is not a unit modulo " + std::to_string(m));
  std::vector<Integer> raw(m, 0);
  for (std::size_t j = 0; j < a.coeffs().size(); ++j)
    if (a.coeffs()[j] != 0) raw[(j * r) % m] += a.coeffs()[j];
  return CycInt::reduce(std::move(raw), a.context());
}

/// Complex conjugate, sigma_{-1}.
inline CycInt conj(const CycInt& a) { return galois_apply(-1, a); }

inline bool is_fixed_by(const CycInt& a, const GaloisSubgroup& gamma) {
  if (gamma.m != a.conductor())
    throw InputError("conductor mismatch between value and Galois subgroup");
  for (auto t : gamma.generators)
    if (!(galois_apply(static_cast<long long>(t), a) == a)) return false;
  return true;
}

}  // namespace cayley

#endif  // CAYLEY_CYCLOTOMIC_HPP

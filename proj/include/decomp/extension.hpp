// Copyright 2026 The decomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECOMP_EXTENSION_HPP
#define DECOMP_EXTENSION_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "decomp/field.hpp"
#include "decomp/poly.hpp"
#include "decomp/rootfind.hpp"

namespace decomp {

/// Quotient ring Base[T]/(m) with m monic. Over a prime field m is checked
/// to be irreducible, so this is a field; over Q irreducibility is a
/// precondition and a failed inversion reports NotInvertible.
template <Field Base>
class ExtensionField {
 public:
  using BaseElement = typename Base::Element;

  struct Context {
    Base base;
    Polynomial<Base> modulus;
    std::size_t degree;
  };

  class Element {
   public:
    Element() = default;
    const std::vector<BaseElement>& coeffs() const { return c_; }

    friend Element operator+(const Element& a, const Element& b) {
      check(a, b);
      Element r = a;
      for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
      return r;
    }
    friend Element operator-(const Element& a, const Element& b) {
      check(a, b);
      Element r = a;
      for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
      return r;
    }
    friend Element operator-(const Element& a) {
      Element r = a;
      for (auto& x : r.c_) x = -x;
      return r;
    }
    friend Element operator*(const Element& a, const Element& b) {
      check(a, b);
      const Context& ctx = *a.ctx_;
      const std::size_t n = ctx.degree;
      std::vector<BaseElement> prod(2 * n - 1, ctx.base.zero());
      for (std::size_t i = 0; i < n; ++i) {
        if (ctx.base.is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
      }
      const auto& m = ctx.modulus.coeffs();
      for (std::size_t i = prod.size(); i-- > n;) {
        if (ctx.base.is_zero(prod[i])) continue;
        const BaseElement t = prod[i];
        for (std::size_t j = 0; j <= n; ++j) prod[i - n + j] = prod[i - n + j] - t * m[j];
      }
      prod.resize(n);
      return Element(a.ctx_, std::move(prod));
    }
    friend bool operator==(const Element& a, const Element& b) {
      check(a, b);
      return a.c_ == b.c_;
    }

   private:
    friend class ExtensionField;
    Element(std::shared_ptr<const Context> ctx, std::vector<BaseElement> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}

    static void check(const Element& a, const Element& b) {
      if (a.ctx_ != b.ctx_ && !(a.ctx_->modulus == b.ctx_->modulus)) {
        throw Error(ErrorCode::DescriptorMismatch, "elements of different extensions");
      }
    }

    std::shared_ptr<const Context> ctx_;
    std::vector<BaseElement> c_;  // exactly `degree` coefficients
  };

  ExtensionField(Base base, const Polynomial<Base>& modulus) {
    if (modulus.degree() < 1 || !modulus.is_monic()) {
      throw Error(ErrorCode::InvalidModulus, "extension modulus must be monic of degree >= 1");
    }
    if constexpr (std::is_same_v<Base, PrimeField>) {
      if (!is_irreducible(modulus)) throw Error(ErrorCode::InvalidModulus, "modulus is reducible over the base field");
    }
    ctx_ = std::make_shared<const Context>(Context{base, modulus, static_cast<std::size_t>(modulus.degree())});
  }

  const Base& base() const { return ctx_->base; }
  const Polynomial<Base>& modulus() const { return ctx_->modulus; }
  std::size_t degree() const { return ctx_->degree; }

  Element from_coeffs(std::vector<BaseElement> c) const {
    Polynomial<Base> p(base(), std::move(c));
    auto r = p % modulus();
    std::vector<BaseElement> v(r.coeffs());
    v.resize(degree(), base().zero());
    return Element(ctx_, std::move(v));
  }
  Element embed(const BaseElement& a) const { return from_coeffs({a}); }
  /// Residue class of the adjoined variable.
  Element generator() const { return from_coeffs({base().zero(), base().one()}); }
  Polynomial<Base> to_poly(const Element& a) const { return Polynomial<Base>(base(), a.coeffs()); }

  Element zero() const { return embed(base().zero()); }
  Element one() const { return embed(base().one()); }
  Element from_int(std::int64_t k) const { return embed(base().from_int(k)); }
  Element constant(const Element& a) const { return a; }
  bool is_zero(const Element& a) const {
    for (const auto& x : a.coeffs()) {
      if (!base().is_zero(x)) return false;
    }
    return true;
  }
  bool is_unit(const Element& a) const { return !is_zero(a); }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    try {
      return from_coeffs(mod_inverse(to_poly(a), modulus()).coeffs());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotCoprime) throw;
      throw Error(ErrorCode::NotInvertible, "element shares a factor with the extension modulus");
    }
  }

  std::uint64_t characteristic() const { return base().characteristic(); }
  std::optional<std::uint64_t> size() const {
    auto q = base().size();
    if (!q) return std::nullopt;
    unsigned __int128 s = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      s *= *q;
      if (s > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(s);
  }

  /// `ext:<p>:<c0,...,1>` over a prime field, `ext:q:<...>` over Q.
  std::string name() const {
    std::string s = "ext:";
    if constexpr (std::is_same_v<Base, PrimeField>) {
      s += std::to_string(base().modulus());
    } else {
      s += "q";
    }
    s += ":";
    const auto& m = modulus().coeffs();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ",";
      s += base().format(m[i]);
    }
    return s;
  }

  std::string format(const Element& a) const {
    std::string s = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (i) s += ",";
      s += base().format(a.coeffs()[i]);
    }
    return s + "]";
  }

  /// Parses a polynomial in `y`, e.g. "y+1", "3*y^2-y", "0".
  Element parse(std::string_view text) const {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty extension element");
    std::vector<BaseElement> c(1, base().zero());
    std::size_t i = 0;
    while (i < s.size()) {
      bool neg = false;
      if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      if (term.empty()) throw Error(ErrorCode::ParseError, "malformed extension element '" + std::string(text) + "'");
      BaseElement coef = base().one();
      std::size_t power = 0;
      auto ypos = term.find('y');
      if (ypos == std::string::npos) {
        coef = base().parse(term);
      } else {
        std::string head = term.substr(0, ypos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) coef = base().parse(head);
        std::string tail = term.substr(ypos + 1);
        if (tail.empty()) {
          power = 1;
        } else if (tail[0] == '^' && tail.size() > 1) {
          power = std::stoul(tail.substr(1));
        } else {
          throw Error(ErrorCode::ParseError, "malformed term '" + term + "'");
        }
      }
      if (neg) coef = -coef;
      if (c.size() <= power) c.resize(power + 1, base().zero());
      c[power] = c[power] + coef;
      i = j;
    }
    return from_coeffs(std::move(c));
  }

  /// Uniform over the first `bound` elements in base-p digit order.
  Element sample(std::uint64_t bound, Rng& rng) const {
    if constexpr (std::is_same_v<Base, PrimeField>) {
      if (bound == 0) throw Error(ErrorCode::InvalidInstance, "sample bound must be positive");
      if (bound > *size()) throw Error(ErrorCode::SampleBoundTooLarge, "sample bound exceeds field size");
      std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
      std::uint64_t u = dist(rng);
      std::vector<BaseElement> c;
      for (std::size_t i = 0; i < degree(); ++i) {
        c.push_back(base().from_uint(u % base().modulus()));
        u /= base().modulus();
      }
      return from_coeffs(std::move(c));
    } else {
      return embed(base().sample(bound, rng));
    }
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.ctx_ == b.ctx_ || (a.base() == b.base() && a.modulus() == b.modulus());
  }

 private:
  std::shared_ptr<const Context> ctx_;
};

}  // namespace decomp

#endif  // DECOMP_EXTENSION_HPP

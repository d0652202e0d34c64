#pragma once

#include <map>
#include <utility>

#include "rrp/rational.hpp"

namespace rrp {

// Finite linear combination of basis elements with exact rational
// coefficients. Zero coefficients are never stored, so equality of
// combinations is equality of the underlying maps.
template <class B>
class LinearComb {
 public:
  using map_type = std::map<B, Rational>;

  LinearComb() = default;
  explicit LinearComb(const B& b) { terms_[b] = Rational(1); }
  LinearComb(const B& b, const Rational& c) { add(b, c); }

  void add(const B& b, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearComb& other, const Rational& scale = Rational(1)) {
    for (const auto& [b, c] : other.terms_) add(b, c * scale);
  }

  LinearComb operator+(const LinearComb& o) const {
    LinearComb r = *this;
    r.add(o);
    return r;
  }
  LinearComb operator-(const LinearComb& o) const {
    LinearComb r = *this;
    r.add(o, Rational(-1));
    return r;
  }
  LinearComb operator*(const Rational& c) const {
    LinearComb r;
    for (const auto& [b, coef] : terms_) r.add(b, coef * c);
    return r;
  }

  // Linear extension of a basis map b -> LinearComb<C>.
  template <class F>
  auto mapped(F&& f) const {
    using C = typename std::decay_t<decltype(f(std::declval<B>()))>;
    C out;
    for (const auto& [b, c] : terms_) out.add(f(b), c);
    return out;
  }

  // Bilinear extension of a product b1 x b2 -> LinearComb<C>.
  template <class B2, class F>
  auto bilinear(const LinearComb<B2>& rhs, F&& f) const {
    using C = typename std::decay_t<decltype(f(std::declval<B>(), std::declval<B2>()))>;
    C out;
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : rhs)
        out.add(f(a, b), ca * cb);
    return out;
  }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const LinearComb& a, const LinearComb& b) {
    return a.terms_ == b.terms_;
  }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  map_type terms_;
};

}  // namespace rrp

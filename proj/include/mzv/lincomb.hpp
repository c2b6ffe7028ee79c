#pragma once

#include "mzv/exactnum.hpp"

#include <map>

namespace mzv {

// Finitely supported Q-linear combination over an ordered key type.
// Zero coefficients are never stored.
template <class K>
class LinComb {
 public:
  using map_type = std::map<K, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(const K& key, const Rational& c) { add(key, c); }

  void add(const K& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = Rational(1)) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, Rational(-1)); return *this; }

  LinComb scaled(const Rational& s) const {
    LinComb out;
    if (s != 0)
      for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
  }

  Rational coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  bool operator==(const LinComb&) const = default;

 private:
  map_type terms_;
};

}  // namespace mzv

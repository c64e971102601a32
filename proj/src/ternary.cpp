#include "cantor/ternary.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

namespace cantor {

TernaryExpansion::TernaryExpansion(std::vector<int> preperiod,
                                   std::vector<int> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  const auto validate = [](const std::vector<int>& digits) {
    for (int d : digits)
      if (d < 0 || d > 2)
        throw std::invalid_argument("ternary digit out of range 0..2");
  };
  validate(pre_);
  validate(per_);

  // An all-zero period is just a terminating expansion.
  if (std::all_of(per_.begin(), per_.end(), [](int d) { return d == 0; }))
    per_.clear();
  if (per_.empty()) {
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
    return;
  }

  // Reduce the period to its primitive cycle.
  for (std::size_t len = 1; len <= per_.size() / 2; ++len) {
    if (per_.size() % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < per_.size() && repeats; ++i)
      repeats = per_[i] == per_[i - len];
    if (repeats) {
      per_.resize(len);
      break;
    }
  }

  // Pull cycle digits out of the preperiod: 0.2(20) and 0.(02) prefixed by
  // nothing are the same stream, so trailing preperiod digits that mirror
  // the period's tail belong to the cycle.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
    pre_.pop_back();
  }

  // Fix the phase: rotate the period to its lexicographically least form,
  // with the skipped digits appended to the preperiod.
  std::size_t best = 0;
  for (std::size_t j = 1; j < per_.size(); ++j) {
    for (std::size_t i = 0; i < per_.size(); ++i) {
      const int a = per_[(j + i) % per_.size()];
      const int b = per_[(best + i) % per_.size()];
      if (a != b) {
        if (a < b) best = j;
        break;
      }
    }
  }
  pre_.insert(pre_.end(), per_.begin(),
              per_.begin() + static_cast<std::ptrdiff_t>(best));
  std::rotate(per_.begin(), per_.begin() + static_cast<std::ptrdiff_t>(best),
              per_.end());
}

TernaryExpansion rational_to_ternary(const Rational& x) {
  if (x < 0 || x > 1)
    throw std::domain_error("rational_to_ternary: argument outside [0, 1]");
  if (x == 1) return TernaryExpansion({}, {2});

  mpz_class rem = x.get_num();
  const mpz_class den = x.get_den();
  std::vector<int> digits;
  std::map<mpz_class, std::size_t> seen;  // remainder -> digit index
  while (rem != 0) {
    const auto [it, fresh] = seen.emplace(rem, digits.size());
    if (!fresh) {
      // Remainder repeats: digits from its first occurrence form the cycle.
      std::vector<int> pre(digits.begin(),
                           digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<int> per(digits.begin() + static_cast<std::ptrdiff_t>(it->second),
                           digits.end());
      return TernaryExpansion(std::move(pre), std::move(per));
    }
    rem *= 3;
    const mpz_class digit = rem / den;
    rem -= digit * den;
    digits.push_back(static_cast<int>(digit.get_si()));
  }
  return TernaryExpansion(std::move(digits), {});
}

Rational ternary_to_rational(const TernaryExpansion& e) {
  const auto& pre = e.preperiod();
  const auto& per = e.period();
  mpz_class pre_val(0);
  for (int d : pre) pre_val = pre_val * 3 + d;
  mpz_class pre_den;
  mpz_ui_pow_ui(pre_den.get_mpz_t(), 3, pre.size());
  Rational value(pre_val, pre_den);
  value.canonicalize();
  if (!per.empty()) {
    mpz_class per_val(0);
    for (int d : per) per_val = per_val * 3 + d;
    mpz_class per_den;
    mpz_ui_pow_ui(per_den.get_mpz_t(), 3, per.size());
    per_den -= 1;  // 0.(q_1...q_l) == q / (3^l - 1)
    Rational tail(per_val, per_den * pre_den);
    tail.canonicalize();
    value += tail;
  }
  return value;
}

}  // namespace cantor

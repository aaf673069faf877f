#include "bwkl/qpoly.hpp"

#include <sstream>

namespace bwkl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("qpoly: coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("qpoly: coefficient overflow in multiplication");
  return r;
}

namespace {

int checked_exp_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("qpoly: exponent overflow");
  return r;
}

void accumulate(QPoly::Terms &t, int e, std::int64_t c) {
  auto [it, inserted] = t.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      t.erase(it);
  } else if (c == 0) {
    t.erase(it);
  }
}

} // namespace

QPoly::QPoly(std::int64_t c) {
  if (c != 0)
    terms_[0] = c;
}

QPoly::QPoly(const Terms &terms) {
  for (auto [e, c] : terms)
    if (c != 0)
      terms_[e] = c;
}

QPoly QPoly::monomial(int exponent, std::int64_t coeff) {
  QPoly p;
  if (coeff != 0)
    p.terms_[exponent] = coeff;
  return p;
}

std::int64_t QPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int QPoly::min_exponent() const {
  if (terms_.empty())
    throw std::domain_error("qpoly: zero polynomial has no exponents");
  return terms_.begin()->first;
}

int QPoly::max_exponent() const {
  if (terms_.empty())
    throw std::domain_error("qpoly: zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

QPoly QPoly::operator+(const QPoly &o) const {
  QPoly r = *this;
  for (auto [e, c] : o.terms_)
    accumulate(r.terms_, e, c);
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r;
  for (auto [e, c] : terms_)
    r.terms_[e] = checked_mul(c, -1);
  return r;
}

QPoly QPoly::operator-(const QPoly &o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly &o) const {
  QPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_)
      accumulate(r.terms_, checked_exp_add(e1, e2), checked_mul(c1, c2));
  return r;
}

std::int64_t QPoly::eval(std::int64_t x) const {
  if (x == 0) {
    if (!terms_.empty() && terms_.begin()->first < 0)
      throw std::domain_error("qpoly: negative exponent evaluated at 0");
    return coeff(0);
  }
  if (x != 1 && x != -1 && !terms_.empty() && terms_.begin()->first < 0)
    throw std::domain_error("qpoly: negative exponent has no integer value at this point");
  std::int64_t total = 0;
  for (auto [e, c] : terms_) {
    std::int64_t power = 1;
    if (x == -1) {
      power = (e % 2 == 0) ? 1 : -1;
    } else if (x != 1) {
      for (int k = 0; k < e; ++k)
        power = checked_mul(power, x);
    }
    total = checked_add(total, checked_mul(c, power));
  }
  return total;
}

QPoly QPoly::substitute_negated() const {
  QPoly r;
  for (auto [e, c] : terms_)
    r.terms_[e] = (e % 2 == 0) ? c : checked_mul(c, -1);
  return r;
}

std::vector<std::int64_t> QPoly::coefficients() const {
  if (terms_.empty())
    return {};
  if (terms_.begin()->first < 0)
    throw std::domain_error("qpoly: negative exponent in coefficient list");
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_exponent()) + 1, 0);
  for (auto [e, c] : terms_)
    out[static_cast<std::size_t>(e)] = c;
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag;
    os << 'q';
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

} // namespace bwkl

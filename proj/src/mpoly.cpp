#include "filiform/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "filiform/errors.hpp"

namespace filiform {

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
        ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
        ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      // strip leading zeros
      na.remove_prefix(std::min(na.find_first_not_of('0'), na.size()));
      nb.remove_prefix(std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size())
        return na.size() < nb.size();
      if (na != nb)
        return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j])
        return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0)
    terms_[Exponents{}] = c;
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_[Exponents{1}] = 1;
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty())
    return true;
  return terms_.size() == 1 && vars_.empty();
}

Rational MPoly::constant_value() const {
  if (terms_.empty())
    return 0;
  if (!is_constant())
    throw Error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) {
    int d = static_cast<int>(std::accumulate(exps.begin(), exps.end(), 0u));
    deg = std::max(deg, d);
  }
  return deg;
}

void MPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  // drop variables that no longer occur
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, c] : terms_)
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (exps[k] > 0)
        used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; }))
    return;
  std::vector<std::string> kept;
  std::vector<std::size_t> keep_idx;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) {
      kept.push_back(vars_[k]);
      keep_idx.push_back(k);
    }
  std::map<Exponents, Rational> remapped;
  for (const auto& [exps, c] : terms_) {
    Exponents e(keep_idx.size());
    for (std::size_t k = 0; k < keep_idx.size(); ++k)
      e[k] = exps[keep_idx[k]];
    remapped[e] = c;
  }
  vars_ = std::move(kept);
  terms_ = std::move(remapped);
}

std::vector<std::string> MPoly::merge_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), natural_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MPoly MPoly::remapped(const std::vector<std::string>& new_vars) const {
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[k], natural_less);
    pos[k] = static_cast<std::size_t>(it - new_vars.begin());
  }
  MPoly out;
  out.vars_ = new_vars;
  for (const auto& [exps, c] : terms_) {
    Exponents e(new_vars.size(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k)
      e[pos[k]] = exps[k];
    out.terms_[e] = c;
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [exps, c] : out.terms_)
    c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  *this = *this + other;
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  *this = *this + (-other);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly MPoly::operator+(const MPoly& other) const {
  auto vars = merge_vars(vars_, other.vars_);
  MPoly a = remapped(vars);
  MPoly b = other.remapped(vars);
  for (const auto& [exps, c] : b.terms_)
    a.terms_[exps] += c;
  a.prune();
  return a;
}

MPoly MPoly::operator-(const MPoly& other) const { return *this + (-other); }

MPoly MPoly::operator*(const MPoly& other) const {
  auto vars = merge_vars(vars_, other.vars_);
  MPoly a = remapped(vars);
  MPoly b = other.remapped(vars);
  MPoly out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t k = 0; k < vars.size(); ++k)
        e[k] = ea[k] + eb[k];
      out.terms_[e] += ca * cb;
    }
  out.prune();
  return out;
}

MPoly operator*(const Rational& c, const MPoly& p) {
  MPoly out = p;
  for (auto& [exps, coeff] : out.terms_)
    coeff *= c;
  out.prune();
  return out;
}

MPoly MPoly::substitute(const std::map<std::string, Rational>& assignment) const {
  MPoly out;
  for (const auto& [exps, c] : terms_) {
    MPoly term{c};
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (exps[k] == 0)
        continue;
      auto it = assignment.find(vars_[k]);
      if (it != assignment.end()) {
        term = rat_pow(it->second, exps[k]) * term;
      } else {
        MPoly v = variable(vars_[k]);
        for (unsigned e = 0; e < exps[k]; ++e)
          term *= v;
      }
    }
    out += term;
  }
  return out;
}

Rational MPoly::eval(const std::map<std::string, Rational>& assignment) const {
  for (const auto& v : vars_)
    if (!assignment.count(v))
      throw Error("eval: unassigned variable " + v);
  return substitute(assignment).constant_value();
}

MPoly MPoly::primitive() const {
  if (terms_.empty())
    return *this;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [exps, c] : terms_) {
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  Rational scale(den_lcm, num_gcd < 0 ? -num_gcd : num_gcd);
  // sign from the leading (largest exponent vector) term
  if (terms_.rbegin()->second < 0)
    scale = -scale;
  return scale * *this;
}

std::string MPoly::str() const {
  if (terms_.empty())
    return "0";
  // print highest terms first: graded, then reverse-lex on exponents
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
    unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
    if (dx != dy)
      return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : ordered) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0)
        coeff = -coeff;
    }
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (exps[k] == 0)
        continue;
      std::string f = vars_[k];
      if (exps[k] > 1)
        f += "^" + std::to_string(exps[k]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << rat_str(coeff);
    } else {
      if (coeff != 1)
        os << rat_str(coeff) << "*";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k)
          os << "*";
        os << factors[k];
      }
    }
  }
  return os.str();
}

} // namespace filiform

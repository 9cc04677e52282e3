#include "braidbench/cyc.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace braidbench {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of integer polynomials, asserting exact division. Ascending degree.
std::vector<mpz_class> exact_div(const std::vector<mpz_class>& num,
                                 const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  if (den.empty() || den.back() == 0)
    throw cyc_error("exact_div: bad divisor");
  if (rem.size() < den.size()) throw cyc_error("exact_div: degree underflow");
  std::vector<mpz_class> quot(rem.size() - den.size() + 1, mpz_class(0));
  for (size_t i = quot.size(); i-- > 0;) {
    mpz_class lead = rem[i + den.size() - 1];
    if (lead % den.back() != 0) throw cyc_error("exact_div: not divisible");
    mpz_class c = lead / den.back();
    quot[i] = c;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw cyc_error("exact_div: nonzero remainder");
  return quot;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(unsigned n) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n == 0) throw cyc_error("cyclotomic_poly: n must be positive");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<mpz_class>&(unsigned)> get =
      [&](unsigned m) -> const std::vector<mpz_class>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<mpz_class> poly(m + 1, mpz_class(0));
    poly[0] = -1;
    poly[m] = 1;  // x^m - 1
    for (unsigned d = 1; d < m; ++d) {
      if (m % d == 0) poly = exact_div(poly, get(d));
    }
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return get(n);
}

Cyc::Cyc(unsigned n, std::vector<Rat> coeffs) : n_(n) {
  if (n == 0) throw cyc_error("Cyc: order must be positive");
  const unsigned phi = euler_phi(n);
  const auto& mod = cyclotomic_poly(n);
  // Reduce mod Phi_n: eliminate top coefficients (Phi_n is monic).
  while (coeffs.size() > phi) {
    Rat top = coeffs.back();
    coeffs.pop_back();
    if (top == 0) continue;
    size_t base = coeffs.size() - phi;
    for (unsigned j = 0; j < phi; ++j)
      coeffs[base + j] -= top * Rat(mod[j]);
  }
  coeffs.resize(phi, Rat(0));
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = std::move(coeffs);
}

Cyc Cyc::zero(unsigned n) { return Cyc(n, {}); }

Cyc Cyc::one(unsigned n) { return Cyc(n, {Rat(1)}); }

Cyc Cyc::from_rat(unsigned n, const Rat& r) { return Cyc(n, {r}); }

Cyc Cyc::root(unsigned n) {
  std::vector<Rat> c(2, Rat(0));
  c[1] = 1;
  return Cyc(n, std::move(c));
}

Cyc Cyc::root_pow(unsigned n, long k) {
  long r = k % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Rat> c(static_cast<size_t>(r) + 1, Rat(0));
  c[static_cast<size_t>(r)] = 1;
  return Cyc(n, std::move(c));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void Cyc::check_same_order(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_)
    throw cyc_error("Cyc: mixed orders " + std::to_string(a.n_) + " and " +
                    std::to_string(b.n_));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  Cyc::check_same_order(a, b);
  Cyc r = a;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  Cyc::check_same_order(a, b);
  Cyc r = a;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  Cyc::check_same_order(a, b);
  const size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
  std::vector<Rat> prod(na + nb - 1, Rat(0));
  for (size_t i = 0; i < na; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < nb; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyc(a.n_, std::move(prod));
}

Cyc Cyc::inv() const {
  if (is_zero()) throw cyc_error("Cyc: division by zero");
  if (is_rational()) {
    std::vector<Rat> c(1, Rat(1) / coeffs_[0]);
    return Cyc(n_, std::move(c));
  }
  // Extended Euclid in Q[x] for gcd(this, Phi_n) = 1.
  using Poly = std::vector<Rat>;
  auto deg = [](const Poly& p) -> long {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  auto trim = [&](Poly& p) { p.resize(static_cast<size_t>(deg(p) + 1)); };

  const auto& mod = cyclotomic_poly(n_);
  Poly r0(mod.size());
  for (size_t i = 0; i < mod.size(); ++i) r0[i] = Rat(mod[i]);
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0(1, Rat(0)), s1(1, Rat(1));  // coefficients of `this`

  while (deg(r1) > 0) {
    // r0 = q * r1 + r
    Poly q(static_cast<size_t>(deg(r0) - deg(r1) + 1), Rat(0));
    Poly rem = r0;
    Rat lead = r1[static_cast<size_t>(deg(r1))];
    for (long i = deg(rem) - deg(r1); i >= 0; --i) {
      Rat c = rem[static_cast<size_t>(i + deg(r1))] / lead;
      if (c == 0) continue;
      q[static_cast<size_t>(i)] = c;
      for (long j = 0; j <= deg(r1); ++j)
        rem[static_cast<size_t>(i + j)] -= c * r1[static_cast<size_t>(j)];
    }
    trim(rem);
    if (rem.empty()) rem.assign(1, Rat(0));
    // s update: s0 - q * s1
    Poly s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  long d = deg(r1);
  if (d != 0)
    throw cyc_error("Cyc: element not invertible mod Phi_n");
  Rat scale = Rat(1) / r1[0];
  for (auto& c : s1) c *= scale;
  return Cyc(n_, std::move(s1));
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

Cyc Cyc::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Cyc result = Cyc::one(n_);
  Cyc base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Cyc::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << abs_c.get_str();
    } else {
      if (abs_c != 1) out << abs_c.get_str() << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

Cyc Cyc::parse(unsigned n, const std::string& text) {
  std::vector<Rat> coeffs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size()) throw cyc_error("Cyc::parse: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw cyc_error("Cyc::parse: expected '+' or '-' in '" + text + "'");
    }
    first = false;
    Rat coef(1);
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) ||
              text[j] == '/'))
        ++j;
      coef = Rat(text.substr(i, j - i));
      coef.canonicalize();
      i = j;
      have_coef = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    size_t power = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t j = i;
        while (j < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
        if (j == i) throw cyc_error("Cyc::parse: bad exponent in '" + text + "'");
        power = std::stoul(text.substr(i, j - i));
        i = j;
      }
    } else if (!have_coef) {
      throw cyc_error("Cyc::parse: expected term in '" + text + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rat(0));
    coeffs[power] += sign * coef;
  }
  return Cyc(n, std::move(coeffs));
}

Cyc qbinom(unsigned m, unsigned k, const Cyc& q) {
  if (k > m) return Cyc::zero(q.order());
  // Row-by-row Pascal table, C(i,j) = C(i-1,j-1) + q^j C(i-1,j).
  std::vector<Cyc> row(1, Cyc::one(q.order()));
  for (unsigned i = 1; i <= m; ++i) {
    std::vector<Cyc> next(std::min(i, k) + 1, Cyc::one(q.order()));
    Cyc qj = Cyc::one(q.order());
    for (unsigned j = 1; j <= std::min(i, k); ++j) {
      qj = qj * q;
      Cyc upper = (j < row.size()) ? row[j] : Cyc::zero(q.order());
      next[j] = row[j - 1] + qj * upper;
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace braidbench

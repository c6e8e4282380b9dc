#include "qdot/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qdot/errors.hpp"

namespace qdot::polynomial {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(BigInt c) {
  return IntegerPolynomial({std::move(c)});
}

IntegerPolynomial IntegerPolynomial::variable() {
  return IntegerPolynomial({BigInt(0), BigInt(1)});
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<size_t>(k)];
}

IntegerPolynomial IntegerPolynomial::shifted_up() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator+(
    const IntegerPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(
    const IntegerPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator*(
    const IntegerPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t k = 0; k < o.coeffs_.size(); ++k) {
      out[i + k] += coeffs_[i] * o.coeffs_[k];
    }
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> out(coeffs_);
  for (auto& c : out) c *= s;
  return IntegerPolynomial(std::move(out));
}

double IntegerPolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * t + coeffs_[i].convert_to<double>();
  }
  return acc;
}

BigRational IntegerPolynomial::evaluate(const BigRational& t) const {
  BigRational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * t + BigRational(coeffs_[i]);
  }
  return acc;
}

bool IntegerPolynomial::has_definite_parity() const {
  // Only powers of the same parity as the degree may be present.
  const int d = degree();
  if (d < 0) return true;
  for (int k = 0; k <= d; ++k) {
    if ((k % 2) != (d % 2) && coeff(k) != 0) return false;
  }
  return true;
}

std::string IntegerPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    BigInt mag = abs(c);
    if (mag != 1 || k == 0) out << mag.str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

namespace {

// Polynomial over exact rationals; only what the Sturm machinery needs.
struct RationalPoly {
  std::vector<BigRational> c;  // c[k] multiplies t^k; trimmed

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  RationalPoly derivative() const {
    RationalPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = c[k] * BigInt(k);
    return d;
  }
};

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const BigRational factor = a.c.back() / b.c.back();
    const int shift = a.degree() - b.degree();
    for (int k = 0; k <= b.degree(); ++k) {
      a.c[static_cast<size_t>(k + shift)] -= factor * b.c[static_cast<size_t>(k)];
    }
    a.c.pop_back();  // leading term cancels exactly
    a.trim();
  }
  return a;
}

int sign_of(const BigRational& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

struct SturmChain {
  std::vector<RationalPoly> seq;

  static SturmChain build(const IntegerPolynomial& p) {
    SturmChain chain;
    RationalPoly s0;
    s0.c.reserve(p.coeffs().size());
    for (const auto& ci : p.coeffs()) s0.c.emplace_back(ci);
    s0.trim();
    if (s0.is_zero()) throw InvalidInput("Sturm chain of the zero polynomial");
    chain.seq.push_back(s0);
    RationalPoly s1 = s0.derivative();
    while (!s1.is_zero()) {
      chain.seq.push_back(s1);
      RationalPoly next = remainder(chain.seq[chain.seq.size() - 2], s1);
      for (auto& ck : next.c) ck = -ck;
      s1 = std::move(next);
    }
    return chain;
  }

  // Sign variations at x, zeros skipped. With that convention
  // variations(a) - variations(b) counts distinct roots in the half-open
  // interval (a, b].
  int variations_at(const BigRational& x) const {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      const int sg = sign_of(s.evaluate(x));
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  int variations_at_infinity(int direction) const {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      if (s.is_zero()) continue;
      int sg = sign_of(s.c.back());
      if (direction < 0 && s.degree() % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  /// The chain ends in a nonzero constant iff the polynomial is square-free.
  bool last_is_constant() const {
    return !seq.empty() && seq.back().degree() == 0;
  }
};

// Smallest integer upper bound on the magnitude of all roots (Cauchy bound).
BigInt root_magnitude_bound(const IntegerPolynomial& p) {
  const BigInt lead = abs(p.coeff(p.degree()));
  BigRational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigRational ratio(abs(p.coeff(k)), lead);
    if (ratio > best) best = ratio;
  }
  const BigRational bound = best + 1;
  BigInt num = numerator(bound), den = denominator(bound);
  return (num + den - 1) / den;  // ceiling; bound is positive
}

}  // namespace

int count_real_roots(const IntegerPolynomial& p) {
  const SturmChain chain = SturmChain::build(p);
  return chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1);
}

bool is_square_free(const IntegerPolynomial& p) {
  if (p.degree() <= 0) return true;
  return SturmChain::build(p).last_is_constant();
}

std::vector<double> positive_roots(const IntegerPolynomial& p,
                                   double rel_tol) {
  if (p.is_zero()) throw InvalidInput("positive_roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const SturmChain chain = SturmChain::build(p);
  if (!chain.last_is_constant()) {
    throw InvalidInput("positive_roots requires a square-free polynomial");
  }

  struct Interval {
    BigRational lo, hi;  // dyadic endpoints
    int v_lo, v_hi;      // cached sign-variation counts
  };

  const BigRational zero = 0;
  const BigRational bound{root_magnitude_bound(p)};
  std::vector<Interval> stack{{zero, bound, chain.variations_at(zero),
                               chain.variations_at(bound)}};
  std::vector<double> roots;

  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int n_roots = iv.v_lo - iv.v_hi;
    if (n_roots == 0) continue;
    if (n_roots > 1) {
      const BigRational mid = (iv.lo + iv.hi) / 2;
      const int v_mid = chain.variations_at(mid);
      stack.push_back({iv.lo, mid, iv.v_lo, v_mid});
      stack.push_back({mid, iv.hi, v_mid, iv.v_hi});
      continue;
    }

    // Exactly one root in (lo, hi]: shrink by bisection on the Sturm count.
    // This needs no sign bookkeeping and is immune to a root landing exactly
    // on a dyadic endpoint.
    const BigRational tol(rel_tol);
    int guard = 0;
    while (iv.hi - iv.lo > tol * iv.hi && ++guard < 2048) {
      const BigRational mid = (iv.lo + iv.hi) / 2;
      const int v_mid = chain.variations_at(mid);
      if (iv.v_lo - v_mid == 1) {
        iv.hi = mid;
        iv.v_hi = v_mid;
      } else {
        iv.lo = mid;
        iv.v_lo = v_mid;
      }
    }
    roots.push_back(((iv.lo + iv.hi) / 2).convert_to<double>());
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qdot::polynomial

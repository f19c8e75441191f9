#include "maeda/arith/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace maeda {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_minus(const Integer& root) { return IntPolynomial(std::vector<Integer>{-root, 1}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (auto cmp = a.degree() <=> b.degree(); cmp != 0) return cmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial r = constant(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string IntPolynomial::coefficient_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? " " : "") << coeffs_[i].get_str();
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: division by zero polynomial");
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const auto& bc = b.coefficients();
  const Integer& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int e = a.degree() - db + 1;
  while (dr >= db) {
    Integer lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(dr - db + i)] -= lr * bc[static_cast<std::size_t>(i)];
    --e;
    while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  if (e > 0) {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= s;
  }
  return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    const Integer& top = r[static_cast<std::size_t>(i + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), c.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(i)] = c;
  }
  for (const auto& c : r)
    if (sgn(c) != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.content() * b.primitive_part();
  if (b.is_zero()) return a.content() * a.primitive_part();
  Integer c;
  Integer ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return c * x.primitive_part();
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace maeda

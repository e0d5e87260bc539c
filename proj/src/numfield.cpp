#include "nlfield/numfield.hpp"

#include "nlfield/arith.hpp"
#include "nlfield/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace nlf {

namespace {

using Poly = std::vector<Rational>;  // low to high

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(p[k] * static_cast<long>(k)));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty() && chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::string poly_string(const std::vector<Integer>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Integer mag = abs(c[k]);
    os << (sgn(c[k]) < 0 ? "-" : (first ? "" : "+"));
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

bool is_squarefree(long D) {
  for (const auto& pe : factorize(static_cast<u64>(D))) {
    if (pe.e > 1) return false;
  }
  return true;
}

// Integer polynomial with no integer root and, for quartics, no split into
// two monic integer quadratics. Sufficient for irreducibility in degree <= 4
// by Gauss's lemma.
bool irreducible_small_degree(const std::vector<Integer>& c) {
  const std::size_t d = c.size() - 1;
  if (d == 1) return true;
  if (sgn(c[0]) == 0) return false;
  const Integer abs_c0 = abs(c[0]);
  if (!abs_c0.fits_slong_p()) fail(Errc::InvalidField, "constant term too large for irreducibility test");
  const u64 c0 = abs_c0.get_ui();
  auto eval_int = [&](const Integer& x) {
    Integer acc(0);
    for (std::size_t k = d + 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  for (u64 r : divisors(c0)) {
    if (sgn(eval_int(Integer(static_cast<unsigned long>(r)))) == 0) return false;
    if (sgn(eval_int(-Integer(static_cast<unsigned long>(r)))) == 0) return false;
  }
  if (d <= 3) return true;
  // x^4 + c3 x^3 + c2 x^2 + c1 x + c0 = (x^2 + a x + b)(x^2 + e x + f).
  for (u64 ub : divisors(c0)) {
    for (int s : {1, -1}) {
      Integer b = Integer(static_cast<unsigned long>(ub)) * s;
      Integer f = c[0] / b;
      Integer prod = c[2] - b - f;  // a*e
      Integer disc = c[3] * c[3] - 4 * prod;
      if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
      Integer root = sqrt(disc);
      for (int t : {1, -1}) {
        Integer twice_a = c[3] + t * root;
        if (!mpz_even_p(twice_a.get_mpz_t())) continue;
        Integer a = twice_a / 2;
        Integer e = c[3] - a;
        if (a * f + b * e == c[1]) return false;
      }
    }
  }
  return true;
}

// Best rational approximation with bounded denominator.
std::optional<Rational> rationalize(double x, long max_den, double tol) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(v);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol * std::max(1.0, std::abs(x))) {
      return Rational(h1, k1);
    }
    double frac = v - a;
    if (frac < 1e-300) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

// -- SignVector -------------------------------------------------------------

bool SignVector::is_diagonal() const {
  return std::adjacent_find(signs.begin(), signs.end(), std::not_equal_to<>()) == signs.end();
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ",";
    out += signs[i] > 0 ? "+" : "-";
  }
  return out + ")";
}

SignVector operator*(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "sign vectors of different length");
  SignVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.signs[i] = static_cast<std::int8_t>(a.signs[i] * b.signs[i]);
  return out;
}

// -- NumberField ------------------------------------------------------------

FieldPtr NumberField::rationals() {
  static const FieldPtr q = from_min_poly({Integer(0), Integer(1)});
  return q;
}

FieldPtr NumberField::real_quadratic(long D) {
  if (D <= 1 || !is_squarefree(D)) fail(Errc::InvalidField, "D must be squarefree and > 1");
  auto field = from_min_poly({Integer(-D), Integer(0), Integer(1)});
  return field;
}

FieldPtr NumberField::from_min_poly(const std::vector<Integer>& coeffs) {
  if (coeffs.size() < 2) fail(Errc::InvalidField, "minimal polynomial must have degree >= 1");
  if (coeffs.back() != 1) fail(Errc::InvalidField, "minimal polynomial must be monic");
  return FieldPtr(new NumberField(coeffs));
}

NumberField::NumberField(std::vector<Integer> coeffs) : min_poly_(std::move(coeffs)) {
  const std::size_t d = degree();
  for (const auto& c : min_poly_) min_poly_q_.emplace_back(c);
  if (d <= 4 && !irreducible_small_degree(min_poly_)) {
    fail(Errc::InvalidField, "minimal polynomial " + poly_string(min_poly_) + " is reducible");
  }
  isolate_roots();

  // Newton's identities: p_k + c_{d-1} p_{k-1} + ... + k c_{d-k} = 0.
  power_sums_.assign(d, Rational(0));
  power_sums_[0] = static_cast<long>(d);
  for (std::size_t k = 1; k < d; ++k) {
    Rational s = min_poly_q_[d - k] * static_cast<long>(k);
    for (std::size_t i = 1; i < k; ++i) s += min_poly_q_[d - i] * power_sums_[k - i];
    power_sums_[k] = -s;
  }

  if (d == 1) {
    name_ = "Q";
  } else if (d == 2 && sgn(min_poly_[1]) == 0) {
    name_ = "Q(sqrt(" + Integer(-min_poly_[0]).get_str() + "))";
  } else {
    name_ = "Q[x]/(" + poly_string(min_poly_) + ")";
  }
  find_automorphisms();
}

int NumberField::poly_sign_at(const Rational& x) const { return sgn(eval(min_poly_q_, x)); }

void NumberField::isolate_roots() {
  const std::size_t d = degree();
  if (d == 1) {
    Rational r = -min_poly_q_[0];
    roots_.push_back({r, r});
    embeddings_.push_back(r.get_d());
    return;
  }
  auto chain = sturm_chain(min_poly_q_);
  Rational bound(1);
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, Rational(abs(min_poly_q_[k]) + 1));
  Rational lo = -bound, hi = bound;
  const int total = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (total != static_cast<int>(d)) {
    fail(Errc::InvalidField, "minimal polynomial " + poly_string(min_poly_) + " is not totally real");
  }
  std::vector<RootInterval> work{{lo, hi}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    int count = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      roots_.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(roots_.begin(), roots_.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  for (auto& iv : roots_) {
    iv = refine(iv, 64);
    embeddings_.push_back(Rational((iv.lo + iv.hi) / 2).get_d());
  }
  for (std::size_t i = 0; i < d; ++i) {
    double r = embeddings_[i], val = 0.0, scale = 0.0;
    for (std::size_t k = d + 1; k-- > 0;) {
      val = val * r + min_poly_q_[k].get_d();
      scale = scale * std::abs(r) + std::abs(min_poly_q_[k].get_d());
    }
    if (std::abs(val) > 1e-12 * scale) fail(Errc::InvalidField, "embedding approximation failed to converge");
    if (i > 0 && !(embeddings_[i - 1] < embeddings_[i])) fail(Errc::InvalidField, "embeddings not distinct");
  }
}

NumberField::RootInterval NumberField::refine(const RootInterval& iv, unsigned bits) const {
  RootInterval out = iv;
  if (out.lo == out.hi) return out;
  Rational width_cap(1);
  mpq_div_2exp(width_cap.get_mpq_t(), width_cap.get_mpq_t(), bits);
  Rational scale = std::max(Rational(1), Rational(abs(out.lo)));
  const int s_lo = poly_sign_at(out.lo);
  while (out.hi - out.lo > width_cap * scale) {
    Rational mid = (out.lo + out.hi) / 2;
    int s = poly_sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      out.lo = mid;
    } else {
      out.hi = mid;
    }
  }
  return out;
}

void NumberField::find_automorphisms() {
  const std::size_t d = degree();
  Coords gen(d, Rational(0));
  if (d == 1) {
    gen[0] = 1;
    automorphisms_.push_back(gen);
    embedding_perms_.push_back({0});
    return;
  }
  gen[1] = 1;

  auto is_root_in_field = [&](const Coords& x) {
    Coords acc(d, Rational(0));
    for (std::size_t k = d + 1; k-- > 0;) {
      acc = multiply(acc, x);
      acc[0] += min_poly_q_[k];
    }
    return std::all_of(acc.begin(), acc.end(), [](const Rational& c) { return sgn(c) == 0; });
  };

  std::vector<std::optional<Coords>> by_target(d);
  if (d == 2) {
    by_target[0] = gen;
    Coords conj(2);
    conj[0] = -min_poly_q_[1];
    conj[1] = -1;
    by_target[1] = conj;
  } else {
    // Interpolate sigma(g) = P(g) through each candidate root permutation,
    // then certify P(g) exactly as a root of the minimal polynomial.
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (by_target[perm[0]]) continue;
      std::vector<std::vector<double>> m(d, std::vector<double>(d + 1));
      for (std::size_t i = 0; i < d; ++i) {
        double pw = 1.0;
        for (std::size_t k = 0; k < d; ++k, pw *= embeddings_[i]) m[i][k] = pw;
        m[i][d] = embeddings_[perm[i]];
      }
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < d; ++r) {
          if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        }
        std::swap(m[c], m[piv]);
        for (std::size_t r = 0; r < d; ++r) {
          if (r == c) continue;
          double f = m[r][c] / m[c][c];
          for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
      }
      Coords candidate(d);
      bool ok = true;
      for (std::size_t k = 0; k < d && ok; ++k) {
        auto q = rationalize(m[k][d] / m[k][k], 1000000, 1e-9);
        if (!q) {
          ok = false;
        } else {
          candidate[k] = *q;
        }
      }
      if (ok && is_root_in_field(candidate)) by_target[perm[0]] = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  if (!std::all_of(by_target.begin(), by_target.end(), [](const auto& c) { return c.has_value(); })) {
    // Not Galois: only the identity is available.
    automorphisms_.push_back(gen);
    embedding_perms_.push_back([&] {
      std::vector<std::size_t> id(d);
      std::iota(id.begin(), id.end(), 0);
      return id;
    }());
    return;
  }
  for (auto& img : by_target) automorphisms_.push_back(*img);
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<std::size_t> pi(d);
    auto vals = embed(automorphisms_[s]);
    for (std::size_t i = 0; i < d; ++i) {
      auto nearest = std::min_element(embeddings_.begin(), embeddings_.end(), [&](double a, double b) {
        return std::abs(a - vals[i]) < std::abs(b - vals[i]);
      });
      pi[i] = static_cast<std::size_t>(nearest - embeddings_.begin());
    }
    embedding_perms_.push_back(std::move(pi));
  }
}

const NumberField::Coords& NumberField::automorphism_image(std::size_t sigma) const {
  if (sigma >= automorphisms_.size()) fail(Errc::NotGalois, "automorphism index out of range for " + name_);
  return automorphisms_[sigma];
}

const std::vector<std::size_t>& NumberField::embedding_permutation(std::size_t sigma) const {
  if (sigma >= embedding_perms_.size()) fail(Errc::NotGalois, "automorphism index out of range for " + name_);
  return embedding_perms_[sigma];
}

NumberField::Coords NumberField::multiply(const Coords& a, const Coords& b) const {
  const std::size_t d = degree();
  Poly prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  // Reduce with g^d = -(c0 + c1 g + ... + c_{d-1} g^{d-1}).
  for (std::size_t k = prod.size(); k-- > d;) {
    if (sgn(prod[k]) == 0) continue;
    Rational top = prod[k];
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= top * min_poly_q_[j];
    prod[k] = 0;
  }
  prod.resize(d);
  return prod;
}

NumberField::Coords NumberField::inverse(const Coords& a) const {
  const std::size_t d = degree();
  if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return sgn(c) == 0; })) {
    fail(Errc::DivisionByZero, "inverse of zero in " + name_);
  }
  // Solve (multiplication-by-a matrix) * y = e_0.
  std::vector<Coords> m(d, Coords(d + 1, Rational(0)));
  Coords basis(d, Rational(0));
  basis[0] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    Coords col = multiply(a, basis);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    std::rotate(basis.rbegin(), basis.rbegin() + 1, basis.rend());
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && sgn(m[piv][c]) == 0) ++piv;
    if (piv == d) fail(Errc::DivisionByZero, "singular multiplication matrix");
    std::swap(m[c], m[piv]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Coords y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d] / m[i][i];
  return y;
}

Rational NumberField::trace(const Coords& a) const {
  Rational t(0);
  for (std::size_t k = 0; k < degree(); ++k) t += a[k] * power_sums_[k];
  return t;
}

std::vector<double> NumberField::embed(const Coords& a) const {
  std::vector<double> out;
  out.reserve(degree());
  for (double r : embeddings_) {
    double acc = 0.0;
    for (std::size_t k = degree(); k-- > 0;) acc = acc * r + a[k].get_d();
    out.push_back(acc);
  }
  return out;
}

int NumberField::embedding_sign(std::size_t i, const Coords& a, unsigned cap_bits) const {
  const std::size_t d = degree();
  if (d == 1) {
    int s = sgn(a[0]);
    if (s == 0) fail(Errc::UnresolvableSign, "sign of zero");
    return s;
  }
  if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return sgn(c) == 0; })) {
    fail(Errc::UnresolvableSign, "sign of zero");
  }
  auto range_at = [&](const RootInterval& iv) {
    Rational lo(0), hi(0);
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(a[k]) == 0) continue;
      Rational plo, phi;
      if (k == 0) {
        plo = phi = 1;
      } else {
        Rational l(1), h(1);
        for (std::size_t j = 0; j < k; ++j) {
          l *= iv.lo;
          h *= iv.hi;
        }
        if (sgn(iv.lo) >= 0) {
          plo = l, phi = h;
        } else if (sgn(iv.hi) <= 0) {
          plo = std::min(l, h), phi = std::max(l, h);
        } else if (k % 2 == 0) {
          plo = 0, phi = std::max(l, h);
        } else {
          plo = l, phi = h;
        }
      }
      if (sgn(a[k]) > 0) {
        lo += a[k] * plo;
        hi += a[k] * phi;
      } else {
        lo += a[k] * phi;
        hi += a[k] * plo;
      }
    }
    return std::pair{lo, hi};
  };
  RootInterval iv = roots_[i];
  for (unsigned bits = 64;; bits = std::min(cap_bits, bits * 2)) {
    iv = refine(iv, bits);
    auto [lo, hi] = range_at(iv);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    if (bits >= cap_bits) break;
  }
  fail(Errc::UnresolvableSign, "embedding value not separated from 0 at " + std::to_string(cap_bits) + " bits");
}

NumberField::Coords NumberField::apply_automorphism(std::size_t sigma, const Coords& a) const {
  const Coords& img = automorphism_image(sigma);
  const std::size_t d = degree();
  Coords acc(d, Rational(0));
  for (std::size_t k = d; k-- > 0;) {
    acc = multiply(acc, img);
    acc[0] += a[k];
  }
  return acc;
}

// -- NFElem -----------------------------------------------------------------

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) fail(Errc::InvalidField, "null field");
  if (coords_.size() != field_->degree()) {
    fail(Errc::DimensionMismatch, "element needs " + std::to_string(field_->degree()) + " coordinates");
  }
  for (auto& c : coords_) c.canonicalize();
}

NFElem NFElem::from_rational(FieldPtr field, const Rational& q) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = q;
  return NFElem(std::move(field), std::move(c));
}

NFElem NFElem::generator(FieldPtr field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (c.size() == 1) {
    c[0] = -Rational(field->min_poly()[0]);
  } else {
    c[1] = 1;
  }
  return NFElem(std::move(field), std::move(c));
}

bool NFElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::optional<Rational> NFElem::as_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (sgn(coords_[k]) != 0) return std::nullopt;
  }
  return coords_[0];
}

bool NFElem::is_rational_integer() const {
  auto q = as_rational();
  return q && q->get_den() == 1;
}

void NFElem::check_same_field(const NFElem& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) {
    fail(Errc::FieldMismatch, field_->name() + " vs " + o.field_->name());
  }
}

NFElem NFElem::inverse() const { return NFElem(field_, field_->inverse(coords_)); }

NFElem& NFElem::operator+=(const NFElem& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  check_same_field(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  check_same_field(o);
  coords_ = field_->multiply(coords_, o.coords_);
  return *this;
}

NFElem NFElem::operator-() const {
  NFElem out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const NFElem& a, const NFElem& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = cmp(a.coords_[k], b.coords_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

std::string NFElem::to_string() const {
  if (coords_.size() == 1) return coords_[0].get_str();
  const bool quadratic = coords_.size() == 2 && sgn(field_->min_poly()[1]) == 0;
  const std::string gen = quadratic ? "sqrt(" + Integer(-field_->min_poly()[0]).get_str() + ")" : "g";
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (sgn(coords_[k]) == 0) continue;
    std::string term;
    if (k == 0) {
      term = coords_[k].get_str();
    } else {
      std::string power = k == 1 ? gen : gen + "^" + std::to_string(k);
      Rational mag = abs(coords_[k]);
      term = (sgn(coords_[k]) < 0 ? "-" : "") + (mag == 1 ? power : mag.get_str() + "*" + power);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Rational trace(const NFElem& x) { return x.field()->trace(x.coords()); }

SignVector sign_of(const NFElem& x, unsigned cap_bits) {
  if (x.is_zero()) fail(Errc::UnresolvableSign, "sign of zero is undefined");
  SignVector out;
  for (std::size_t i = 0; i < x.field()->degree(); ++i) {
    out.signs.push_back(static_cast<std::int8_t>(x.field()->embedding_sign(i, x.coords(), cap_bits)));
  }
  return out;
}

NFElem galois_apply(std::size_t sigma, const NFElem& x) {
  const auto& field = x.field();
  if (sigma != 0 && !field->is_galois()) fail(Errc::NotGalois, field->name() + " is not Galois over Q");
  return NFElem(field, field->apply_automorphism(sigma, x.coords()));
}

std::vector<double> embed(const NFElem& x) { return x.field()->embed(x.coords()); }

}  // namespace nlf

std::size_t std::hash<nlf::NFElem>::operator()(const nlf::NFElem& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& c : x.coords()) {
    for (const mpz_srcptr z : {c.get_num_mpz_t(), c.get_den_mpz_t()}) {
      mix(static_cast<std::size_t>(z->_mp_size));
      if (z->_mp_size != 0) mix(static_cast<std::size_t>(mpz_getlimbn(z, 0)));
    }
  }
  return h;
}

#include "cospectra/exact.hpp"

#include <cmath>
#include <limits>

namespace cospectra {

namespace {

void check_pair(const IntMatrix& m, Vertex u, Vertex v, const char* op) {
  const auto n = static_cast<Vertex>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
  if (u >= n || v >= n) throw std::out_of_range(std::string(op) + ": vertex out of range");
}

}  // namespace

BigInt bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        BigInt value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(value);
      }
    }
    previous = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = static_cast<std::size_t>(m.rows());

  // Samples y_x = det(xI - m) at x = 0..n.
  std::vector<BigInt> diffs(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix shifted = -m;
    for (Eigen::Index i = 0; i < m.rows(); ++i) shifted(i, i) += static_cast<unsigned long>(x);
    diffs[x] = bareiss_determinant(std::move(shifted));
  }
  // In-place forward differences: diffs[k] becomes Delta^k y_0.
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t x = n; x >= k; --x) diffs[x] -= diffs[x - 1];
  }
  // p(t) = sum_k Delta^k y_0 * t(t-1)...(t-k+1) / k!
  RationalPolynomial result;
  RationalPolynomial falling = RationalPolynomial::constant(1);
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      falling = falling * RationalPolynomial::linear_root(BigRational(static_cast<unsigned long>(k - 1)));
      factorial *= static_cast<unsigned long>(k);
    }
    BigRational weight(diffs[k], factorial);
    weight.canonicalize();
    result = result + weight * falling;
  }
  std::vector<BigInt> coeffs;
  for (auto c : result.coefficients()) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("char_poly: interpolation produced a non-integer coefficient");
    coeffs.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

SequenceCheck power_diagonal_check(const IntMatrix& m, Vertex u, Vertex v) {
  check_pair(m, u, v, "power_diagonal_equal");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  const auto iu = static_cast<Eigen::Index>(u);
  const auto iv = static_cast<Eigen::Index>(v);
  // Column u of m^k and column v of m^k; the diagonal entries are read off.
  IntVector col_u = basis_vector<BigInt>(n, u);
  IntVector col_v = basis_vector<BigInt>(n, v);
  for (std::size_t k = 0; k < n; ++k) {
    if (col_u(iu) != col_v(iv)) return {false, k};
    IntVector next_u = m * col_u;
    IntVector next_v = m * col_v;
    col_u.swap(next_u);
    col_v.swap(next_v);
  }
  return {};
}

bool power_diagonal_equal(const IntMatrix& m, Vertex u, Vertex v) { return power_diagonal_check(m, u, v).holds; }

SequenceCheck krylov_check(const IntMatrix& m, Vertex u, Vertex v) {
  check_pair(m, u, v, "krylov_orthogonal");
  if (u == v) throw std::invalid_argument("krylov_orthogonal: vertices must be distinct");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  const IntVector sum = basis_vector<BigInt>(n, u) + basis_vector<BigInt>(n, v);
  IntVector diff = basis_vector<BigInt>(n, u) - basis_vector<BigInt>(n, v);
  for (std::size_t k = 0; k + 2 <= 2 * n; ++k) {
    if (sum.dot(diff) != 0) return {false, k};
    IntVector next = m * diff;
    diff.swap(next);
  }
  return {};
}

bool krylov_orthogonal(const IntMatrix& m, Vertex u, Vertex v) { return krylov_check(m, u, v).holds; }

IntPolynomial MultiplicityStructure::expand() const {
  IntPolynomial out = IntPolynomial::constant(unit);
  for (const auto& f : factors) out = out * pow(f.factor, f.multiplicity);
  return out;
}

double root_distance_estimate(const IntPolynomial& f, double x) {
  const RationalPolynomial fr = to_rational(f);
  const BigRational at = to_rational(x);
  const BigRational value = fr.evaluate(at);
  if (value == 0) return 0.0;
  const BigRational slope = fr.derivative().evaluate(at);
  if (slope == 0) return std::numeric_limits<double>::infinity();
  const BigRational ratio = value / slope;
  return std::abs(ratio.get_d());
}

std::optional<std::size_t> MultiplicityStructure::locate(double x, double tol) const {
  std::optional<std::size_t> best;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].factor.degree() < 1) continue;
    const double d = root_distance_estimate(factors[i].factor, x);
    if (d < best_distance) {
      best_distance = d;
      best = i;
    }
  }
  if (best && best_distance <= tol * std::max(1.0, std::abs(x))) return best;
  return std::nullopt;
}

unsigned MultiplicityStructure::multiplicity_near(double x, double tol) const {
  const auto index = locate(x, tol);
  return index ? factors[*index].multiplicity : 0U;
}

std::size_t MultiplicityStructure::distinct_roots() const {
  std::size_t total = 0;
  for (const auto& f : factors) total += static_cast<std::size_t>(std::max(0L, f.factor.degree()));
  return total;
}

MultiplicityStructure multiplicity_structure(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity_structure: zero polynomial");
  MultiplicityStructure out;
  const RationalPolynomial f = to_rational(p);
  {
    // unit = p / prod(primitive factors); equal to +-content(p).
    const IntPolynomial primitive = primitive_part(f);
    out.unit = p.leading() / primitive.leading();
  }
  if (p.degree() == 0) return out;

  const RationalPolynomial df = f.derivative();
  const RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = exact_divide(f, a0);
  RationalPolynomial c = exact_divide(df, a0);
  RationalPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const RationalPolynomial a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({primitive_part(a), i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace cospectra

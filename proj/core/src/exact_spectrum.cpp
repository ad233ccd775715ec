#include "ratpot/exact_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratpot/errors.hpp"
#include "ratpot/recurrence.hpp"

namespace ratpot {

namespace {

constexpr double kTailTolerance = 1e-10;
constexpr double kNodeRealness = 1e-9;
constexpr double kNodeZero = 1e-12;
constexpr double kNodeDistinct = 1e-8;

}  // namespace

double EvenPolynomial::spatial_factor(double x) const noexcept {
  return (s == Parity::odd ? x : 1.0) * in_x2(x * x);
}

Polynomial EvenPolynomial::expanded() const {
  const int sd = index_of(s);
  std::vector<double> c(2 * in_x2.degree() + sd + 1, 0.0);
  for (int j = 0; j <= in_x2.degree(); ++j) c[2 * j + sd] = in_x2[j];
  return Polynomial(std::move(c));
}

ExactState make_state(int n, int i, Parity s, double g, double lambda) {
  if (i < 1 || i > n + 1) throw InvalidParameter("root index i must lie in 1..n+1");
  const auto c = series_coefficients(n, s, g, lambda, n + 3);

  ExactState st;
  st.n = n;
  st.i = i;
  st.s = s;
  st.g = g;
  st.lambda = lambda;
  st.energy = termination_energy(n, s, g, lambda);
  st.poly = EvenPolynomial{Polynomial(std::vector<double>(c.begin(), c.begin() + n + 1)), s};

  double largest = 0.0;
  for (int j = 0; j <= n; ++j) largest = std::max(largest, std::abs(c[j]));
  st.tail = std::max(std::abs(c[n + 1]), std::abs(c[n + 2])) / largest;

  st.nu = count_nodes(st.poly);
  return st;
}

std::vector<ExactState> exact_states(int n, Parity s, double g) {
  const auto roots = quantization_roots(n, s, g);
  std::vector<ExactState> states;
  states.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    ExactState st = make_state(n, i, s, g, roots[k]);
    const int expected_nu = 2 * (i - 1) + index_of(s);
    if (st.nu != expected_nu) {
      std::ostringstream os;
      os << "node law violated for n=" << n << ", i=" << i << ", s=" << index_of(s) << ", g=" << g
         << ": counted " << st.nu << " nodes, expected " << expected_nu;
      throw InvariantViolation(os.str());
    }
    if (st.tail > kTailTolerance) {
      std::ostringstream os;
      os << "series does not terminate for n=" << n << ", i=" << i << ": relative tail " << st.tail;
      throw InvariantViolation(os.str());
    }
    states.push_back(std::move(st));
  }
  return states;
}

int count_nodes(const EvenPolynomial& p) {
  const Polynomial& q = p.in_x2;
  if (q.is_zero()) throw InvalidParameter("count_nodes: zero polynomial");
  const int sd = index_of(p.s);
  if (q.degree() == 0) return sd;
  if (std::abs(q[0]) <= kNodeZero * q.max_abs_coefficient())
    throw DegenerateNode("polynomial factor vanishes at x = 0");

  std::vector<double> positive;
  for (const auto& z : companion_roots(q)) {
    if (std::abs(z.imag()) > kNodeRealness * std::max(1.0, std::abs(z.real()))) continue;
    if (std::abs(z.real()) <= kNodeZero) throw DegenerateNode("root of q(t) at t = 0");
    if (z.real() > 0.0) positive.push_back(z.real());
  }
  std::sort(positive.begin(), positive.end());
  for (std::size_t k = 1; k < positive.size(); ++k) {
    if (positive[k] - positive[k - 1] <= kNodeDistinct * positive.back()) {
      std::ostringstream os;
      os << "repeated positive root t = " << positive[k] << " of the polynomial factor";
      throw DegenerateNode(os.str());
    }
  }
  return 2 * static_cast<int>(positive.size()) + sd;
}

Residual residual_check(const ExactState& st) {
  // psi = f e^{-x^2/2} with f = x^s p(x); then
  // (H - E) psi e^{x^2/2} = -f'' + 2x f' + (1 - E) f + lambda x^2 f / (1 + g x^2).
  const Polynomial f = st.poly.expanded();
  const Polynomial df = f.derivative();
  const Polynomial d2f = df.derivative();
  const Polynomial x{0.0, 1.0};
  const Polynomial x2{0.0, 0.0, 1.0};
  const Polynomial weight{1.0, 0.0, st.g};

  const Polynomial terms[] = {
      weight * (d2f * -1.0),
      weight * (2.0 * (x * df)),
      weight * (f * (1.0 - st.energy)),
      (x2 * f) * st.lambda,
  };

  int top = 0;
  for (const auto& t : terms) top = std::max(top, t.degree());
  Residual r;
  for (int k = 0; k <= top; ++k) {
    double sum = 0.0;
    double magnitude = 0.0;
    for (const auto& t : terms) {
      sum += t[k];
      magnitude += std::abs(t[k]);
    }
    r.max_abs = std::max(r.max_abs, std::abs(sum));
    r.scale = std::max(r.scale, magnitude);
  }
  return r;
}

double eval_wavefunction(const ExactState& st, double x) {
  return st.poly.spatial_factor(x) * std::exp(-0.5 * x * x);
}

}  // namespace ratpot

#include "ratpot/extended.hpp"

#include <algorithm>
#include <numeric>

#include "ratpot/errors.hpp"

namespace ratpot {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

ExtendedMatrix ExtendedMatrix::identity(int n) {
  ExtendedMatrix m(n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Extended ExtendedMatrix::norm_inf() const {
  Extended best = 0;
  for (int r = 0; r < n_; ++r) {
    Extended row = 0;
    for (int c = 0; c < n_; ++c) row += abs((*this)(r, c));
    best = std::max(best, row);
  }
  return best;
}

ExtendedVector multiply(const ExtendedMatrix& m, const ExtendedVector& v) {
  ExtendedVector out(m.size(), Extended(0));
  for (int r = 0; r < m.size(); ++r) {
    Extended acc = 0;
    for (int c = 0; c < m.size(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Extended dot(const ExtendedVector& a, const ExtendedVector& b) {
  Extended acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

int cholesky(const ExtendedMatrix& a, ExtendedMatrix& lower) {
  const int n = a.size();
  lower = ExtendedMatrix(n);
  for (int j = 0; j < n; ++j) {
    Extended diag = a(j, j);
    for (int k = 0; k < j; ++k) diag -= lower(j, k) * lower(j, k);
    if (!(diag > 0)) return j;
    lower(j, j) = sqrt(diag);
    for (int i = j + 1; i < n; ++i) {
      Extended acc = a(i, j);
      for (int k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k);
      lower(i, j) = acc / lower(j, j);
    }
  }
  return -1;
}

SymmetricEigen symmetric_eigen(ExtendedMatrix a) {
  const int n = a.size();
  ExtendedMatrix v = ExtendedMatrix::identity(n);
  const Extended eps = std::numeric_limits<Extended>::epsilon();
  constexpr int kMaxSweeps = 60;

  auto off_diagonal = [&] {
    Extended s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return s;
  };
  Extended total = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) total += a(p, q) * a(p, q);

  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Extended apq = a(p, q);
        if (abs(apq) <= eps * eps * sqrt(total)) continue;
        const Extended theta = (a(q, q) - a(p, p)) / (2 * apq);
        const Extended sign = theta >= 0 ? Extended(1) : Extended(-1);
        const Extended t = sign / (abs(theta) + sqrt(theta * theta + 1));
        const Extended c = 1 / sqrt(t * t + 1);
        const Extended s = t * c;
        for (int k = 0; k < n; ++k) {
          const Extended akp = a(k, p);
          const Extended akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Extended apk = a(p, k);
          const Extended aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const Extended vkp = v(k, p);
          const Extended vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    converged = off_diagonal() <= eps * eps * total;
  }
  if (!converged) throw SolverFailure("Jacobi eigensolver did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int l, int r) { return a(l, l) < a(r, r); });

  SymmetricEigen out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int idx : order) {
    out.values.push_back(a(idx, idx));
    ExtendedVector col(n);
    for (int k = 0; k < n; ++k) col[k] = v(k, idx);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace ratpot

#include "toric/code.hpp"

#include <stdexcept>
#include <string>

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

// Logs of all point coordinates; every coordinate is a unit.
std::vector<std::vector<std::uint32_t>> point_logs(const ToricSet& x) {
  const Field& f = *x.field;
  std::vector<std::vector<std::uint32_t>> logs(x.points.size());
  for (std::size_t j = 0; j < x.points.size(); ++j) {
    logs[j].resize(x.s);
    for (int i = 0; i < x.s; ++i) logs[j][i] = f.log_raw(x.points[j][i]);
  }
  return logs;
}

std::vector<std::uint16_t> monomial_row(const Field& f, const Exponents& a,
                                        const std::vector<std::vector<std::uint32_t>>& logs) {
  std::vector<std::uint16_t> row(logs.size());
  const int qm1 = f.q() - 1;
  for (std::size_t j = 0; j < logs.size(); ++j) {
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (long long)a[i] * logs[j][i];
    row[j] = f.exp_raw((std::uint32_t)(acc % qm1));
  }
  return row;
}

void check_matrix_cap(int s, int d, long long points, long long cap) {
  long long rows = monomial_count(s, d);
  if (rows > cap / std::max<long long>(points, 1))
    throw MatrixTooLarge("evaluation matrix " + std::to_string(rows) + " x " +
                         std::to_string(points) + " exceeds the matrix cap");
}

}  // namespace

std::vector<std::vector<std::uint16_t>> evaluation_matrix(const ToricSet& x, int d,
                                                          long long matrix_cap) {
  if (d < 0) throw InputError("degree must be nonnegative");
  check_matrix_cap(x.s, d, x.size(), matrix_cap);
  const auto logs = point_logs(x);
  std::vector<std::vector<std::uint16_t>> rows;
  for (const auto& a : monomial_basis(x.s, d))
    rows.push_back(monomial_row(*x.field, a, logs));
  return rows;
}

long long hilbert_function(const ToricSet& x, int d, long long matrix_cap) {
  if (d < 0) throw InputError("degree must be nonnegative");
  check_matrix_cap(x.s, d, x.size(), matrix_cap);
  const Field& f = *x.field;
  const auto logs = point_logs(x);
  RowBasis basis(f, x.points.size());
  for (const auto& a : monomial_basis(x.s, d)) {
    basis.insert(monomial_row(f, a, logs));
    if ((long long)basis.rank() == x.size()) break;  // cannot grow further
  }
  return (long long)basis.rank();
}

HilbertProfile hilbert_profile(const ToricSet& x, std::optional<int> max_d,
                               long long matrix_cap) {
  HilbertProfile profile;
  profile.degree = x.size();
  long long prev = 0;
  for (int d = 0;; ++d) {
    if (max_d && d > *max_d) return profile;  // truncated: no regularity
    long long h;
    try {
      h = hilbert_function(x, d, matrix_cap);
    } catch (const MatrixTooLarge& e) {
      throw MatrixTooLarge(e.what(), profile.values);
    }
    if (d > 0 && h < prev)
      throw std::logic_error("Hilbert function decreased; rank computation is broken");
    profile.values.push_back(h);
    prev = h;
    if (h == x.size()) {
      profile.regularity = d;
      return profile;
    }
    if (d >= x.size() - 1)
      throw std::logic_error("Hilbert function failed to stabilize by |X|-1");
  }
}

CodeParams code_params(const ToricSet& x, int d, bool want_min_distance,
                       const Caps& caps) {
  CodeParams out;
  out.d = d;
  out.length = x.size();
  const Field& f = *x.field;
  const auto logs = point_logs(x);
  check_matrix_cap(x.s, d, x.size(), caps.matrix_cap);
  RowBasis basis(f, x.points.size());
  for (const auto& a : monomial_basis(x.s, d)) {
    basis.insert(monomial_row(f, a, logs));
    if ((long long)basis.rank() == x.size()) break;
  }
  out.dimension = (long long)basis.rank();
  if (!want_min_distance) return out;
  if (out.dimension == out.length) {
    out.min_distance = 1;  // the code is all of F_q^{|X|}
    return out;
  }

  // q^dimension must fit the search cap
  long long words = 1;
  for (long long i = 0; i < out.dimension; ++i) {
    words *= f.q();
    if (words > caps.dist_cap)
      throw SearchTooLarge("q^dimension exceeds the min-distance search cap");
  }

  const auto& gen = basis.rows();
  const std::size_t len = x.points.size();
  long long best = out.length + 1;
  std::vector<std::uint16_t> word(len);
  // one codeword per scalar class: first nonzero coefficient fixed to 1
  auto weight = [&](const std::vector<std::uint16_t>& w) {
    long long c = 0;
    for (auto v : w)
      if (v) ++c;
    return c;
  };
  std::function<void(std::size_t, std::vector<std::uint16_t>&)> extend =
      [&](std::size_t row, std::vector<std::uint16_t>& acc) {
        if (row == gen.size()) {
          best = std::min(best, weight(acc));
          return;
        }
        extend(row + 1, acc);
        for (int c = 1; c < f.q(); ++c) {
          std::vector<std::uint16_t> next = acc;
          row_axpy(f, next, f.rneg((std::uint16_t)c), gen[row]);  // next += c * row
          extend(row + 1, next);
        }
      };
  for (std::size_t first = 0; first < gen.size(); ++first) {
    std::vector<std::uint16_t> acc = gen[first];
    extend(first + 1, acc);
  }
  out.min_distance = best;
  return out;
}

long long torus_dimension(int s, int q, int d) {
  if (s < 2 || d < 0) throw InputError("torus dimension needs s >= 2, d >= 0");
  long long total = 0;
  for (int j = 0; j <= d / (q - 1); ++j) {
    long long term = binomial_coeff(s - 1, j) *
                     binomial_coeff(s - 1 + d - (long long)j * (q - 1), s - 1);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

long long torus_regularity(int s, int q) { return (long long)(s - 1) * (q - 2); }

long long torus_min_distance(int s, int q, int d) {
  if (d <= 0 || d >= torus_regularity(s, q))
    throw OutOfRange("torus minimum distance formula needs 0 < d < (s-1)(q-2)");
  int k = (d - 1) / (q - 2);  // unique k >= 0, 1 <= l <= q-2 with d = k(q-2)+l
  int l = d - k * (q - 2);
  long long r = q - 1 - l;
  for (int i = 0; i < s - (k + 2); ++i) r *= q - 1;
  return r;
}

std::vector<long long> torus_hilbert_series_coeffs(int s, int q, int up_to_d) {
  // numerator (1 - t^{q-1})^{s-1}
  std::vector<long long> coeffs(up_to_d + 1, 0);
  for (int j = 0; j <= s - 1; ++j) {
    long long pos = (long long)j * (q - 1);
    if (pos > up_to_d) break;
    long long c = binomial_coeff(s - 1, j);
    coeffs[pos] += (j % 2 == 0) ? c : -c;
  }
  // divide by (1-t)^s: s rounds of prefix sums
  for (int round = 0; round < s; ++round)
    for (int i = 1; i <= up_to_d; ++i) coeffs[i] += coeffs[i - 1];
  return coeffs;
}

}  // namespace toric

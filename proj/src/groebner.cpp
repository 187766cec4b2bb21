#include "toric/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/generators.hpp"
#include "toric/ideal.hpp"
#include "toric/toric_set.hpp"

namespace toric {

namespace {

bool divides(const Exponents& m, const Exponents& t) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > t[i]) return false;
  return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

}  // namespace

Poly Poly::from_terms(const Field& f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.exp, y.exp); });
  Poly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef = f.radd(out.terms_.back().coef, t.coef);
      if (out.terms_.back().coef == 0) out.terms_.pop_back();
    } else if (t.coef != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Poly Poly::from_binomial(const Field& f, const Binomial& bin) {
  if (bin.is_zero()) return {};
  return from_terms(f, {{1, bin.a}, {f.rneg(1), bin.b}});
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().exp); }

Poly Poly::subtract_multiple(const Field& f, std::uint16_t c, const Exponents& shift,
                             const Poly& g) const {
  // merge two descending term lists
  Poly out;
  std::size_t i = 0, j = 0;
  const std::uint16_t nc = f.rneg(c);
  auto shifted = [&](std::size_t jj) {
    Exponents e = g.terms_[jj].exp;
    for (std::size_t t = 0; t < e.size(); ++t) e[t] += shift[t];
    return e;
  };
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    Exponents ge = shifted(j);
    std::uint16_t gc = f.rmul(nc, g.terms_[j].coef);
    if (i == terms_.size()) {
      if (gc) out.terms_.push_back({gc, std::move(ge)});
      ++j;
      continue;
    }
    int cmp = grevlex_compare(terms_[i].exp, ge);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      if (gc) out.terms_.push_back({gc, std::move(ge)});
      ++j;
    } else {
      std::uint16_t merged = f.radd(terms_[i].coef, gc);
      if (merged) out.terms_.push_back({merged, terms_[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::monic(const Field& f) const {
  if (terms_.empty() || terms_.front().coef == 1) return *this;
  Poly out = *this;
  const std::uint16_t scale = f.rinv(terms_.front().coef);
  for (auto& t : out.terms_) t.coef = f.rmul(t.coef, scale);
  return out;
}

std::string pretty_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out << " + ";
    out << t.coef;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) {
        out << "*t" << i + 1;
        if (t.exp[i] > 1) out << "^" << t.exp[i];
      }
    first = false;
  }
  return out.str();
}

Poly normal_form(const Field& f, const Poly& p, const std::vector<Poly>& basis) {
  std::vector<Term> remainder;
  Poly work = p;
  while (!work.is_zero()) {
    const Term& lead = work.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (!divides(g.leading().exp, lead.exp)) continue;
      const std::uint16_t c = f.rmul(lead.coef, f.rinv(g.leading().coef));
      work = work.subtract_multiple(f, c, exp_sub(lead.exp, g.leading().exp), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      work = work.subtract_multiple(f, lead.coef, Exponents(lead.exp.size(), 0),
                                    Poly::from_terms(f, {{1, lead.exp}}));
    }
  }
  return Poly::from_terms(f, std::move(remainder));
}

Poly s_polynomial(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw InputError("S-polynomial of zero");
  const Exponents gamma = exp_lcm(a.leading().exp, b.leading().exp);
  Poly zero;
  Poly left = zero.subtract_multiple(f, f.rneg(f.rinv(a.leading().coef)),
                                     exp_sub(gamma, a.leading().exp), a);
  return left.subtract_multiple(f, f.rinv(b.leading().coef),
                                exp_sub(gamma, b.leading().exp), b);
}

GroebnerCheck is_groebner(const Field& f, const std::vector<Poly>& basis) {
  std::vector<Poly> monic;
  for (const auto& g : basis) {
    if (g.is_zero()) throw InputError("Groebner check needs nonzero polynomials");
    monic.push_back(g.monic(f));
  }
  for (std::size_t i = 0; i < monic.size(); ++i)
    for (std::size_t j = i + 1; j < monic.size(); ++j) {
      Poly s = s_polynomial(f, monic[i], monic[j]);
      if (!normal_form(f, s, monic).is_zero()) return {false, std::make_pair(i, j)};
    }
  return {true, std::nullopt};
}

std::vector<Poly> buchberger(const Field& f, std::vector<Poly> basis,
                             std::size_t max_basis) {
  std::vector<Poly> gb;
  for (auto& g : basis)
    if (!g.is_zero()) gb.push_back(g.monic(f));
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    // product criterion: coprime leading monomials reduce to zero
    bool coprime = true;
    for (std::size_t t = 0; t < gb[i].leading().exp.size(); ++t)
      if (gb[i].leading().exp[t] && gb[j].leading().exp[t]) {
        coprime = false;
        break;
      }
    if (coprime) continue;
    Poly r = normal_form(f, s_polynomial(f, gb[i], gb[j]), gb);
    if (r.is_zero()) continue;
    gb.push_back(r.monic(f));
    if (gb.size() > max_basis)
      throw CapError("Buchberger completion exceeded the basis cap");
    for (std::size_t t = 0; t + 1 < gb.size(); ++t) pairs.emplace_back(t, gb.size() - 1);
  }
  return gb;
}

ConjectureReport test_conjecture(int k, int q, const Caps& caps) {
  ConjectureReport report;
  report.k = k;
  report.q = q;
  auto field = make_field_q(q);
  const Graph g = cycle_graph(2 * k);
  const ToricSet x = enumerate_toric_set(g, field, caps.enum_cap);
  const CycleGenSet basis = conjectured_basis(k, q);
  const std::vector<Binomial> bins = basis.all();
  report.basis_size = bins.size();

  report.generates = verify_generating_set(bins, x, std::nullopt, caps).generates;
  if (!report.generates) report.witnesses.push_back("graded dimension deficit");

  if (report.generates) {
    auto min = minimalize(bins, x, caps);
    report.minimal = min.redundant.empty();
    for (std::size_t idx : min.redundant)
      report.witnesses.push_back("redundant generator: " + pretty_binomial(bins[idx]));
  }

  std::vector<Poly> polys;
  for (const auto& b : bins) polys.push_back(Poly::from_binomial(*field, b));
  auto check = is_groebner(*field, polys);
  report.groebner = check.is_basis;
  if (check.failing_pair) {
    report.witnesses.push_back(
        "S-pair does not reduce to zero: (" + pretty_binomial(bins[check.failing_pair->first]) +
        ", " + pretty_binomial(bins[check.failing_pair->second]) + ")");
  }
  return report;
}

}  // namespace toric

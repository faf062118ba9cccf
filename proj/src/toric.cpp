#include "arfrf/toric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arfrf {

Binomial Binomial::from_difference(std::span<const Int> v) {
  Binomial b{IntVector(v.size(), 0), IntVector(v.size(), 0)};
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 0)
      b.plus[k] = v[k];
    else
      b.minus[k] = checked_neg(v[k]);
  }
  return b;
}

std::set<std::size_t> Binomial::support() const {
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < plus.size(); ++k)
    if (plus[k] != 0 || minus[k] != 0)
      out.insert(k);
  return out;
}

Binomial Binomial::canonical() const {
  if (plus < minus)
    return {minus, plus};
  return *this;
}

std::string monomial_string(std::span<const Int> exponents) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0)
      continue;
    os << (first ? "" : "*") << 'x' << (k + 1);
    if (exponents[k] != 1)
      os << '^' << exponents[k];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string Binomial::to_string() const {
  return monomial_string(plus) + " - " + monomial_string(minus);
}

std::vector<RfRelation> rf_relations(const NumericalSemigroup &s,
                                     const RFMatrix &m,
                                     std::size_t *skipped_zero) {
  std::vector<RfRelation> out;
  std::size_t zeros = 0;
  for (const auto &d : row_differences(m)) {
    if (std::all_of(d.vector.begin(), d.vector.end(),
                    [](Int x) { return x == 0; })) {
      ++zeros;
      continue;
    }
    auto b = Binomial::from_difference(d.vector);
    if (degree(s, b.plus) != degree(s, b.minus))
      throw std::invalid_argument("RF-relation is not homogeneous: rows of "
                                  "the matrix have different degrees");
    out.push_back({d.i, d.j, std::move(b)});
  }
  if (skipped_zero)
    *skipped_zero = zeros;
  return out;
}

namespace {

std::optional<ZeroPair> equal_column_entries(const IntMatrix &m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t i2 = i + 1; i2 < m.rows(); ++i2)
        if (m(i, j) == m(i2, j))
          return ZeroPair{i, i2, j};
  return std::nullopt;
}

} // namespace

GenericityReport is_generic(const NumericalSemigroup &s) {
  GenericityReport report;
  for (Int f : pseudo_frobenius(s).elements) {
    std::vector<RFMatrix> first_two;
    for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
      first_two.push_back(m);
      return first_two.size() < 2;
    });
    report.pf_element = f;
    if (first_two.size() > 1) {
      report.generic = false;
      report.witness = GenericityWitness::MultipleRfMatrices;
      report.matrices = std::move(first_two);
      return report;
    }
    if (auto hit = equal_column_entries(first_two.front().entries)) {
      report.generic = false;
      report.witness = GenericityWitness::ColumnCoincidence;
      report.matrices = std::move(first_two);
      report.row_a = hit->row_a;
      report.row_b = hit->row_b;
      report.column = hit->column;
      return report;
    }
  }
  report.pf_element = 0;
  return report;
}

bool recheck_genericity_report(const NumericalSemigroup &s,
                               const GenericityReport &report,
                               std::string *why) {
  auto fail = [&](const std::string &reason) {
    if (why)
      *why = reason;
    return false;
  };
  const auto pf = pseudo_frobenius(s);
  switch (report.witness) {
  case GenericityWitness::AllCriteriaPassed: {
    if (!report.generic)
      return fail("verdict not generic but no failing witness");
    return is_generic(s).generic || fail("an independent rescan fails");
  }
  case GenericityWitness::MultipleRfMatrices: {
    if (report.generic)
      return fail("generic verdict with a failing witness");
    if (!pf.contains(report.pf_element))
      return fail("witness element is not pseudo-Frobenius");
    if (report.matrices.size() != 2 ||
        report.matrices[0].entries == report.matrices[1].entries)
      return fail("witness does not carry two distinct matrices");
    for (const auto &m : report.matrices)
      if (!satisfies_rf_invariants(s, report.pf_element, m.entries, why))
        return false;
    return true;
  }
  case GenericityWitness::ColumnCoincidence: {
    if (report.generic)
      return fail("generic verdict with a failing witness");
    if (!pf.contains(report.pf_element))
      return fail("witness element is not pseudo-Frobenius");
    if (report.matrices.size() != 1)
      return fail("column witness must carry exactly one matrix");
    const auto &m = report.matrices.front();
    if (!satisfies_rf_invariants(s, report.pf_element, m.entries, why))
      return false;
    const std::size_t e = m.size();
    if (report.row_a == report.row_b || report.row_a >= e ||
        report.row_b >= e || report.column >= e)
      return fail("witness indices out of range");
    if (m(report.row_a, report.column) != m(report.row_b, report.column))
      return fail("witness entries differ");
    return true;
  }
  }
  return fail("unknown witness kind");
}

std::string to_string(GenericityWitness w) {
  switch (w) {
  case GenericityWitness::AllCriteriaPassed:
    return "all-criteria-passed";
  case GenericityWitness::MultipleRfMatrices:
    return "multiple-rf-matrices";
  case GenericityWitness::ColumnCoincidence:
    return "column-coincidence";
  }
  return "unknown";
}

} // namespace arfrf

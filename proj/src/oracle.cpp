#include "qca/oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qca/simulate.hpp"

namespace qca {

std::vector<Configuration> enumerate_configs(const Interval& J,
                                             const SymbolTable& table,
                                             std::size_t cap) {
  if (J.is_empty()) return {Configuration::all_quiescent()};
  const int len = static_cast<int>(J.length());
  const std::size_t count = word_count(len, table.size(), cap);
  std::vector<Configuration> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Word w = word_from_index(idx, len, table.size());
    Configuration c;
    for (int t = 0; t < len; ++t) c.set(J.lo + t, w[static_cast<std::size_t>(t)]);
    out.push_back(std::move(c));
  }
  return out;
}

FiniteEvolution finite_evolution(const LocalRule& rule, const Interval& J,
                                 const Tolerances& tol, std::size_t cap) {
  FiniteEvolution fe;
  fe.input_basis = enumerate_configs(J, rule.symbols(), cap);
  const Interval out_iv = J.is_empty() ? J : image_support(rule, J);
  fe.output_basis = enumerate_configs(out_iv, rule.symbols(), cap);
  fe.matrix = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(fe.output_basis.size()),
      static_cast<Eigen::Index>(fe.input_basis.size()));

  const int m = rule.symbols().size();
  const int out_len = static_cast<int>(out_iv.length());
  for (std::size_t ci = 0; ci < fe.input_basis.size(); ++ci) {
    const Superposition image = apply_global(fe.input_basis[ci], rule, tol);
    for (const auto& [cfg, amp] : image.terms()) {
      const auto idom = interval_domain(cfg);
      if (idom && (idom->lo < out_iv.lo || idom->hi > out_iv.hi)) {
        fe.leakage += std::norm(amp);
        continue;
      }
      Word w(static_cast<std::size_t>(out_len), kQuiescent);
      for (int t = 0; t < out_len; ++t)
        w[static_cast<std::size_t>(t)] = cfg.at(out_iv.lo + t);
      fe.matrix(static_cast<Eigen::Index>(word_index(w, m)),
                static_cast<Eigen::Index>(ci)) = amp;
    }
  }
  return fe;
}

OracleColumnsResult oracle_columns_orthonormal(const LocalRule& rule,
                                               const Interval& J,
                                               const Tolerances& tol,
                                               std::size_t cap) {
  const std::vector<Configuration> basis =
      enumerate_configs(J, rule.symbols(), cap);
  std::vector<Superposition> images;
  images.reserve(basis.size());
  for (const auto& c : basis) images.push_back(apply_global(c, rule, tol));

  OracleColumnsResult result;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (std::abs(images[i].norm() - 1.0) >= tol.eps_norm) {
      result.witness = std::make_pair(basis[i], basis[i]);
      return result;
    }
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (std::abs(inner_product(images[i], images[j])) >= tol.eps_zero) {
        result.witness = std::make_pair(basis[i], basis[j]);
        return result;
      }
    }
  }
  result.orthonormal = true;
  return result;
}

std::vector<double> oracle_row_norm(const LocalRule& rule,
                                    const Configuration& row, int depth,
                                    std::size_t cap) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const auto idom = interval_domain(row);
  const std::int64_t k = idom ? idom->lo : 0;
  const std::int64_t l = idom ? idom->hi : 0;
  const int min_off = rule.min_offset();
  const int max_off = rule.max_offset();
  const int m = rule.symbol_count();

  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(depth) + 1);
  std::size_t visited = 0;

  for (int h = 0; h <= depth; ++h) {
    const Interval J{k - h, l + h + 1};
    const Interval out{J.lo - max_off, J.hi - min_off};
    // Row cells outside the reachable output range force a zero factor.
    bool feasible = true;
    for (const auto& [pos, sym] : row.cells())
      if (pos < out.lo || pos > out.hi) feasible = false;
    if (!feasible) {
      sums.push_back(0.0);
      continue;
    }

    const std::size_t len = static_cast<std::size_t>(J.length());
    std::vector<SymbolId> cells(len, kQuiescent);
    const auto cell_at = [&](std::int64_t pos) -> SymbolId {
      if (pos < J.lo || pos > J.hi) return kQuiescent;
      return cells[static_cast<std::size_t>(pos - J.lo)];
    };
    const auto factor_at = [&](std::int64_t i) -> Complex {
      Word w;
      w.reserve(static_cast<std::size_t>(rule.neighborhood_size()));
      for (int off : rule.neighborhood()) w.push_back(cell_at(i + off));
      return rule.amplitude(row.at(i), w);
    };

    double total = 0.0;
    // Scans the window cell by cell; the factor of output cell i is
    // folded in once its last input i + max_off is fixed. Branches with
    // an exactly-zero running product are skipped; every configuration
    // with nonzero overlap is still visited individually.
    std::function<void(std::int64_t, Complex)> scan =
        [&](std::int64_t j, Complex amp) {
          if (++visited > cap)
            throw std::length_error("row oracle exceeded the search cap");
          if (j > J.hi) {
            for (std::int64_t i = J.hi - max_off + 1; i <= out.hi; ++i) {
              amp *= factor_at(i);
              if (amp == Complex{}) return;
            }
            total += std::norm(amp);
            return;
          }
          for (SymbolId s = 0; s < m; ++s) {
            cells[static_cast<std::size_t>(j - J.lo)] = s;
            const Complex next = amp * factor_at(j - max_off);
            if (next != Complex{}) scan(j + 1, next);
          }
          cells[static_cast<std::size_t>(j - J.lo)] = kQuiescent;
        };
    scan(J.lo, Complex{1.0, 0.0});
    sums.push_back(total);
  }
  return sums;
}

LocalRule random_rule(const SymbolTable& table, int neighborhood_size,
                      std::mt19937_64& rng) {
  const int m = table.size();
  std::vector<int> neighborhood(static_cast<std::size_t>(neighborhood_size));
  for (std::size_t i = 0; i < neighborhood.size(); ++i)
    neighborhood[i] = static_cast<int>(i);
  const std::size_t words =
      word_count(neighborhood_size, m, std::size_t{1} << 20);

  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd images(m, static_cast<Eigen::Index>(words));
  images.col(0) = Eigen::VectorXcd::Zero(m);
  images(kQuiescent, 0) = Complex{1.0, 0.0};
  for (std::size_t w = 1; w < words; ++w) {
    Eigen::VectorXcd v(m);
    do {
      for (int s = 0; s < m; ++s) v(s) = Complex{gauss(rng), gauss(rng)};
    } while (v.norm() == 0.0);
    images.col(static_cast<Eigen::Index>(w)) = v / v.norm();
  }
  return LocalRule(table, std::move(neighborhood), std::move(images));
}

}  // namespace qca

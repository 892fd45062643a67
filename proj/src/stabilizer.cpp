// Copyright 2026 The cwsmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cwsmod/stabilizer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cwsmod/errors.hpp"

namespace cwsmod {

GeneratorSet::GeneratorSet(std::vector<PauliOperator> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("a generator set needs at least one element");
  for (const auto& p : generators_) {
    if (!(p.modulus() == modulus()) || p.num_qudits() != num_qudits()) {
      throw DimensionMismatch("generators act on different spaces");
    }
  }
}

GeneratorSet GeneratorSet::with_generator(PauliOperator p) const {
  std::vector<PauliOperator> next = generators_;
  next.push_back(std::move(p));
  return GeneratorSet(std::move(next));
}

bool EnumeratedGroup::contains(const PauliOperator& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

EnumeratedGroup enumerate_group(const GeneratorSet& g, std::size_t limit) {
  std::set<PauliOperator> seen;
  std::deque<PauliOperator> frontier;
  const auto id = PauliOperator::identity(g.modulus(), g.num_qudits());
  seen.insert(id);
  frontier.push_back(id);
  // Finite group: closure under right multiplication by generators suffices.
  while (!frontier.empty()) {
    const PauliOperator cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : g.generators()) {
      PauliOperator next = multiply(cur, s);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw LimitExceeded("group enumeration exceeded limit of " + std::to_string(limit));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {std::vector<PauliOperator>(seen.begin(), seen.end())};
}

PauliOperator group_element(const GeneratorSet& g, const ZdVector& exponents) {
  if (exponents.size() != g.size()) throw DimensionMismatch("one exponent per generator expected");
  PauliOperator out = PauliOperator::identity(g.modulus(), g.num_qudits());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out = multiply(out, power(g[i], static_cast<std::uint64_t>(exponents[i])));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const GeneratorSet& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!commutes(g[i], g[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<PauliOperator> find_identity_multiple(const GeneratorSet& g) {
  const Modulus& m = g.modulus();
  if (const auto pairs = noncommuting_pairs(g); !pairs.empty()) {
    const auto& [i, j] = pairs.front();
    return multiply(multiply(g[i], g[j]), multiply(adjoint(g[i]), adjoint(g[j])));
  }
  // s_i^d covers the lattice directions d e_i.
  for (const auto& s : g.generators()) {
    const PauliOperator p = power(s, static_cast<std::uint64_t>(m.value()));
    if (!p.is_identity()) return p;
  }
  // Relations c R(S) = 0 over Z_d, from D = U R(S) V: y D = 0 is generated by
  // y = t_i e_i with t_i = d / gcd(D_ii, d), and x = y U.
  const ZdMatrix rs = parity_matrix(g);
  const Diagonalization diag = diagonalize(rs);
  const ZdMatrix u = row_transform(m, rs.rows(), diag.row_ops);
  for (std::size_t i = 0; i < rs.rows(); ++i) {
    // Zero pivots and rows below the diagonal give t_i = 1.
    const Residue pivot = i < rs.cols() ? diag.diagonal.at(i, i) : 0;
    const ZdVector relation =
        u.row(i).scaled(static_cast<std::int64_t>(m.cyclic_order(pivot)));
    if (relation.is_zero()) continue;
    const PauliOperator p = group_element(g, relation);
    if (!p.is_identity_multiple()) {
      throw std::logic_error("relation lattice element has nonzero symplectic image");
    }
    if (!p.is_identity()) return p;
  }
  return std::nullopt;
}

ValidationReport validate(const GeneratorSet& g, std::size_t limit) {
  ValidationReport report;
  const std::size_t n = g.num_qudits();
  report.noncommuting = noncommuting_pairs(g);
  report.abelian = report.noncommuting.empty();
  report.module_order = row_module_cardinality(parity_matrix(g));
  report.r_in_bounds = g.size() >= n && g.size() <= 2 * n;
  if (!report.r_in_bounds) {
    report.warnings.push_back("generator count r = " + std::to_string(g.size()) +
                              " lies outside [n, 2n] = [" + std::to_string(n) + ", " +
                              std::to_string(2 * n) + "]");
  }

  try {
    const EnumeratedGroup group = enumerate_group(g, limit);
    report.order = group.order();
    report.order_from_enumeration = true;
    for (const auto& e : group.elements) {
      if (e.is_identity_multiple() && !e.is_identity()) {
        report.identity_multiple = e;
        break;
      }
    }
  } catch (const LimitExceeded&) {
    report.warnings.push_back("group larger than enumeration limit " + std::to_string(limit) +
                              "; identity multiples checked algebraically");
    report.identity_multiple = find_identity_multiple(g);
    report.order = report.identity_multiple ? 0 : report.module_order;
  }
  report.identity_multiples_trivial = !report.identity_multiple.has_value();
  if (report.valid() && report.order != report.module_order) {
    throw std::logic_error("enumerated order disagrees with #<R(S)>");
  }
  return report;
}

ZdMatrix parity_matrix(std::span<const PauliOperator> operators) {
  if (operators.empty()) throw std::invalid_argument("parity_matrix of an empty collection");
  const std::size_t n = operators.front().num_qudits();
  std::vector<ZdVector> rows;
  rows.reserve(operators.size());
  for (const auto& p : operators) rows.push_back(r_map(p));
  return ZdMatrix::from_rows(operators.front().modulus(), 2 * n, rows);
}

namespace {

void require_valid(const GeneratorSet& g) {
  if (const auto pairs = noncommuting_pairs(g); !pairs.empty()) {
    throw InvalidGroup("generators " + std::to_string(pairs.front().first + 1) + " and " +
                       std::to_string(pairs.front().second + 1) + " do not commute");
  }
  if (const auto m = find_identity_multiple(g)) {
    throw InvalidGroup("group contains the identity multiple " + format_pauli(*m));
  }
}

}  // namespace

Cardinality group_order(const GeneratorSet& g) {
  require_valid(g);
  return row_module_cardinality(parity_matrix(g));
}

Cardinality stabilized_dimension(const GeneratorSet& g) {
  const Cardinality order = group_order(g);
  const Cardinality full = g.modulus().pow(g.num_qudits());
  if (order > full || full % order != 0) {
    throw std::logic_error("stabilizer order " + std::to_string(order) + " does not divide d^n");
  }
  return full / order;
}

std::optional<PauliOperator> element_with_image(const GeneratorSet& g, const ZdVector& image) {
  const auto coeffs = solve_row(parity_matrix(g), image);
  if (!coeffs) return std::nullopt;
  return group_element(g, *coeffs);
}

GeneratorSet extend_to_maximal(const GeneratorSet& g) {
  require_valid(g);
  const Modulus& m = g.modulus();
  const std::size_t n = g.num_qudits();
  const Cardinality target = m.pow(n);
  const Cardinality space = m.pow(2 * n);

  GeneratorSet current = g;
  Cardinality order = row_module_cardinality(parity_matrix(current));
  while (order < target) {
    const ZdMatrix rs = parity_matrix(current);
    bool added = false;
    ZdVector v(m, 2 * n);
    for (Cardinality index = 1; index < space && !added; ++index) {
      // Lexicographic successor, last coordinate fastest.
      for (std::size_t k = 2 * n; k-- > 0;) {
        const Residue next = m.add(v[k], 1);
        v.set(k, next);
        if (next != 0) break;
      }
      bool commuting = true;
      for (const auto& s : current.generators()) {
        if (symplectic_product(r_map(s), v) != 0) {
          commuting = false;
          break;
        }
      }
      if (!commuting || solve_row(rs, v)) continue;
      for (Residue phase = 0; phase < m.value(); ++phase) {
        GeneratorSet candidate = current.with_generator(PauliOperator::from_symplectic(v, phase));
        if (!find_identity_multiple(candidate)) {
          current = std::move(candidate);
          added = true;
          break;
        }
      }
    }
    if (!added) {
      throw PhaseUnrealizable(
          "no commuting extension with a phase in <q_d> avoids identity multiples (group order " +
          std::to_string(order) + " < d^n = " + std::to_string(target) + ")");
    }
    const Cardinality next_order = row_module_cardinality(parity_matrix(current));
    if (next_order <= order) throw std::logic_error("extension did not enlarge the group");
    order = next_order;
  }
  return current;
}

}  // namespace cwsmod

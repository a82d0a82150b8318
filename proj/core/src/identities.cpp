#include "filiform/identities.hpp"

#include "filiform/matrix.hpp"
#include "filiform/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace filiform {

std::string law_name(Law law) {
  switch (law) {
    case Law::antisymmetry: return "antisymmetry";
    case Law::jacobi: return "jacobi";
    case Law::leibniz: return "leibniz";
  }
  throw std::invalid_argument("unknown law");
}

namespace {

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
}

/// Enumerates all basis triples with the outermost index parallelized, collects
/// violations per chunk, and merges into (i,j,k) order.
template <class Residual>
IdentityReport check_triples(const StructureTable& table, Law law, Residual residual) {
  const int n = table.dim();
  auto chunks = run_chunked<std::vector<Violation>>(
      static_cast<std::size_t>(n), [&](std::size_t begin, std::size_t end) {
        std::vector<Violation> local;
        for (std::size_t ii = begin; ii < end; ++ii) {
          const int i = static_cast<int>(ii) + 1;
          for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
              Vec r = residual(i, j, k);
              if (!r.is_zero()) local.push_back({i, j, k, std::move(r)});
            }
        }
        return local;
      });
  IdentityReport report;
  report.law = law;
  report.checked = static_cast<long>(n) * n * n;
  for (auto& chunk : chunks)
    for (auto& v : chunk) report.violations.push_back(std::move(v));
  sort_violations(report.violations);
  return report;
}

}  // namespace

IdentityReport check_antisymmetry(const StructureTable& table) {
  const int n = table.dim();
  IdentityReport report;
  report.law = Law::antisymmetry;
  report.checked = static_cast<long>(n) * n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec r = table.bracket(i, j) + table.bracket(j, i);
      if (!r.is_zero()) report.violations.push_back({i, j, 0, std::move(r)});
    }
  sort_violations(report.violations);
  return report;
}

IdentityReport check_jacobi(const StructureTable& table) {
  const int n = table.dim();
  return check_triples(table, Law::jacobi, [&](int i, int j, int k) {
    Vec r = table.eval(table.bracket(i, j), Vec::unit(n, k));
    r += table.eval(table.bracket(j, k), Vec::unit(n, i));
    r += table.eval(table.bracket(k, i), Vec::unit(n, j));
    return r;
  });
}

IdentityReport check_leibniz(const StructureTable& table) {
  const int n = table.dim();
  return check_triples(table, Law::leibniz, [&](int i, int j, int k) {
    Vec r = table.eval(table.bracket(i, j), Vec::unit(n, k));
    r -= table.eval(table.bracket(i, k), Vec::unit(n, j));
    r -= table.eval(Vec::unit(n, i), table.bracket(j, k));
    return r;
  });
}

namespace {

/// span{ [e_i, w] : 1 <= i <= n, w in span_basis } as a reduced basis.
std::vector<Vec> bracket_span_left_full(const StructureTable& table, const std::vector<Vec>& span_basis) {
  const int n = table.dim();
  std::vector<Vec> products;
  for (int i = 1; i <= n; ++i)
    for (const auto& w : span_basis) {
      Vec v = table.eval(Vec::unit(n, i), w);
      if (!v.is_zero()) products.push_back(std::move(v));
    }
  return row_space_basis(std::move(products));
}

int annihilator_dim(const StructureTable& table, bool left, bool right) {
  const int n = table.dim();
  // Constraint rows over the unknown z = sum c_i e_i: one row per (j, output
  // coordinate), entries d/dc_i of [z, e_j] (left) or [e_j, z] (right).
  std::vector<Vec> rows;
  for (int j = 1; j <= n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      if (pass == 0 && !left) continue;
      if (pass == 1 && !right) continue;
      std::vector<Vec> images;
      images.reserve(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        images.push_back(pass == 0 ? table.bracket(i, j) : table.bracket(j, i));
      for (int out = 1; out <= n; ++out) {
        Vec row(n);
        bool nonzero = false;
        for (int i = 1; i <= n; ++i) {
          const Rational& c = images[static_cast<std::size_t>(i - 1)].coord(out);
          if (!c.is_zero()) {
            row.set_coord(i, c);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  return n - rank(std::move(rows));
}

}  // namespace

std::vector<Vec> squares_ideal(const StructureTable& table) {
  const int n = table.dim();
  std::vector<Vec> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Vec v = table.bracket(i, j) + table.bracket(j, i);
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
  std::vector<Vec> basis = row_space_basis(std::move(gens));
  // close under right bracketing by basis elements
  for (;;) {
    std::vector<Vec> extended = basis;
    for (const auto& v : basis)
      for (int j = 1; j <= n; ++j) {
        Vec w = table.eval(v, Vec::unit(n, j));
        if (!w.is_zero()) extended.push_back(std::move(w));
      }
    std::vector<Vec> next = row_space_basis(std::move(extended));
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

SeriesProfile series_profile(const StructureTable& table) {
  const int n = table.dim();
  SeriesProfile profile;

  std::vector<Vec> full;
  full.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) full.push_back(Vec::unit(n, i));

  profile.lower_central_dims.push_back(n);
  std::vector<Vec> current = full;
  for (;;) {
    current = bracket_span_left_full(table, current);
    const int d = static_cast<int>(current.size());
    profile.lower_central_dims.push_back(d);
    if (d == 0 || d == profile.lower_central_dims[profile.lower_central_dims.size() - 2]) break;
  }

  profile.derived_dims.push_back(n);
  std::vector<Vec> derived = full;
  for (;;) {
    std::vector<Vec> products;
    for (const auto& u : derived)
      for (const auto& w : derived) {
        Vec v = table.eval(u, w);
        if (!v.is_zero()) products.push_back(std::move(v));
      }
    derived = row_space_basis(std::move(products));
    const int d = static_cast<int>(derived.size());
    profile.derived_dims.push_back(d);
    if (d == 0 || d == profile.derived_dims[profile.derived_dims.size() - 2]) break;
  }

  profile.center_dim = annihilator_dim(table, true, true);
  profile.left_annihilator_dim = annihilator_dim(table, true, false);
  profile.right_annihilator_dim = annihilator_dim(table, false, true);
  profile.squares_ideal_dim = static_cast<int>(squares_ideal(table).size());
  return profile;
}

bool is_filiform(const StructureTable& table) {
  const int n = table.dim();
  const auto& dims = series_profile(table).lower_central_dims;
  for (int i = 2; i <= n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i - 1);
    const int dim_i = idx < dims.size() ? dims[idx] : dims.back();
    if (dim_i != n - i) return false;
  }
  return true;
}

}  // namespace filiform

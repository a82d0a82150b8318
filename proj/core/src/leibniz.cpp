#include "filiform/leibniz.hpp"

#include "filiform/catalog.hpp"

#include <initializer_list>
#include <stdexcept>

namespace filiform {

std::string leibniz_family_name(LeibnizFamily family) {
  switch (family) {
    case LeibnizFamily::lambda: return "lambda";
    case LeibnizFamily::mu: return "mu";
    case LeibnizFamily::eta: return "eta";
  }
  throw std::invalid_argument("unknown Leibniz family");
}

LeibnizFamily leibniz_family_from_string(const std::string& text) {
  if (text == "lambda") return LeibnizFamily::lambda;
  if (text == "mu") return LeibnizFamily::mu;
  if (text == "eta") return LeibnizFamily::eta;
  throw std::invalid_argument("unknown Leibniz family '" + text +
                              "' (expected lambda, mu or eta)");
}

int leibniz_family_arity(LeibnizFamily family) {
  switch (family) {
    case LeibnizFamily::lambda: return 9;
    case LeibnizFamily::mu: return 7;
    case LeibnizFamily::eta: return 4;
  }
  throw std::invalid_argument("unknown Leibniz family");
}

int leibniz_family_lie_dim(LeibnizFamily family) {
  switch (family) {
    case LeibnizFamily::lambda: return 6;
    case LeibnizFamily::mu: return 5;
    case LeibnizFamily::eta: return 7;
  }
  throw std::invalid_argument("unknown Leibniz family");
}

LeibnizExtension build_QL(const StructureTable& lie, const ModuleAction& action) {
  if (action.algebra_dim() != lie.dim())
    throw std::invalid_argument("build_QL: action algebra dimension != Lie dimension");
  const int m = lie.dim();
  const int k = action.module_dim();
  StructureTable table(m + k, extension_basis_labels(m, k), "QL(" + lie.name() + ")");
  for (const auto& [pair, value] : lie.entries()) {
    Vec v(m + k);
    for (const auto& [idx, c] : value.nonzero()) v.set_coord(idx, c);
    table.set_bracket(pair.first, pair.second, v);
  }
  for (const auto& [pair, value] : action.entries()) {
    Vec v(m + k);
    for (const auto& [idx, c] : value.nonzero()) v.set_coord(m + idx, c);
    table.set_bracket(m + pair.first, pair.second, v);
  }
  return {std::move(table), m, k};
}

namespace {

void require_arity(const FamilyParams& params, LeibnizFamily family) {
  if (params.family != family)
    throw std::invalid_argument("family parameter block tagged for a different family");
  const int arity = leibniz_family_arity(family);
  if (static_cast<int>(params.values.size()) != arity)
    throw std::invalid_argument(leibniz_family_name(family) + " takes exactly " +
                                std::to_string(arity) + " parameters");
}

struct ExtBuilder {
  StructureTable table;
  int lie_dim;

  ExtBuilder(int m, int k, std::string name)
      : table(m + k, extension_basis_labels(m, k), std::move(name)), lie_dim(m) {}

  int x(int i) const { return lie_dim + i; }

  void set(int i, int j, std::initializer_list<std::pair<int, Rational>> parts) {
    Vec v(table.dim());
    for (const auto& [idx, c] : parts) v.set_coord(idx, c);
    table.set_bracket(i, j, v);
  }
};

}  // namespace

LeibnizExtension build_lambda(const FamilyParams& params) {
  require_arity(params, LeibnizFamily::lambda);
  const auto& a = params.values;  // a[0] = a1, ..., a[8] = a9
  ExtBuilder b(6, 6, "lambda");
  auto X = [&](int i) { return b.x(i); };
  const Rational h(1, 2), q(1, 4), tq(3, 4), th(3, 2), fh(5, 2);

  b.set(1, 1, {{X(6), a[0]}});
  b.set(1, 2, {{3, 1}});
  b.set(1, 3, {{4, 1}});
  b.set(1, 4, {{5, 1}});
  b.set(1, 5, {{X(6), a[3]}});
  b.set(1, 6, {{X(5), -2 * a[1]}, {X(6), -tq * a[2]}});

  b.set(2, 1, {{3, -1}, {X(1), a[1]}, {X(2), a[2]}});
  b.set(2, 2, {{X(3), a[4]}, {X(4), a[6]}, {X(5), a[7]}});
  b.set(2, 3, {{X(2), -3 * a[1]}, {X(3), a[5]}, {X(4), -a[4]}, {X(5), a[6]}, {X(6), a[8]}});
  b.set(2, 4, {{X(3), 4 * a[1]}, {X(4), -th * a[5]}, {X(5), a[4]}});
  b.set(2, 5, {{6, -1}, {X(4), -3 * a[1]}, {X(5), th * a[5]}});
  b.set(2, 6, {{X(6), fh * a[5]}});

  b.set(3, 1, {{4, -1}});
  b.set(3, 2, {{X(2), 4 * a[1]}, {X(3), -a[5]}, {X(5), -2 * a[6]}, {X(6), -a[8]}});
  b.set(3, 3, {{X(3), -2 * a[1]}, {X(4), h * a[5]}});
  b.set(3, 4, {{6, 1}});
  b.set(3, 5, {{X(5), 2 * a[1]}, {X(6), tq * a[2]}});
  b.set(3, 6, {{X(6), -2 * a[1]}});

  b.set(4, 1, {{5, -1}});
  b.set(4, 2, {{X(3), -2 * a[1]}, {X(4), h * a[5]}});
  b.set(4, 3, {{6, -1}, {X(4), 2 * a[1]}, {X(5), -h * a[5]}});
  b.set(4, 4, {{X(5), -2 * a[1]}, {X(6), -h * a[2]}});

  b.set(5, 1, {{X(6), -a[3]}});
  b.set(5, 2, {{6, 1}});
  b.set(5, 3, {{X(6), q * a[2]}});

  b.set(6, 1, {{X(6), -q * a[2]}});
  b.set(6, 2, {{X(6), -a[5]}});

  b.set(X(1), 2, {{X(2), 1}});
  b.set(X(1), 3, {{X(3), -1}});
  b.set(X(1), 4, {{X(4), 1}});
  b.set(X(1), 5, {{X(5), -1}});
  b.set(X(1), 6, {{X(6), -2}});
  b.set(X(2), 1, {{X(3), 1}});
  b.set(X(2), 5, {{X(6), 1}});
  b.set(X(3), 1, {{X(4), 1}});
  b.set(X(3), 4, {{X(6), 1}});
  b.set(X(4), 1, {{X(5), 1}});
  b.set(X(4), 3, {{X(6), 1}});
  b.set(X(5), 2, {{X(6), 1}});

  return {std::move(b.table), 6, 6};
}

LeibnizExtension build_mu(const FamilyParams& params) {
  require_arity(params, LeibnizFamily::mu);
  const auto& g = params.values;  // g[0] = g1, ..., g[6] = g7
  ExtBuilder b(5, 5, "mu");
  auto X = [&](int i) { return b.x(i); };
  const Rational h(1, 2);

  b.set(1, 1, {{X(5), g[0]}});
  b.set(1, 2, {{3, 1}});
  b.set(1, 3, {{4, 2}});
  b.set(1, 4, {{5, 3}});
  b.set(1, 5, {{X(5), g[1]}});

  b.set(2, 1, {{3, -1}});
  b.set(2, 2, {{X(2), g[2]}, {X(3), g[3]}, {X(4), g[5]}});
  b.set(2, 3, {{5, 1}, {X(3), -g[2]}, {X(4), g[3]}, {X(5), g[6]}});
  b.set(2, 4, {{X(4), h * g[2]}, {X(5), h * g[1]}});
  b.set(2, 5, {{X(5), g[4]}});

  b.set(3, 1, {{4, -2}});
  b.set(3, 2, {{5, -1}, {X(4), -2 * g[3]}, {X(5), -g[6]}});
  b.set(3, 4, {{X(5), -3 * g[4]}});

  b.set(4, 1, {{5, -3}});
  b.set(4, 2, {{X(5), -h * g[1]}});
  b.set(4, 3, {{X(5), 3 * g[4]}});

  b.set(5, 1, {{X(5), -g[1]}});
  b.set(5, 2, {{X(5), -g[4]}});

  b.set(X(1), 1, {{X(2), 1}});
  b.set(X(1), 2, {{X(3), Rational(1, 4)}});
  b.set(X(1), 3, {{X(4), Rational(1, 12)}});
  b.set(X(1), 5, {{X(5), Rational(1, 6)}});
  b.set(X(2), 1, {{X(3), 1}});
  b.set(X(2), 2, {{X(4), Rational(1, 3)}});
  b.set(X(2), 4, {{X(5), h}});
  b.set(X(3), 1, {{X(4), 1}});
  b.set(X(3), 3, {{X(5), 1}});
  b.set(X(4), 2, {{X(5), 1}});

  return {std::move(b.table), 5, 5};
}

LeibnizExtension build_eta(const FamilyParams& params) {
  require_arity(params, LeibnizFamily::eta);
  const auto& be = params.values;  // be[0] = b1, ..., be[3] = b4
  ExtBuilder b(7, 7, "eta");
  auto X = [&](int i) { return b.x(i); };

  b.set(1, 1, {{X(7), be[0]}});
  for (int i = 2; i <= 6; ++i) b.set(1, i, {{i + 1, 1}});
  b.set(1, 7, {{X(7), be[1]}});

  b.set(2, 1, {{3, -1}});
  b.set(2, 2, {{X(4), be[2]}, {X(6), be[3]}});
  b.set(2, 3, {{5, 1}, {X(5), -be[2]}});
  b.set(2, 4, {{6, 1}, {X(6), be[2]}});
  b.set(2, 5, {{7, 1}});
  b.set(2, 6, {{X(7), be[1]}});

  for (int i = 3; i <= 6; ++i) b.set(i, 1, {{i + 1, -1}});
  b.set(7, 1, {{X(7), -be[1]}});
  for (int i = 3; i <= 5; ++i) b.set(i, 2, {{i + 2, -1}});
  b.set(6, 2, {{X(7), -be[1]}});

  for (int k = 1; k <= 5; ++k) b.set(X(k), 1, {{X(k + 1), 1}});
  for (int k = 1; k <= 4; ++k) b.set(X(k), 2, {{X(k + 2), 1}});
  b.set(X(6), 2, {{X(7), 1}});
  b.set(X(5), 3, {{X(7), 1}});
  b.set(X(4), 4, {{X(7), 1}});
  b.set(X(3), 5, {{X(7), 1}});
  b.set(X(2), 6, {{X(7), 1}});
  b.set(X(1), 7, {{X(7), 1}});

  return {std::move(b.table), 7, 7};
}

LeibnizExtension build_family(const FamilyParams& params) {
  switch (params.family) {
    case LeibnizFamily::lambda: return build_lambda(params);
    case LeibnizFamily::mu: return build_mu(params);
    case LeibnizFamily::eta: return build_eta(params);
  }
  throw std::invalid_argument("unknown Leibniz family");
}

StructureTable expected_quotient(LeibnizFamily family) {
  switch (family) {
    case LeibnizFamily::lambda: return build_Q(6);
    case LeibnizFamily::mu: return build_W(5);
    case LeibnizFamily::eta: return build_R(7);
  }
  throw std::invalid_argument("unknown Leibniz family");
}

ModuleAction expected_action(LeibnizFamily family) {
  switch (family) {
    case LeibnizFamily::lambda: return derive_action(build_rep_Q(6));
    case LeibnizFamily::mu: return derive_action(build_rep_W(5));
    case LeibnizFamily::eta: return derive_action(build_rep_R(7));
  }
  throw std::invalid_argument("unknown Leibniz family");
}

namespace {

Vec e_part(const Vec& v, int lie_dim) {
  Vec out(lie_dim);
  for (const auto& [idx, c] : v.nonzero())
    if (idx <= lie_dim) out.set_coord(idx, c);
  return out;
}

Vec x_part(const Vec& v, int lie_dim, int module_dim) {
  Vec out(module_dim);
  for (const auto& [idx, c] : v.nonzero())
    if (idx > lie_dim) out.set_coord(idx - lie_dim, c);
  return out;
}

}  // namespace

ExtensionReport verify_extension(const LeibnizExtension& ext, const StructureTable& quotient,
                                 const ModuleAction& action) {
  const int m = ext.lie_dim;
  const int k = ext.module_dim;
  if (ext.table.dim() != m + k)
    throw std::invalid_argument("verify_extension: inconsistent extension dimensions");
  if (quotient.dim() != m)
    throw std::invalid_argument("verify_extension: quotient dimension mismatch");
  if (action.algebra_dim() != m || action.module_dim() != k)
    throw std::invalid_argument("verify_extension: action dimension mismatch");

  ExtensionReport report;
  report.leibniz_violations = static_cast<long>(check_leibniz(ext.table).violations.size());

  report.ideal_ok = true;
  for (int i = 1; i <= m + k; ++i)
    for (int xk = m + 1; xk <= m + k; ++xk)
      if (!ext.table.bracket(i, xk).is_zero()) report.ideal_ok = false;
  for (int xk = m + 1; xk <= m + k; ++xk)
    for (int i = 1; i <= m; ++i)
      if (!e_part(ext.table.bracket(xk, i), m).is_zero()) report.ideal_ok = false;

  report.quotient_ok = true;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (e_part(ext.table.bracket(i, j), m) != quotient.bracket(i, j)) report.quotient_ok = false;

  report.action_ok = true;
  for (int xk = 1; xk <= k; ++xk)
    for (int i = 1; i <= m; ++i)
      if (x_part(ext.table.bracket(m + xk, i), m, k) != action.entry(xk, i))
        report.action_ok = false;

  return report;
}

ExtensionReport verify_extension(const LeibnizExtension& ext, LeibnizFamily family) {
  return verify_extension(ext, expected_quotient(family), expected_action(family));
}

NormalFormReport verify_normal_form(const LeibnizExtension& ext) {
  NormalFormReport report;
  const int m = ext.lie_dim;
  auto flag = [&](std::string issue) {
    report.conforms = false;
    report.issues.push_back(std::move(issue));
  };
  if (m < 4 || m % 2 != 0) {
    flag("lie part dimension must be even and >= 4");
    return report;
  }
  const int dim = ext.table.dim();
  auto supported_on = [&](const Vec& v, std::initializer_list<int> allowed) {
    for (const auto& [idx, c] : v.nonzero()) {
      (void)c;
      bool ok = false;
      for (int a : allowed)
        if (idx == a) ok = true;
      if (!ok) return false;
    }
    return true;
  };

  for (int i = 2; i <= m - 2; ++i)
    if (ext.table.bracket(1, i) != Vec::unit(dim, i + 1))
      flag("[e1,e" + std::to_string(i) + "] != e" + std::to_string(i + 1));
  if (ext.table.bracket(m - 1, 2) != Vec::unit(dim, m))
    flag("[e" + std::to_string(m - 1) + ",e2] != e" + std::to_string(m));
  if (!supported_on(ext.table.bracket(1, 1), {m + 1, m + 2, m + ext.module_dim}))
    flag("[e1,e1] has components outside {x1, x2, x" + std::to_string(ext.module_dim) + "}");
  if (!supported_on(ext.table.bracket(2, 1) + Vec::unit(dim, 3), {m + 1, m + 2}))
    flag("[e2,e1] != -e3 plus components in {x1, x2}");
  return report;
}

Fingerprint fingerprint(const StructureTable& table) {
  const SeriesProfile profile = series_profile(table);
  Fingerprint fp;
  fp.lower_central = profile.lower_central_dims;
  fp.derived = profile.derived_dims;
  fp.center = profile.center_dim;
  fp.left_annihilator = profile.left_annihilator_dim;
  fp.right_annihilator = profile.right_annihilator_dim;
  fp.squares_ideal = profile.squares_ideal_dim;
  return fp;
}

}  // namespace filiform

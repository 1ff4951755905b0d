#include "cli_app.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "eulerian/series.hpp"
#include "eulerian/text.hpp"
#include "eulerian/version.hpp"

namespace eulerian::cli {

using nlohmann::json;

namespace {

json make_doc(const std::string& command, json params) {
  params["format"] = params.value("format", "json");
  return json{{"command", command},
              {"version", std::string(kVersion)},
              {"params", std::move(params)},
              {"results", json::array()}};
}

json vars_header() {
  json vars = json::array();
  for (Var v : kAllVars) vars.push_back(std::string(var_name(v)));
  return vars;
}

void emit_json(const json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

void emit_csv_table(const std::string& kind, long n_max,
                    const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  out << "# table kind=" << kind << " n_max=" << n_max << " version=" << kVersion << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << row[i];
    }
    out << "\n";
  }
}

const std::set<std::string> kTableKinds = {"eulerian",     "stirling1",     "stirling2",
                                           "deg-eulerian", "deg-stirling1", "ordered-bell"};

std::vector<std::vector<std::string>> table_rows(const std::string& kind, long n_max) {
  classical::EulerianTriangle tri;
  classical::StirlingTriangles st;
  std::vector<std::vector<std::string>> rows;
  for (long n = 0; n <= n_max; ++n) {
    std::vector<std::string> row;
    if (kind == "eulerian") {
      for (long m = 0; m < std::max(1L, n); ++m) row.push_back(tri.at(n, m).get_str());
    } else if (kind == "stirling1") {
      for (long k = 0; k <= n; ++k) row.push_back(st.s1(n, k).get_str());
    } else if (kind == "stirling2") {
      for (long k = 0; k <= n; ++k) row.push_back(st.s2(n, k).get_str());
    } else if (kind == "deg-eulerian") {
      for (long l = 0; l < std::max(1L, n); ++l) {
        row.push_back(to_string(degenerate::eulerian_number(n, l, tri, st)));
      }
    } else if (kind == "deg-stirling1") {
      for (long l = 0; l <= n; ++l) row.push_back(to_string(degenerate::unsigned_stirling1(n, l)));
    } else {  // ordered-bell
      row.push_back(to_string(degenerate::ordered_bell(n, tri, st)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct GfSpec {
  Var main;
  std::set<Var> bindable;
};

const std::map<std::string, GfSpec> kGfSpecs = {
    {"eulerian", {Var::X, {Var::T}}},
    {"deg-eulerian", {Var::X, {Var::T, Var::Lambda}}},
    {"ordered-bell", {Var::T, {Var::X, Var::Lambda}}},
    {"frobenius-euler", {Var::T, {Var::X, Var::U}}},
};

Series bind_coeffs(const Series& s, const std::map<Var, Rational>& binds) {
  Series out(s.main_var(), s.order());
  for (long j = 0; j <= s.order(); ++j) {
    RatFun c = s.coeff(j);
    for (const auto& [v, value] : binds) c = c.subst(v, value);
    out.set_coeff(j, c);
  }
  return out;
}

/// Builds the requested generating function with bindings substituted
/// before inversion, so a vanishing constant denominator surfaces as
/// NonUnitConstantTerm.
Series expand_gf(const std::string& gf, long order, const std::map<Var, Rational>& binds) {
  const MPoly t = MPoly::variable(Var::T);
  const MPoly u = MPoly::variable(Var::U);
  const MPoly x = MPoly::variable(Var::X);
  if (gf == "eulerian" || gf == "deg-eulerian") {
    Series den(Var::X, order);
    if (gf == "eulerian") {
      Series arg(Var::X, order);
      if (order >= 1) arg.set_coeff(1, RatFun(t - MPoly(1)));
      den = series_exp(bind_coeffs(arg, binds));
    } else {
      den = bind_coeffs(series_deg_pow(Var::X, t - MPoly(1), order), binds);
    }
    RatFun bound_t(t);
    if (auto it = binds.find(Var::T); it != binds.end()) bound_t = RatFun(it->second);
    den.set_coeff(0, den.coeff(0) - bound_t);
    return series_inv(den) * (RatFun(1) - bound_t);
  }
  if (gf == "ordered-bell") {
    Series den = -bind_coeffs(series_deg_pow(Var::T, MPoly(1), order), binds);
    den.set_coeff(0, den.coeff(0) + RatFun(2));
    const Series numer = bind_coeffs(series_deg_pow(Var::T, x, order), binds);
    return series_mul(series_inv(den), numer);
  }
  // frobenius-euler
  Series arg(Var::T, order);
  if (order >= 1) arg.set_coeff(1, RatFun(1));
  Series den = series_exp(arg);
  RatFun bound_u(u);
  if (auto it = binds.find(Var::U); it != binds.end()) bound_u = RatFun(it->second);
  den.set_coeff(0, den.coeff(0) - bound_u);
  Series argx(Var::T, order);
  if (order >= 1) argx.set_coeff(1, RatFun(x));
  return series_mul(series_inv(den) * (RatFun(1) - bound_u),
                    bind_coeffs(series_exp(argx), binds));
}

}  // namespace

int run_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  if (!kTableKinds.contains(opt.kind)) {
    err << "table: unknown kind '" << opt.kind << "'\n";
    return kExitUsage;
  }
  if (opt.n_max < 0) {
    err << "table: --n-max must be nonnegative\n";
    return kExitUsage;
  }
  if (opt.format != "json" && opt.format != "csv") {
    err << "table: --format must be json or csv\n";
    return kExitUsage;
  }
  const auto rows = table_rows(opt.kind, opt.n_max);
  if (opt.format == "csv") {
    emit_csv_table(opt.kind, opt.n_max, rows, out);
    return kExitOk;
  }
  json doc = make_doc("table", {{"kind", opt.kind},
                                {"n_max", opt.n_max},
                                {"format", opt.format},
                                {"vars", vars_header()}});
  for (long n = 0; n <= opt.n_max; ++n) {
    doc["results"].push_back({{"n", n}, {"row", rows[static_cast<std::size_t>(n)]}});
  }
  emit_json(doc, out);
  return kExitOk;
}

int run_expand(const ExpandOptions& opt, std::ostream& out, std::ostream& err) {
  const auto spec = kGfSpecs.find(opt.gf);
  if (spec == kGfSpecs.end()) {
    err << "expand: unknown generating function '" << opt.gf << "'\n";
    return kExitUsage;
  }
  if (opt.order < 0) {
    err << "expand: --order must be nonnegative\n";
    return kExitUsage;
  }
  if (opt.format != "json") {
    err << "expand: --format must be json\n";
    return kExitUsage;
  }
  std::map<Var, Rational> binds;
  json binds_json = json::object();
  for (const auto& [name, value] : opt.bindings) {
    const auto var = var_from_name(name);
    if (!var) {
      err << "expand: unknown variable '" << name << "' in --bind\n";
      return kExitUsage;
    }
    if (!spec->second.bindable.contains(*var)) {
      err << "expand: the " << opt.gf << " generating function does not use '" << name << "'\n";
      return kExitUsage;
    }
    Rational parsed;
    try {
      parsed = parse_rational(value);
    } catch (const ParseError& e) {
      err << "expand: bad --bind value: " << e.what() << "\n";
      return kExitUsage;
    }
    binds[*var] = parsed;
    binds_json[std::string(var_name(*var))] = parsed.str();
  }

  Series gf(Var::X, 0);
  try {
    gf = expand_gf(opt.gf, opt.order, binds);
  } catch (const NonUnitConstantTerm&) {
    err << "expand: the bindings hit a pole of the generating function\n";
    return kExitPole;
  }

  json doc = make_doc("expand", {{"gf", opt.gf},
                                 {"order", opt.order},
                                 {"bindings", std::move(binds_json)},
                                 {"format", opt.format},
                                 {"vars", vars_header()}});
  Rational nfact(1);
  for (long n = 0; n <= opt.order; ++n) {
    if (n > 0) nfact *= Rational(n);
    doc["results"].push_back({{"n", n}, {"value", to_string(gf.coeff(n) * RatFun(nfact))}});
  }
  emit_json(doc, out);
  return kExitOk;
}

nlohmann::json report_to_json(const catalog::IdentityReport& report) {
  json range{{"n_max", report.n_max}};
  if (report.m_max) range["m_max"] = *report.m_max;
  json r{{"id", std::string(catalog::to_string(report.id))},
         {"description", std::string(catalog::identity_info(report.id).description)},
         {"anchor", std::string(catalog::identity_info(report.id).anchor)},
         {"range", std::move(range)},
         {"status", report.pass ? "pass" : "fail"},
         {"elapsed_seconds", report.elapsed.count()}};
  if (report.counterexample) {
    r["counterexample"] = json{{"indices", report.counterexample->indices},
                               {"lhs", report.counterexample->lhs},
                               {"rhs", report.counterexample->rhs},
                               {"diff", report.counterexample->diff}};
  }
  return r;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n_max < 0) {
    err << "verify: --n-max must be nonnegative\n";
    return kExitUsage;
  }
  if (opt.format != "json") {
    err << "verify: --format must be json\n";
    return kExitUsage;
  }
  const bool all = opt.identities.empty() ||
                   std::ranges::any_of(opt.identities, [](const auto& s) { return s == "all"; });
  std::vector<catalog::IdentityId> ids;
  if (!all) {
    for (const auto& name : opt.identities) {
      try {
        ids.push_back(catalog::parse_identity(name));
      } catch (const UnknownIdentity& e) {
        err << "verify: " << e.what() << "\n";
        return kExitUsage;
      }
    }
  }

  std::vector<catalog::IdentityReport> reports;
  if (all) {
    reports = catalog::verify_all(opt.n_max);
  } else {
    catalog::Session session;
    for (const auto id : ids) {
      const std::optional<long> m =
          catalog::identity_info(id).needs_m ? std::optional<long>(6) : std::nullopt;
      reports.push_back(catalog::verify(id, opt.n_max, m, &session));
    }
  }

  json doc = make_doc("verify", {{"identities", all ? std::vector<std::string>{"all"}
                                                    : opt.identities},
                                 {"n_max", opt.n_max},
                                 {"format", opt.format}});
  bool ok = true;
  for (const auto& report : reports) {
    ok = ok && report.pass;
    doc["results"].push_back({{"report", report_to_json(report)}});
  }
  emit_json(doc, out);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace eulerian::cli

#include "copoisson/cli.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "copoisson/checks.hpp"
#include "copoisson/dual.hpp"
#include "copoisson/finite_hopf.hpp"
#include "copoisson/io.hpp"
#include "copoisson/report.hpp"

namespace copoisson {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kExitParse, "", std::string("parse error: ") + e.what()};
  } catch (const SchemaError& e) {
    return {kExitParse, "", std::string("schema error: ") + e.what()};
  } catch (const BoundError& e) {
    return {kExitUsage, "",
            std::string("bound error: ") + e.what() + " (required bound " +
                std::to_string(e.required_bound()) + ")"};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("error: ") + e.what()};
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? sep : "") + xs[i];
  return r;
}

bool is_series(const StructureSpec& spec) {
  if (spec.kind != SpecKind::poisson) return false;
  return std::get<BracketTable>(spec.payload).mode() == BracketMode::series;
}

std::vector<std::string> default_checks(SpecKind kind, bool series_mode) {
  switch (kind) {
    case SpecKind::struct_consts: return {"linear-relations", "jacobi", "poisson-hopf", "eps-s", "copoisson-hopf"};
    case SpecKind::poisson:
      if (series_mode) return {"jacobi", "series-roundtrip"};
      return {"jacobi", "poisson-hopf", "eps-s"};
    case SpecKind::copoisson: return {"skew", "coleibniz", "cojacobi", "counit", "cojacobi-coeffs"};
    case SpecKind::qmap: return {"skew", "coleibniz", "cojacobi", "counit"};
    case SpecKind::finhopf: return {"poisson-family", "copoisson-family"};
    case SpecKind::pmap: return {};
  }
  return {};
}

SpecKind kind_from_name(const std::string& kind) {
  for (SpecKind k : {SpecKind::poisson, SpecKind::copoisson, SpecKind::struct_consts, SpecKind::finhopf,
                     SpecKind::qmap, SpecKind::pmap}) {
    if (to_string(k) == kind) return k;
  }
  throw UsageError("unknown kind " + kind);
}

std::vector<std::string> all_checks(SpecKind kind, bool series_mode) {
  switch (kind) {
    case SpecKind::struct_consts: return default_checks(kind, series_mode);
    case SpecKind::poisson:
      if (series_mode) return {"jacobi", "series-roundtrip"};
      return {"jacobi", "poisson-hopf", "eps-s", "series-roundtrip"};
    case SpecKind::copoisson:
      return {"skew", "coleibniz", "cojacobi", "counit", "cojacobi-coeffs", "copoisson-hopf", "antipode",
              "dual-abcd"};
    case SpecKind::qmap:
      return {"skew", "coleibniz", "cojacobi", "counit", "copoisson-hopf", "antipode", "dual-abcd"};
    case SpecKind::finhopf: return default_checks(kind, series_mode);
    case SpecKind::pmap: return {};
  }
  return {};
}

// Co-Poisson checks shared by copoisson, qmap and the dual side of struct_consts.
void run_copoisson_check(const std::string& name, const QMap& q, const ITable* table, std::size_t n,
                         bool degree_explicit, const CheckOptions& opts, std::vector<CheckReport>& out) {
  if (name == "skew") {
    out.push_back(check_skew(q, n, opts));
  } else if (name == "coleibniz") {
    for (auto form : {CoLeibnizForm::definition, CoLeibnizForm::form1, CoLeibnizForm::form2}) {
      out.push_back(check_coleibniz(q, n, form, opts));
    }
  } else if (name == "cojacobi" || name == "cojacobi-coeffs") {
    std::size_t deg = degree_explicit ? n : std::min(n, affordable_cojacobi_degree(q));
    if (name == "cojacobi") {
      CheckReport r = check_cojacobi(q, deg, opts);
      if (deg < n) r.note = "limited to the degree the table affords";
      out.push_back(std::move(r));
    } else {
      out.push_back(check_cojacobi_coeffs(*table, deg, opts));
    }
  } else if (name == "counit") {
    out.push_back(check_counit_kill(q, n, opts));
  } else if (name == "copoisson-hopf") {
    if (table) {
      CheckReport support = check_support_condition(*table, opts);
      if (!support.passed()) {
        support.note = "a co-Poisson Hopf structure on a polynomial Hopf algebra has I(a) = 0 unless a is a variable";
      }
      out.push_back(std::move(support));
    }
    out.push_back(check_delta_derivation(q, n, opts));
  } else if (name == "antipode") {
    out.push_back(check_antipode_coanti(q, n, opts));
  } else if (name == "dual-abcd") {
    out.push_back(check_dual_of_abcd(q, n, opts));
  }
}

json family_json(const FinHopf& h, const LinearFamily& fam, bool poisson) {
  const std::size_t n = h.dim();
  const auto& names = h.basis_names();
  json basis = json::array();
  for (const auto& v : fam.basis) {
    json entry = json::object();
    if (poisson) {
      FinBracket b = bracket_from_unknowns(n, v);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          entry["{" + names[i] + "," + names[j] + "}"] =
              h.render(b(dense_basis(n, 1, i), dense_basis(n, 1, j)), 1);
        }
      }
    } else {
      CoBracket q = cobracket_from_unknowns(n, v);
      for (std::size_t i = 0; i < n; ++i) entry["q(" + names[i] + ")"] = h.render(q[i], 2);
    }
    basis.push_back(entry);
  }
  return basis;
}

json quadratic_json(const QuadraticForm& form, QuadraticIdentity which) {
  std::size_t nonzero = 0;
  auto count = [&](const Vec& v) {
    for (const auto& x : v) nonzero += !copoisson::is_zero(x);
  };
  count(form.constant);
  for (const auto& v : form.linear) count(v);
  for (const auto& [kl, v] : form.quadratic) count(v);
  return {{"identity", which == QuadraticIdentity::jacobi ? "jacobi" : "cojacobi"},
          {"identically_zero", form.identically_zero()},
          {"nonzero_coefficients", nonzero}};
}

json presentation_json(const Presentation& p) {
  json rows = json::array();
  for (const auto& row : p.change_of_basis) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return {{"parameters", p.parameters}, {"change_of_basis", rows}, {"matches", p.matches}, {"note", p.note}};
}

CheckReport family_report(const FinHopf& h, bool poisson, json& families) {
  LinearFamily fam = poisson ? solve_poisson_family(h, false) : solve_copoisson_family(h, false);
  LinearFamily hopf = poisson ? solve_poisson_family(h, true) : solve_copoisson_family(h, true);
  auto which = poisson ? QuadraticIdentity::jacobi : QuadraticIdentity::cojacobi;
  QuadraticForm form = quadratic_residual_family(fam, which, h);
  std::string key = poisson ? "poisson" : "copoisson";
  families[key] = {{"dimension", fam.dimension()},
                   {"hopf_dimension", hopf.dimension()},
                   {"basis", family_json(h, fam, poisson)},
                   {"quadratic_residual", quadratic_json(form, which)}};
  CheckReport r;
  r.check_name = poisson ? "poisson_family" : "copoisson_family";
  r.note = "linear family of dimension " + std::to_string(fam.dimension()) + " (Hopf-compatible: " +
           std::to_string(hopf.dimension()) + "); " + (poisson ? "Jacobi" : "co-Jacobi") + " residual " +
           (form.identically_zero() ? "identically zero" : "imposes quadratic conditions");
  return r;
}

std::string render_text_header(const std::string& command, const std::string& digest) {
  std::string s = std::string(kToolName) + " " + kToolVersion + " " + command;
  if (!digest.empty()) s += " input " + digest;
  return s + "\n";
}

}  // namespace

std::vector<std::string> available_checks(const std::string& kind, bool series_mode) {
  return all_checks(kind_from_name(kind), series_mode);
}

CommandResult cmd_check(const CheckRequest& req) {
  return guarded([&]() -> CommandResult {
    StructureSpec spec = parse_spec(req.input_text);
    const bool series_mode = is_series(spec);
    const std::size_t n = req.max_degree.value_or(spec.max_degree);
    const bool explicit_degree = req.max_degree.has_value();
    std::vector<std::string> available = all_checks(spec.kind, series_mode);
    if (available.empty()) throw UsageError("no checks are defined for kind " + to_string(spec.kind));
    std::vector<std::string> selected = req.checks.empty() ? default_checks(spec.kind, series_mode) : req.checks;
    if (selected.size() == 1 && selected[0] == "all") selected = available;
    for (const auto& c : selected) {
      if (std::find(available.begin(), available.end(), c) == available.end()) {
        throw UsageError("check " + c + " is not available for " + to_string(spec.kind) +
                         (series_mode ? " (series mode)" : "") + "; available: " + join(available, ", "));
      }
    }
    CheckOptions opts;
    opts.names = spec.variables;
    std::vector<CheckReport> reports;
    json families = json::object();

    switch (spec.kind) {
      case SpecKind::struct_consts: {
        const auto& c = std::get<StructConsts>(spec.payload);
        BracketTable b = linear_poisson(c);
        for (const auto& name : selected) {
          if (name == "linear-relations") reports.push_back(check_linear_relations(c, opts));
          if (name == "jacobi") reports.push_back(check_jacobi(b, n, opts));
          if (name == "poisson-hopf") reports.push_back(check_poisson_hopf_compat(b, n, opts));
          if (name == "eps-s") reports.push_back(check_eps_s_morphisms(b, n, opts));
          if (name == "copoisson-hopf") {
            ITable table = copoisson_hopf_from_consts(c, n);
            QMap q = make_copoisson(table);
            for (const char* sub : {"skew", "coleibniz", "cojacobi", "counit", "copoisson-hopf"}) {
              run_copoisson_check(sub, q, &table, n, explicit_degree, opts, reports);
            }
          }
        }
        break;
      }
      case SpecKind::poisson: {
        const auto& b = std::get<BracketTable>(spec.payload);
        for (const auto& name : selected) {
          if (name == "jacobi") {
            std::size_t deg = n;
            if (series_mode && !explicit_degree) {
              bool constants = false;
              for (const auto& [ij, f] : b.entries()) constants = constants || !copoisson::is_zero(f.coeff(Monomial(b.nvars())));
              if (constants && deg > 0) --deg;
            }
            reports.push_back(check_jacobi(b, deg, opts));
          }
          if (name == "poisson-hopf") reports.push_back(check_poisson_hopf_compat(b, n, opts));
          if (name == "eps-s") reports.push_back(check_eps_s_morphisms(b, n, opts));
          if (name == "series-roundtrip") reports.push_back(verify_series_roundtrip(b, n, opts));
        }
        break;
      }
      case SpecKind::copoisson: {
        const auto& table = std::get<ITable>(spec.payload);
        if (n > table.bound()) {
          throw BoundError("requested degree " + std::to_string(n) + " exceeds table bound " +
                               std::to_string(table.bound()),
                           n);
        }
        QMap q = make_copoisson(table);
        for (const auto& name : selected) run_copoisson_check(name, q, &table, n, explicit_degree, opts, reports);
        break;
      }
      case SpecKind::qmap: {
        const auto& payload = std::get<QMapPayload>(spec.payload);
        QMap q = payload.role == "q" ? payload.map : q_from_i(payload.map);
        for (const auto& name : selected) run_copoisson_check(name, q, nullptr, n, explicit_degree, opts, reports);
        break;
      }
      case SpecKind::finhopf: {
        const auto& h = std::get<FinHopf>(spec.payload);
        for (const auto& name : selected) reports.push_back(family_report(h, name == "poisson-family", families));
        break;
      }
      case SpecKind::pmap: break;
    }

    bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
    std::string digest = input_digest(req.input_text);
    CommandResult result;
    result.exit_code = passed ? kExitPass : kExitFail;
    if (req.format == OutputFormat::json) {
      json doc = document_header("check");
      doc["input"] = {{"digest", digest},
                      {"kind", to_string(spec.kind)},
                      {"variables", spec.variables},
                      {"max_degree", spec.max_degree}};
      json checks = json::array();
      for (const auto& r : reports) checks.push_back(report_to_json(r));
      doc["checks"] = checks;
      doc["passed"] = passed;
      if (!families.empty()) doc["families"] = families;
      result.output = doc.dump(2) + "\n";
    } else {
      std::string s = render_text_header("check", digest);
      for (const auto& r : reports) s += report_to_text(r);
      s += std::string("result: ") + (passed ? "PASS" : "FAIL") + "\n";
      result.output = s;
    }
    return result;
  });
}

namespace {

std::string spec_to_text(const StructureSpec& spec) {
  const auto& names = spec.variables;
  const std::size_t d = names.size();
  std::string s = "kind " + to_string(spec.kind) + ", variables " + join(names, ", ") + ", max_degree " +
                  std::to_string(spec.max_degree) + "\n";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BracketTable>) {
          s += std::string("mode ") + (p.truncation() ? "series" : "polynomial") + "\n";
          for (const auto& [ij, f] : p.entries()) {
            s += "{" + names[ij.first] + "," + names[ij.second] + "} = " + to_string(f, names) + "\n";
          }
        } else if constexpr (std::is_same_v<T, ITable>) {
          for (const auto& [a, m] : p.rows()) s += "I(" + to_string(a, names) + ") = " + to_string(p.value(a), names) + "\n";
        } else if constexpr (std::is_same_v<T, StructConsts>) {
          for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
              for (std::size_t l = 0; l < d; ++l) {
                if (!copoisson::is_zero(p(i, j, l))) {
                  s += "lambda^{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}_" +
                       std::to_string(l + 1) + " = " + to_string(p(i, j, l)) + "\n";
                }
              }
            }
          }
        } else if constexpr (std::is_same_v<T, QMapPayload>) {
          for (const auto& [a, t] : p.map.values()) s += p.role + "(" + to_string(a, names) + ") = " + to_string(t, names) + "\n";
        } else if constexpr (std::is_same_v<T, PMapPayload>) {
          for (const auto& [ab, f] : p.map.values()) {
            s += p.role + "(" + to_string(ab.first, names) + ", " + to_string(ab.second, names) + ") = " +
                 to_string(f, names) + "\n";
          }
        } else {
          s += "dimension " + std::to_string(p.dim()) + "\n";
        }
      },
      spec.payload);
  return s;
}

StructureSpec transformed(const StructureSpec& in, const std::string& to) {
  StructureSpec out;
  out.variables = in.variables;
  out.max_degree = in.max_degree;
  const std::size_t d = in.variables.size();
  auto undefined = [&]() -> UsageError {
    std::string from = to_string(in.kind);
    if (in.kind == SpecKind::poisson) from += is_series(in) ? " (series mode)" : " (polynomial mode)";
    if (in.kind == SpecKind::qmap) from += " (role " + std::get<QMapPayload>(in.payload).role + ")";
    if (in.kind == SpecKind::pmap) from += " (role " + std::get<PMapPayload>(in.payload).role + ")";
    return UsageError("transform from " + from + " to " + to + " is not defined");
  };

  switch (in.kind) {
    case SpecKind::struct_consts:
      if (to != "copoisson") throw undefined();
      out.kind = SpecKind::copoisson;
      out.payload = copoisson_hopf_from_consts(std::get<StructConsts>(in.payload), in.max_degree);
      return out;
    case SpecKind::copoisson: {
      const auto& table = std::get<ITable>(in.payload);
      if (to == "series") {
        out.kind = SpecKind::poisson;
        out.payload = series_from_copoisson(table);
      } else if (to == "q") {
        out.kind = SpecKind::qmap;
        out.payload = QMapPayload{"q", make_copoisson(table)};
      } else {
        throw undefined();
      }
      return out;
    }
    case SpecKind::poisson: {
      const auto& b = std::get<BracketTable>(in.payload);
      if (to == "copoisson" && b.mode() == BracketMode::series) {
        out.kind = SpecKind::copoisson;
        out.payload = copoisson_from_series(b);
      } else if (to == "p") {
        PMap p(d, in.max_degree);
        auto monos = monomials_up_to(d, in.max_degree);
        for (const auto& a : monos) {
          for (const auto& c : monos) p.set(a, c, poisson_bracket(b, monomial_poly(a), monomial_poly(c)));
        }
        out.kind = SpecKind::pmap;
        out.payload = PMapPayload{"p", std::move(p)};
      } else {
        throw undefined();
      }
      return out;
    }
    case SpecKind::qmap: {
      const auto& payload = std::get<QMapPayload>(in.payload);
      if (payload.role == "q" && to == "i") {
        QMap i_map = i_from_q(payload.map);
        bool wedge = true;
        for (const auto& [a, t] : i_map.values()) wedge = wedge && in_primitive_wedge(t);
        if (!wedge) {
          out.kind = SpecKind::qmap;
          out.payload = QMapPayload{"i", std::move(i_map)};
          return out;
        }
        ITable table(d, in.max_degree);
        for (const auto& [a, t] : i_map.values()) {
          for (const auto& [k, c] : t) {
            std::size_t i = 0, j = 0;
            for (std::size_t v = 0; v < d; ++v) {
              if (k[0][v]) i = v;
              if (k[1][v]) j = v;
            }
            if (i < j) table.set_entry(a, i, j, c);
          }
        }
        out.kind = SpecKind::copoisson;
        out.payload = std::move(table);
      } else if (payload.role == "i" && to == "q") {
        out.kind = SpecKind::qmap;
        out.payload = QMapPayload{"q", q_from_i(payload.map)};
      } else {
        throw undefined();
      }
      return out;
    }
    case SpecKind::pmap: {
      const auto& payload = std::get<PMapPayload>(in.payload);
      out.kind = SpecKind::pmap;
      if (payload.role == "p" && to == "j") {
        out.payload = PMapPayload{"j", j_from_p(payload.map)};
      } else if (payload.role == "j" && to == "p") {
        out.payload = PMapPayload{"p", p_from_j(payload.map)};
      } else {
        throw undefined();
      }
      return out;
    }
    case SpecKind::finhopf: throw undefined();
  }
  throw undefined();
}

}  // namespace

CommandResult cmd_transform(const TransformRequest& req) {
  return guarded([&]() -> CommandResult {
    static const std::vector<std::string> targets = {"q", "i", "j", "p", "copoisson", "series"};
    if (std::find(targets.begin(), targets.end(), req.to) == targets.end()) {
      throw UsageError("unknown transform target " + req.to + "; expected one of " + join(targets, ", "));
    }
    StructureSpec out = transformed(parse_spec(req.input_text), req.to);
    CommandResult result;
    result.output = req.format == OutputFormat::json ? serialize_spec(out) : spec_to_text(out);
    return result;
  });
}

CommandResult cmd_classify_h4(const std::string& structure, bool hopf, OutputFormat format) {
  return guarded([&]() -> CommandResult {
    if (structure != "poisson" && structure != "copoisson") {
      throw UsageError("--structure must be poisson or copoisson");
    }
    const bool poisson = structure == "poisson";
    FinHopf h = sweedler_h4();
    LinearFamily fam = poisson ? solve_poisson_family(h, hopf) : solve_copoisson_family(h, hopf);
    auto which = poisson ? QuadraticIdentity::jacobi : QuadraticIdentity::cojacobi;
    QuadraticForm form = quadratic_residual_family(fam, which, h);
    json doc = document_header("classify-h4");
    doc["structure"] = structure;
    doc["hopf_compat"] = hopf;
    doc["basis_names"] = h.basis_names();
    doc["dimension"] = fam.dimension();
    doc["basis"] = family_json(h, fam, poisson);
    doc["quadratic_residual"] = quadratic_json(form, which);
    if (!hopf) {
      doc["presentation"] = presentation_json(poisson ? present_h4_poisson(h, fam) : present_h4_copoisson(h, fam));
    }
    CommandResult result;
    if (format == OutputFormat::json) {
      result.output = doc.dump(2) + "\n";
    } else {
      std::string s = render_text_header("classify-h4", "");
      s += structure + (hopf ? " Hopf" : "") + " structures on H4: family dimension " +
           std::to_string(fam.dimension()) + "\n";
      for (std::size_t k = 0; k < doc["basis"].size(); ++k) {
        s += "  basis " + std::to_string(k + 1) + ":";
        for (const auto& [key, value] : doc["basis"][k].items()) s += " " + key + " = " + value.get<std::string>() + ";";
        s += "\n";
      }
      s += std::string("  quadratic residual: ") + (form.identically_zero() ? "identically zero" : "nonzero") + "\n";
      if (doc.contains("presentation")) s += "  presentation: " + doc["presentation"]["note"].get<std::string>() + "\n";
      result.output = s;
    }
    return result;
  });
}

namespace {

struct Symbol {
  std::size_t i, j, l;
  auto operator<=>(const Symbol&) const = default;
};

std::string symbol_text(const Symbol& s) {
  return "lambda^{" + std::to_string(s.i + 1) + "," + std::to_string(s.j + 1) + "}_" + std::to_string(s.l + 1);
}

}  // namespace

CommandResult cmd_relations(long dim, OutputFormat format) {
  return guarded([&]() -> CommandResult {
    if (dim < 2) throw UsageError("--dim must be at least 2");
    if (dim > static_cast<long>(kMaxVariables)) throw UsageError("--dim must be at most " + std::to_string(kMaxVariables));
    const std::size_t d = static_cast<std::size_t>(dim);
    json relations = json::array();
    std::string text;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
          for (std::size_t s = 0; s < d; ++s) {
            // sum_l lambda^{ij}_l lambda^{lk}_s + lambda^{jk}_l lambda^{li}_s + lambda^{ki}_l lambda^{lj}_s
            std::map<std::pair<Symbol, Symbol>, long> terms;
            auto add = [&](std::size_t a, std::size_t b, std::size_t l, std::size_t c, std::size_t e) {
              if (a == b || c == e) return;
              long sign = 1;
              Symbol x{a, b, l}, y{c, e, s};
              if (x.i > x.j) std::swap(x.i, x.j), sign = -sign;
              if (y.i > y.j) std::swap(y.i, y.j), sign = -sign;
              if (y < x) std::swap(x, y);
              terms[{x, y}] += sign;
            };
            for (std::size_t l = 0; l < d; ++l) {
              add(i, j, l, l, k);
              add(j, k, l, l, i);
              add(k, i, l, l, j);
            }
            std::string expr;
            json term_list = json::array();
            for (const auto& [xy, c] : terms) {
              if (c == 0) continue;
              long mag = c < 0 ? -c : c;
              if (expr.empty()) {
                if (c < 0) expr += "-";
              } else {
                expr += c < 0 ? " - " : " + ";
              }
              if (mag != 1) expr += std::to_string(mag) + "*";
              expr += symbol_text(xy.first) + "*" + symbol_text(xy.second);
              term_list.push_back({{"coeff", c},
                                   {"factors", {{xy.first.i + 1, xy.first.j + 1, xy.first.l + 1},
                                                {xy.second.i + 1, xy.second.j + 1, xy.second.l + 1}}}});
            }
            if (expr.empty()) expr = "0";
            expr += " = 0";
            relations.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"s", s + 1},
                                 {"expression", expr}, {"terms", term_list}});
            text += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                    "; s=" + std::to_string(s + 1) + ") " + expr + "\n";
          }
        }
      }
    }
    CommandResult result;
    if (format == OutputFormat::json) {
      json doc = document_header("relations");
      doc["dim"] = d;
      doc["count"] = relations.size();
      doc["relations"] = relations;
      result.output = doc.dump(2) + "\n";
    } else {
      result.output = render_text_header("relations", "") + std::to_string(relations.size()) +
                      " relation(s) for d = " + std::to_string(d) + "\n" + text;
    }
    return result;
  });
}

}  // namespace copoisson

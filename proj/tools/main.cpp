// clifford: command-line front end.
//
//   clifford algebra P Q
//   clifford group P Q [--classify]
//   clifford rep P Q | rep --fixture NAME
//   clifford cpt --basis NAME [--pi WORD]
//   clifford verify [--filter PREFIX] [--json PATH]
//
// Every command takes --format text|json. Exit codes: 0 ok, 1 verification
// mismatch, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "clifford/automorphism.hpp"
#include "clifford/claims.hpp"
#include "clifford/finite_group.hpp"
#include "clifford/isomorphism.hpp"
#include "clifford/serialize.hpp"

namespace {

using namespace clifford;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr std::size_t kTextTableLimit = 64;
constexpr int kMaxCliGenerators = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraSignature checked_signature(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxCliGenerators) {
    throw UsageError("need p, q >= 0 and 1 <= p+q <= " + std::to_string(kMaxCliGenerators));
  }
  return AlgebraSignature(p, q);
}

std::string sig_name(const AlgebraSignature& s) {
  return "(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
}

// Aligned table of labels; cells give an index into `labels`, optionally signed.
std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::size_t w = 1;
  for (const auto& h : header) w = std::max(w, h.size());
  for (const auto& row : rows)
    for (const auto& c : row) w = std::max(w, c.size());
  auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream out;
  out << pad("") << " |";
  for (const auto& h : header) out << " " << pad(h);
  out << "\n" << std::string(w + 1, '-') << "+" << std::string(header.size() * (w + 1), '-') << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << pad(header[r]) << " |";
    for (const auto& c : rows[r]) out << " " << pad(c);
    out << "\n";
  }
  return out.str();
}

std::string render_group_table(const GroupTable& g) {
  std::vector<std::string> header(g.labels().begin(), g.labels().end());
  std::vector<std::vector<std::string>> rows(g.order());
  for (ElementIndex r = 0; r < g.order(); ++r)
    for (ElementIndex c = 0; c < g.order(); ++c) rows[r].push_back(g.label(g.multiply(r, c)));
  return render_grid(header, rows);
}

std::string phase_prefix(Phase p) {
  switch (p.exponent()) {
    case 1: return "i*";
    case 2: return "-";
    case 3: return "-i*";
    default: return "";
  }
}

std::string render_signed_table(const SignedTable& t) {
  std::vector<std::vector<std::string>> rows(t.size());
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c) rows[r].push_back(phase_prefix(t.at(r, c).phase) + t.labels[t.at(r, c).index]);
  return render_grid(t.labels, rows);
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_algebra(int p, int q, bool as_json) {
  const AlgebraSignature sig = checked_signature(p, q);
  const CenterType ct = center_type(sig);
  const int w2 = volume_square(sig);
  const std::string ring = to_string(matrix_algebra_class(sig));
  json j{{"p", p}, {"q", q}, {"n", sig.n()}, {"dimension", std::size_t{1} << sig.n()},
         {"center", to_string(ct)}, {"omega_square", w2}, {"p_minus_q_mod8", sig.p_minus_q_mod8()},
         {"algebra", ring}};
  std::ostringstream t;
  t << "Cl" << sig_name(sig) << "\n"
    << "  n             " << sig.n() << " (dimension " << (std::size_t{1} << sig.n()) << ")\n"
    << "  p-q mod 8     " << sig.p_minus_q_mod8() << "\n"
    << "  center        " << to_string(ct) << "\n"
    << "  omega^2       " << (w2 > 0 ? "+1" : "-1") << "\n"
    << "  matrix class  " << ring << "\n";
  emit(j, as_json, t.str());
  return kOk;
}

int cmd_group(int p, int q, bool classify, bool as_json) {
  const AlgebraSignature sig = checked_signature(p, q);
  const GroupTable g = generate_group(sig);
  const OrderStructure os = order_structure(g);
  const CenterInfo z = center(g);
  json j = to_json(g);
  j["order_structure"] = {os.involutions, os.order4};
  j["center"] = to_string(z.label);
  std::ostringstream t;
  t << "G" << sig_name(sig) << "\n"
    << "  order            " << g.order() << "\n"
    << "  order structure  " << to_string(os) << "\n"
    << "  center           " << to_string(z.label) << " (order " << z.group.order() << ")\n";
  if (classify) {
    const std::string label = to_string(classify_salingaros(g));
    j["salingaros"] = label;
    t << "  Salingaros       " << label << "\n";
  }
  if (!as_json) {
    if (g.order() <= kTextTableLimit) {
      t << "\n" << render_group_table(g);
    } else {
      t << "\n(table of order " << g.order() << " omitted in text mode; use --format json)\n";
    }
  }
  emit(j, as_json, t.str());
  return kOk;
}

GammaBasis basis_by_name(const std::string& name) {
  for (const auto& f : fixture_names())
    if (f == name) return fixture_basis(name);
  std::string known;
  for (const auto& f : fixture_names()) known += " " + f;
  throw UsageError("unknown basis '" + name + "'; known:" + known);
}

int cmd_rep(std::optional<int> p, std::optional<int> q, const std::string& fixture, bool as_json) {
  if (fixture.empty() == !(p && q)) throw UsageError("give either P Q or --fixture NAME");
  const GammaBasis b = fixture.empty() ? brauer_weyl_basis(checked_signature(*p, *q)) : basis_by_name(fixture);
  std::ostringstream t;
  t << b.name() << ": signature " << sig_name(b.signature()) << ", " << b.dim() << "x" << b.dim() << "\n"
    << "  " << b.note() << "\n";
  for (int g = 1; g <= b.signature().n(); ++g) {
    t << "\n" << gamma_label(b, SignedBlade::from_indices({g})) << " =\n" << to_string(b.gamma(g));
  }
  emit(to_json(b), as_json, t.str());
  return kOk;
}

ExtGroup ext_for(const GammaBasis& b, const std::string& pi_word) {
  if (!pi_word.empty()) return assemble_ext_group(b, rep_of_blade(b, parse_gamma_word(b, pi_word)));
  try {
    return derive_ext_group(b);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " (use --pi WORD to assemble with a given Pi)");
  }
}

int cmd_cpt(const std::string& name, const std::string& pi_word, bool as_json) {
  const GammaBasis b = basis_by_name(name);
  const ExtGroup ext = ext_for(b, pi_word);
  const GroupTable full = full_cpt_group(ext);
  const OrderStructure os = order_structure(full);
  const std::string zlabel = to_string(center(full).label);
  const bool abelian = is_abelian(full);
  const bool degenerate = ext.mat(AutKey::Pi) == GaussianMatrix::identity(b.dim());

  json j = to_json(ext);
  j["full_group"] = {{"order", full.order()},
                     {"order_structure", {os.involutions, os.order4}},
                     {"center", zlabel},
                     {"abelian", abelian}};
  j["pi_is_identity"] = degenerate;
  j["pi_solved"] = ext.pi_solved;

  std::ostringstream t;
  t << "Ext of " << b.name() << " " << sig_name(b.signature()) << "\n";
  for (AutKey k : kAutKeys) {
    t << "  " << to_string(k) << std::string(3 - to_string(k).size(), ' ') << gamma_label(b, ext.blade(k)) << "\n";
  }
  if (!ext.inner_star) t << "  (W is scalar: star is not inner for odd n)\n";
  if (!ext.pi_solved) t << "  (Pi given, not solved)\n";
  if (degenerate) t << "  (Pi = I: real basis, so K = W, S = E, F = C)\n";
  t << "\n" << render_signed_table(ext.table) << "\nsignature " << signature_string(ext.signature) << "\n"
    << "full group: order " << full.order() << ", order structure " << to_string(os) << ", center " << zlabel
    << ", " << (abelian ? "abelian" : "non-abelian") << "\n";
  emit(j, as_json, t.str());
  return kOk;
}

int cmd_verify(const std::string& filter, const std::string& json_path, bool as_json) {
  const Report report = run_all_checks(filter, true);
  const json j = to_json(report);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw UsageError("cannot write " + json_path);
    f << j.dump(2) << "\n";
  }
  emit(j, as_json, render_text(report));
  return report.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebras, Salingaros groups, gamma matrices and CPT groups"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int p = 0, q = 0;
  auto* algebra = app.add_subcommand("algebra", "Center, omega^2 and matrix class of Cl(p,q)");
  algebra->add_option("p", p)->required();
  algebra->add_option("q", q)->required();
  add_format(algebra);

  bool classify = false;
  auto* group = app.add_subcommand("group", "Cayley table and invariants of G(p,q)");
  group->add_option("p", p)->required();
  group->add_option("q", q)->required();
  group->add_flag("--classify", classify, "Add the Salingaros label");
  add_format(group);

  std::optional<int> rp, rq;
  std::string fixture;
  auto* rep = app.add_subcommand("rep", "Gamma matrices: Brauer-Weyl for (p,q) or a fixed basis");
  rep->add_option("p", rp);
  rep->add_option("q", rq);
  rep->add_option("--fixture", fixture, "canonical, weyl, majorana, majorana31 or sitter");
  add_format(rep);

  std::string basis;
  auto* cpt = app.add_subcommand("cpt", "Automorphism matrices, Ext table and signature");
  cpt->add_option("--basis", basis, "canonical, weyl, majorana, majorana31 or sitter")->required();
  std::string pi_word;
  cpt->add_option("--pi", pi_word, "Use this gamma word as Pi instead of solving (e.g. 123)");
  add_format(cpt);

  std::string filter, json_path;
  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->add_option("--filter", filter, "Only claims whose id starts with this prefix");
  verify->add_option("--json", json_path, "Also write the report as JSON");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*algebra) return cmd_algebra(p, q, as_json);
    if (*group) return cmd_group(p, q, classify, as_json);
    if (*rep) return cmd_rep(rp, rq, fixture, as_json);
    if (*cpt) return cmd_cpt(basis, pi_word, as_json);
    if (*verify) return cmd_verify(filter, json_path, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // Anything else is a failed derivation, reported as a mismatch.
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "clifford/automorphism.hpp"
#include "clifford/claims.hpp"
#include "clifford/isomorphism.hpp"
#include "clifford/kernels.hpp"

namespace {

using namespace clifford;

struct Outcome {
  bool pass;
  std::string detail;
};

// Collects failed sub-checks; the criterion passes when there are none.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failed_ += (failed_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_.empty()) return {true, summary + " (" + std::to_string(count_) + " checks)"};
    return {false, failed_};
  }

 private:
  int count_ = 0;
  std::string failed_;
};

GroupTable g(int p, int q) { return generate_group(AlgebraSignature(p, q), Execution::parallel); }

GroupTable cp(StandardGroup a, StandardGroup b) { return central_product(standard_group(a), standard_group(b)); }

std::string label(const GammaBasis& b, const SignedBlade& x) { return gamma_label(b, x.with_phase(Phase::one())); }

GaussianMatrix word(const GammaBasis& b, const std::string& w) { return rep_of_blade(b, parse_gamma_word(b, w)); }

Outcome group_orders() {
  Checks c;
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      c.expect(g(p, n - p).order() == std::size_t{1} << (n + 1), "|G(" + std::to_string(p) + "," + std::to_string(n - p) + ")|");
  return c.outcome("|G(p,q)| = 2^(n+1) for all p+q <= 8");
}

Outcome order_structures() {
  Checks c;
  const struct {
    int p, q;
    OrderStructure os;
  } cases[] = {{1, 3, {11, 20}}, {4, 0, {11, 20}}, {0, 4, {11, 20}}, {3, 1, {19, 12}}, {2, 2, {19, 12}}, {4, 1, {31, 32}}};
  for (const auto& k : cases) {
    const OrderStructure got = order_structure(g(k.p, k.q));
    c.expect(got == k.os, "G(" + std::to_string(k.p) + "," + std::to_string(k.q) + ") gives " + to_string(got));
  }
  return c.outcome("(11,20) x3, (19,12) x2, (31,32)");
}

Outcome centers() {
  Checks c;
  c.expect(center(g(1, 3)).label == CenterLabel::z2, "Z(G(1,3))");
  c.expect(center(g(4, 1)).label == CenterLabel::z4, "Z(G(4,1))");
  return c.outcome("Z(G(1,3)) = Z2, Z(G(4,1)) = Z4");
}

Outcome isomorphisms() {
  Checks c;
  auto witness = [&c](const GroupTable& a, const GroupTable& b, const std::string& what) {
    const auto iso = find_isomorphism(a, b);
    c.expect(iso && verify_isomorphism(a, b, *iso), what);
  };
  const GroupTable z4 = standard_group(StandardGroup::z4), d2 = standard_group(StandardGroup::d2);
  witness(g(1, 3), cp(StandardGroup::q4, StandardGroup::d4), "G(1,3) ~ Q4oD4");
  witness(g(3, 1), cp(StandardGroup::d4, StandardGroup::d4), "G(3,1) ~ D4oD4");
  witness(g(2, 2), cp(StandardGroup::d4, StandardGroup::d4), "G(2,2) ~ D4oD4");
  witness(g(4, 1), central_product(cp(StandardGroup::q4, StandardGroup::d4), z4), "G(4,1) ~ Q4oD4oZ4");
  witness(g(3, 2), central_product(cp(StandardGroup::d4, StandardGroup::d4), d2), "G(3,2) ~ D4oD4oD2");
  witness(g(4, 0), g(0, 4), "G(4,0) ~ G(0,4)");
  return c.outcome("six verified witnesses");
}

Outcome even_subgroup_shadow() {
  Checks c;
  const GroupTable even = even_subgroup(g(4, 1));
  const GroupTable g13 = g(1, 3);
  const auto iso = find_isomorphism(even, g13);
  c.expect(iso && verify_isomorphism(even, g13, *iso), "even part of G(4,1) ~ G(1,3)");
  return c.outcome("even part of G(4,1) ~ G(1,3)");
}

Outcome brauer_weyl() {
  Checks c;
  const GammaBasis bw = brauer_weyl_basis(AlgebraSignature(4, 1));
  const GammaBasis ss = fixture_basis("sitter");
  for (int k = 1; k <= 5; ++k) c.expect(bw.gamma(k) == ss.gamma(k), "BW g" + std::to_string(k));
  c.expect(kernels::homomorphism_violations_parallel(bw) == 0, "rep homomorphism on 64x64 pairs");
  return c.outcome("BW(4,1) = spinbasis, homomorphism on all pairs");
}

Outcome fixture_bases() {
  Checks c;
  for (const char* name : {"canonical", "weyl", "majorana", "majorana31"}) {
    const GammaBasis b = fixture_basis(name);
    c.expect(clifford_relation_defects(b.signature(), b.gammas()).empty(), std::string(name) + " relations");
  }
  const GammaBasis cb = fixture_basis("canonical"), wb = fixture_basis("weyl");
  c.expect(verify_intertwiner(intertwiner_x(), cb, wb), "X does not intertwine canonical -> Weyl (holds Weyl -> canonical: " +
                                                            std::string(verify_intertwiner(intertwiner_x(), wb, cb) ? "yes" : "no") + ")");
  const EpsilonScan scan = scan_y_epsilon();
  c.expect(!scan.valid.empty(), "Y: " + scan.note);
  return c.outcome("relations, X and Y");
}

Outcome solver_outputs() {
  Checks c;
  const GammaBasis cb = fixture_basis("canonical");
  const ExtGroup e13 = derive_ext_group(cb);
  const std::pair<AutKey, const char*> want13[] = {{AutKey::E, "g13"}, {AutKey::Pi, "g013"}, {AutKey::C, "g02"},
                                                   {AutKey::K, "g2"},  {AutKey::S, "g0"},    {AutKey::F, "g123"}};
  for (auto [k, blade] : want13) {
    const std::string got = label(cb, e13.blade(k));
    c.expect(got == blade, "Cl(1,3) " + to_string(k) + " = " + got);
  }

  const GammaBasis ss = fixture_basis("sitter");
  const GaussianMatrix w = star_matrix(ss).matrix;
  const GaussianMatrix e = solve_transpose_symmetry(ss).matrix;
  auto blade_of = [&ss](const GaussianMatrix& m) {
    const auto b = identify_blade(ss, m);
    return b ? label(ss, *b) : std::string("?");
  };
  c.expect(blade_of(e) == "g34", "Cl(4,1) E = " + blade_of(e));
  c.expect(blade_of(e * w) == "g125", "Cl(4,1) C = " + blade_of(e * w));
  try {
    const GaussianMatrix pi = solve_complex_conjugation(ss).matrix;
    c.expect(blade_of(pi) == "g123", "Cl(4,1) Pi = " + blade_of(pi));
    c.expect(blade_of(pi * w) == "g45", "Cl(4,1) K = " + blade_of(pi * w));
    c.expect(blade_of(pi * e) == "g124", "Cl(4,1) S = " + blade_of(pi * e));
    c.expect(blade_of(pi * e * w) == "g35", "Cl(4,1) F = " + blade_of(pi * e * w));
  } catch (const SolverError& err) {
    c.expect(false, std::string("Cl(4,1) Pi, K, S, F: ") + err.what());
  }
  return c.outcome("Cl(1,3) and Cl(4,1) solver outputs");
}

Outcome signatures() {
  Checks c;
  const GammaBasis cb = fixture_basis("canonical");
  const GeneratingGroup ptc = generating_group_from_ptc(word(cb, "0"), word(cb, "13"), word(cb, "20"));
  c.expect(signature_string(ptc.signature) == "+--+--+", "PTC " + signature_string(ptc.signature));
  c.expect(ptc.order_structure == OrderStructure{3, 4}, "PTC order structure " + to_string(ptc.order_structure));
  const std::string s13 = signature_string(derive_ext_group(cb).signature);
  c.expect(s13 == "--+--++", "Ext(Cl(1,3)) " + s13);
  const GammaBasis ss = fixture_basis("sitter");
  const std::string s41 = signature_string(assemble_ext_group(ss, word(ss, "123")).signature);
  c.expect(s41 == "--+-+-+", "Ext(Cl(4,1)) " + s41);
  return c.outcome("PTC +--+--+ (3,4); Ext(Cl(1,3)) --+--++; Ext(Cl(4,1)) --+-+-+ with its listed Pi = g123 (no Pi is solvable, see 8)");
}

Outcome tables() {
  Checks c;
  std::size_t suspected = 0;
  for (const char* prefix : {"EXT13.table.", "EXT41.table."}) {
    const Report r = run_all_checks(prefix, true);
    c.expect(r.entries.size() == 64, std::string(prefix) + " has " + std::to_string(r.entries.size()) + " cells");
    for (const auto& e : r.entries) {
      c.expect(e.status != ClaimStatus::mismatch, e.id + " mismatch: " + e.computed);
      if (e.status == ClaimStatus::paper_typo_suspected) {
        ++suspected;
        c.expect(!e.oracle.empty(), e.id + " has no oracle value");
      }
    }
  }
  c.expect(run_all_checks({}, true).ok(), "harness would exit nonzero");
  return c.outcome("128 cells, " + std::to_string(suspected) + " typo-suspected with oracle values, harness exit 0");
}

Outcome embeddings() {
  Checks c;
  const GroupTable full13 = full_cpt_group(derive_ext_group(fixture_basis("canonical")));
  c.expect(full13.order() == 16 && is_subgroup_of(full13, g(1, 3)), "Ext(Cl(1,3)) in G(1,3)");
  const GammaBasis ss = fixture_basis("sitter");
  const GroupTable full41 = full_cpt_group(assemble_ext_group(ss, word(ss, "123")));
  c.expect(full41.order() == 16 && is_subgroup_of(full41, g(4, 1)), "Ext(Cl(4,1)) in G(4,1)");
  return c.outcome("order-16 groups in G(1,3) and G(4,1) (the latter with its listed Pi)");
}

Outcome property_suites() {
  Checks c;
  for (int n = 1; n <= 8; ++n) {
    for (int p = 0; p <= n; ++p) {
      const AlgebraSignature sig(p, n - p);
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n - p) + ")";
      const GroupTable t = g(p, n - p);
      const auto violations = n <= 5 ? kernels::associativity_violations_parallel(t.table(), t.order())
                                     : kernels::sampled_associativity_violations_parallel(t.table(), t.order(), 200000, 17 + n);
      c.expect(violations == 0, "associativity " + tag);
      c.expect(volume_square_closed_form(sig) == volume_square_direct(sig), "omega^2 law " + tag);
      c.expect(center_type_closed_form(sig) == center_type_direct(sig), "center law " + tag);
      if (n > 4) continue;
      for (BladeMask a = 0; a <= sig.full_mask(); ++a)
        for (BladeMask b = 0; b <= sig.full_mask(); ++b) {
          const SignedBlade x{Phase::i(), a}, y{Phase::one(), b};
          const SignedBlade xy = blade_product(x, y, sig);
          c.expect(grade_involution(xy) == blade_product(grade_involution(x), grade_involution(y), sig) &&
                       reversion(xy) == blade_product(reversion(y), reversion(x), sig) &&
                       pseudo_conjugation(xy) == blade_product(pseudo_conjugation(x), pseudo_conjugation(y), sig),
                   "involutions " + tag);
        }
    }
  }
  const ExtGroup cb = derive_ext_group(fixture_basis("canonical"));
  const ExtGroup wb = derive_ext_group(fixture_basis("weyl"));
  c.expect(cb.signature == wb.signature, "signature canonical vs Weyl");
  return c.outcome("associativity, mod-8 laws, involutions, signature invariance");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"group orders", group_orders},
      {"order structures", order_structures},
      {"centers", centers},
      {"isomorphism witnesses", isomorphisms},
      {"even subgroup", even_subgroup_shadow},
      {"Brauer-Weyl (4,1)", brauer_weyl},
      {"fixture bases and intertwiners", fixture_bases},
      {"automorphism solver outputs", solver_outputs},
      {"signatures", signatures},
      {"Ext multiplication tables", tables},
      {"subgroup embeddings", embeddings},
      {"property suites", property_suites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << ". " << name << ": " << o.detail << "\n";
  }
  std::cout << (12 - failures) << "/12 criteria pass\n";
  return failures == 0 ? 0 : 1;
}

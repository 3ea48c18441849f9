// One line per acceptance criterion: "ACn PASS|FAIL <detail>". Exit status is
// nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/errors.hpp"
#include "bisetforge/linalg.hpp"
#include "bisetforge/orders.hpp"
#include "bisetforge/path_algebra.hpp"
#include "bisetforge/peirce.hpp"
#include "bisetforge/perm_groups.hpp"
#include "bisetforge/workbench.hpp"

using namespace bisetforge;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kSubgroupSeconds = 5.0;
constexpr double kTotalSeconds = 120.0;
constexpr std::size_t kSplitSamples = 1000;
constexpr std::size_t kRoundTrips = 100;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks())
    if (!c.passed) out += (out.empty() ? "" : ",") + c.name;
  return out;
}

void require_report(Outcome& o, const Report& r) {
  o.require(r.passed(), r.stage() + " failed: " + failures(r));
}

// Does a failing check of r name the given cell or label?
bool names(const Report& r, const std::string& needle) {
  for (const auto& c : r.checks()) {
    if (c.passed) continue;
    if (c.detail.find(needle) != std::string::npos) return true;
    if (!c.data.is_null() && c.data.dump().find(needle) != std::string::npos) return true;
  }
  return false;
}

// The system of representatives as printed: label and generating pairs over
// a = (1,2), b = (1,2,3).
const std::vector<std::pair<std::string, std::vector<std::pair<char, char>>>>& printed_classes() {
  static const std::vector<std::pair<std::string, std::vector<std::pair<char, char>>>> t = {
      {"U_{0,0}", {}},
      {"U_{1,0}", {{'a', '1'}}},
      {"U_{0,1}", {{'1', 'a'}}},
      {"Delta(V_1)", {{'a', 'a'}}},
      {"U_{4,0}", {{'b', '1'}}},
      {"U_{0,4}", {{'1', 'b'}}},
      {"Delta(V_4)", {{'b', 'b'}}},
      {"U_{1,1}", {{'a', '1'}, {'1', 'a'}}},
      {"U_{5,0}", {{'a', '1'}, {'b', '1'}}},
      {"U_{0,5}", {{'1', 'a'}, {'1', 'b'}}},
      {"U_6", {{'a', 'a'}, {'1', 'b'}}},
      {"U_{4,1}", {{'b', '1'}, {'1', 'a'}}},
      {"U_{1,4}", {{'a', '1'}, {'1', 'b'}}},
      {"U_7", {{'a', 'a'}, {'b', '1'}}},
      {"Delta(V_5)", {{'a', 'a'}, {'b', 'b'}}},
      {"U_{4,4}", {{'b', '1'}, {'1', 'b'}}},
      {"U_{1,5}", {{'a', '1'}, {'1', 'a'}, {'1', 'b'}}},
      {"U_{5,1}", {{'a', '1'}, {'b', '1'}, {'1', 'a'}}},
      {"U_{4,5}", {{'b', '1'}, {'1', 'a'}, {'1', 'b'}}},
      {"U_{5,4}", {{'a', '1'}, {'b', '1'}, {'1', 'b'}}},
      {"U_8", {{'a', 'a'}, {'b', '1'}, {'1', 'b'}}},
      {"U_{5,5}", {{'a', '1'}, {'1', 'a'}, {'b', '1'}, {'1', 'b'}}},
  };
  return t;
}

Permutation letter(char c) {
  if (c == 'a') return Permutation::parse_cycles("(1,2)", 3);
  if (c == 'b') return Permutation::parse_cycles("(1,2,3)", 3);
  return Permutation::identity(3);
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  const PermGroup g = s3::product_group();
  const auto classes = conjugacy_class_reps(g);
  const double elapsed = seconds_since(t0);
  o.require(classes.size() == 22, std::to_string(classes.size()) + " classes");
  std::map<std::string, PermGroup> computed;
  for (const auto& c : classes) computed[c.label] = c.representative;
  std::size_t matched = 0;
  for (const auto& [label, gens] : printed_classes()) {
    std::vector<Permutation> ps;
    for (const auto& [h, k] : gens) ps.push_back(letter(h).direct_sum(letter(k)));
    PermGroup printed = ps.empty() ? PermGroup::trivial(6) : PermGroup(6, ps);
    auto it = computed.find(label);
    if (it != computed.end() && it->second == printed) ++matched;
    else o.require(false, label + " differs");
  }
  o.require(elapsed < kSubgroupSeconds, "took " + std::to_string(elapsed) + " s");
  o.detail << (o.pass ? "" : "; ") << matched << "/22 classes equal the printed generator sets, "
           << static_cast<long>(elapsed * 1000) << " ms (limit " << kSubgroupSeconds << " s)";
  return o;
}

Outcome ac2(const Workbench& wb) {
  Outcome o;
  Report r = verify_ring_axioms(wb.ring());
  require_report(o, r);
  o.require(wb.ring().table() == wb.ring().double_coset_table(), "orbit and double-coset tables differ");
  o.detail << (o.pass ? "" : "; ") << r.find("associative")->detail << "; " << r.find("oracles_agree")->detail;
  return o;
}

Outcome ac3(const Workbench& wb) {
  Outcome o;
  Report r = verify_peirce(wb.ring(), wb.fixtures().peirce, wb.gamma());
  require_report(o, r);
  for (const char* c : {"idempotent", "orthogonal", "unit_decomposition", "multiplication_table", "eps3_central"})
    o.require(r.find(c) && r.find(c)->passed, std::string(c) + " missing or failed");
  o.detail << (o.pass ? "" : "; ") << r.find("multiplication_table")->detail << "; eps3 central";
  return o;
}

Outcome ac4(const Workbench& wb) {
  Outcome o;
  Report r = verify_gamma_morphism(wb.ring(), wb.gamma(), 20240601, kRoundTrips);
  require_report(o, r);
  const RatMatrix& p = wb.gamma().change_of_basis();
  o.require(p * wb.gamma().change_of_basis_inverse() == RatMatrix::identity(22), "inverse is not two-sided");
  std::size_t products = 0;
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j) {
      BlockElement a = Gamma::block_basis(i), b = Gamma::block_basis(j);
      if (wb.gamma().gamma(a * b) == wb.ring().multiply(wb.gamma().gamma(a), wb.gamma().gamma(b))) ++products;
    }
  o.require(products == 484, std::to_string(products) + "/484 products preserved");
  o.detail << (o.pass ? "" : "; ") << "22x22 inverse exact, " << products << "/484 block products preserved, "
           << kRoundTrips << " seeded round trips";
  return o;
}

Outcome ac5(const Workbench& wb) {
  Outcome o;
  const auto& fx = wb.fixtures().matrix;
  Report r = verify_lambda_theorem(wb.order(), fx);
  require_report(o, r);
  const IntMatrix m = wb.order().integral_representation();
  std::size_t members = 0;
  for (std::size_t j = 0; j < 22; ++j)
    if (lambda_membership(BlockElement::from_lattice(to_rational(m).col(j)))) ++members;
  o.require(members == 22, std::to_string(members) + "/22 columns satisfy the congruences");
  const IntMatrix lattice = congruence_lattice(displayed_system(), Integer(24));
  o.require(column_hnf(lattice) == column_hnf(m), "HNF of congruence lattice differs from HNF of M");
  Integer det = determinant(m);
  if (det < 0) det = -det;
  auto idx = lattice_index(lattice, IntMatrix::identity(22));
  o.require(idx && *idx == det, "index differs from |det M|");
  o.detail << (o.pass ? "" : "; ") << members << "/22 columns in the order, equal HNFs, |det M| = " << det.get_str()
           << " = index; " << r.find("matrix/entries")->detail;
  return o;
}

Outcome ac6(const Workbench& wb) {
  Outcome o;
  Report split = verify_localization_split(wb.order(), 20240601, kSplitSamples);
  require_report(o, split);
  Report l2 = verify_local_idempotents(wb.order(), wb.fixtures().blocks, wb.fixtures().corners, 2);
  Report l3 = verify_local_idempotents(wb.order(), wb.fixtures().blocks, wb.fixtures().corners, 3);
  require_report(o, l2);
  require_report(o, l3);
  for (const char* c : {"gamma_table", "radical_is_ideal", "radical_cubed", "residue_field"})
    o.require(l2.find(c) && l2.find(c)->passed, std::string(c) + " missing or failed");
  o.require(l3.find("dual_number_units") && l3.find("dual_number_units")->passed, "local unit criterion");
  o.detail << (o.pass ? "" : "; ") << split.find("random_blocks")->detail << "; " << l2.find("radical_cubed")->detail
           << "; " << l3.find("dual_number_units")->detail;
  return o;
}

Outcome ac7(const Workbench& wb) {
  Outcome o;
  std::ostringstream ranks;
  for (const char* name : {"a_prime", "local2", "local3"}) {
    Presentation p = wb.presentation(name);
    QuotientBasis qb = quotient_basis(p.quiver, p.relations, p.ring);
    o.require(qb.confluent && qb.rank == 10, std::string(name) + " rank " + std::to_string(qb.rank));
    ranks << name << "=" << qb.rank << " ";
    if (std::string(name) != "a_prime") {
      const unsigned long prime = std::string(name) == "local2" ? 2 : 3;
      Presentation pp = reduce_mod_p(p, prime);
      QuotientBasis qp = quotient_basis(pp.quiver, pp.relations, pp.ring);
      o.require(qp.confluent && qp.rank == 10, pp.name + " rank " + std::to_string(qp.rank));
      ranks << pp.name << "=" << qp.rank << " ";
    }
  }
  // τ7² = 2τ7 + τ1τ2 in the 2-local corner, τ7² = τ1τ2 after reduction
  Presentation l2 = wb.presentation("local2");
  const auto& q = l2.quiver;
  PathElement nonmono{{parse_path(q, "tau7 tau7"), 1}, {parse_path(q, "tau7"), -2}, {parse_path(q, "tau1 tau2"), -1}};
  bool present = false;
  for (const auto& rel : l2.relations) present = present || rel == nonmono;
  o.require(present, "non-monomial relation missing from the 2-local ideal");
  Presentation l2p = reduce_mod_p(l2, 2);
  PathElement reduced{{parse_path(q, "tau7 tau7"), 1}, {parse_path(q, "tau1 tau2"), 1}};
  bool reduced_present = false;
  for (const auto& rel : l2p.relations) reduced_present = reduced_present || rel == reduced;
  o.require(reduced_present, "mod-2 relation tau7^2 - tau1 tau2 missing");
  CornerAlgebra c2 = wb.corner_local(2);
  o.require(evaluate(c2, l2, nonmono) == zero_vector(c2.rank()), "tau7^2 - 2tau7 - tau1tau2 does not vanish");
  Report paths = wb.run("paths");
  require_report(o, paths);
  o.detail << (o.pass ? "" : "; ") << "ranks " << ranks.str() << "; presentations verified";
  return o;
}

Outcome ac8(const Workbench& wb) {
  Outcome o;
  const Fixtures& shipped = wb.fixtures();
  // shipped data: every cell agrees or carries an erratum
  Report all = wb.run("all");
  require_report(o, all);

  // an altered Peirce table cell is reported by cell
  {
    Fixtures f = shipped;
    f.peirce.table[1][2] = {{Rational(1), "e"}};
    Report r = verify_peirce(wb.ring(), f.peirce, wb.gamma());
    o.require(!r.passed() && names(r, "table[1][2]"), "altered Peirce cell not named");
  }
  // an altered entry of M is reported by cell
  {
    Fixtures f = shipped;
    f.matrix.M(0, 0) += 1;
    Report r = verify_representation_matrix(wb.order(), f.matrix);
    o.require(!r.passed() && names(r, "M[0][0]"), "altered M cell not named");
  }
  // a dropped erratum turns a documented cell back into a failure
  std::size_t errata = shipped.matrix.errata.size();
  if (errata) {
    Fixtures f = shipped;
    const std::string cell = f.matrix.errata.front().cell;
    f.matrix.errata.erase(f.matrix.errata.begin());
    Report r = verify_representation_matrix(wb.order(), f.matrix);
    o.require(!r.passed() && names(r, cell), "undocumented " + cell + " not reported");
  }
  // an altered coefficient vector is reported by label
  {
    Fixtures f = shipped;
    const std::size_t i = f.peirce.index_of("b_{e,g}");
    f.peirce.basis22[i][0] += Rational(1, 2);
    bool named = false;
    try {
      Gamma g(wb.ring(), f.peirce);
      Report r = verify_peirce(wb.ring(), f.peirce, g);
      named = !r.passed() && names(r, "b_{e,g}");
    } catch (const VerificationError& e) {
      named = std::string(e.what()).find("b_{e,g}") != std::string::npos;
    }
    o.require(named, "altered coefficient vector b_{e,g} not named");
  }
  o.detail << (o.pass ? "" : "; ") << "all stages pass with " << errata
           << " documented M errata; altered table cell, M cell, coefficient vector and dropped erratum are each"
              " reported by name";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = Clock::now();
  const std::string dir = argc > 1 ? argv[1] : resolve_fixture_dir(std::nullopt).string();
  bool ok = true;
  auto emit = [&](int n, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    ok = ok && o.pass;
    std::printf("AC%d %s %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
  };

  emit(1, ac1);
  std::unique_ptr<Workbench> wb;
  try {
    wb = std::make_unique<Workbench>(dir);
  } catch (const std::exception& e) {
    std::printf("cannot load fixtures from %s: %s\n", dir.c_str(), e.what());
    for (int n = 2; n <= 8; ++n) std::printf("AC%d FAIL fixtures unavailable\n", n);
    return 1;
  }
  emit(2, [&] { return ac2(*wb); });
  emit(3, [&] { return ac3(*wb); });
  emit(4, [&] { return ac4(*wb); });
  emit(5, [&] { return ac5(*wb); });
  emit(6, [&] { return ac6(*wb); });
  emit(7, [&] { return ac7(*wb); });
  emit(8, [&] { return ac8(*wb); });

  const double total = seconds_since(t0);
  const bool in_budget = total < kTotalSeconds;
  std::printf("total %.2f s (limit %.0f s) %s\n", total, kTotalSeconds, in_budget ? "PASS" : "FAIL");
  return ok && in_budget ? 0 : 1;
}

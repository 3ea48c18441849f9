#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bisetforge/errors.hpp"
#include "bisetforge/perm_groups.hpp"
#include "bisetforge/workbench.hpp"

using namespace bisetforge;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Options {
  bool json = false;
  std::optional<std::string> fixture_dir;
  std::string emit;
  std::string out = "fixtures.out";
  std::string group_spec;
  std::string lhs, rhs, ring = "Q";
  std::string stage = "all";
  std::string basis = "H";
};

void print(const Options& o, const std::string& command, const std::string& status, const json& payload,
           const std::string& human) {
  if (o.json) {
    std::cout << json{{"command", command}, {"status", status}, {"payload", payload}}.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

int cmd_subgroups(const Options& o) {
  const PermGroup g = parse_group_spec(o.group_spec);
  const auto classes = conjugacy_class_reps(g);
  const bool standard = classes.size() == 22 && classes[0].label == "U_{0,0}";
  json rows = json::array();
  std::ostringstream os;
  os << pad("label", 12) << pad("order", 7) << pad("conjugates", 12) << "generators\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    std::string gens = standard ? s3::product_classes()[i].generator_text : c.representative.describe();
    rows.push_back({{"label", c.label},
                    {"order", c.representative.order()},
                    {"class_size", c.class_size},
                    {"generators", gens},
                    {"cycles", c.representative.describe()}});
    os << pad(c.label, 12) << pad(std::to_string(c.representative.order()), 7)
       << pad(std::to_string(c.class_size), 12) << gens << "\n";
  }
  os << classes.size() << " classes, |G| = " << g.order() << "\n";
  print(o, "subgroups", "pass", {{"group", o.group_spec}, {"order", g.order()}, {"classes", rows}}, os.str());
  return kPass;
}

/// "label:coef,...", a Peirce name (e, eps2, b_{e,g}), an H or subgroup label, or "1".
BurnsideElement parse_element(const BurnsideRing& r, const Fixtures* fx, const std::string& text, Ring ring) {
  if (text.find(':') != std::string::npos) return r.parse(text, ring);
  if (text == "1") return r.one(ring);
  if (fx) {
    for (const auto& [name, v] : fx->peirce.idempotents)
      if (name == text) return r.make(v, ring);
    for (std::size_t i = 0; i < fx->peirce.labels.size(); ++i)
      if (fx->peirce.labels[i] == text) return r.make(fx->peirce.basis22[i], ring);
  }
  return r.basis(r.context().index_of_label(text), ring);
}

int cmd_mult(const Options& o) {
  const Ring ring = parse_ring(o.ring);
  const BurnsideRing& r = BurnsideRing::s3();
  std::optional<Fixtures> fx;
  try {
    fx = Fixtures::load(resolve_fixture_dir(o.fixture_dir));
  } catch (const FixtureError&) {
    // named Peirce elements are unavailable; labels and coefficient lists still work
  }
  BurnsideElement a = parse_element(r, fx ? &*fx : nullptr, o.lhs, ring);
  BurnsideElement b = parse_element(r, fx ? &*fx : nullptr, o.rhs, ring);
  BurnsideElement p = r.multiply(a, b);
  json coeffs = json::object();
  const auto labels = r.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (p.coeffs[i] != 0) coeffs[labels[i]] = to_string(p.coeffs[i]);
  print(o, "mult", "pass",
        {{"ring", std::string(ring_name(ring))}, {"lhs", r.format(a)}, {"rhs", r.format(b)}, {"product", r.format(p)},
         {"coefficients", coeffs}},
        r.format(p) + "\n");
  return kPass;
}

int cmd_verify(const Options& o) {
  Workbench wb(resolve_fixture_dir(o.fixture_dir));
  Report rep = wb.run(o.stage);
  const std::string status = rep.passed() ? "pass" : "fail";
  print(o, "verify", status, rep.to_json(), rep.summary());
  return rep.passed() ? kPass : kFail;
}

int cmd_table(const Options& o) {
  const BurnsideRing& r = BurnsideRing::s3();
  if (o.basis == "H") {
    json t = r.table().to_json(r.labels());
    std::ostringstream os;
    const auto labels = r.labels();
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j) {
        BurnsideElement x = r.multiply(r.basis(i), r.basis(j));
        os << labels[i] << " * " << labels[j] << " = " << r.format(x) << "\n";
      }
    print(o, "table", "pass", t, os.str());
    return kPass;
  }
  if (o.basis == "peirce") {
    Workbench wb(resolve_fixture_dir(o.fixture_dir));
    const auto& fx = wb.fixtures().peirce;
    const auto t = peirce_table(wb.ring(), fx, wb.gamma());
    json rows = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        row.push_back(to_json(t[i][j]));
        if (!t[i][j].empty()) os << fx.labels[i] << " * " << fx.labels[j] << " = " << to_string(t[i][j]) << "\n";
      }
      rows.push_back(row);
    }
    print(o, "table", "pass", {{"basis", fx.labels}, {"table", rows}}, os.str());
    return kPass;
  }
  throw DomainError("unknown basis " + o.basis + " (expected H or peirce)");
}

int cmd_emit(const Options& o) {
  if (o.emit != "fixtures") throw DomainError("--emit only supports 'fixtures'");
  Workbench wb(resolve_fixture_dir(o.fixture_dir));
  wb.emit_fixtures(o.out);
  print(o, "emit", "pass", {{"out", o.out}}, "fixtures written to " + o.out + "\n");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations in the double Burnside ring of S3"};
  app.set_version_flag("--version", "bisetforge 0.1.0");
  app.add_flag("--json", o.json, "Print a JSON result instead of a text summary");
  app.add_option("--fixture-dir", o.fixture_dir, "Fixture directory (default: $BISETFORGE_FIXTURES or the source tree)");
  app.add_option("--emit", o.emit, "Regenerate shipped data from first principles (only: fixtures)");
  app.add_option("--out", o.out, "Output directory for --emit");

  auto* sub = app.add_subcommand("subgroups", "Conjugacy classes of subgroups");
  sub->add_option("group", o.group_spec, "S3, S3xS3, Cn, Sn or generators in cycle notation")->required();

  auto* mult = app.add_subcommand("mult", "Product of two elements of B_R(S3,S3)");
  mult->add_option("lhs", o.lhs, "label:coef list, Peirce name or basis label")->required();
  mult->add_option("rhs", o.rhs, "label:coef list, Peirce name or basis label")->required();
  mult->add_option("--ring", o.ring, "Q, Z, Z2, Z3, F2 or F3");

  auto* verify = app.add_subcommand("verify", "Run verification stages");
  verify->add_option("--stage", o.stage, "subgroups|ring|peirce|gamma|lambda|local2|local3|paths|all");

  auto* table = app.add_subcommand("table", "Multiplication table");
  table->add_option("--basis", o.basis, "H (structure constants) or peirce");

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (!o.emit.empty()) return cmd_emit(o);
    if (*sub) return cmd_subgroups(o);
    if (*mult) return cmd_mult(o);
    if (*verify) return cmd_verify(o);
    if (*table) return cmd_table(o);
    std::cerr << app.help();
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    if (o.json) {
      std::cout << json{{"status", "error"}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kUsage;
  }
}

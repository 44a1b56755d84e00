// qci: compute quandle cocycle state-sum invariants of braid-closure knots
// and ribbon-concordance obstruction verdicts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qci/builtins.hpp"
#include "qci/concordance.hpp"
#include "qci/invariant.hpp"
#include "qci/io.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVerdictSchema = "qci.verdict/1";
constexpr const char* kMultisetSchema = "qci.multiset/1";
constexpr const char* kColoringsSchema = "qci.colorings/1";
constexpr const char* kReportSchema = "qci.report/1";
constexpr const char* kOmegaSchema = "qci.omega/1";
constexpr const char* kEnumerationSchema = "qci.enumeration/1";

int default_jobs() {
  if (const char* env = std::getenv("QCI_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

qci::FiniteQuandle resolve_quandle(const std::string& arg) {
  if (auto builtin = qci::builtin_quandle(arg)) return *builtin;
  return qci::load_quandle_file(arg);
}

qci::BraidWord resolve_braid(const std::string& braid_text, const std::string& knot_name) {
  if (!braid_text.empty() && !knot_name.empty())
    throw std::invalid_argument("give either --braid or --knot, not both");
  if (!braid_text.empty()) return qci::parse_braid(braid_text);
  if (auto builtin = qci::builtin_knot(knot_name)) return *builtin;
  throw std::invalid_argument("unknown knot '" + knot_name +
                              "' (expected torus:<l> or sknot:<m>,<n>)");
}

qci::Cocycle2 resolve_cocycle2(const std::string& arg, const qci::FiniteQuandle& quandle) {
  if (auto builtin = qci::builtin_cocycle2(arg)) {
    if (!(builtin->quandle() == quandle))
      throw std::invalid_argument("builtin cocycle '" + arg + "' lives on a different quandle");
    return *builtin;
  }
  return qci::cocycle2_from_file_data(qci::load_cocycle_file(arg), quandle);
}

// "v:c,v:c" with values mod n.
qci::WeightMultiset parse_multiset(const std::string& text, int modulus) {
  qci::WeightMultiset out(modulus);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("multiset item '" + item + "' is not value:count");
    out.add(std::stoi(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    pos = comma + 1;
  }
  return out;
}

json multiset_json(const qci::WeightMultiset& m) {
  json counts = json::array();
  for (const auto& [value, count] : m.counts()) counts.push_back({value, count});
  return json{{"modulus", m.modulus()}, {"total", m.total()}, {"counts", counts},
              {"support", m.support()}};
}

json verdict_json(const qci::Verdict& v, json inputs) {
  json out{{"schema", kVerdictSchema},
           {"theorem", v.theorem},
           {"obstructed", v.obstructed},
           {"direction", {{"upper", v.upper}, {"lower", v.lower}}},
           {"context", v.context},
           {"inputs", std::move(inputs)}};
  if (v.witness) {
    out["witness"] = multiset_json(*v.witness);
    if (v.witness_member) out["witness"]["member"] = *v.witness_member;
    if (v.missing_value) out["witness"]["missing_value"] = *v.missing_value;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

void print_verdict_text(const qci::Verdict& v) {
  std::cout << v.theorem << ": " << v.upper << " >= " << v.lower << " : "
            << (v.obstructed ? "obstructed" : "not obstructed");
  if (!v.context.empty()) std::cout << " [" << v.context << "]";
  std::cout << "\n";
  if (v.witness) {
    std::cout << "  witness";
    if (v.witness_member) std::cout << " (member " << *v.witness_member << ")";
    std::cout << ": " << v.witness->to_string();
    if (v.missing_value) std::cout << "  missing value: " << *v.missing_value;
    std::cout << "\n";
  }
}

std::string pass_fail(bool pass) { return pass ? "pass" : "fail"; }

void emit(const json& value) { std::cout << value.dump(2) << "\n"; }

struct Options {
  bool json_output = false;
  int jobs = default_jobs();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle cocycle invariants of braid-closure knots"};
  app.require_subcommand(1);
  Options opt;

  // ---- quandle ----
  auto* quandle_cmd = app.add_subcommand("quandle", "build, verify, and store quandles");
  quandle_cmd->require_subcommand(1);

  struct {
    std::string name, out;
  } qmake;
  auto* quandle_make = quandle_cmd->add_subcommand("make", "construct a builtin quandle");
  quandle_make->add_option("--name", qmake.name, "builtin name: r<p> or q6")->required();
  quandle_make->add_option("--out", qmake.out, "output file (default: stdout)");
  quandle_make->callback([&] {
    auto quandle = qci::builtin_quandle(qmake.name);
    if (!quandle) throw std::invalid_argument("unknown builtin quandle '" + qmake.name + "'");
    if (qmake.out.empty())
      qci::save_quandle(std::cout, *quandle);
    else
      qci::save_quandle_file(qmake.out, *quandle);
  });

  struct {
    std::string file, name;
  } qverify;
  auto* quandle_verify = quandle_cmd->add_subcommand("verify", "scan the three quandle axioms");
  quandle_verify->add_option("--file", qverify.file, "quandle file");
  quandle_verify->add_option("--name", qverify.name, "builtin name");
  quandle_verify->callback([&] {
    if (qverify.file.empty() == qverify.name.empty())
      throw std::invalid_argument("give exactly one of --file or --name");
    qci::QuandleTable table;
    if (!qverify.file.empty()) {
      std::ifstream in(qverify.file);
      if (!in) throw std::invalid_argument("cannot open " + qverify.file);
      // Re-scan raw to report axiom failures instead of refusing to load.
      std::string first;
      std::getline(in, first);
      int n = 0;
      try {
        n = std::stoi(first);
      } catch (const std::exception&) {
        throw std::invalid_argument("quandle file order line is not an integer");
      }
      if (n < 1) throw std::invalid_argument("quandle file order must be positive");
      table.assign(static_cast<std::size_t>(n), {});
      for (auto& row : table) {
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("truncated quandle file");
        std::istringstream row_in(line.substr(0, line.find('#')));
        int v;
        while (row_in >> v) row.push_back(v);
      }
    } else {
      auto quandle = qci::builtin_quandle(qverify.name);
      if (!quandle) throw std::invalid_argument("unknown builtin quandle '" + qverify.name + "'");
      table = quandle->table();
    }
    qci::AxiomReport report = qci::verify_quandle_axioms(table);
    if (opt.json_output) {
      json out{{"schema", kReportSchema},
               {"idempotency", report.idempotency.pass},
               {"right_invertibility", report.right_invertibility.pass},
               {"self_distributivity", report.self_distributivity.pass},
               {"all_pass", report.all_pass()}};
      if (!report.idempotency.pass) out["idempotency_witness"] = report.idempotency.element;
      if (!report.right_invertibility.pass)
        out["right_invertibility_witness"] = {report.right_invertibility.column,
                                              report.right_invertibility.first,
                                              report.right_invertibility.second};
      if (!report.self_distributivity.pass)
        out["self_distributivity_witness"] = {report.self_distributivity.a,
                                              report.self_distributivity.b,
                                              report.self_distributivity.c};
      emit(out);
    } else {
      std::cout << "axioms: " << pass_fail(report.idempotency.pass) << " "
                << pass_fail(report.right_invertibility.pass) << " "
                << pass_fail(report.self_distributivity.pass) << "\n";
      if (!report.right_invertibility.pass)
        std::cout << "  right-invertibility fails in column " << report.right_invertibility.column
                  << "\n";
      if (!report.self_distributivity.pass)
        std::cout << "  self-distributivity fails at (" << report.self_distributivity.a << ","
                  << report.self_distributivity.b << "," << report.self_distributivity.c << ")\n";
    }
  });

  struct {
    std::string file, name;
  } qinfo;
  auto* quandle_info = quandle_cmd->add_subcommand("info", "order, type, and labels");
  quandle_info->add_option("--file", qinfo.file, "quandle file");
  quandle_info->add_option("--name", qinfo.name, "builtin name");
  quandle_info->callback([&] {
    if (qinfo.file.empty() == qinfo.name.empty())
      throw std::invalid_argument("give exactly one of --file or --name");
    qci::FiniteQuandle quandle =
        !qinfo.file.empty() ? qci::load_quandle_file(qinfo.file) : resolve_quandle(qinfo.name);
    int type = qci::quandle_type(quandle);
    if (opt.json_output) {
      json out{{"schema", kReportSchema}, {"order", quandle.order()}, {"type", type}};
      if (quandle.has_labels()) out["labels"] = quandle.labels();
      emit(out);
    } else {
      std::cout << "order: " << quandle.order() << "\ntype: " << type << "\n";
      if (quandle.has_labels()) {
        std::cout << "labels:";
        for (const auto& label : quandle.labels()) std::cout << " " << label;
        std::cout << "\n";
      }
    }
  });

  // ---- cocycle ----
  auto* cocycle_cmd = app.add_subcommand("cocycle", "generate, verify, and enumerate cocycles");
  cocycle_cmd->require_subcommand(1);

  auto* cocycle_gen = cocycle_cmd->add_subcommand("gen", "generate a builtin cocycle");
  cocycle_gen->require_subcommand(1);

  struct {
    int p = 0;
    std::string out;
  } gen_mochizuki;
  auto* gen_moch = cocycle_gen->add_subcommand("mochizuki", "polynomial 3-cocycle on R_p");
  gen_moch->add_option("--p", gen_mochizuki.p, "odd prime")->required();
  gen_moch->add_option("--out", gen_mochizuki.out, "output file (default: stdout)");
  gen_moch->callback([&] {
    qci::Cocycle3 theta = qci::mochizuki_cocycle(gen_mochizuki.p);
    if (gen_mochizuki.out.empty())
      qci::save_cocycle(std::cout, theta);
    else
      qci::save_cocycle_file(gen_mochizuki.out, theta);
  });

  struct {
    std::string out;
  } gen_q6;
  auto* gen_q6z4 = cocycle_gen->add_subcommand("q6z4", "Z_4 2-cocycle on q6");
  gen_q6z4->add_option("--out", gen_q6.out, "output file (default: stdout)");
  gen_q6z4->callback([&] {
    qci::Cocycle2 phi = qci::q6z4_cocycle();
    if (gen_q6.out.empty())
      qci::save_cocycle(std::cout, phi);
    else
      qci::save_cocycle_file(gen_q6.out, phi);
  });

  struct {
    std::string file, quandle;
  } cverify;
  auto* cocycle_verify = cocycle_cmd->add_subcommand("verify", "scan the cocycle conditions");
  cocycle_verify->add_option("--file", cverify.file, "cocycle file")->required();
  cocycle_verify->add_option("--quandle", cverify.quandle, "builtin name or quandle file")
      ->required();
  cocycle_verify->callback([&] {
    qci::FiniteQuandle quandle = resolve_quandle(cverify.quandle);
    qci::CocycleFileData data = qci::load_cocycle_file(cverify.file);
    if (data.order != quandle.order())
      throw std::invalid_argument("cocycle order does not match quandle order");
    qci::Coefficients coeff{data.modulus};
    qci::CocycleReport report = data.kind == qci::CocycleKind::cocycle2
                                    ? qci::verify_2cocycle(quandle, coeff, data.values)
                                    : qci::verify_3cocycle(quandle, coeff, data.values);
    if (opt.json_output) {
      json out{{"schema", kReportSchema},
               {"kind", data.kind == qci::CocycleKind::cocycle2 ? "cocycle2" : "cocycle3"},
               {"vanishing", report.vanishing.pass},
               {"identity", report.identity.pass},
               {"all_pass", report.all_pass()}};
      if (!report.vanishing.pass) out["vanishing_witness"] = report.vanishing.witness;
      if (!report.identity.pass) {
        out["identity_witness"] = report.identity.witness;
        out["identity_sides"] = {report.identity.lhs, report.identity.rhs};
      }
      emit(out);
    } else {
      std::cout << "conditions: " << pass_fail(report.vanishing.pass) << " "
                << pass_fail(report.identity.pass) << "\n";
      if (!report.identity.pass) {
        std::cout << "  identity fails at (";
        for (std::size_t i = 0; i < report.identity.witness.size(); ++i)
          std::cout << (i ? "," : "") << report.identity.witness[i];
        std::cout << "): " << report.identity.lhs << " != " << report.identity.rhs << "\n";
      }
    }
  });

  struct {
    std::string quandle;
    int modulus = 0;
    std::uint64_t cap = 10000;
    bool list = false;
  } cenum;
  auto* cocycle_enum = cocycle_cmd->add_subcommand("enumerate", "solve for all 2-cocycles");
  cocycle_enum->add_option("--quandle", cenum.quandle, "builtin name or quandle file")->required();
  cocycle_enum->add_option("--modulus", cenum.modulus, "coefficient modulus n")->required();
  cocycle_enum->add_option("--cap", cenum.cap, "refuse to list more than this many solutions");
  cocycle_enum->add_flag("--list", cenum.list, "print every solution table");
  cocycle_enum->callback([&] {
    qci::FiniteQuandle quandle = resolve_quandle(cenum.quandle);
    auto enumeration = qci::enumerate_2cocycles(quandle, qci::Coefficients{cenum.modulus});
    auto count = enumeration.count();
    json solutions = json::array();
    if (cenum.list || opt.json_output) {
      if (count.exceeds(cenum.cap)) throw qci::EnumerationCapExceeded(count, cenum.cap);
      enumeration.for_each([&](const std::vector<int>& table) { solutions.push_back(table); });
    }
    if (opt.json_output) {
      json out{{"schema", kEnumerationSchema},
               {"order", quandle.order()},
               {"modulus", cenum.modulus},
               {"count", count.overflow ? json(nullptr) : json(count.value)},
               {"solutions", std::move(solutions)}};
      emit(out);
    } else {
      if (count.overflow)
        std::cout << "solutions: > 2^64\n";
      else
        std::cout << "solutions: " << count.value << "\n";
      if (cenum.list)
        for (const auto& table : solutions) {
          std::string line;
          for (const auto& v : table) line += std::to_string(v.get<int>()) + " ";
          if (!line.empty()) line.pop_back();
          std::cout << line << "\n";
        }
    }
  });

  // ---- knot ----
  auto* knot_cmd = app.add_subcommand("knot", "braid closures and colorings");
  knot_cmd->require_subcommand(1);

  struct {
    std::string braid, knot, quandle;
    bool list = false;
  } kcolor;
  auto* knot_colorings = knot_cmd->add_subcommand("colorings", "count (and list) colorings");
  knot_colorings->add_option("--braid", kcolor.braid, "braid word, e.g. \"3: s1^3 s2^-1\"");
  knot_colorings->add_option("--knot", kcolor.knot, "builtin knot: torus:<l> or sknot:<m>,<n>");
  knot_colorings->add_option("--quandle", kcolor.quandle, "builtin name or quandle file")
      ->required();
  knot_colorings->add_flag("--list", kcolor.list, "print each coloring's top tuple");
  knot_colorings->callback([&] {
    qci::FiniteQuandle quandle = resolve_quandle(kcolor.quandle);
    qci::ClosedDiagram diagram(resolve_braid(kcolor.braid, kcolor.knot));
    auto colorings = qci::enumerate_colorings(diagram, quandle, opt.jobs);
    if (opt.json_output) {
      json out{{"schema", kColoringsSchema},
               {"strands", diagram.strands()},
               {"count", colorings.size()}};
      if (kcolor.list) {
        json list = json::array();
        for (const auto& c : colorings) list.push_back(c.top);
        out["colorings"] = std::move(list);
      }
      emit(out);
    } else {
      std::cout << "colorings: " << colorings.size() << "\n";
      if (kcolor.list)
        for (const auto& c : colorings) {
          for (std::size_t i = 0; i < c.top.size(); ++i)
            std::cout << (i ? " " : "") << c.top[i];
          std::cout << "\n";
        }
    }
  });

  // ---- invariant ----
  auto* invariant_cmd = app.add_subcommand("invariant", "state-sum invariants");
  invariant_cmd->require_subcommand(1);

  struct {
    std::string braid, knot, quandle, cocycle;
  } iphi;
  auto* invariant_phi = invariant_cmd->add_subcommand("phi", "weight multiset of a knot");
  invariant_phi->add_option("--braid", iphi.braid, "braid word");
  invariant_phi->add_option("--knot", iphi.knot, "builtin knot");
  invariant_phi->add_option("--quandle", iphi.quandle, "builtin name or quandle file")->required();
  invariant_phi->add_option("--cocycle", iphi.cocycle, "builtin name or cocycle2 file")
      ->required();
  invariant_phi->callback([&] {
    qci::FiniteQuandle quandle = resolve_quandle(iphi.quandle);
    qci::Cocycle2 phi = resolve_cocycle2(iphi.cocycle, quandle);
    qci::BraidWord braid = resolve_braid(iphi.braid, iphi.knot);
    qci::WeightMultiset result = qci::phi_invariant(braid, quandle, phi, opt.jobs);
    if (opt.json_output) {
      json out = multiset_json(result);
      out["schema"] = kMultisetSchema;
      emit(out);
    } else {
      std::cout << result.to_string() << "\n";
    }
  });

  struct {
    std::string braid, knot, quandle, cocycle;
    int r = 0;
  } iomega;
  auto* invariant_omega =
      invariant_cmd->add_subcommand("omega", "indexed multiset family of a twisted torus");
  invariant_omega->add_option("--braid", iomega.braid, "braid word");
  invariant_omega->add_option("--knot", iomega.knot, "builtin knot");
  invariant_omega->add_option("--quandle", iomega.quandle, "builtin name or quandle file")
      ->required();
  invariant_omega->add_option("--cocycle", iomega.cocycle, "builtin name or cocycle2 file")
      ->required();
  invariant_omega->add_option("--r", iomega.r, "twist count (multiple of the quandle type)")
      ->required();
  invariant_omega->callback([&] {
    qci::FiniteQuandle quandle = resolve_quandle(iomega.quandle);
    qci::Cocycle2 phi = resolve_cocycle2(iomega.cocycle, quandle);
    qci::BraidWord braid = resolve_braid(iomega.braid, iomega.knot);
    qci::OmegaFamily family = qci::omega_family(braid, quandle, phi, iomega.r, opt.jobs);
    if (opt.json_output) {
      json members = json::array();
      for (const auto& member : family.members) members.push_back(multiset_json(member));
      emit(json{{"schema", kOmegaSchema},
                {"modulus", family.modulus},
                {"r", iomega.r},
                {"base", multiset_json(family.base)},
                {"members", std::move(members)},
                {"members_recur_infinitely", family.members_recur_infinitely}});
    } else {
      std::cout << "base: " << family.base.to_string() << "\n";
      for (std::size_t k = 0; k < family.members.size(); ++k)
        std::cout << "member " << k << ": " << family.members[k].to_string() << "\n";
      std::cout << "(each member recurs without bound over the integer index)\n";
    }
  });

  struct {
    int q = 0, theta = 0;
  } its;
  auto* invariant_ts =
      invariant_cmd->add_subcommand("twistspun", "reference multiset of a 2-twist-spun torus knot");
  invariant_ts->add_option("--q", its.q, "odd prime q of T(2,q)")->required();
  invariant_ts->add_option("--theta", its.theta,
                           "cocycle modulus p (default q; p != q collapses to zeros)");
  invariant_ts->callback([&] {
    qci::WeightMultiset result = (its.theta == 0 || its.theta == its.q)
                                     ? qci::twist_spun_reference(its.q)
                                     : qci::twist_spun_reference_mismatched(its.theta, its.q);
    if (opt.json_output) {
      json out = multiset_json(result);
      out["schema"] = kMultisetSchema;
      emit(out);
    } else {
      std::cout << result.to_string() << "\n";
    }
  });

  // ---- concordance ----
  auto* concordance_cmd = app.add_subcommand("concordance", "ribbon concordance obstructions");
  concordance_cmd->require_subcommand(1);

  struct {
    int modulus = 0;
    std::string upper, lower;
  } c11;
  auto* thm11 = concordance_cmd->add_subcommand("thm11", "multiset support-inclusion test");
  thm11->add_option("--mod", c11.modulus, "common modulus")->required();
  thm11->add_option("--upper", c11.upper, "upper multiset, e.g. 0:3,1:6")->required();
  thm11->add_option("--lower", c11.lower, "lower multiset")->required();
  thm11->callback([&] {
    qci::Verdict verdict = qci::theorem11_check(parse_multiset(c11.upper, c11.modulus),
                                                parse_multiset(c11.lower, c11.modulus));
    if (opt.json_output)
      emit(verdict_json(verdict, json{{"mod", c11.modulus},
                                      {"upper", c11.upper},
                                      {"lower", c11.lower}}));
    else
      print_verdict_text(verdict);
  });

  struct {
    int modulus = 0;
    std::string upper, lower;
  } c12;
  auto* thm12 = concordance_cmd->add_subcommand("thm12", "family-wise support-inclusion test");
  thm12->add_option("--mod", c12.modulus, "common modulus")->required();
  thm12->add_option("--upper-base", c12.upper, "base multiset of the upper family")->required();
  thm12->add_option("--lower-base", c12.lower, "base multiset of the lower family")->required();
  thm12->callback([&] {
    auto family = [&](const std::string& text) {
      qci::WeightMultiset base = parse_multiset(text, c12.modulus);
      qci::OmegaFamily out{c12.modulus, base, {}, true};
      for (int k = 0; k < c12.modulus; ++k) out.members.push_back(qci::scale_multiset(k, base));
      return out;
    };
    qci::Verdict verdict = qci::theorem12_check(family(c12.upper), family(c12.lower));
    if (opt.json_output)
      emit(verdict_json(verdict, json{{"mod", c12.modulus},
                                      {"upper_base", c12.upper},
                                      {"lower_base", c12.lower}}));
    else
      print_verdict_text(verdict);
  });

  struct {
    int q = 0, qprime = 0;
    bool mirror = false;
  } c21;
  auto* cor21 = concordance_cmd->add_subcommand("cor21", "twist-spun torus knot obstructions");
  cor21->add_option("--q", c21.q, "odd prime")->required();
  cor21->add_option("--qprime", c21.qprime, "second odd prime (pair form)");
  cor21->add_flag("--mirror", c21.mirror, "compare against the orientation reverse");
  cor21->callback([&] {
    if (c21.mirror == (c21.qprime != 0))
      throw std::invalid_argument("give exactly one of --qprime or --mirror");
    auto [forward, backward] = c21.mirror ? qci::corollary21_mirror_report(c21.q)
                                          : qci::corollary21_report(c21.q, c21.qprime);
    json inputs{{"q", c21.q}};
    if (c21.mirror)
      inputs["mirror"] = true;
    else
      inputs["qprime"] = c21.qprime;
    if (opt.json_output)
      emit(json::array({verdict_json(forward, inputs), verdict_json(backward, inputs)}));
    else {
      print_verdict_text(forward);
      print_verdict_text(backward);
    }
  });

  struct {
    int l = 0, m = 0, n = 0, r = 0, s = 0;
  } c43;
  auto* cor43 = concordance_cmd->add_subcommand("cor43", "twisted torus-over-S(m,n) obstruction");
  cor43->add_option("--l", c43.l)->required();
  cor43->add_option("--m", c43.m)->required();
  cor43->add_option("--n", c43.n)->required();
  cor43->add_option("--r", c43.r)->required();
  cor43->add_option("--s", c43.s)->required();
  cor43->callback([&] {
    qci::Verdict verdict = qci::corollary43_report(c43.l, c43.m, c43.n, c43.r, c43.s);
    if (opt.json_output)
      emit(verdict_json(verdict, json{{"l", c43.l},
                                      {"m", c43.m},
                                      {"n", c43.n},
                                      {"r", c43.r},
                                      {"s", c43.s}}));
    else
      print_verdict_text(verdict);
  });

  for (CLI::App* cmd : {quandle_make, quandle_verify, quandle_info, gen_moch, gen_q6z4,
                        cocycle_verify, cocycle_enum, knot_colorings, invariant_phi,
                        invariant_omega, invariant_ts, thm11, thm12, cor21, cor43}) {
    cmd->add_flag("--json", opt.json_output, "emit JSON instead of text");
    cmd->add_option("--jobs", opt.jobs, "worker threads for enumeration (env QCI_JOBS)");
  }

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

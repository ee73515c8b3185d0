// Command-line front end: subgroup counting, lattice enumeration, Hasse
// diagram export, three-way verification and the count-matrix identity.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 resource limit exceeded.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgl/formulas.hpp"
#include "fgl/group.hpp"
#include "fgl/lattice.hpp"
#include "fgl/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace fgl;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int effective_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  return 1;
#endif
}

// "4,8", "Z4xZ8", "z2 x z12" or "1" for the trivial group.
std::vector<long> parse_group_spec(const std::string& raw) {
  std::vector<long> moduli;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t pos = 0;
    long v;
    try {
      v = std::stol(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group spec token '" + token + "'");
    }
    if (pos != token.size() || v < 1)
      throw std::invalid_argument("bad group spec token '" + token + "'");
    if (v > 1) moduli.push_back(v);  // Z1 factors contribute nothing
    token.clear();
  };
  for (char c : raw) {
    if (c == ',' || c == 'x' || c == 'X' || c == '*') {
      flush();
    } else if (c == 'Z' || c == 'z' || c == ' ' || c == '\t') {
      if (!token.empty()) flush();
    } else {
      token += c;
    }
  }
  flush();
  return moduli;
}

CountKind parse_kind(const std::string& s) {
  if (s == "all") return CountKind::AllSubgroups;
  if (s == "maximal") return CountKind::Maximal;
  if (s == "cyclic") return CountKind::Cyclic;
  if (s == "elements") return CountKind::Elements;
  throw std::invalid_argument("unsupported kind '" + s + "'");
}

int cmd_count(const std::string& spec, const std::string& kind,
              const std::string& format) {
  GroupDescriptor g = normalize(parse_group_spec(spec));
  CountReport rep = count_report(g, parse_kind(kind));
  if (format == "json") {
    std::cout << rep.to_json() << "\n";
  } else if (format == "csv") {
    std::cout << rep.to_csv();
  } else {
    std::cout << "group " << rep.group << " (" << to_string(rep.kind)
              << ", source " << to_string(rep.source) << ")\n";
    for (const auto& [o, c] : rep.by_order)
      std::cout << "  order " << o.get_str() << ": " << c.get_str() << "\n";
    std::cout << "total " << rep.total().get_str() << "\n";
  }
  return 0;
}

std::string matrix_json(const SubgroupMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.k(); ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < m.k(); ++j) {
      if (j) os << ",";
      os << m.entry(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string record_json(const SubgroupMatrix& m) {
  std::ostringstream os;
  os << "{\"matrix\":" << matrix_json(m) << ",\"generators\":[";
  auto gens = generators(m);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < gens[i].size(); ++j) {
      if (j) os << ",";
      os << gens[i][j];
    }
    os << "]";
  }
  os << "],\"order\":" << subgroup_order(m).get_str()
     << ",\"cyclic\":" << (is_cyclic(m) ? "true" : "false") << "}";
  return os.str();
}

std::vector<SubgroupMatrix> enumerate_maybe_filtered(const PGroupType& t,
                                                     long order_filter,
                                                     int jobs) {
  if (order_filter < 0) return enumerate(t, jobs);
  long o = order_filter;
  int e = 0;
  while (o > 1 && o % t.prime == 0) {
    o /= t.prime;
    ++e;
  }
  if (o != 1 || e > t.exponent_sum())
    throw std::invalid_argument("--order must be a power of " +
                                std::to_string(t.prime) + " dividing " +
                                t.order().get_str());
  return enumerate_of_order(t, e, jobs);
}

int cmd_enumerate(const std::string& spec, long order_filter, int jobs) {
  GroupDescriptor g = normalize(parse_group_spec(spec));
  auto pd = primary_decomposition(g);
  if (pd.components.size() <= 1) {
    std::cout << "[";
    bool first = true;
    if (!pd.components.empty()) {
      const auto& t = pd.components.begin()->second;
      for (const auto& m : enumerate_maybe_filtered(t, order_filter, jobs)) {
        if (!first) std::cout << ",\n ";
        first = false;
        std::cout << record_json(m);
      }
    } else if (order_filter < 0 || order_filter == 1) {
      std::cout << "{\"matrix\":[],\"generators\":[],\"order\":1,"
                   "\"cyclic\":true}";
    }
    std::cout << "]\n";
    return 0;
  }
  if (order_filter >= 0)
    throw std::invalid_argument(
        "--order is only supported for p-group specs");
  // Composite group: one matrix listing per primary component. A subgroup
  // of the full group is the componentwise product of one choice per
  // component.
  std::cout << "{\"group\":\"" << g.label() << "\",\"components\":[";
  bool first_comp = true;
  for (const auto& [p, t] : pd.components) {
    if (!first_comp) std::cout << ",\n";
    first_comp = false;
    std::cout << "{\"prime\":" << p << ",\"subgroups\":[";
    bool first = true;
    for (const auto& m : enumerate(t, jobs)) {
      if (!first) std::cout << ",\n  ";
      first = false;
      std::cout << record_json(m);
    }
    std::cout << "]}";
  }
  std::cout << "],\"note\":\"subgroups of the full group are componentwise "
               "products of one subgroup per component\"}\n";
  return 0;
}

int cmd_hasse(const std::string& spec, long cap, int jobs) {
  GroupDescriptor g = normalize(parse_group_spec(spec));
  auto pd = primary_decomposition(g);
  if (pd.components.size() > 1)
    throw std::invalid_argument("hasse requires a p-group spec");
  if (g.order() > cap)
    throw ResourceLimitError("group order exceeds --cap " +
                             std::to_string(cap));
  std::vector<SubgroupMatrix> ms;
  if (!pd.components.empty())
    ms = enumerate(pd.components.begin()->second, jobs);
  std::cout << "digraph subgroup_lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < ms.size(); ++i)
    std::cout << "  n" << i << " [label=\"" << subgroup_order(ms[i]).get_str()
              << " " << matrix_json(ms[i]) << "\"];\n";
  if (ms.empty()) std::cout << "  n0 [label=\"1 []\"];\n";
  for (auto [lo, hi] : covering_edges(ms))
    std::cout << "  n" << lo << " -> n" << hi << ";\n";
  std::cout << "}\n";
  return 0;
}

// All p-group types with p in {2, 3}, rank <= 3 and exponent sum <= 6,
// plus a few composite samples.
std::vector<GroupDescriptor> builtin_suite() {
  std::vector<GroupDescriptor> suite;
  for (long p : {2, 3}) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> exps;
      auto gen = [&](auto&& self, int minv, int budget) -> void {
        if (static_cast<int>(exps.size()) == k) {
          std::vector<long> factors;
          for (int e : exps) factors.push_back(ipow(p, e));
          suite.push_back(GroupDescriptor{factors});
          return;
        }
        int remaining = k - static_cast<int>(exps.size());
        for (int e = minv; e * remaining <= budget; ++e) {
          exps.push_back(e);
          self(self, e, budget - e);
          exps.pop_back();
        }
      };
      gen(gen, 1, 6);
    }
  }
  for (auto m : {std::vector<long>{6}, {2, 12}, {6, 6}})
    suite.push_back(normalize(m));
  return suite;
}

void print_report(const CrossCheckReport& rep) {
  std::cout << rep.group << ":\n";
  auto opt = [](const std::optional<Int>& v) {
    return v ? v->get_str() : std::string("-");
  };
  for (const auto& r : rep.rows)
    std::cout << "  " << to_string(r.kind) << " order " << r.order.get_str()
              << ": formula=" << opt(r.formula)
              << " enumeration=" << opt(r.enumeration)
              << " oracle=" << opt(r.oracle)
              << (r.match ? "" : "  MISMATCH") << "\n";
  std::cout << "  mismatches: " << rep.mismatches() << "\n";
}

int cmd_verify(const std::string& spec, bool suite, long cap, int jobs,
               bool json) {
  std::vector<GroupDescriptor> groups;
  if (suite) {
    groups = builtin_suite();
  } else {
    groups.push_back(normalize(parse_group_spec(spec)));
  }
  size_t mismatches = 0;
  for (const auto& g : groups) {
    auto rep = cross_check(g, cap, jobs);
    if (json)
      std::cout << rep.to_json() << "\n";
    else
      print_report(rep);
    mismatches += rep.mismatches();
  }
  if (mismatches) {
    std::cerr << "verification failed: " << mismatches << " mismatching rows\n";
    return kExitMismatch;
  }
  return 0;
}

int cmd_quadform(long p, int n, bool want_det, bool check_pd) {
  auto m = build_quadform(p, n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j)
      std::cout << (j ? " " : "") << m.entry(i, j).get_str();
    std::cout << "\n";
  }
  if (want_det && n >= 1) {
    auto r = det_quadform(p, n);
    std::cout << "det " << r.det.get_str() << " identity "
              << (r.matches_identity ? "OK" : "FAILED") << "\n";
    if (!r.matches_identity) return kExitMismatch;
  }
  if (check_pd) {
    bool pd = is_positive_definite(m);
    std::cout << (pd ? "positive definite" : "NOT positive definite") << "\n";
    if (!pd) return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup lattice toolkit for finite abelian groups"};
  app.require_subcommand(1);

  std::string spec, kind = "all", format = "text";
  long order_filter = -1, cap = kDefaultOracleCap;
  long qp = 2;
  int qn = 0, jobs = 0;
  bool suite = false, want_det = false, check_pd = false, json = false;

  auto* count = app.add_subcommand("count", "count subgroups or elements");
  count->add_option("group", spec, "group spec, e.g. 4,8 or Z4xZ8")
      ->required();
  count->add_option("--kind", kind, "all|maximal|cyclic|elements");
  count->add_option("--format", format, "text|json|csv");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list subgroup matrices as JSON");
  enumerate_cmd->add_option("group", spec)->required();
  enumerate_cmd->add_option("--order", order_filter,
                            "only subgroups of this order");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* hasse = app.add_subcommand("hasse", "emit the Hasse diagram as DOT");
  hasse->add_option("group", spec)->required();
  hasse->add_option("--cap", cap, "largest group order to accept");
  hasse->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand(
      "verify", "cross-check formula vs enumeration vs oracle");
  verify->add_option("group", spec);
  verify->add_flag("--suite", suite, "run the built-in group matrix");
  verify->add_option("--cap", cap, "oracle order cap");
  verify->add_option("--jobs", jobs);
  verify->add_flag("--json", json, "emit JSON reports");

  auto* quadform =
      app.add_subcommand("quadform", "print the count matrix A_p(n)");
  quadform->add_option("p", qp, "prime")->required();
  quadform->add_option("n", qn, "size parameter")->required();
  quadform->add_flag("--det", want_det, "print determinant and identity check");
  quadform->add_flag("--check-pd", check_pd, "run the Sylvester check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(spec, kind, format);
    if (*enumerate_cmd)
      return cmd_enumerate(spec, order_filter, effective_jobs(jobs));
    if (*hasse) return cmd_hasse(spec, cap, effective_jobs(jobs));
    if (*verify) {
      if (!suite && spec.empty()) {
        std::cerr << "verify: need a group spec or --suite\n";
        return kExitUsage;
      }
      return cmd_verify(spec, suite, cap, effective_jobs(jobs), json);
    }
    if (*quadform) return cmd_quadform(qp, qn, want_det, check_pd);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

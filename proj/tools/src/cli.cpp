#include "aslkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "aslkit/asl.hpp"
#include "aslkit/dot.hpp"
#include "aslkit/enumerate.hpp"
#include "aslkit/errors.hpp"
#include "aslkit/json_io.hpp"
#include "aslkit/lattice.hpp"
#include "aslkit/polytope.hpp"
#include "aslkit/realization.hpp"
#include "aslkit/uniqueness.hpp"

namespace aslkit::cli {

namespace {

using nlohmann::json;

struct Flags {
  bool json = false;
  bool no_timestamp = false;
};

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string display_name(RealizationKind kind) {
  switch (kind) {
    case RealizationKind::Order: return "ORDER";
    case RealizationKind::Chain: return "CHAIN";
    case RealizationKind::ChainDual: return "CHAIN_DUAL";
  }
  return "?";
}

std::string set_text(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : p.set_to_labels(s)) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

std::string point_text(const LatticePoint& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(x.coords[i]);
  }
  return out + ")";
}

std::string relation_text(const Poset& p, const CompatibleRelation& r) {
  return set_text(p, r.alpha.members) + " * " + set_text(p, r.alpha_prime.members) + " = " +
         set_text(p, r.beta.members) + " * " + set_text(p, r.beta_prime.members);
}

std::string difference_text(const Poset& p, const RelationDifference& d) {
  return "pair " + set_text(p, d.alpha.members) + ", " + set_text(p, d.alpha_prime.members) +
         ": " + set_text(p, d.first.beta.members) + " * " + set_text(p, d.first.beta_prime.members) +
         " vs " + set_text(p, d.second.beta.members) + " * " +
         set_text(p, d.second.beta_prime.members);
}

class Session {
 public:
  Session(const Flags& flags, std::ostream& out, std::ostream& err)
      : flags_(flags), out_(out), err_(err) {}

  int analyze(const std::string& path) {
    const IdealLattice lattice(load_poset(path));
    const Poset& p = lattice.poset();
    const bool soc = is_direct_sum_of_chains(p);
    const auto components = connected_components(p);
    const auto chains = maximal_chains(p);
    const auto pairs = incomparable_ideal_pairs(lattice);
    const auto cond = check_condition_ii(lattice);
    if (flags_.json) {
      json comps = json::array();
      for (ElementSet c : components) comps.push_back(subset_to_json(p, c));
      json ch = json::array();
      for (const auto& c : chains) {
        json labels = json::array();
        for (ElementIndex i : c.elements) labels.push_back(p.label(i));
        ch.push_back(labels);
      }
      return emit({{"command", "analyze"},
                   {"poset", poset_to_json(p)},
                   {"n", p.size()},
                   {"ideals", lattice.size()},
                   {"sum_of_chains", soc},
                   {"components", comps},
                   {"maximal_chains", ch},
                   {"incomparable_pairs", pairs.size()},
                   {"join_irreducibles", join_irreducibles(lattice).size()},
                   {"relation_systems_coincide", cond.holds}});
    }
    out_ << "n=" << p.size() << " |I(P)|=" << lattice.size()
         << " sum-of-chains=" << (soc ? "true" : "false") << "\n";
    out_ << "components: " << components.size() << "\n";
    out_ << "maximal chains: " << chains.size() << "\n";
    out_ << "incomparable ideal pairs: " << pairs.size() << "\n";
    out_ << "relation systems coincide: " << (cond.holds ? "true" : "false") << "\n";
    return kSuccess;
  }

  int lattice(const std::string& path, bool dot) {
    const IdealLattice lattice(load_poset(path));
    const Poset& p = lattice.poset();
    if (dot) {
      out_ << lattice_dot(lattice);
      return kSuccess;
    }
    if (flags_.json) {
      json doc = lattice_to_json(lattice);
      doc["command"] = "lattice";
      return emit(doc);
    }
    out_ << "|I(P)| = " << lattice.size() << "\n";
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      out_ << "I" << k << "  rank " << rank(lattice[k]) << "  " << set_text(p, lattice[k].members)
           << "\n";
    }
    return kSuccess;
  }

  int vertices(const std::string& path, const std::string& polytope) {
    const IdealLattice lattice(load_poset(path));
    const Poset& p = lattice.poset();
    const bool order = polytope == "order";
    const auto points = order ? order_polytope_vertices(lattice) : chain_polytope_vertices(lattice);
    if (flags_.json) {
      json pts = json::array();
      for (const auto& x : points) pts.push_back(point_to_json(x));
      return emit({{"command", "vertices"},
                   {"polytope", polytope},
                   {"coordinates", p.labels()},
                   {"count", points.size()},
                   {"vertices", pts}});
    }
    out_ << polytope << " polytope: " << points.size() << " vertices\n";
    out_ << "coordinates:";
    for (const auto& l : p.labels()) out_ << " " << l;
    out_ << "\n";
    for (const auto& x : points) out_ << point_text(x) << "\n";
    return kSuccess;
  }

  int relations(const std::string& path, const std::string& kind_name) {
    const IdealLattice lattice(load_poset(path));
    const RealizationKind kind = parse_realization_kind(kind_name);
    const PairMap pm = straightening_relations(lattice, kind);
    if (flags_.json) {
      json doc = relations_to_json(lattice, pm);
      doc["command"] = "relations";
      doc["kind"] = to_string(kind);
      return emit(doc);
    }
    out_ << display_name(kind) << ": " << pm.size() << " straightening relations\n";
    for (const auto& r : pm.relations()) out_ << relation_text(lattice.poset(), r) << "\n";
    return kSuccess;
  }

  int compare(const std::string& path) {
    const IdealLattice lattice(load_poset(path));
    const auto report = check_condition_ii(lattice);
    if (flags_.json) {
      json doc = condition_ii_to_json(lattice.poset(), report);
      doc["command"] = "compare";
      return emit(doc);
    }
    for (const auto& c : report.comparisons) {
      out_ << display_name(c.first) << " vs " << display_name(c.second) << ": ";
      if (c.result.equal) {
        out_ << "equal\n";
      } else {
        out_ << "differ at " << difference_text(lattice.poset(), *c.result.witness) << "\n";
      }
    }
    out_ << "relation systems coincide: " << (report.holds ? "true" : "false") << "\n";
    return kSuccess;
  }

  int unique(const std::string& path, const std::string& certificate_path) {
    const IdealLattice lattice(load_poset(path));
    const Poset& p = lattice.poset();
    const auto verdict = check_unique(lattice);
    if (verdict.certificate) {
      const auto check = validate_certificate(p, *verdict.certificate);
      if (!check.accepted) {
        err_ << "error: emitted certificate failed validation: " << check.reason << "\n";
        return kVerificationFailed;
      }
      if (!certificate_path.empty()) {
        std::ofstream file(certificate_path);
        if (!file) throw ParseError("cannot write '" + certificate_path + "'");
        file << certificate_to_json(p, *verdict.certificate).dump(2) << "\n";
      }
    } else if (!certificate_path.empty()) {
      err_ << "note: no certificate written; the compatible ASL is not unique\n";
    }
    if (flags_.json) {
      json doc = verdict_to_json(p, verdict);
      doc["command"] = "unique";
      return emit(doc);
    }
    if (verdict.unique) {
      out_ << "UNIQUE\n";
      out_ << "certificate steps: " << verdict.certificate->steps.size() << "\n";
    } else {
      const auto& w = *verdict.witness;
      out_ << "NOT_UNIQUE\n";
      out_ << "witness kinds: " << display_name(w.first) << ", " << display_name(w.second) << "\n";
      out_ << "witness: " << difference_text(p, w.difference) << "\n";
    }
    return kSuccess;
  }

  int validate(const std::string& cert_path, const std::string& poset_path) {
    const Poset p = load_poset(poset_path);
    const auto cert = certificate_from_json(p, load_json(cert_path));
    const auto result = validate_certificate(p, cert);
    if (flags_.json) {
      json doc = {{"command", "validate-cert"}, {"accepted", result.accepted}};
      if (!result.accepted) doc["reason"] = result.reason;
      emit(doc);
    } else if (result.accepted) {
      out_ << "ACCEPTED\n";
    } else {
      out_ << "REJECTED: " << result.reason << "\n";
    }
    return result.accepted ? kSuccess : kVerificationFailed;
  }

  int search(const std::string& path, const SearchOptions& options) {
    const IdealLattice lattice(load_poset(path));
    const auto result = search_compatible_asls(lattice, options);
    if (flags_.json) {
      json doc = search_result_to_json(lattice, result);
      doc["command"] = "search";
      doc["max_degree"] = options.max_degree;
      return emit(doc);
    }
    out_ << "compatible ASLs: " << result.realizable.size() << "\n";
    out_ << "candidate pair maps: " << result.candidates << "\n";
    out_ << "search nodes: " << result.nodes << "\n";
    for (std::size_t i = 0; i < result.realizable.size(); ++i) {
      out_ << "[" << i << "]\n";
      for (const auto& r : result.realizable[i].relations()) {
        out_ << "  " << relation_text(lattice.poset(), r) << "\n";
      }
    }
    return kSuccess;
  }

  int corpus(const CorpusOptions& options) {
    const auto report = corpus_verify(options);
    const bool timing = !flags_.no_timestamp;
    if (flags_.json) {
      json doc = corpus_report_to_json(report, timing);
      doc["command"] = "corpus";
      doc["max_n"] = options.max_n;
      emit(doc);
    } else {
      out_ << std::left << std::setw(4) << "n" << std::setw(9) << "posets" << std::setw(10)
           << "expected" << std::setw(8) << "chains" << std::setw(12) << "partitions"
           << std::setw(10) << "coincide" << std::setw(9) << "unique" << std::setw(10)
           << "certified";
      if (timing) out_ << "seconds";
      out_ << "\n";
      for (const auto& t : report.tallies) {
        out_ << std::setw(4) << t.n << std::setw(9) << t.posets << std::setw(10)
             << (t.expected_posets ? std::to_string(*t.expected_posets) : "-") << std::setw(8)
             << t.sums_of_chains << std::setw(12) << t.partitions << std::setw(10)
             << t.condition_ii_holds << std::setw(9) << t.unique_checked << std::setw(10)
             << t.certificates_validated;
        if (timing) out_ << std::fixed << std::setprecision(3) << t.seconds;
        out_ << "\n";
      }
      out_ << "total posets: " << report.total_posets() << "\n";
      out_ << "counterexamples: " << report.counterexamples.size() << "\n";
      for (const auto& c : report.counterexamples) {
        out_ << "  n=" << c.n << ": " << c.reason << "\n";
      }
    }
    return report.ok() ? kSuccess : kVerificationFailed;
  }

  int hasse(const std::string& path) {
    out_ << hasse_dot(load_poset(path));
    return kSuccess;
  }

 private:
  int emit(json doc) {
    if (!flags_.no_timestamp) doc["generated_at"] = utc_now();
    out_ << doc.dump(2) << "\n";
    return kSuccess;
  }

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideal lattices, straightening laws and uniqueness of compatible ASLs", "aslkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_flag("--json", flags.json, "Emit machine-readable JSON");
  app.add_flag("--no-timestamp", flags.no_timestamp,
               "Omit timestamps and timings so output is reproducible");

  std::string poset_path, cert_path, out_path, polytope, kind;
  bool dot = false;
  bool parallel = false;
  SearchOptions search;
  CorpusOptions corpus;

  auto* analyze = app.add_subcommand("analyze", "Summarize a poset and its ideal lattice");
  analyze->add_option("poset", poset_path, "Poset JSON file")->required();

  auto* lattice = app.add_subcommand("lattice", "List the ideals of I(P)");
  lattice->add_option("poset", poset_path, "Poset JSON file")->required();
  lattice->add_flag("--dot", dot, "Emit the Hasse diagram of I(P) as DOT");

  auto* vertices = app.add_subcommand("vertices", "Vertices of the order or chain polytope");
  vertices->add_option("poset", poset_path, "Poset JSON file")->required();
  vertices->add_option("--polytope", polytope, "order or chain")
      ->required()
      ->check(CLI::IsMember({"order", "chain"}));

  auto* relations = app.add_subcommand("relations", "Straightening relations of a realization");
  relations->add_option("poset", poset_path, "Poset JSON file")->required();
  relations->add_option("--kind", kind, "order, chain or chain-dual")
      ->required()
      ->check(CLI::IsMember({"order", "chain", "chain-dual"}));

  auto* compare = app.add_subcommand("compare", "Compare the three canonical relation systems");
  compare->add_option("poset", poset_path, "Poset JSON file")->required();

  auto* unique = app.add_subcommand("unique", "Decide uniqueness of the compatible ASL on I(P)");
  unique->add_option("poset", poset_path, "Poset JSON file")->required();
  unique->add_option("--certificate", out_path, "Write the uniqueness certificate here");

  auto* validate = app.add_subcommand("validate-cert", "Check a uniqueness certificate");
  validate->add_option("certificate", cert_path, "Certificate JSON file")->required();
  validate->add_option("poset", poset_path, "Poset JSON file")->required();

  auto* search_cmd = app.add_subcommand("search", "Enumerate all realizable compatible ASLs");
  search_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  search_cmd->add_option("--max-degree", search.max_degree, "Degree bound for axiom checks")
      ->check(CLI::Range(2, 6));
  search_cmd->add_option("--budget", search.budget, "Maximum number of search nodes")
      ->check(CLI::PositiveNumber);

  auto* corpus_cmd = app.add_subcommand("corpus", "Verify the classification on all small posets");
  corpus_cmd->add_option("--max-n", corpus.max_n, "Largest poset size")
      ->check(CLI::Range(std::size_t{1}, kMaxCanonicalElements));
  corpus_cmd->add_flag("--parallel", parallel, "Use all hardware threads");

  auto* hasse = app.add_subcommand("hasse", "Emit the Hasse diagram of P as DOT");
  hasse->add_option("poset", poset_path, "Poset JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Session session(flags, out, err);
  try {
    if (*analyze) return session.analyze(poset_path);
    if (*lattice) return session.lattice(poset_path, dot);
    if (*vertices) return session.vertices(poset_path, polytope);
    if (*relations) return session.relations(poset_path, kind);
    if (*compare) return session.compare(poset_path);
    if (*unique) return session.unique(poset_path, out_path);
    if (*validate) return session.validate(cert_path, poset_path);
    if (*search_cmd) return session.search(poset_path, search);
    if (*corpus_cmd) {
      if (parallel) corpus.threads = std::max(2U, std::thread::hardware_concurrency());
      return session.corpus(corpus);
    }
    if (*hasse) return session.hasse(poset_path);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace aslkit::cli

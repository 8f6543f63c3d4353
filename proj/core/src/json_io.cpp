#include "aslkit/json_io.hpp"

#include <fstream>

#include "aslkit/errors.hpp"

namespace aslkit {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const json& as_array(const json& v, std::size_t expected, const char* what) {
  if (!v.is_array() || (expected != 0 && v.size() != expected)) {
    throw ParseError(std::string(what) + " must be an array" +
                     (expected ? " of length " + std::to_string(expected) : std::string()));
  }
  return v;
}

ElementIndex element_from_json(const Poset& p, const json& v, const char* what) {
  const std::string name = as_string(v, what);
  auto i = p.index_of(name);
  if (!i) throw ParseError(std::string(what) + " names unknown element '" + name + "'");
  return *i;
}

// Ideal fields of a certificate are parsed as plain subsets; the validator
// decides whether they are ideals.
Ideal loose_ideal(const Poset& p, const json& v) { return Ideal{subset_from_json(p, v)}; }

json pair_json(const Poset& p, Ideal a, Ideal b) {
  return json::array({subset_to_json(p, a.members), subset_to_json(p, b.members)});
}

json ideals_json(const Poset& p, const std::vector<Ideal>& ideals) {
  json out = json::array();
  for (const Ideal& g : ideals) out.push_back(subset_to_json(p, g.members));
  return out;
}

}  // namespace

Poset poset_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("poset document must be a JSON object");
  const json& elements = as_array(field(doc, "elements"), 0, "'elements'");
  std::vector<std::string> labels;
  for (const json& e : elements) labels.push_back(as_string(e, "element label"));
  std::vector<LabelCover> covers;
  if (doc.contains("covers")) {
    for (const json& c : as_array(doc.at("covers"), 0, "'covers'")) {
      as_array(c, 2, "cover");
      covers.emplace_back(as_string(c[0], "cover endpoint"), as_string(c[1], "cover endpoint"));
    }
  }
  return build_poset(std::move(labels), covers);
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Poset load_poset(const std::filesystem::path& path) { return poset_from_json(load_json(path)); }

json subset_to_json(const Poset& p, ElementSet s) { return p.set_to_labels(s); }

ElementSet subset_from_json(const Poset& p, const json& doc) {
  ElementSet out;
  for (const json& e : as_array(doc, 0, "element set")) {
    out = out.with(element_from_json(p, e, "element set entry"));
  }
  return out;
}

Ideal ideal_from_json(const IdealLattice& lattice, const json& doc) {
  return lattice.ideal(subset_from_json(lattice.poset(), doc));
}

json lattice_to_json(const IdealLattice& lattice) {
  const Poset& p = lattice.poset();
  return {{"n", p.size()}, {"size", lattice.size()}, {"ideals", ideals_json(p, lattice.ideals())}};
}

json point_to_json(const LatticePoint& x) {
  json out = json::array();
  for (const auto& c : x.coords) out.push_back(format_rational(c));
  return out;
}

LatticePoint point_from_json(const json& doc) {
  LatticePoint x;
  for (const json& c : as_array(doc, 0, "point")) {
    if (c.is_string()) {
      x.coords.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      x.coords.emplace_back(c.get<long long>());
    } else {
      throw ParseError("point coordinates must be rational strings or integers");
    }
  }
  return x;
}

json relations_to_json(const IdealLattice& lattice, const PairMap& relations) {
  const Poset& p = lattice.poset();
  json out = json::array();
  for (const auto& r : relations.relations()) {
    out.push_back({{"pair", pair_json(p, r.alpha, r.alpha_prime)},
                   {"rhs", pair_json(p, r.beta, r.beta_prime)}});
  }
  return {{"relations", out}};
}

PairMap relations_from_json(const IdealLattice& lattice, const json& doc) {
  std::vector<CompatibleRelation> out;
  for (const json& entry : as_array(field(doc, "relations"), 0, "'relations'")) {
    const json& pair = as_array(field(entry, "pair"), 2, "'pair'");
    const json& rhs = as_array(field(entry, "rhs"), 2, "'rhs'");
    out.push_back({ideal_from_json(lattice, pair[0]), ideal_from_json(lattice, pair[1]),
                   ideal_from_json(lattice, rhs[0]), ideal_from_json(lattice, rhs[1])});
  }
  return PairMap(std::move(out));
}

json difference_to_json(const Poset& p, const RelationDifference& d) {
  return {{"pair", pair_json(p, d.alpha, d.alpha_prime)},
          {"first_rhs", pair_json(p, d.first.beta, d.first.beta_prime)},
          {"second_rhs", pair_json(p, d.second.beta, d.second.beta_prime)}};
}

json condition_ii_to_json(const Poset& p, const ConditionIIReport& report) {
  json comparisons = json::array();
  for (const auto& c : report.comparisons) {
    json entry = {{"kinds", {to_string(c.first), to_string(c.second)}},
                  {"equal", c.result.equal}};
    if (c.result.witness) entry["witness"] = difference_to_json(p, *c.result.witness);
    comparisons.push_back(entry);
  }
  return {{"holds", report.holds}, {"comparisons", comparisons}};
}

json axiom_report_to_json(const Poset& p, const AslAxiomReport& report) {
  json out = {{"passed", report.passed()},
              {"max_degree", report.max_degree},
              {"standard_monomials", report.standard_monomials},
              {"products_checked", report.products_checked}};
  if (report.violation) {
    out["violation"] = {{"kind", to_string(report.violation->kind)},
                        {"message", report.violation->message},
                        {"first", ideals_json(p, report.violation->first)},
                        {"second", ideals_json(p, report.violation->second)}};
  }
  return out;
}

json realization_to_json(const IdealLattice& lattice, const MonomialRealization& r) {
  const Poset& p = lattice.poset();
  json generators = json::array();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    generators.push_back({{"ideal", subset_to_json(p, lattice[k].members)},
                          {"exponents", r.generators[k].exponents}});
  }
  return {{"x_variables", r.x_variables}, {"generators", generators}};
}

json search_result_to_json(const IdealLattice& lattice, const SearchResult& result) {
  json maps = json::array();
  for (const auto& pm : result.realizable) maps.push_back(relations_to_json(lattice, pm)["relations"]);
  return {{"candidates", result.candidates},
          {"nodes", result.nodes},
          {"exhausted", result.exhausted},
          {"found", result.realizable.size()},
          {"pair_maps", maps}};
}

json certificate_to_json(const Poset& p, const UniquenessCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json refutations = json::array();
    for (const auto& r : s.refutations) {
      refutations.push_back({
          {"direction", to_string(r.direction)},
          {"alternative", pair_json(p, r.beta, r.beta_prime)},
          {"alpha", subset_to_json(p, r.alpha.members)},
          {"alpha_prime", subset_to_json(p, r.alpha_prime.members)},
          {"p", r.p ? json(p.label(*r.p)) : json(nullptr)},
          {"q", p.label(r.q)},
          {"alpha_1", subset_to_json(p, r.alpha_1.members)},
          {"inductive_step", r.inductive_step},
          {"inductive_rhs", pair_json(p, r.inductive_beta, r.inductive_beta_prime)},
          {"collision",
           {ideals_json(p, {r.left.begin(), r.left.end()}),
            ideals_json(p, {r.right.begin(), r.right.end()})}},
      });
    }
    steps.push_back({{"pair", pair_json(p, s.alpha, s.alpha_prime)},
                     {"k", s.k},
                     {"rhs", pair_json(p, s.beta, s.beta_prime)},
                     {"refutations", refutations}});
  }
  return {{"format", "aslkit-uniqueness-certificate"}, {"version", 1}, {"steps", steps}};
}

UniquenessCertificate certificate_from_json(const Poset& p, const json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "aslkit-uniqueness-certificate") {
    throw ParseError("not a uniqueness certificate document");
  }
  if (doc.value("version", 0) != 1) throw ParseError("unsupported certificate version");
  auto triple = [&](const json& v) {
    as_array(v, 3, "collision monomial");
    return std::array<Ideal, 3>{loose_ideal(p, v[0]), loose_ideal(p, v[1]), loose_ideal(p, v[2])};
  };
  UniquenessCertificate cert;
  for (const json& s : as_array(field(doc, "steps"), 0, "'steps'")) {
    CertificateStep step;
    const json& pair = as_array(field(s, "pair"), 2, "'pair'");
    const json& rhs = as_array(field(s, "rhs"), 2, "'rhs'");
    step.alpha = loose_ideal(p, pair[0]);
    step.alpha_prime = loose_ideal(p, pair[1]);
    step.k = as_index(field(s, "k"), "'k'");
    step.beta = loose_ideal(p, rhs[0]);
    step.beta_prime = loose_ideal(p, rhs[1]);
    for (const json& r : as_array(field(s, "refutations"), 0, "'refutations'")) {
      Refutation ref;
      const std::string dir = as_string(field(r, "direction"), "'direction'");
      if (dir == "up") ref.direction = RefutationDirection::Up;
      else if (dir == "down") ref.direction = RefutationDirection::Down;
      else throw ParseError("'direction' must be \"up\" or \"down\"");
      const json& alt = as_array(field(r, "alternative"), 2, "'alternative'");
      ref.beta = loose_ideal(p, alt[0]);
      ref.beta_prime = loose_ideal(p, alt[1]);
      ref.alpha = loose_ideal(p, field(r, "alpha"));
      ref.alpha_prime = loose_ideal(p, field(r, "alpha_prime"));
      const json& pv = field(r, "p");
      if (!pv.is_null()) ref.p = element_from_json(p, pv, "'p'");
      ref.q = element_from_json(p, field(r, "q"), "'q'");
      ref.alpha_1 = loose_ideal(p, field(r, "alpha_1"));
      ref.inductive_step = as_index(field(r, "inductive_step"), "'inductive_step'");
      const json& ind = as_array(field(r, "inductive_rhs"), 2, "'inductive_rhs'");
      ref.inductive_beta = loose_ideal(p, ind[0]);
      ref.inductive_beta_prime = loose_ideal(p, ind[1]);
      const json& col = as_array(field(r, "collision"), 2, "'collision'");
      ref.left = triple(col[0]);
      ref.right = triple(col[1]);
      step.refutations.push_back(ref);
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

json verdict_to_json(const Poset& p, const UniquenessVerdict& verdict) {
  json out = {{"verdict", verdict.unique ? "UNIQUE" : "NOT_UNIQUE"}};
  if (verdict.certificate) out["certificate_steps"] = verdict.certificate->steps.size();
  if (verdict.witness) {
    out["witness"] = {{"kinds", {to_string(verdict.witness->first), to_string(verdict.witness->second)}},
                      {"difference", difference_to_json(p, verdict.witness->difference)}};
  }
  return out;
}

json corpus_report_to_json(const CorpusReport& report, bool include_timing) {
  json tallies = json::array();
  for (const auto& t : report.tallies) {
    json entry = {{"n", t.n},
                  {"posets", t.posets},
                  {"expected_posets", t.expected_posets ? json(*t.expected_posets) : json(nullptr)},
                  {"sums_of_chains", t.sums_of_chains},
                  {"partitions", t.partitions},
                  {"condition_ii_holds", t.condition_ii_holds},
                  {"unique_checked", t.unique_checked},
                  {"certificates_validated", t.certificates_validated}};
    if (include_timing) entry["seconds"] = t.seconds;
    tallies.push_back(entry);
  }
  json counterexamples = json::array();
  for (const auto& c : report.counterexamples) {
    json entry = {{"n", c.n}, {"poset", poset_to_json(c.poset)}, {"reason", c.reason}};
    if (c.witness) {
      entry["witness"] = {{"kinds", {to_string(c.witness->first), to_string(c.witness->second)}},
                          {"difference", difference_to_json(c.poset, c.witness->difference)}};
    }
    counterexamples.push_back(entry);
  }
  json out = {{"ok", report.ok()},
              {"total_posets", report.total_posets()},
              {"total_sums_of_chains", report.total_sums_of_chains()},
              {"tallies", tallies},
              {"counterexamples", counterexamples}};
  if (include_timing) out["seconds"] = report.seconds;
  return out;
}

}  // namespace aslkit

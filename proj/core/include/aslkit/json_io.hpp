#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "aslkit/enumerate.hpp"
#include "aslkit/polytope.hpp"
#include "aslkit/realization.hpp"
#include "aslkit/uniqueness.hpp"

// JSON documents exchanged by the command-line tool. Ideals and other element
// subsets are written as arrays of labels sorted lexicographically; readers
// accept any order. Malformed documents raise ParseError.
namespace aslkit {

/// {"elements": [...], "covers": [[lower, upper], ...]}
Poset poset_from_json(const nlohmann::json& doc);
nlohmann::json poset_to_json(const Poset& p);
Poset load_poset(const std::filesystem::path& path);
nlohmann::json load_json(const std::filesystem::path& path);

nlohmann::json subset_to_json(const Poset& p, ElementSet s);
ElementSet subset_from_json(const Poset& p, const nlohmann::json& doc);
/// Throws NotAnIdeal when the subset is not down-closed.
Ideal ideal_from_json(const IdealLattice& lattice, const nlohmann::json& doc);

nlohmann::json lattice_to_json(const IdealLattice& lattice);

/// ["1", "0", "1/2", ...]
nlohmann::json point_to_json(const LatticePoint& x);
/// Accepts rational strings or integers.
LatticePoint point_from_json(const nlohmann::json& doc);

/// {"kind": ..., "relations": [{"pair": [a, a'], "rhs": [b, b']}, ...]}
nlohmann::json relations_to_json(const IdealLattice& lattice, const PairMap& relations);
PairMap relations_from_json(const IdealLattice& lattice, const nlohmann::json& doc);

nlohmann::json difference_to_json(const Poset& p, const RelationDifference& d);
nlohmann::json condition_ii_to_json(const Poset& p, const ConditionIIReport& report);
nlohmann::json axiom_report_to_json(const Poset& p, const AslAxiomReport& report);
nlohmann::json realization_to_json(const IdealLattice& lattice, const MonomialRealization& r);
nlohmann::json search_result_to_json(const IdealLattice& lattice, const SearchResult& result);

nlohmann::json certificate_to_json(const Poset& p, const UniquenessCertificate& cert);
UniquenessCertificate certificate_from_json(const Poset& p, const nlohmann::json& doc);
nlohmann::json verdict_to_json(const Poset& p, const UniquenessVerdict& verdict);

nlohmann::json corpus_report_to_json(const CorpusReport& report, bool include_timing);

}  // namespace aslkit

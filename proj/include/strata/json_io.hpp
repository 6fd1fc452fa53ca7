#ifndef STRATA_JSON_IO_HPP
#define STRATA_JSON_IO_HPP

#include "strata/complexes.hpp"
#include "strata/dgla.hpp"
#include "strata/gstrata.hpp"
#include "strata/varieties.hpp"

#include "json.hpp"

#include <string>

namespace strata {

using Json = nlohmann::ordered_json;

// All rational entries serialize as canonical literals "p/q" (or "p");
// integers are accepted on input.  Matrices are flat row-major arrays with
// shapes implied by the surrounding document.

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json dimvec_to_json(const DimVec& v);
DimVec dimvec_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, int rows, int cols);

Json complex_to_json(const ComplexStructure& c);
ComplexStructure complex_from_json(const Json& j);

Json chain_map_to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

Json subwitness_to_json(const SubcomplexWitness& w);
SubcomplexWitness subwitness_from_json(const Json& j);

Json repclass_to_json(const RepClass& c);
RepClass repclass_from_json(const Json& j);

Json gwitness_to_json(const GMapWitness& w, const RepClass& declared_rank);

Json dgla_to_json(const DGLAStructure& e);
DGLAStructure dgla_from_json(const Json& j);

/// Canonical text form: 2-space indent, trailing newline.  Witness files
/// round-trip byte-identically through parse + canonical_dump.
std::string canonical_dump(const Json& j);

/// Validation entry point for documents: schema autodetected from the keys
/// (complex / chain map / subcomplex witness / g-map witness / dgla).
struct CheckOutcome {
    bool parsed = false; // false: malformed JSON or literals (CLI exit 2)
    bool valid = false;  // false with parsed: structural violations (exit 1)
    Json report;
};

CheckOutcome check_document(const std::string& text);

} // namespace strata

#endif

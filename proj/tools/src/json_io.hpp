#ifndef GAMMADEC_TOOLS_JSON_IO_HPP
#define GAMMADEC_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "gammadec/complex.hpp"
#include "gammadec/decomposition.hpp"
#include "gammadec/vectors.hpp"

namespace gammadec::tools {

/// Exact integers as JSON numbers when they fit in 64 bits, decimal
/// strings otherwise.
nlohmann::json int_json(const Int& x);
nlohmann::json vector_json(const IntegerVector& v);
nlohmann::json face_json(Face f);
nlohmann::json complex_json(const SimplicialComplex& k);

/// {f, h, gamma (when h is palindromic), flag, witness, betti, ...}
nlohmann::json invariants_json(const SimplicialComplex& k);

nlohmann::json decomposition_json(const BooleanDecomposition& dec);
nlohmann::json extraction_json(const ExtractionResult& res);

}  // namespace gammadec::tools

#endif

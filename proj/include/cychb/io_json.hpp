#pragma once

#include <nlohmann/json.hpp>

#include "cychb/correspond.hpp"
#include "cychb/quiver.hpp"
#include "cychb/reduced.hpp"

namespace cychb {

using ojson = nlohmann::ordered_json;

ojson field_to_json(Field f);
Field field_from_json(const nlohmann::json& j);

/// ascending coefficient strings; [] is the zero polynomial
ojson poly_to_json(const Poly& p);
Poly poly_from_json(Field f, Var v, const nlohmann::json& j);

/// ascending t-degree of x-polynomials
ojson tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(Field f, const nlohmann::json& j);

/// rows of polynomial arrays
ojson pmat_to_json(const PMat& m);
PMat pmat_from_json(Field f, const nlohmann::json& j);

ojson higgs_to_json(const CyclicHiggsData& H);
CyclicHiggsData higgs_from_json(const nlohmann::json& j);

ojson spectral_data_to_json(const SpectralData& SD);
SpectralData spectral_data_from_json(const nlohmann::json& j);

ojson path_elem_to_json(const PathElem& a);
PathElem path_elem_from_json(const nlohmann::json& j);

ojson reduced_elem_to_json(const ReducedElem& a);

/// multiplication table as an n x n array of coefficient vectors
ojson table_algebra_to_json(const TableAlgebra& alg);

} // namespace cychb

#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "carlitz/motives.hpp"

namespace carlitz {

using Json = nlohmann::json;

// FieldParams: {"p":2,"e":1,"d":2,"modulus":[1,1,1]} (coefficients low-to-high).
Json field_params_to_json(const FieldParams& P);
FieldParams field_params_from_json(const Json& j);

// LaurentU: {"lead":-2,"prec":64,"coeffs":[[...digit vectors...]]}; exactly
// known values carry "prec":"exact".
Json laurent_to_json(const Field& F, const LaurentU& x);
LaurentU laurent_from_json(const Field& F, const Json& j);

// TSeries: {"tprec":M,"kind":"series","coeffs":[LaurentU,...]}.
Json tseries_to_json(const Field& F, const TSeries& x);
TSeries tseries_from_json(const Field& F, const Json& j);

// BlockMat: nested arrays of TSeries.
Json blockmat_to_json(const Field& F, const BlockMat& m);
BlockMat blockmat_from_json(const Field& F, const Json& j);

// {"residual_valuation": int | "infinity", "pass": bool, "precision": int}.
Json residual_to_json(const Residual& r);

Json fixture_to_json(const Field& F, const MotiveDesc& M);
Json fixture_to_json(const Field& F, const DualMotiveDesc& M);
Json fixture_to_json(const Field& F, const TModuleDesc& E);

struct LoadedFixture {
  std::unique_ptr<Field> field;
  std::string type;  // "motive" | "dual" | "tmodule"
  std::optional<MotiveDesc> motive;
  std::optional<DualMotiveDesc> dual;
  std::optional<TModuleDesc> tmodule;
};

LoadedFixture fixture_from_json(const Json& j);

}  // namespace carlitz

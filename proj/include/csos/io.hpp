#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "csos/bethe.hpp"
#include "csos/formfactor.hpp"
#include "csos/identities.hpp"
#include "csos/model.hpp"

namespace csos {

using json = nlohmann::json;

json to_json(const ModelParams& p);
ModelParams params_from_json(const json& j);

json to_json(const BetheState& s);
BetheState state_from_json(const json& j);

json to_json(const FormFactorResult& f);
FormFactorResult formfactor_from_json(const json& j);

json to_json(const std::vector<IdentityReport>& reps);
std::vector<IdentityReport> reports_from_json(const json& j);

struct SweepRow {
    int N = 0;
    cplx value;
    double gap = 0.0;
    double runtime_ms = 0.0;
};

// Header: N,value_re,value_im,gap,runtime_ms
std::string to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> rows_from_csv(const std::string& text);

json to_json(const std::vector<SweepRow>& rows);

} // namespace csos

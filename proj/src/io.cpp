#include "csos/io.hpp"

#include <iomanip>
#include <sstream>

namespace csos {

json to_json(const ModelParams& p) {
    return {{"r", p.r}, {"L", p.L}, {"tau_re", p.tau.real()}, {"tau_im", p.tau.imag()}, {"N", p.N}};
}

ModelParams params_from_json(const json& j) {
    try {
        return ModelParams::make(j.at("r").get<int>(), j.at("L").get<int>(),
                                 {j.value("tau_re", 0.0), j.at("tau_im").get<double>()}, j.at("N").get<int>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad ModelParams json: ") + e.what());
    }
}

json to_json(const BetheState& s) {
    return {{"label", {{"k", s.label.k}, {"ell", s.label.ell}}},
            {"roots", s.roots},
            {"beta", s.beta},
            {"residual", s.residual},
            {"N", s.N}};
}

BetheState state_from_json(const json& j) {
    try {
        BetheState s;
        s.label.k = j.at("label").at("k").get<int>();
        s.label.ell = j.at("label").at("ell").get<int>();
        s.roots = j.at("roots").get<std::vector<double>>();
        s.beta = j.at("beta").get<double>();
        s.residual = j.at("residual").get<double>();
        s.N = j.at("N").get<int>();
        return s;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad BetheState json: ") + e.what());
    }
}

json to_json(const FormFactorResult& f) {
    json parts = json::object();
    for (const auto& [k, v] : f.parts) parts[k] = {{"re", v.real()}, {"im", v.imag()}};
    return {{"value_re", f.value.real()},
            {"value_im", f.value.imag()},
            {"site", f.site},
            {"gamma_tilde", f.gamma_tilde},
            {"parts", parts}};
}

FormFactorResult formfactor_from_json(const json& j) {
    try {
        FormFactorResult f;
        f.value = {j.at("value_re").get<double>(), j.at("value_im").get<double>()};
        f.site = j.at("site").get<int>();
        f.gamma_tilde = j.at("gamma_tilde").get<double>();
        for (const auto& [k, v] : j.at("parts").items())
            f.parts[k] = {v.at("re").get<double>(), v.at("im").get<double>()};
        return f;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad FormFactorResult json: ") + e.what());
    }
}

json to_json(const std::vector<IdentityReport>& reps) {
    json a = json::array();
    for (const auto& r : reps) a.push_back({{"identity", r.identity}, {"n", r.n}, {"gap", r.gap}, {"seed", r.seed}});
    return a;
}

std::vector<IdentityReport> reports_from_json(const json& j) {
    std::vector<IdentityReport> out;
    for (const auto& e : j)
        out.push_back({e.at("identity").get<std::string>(), e.at("n").get<int>(), e.at("gap").get<double>(),
                       e.at("seed").get<std::uint64_t>()});
    return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "N,value_re,value_im,gap,runtime_ms\n" << std::setprecision(17);
    for (const auto& r : rows)
        os << r.N << ',' << r.value.real() << ',' << r.value.imag() << ',' << r.gap << ',' << r.runtime_ms << '\n';
    return os.str();
}

std::vector<SweepRow> rows_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    if (line != "N,value_re,value_im,gap,runtime_ms") throw ValidationError("unexpected csv header");
    std::vector<SweepRow> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        SweepRow r;
        double re, im;
        char c1, c2, c3, c4;
        if (!(ls >> r.N >> c1 >> re >> c2 >> im >> c3 >> r.gap >> c4 >> r.runtime_ms))
            throw ValidationError("malformed csv row: " + line);
        r.value = {re, im};
        out.push_back(r);
    }
    return out;
}

json to_json(const std::vector<SweepRow>& rows) {
    json a = json::array();
    for (const auto& r : rows)
        a.push_back({{"N", r.N},
                     {"value_re", r.value.real()},
                     {"value_im", r.value.imag()},
                     {"gap", r.gap},
                     {"runtime_ms", r.runtime_ms}});
    return a;
}

} // namespace csos

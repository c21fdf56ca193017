#include "recoh/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace recoh {

namespace {

using nlohmann::json;

PureState state_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("state file: top level is not an object");
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
        throw std::runtime_error("state file: \"dims\" must be an array [dA, 2, dE]");
    TripartiteDims dims;
    try {
        dims.dA = j["dims"][0].get<std::size_t>();
        dims.dB = j["dims"][1].get<std::size_t>();
        dims.dE = j["dims"][2].get<std::size_t>();
    } catch (const json::exception&) {
        throw std::runtime_error("state file: \"dims\" entries must be non-negative integers");
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw std::runtime_error("state file: \"amplitudes\" must be an array of [re, im] pairs");
    std::vector<cplx> amps;
    amps.reserve(j["amplitudes"].size());
    for (const auto& entry : j["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
            throw std::runtime_error("state file: each amplitude must be a [re, im] pair");
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return from_amplitudes(dims, std::move(amps));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("state file: ") + e.what());
    }
}

}  // namespace

PureState parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("state file: invalid JSON: ") + e.what());
    }
    return state_from_json(j);
}

PureState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("state file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const PureState& psi) {
    json j;
    j["dims"] = {psi.dims.dA, psi.dims.dB, psi.dims.dE};
    json amps = json::array();
    for (const auto& v : psi.amp) amps.push_back({v.real(), v.imag()});
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

void save_state(const PureState& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("state file: cannot write " + path);
    out << state_to_json(psi) << '\n';
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace recoh

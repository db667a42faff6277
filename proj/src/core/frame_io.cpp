#include "frame_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace frameineq {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse, "invalid JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(Errc::io, "cannot write " + path);
    out << text << '\n';
    if (!out) fail(Errc::io, "write failed for " + path);
}

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(Errc::parse, "complex entries must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Frame frame_from(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vectors"))
        fail(Errc::parse, "frame JSON needs \"dim\" and \"vectors\"");
    const auto n = j.at("dim").get<Index>();
    const json& rows = j.at("vectors");
    if (!rows.is_array() || rows.empty()) fail(Errc::parse, "\"vectors\" must be a non-empty array");
    CMat m(static_cast<Index>(rows.size()), n);
    for (Index k = 0; k < m.rows(); ++k) {
        const json& row = rows[static_cast<std::size_t>(k)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n)
            fail(Errc::parse, "every frame vector must have dim entries");
        for (Index i = 0; i < n; ++i) m(k, i) = complex_from(row[static_cast<std::size_t>(i)]);
    }
    return Frame(std::move(m), j.value("label", std::string{}));
}

json frame_to(const Frame& frame) {
    json rows = json::array();
    for (Index k = 0; k < frame.size(); ++k) {
        json row = json::array();
        for (Index i = 0; i < frame.dim(); ++i) {
            const Complex c = frame.vectors()(k, i);
            row.push_back(json::array({c.real(), c.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"dim", frame.dim()}, {"label", frame.label()}, {"vectors", std::move(rows)}};
}

}  // namespace

Frame frame_from_json(const std::string& text) { return frame_from(parse(text)); }

std::string frame_to_json(const Frame& frame) { return frame_to(frame).dump(2); }

Frame load_frame(const std::string& path) { return frame_from_json(slurp(path)); }

void save_frame(const Frame& frame, const std::string& path) { spit(path, frame_to_json(frame)); }

std::pair<Frame, Frame> pair_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("U") || !j.contains("V"))
        fail(Errc::parse, "pair JSON needs \"U\" and \"V\" frames");
    return {frame_from(j.at("U")), frame_from(j.at("V"))};
}

std::string pair_to_json(const Frame& U, const Frame& V) {
    return json{{"U", frame_to(U)}, {"V", frame_to(V)}}.dump(2);
}

std::pair<Frame, Frame> load_pair(const std::string& path) { return pair_from_json(slurp(path)); }

void save_pair(const Frame& U, const Frame& V, const std::string& path) { spit(path, pair_to_json(U, V)); }

CVec signal_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
        fail(Errc::parse, "signal JSON needs a \"values\" array");
    const json& vals = j.at("values");
    CVec x(static_cast<Index>(vals.size()));
    for (Index i = 0; i < x.size(); ++i) x[i] = complex_from(vals[static_cast<std::size_t>(i)]);
    return x;
}

std::string signal_to_json(const CVec& values) {
    nlohmann::json vals = nlohmann::json::array();
    for (Index i = 0; i < values.size(); ++i) vals.push_back(nlohmann::json::array({values[i].real(), values[i].imag()}));
    return nlohmann::json{{"values", std::move(vals)}}.dump(2);
}

CVec load_signal(const std::string& path) { return signal_from_json(slurp(path)); }

void save_signal(const CVec& values, const std::string& path) { spit(path, signal_to_json(values)); }

}  // namespace frameineq

#include "ratbound/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace ratbound {

namespace {

using nlohmann::json;

Complex complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string(what) + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_list(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_array())
        throw ParseError(std::string("missing array field \"") + key + "\"");
    std::vector<Complex> out;
    for (const auto& item : obj[key]) out.push_back(complex_from(item, key));
    return out;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance must be a JSON object");

    auto poles = complex_list(doc, "poles");
    auto zeros = complex_list(doc, "zeros");
    if (!doc.contains("leading")) throw ParseError("missing field \"leading\"");
    const Complex leading = complex_from(doc["leading"], "leading");

    std::optional<double> k;
    if (doc.contains("k")) {
        if (!doc["k"].is_number()) throw ParseError("k must be a number");
        k = doc["k"].get<double>();
        if (!(*k > 0.0)) throw ParseError("k must be positive");
    }
    try {
        return {RationalFunction::from_roots(std::move(zeros), leading, std::move(poles)), k};
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("inadmissible instance: ") + e.what());
    }
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

json instance_to_json(const RationalFunction& r, std::optional<double> k) {
    json doc;
    doc["poles"] = json::array();
    for (const auto& a : r.poles().poles()) doc["poles"].push_back(complex_json(a));
    doc["zeros"] = json::array();
    for (const auto& b : r.zeros()) doc["zeros"].push_back(complex_json(b));
    doc["leading"] = complex_json(r.numer().leading());
    if (k) doc["k"] = *k;
    return doc;
}

std::string dump_instance(const RationalFunction& r, std::optional<double> k) {
    return instance_to_json(r, k).dump(2) + "\n";
}

}  // namespace ratbound

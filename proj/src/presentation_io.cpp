#include "morava/presentation_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace morava {

namespace {

using nlohmann::json;

std::vector<PresentationTerm> read_terms(const json& node, const char* field) {
    if (!node.is_array()) throw std::runtime_error(std::string(field) + ": expected a list of terms");
    std::vector<PresentationTerm> terms;
    for (const auto& entry : node) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_array())
            throw std::runtime_error(std::string(field) + ": each term is [z_exponent, [a-coefficients]]");
        PresentationTerm t;
        t.z_exponent = entry[0].get<int>();
        if (t.z_exponent < 0) throw std::runtime_error(std::string(field) + ": negative z-exponent");
        for (const auto& c : entry[1]) {
            if (!c.is_number_integer()) throw std::runtime_error(std::string(field) + ": coefficients must be integers");
            t.a_coeffs.push_back(c.get<std::int64_t>());
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

template <typename T>
T required(const json& doc, const char* field) {
    if (!doc.contains(field)) throw std::runtime_error(std::string("missing field '") + field + "'");
    try {
        return doc.at(field).get<T>();
    } catch (const json::exception&) {
        throw std::runtime_error(std::string("field '") + field + "' has the wrong type");
    }
}

}  // namespace

PresentationData parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("presentation is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("presentation must be a JSON object");

    PresentationData data;
    data.name = doc.value("name", std::string());
    data.prime = required<std::uint64_t>(doc, "prime");
    data.height = required<int>(doc, "height");
    data.precision = required<int>(doc, "precision");
    data.truncation = required<int>(doc, "truncation");
    if (!doc.contains("f") || !doc.contains("tr1")) throw std::runtime_error("presentation needs 'f' and 'tr1'");
    data.f = read_terms(doc["f"], "f");
    data.tr1 = read_terms(doc["tr1"], "tr1");
    if (doc.contains("p_of_a") && !doc["p_of_a"].is_null()) data.p_of_a = read_terms(doc["p_of_a"], "p_of_a");
    if (data.truncation > 1 && !data.p_of_a) throw std::runtime_error("truncation > 1 requires 'p_of_a'");
    if (doc.contains("fixtures")) {
        for (const auto& fx : doc["fixtures"]) {
            ReductionFixture fixture;
            fixture.power = required<int>(fx, "power");
            if (!fx.contains("expect")) throw std::runtime_error("fixture without 'expect'");
            fixture.expected = read_terms(fx["expect"], "expect");
            data.fixtures.push_back(std::move(fixture));
        }
    }
    return data;
}

PresentationData load_presentation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_presentation(buffer.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::filesystem::path resolve_presentation_path(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("MORAVA_DATA_DIR")) dirs.emplace_back(env);
#ifdef MORAVA_DATA_DIR
    dirs.emplace_back(MORAVA_DATA_DIR);
#endif
    for (const auto& dir : dirs)
        if (fs::exists(dir / name)) return dir / name;
    throw std::runtime_error("unknown presentation file " + name);
}

std::string format_terms(const std::vector<PresentationTerm>& terms) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ", ";
        os << "[" << terms[i].z_exponent << ", [";
        for (std::size_t j = 0; j < terms[i].a_coeffs.size(); ++j) os << (j ? ", " : "") << terms[i].a_coeffs[j];
        os << "]]";
    }
    os << "]";
    return os.str();
}

}  // namespace morava

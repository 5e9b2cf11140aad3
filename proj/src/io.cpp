#include <sgx/io.hpp>

#include <json.hpp>

namespace sgx {

using Json = nlohmann::ordered_json;

namespace {
Json atom_array(const Interpretation& m) {
    Json arr = Json::array();
    for (const Atom& a : m) {
        arr.push_back(a.name());
    }
    return arr;
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }
} // namespace

Interpretation parse_model(std::string_view text) {
    Interpretation m;
    if (trim(text).empty()) {
        return m;
    }
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        m.insert(Atom(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start))));
        if (comma == std::string_view::npos) {
            return m;
        }
        start = comma + 1;
    }
}

std::string models_to_json(const std::vector<Interpretation>& models) {
    Json j;
    j["models"] = Json::array();
    for (const Interpretation& m : models) {
        j["models"].push_back(atom_array(m));
    }
    return j.dump();
}

std::string explanations_to_json(const Interpretation& model, const std::vector<Explanation>& explanations) {
    Json j;
    j["model"]        = atom_array(model);
    j["explanations"] = Json::array();
    for (const Explanation& e : explanations) {
        Json x;
        x["labelling"] = Json::object();
        for (const auto& [atom, label] : e.labelling()) {
            x["labelling"][atom.name()] = label.id();
        }
        x["edges"] = Json::array();
        for (const auto& [from, to] : e.edges()) {
            x["edges"].push_back(Json::array({from.name(), to.name()}));
        }
        j["explanations"].push_back(std::move(x));
    }
    j["count"] = explanations.size();
    return j.dump();
}

ExplanationDocument explanations_from_json(std::string_view text) {
    try {
        Json                j = Json::parse(text);
        ExplanationDocument doc;
        for (const auto& a : j.at("model")) {
            doc.model.insert(Atom(a.get<std::string>()));
        }
        for (const auto& x : j.at("explanations")) {
            GraphRecord rec;
            rec.model = doc.model;
            for (const auto& [atom, label] : x.at("labelling").items()) {
                rec.labelling.emplace(Atom(atom), Label(label.get<std::string>()));
            }
            for (const auto& e : x.at("edges")) {
                rec.edges.emplace(Atom(e.at(0).get<std::string>()), Atom(e.at(1).get<std::string>()));
            }
            doc.explanations.push_back(std::move(rec));
        }
        return doc;
    }
    catch (const Json::exception& e) {
        throw Error(std::string("malformed explanation document: ") + e.what());
    }
}

std::string explanations_to_text(const std::vector<Explanation>& explanations) {
    std::string out;
    for (std::size_t i = 0; i < explanations.size(); ++i) {
        const Explanation& e = explanations[i];
        out += "explanation " + std::to_string(i + 1) + "\n";
        for (const auto& [atom, label] : e.labelling()) {
            out += "  " + label.id() + ": " + atom.name() + "\n";
        }
        for (const auto& [from, to] : e.edges()) {
            out += "  " + from.name() + " -> " + to.name() + "\n";
        }
    }
    out += "count: " + std::to_string(explanations.size()) + "\n";
    return out;
}

std::string explanations_to_dot(const std::vector<Explanation>& explanations) {
    std::string out;
    for (std::size_t i = 0; i < explanations.size(); ++i) {
        const Explanation& e = explanations[i];
        out += "digraph explanation_" + std::to_string(i + 1) + " {\n";
        for (const auto& [atom, label] : e.labelling()) {
            out += "  " + quoted(atom.name()) + " [label=" + quoted(label.id() + ": " + atom.name()) + "];\n";
        }
        for (const auto& [from, to] : e.edges()) {
            out += "  " + quoted(from.name()) + " -> " + quoted(to.name()) + ";\n";
        }
        out += "}\n";
    }
    return out;
}

} // namespace sgx

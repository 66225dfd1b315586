#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace hopf {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& context) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(context + ": missing field \"" + key + "\"");
    return j.at(key);
}

long require_int(const json& j, const std::string& context) {
    if (!j.is_number_integer()) throw ParseError(context + ": expected an integer");
    return j.get<long>();
}

std::vector<int> int_list(const json& j, const std::string& context) {
    if (!j.is_array()) throw ParseError(context + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(static_cast<int>(require_int(j[i], context + "[" + std::to_string(i) + "]")));
    return out;
}

Scalar parse_scalar(const json& j, const Field& f, const std::string& context) {
    if (!j.is_string()) throw ParseError(context + ": scalars must be strings");
    try {
        return f.parse(j.get<std::string>(), true);
    } catch (const Error& e) {
        throw ParseError(context + ": " + e.what());
    }
}

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(path.string() + ": cannot write");
    out << j.dump(2) << "\n";
}

void check_version(const json& j, const std::string& context) {
    const long v = require_int(require(j, "format_version", context), context + ".format_version");
    if (v != kFormatVersion) throw ParseError(context + ": unsupported format_version " + std::to_string(v));
}

}  // namespace

json field_to_json(const Field& f) {
    json j;
    if (f.kind() == Field::Kind::Rational) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = f.characteristic();
    }
    if (f.root()) j["root"] = {{"value", f.root()->value.to_string()}, {"order", f.root()->order}};
    return j;
}

Field field_from_json(const json& j) {
    const std::string kind = require(j, "kind", "field").is_string() ? j.at("kind").get<std::string>() : "";
    Field f;
    if (kind == "rational") {
        f = Field::rationals();
    } else if (kind == "prime") {
        const long p = require_int(require(j, "p", "field"), "field.p");
        if (p < 2) throw ParseError("field.p: not a prime");
        try {
            f = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const Error& e) {
            throw ParseError(std::string("field.p: ") + e.what());
        }
    } else {
        throw ParseError("field.kind: expected \"rational\" or \"prime\"");
    }
    if (j.contains("root")) {
        const json& r = j.at("root");
        const Scalar z = parse_scalar(require(r, "value", "field.root"), f, "field.root.value");
        const long order = require_int(require(r, "order", "field.root"), "field.root.order");
        if (order < 1) throw ParseError("field.root.order: must be positive");
        try {
            f = f.with_root(z, static_cast<unsigned>(order));
        } catch (const Error& e) {
            throw ParseError(std::string("field.root: ") + e.what());
        }
    }
    return f;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f, const std::string& context) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(context + ": expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rc = context + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(rc + ": expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_scalar(j[i][c], f, rc + "[" + std::to_string(c) + "]");
    }
    return m;
}

json to_json(const BraidedHopf& h) {
    json j;
    j["format_version"] = kFormatVersion;
    j["name"] = h.name;
    j["field"] = field_to_json(h.field);
    if (!h.group().is_trivial()) {
        json g;
        g["orders"] = h.group().orders();
        json degrees = json::array();
        for (const auto& d : h.space.degrees) degrees.push_back(d);
        g["degrees"] = std::move(degrees);
        g["exponents"] = h.bichar.exponents();
        g["root"] = h.bichar.root().to_string();
        g["root_order"] = h.bichar.root_order();
        j["grading"] = std::move(g);
    }
    j["dim"] = h.dim();
    j["multiplication"] = mat_to_json(h.m);
    j["unit"] = mat_to_json(h.u);
    j["comultiplication"] = mat_to_json(h.delta);
    j["counit"] = mat_to_json(h.counit);
    j["antipode"] = mat_to_json(h.S);
    if (!h.generators.empty()) j["generators"] = h.generators;
    if (!h.words.empty()) j["words"] = h.words;
    return j;
}

BraidedHopf from_json(const json& j) {
    if (!j.is_object()) throw ParseError("top level: expected an object");
    check_version(j, "top level");
    BraidedHopf h;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("name: expected a string");
        h.name = j.at("name").get<std::string>();
    }
    h.field = field_from_json(require(j, "field", "top level"));
    const long dim = require_int(require(j, "dim", "top level"), "dim");
    if (dim < 1) throw ParseError("dim: must be positive");
    const std::size_t d = static_cast<std::size_t>(dim);

    if (j.contains("grading")) {
        const json& g = j.at("grading");
        GradingGroup group(int_list(require(g, "orders", "grading"), "grading.orders"));
        for (int o : group.orders())
            if (o < 1) throw ParseError("grading.orders: orders must be positive");
        const json& exps = require(g, "exponents", "grading");
        if (!exps.is_array()) throw ParseError("grading.exponents: expected a matrix");
        std::vector<std::vector<long>> e;
        for (std::size_t r = 0; r < exps.size(); ++r) {
            std::vector<long> row;
            for (int x : int_list(exps[r], "grading.exponents[" + std::to_string(r) + "]")) row.push_back(x);
            e.push_back(std::move(row));
        }
        const Scalar root = parse_scalar(require(g, "root", "grading"), h.field, "grading.root");
        const long order = require_int(require(g, "root_order", "grading"), "grading.root_order");
        if (order < 1) throw ParseError("grading.root_order: must be positive");
        try {
            h.bichar = Bicharacter(group, e, root, static_cast<unsigned>(order));
        } catch (const Error& ex) {
            throw ParseError(std::string("grading: ") + ex.what());
        }
        const json& degs = require(g, "degrees", "grading");
        if (!degs.is_array() || degs.size() != d) throw ParseError("grading.degrees: expected one degree per basis vector");
        for (std::size_t i = 0; i < d; ++i) {
            const std::string c = "grading.degrees[" + std::to_string(i) + "]";
            GroupElement el = int_list(degs[i], c);
            if (!group.contains(el)) throw ParseError(c + ": not a reduced group element");
            h.space.degrees.push_back(std::move(el));
        }
    } else {
        h.bichar = Bicharacter::trivial(GradingGroup(std::vector<int>{}), h.field);
        h.space.degrees.assign(d, GroupElement{});
    }

    h.m = mat_from_json(require(j, "multiplication", "top level"), d, d * d, h.field, "multiplication");
    h.u = mat_from_json(require(j, "unit", "top level"), d, 1, h.field, "unit");
    h.delta = mat_from_json(require(j, "comultiplication", "top level"), d * d, d, h.field, "comultiplication");
    h.counit = mat_from_json(require(j, "counit", "top level"), 1, d, h.field, "counit");
    h.S = mat_from_json(require(j, "antipode", "top level"), d, d, h.field, "antipode");

    if (j.contains("generators")) {
        for (int g : int_list(j.at("generators"), "generators")) {
            if (g < 0 || static_cast<std::size_t>(g) >= d) throw ParseError("generators: index out of range");
            h.generators.push_back(static_cast<std::size_t>(g));
        }
    }
    if (j.contains("words")) {
        const json& w = j.at("words");
        if (!w.is_array() || w.size() != d) throw ParseError("words: expected one word per basis vector");
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<std::size_t> word;
            for (int q : int_list(w[i], "words[" + std::to_string(i) + "]")) {
                if (q < 0 || static_cast<std::size_t>(q) >= h.generators.size())
                    throw ParseError("words[" + std::to_string(i) + "]: generator position out of range");
                word.push_back(static_cast<std::size_t>(q));
            }
            h.words.push_back(std::move(word));
        }
    }
    return h;
}

BraidedHopf load(const std::filesystem::path& path) {
    BraidedHopf h;
    try {
        h = from_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    AxiomReport r = verify_hopf(h);
    if (!r.ok()) {
        std::ostringstream os;
        os << path.string() << ": axioms fail:";
        for (const auto& f : r.failures()) os << " " << f << ";";
        throw AxiomFailure(os.str(), std::move(r));
    }
    return h;
}

void save(const BraidedHopf& h, const std::filesystem::path& path) { write_file(to_json(h), path); }

Mat load_map(const std::filesystem::path& path, std::size_t rows, std::size_t cols, const Field& f) {
    const json j = read_file(path);
    try {
        check_version(j, "top level");
        return mat_from_json(require(j, "map", "top level"), rows, cols, f, "map");
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_map(const Mat& m, const std::filesystem::path& path) {
    write_file(json{{"format_version", kFormatVersion}, {"map", mat_to_json(m)}}, path);
}

}  // namespace hopf

// hopfcheck: verification reports for Hopf algebras stored as JSON.
//
// Exit status: 0 pass, 1 verification failure, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopf/corpus.hpp"
#include "hopf/io.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Settings {
    std::string format = "text";
    std::uint64_t seed = hopf::kDefaultSeed;
    std::size_t trials = 64;
    std::string alpha_ambient = "trivial";
};

void emit(const Settings& s, const json& j) {
    if (s.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << hopf::report::to_text(j);
}

int emit_error(const Settings& s, const std::string& kind, const std::string& message, const json& extra = {}) {
    json j{{"error", {{"kind", kind}, {"message", message}}}};
    if (!extra.is_null()) j["error"]["report"] = extra;
    if (s.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cerr << "error (" << kind << "): " << message << "\n";
    return kind == "axioms" ? kFail : kUsage;
}

hopf::report::Options options(const Settings& s) {
    hopf::report::Options o;
    o.iso.seed = s.seed;
    o.iso.trials = s.trials;
    if (s.alpha_ambient != "trivial") {
        std::ifstream in(s.alpha_ambient);
        if (!in) throw hopf::ParseError(s.alpha_ambient + ": cannot open");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw hopf::ParseError(s.alpha_ambient + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("degree") || !j["degree"].is_array())
            throw hopf::ParseError(s.alpha_ambient + ": expected {\"degree\": [...]}");
        hopf::GroupElement g;
        for (const auto& x : j["degree"]) {
            if (!x.is_number_integer()) throw hopf::ParseError(s.alpha_ambient + ": degree entries must be integers");
            g.push_back(x.get<int>());
        }
        o.ambient_degree = std::move(g);
    }
    return o;
}

std::string file_stem(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '*')
            out += "_dual";
        else if (c == '/')
            out += "__";
        else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
            out += c;
        else
            out += '_';
    }
    return out;
}

std::string file_stem(const hopf::BraidedHopf& h) {
    std::string stem = file_stem(h.name);
    if (h.field.kind() == hopf::Field::Kind::Prime) stem += "_F" + std::to_string(h.field.characteristic());
    return stem;
}

json write_examples(const fs::path& dir) {
    fs::create_directories(dir);
    json files = json::array();
    for (const auto& h : hopf::full_corpus()) {
        const fs::path p = dir / (file_stem(h) + ".json");
        hopf::save(h, p);
        files.push_back(p.string());
    }
    for (const auto& e : hopf::corpus_extensions()) {
        for (const auto* h : {e.A.get(), e.B.get()}) {
            const fs::path p = dir / (file_stem(*h) + ".json");
            if (!fs::exists(p)) {
                hopf::save(*h, p);
                files.push_back(p.string());
            }
        }
        const fs::path p = dir / (file_stem(*e.A) + "__" + file_stem(*e.B) + ".map.json");
        hopf::save_map(e.i, p);
        files.push_back(p.string());
    }
    return files;
}

}  // namespace

int main(int argc, char** argv) {
    Settings s;
    CLI::App app{"Exact verification of integrals, modular functions and Frobenius properties of Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", s.seed, "Seed for randomized isomorphism searches");
    app.add_option("--trials", s.trials, "Random trials per isomorphism search");
    app.add_option("--alpha-ambient", s.alpha_ambient,
                   "Modular object of the ambient graded category: trivial, or a JSON file {\"degree\": [...]}");

    std::string file, file_b, map_file, out_dir;
    auto* verify = app.add_subcommand("verify", "Check the Hopf algebra axioms");
    verify->add_option("file", file)->required();
    auto* integrals = app.add_subcommand("integrals", "Integrals, cointegral, modular function");
    integrals->add_option("file", file)->required();
    auto* radford = app.add_subcommand("radford", "Radford S^4 formula on every basis element");
    radford->add_option("file", file)->required();
    auto* extension = app.add_subcommand("extension", "Relative modular function and Frobenius checks for A/B");
    extension->add_option("A", file)->required();
    extension->add_option("B", file_b)->required();
    extension->add_option("map", map_file, "dim A x dim B inclusion matrix")->required();
    auto* braided = app.add_subcommand("braided-report", "Nakayama, coinvariant and bosonization checks");
    braided->add_option("file", file)->required();
    auto* examples = app.add_subcommand("examples", "Write the builtin corpus as JSON files");
    examples->add_option("dir", out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        const hopf::report::Options opts = options(s);
        json j;
        if (verify->parsed()) {
            // Load without the axiom gate so the report itself is the output.
            std::ifstream in(file);
            if (!in) throw hopf::ParseError(file + ": cannot open");
            json raw;
            try {
                raw = json::parse(in);
            } catch (const json::parse_error& e) {
                throw hopf::ParseError(file + ": " + e.what());
            }
            j = hopf::report::verify(hopf::from_json(raw), opts);
        } else if (integrals->parsed()) {
            j = hopf::report::integrals(hopf::load(file), opts);
        } else if (radford->parsed()) {
            const hopf::BraidedHopf h = hopf::load(file);
            if (!h.trivially_graded()) return emit_error(s, "usage", "radford needs a trivially graded Hopf algebra");
            j = hopf::report::radford(h, opts);
        } else if (extension->parsed()) {
            hopf::Extension e;
            auto a = std::make_shared<const hopf::BraidedHopf>(hopf::load(file));
            auto b = std::make_shared<const hopf::BraidedHopf>(hopf::load(file_b));
            if (!a->trivially_graded() || !b->trivially_graded())
                return emit_error(s, "usage", "extension needs trivially graded Hopf algebras");
            e.name = a->name + "/" + b->name;
            e.i = hopf::load_map(map_file, a->dim(), b->dim(), a->field);
            e.A = a;
            e.B = b;
            j = hopf::report::extension(e, opts);
        } else if (braided->parsed()) {
            j = hopf::report::braided(hopf::load(file), opts);
        } else {
            j = {{"command", "examples"}, {"files", write_examples(out_dir)}, {"ok", true}};
        }
        emit(s, j);
        return j.value("ok", false) ? kPass : kFail;
    } catch (const hopf::AxiomFailure& e) {
        json checks = json::array();
        for (const auto& c : e.report().checks)
            if (!c.passed) checks.push_back(json{{"name", c.name}, {"detail", c.detail}});
        return emit_error(s, "axioms", e.what(), checks);
    } catch (const hopf::ParseError& e) {
        return emit_error(s, "parse", e.what());
    } catch (const hopf::Error& e) {
        return emit_error(s, "error", e.what());
    } catch (const std::exception& e) {
        return emit_error(s, "error", e.what());
    }
}

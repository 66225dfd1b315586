#include "report.hpp"

#include <sstream>

#include "hopf/integrals.hpp"
#include "hopf/io.hpp"
#include "hopf/linalg.hpp"

namespace hopf::report {

using nlohmann::json;

namespace {

json header(const std::string& command, const std::string& name, const Options& o) {
    return json{{"command", command}, {"name", name}, {"seed", o.iso.seed}, {"trials", o.iso.trials}};
}

json axioms(const AxiomReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json x{{"name", c.name}, {"passed", c.passed}};
        if (c.witness) x["witness"] = {c.witness->first, c.witness->second};
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(std::move(x));
    }
    return checks;
}

json iso(const IsoResult& r) {
    json j{{"verdict", to_string(r.verdict)}, {"hom_dim", r.hom_dim}, {"seed", r.seed}, {"trials", r.trials}};
    if (r.witness) j["witness"] = mat_to_json(*r.witness);
    if (!r.coefficients.empty()) {
        json c = json::array();
        for (const auto& s : r.coefficients) c.push_back(s.to_string());
        j["coefficients"] = std::move(c);
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

json row(const Mat& m) { return mat_to_json(m).at(0); }
json column(const Mat& m) { return mat_to_json(m.transpose()).at(0); }

}  // namespace

json verify(const BraidedHopf& h, const Options& o) {
    const AxiomReport r = verify_hopf(h);
    json j = header("verify", h.name, o);
    j["dim"] = h.dim();
    j["field"] = field_to_json(h.field);
    j["checks"] = axioms(r);
    j["ok"] = r.ok();
    return j;
}

json integrals(const BraidedHopf& h, const Options& o) {
    json j = header("integrals", h.name, o);
    const IntegralDatum d = integral_datum(h);
    const Character alpha = braided_modular_function(h, d);
    j["integral"] = column(d.Lambda);
    j["cointegral"] = row(d.lambda);
    j["integral_degree"] = d.degree;
    j["modular_function"] = row(alpha.row);
    j["unimodular"] = alpha == counit_character(h);
    j["left_integral_dim"] = integral_space(h, Side::Left).basis.size();
    j["right_integral_dim"] = integral_space(h, Side::Right).basis.size();
    bool ok = j["left_integral_dim"] == 1 && j["right_integral_dim"] == 1;
    if (h.trivially_graded()) {
        j["distinguished_grouplike"] = column(distinguished_grouplike(h));
        ok = ok && modular_function(h) == alpha;
    }
    j["ok"] = ok;
    return j;
}

json radford(const BraidedHopf& h, const Options& o) {
    const RadfordResult r = radford_s4_check(h);
    json j = header("radford", h.name, o);
    j["holds"] = r.holds;
    if (r.witness) j["witness"] = *r.witness;
    j["s4"] = mat_to_json(r.s4);
    j["rhs"] = mat_to_json(r.rhs);
    j["grouplike"] = column(r.grouplike);
    j["modular_function"] = row(r.alpha.row);
    j["ok"] = r.holds;
    return j;
}

json extension(const Extension& e, const Options& o) {
    json j = header("extension", e.name, o);
    const AxiomReport ext = check_extension(e);
    j["extension_checks"] = axioms(ext);
    if (!ext.ok()) {
        j["ok"] = false;
        return j;
    }
    const BetaFrobeniusResult bf = beta_frobenius_check(e, o.iso);
    j["chi"] = row(bf.chi.row);
    j["beta"] = mat_to_json(bf.beta);
    j["beta_inverse"] = mat_to_json(bf.beta_inverse);
    if (bf.free_basis) {
        json fb = json::array();
        for (const Mat& v : *bf.free_basis) fb.push_back(column(v));
        j["free_basis"] = std::move(fb);
    } else {
        j["free_basis"] = nullptr;
    }
    j["beta_frobenius"] = iso(bf.iso);
    j["beta_frobenius"]["pass"] = bf.pass;

    const ConditionsReport cr = frobenius_conditions_report(e, bf.chi, o.iso);
    json mods = json::array();
    for (const auto& m : cr.modules) mods.push_back(json{{"module", m.label}, {"iso", iso(m.iso)}});
    j["conditions"] = {{"projective", cr.projective}, {"coinduction", cr.coinduction}, {"modules", mods}};

    const ChiFormulaResult cf = verify_chi_formula(e, o.iso);
    json working = json::array();
    for (const auto& c : cf.working) working.push_back(row(c.row));
    j["chi_formula"] = {{"candidates", cf.candidates.size()},
                        {"working", working},
                        {"matches_formula", cf.matches_formula},
                        {"convolution_identity", cf.convolution_identity},
                        {"invertible", cf.invertible},
                        {"pass", cf.pass}};
    j["frobenius_functor"] = frobenius_functor_check(e, o.iso);
    j["ok"] = bf.pass && cr.ok() && cf.pass;
    return j;
}

json braided(const BraidedHopf& h, const Options& o) {
    json j = header("braided-report", h.name, o);
    const IntegralDatum d = integral_datum(h);
    j["integral_degree"] = d.degree;
    j["modular_function"] = row(braided_modular_function(h, d).row);
    j["pairing_invertible"] = true;
    pairing_phi(h, d);

    const NakayamaCheck nk = nakayama_formula_check(h);
    j["nakayama"] = mat_to_json(nk.nakayama);
    j["nakayama_formula"] = mat_to_json(nk.formula);
    j["nakayama_multiplicative"] = nk.multiplicative;
    const MonodromyLaws ml = monodromy_laws(h.bichar, h.space);
    j["monodromy_laws"] = ml.ok();

    const DualCoinvariantCheck dc = dual_coinvariants_check(h);
    const ModularObjectCheck mo = modular_object_check(h, o.ambient_degree);
    const FundamentalTheoremCheck ft = fundamental_theorem_check(h);
    j["dual_coinvariants"] = {{"dim", dc.dim}, {"degree", dc.degree}, {"pass", dc.pass}};
    if (dc.dim == 1) j["dual_coinvariants"]["action"] = row(dc.action.row);
    j["modular_object"] = {{"bosonized_modular_function", row(mo.modular_bosonized.row)},
                           {"predicted", row(mo.predicted.row)},
                           {"pass", mo.pass}};
    if (o.ambient_degree) j["modular_object"]["ambient_degree"] = *o.ambient_degree;
    j["fundamental_theorem"] = {{"pass", ft.pass}, {"failures", ft.failures}};
    j["verdicts"] = {{"nakayama_formula", nk.holds && nk.automorphism},
                     {"dual_coinvariants", dc.pass},
                     {"modular_object", mo.pass},
                     {"fundamental_theorem", ft.pass}};
    j["ok"] = nk.holds && nk.automorphism && dc.pass && mo.pass && ft.pass && ml.ok();
    return j;
}

namespace {

bool is_matrix(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& r : j)
        if (!r.is_array()) return false;
    return true;
}

void render(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object()) {
            os << pad << key << ":\n";
            render(os, v, indent + 2);
        } else if (is_matrix(v) && !v.front().empty() && v.front().front().is_string()) {
            os << pad << key << ":\n";
            for (const auto& r : v) {
                os << pad << "  [";
                for (std::size_t c = 0; c < r.size(); ++c) os << (c ? " " : "") << r[c].get<std::string>();
                os << "]\n";
            }
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << key << ":\n";
            for (const auto& x : v) {
                os << pad << "  -\n";
                render(os, x, indent + 4);
            }
        } else if (v.is_string()) {
            os << pad << key << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << key << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace

std::string to_text(const json& j) {
    std::ostringstream os;
    render(os, j, 0);
    return os.str();
}

}  // namespace hopf::report

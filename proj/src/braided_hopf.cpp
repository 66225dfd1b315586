#include "hopf/braided_hopf.hpp"

#include <sstream>

#include "hopf/linalg.hpp"
#include "hopf/pipeline.hpp"

namespace hopf {

namespace {

void compare(AxiomReport& r, const std::string& name, const Mat& lhs, const Mat& rhs) {
    AxiomCheck c;
    c.name = name;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.passed = false;
        c.detail = "shape mismatch";
    } else if (auto d = lhs.first_difference(rhs)) {
        c.passed = false;
        c.witness = d;
        c.detail = "lhs " + lhs(d->first, d->second).to_string() + " != rhs " + rhs(d->first, d->second).to_string();
    }
    r.checks.push_back(std::move(c));
}

void degree_check(AxiomReport& r, const std::string& name, const Mat& f, const GradedSpace& x,
                  const GradedSpace& y) {
    AxiomCheck c;
    c.name = name;
    if (auto w = degree_violation(f, x, y)) {
        c.passed = false;
        c.witness = w;
        c.detail = "entry maps degree " + GradingGroup::format(x.degrees[w->second]) + " to degree " +
                   GradingGroup::format(y.degrees[w->first]);
    }
    r.checks.push_back(std::move(c));
}

void require_shape(const Mat& a, std::size_t rows, std::size_t cols, const char* what) {
    if (a.rows() != rows || a.cols() != cols)
        throw DimensionMismatch(std::string(what) + " has shape " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

GradedSpace unit_space(const GradingGroup& g) { return GradedSpace{{g.identity()}}; }

}  // namespace

Mat BraidedHopf::tensor_square_product() const {
    const std::size_t d = dim();
    return Pipeline({d, d, d, d}, field).then(braiding(), 1, 2, {d, d}).then(m, 0, 2).then(m, 1, 2).matrix();
}

bool is_character(const BraidedHopf& h, const Mat& row) {
    if (row.rows() != 1 || row.cols() != h.dim()) return false;
    if (!(row * h.u)(0, 0).is_one()) return false;
    if (row * h.m != kron(row, row)) return false;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!row(0, i).is_zero() && h.degree(i) != h.group().identity()) return false;
    return true;
}

Character counit_character(const BraidedHopf& h) { return Character{h.counit}; }

Character convolve(const BraidedHopf& h, const Character& a, const Character& b) {
    return Character{kron(a.row, b.row) * h.delta};
}

Character character_inverse(const BraidedHopf& h, const Character& a) { return Character{a.row * h.S}; }

bool AxiomReport::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> AxiomReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "pass " : "FAIL ") << c.name;
        if (c.witness) os << " at (" << c.witness->first << ", " << c.witness->second << ")";
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::optional<std::pair<std::size_t, std::size_t>> degree_violation(const Mat& f, const GradedSpace& x,
                                                                     const GradedSpace& y) {
    if (f.rows() != y.dim() || f.cols() != x.dim()) throw DimensionMismatch("degree check: shape mismatch");
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f(i, j).is_zero() && y.degrees[i] != x.degrees[j]) return std::make_pair(i, j);
    return std::nullopt;
}

GradedSpace tensor_power(const GradingGroup& g, const GradedSpace& x, std::size_t n) {
    GradedSpace out = unit_space(g);
    for (std::size_t i = 0; i < n; ++i) out = tensor(g, out, x);
    return out;
}

AxiomReport verify_hopf(const BraidedHopf& h) {
    const std::size_t d = h.dim();
    const Field& k = h.field;
    require_shape(h.m, d, d * d, "multiplication");
    require_shape(h.u, d, 1, "unit");
    require_shape(h.delta, d * d, d, "comultiplication");
    require_shape(h.counit, 1, d, "counit");
    require_shape(h.S, d, d, "antipode");
    for (const auto& g : h.space.degrees)
        if (!h.group().contains(g)) throw DimensionMismatch("basis degree outside the grading group");

    AxiomReport r;
    {
        AxiomCheck c;
        c.name = "bicharacter";
        if (!h.bichar.is_bimultiplicative()) {
            c.passed = false;
            c.detail = "not bimultiplicative";
        }
        r.checks.push_back(c);
    }

    const GradingGroup& G = h.group();
    const GradedSpace& V = h.space;
    const GradedSpace V2 = tensor(G, V, V);
    const GradedSpace one = unit_space(G);
    degree_check(r, "degree(m)", h.m, V2, V);
    degree_check(r, "degree(u)", h.u, one, V);
    degree_check(r, "degree(delta)", h.delta, V, V2);
    degree_check(r, "degree(counit)", h.counit, V, one);
    degree_check(r, "degree(S)", h.S, V, V);

    const Mat id = h.identity();
    const Mat sigma = h.braiding();

    compare(r, "associativity", Pipeline({d, d, d}, k).then(h.m, 0, 2).then(h.m, 0, 2).matrix(),
            Pipeline({d, d, d}, k).then(h.m, 1, 2).then(h.m, 0, 2).matrix());
    compare(r, "left unit", Pipeline({d}, k).then(h.u, 0, 0).then(h.m, 0, 2).matrix(), id);
    compare(r, "right unit", Pipeline({d}, k).then(h.u, 1, 0).then(h.m, 0, 2).matrix(), id);
    compare(r, "coassociativity",
            Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.delta, 0, 1, {d, d}).matrix(),
            Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.delta, 1, 1, {d, d}).matrix());
    compare(r, "left counit", Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.counit, 0, 1, {}).matrix(), id);
    compare(r, "right counit", Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.counit, 1, 1, {}).matrix(), id);
    compare(r, "bialgebra", Pipeline({d, d}, k).then(h.m, 0, 2).then(h.delta, 0, 1, {d, d}).matrix(),
            Pipeline({d, d}, k)
                .then(h.delta, 0, 1, {d, d})
                .then(h.delta, 2, 1, {d, d})
                .then(sigma, 1, 2, {d, d})
                .then(h.m, 0, 2)
                .then(h.m, 1, 2)
                .matrix());
    compare(r, "counit multiplicative", h.counit * h.m, kron(h.counit, h.counit));
    compare(r, "unit comultiplicative", h.delta * h.u, kron(h.u, h.u));
    compare(r, "counit of unit", h.counit * h.u, Mat::identity(1, k));
    const Mat ue = h.u * h.counit;
    compare(r, "left antipode", Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.S, 0).then(h.m, 0, 2).matrix(),
            ue);
    compare(r, "right antipode", Pipeline({d}, k).then(h.delta, 0, 1, {d, d}).then(h.S, 1).then(h.m, 0, 2).matrix(),
            ue);
    {
        AxiomCheck c;
        c.name = "antipode invertible";
        if (!is_invertible(h.S)) {
            c.passed = false;
            c.detail = "S is singular";
        }
        r.checks.push_back(c);
    }
    return r;
}

AxiomReport check_hopf_map(const HopfMap& map) {
    if (!map.source || !map.target) throw Error("hopf map without source or target");
    const BraidedHopf& a = *map.source;
    const BraidedHopf& b = *map.target;
    require_shape(map.f, b.dim(), a.dim(), "hopf map");
    if (!a.field.compatible(b.field)) throw FieldMismatch("hopf map between different fields");
    if (!(a.group() == b.group())) throw DimensionMismatch("hopf map between different grading groups");

    AxiomReport r;
    degree_check(r, "degree(f)", map.f, a.space, b.space);
    const Mat& f = map.f;
    compare(r, "multiplicative", f * a.m, b.m * kron(f, f));
    compare(r, "unital", f * a.u, b.u);
    compare(r, "comultiplicative", b.delta * f, kron(f, f) * a.delta);
    compare(r, "counital", b.counit * f, a.counit);
    compare(r, "antipode", f * a.S, b.S * f);
    return r;
}

BraidedHopf dual_hopf(const BraidedHopf& h) {
    if (!h.trivially_graded()) throw Error("dual_hopf: only trivially graded Hopf algebras are supported");
    BraidedHopf d;
    d.name = h.name.empty() ? std::string() : h.name + "*";
    d.field = h.field;
    d.bichar = h.bichar;
    d.space = h.space;
    d.m = h.delta.transpose();
    d.delta = h.m.transpose();
    d.u = h.counit.transpose();
    d.counit = h.u.transpose();
    d.S = h.S.transpose();
    return d;
}

Mat antipode_inverse(const BraidedHopf& h) {
    auto inv = inverse(h.S);
    if (!inv) throw Error("antipode is not invertible");
    return *inv;
}

}  // namespace hopf

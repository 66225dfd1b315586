#include "hopf/modules.hpp"

#include <algorithm>
#include <random>

#include "hopf/linalg.hpp"

namespace hopf {

namespace {

Mat combination(const std::vector<Mat>& ops, const BraidedHopf& a, const Mat& coeffs, std::size_t dim) {
    Mat out(dim, dim, a.field);
    for (std::size_t c = 0; c < ops.size(); ++c)
        if (!coeffs[c].is_zero()) out += ops[c].scaled(coeffs[c]);
    return out;
}

bool check_side(const BraidedHopf& a, const std::vector<Mat>& ops, Side side, std::size_t dim, std::string* why) {
    const std::size_t d = a.dim();
    if (ops.size() != d) {
        if (why) *why = "expected one operator per basis element";
        return false;
    }
    for (const auto& op : ops)
        if (op.rows() != dim || op.cols() != dim) {
            if (why) *why = "operator of the wrong size";
            return false;
        }
    if (combination(ops, a, a.u, dim) != Mat::identity(dim, a.field)) {
        if (why) *why = "unit does not act as the identity";
        return false;
    }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const Mat lhs = side == Side::Right ? ops[y] * ops[x] : ops[x] * ops[y];
            if (lhs != combination(ops, a, a.m.column(x * d + y), dim)) {
                if (why) *why = "action is not associative at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
                return false;
            }
        }
    return true;
}

Mat vec(const Mat& f) {
    Mat v(f.rows() * f.cols(), 1, f.field());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) v[i * f.cols() + j] = f(i, j);
    return v;
}

Mat unvec(const Mat& v, std::size_t rows, std::size_t cols) {
    Mat f(rows, cols, v.field());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) f(i, j) = v[i * cols + j];
    return f;
}

std::vector<Mat> selected(const std::vector<Mat>& ops, const std::vector<std::size_t>& idx) {
    std::vector<Mat> out;
    for (std::size_t i : idx) out.push_back(ops[i]);
    return out;
}

Scalar random_scalar(std::mt19937_64& rng, const Field& field) {
    const std::uint64_t x = rng();
    if (field.kind() == Field::Kind::Prime) return field.from_int(static_cast<std::int64_t>(x % field.characteristic()));
    return field.from_int(static_cast<std::int64_t>(x % 1000) - 500);
}

IsoResult early_no(std::string reason, std::size_t hom_dim, const IsoSearchOptions& opts) {
    IsoResult r;
    r.verdict = IsoVerdict::ProvenNo;
    r.reason = std::move(reason);
    r.hom_dim = hom_dim;
    r.seed = opts.seed;
    return r;
}

// Candidate values of a character on a basis element: roots of the
// minimal polynomial of its left multiplication operator.
std::vector<Scalar> minimal_polynomial(const Mat& l) {
    const std::size_t n = l.rows();
    const Field& k = l.field();
    std::vector<Mat> powers{Mat::identity(n, k)};
    while (true) {
        const Mat next = powers.back() * l;
        Mat basis(n * n, powers.size(), k);
        for (std::size_t j = 0; j < powers.size(); ++j) {
            const Mat v = vec(powers[j]);
            for (std::size_t i = 0; i < n * n; ++i) basis(i, j) = v[i];
        }
        if (auto sol = solve_affine(basis, vec(next))) {
            // x^k - sum c_j x^j, coefficients low to high
            std::vector<Scalar> poly;
            for (std::size_t j = 0; j < powers.size(); ++j) poly.push_back(-sol->particular[j]);
            poly.push_back(k.one());
            return poly;
        }
        powers.push_back(next);
    }
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    if (n > mpz_class("1000000000000")) throw Error("character enumeration: coefficient too large for root search");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

std::vector<Scalar> roots(const std::vector<Scalar>& poly, const Field& k) {
    std::vector<Scalar> out;
    if (k.kind() == Field::Kind::Prime) {
        const std::uint32_t p = k.characteristic();
        if (p > (1u << 20)) throw Error("character enumeration: prime too large for exhaustive root search");
        for (std::uint32_t x = 0; x < p; ++x)
            if (evaluate(poly, k.from_int(x)).is_zero()) out.push_back(k.from_int(x));
        return out;
    }
    std::size_t low = 0;
    while (poly[low].is_zero()) ++low;
    if (low > 0) out.push_back(k.zero());
    mpz_class denom_lcm = 1;
    for (const auto& c : poly) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    const mpz_class a0 = mpq_class(poly[low].rational() * denom_lcm).get_num();
    const mpz_class an = mpq_class(poly.back().rational() * denom_lcm).get_num();
    std::vector<Scalar> cands;
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(an)) {
            const mpq_class r(p, q);
            cands.push_back(Scalar(r));
            cands.push_back(Scalar(mpq_class(-r)));
        }
    std::sort(cands.begin(), cands.end(), [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
    for (const auto& c : cands)
        if (evaluate(poly, c).is_zero() && (out.empty() || out.back() != c)) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
    return out;
}

// Depth-first search over generator values; returns false if the chosen
// generators do not pin down a unique functional at some leaf.
bool character_search(const BraidedHopf& a, const std::vector<std::size_t>& gens,
                      const std::vector<std::vector<Scalar>>& cands, std::size_t depth, Mat system, Mat rhs,
                      std::vector<Character>& out) {
    auto sol = solve_affine(system, rhs);
    if (!sol) return true;
    if (depth == gens.size()) {
        if (!sol->nullspace.empty()) return false;
        const Mat row = sol->particular.transpose();
        if (is_character(a, row)) out.push_back(Character{row});
        return true;
    }
    const std::size_t d = a.dim();
    const Mat lt = a.left_mult(a.basis(gens[depth])).transpose();
    for (const auto& lambda : cands[depth]) {
        const Mat block = lt - Mat::identity(d, a.field).scaled(lambda);
        if (!character_search(a, gens, cands, depth + 1, vstack(system, block), vstack(rhs, Mat(d, 1, a.field)), out))
            return false;
    }
    return true;
}

}  // namespace

Mat Module::action_matrix() const {
    const std::size_t n = dim(), d = ops.size();
    Mat rho(n, n * d, field());
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i)
                rho(i, side == Side::Right ? v * d + b : b * n + v) = ops[b](i, v);
    return rho;
}

std::size_t Bimodule::dim() const {
    if (!left_ops.empty()) return left_ops.front().rows();
    return right_ops.empty() ? 0 : right_ops.front().rows();
}

bool is_module(const Module& m, std::string* why) {
    if (!m.algebra) throw Error("module without algebra");
    return check_side(*m.algebra, m.ops, m.side, m.dim(), why);
}

bool is_bimodule(const Bimodule& m, std::string* why) {
    if (!m.left || !m.right) throw Error("bimodule without algebras");
    const std::size_t n = m.dim();
    if (!check_side(*m.left, m.left_ops, Side::Left, n, why)) return false;
    if (!check_side(*m.right, m.right_ops, Side::Right, n, why)) return false;
    for (std::size_t a = 0; a < m.left_ops.size(); ++a)
        for (std::size_t b = 0; b < m.right_ops.size(); ++b)
            if (m.left_ops[a] * m.right_ops[b] != m.right_ops[b] * m.left_ops[a]) {
                if (why) *why = "left and right actions do not commute";
                return false;
            }
    return true;
}

Module regular_module(const BraidedHopf& a, Side side) {
    Module m;
    m.algebra = &a;
    m.side = side;
    m.label = "regular";
    for (std::size_t b = 0; b < a.dim(); ++b)
        m.ops.push_back(side == Side::Right ? a.right_mult(a.basis(b)) : a.left_mult(a.basis(b)));
    return m;
}

Module character_module(const BraidedHopf& a, const Character& c, Side side) {
    Module m;
    m.algebra = &a;
    m.side = side;
    m.label = "character " + c.row.to_string();
    for (std::size_t b = 0; b < a.dim(); ++b) {
        Mat op(1, 1, a.field);
        op(0, 0) = c(b);
        m.ops.push_back(op);
    }
    return m;
}

Module pull_back(const Module& m, const BraidedHopf& b, const Mat& f) {
    if (f.rows() != m.algebra->dim() || f.cols() != b.dim()) throw DimensionMismatch("pull_back: map of the wrong shape");
    Module out;
    out.algebra = &b;
    out.side = m.side;
    out.label = m.label;
    for (std::size_t j = 0; j < b.dim(); ++j) out.ops.push_back(combination(m.ops, *m.algebra, f.column(j), m.dim()));
    return out;
}

Module twist_by_character(const Module& v, const Character& chi) {
    const BraidedHopf& b = *v.algebra;
    // b |-> b1 chi(b2)
    const Mat f = kron(Mat::identity(b.dim(), b.field), chi.row) * b.delta;
    Module out = pull_back(v, b, f);
    out.label = v.label + " (x) " + chi.row.to_string();
    return out;
}

std::vector<std::size_t> acting_elements(const BraidedHopf& a) {
    if (!a.generators.empty()) return a.generators;
    std::vector<std::size_t> all(a.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

std::vector<Mat> intertwiners(const std::vector<Mat>& ops_m, const std::vector<Mat>& ops_n, std::size_t dim_m,
                              std::size_t dim_n, const Field& field) {
    if (ops_m.size() != ops_n.size()) throw DimensionMismatch("intertwiners: operator lists differ in length");
    const std::size_t unknowns = dim_m * dim_n;
    Mat system(ops_m.size() * unknowns, unknowns, field);
    for (std::size_t k = 0; k < ops_m.size(); ++k) {
        const Mat& M = ops_m[k];
        const Mat& N = ops_n[k];
        const std::size_t base = k * unknowns;
        // (N f - f M)[r, c] = sum_s N[r,s] f[s,c] - sum_t f[r,t] M[t,c]
        for (std::size_t r = 0; r < dim_n; ++r)
            for (std::size_t c = 0; c < dim_m; ++c) {
                const std::size_t row = base + r * dim_m + c;
                for (std::size_t s = 0; s < dim_n; ++s)
                    if (!N(r, s).is_zero()) system(row, s * dim_m + c) += N(r, s);
                for (std::size_t t = 0; t < dim_m; ++t)
                    if (!M(t, c).is_zero()) system(row, r * dim_m + t) -= M(t, c);
            }
    }
    std::vector<Mat> out;
    for (const Mat& v : kernel(system)) out.push_back(unvec(v, dim_n, dim_m));
    return out;
}

std::vector<Mat> hom_space(const Module& m, const Module& n) {
    if (m.algebra != n.algebra && !(m.algebra->m == n.algebra->m))
        throw Error("hom_space: modules over different algebras");
    if (m.side != n.side) throw Error("hom_space: modules on different sides");
    const auto idx = acting_elements(*m.algebra);
    return intertwiners(selected(m.ops, idx), selected(n.ops, idx), m.dim(), n.dim(), m.field());
}

std::vector<Mat> bimodule_hom_space(const Bimodule& m, const Bimodule& n) {
    auto ml = selected(m.left_ops, acting_elements(*m.left));
    auto nl = selected(n.left_ops, acting_elements(*n.left));
    auto mr = selected(m.right_ops, acting_elements(*m.right));
    auto nr = selected(n.right_ops, acting_elements(*n.right));
    ml.insert(ml.end(), mr.begin(), mr.end());
    nl.insert(nl.end(), nr.begin(), nr.end());
    return intertwiners(ml, nl, m.dim(), n.dim(), m.left->field);
}

std::optional<std::vector<Scalar>> coordinates(const std::vector<Mat>& basis, const Mat& x) {
    if (basis.empty()) {
        if (x.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    const std::size_t len = x.rows() * x.cols();
    Mat a(len, basis.size(), x.field());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Mat v = vec(basis[k]);
        for (std::size_t i = 0; i < len; ++i) a(i, k) = v[i];
    }
    auto sol = solve_affine(a, vec(x));
    if (!sol) return std::nullopt;
    std::vector<Scalar> out;
    for (std::size_t k = 0; k < basis.size(); ++k) out.push_back(sol->particular[k]);
    return out;
}

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Found: return "found";
        case IsoVerdict::ProvenNo: return "proven-no";
        case IsoVerdict::ProbablyNo: return "probably-no";
    }
    return "?";
}

IsoResult find_invertible(const std::vector<Mat>& basis, std::size_t n, const Field& field,
                          const IsoSearchOptions& opts) {
    IsoResult r;
    r.seed = opts.seed;
    r.hom_dim = basis.size();
    if (basis.empty()) {
        if (n == 0) {
            r.verdict = IsoVerdict::Found;
            r.witness = r.witness_inverse = Mat(0, 0, field);
            return r;
        }
        r.verdict = IsoVerdict::ProvenNo;
        r.reason = "intertwiner space is zero";
        return r;
    }
    auto attempt = [&](const std::vector<Scalar>& coeffs) {
        Mat f(n, n, field);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!coeffs[k].is_zero()) f += basis[k].scaled(coeffs[k]);
        if (auto inv = inverse(f)) {
            r.verdict = IsoVerdict::Found;
            r.witness = f;
            r.witness_inverse = *inv;
            r.coefficients = coeffs;
            return true;
        }
        return false;
    };

    std::mt19937_64 rng(opts.seed);
    for (std::size_t t = 0; t < opts.trials; ++t) {
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs.push_back(random_scalar(rng, field));
        ++r.trials;
        if (attempt(coeffs)) return r;
    }

    const std::uint64_t p = field.characteristic();
    const std::uint64_t s = (p != 0 && p <= n) ? p : n + 1;
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t k = 0; k < basis.size() && small; ++k) {
        total *= s;
        if (total > opts.grid_limit) small = false;
    }
    if (!small) {
        r.verdict = IsoVerdict::ProbablyNo;
        r.reason = "no invertible combination among " + std::to_string(opts.trials) + " random trials";
        return r;
    }
    std::vector<std::uint64_t> digits(basis.size(), 0);
    for (std::uint64_t point = 0; point < total; ++point) {
        std::uint64_t x = point;
        for (std::size_t k = basis.size(); k-- > 0;) {
            digits[k] = x % s;
            x /= s;
        }
        std::vector<Scalar> coeffs;
        for (auto v : digits) coeffs.push_back(field.from_int(static_cast<std::int64_t>(v)));
        if (attempt(coeffs)) return r;
    }
    r.verdict = IsoVerdict::ProvenNo;
    r.reason = "determinant vanishes on the full grid of " + std::to_string(total) + " points";
    return r;
}

IsoResult module_iso(const Module& m, const Module& n, const IsoSearchOptions& opts) {
    if (m.dim() != n.dim()) return early_no("dimensions differ", 0, opts);
    const auto hom = hom_space(m, n);
    if (hom.size() != hom_space(m, m).size() || hom.size() != hom_space(n, n).size())
        return early_no("endomorphism and hom dimensions differ", hom.size(), opts);
    return find_invertible(hom, m.dim(), m.field(), opts);
}

IsoResult bimodule_iso(const Bimodule& m, const Bimodule& n, const IsoSearchOptions& opts) {
    if (m.dim() != n.dim()) return early_no("dimensions differ", 0, opts);
    const auto hom = bimodule_hom_space(m, n);
    if (hom.size() != bimodule_hom_space(m, m).size() || hom.size() != bimodule_hom_space(n, n).size())
        return early_no("endomorphism and hom dimensions differ", hom.size(), opts);
    return find_invertible(hom, m.dim(), m.left->field, opts);
}

std::vector<std::size_t> generating_set(const Module& m) {
    const std::size_t n = m.dim();
    const Field& k = m.field();
    Mat span(n, 0, k);
    std::size_t current = 0;
    std::vector<std::size_t> gens;
    for (std::size_t v = 0; v < n && current < n; ++v) {
        const Mat ev = Mat::unit_vector(n, v, k);
        if (rank(hstack(span, ev)) == current) continue;
        for (const Mat& op : m.ops) span = hstack(span, op * ev);
        span = column_basis(span);
        current = span.cols();
        gens.push_back(v);
    }
    return gens;
}

bool projective_check(const Module& m) {
    if (m.side != Side::Right) throw Error("projective_check: right modules only");
    const BraidedHopf& b = *m.algebra;
    const std::size_t n = m.dim(), db = b.dim();
    if (n == 0) return true;
    const auto gens = generating_set(m);
    const std::size_t f_dim = gens.size() * db;
    // free module B^r and the surjection e_i (x) b |-> m_i . b
    Module free;
    free.algebra = &b;
    free.side = Side::Right;
    for (std::size_t c = 0; c < db; ++c) {
        Mat op(f_dim, f_dim, b.field);
        const Mat rm = b.right_mult(b.basis(c));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t i = 0; i < db; ++i)
                for (std::size_t j = 0; j < db; ++j) op(g * db + i, g * db + j) = rm(i, j);
        free.ops.push_back(op);
    }
    Mat pi(n, f_dim, b.field);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t c = 0; c < db; ++c) {
            const Mat img = m.ops[c] * Mat::unit_vector(n, gens[g], b.field);
            for (std::size_t i = 0; i < n; ++i) pi(i, g * db + c) = img[i];
        }
    std::vector<Mat> composites;
    for (const Mat& s : hom_space(m, free)) composites.push_back(pi * s);
    return coordinates(composites, Mat::identity(n, b.field)).has_value();
}

std::vector<Character> enumerate_characters(const BraidedHopf& a) {
    const std::size_t d = a.dim();
    auto run = [&](const std::vector<std::size_t>& gens, std::vector<Character>& out) {
        std::vector<std::vector<Scalar>> cands;
        for (std::size_t g : gens) cands.push_back(roots(minimal_polynomial(a.left_mult(a.basis(g))), a.field));
        Mat system = a.u.transpose();
        Mat rhs = Mat::identity(1, a.field);
        return character_search(a, gens, cands, 0, system, rhs, out);
    };
    std::vector<Character> out;
    if (run(acting_elements(a), out)) return out;
    out.clear();
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    run(all, out);
    return out;
}

}  // namespace hopf

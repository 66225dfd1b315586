#include "hopf/corpus.hpp"

namespace hopf {

namespace {

const RootOfUnity& require_root(const Field& field, int n, const char* who) {
    if (!field.root()) throw Error(std::string(who) + ": field carries no root of unity");
    if (field.root()->order != static_cast<unsigned>(n))
        throw Error(std::string(who) + ": root of unity has order " + std::to_string(field.root()->order) +
                    ", need " + std::to_string(n));
    return *field.root();
}

// Product in the braided tensor square of two vectors of H (x) H.
Mat square_product(const BraidedHopf& h, const Mat& a, const Mat& b) {
    const std::size_t d = h.dim();
    Mat out(d * d, 1, h.field);
    for (std::size_t p = 0; p < d * d; ++p) {
        if (a[p].is_zero()) continue;
        const std::size_t i1 = p / d, i2 = p % d;
        for (std::size_t q = 0; q < d * d; ++q) {
            if (b[q].is_zero()) continue;
            const std::size_t j1 = q / d, j2 = q % d;
            const Scalar c = a[p] * b[q] * h.bichar(h.degree(i2), h.degree(j1));
            for (std::size_t r1 = 0; r1 < d; ++r1) {
                const Scalar& x = h.m(r1, i1 * d + j1);
                if (x.is_zero()) continue;
                for (std::size_t r2 = 0; r2 < d; ++r2) {
                    const Scalar& y = h.m(r2, i2 * d + j2);
                    if (!y.is_zero()) out[r1 * d + r2] += c * x * y;
                }
            }
        }
    }
    return out;
}

GroupElement word_degree(const BraidedHopf& h, const std::vector<std::size_t>& word, std::size_t from) {
    GroupElement g = h.group().identity();
    for (std::size_t i = from; i < word.size(); ++i) g = h.group().add(g, h.degree(h.generators[word[i]]));
    return g;
}

Mat antipode_of_word(const BraidedHopf& h, const std::vector<std::size_t>& word, std::size_t from,
                     const std::vector<Mat>& gen_antipode) {
    if (from == word.size()) return h.u;
    const std::size_t a = word[from];
    const Scalar c = h.bichar(h.degree(h.generators[a]), word_degree(h, word, from + 1));
    return h.product(antipode_of_word(h, word, from + 1, gen_antipode), gen_antipode[a]).scaled(c);
}

}  // namespace

void extend_from_generators(BraidedHopf& h, const std::vector<Mat>& gen_delta, const std::vector<Scalar>& gen_counit,
                            const std::vector<Mat>& gen_antipode) {
    const std::size_t d = h.dim();
    if (h.words.size() != d) throw DimensionMismatch("one generator word per basis vector required");
    h.delta = Mat(d * d, d, h.field);
    h.counit = Mat(1, d, h.field);
    h.S = Mat(d, d, h.field);
    const Mat uu = kron(h.u, h.u);
    for (std::size_t b = 0; b < d; ++b) {
        const auto& word = h.words[b];
        Mat dv = uu;
        Scalar e = h.field.one();
        for (std::size_t g : word) {
            dv = square_product(h, dv, gen_delta[g]);
            e *= gen_counit[g];
        }
        const Mat sv = antipode_of_word(h, word, 0, gen_antipode);
        for (std::size_t r = 0; r < d * d; ++r) h.delta(r, b) = dv[r];
        for (std::size_t r = 0; r < d; ++r) h.S(r, b) = sv[r];
        h.counit(0, b) = e;
    }
}

BraidedHopf group_algebra(const std::vector<int>& orders, const Field& field) {
    if (orders.empty()) throw Error("group_algebra: need at least one cyclic factor");
    GradingGroup G(orders);
    const std::size_t d = G.order();
    BraidedHopf h;
    h.name = "group_algebra";
    for (int n : orders) h.name += "_" + std::to_string(n);
    h.field = field;
    h.bichar = Bicharacter::trivial(GradingGroup(), field);
    h.space.degrees.assign(d, GroupElement{});
    h.m = Mat(d, d * d, field);
    h.u = Mat::unit_vector(d, 0, field);
    h.delta = Mat(d * d, d, field);
    h.counit = Mat(1, d, field);
    h.S = Mat(d, d, field);
    for (std::size_t a = 0; a < d; ++a) {
        const GroupElement ga = G.element(a);
        for (std::size_t b = 0; b < d; ++b) h.m(G.index_of(G.add(ga, G.element(b))), a * d + b) = field.one();
        h.delta(a * d + a, a) = field.one();
        h.counit(0, a) = field.one();
        h.S(G.index_of(G.negate(ga)), a) = field.one();
        std::vector<std::size_t> word;
        for (std::size_t f = 0; f < orders.size(); ++f)
            for (int k = 0; k < ga[f]; ++k) word.push_back(f);
        h.words.push_back(std::move(word));
    }
    for (std::size_t f = 0; f < orders.size(); ++f) {
        GroupElement e = G.identity();
        e[f] = 1;
        h.generators.push_back(G.index_of(e));
    }
    return h;
}

BraidedHopf taft(int n, const Field& field) {
    if (n < 2) throw Error("taft: n must be at least 2");
    const Scalar zeta = require_root(field, n, "taft").value;
    const std::size_t N = static_cast<std::size_t>(n);
    const std::size_t d = N * N;
    BraidedHopf h;
    h.name = "taft_" + std::to_string(n);
    h.field = field;
    h.bichar = Bicharacter::trivial(GradingGroup(), field);
    h.space.degrees.assign(d, GroupElement{});
    h.m = Mat(d, d * d, field);
    h.u = Mat::unit_vector(d, 0, field);
    // (g^i x^j)(g^k x^l) = zeta^(jk) g^(i+k) x^(j+l)
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
                for (std::size_t l = 0; l < N; ++l) {
                    if (j + l >= N) continue;
                    const std::size_t out = ((i + k) % N) * N + (j + l);
                    h.m(out, (i * N + j) * d + (k * N + l)) = zeta.pow(static_cast<std::int64_t>(j * k));
                }
    const std::size_t g = N, x = 1;
    h.generators = {g, x};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::vector<std::size_t> w(i, 0);
            w.insert(w.end(), j, 1);
            h.words.push_back(std::move(w));
        }
    const Mat eg = h.basis(g), ex = h.basis(x), e1 = h.basis(0);
    const std::size_t ginv = (N - 1) * N;
    const Mat dg = kron(eg, eg);
    const Mat dx = kron(ex, e1) + kron(eg, ex);
    extend_from_generators(h, {dg, dx}, {field.one(), field.zero()}, {h.basis(ginv), -h.basis(ginv + 1)});
    return h;
}

BraidedHopf sweedler() {
    BraidedHopf h = taft(2, Field::rationals().with_root(-1, 2));
    h.name = "sweedler";
    return h;
}

BraidedHopf exterior_hopf(int n, const Field& field) {
    if (n < 1) throw Error("exterior_hopf: need at least one generator");
    if (field.characteristic() == 2) throw Error("exterior_hopf: characteristic 2 is not allowed");
    const std::size_t d = std::size_t{1} << n;
    BraidedHopf h;
    h.name = "exterior_hopf_" + std::to_string(n);
    h.field = field;
    h.bichar = Bicharacter(GradingGroup({2}), {{1}}, field.from_int(-1), 2);
    for (std::size_t a = 0; a < d; ++a) h.space.degrees.push_back({__builtin_popcountll(a) % 2});
    h.m = Mat(d, d * d, field);
    h.u = Mat::unit_vector(d, 0, field);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a & b) continue;
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                if (a >> i & 1) inversions += __builtin_popcountll(b & ((std::size_t{1} << i) - 1));
            h.m(a | b, a * d + b) = field.from_int(inversions % 2 ? -1 : 1);
        }
    std::vector<Mat> gd, gs;
    std::vector<Scalar> ge;
    const Mat e1 = h.basis(0);
    for (int i = 0; i < n; ++i) {
        const std::size_t xi = std::size_t{1} << i;
        h.generators.push_back(xi);
        gd.push_back(kron(h.basis(xi), e1) + kron(e1, h.basis(xi)));
        ge.push_back(field.zero());
        gs.push_back(-h.basis(xi));
    }
    for (std::size_t a = 0; a < d; ++a) {
        std::vector<std::size_t> w;
        for (int i = 0; i < n; ++i)
            if (a >> i & 1) w.push_back(static_cast<std::size_t>(i));
        h.words.push_back(std::move(w));
    }
    extend_from_generators(h, gd, ge, gs);
    return h;
}

BraidedHopf braided_line(int n, const Field& field) {
    if (n < 2) throw Error("braided_line: n must be at least 2");
    const Scalar zeta = require_root(field, n, "braided_line").value;
    const std::size_t d = static_cast<std::size_t>(n);
    BraidedHopf h;
    h.name = "braided_line_" + std::to_string(n);
    h.field = field;
    h.bichar = Bicharacter(GradingGroup({n}), {{1}}, zeta, static_cast<unsigned>(n));
    for (std::size_t a = 0; a < d; ++a) h.space.degrees.push_back({static_cast<int>(a)});
    h.m = Mat(d, d * d, field);
    h.u = Mat::unit_vector(d, 0, field);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; a + b < d; ++b) h.m(a + b, a * d + b) = field.one();
    h.generators = {1};
    for (std::size_t a = 0; a < d; ++a) h.words.push_back(std::vector<std::size_t>(a, 0));
    const Mat e1 = h.basis(0), ex = h.basis(1);
    extend_from_generators(h, {kron(ex, e1) + kron(e1, ex)}, {field.zero()}, {-ex});
    return h;
}

std::vector<BraidedHopf> braided_lines() {
    return {braided_line(2, Field::prime(3).with_root(2, 2)), braided_line(3, Field::prime(7).with_root(2, 3)),
            braided_line(4, Field::prime(5).with_root(2, 4))};
}

std::vector<BraidedHopf> braided_corpus() {
    std::vector<BraidedHopf> out;
    for (int n = 1; n <= 3; ++n) out.push_back(exterior_hopf(n));
    for (auto& h : braided_lines()) out.push_back(std::move(h));
    return out;
}

std::vector<BraidedHopf> full_corpus() {
    std::vector<BraidedHopf> out;
    for (const std::vector<int>& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
        out.push_back(group_algebra(orders));
        out.push_back(dual_hopf(out.back()));
    }
    out.push_back(sweedler());
    out.push_back(taft(3, Field::prime(7).with_root(2, 3)));
    for (auto& h : braided_corpus()) out.push_back(std::move(h));
    return out;
}

}  // namespace hopf

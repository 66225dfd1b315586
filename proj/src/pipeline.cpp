#include "hopf/pipeline.hpp"

#include <numeric>
#include <unordered_map>

namespace hopf {

namespace {

std::size_t product(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
    std::size_t p = 1;
    for (std::size_t i = from; i < to; ++i) p *= v[i];
    return p;
}

}  // namespace

Pipeline::Pipeline(std::vector<std::size_t> input_legs, const Field& field)
    : inputs_(input_legs), legs_(std::move(input_legs)), field_(field) {}

Pipeline& Pipeline::then(const Mat& f, std::size_t first, std::size_t count) {
    return then(f, first, count, {f.rows()});
}

Pipeline& Pipeline::then(const Mat& f, std::size_t first, std::size_t count, std::vector<std::size_t> out_legs) {
    if (first + count > legs_.size()) throw DimensionMismatch("pipeline: leg range out of bounds");
    if (!f.field().compatible(field_)) throw FieldMismatch("pipeline: mixed fields");
    Step s;
    s.first = first;
    s.count = count;
    s.in_size = product(legs_, first, first + count);
    s.out_size = product(out_legs, 0, out_legs.size());
    if (f.cols() != s.in_size || f.rows() != s.out_size) {
        throw DimensionMismatch("pipeline: map of shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                " applied to legs of size " + std::to_string(s.in_size));
    }
    s.legs_before = legs_;
    s.columns.resize(f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t i = 0; i < f.rows(); ++i)
            if (!f(i, j).is_zero()) s.columns[j].emplace_back(i, f(i, j));
    legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(first),
                legs_.begin() + static_cast<std::ptrdiff_t>(first + count));
    legs_.insert(legs_.begin() + static_cast<std::ptrdiff_t>(first), out_legs.begin(), out_legs.end());
    steps_.push_back(std::move(s));
    return *this;
}

Mat Pipeline::matrix() const {
    const std::size_t in_dim = product(inputs_, 0, inputs_.size());
    const std::size_t out_dim = product(legs_, 0, legs_.size());
    Mat out(out_dim, in_dim, field_);
    for (std::size_t j = 0; j < in_dim; ++j) {
        std::unordered_map<std::size_t, Scalar> cur{{j, field_.one()}};
        for (const Step& s : steps_) {
            const std::size_t post = product(s.legs_before, s.first + s.count, s.legs_before.size());
            std::unordered_map<std::size_t, Scalar> next;
            for (const auto& [idx, val] : cur) {
                std::size_t pre = idx / (s.in_size * post);
                std::size_t k = (idx / post) % s.in_size;
                std::size_t rest = idx % post;
                for (const auto& [o, coef] : s.columns[k]) {
                    std::size_t nidx = (pre * s.out_size + o) * post + rest;
                    auto [it, fresh] = next.try_emplace(nidx, coef * val);
                    if (!fresh) it->second += coef * val;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            cur = std::move(next);
        }
        for (const auto& [idx, val] : cur) out(idx, j) = val;
    }
    return out;
}

}  // namespace hopf

#pragma once

// Evaluates composites of linear maps acting on individual legs of a tensor
// product, i.e. string diagrams read top to bottom. Each step replaces a
// contiguous run of legs by the legs of the map's codomain. Evaluation runs
// on sparse basis tensors, so composites through V^{(x)4} stay cheap even
// when the dense matrix of an intermediate map would not be.

#include <cstddef>
#include <vector>

#include "hopf/mat.hpp"

namespace hopf {

class Pipeline {
public:
    Pipeline(std::vector<std::size_t> input_legs, const Field& field);

    /// Applies `f` to legs [first, first + count); `out_legs` are the
    /// dimensions of the codomain legs and must multiply to f.rows().
    Pipeline& then(const Mat& f, std::size_t first, std::size_t count, std::vector<std::size_t> out_legs);
    /// Single output leg of dimension f.rows().
    Pipeline& then(const Mat& f, std::size_t first, std::size_t count = 1);

    const std::vector<std::size_t>& legs() const { return legs_; }

    /// The composite as a prod(out legs) x prod(in legs) matrix.
    Mat matrix() const;

private:
    struct Step {
        std::size_t first = 0;
        std::size_t count = 0;
        std::size_t in_size = 0;
        std::size_t out_size = 0;
        std::vector<std::size_t> legs_before;
        // nonzeros of each column of the map: (row, value)
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    };

    std::vector<std::size_t> inputs_;
    std::vector<std::size_t> legs_;
    Field field_;
    std::vector<Step> steps_;
};

}  // namespace hopf

#pragma once

// Dense row-major matrix with the two normalizations used throughout:
// row-stochastic and column-stochastic rescaling. Summation order is
// fixed (ascending index) so results are bit-reproducible.

#include <cstddef>
#include <vector>

#include "shockgrid/errors.hpp"

namespace shockgrid {

class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }

    double row_sum(std::size_t r) const {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += at(r, c);
        return s;
    }
    double col_sum(std::size_t c) const {
        double s = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) s += at(r, c);
        return s;
    }
    double total() const {
        double s = 0.0;
        for (double v : data_) s += v;
        return s;
    }

    friend bool operator==(const matrix&, const matrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

struct normalize_result {
    matrix normalized;
    std::vector<std::size_t> zero_lines; // rows (or columns) whose sum was zero
};

inline void check_nonnegative(const matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) < 0.0)
                raise(errc::negative_entry, "entry (" + std::to_string(r) + "," +
                                                std::to_string(c) + ") is negative");
}

// Rows with a positive sum are rescaled to sum 1; all-zero rows are left
// untouched and reported.
inline normalize_result row_normalize(const matrix& m) {
    check_nonnegative(m);
    normalize_result out{m, {}};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double s = m.row_sum(r);
        if (s == 0.0) {
            out.zero_lines.push_back(r);
            continue;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) out.normalized.at(r, c) = m.at(r, c) / s;
    }
    return out;
}

inline normalize_result column_normalize(const matrix& m) {
    check_nonnegative(m);
    normalize_result out{m, {}};
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double s = m.col_sum(c);
        if (s == 0.0) {
            out.zero_lines.push_back(c);
            continue;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) out.normalized.at(r, c) = m.at(r, c) / s;
    }
    return out;
}

} // namespace shockgrid

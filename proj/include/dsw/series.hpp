#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsw/graded.hpp"
#include "dsw/integer.hpp"

namespace dsw {

/// Integer power series truncated at degree N (coefficients 0..N).
///
/// Poincare series of graded vector spaces have nonnegative coefficients;
/// differences and quotients of them need not, so the type itself is signed
/// and `is_nonnegative` is the check.
class PoincareSeries {
public:
    explicit PoincareSeries(int order);
    PoincareSeries(int order, std::vector<Integer> coefficients);

    static PoincareSeries one(int order);
    /// c * t^degree (zero if degree > order).
    static PoincareSeries monomial(int order, int degree, const Integer& c = 1);

    int order() const { return order_; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    const Integer& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    Integer& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }

    bool is_zero() const;
    bool is_nonnegative() const;
    std::size_t nonzero_terms() const;

    /// "1 + t^3 + t^5 + t^8" style rendering.
    std::string to_string() const;

    bool operator==(const PoincareSeries& other) const = default;

private:
    int order_;
    std::vector<Integer> coeffs_;
};

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
/// Truncated quotient a / b. The constant term of b must be +1 or -1.
PoincareSeries divide(const PoincareSeries& a, const PoincareSeries& b);

/// Dimension of each homogeneous degree.
using GradedDims = std::map<long long, Integer>;

/// Tensor algebra 1 / (1 - sum_j t^{d_j}).
PoincareSeries series_T(const GradedModule& module, int order);
/// Tensor algebra on a graded space given by its degree dimensions.
PoincareSeries series_T(const GradedDims& dims, int order);
/// Free graded commutative algebra: an even-degree class of degree d
/// contributes 1/(1 - t^d), an odd-degree one (1 + t^d).
PoincareSeries series_S(const GradedDims& dims, int order);
/// Exterior algebra prod_j (1 + t^{d_j}). Requires every degree odd.
PoincareSeries series_Lambda(const GradedModule& module, int order);

/// Degree dimensions of a module, optionally shifted up by `shift`.
GradedDims module_dims(const GradedModule& module, long long shift = 0);

}  // namespace dsw

#include "dsw/series.hpp"

#include <stdexcept>

namespace dsw {

PoincareSeries::PoincareSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

PoincareSeries::PoincareSeries(int order, std::vector<Integer> coefficients) : PoincareSeries(order) {
    if (coefficients.size() > coeffs_.size()) coefficients.resize(coeffs_.size());
    std::copy(coefficients.begin(), coefficients.end(), coeffs_.begin());
}

PoincareSeries PoincareSeries::one(int order) { return monomial(order, 0); }

PoincareSeries PoincareSeries::monomial(int order, int degree, const Integer& c) {
    PoincareSeries s(order);
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    if (degree <= order) s[degree] = c;
    return s;
}

bool PoincareSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool PoincareSeries::is_nonnegative() const {
    for (const auto& c : coeffs_) {
        if (c < 0) return false;
    }
    return true;
}

std::size_t PoincareSeries::nonzero_terms() const {
    std::size_t count = 0;
    for (const auto& c : coeffs_) count += c != 0 ? 1 : 0;
    return count;
}

std::string PoincareSeries::to_string() const {
    std::string out;
    for (int d = 0; d <= order_; ++d) {
        const Integer& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (d == 0 || mag != 1) out += mag.str();
        if (d > 0) out += d == 1 ? "t" : "t^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

namespace {

void check_orders(const PoincareSeries& a, const PoincareSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series truncation orders differ");
}

}  // namespace

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) {
    check_orders(a, b);
    PoincareSeries out = a;
    for (int d = 0; d <= a.order(); ++d) out[d] += b[d];
    return out;
}

PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b) {
    check_orders(a, b);
    PoincareSeries out = a;
    for (int d = 0; d <= a.order(); ++d) out[d] -= b[d];
    return out;
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
    check_orders(a, b);
    PoincareSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

PoincareSeries divide(const PoincareSeries& a, const PoincareSeries& b) {
    check_orders(a, b);
    if (b[0] != 1 && b[0] != -1) throw std::invalid_argument("series division needs a unit constant term");
    PoincareSeries q(a.order());
    for (int d = 0; d <= a.order(); ++d) {
        Integer r = a[d];
        for (int j = 1; j <= d; ++j) r -= b[j] * q[d - j];
        q[d] = r * b[0];
    }
    return q;
}

PoincareSeries series_T(const GradedModule& module, int order) { return series_T(module_dims(module), order); }

PoincareSeries series_T(const GradedDims& dims, int order) {
    PoincareSeries denominator = PoincareSeries::one(order);
    for (const auto& [degree, dim] : dims) {
        if (degree < 1) throw std::invalid_argument("series_T: degrees must be positive");
        if (degree <= order) denominator[static_cast<int>(degree)] -= dim;
    }
    return divide(PoincareSeries::one(order), denominator);
}

PoincareSeries series_S(const GradedDims& dims, int order) {
    PoincareSeries out = PoincareSeries::one(order);
    for (const auto& [degree, dim] : dims) {
        if (degree < 1) throw std::invalid_argument("series_S: degrees must be positive");
        if (dim < 0) throw std::invalid_argument("series_S: negative dimension");
        if (degree > order) continue;
        const int d = static_cast<int>(degree);
        for (Integer copies = 0; copies < dim; ++copies) {
            if (d % 2 == 0) {
                for (int i = d; i <= order; ++i) out[i] += out[i - d];
            } else {
                for (int i = order; i >= d; --i) out[i] += out[i - d];
            }
        }
    }
    return out;
}

PoincareSeries series_Lambda(const GradedModule& module, int order) {
    if (module.parity() != ParityClass::all_odd) {
        throw std::invalid_argument("exterior algebra series needs every generator in odd degree");
    }
    return series_S(module_dims(module), order);
}

GradedDims module_dims(const GradedModule& module, long long shift) {
    GradedDims dims;
    for (int d : module.degrees()) dims[d + shift] += 1;
    return dims;
}

}  // namespace dsw

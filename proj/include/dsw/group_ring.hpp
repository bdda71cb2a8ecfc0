#pragma once

#include <map>
#include <string>
#include <string_view>

#include "dsw/integer.hpp"
#include "dsw/permutation.hpp"

namespace dsw {

/// An element of the integral group ring Z[S_k], stored sparsely.
///
/// Terms are kept in lexicographic order of the one-line notation and zero
/// coefficients are never stored, so two equal elements compare equal
/// member-wise.
class GroupRingElement {
public:
    using Terms = std::map<Permutation, Integer>;

    explicit GroupRingElement(int arity);

    /// The single term 1*sigma.
    static GroupRingElement basis(const Permutation& sigma);
    static GroupRingElement one(int arity);

    int arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(const Permutation& sigma) const;

    /// Adds c*sigma, pruning the entry if it cancels.
    void add_term(const Permutation& sigma, const Integer& c);

    /// Canonical text form: one "<coeff> <a1,...,ak>" line per term.
    std::string to_text() const;

    /// Inverse of to_text. Blank lines and '#' comments are ignored; the
    /// arity is taken from the first term (or `arity_hint` if there are none).
    static GroupRingElement from_text(std::string_view text, int arity_hint = 0);

    bool operator==(const GroupRingElement&) const = default;

private:
    int arity_;
    Terms terms_;
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_scale(const Integer& c, const GroupRingElement& a);

/// Convolution product: the coefficient of pi is the sum of A(sigma)B(tau)
/// over compose(sigma, tau) = pi. Acting on tensors, A*B means "A, then B".
GroupRingElement gr_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Composite of two operators written outer o inner (inner applied first).
/// Equal to gr_multiply(inner, outer) under the right action.
GroupRingElement operator_composite(const GroupRingElement& outer, const GroupRingElement& inner);

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const Integer& c, const GroupRingElement& a);

}  // namespace dsw

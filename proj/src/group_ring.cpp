#include "dsw/group_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace dsw {

namespace {

void require_same_arity(const GroupRingElement& a, const GroupRingElement& b, const char* op) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) + " vs " +
                                    std::to_string(b.arity()) + ")");
    }
}

}  // namespace

GroupRingElement::GroupRingElement(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("group ring arity must be >= 1");
}

GroupRingElement GroupRingElement::basis(const Permutation& sigma) {
    GroupRingElement out(sigma.arity());
    out.terms_.emplace(sigma, 1);
    return out;
}

GroupRingElement GroupRingElement::one(int arity) { return basis(Permutation::identity(arity)); }

Integer GroupRingElement::coefficient(const Permutation& sigma) const {
    const auto it = terms_.find(sigma);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Permutation& sigma, const Integer& c) {
    if (sigma.arity() != arity_) throw std::invalid_argument("add_term: arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sigma, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string GroupRingElement::to_text() const {
    std::string out;
    for (const auto& [sigma, c] : terms_) {
        out += c.str();
        out += ' ';
        out += sigma.to_string();
        out += '\n';
    }
    return out;
}

GroupRingElement GroupRingElement::from_text(std::string_view text, int arity_hint) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<GroupRingElement> out;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string coeff_text, perm_text, extra;
        if (!(fields >> coeff_text)) continue;
        if (!(fields >> perm_text) || (fields >> extra)) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<coeff> <a1,...,ak>'");
        }
        const auto coeff = parse_integer(coeff_text);
        if (!coeff) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad coefficient");
        const Permutation sigma = Permutation::parse(perm_text);
        if (!out) out.emplace(sigma.arity());
        out->add_term(sigma, *coeff);
    }
    if (!out) {
        if (arity_hint < 1) throw std::invalid_argument("empty group ring element with no arity");
        return GroupRingElement(arity_hint);
    }
    return *out;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_arity(a, b, "gr_add");
    GroupRingElement out = a;
    for (const auto& [sigma, c] : b.terms()) out.add_term(sigma, c);
    return out;
}

GroupRingElement gr_scale(const Integer& c, const GroupRingElement& a) {
    GroupRingElement out(a.arity());
    if (c == 0) return out;
    for (const auto& [sigma, coeff] : a.terms()) out.add_term(sigma, c * coeff);
    return out;
}

GroupRingElement gr_multiply(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_arity(a, b, "gr_multiply");
    GroupRingElement out(a.arity());
    for (const auto& [sigma, ca] : a.terms()) {
        for (const auto& [tau, cb] : b.terms()) out.add_term(compose(sigma, tau), ca * cb);
    }
    return out;
}

GroupRingElement operator_composite(const GroupRingElement& outer, const GroupRingElement& inner) {
    return gr_multiply(inner, outer);
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) { return gr_add(a, b); }
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    return gr_add(a, gr_scale(-1, b));
}
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return gr_multiply(a, b); }
GroupRingElement operator*(const Integer& c, const GroupRingElement& a) { return gr_scale(c, a); }

}  // namespace dsw

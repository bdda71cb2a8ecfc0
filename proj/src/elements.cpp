#include "dsw/elements.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsw {

namespace {

void require_symmetrizer_arity(int k) {
    if (k < 1 || k > kMaxSymmetrizerArity) {
        throw std::invalid_argument("symmetrizer arity must be in 1.." + std::to_string(kMaxSymmetrizerArity) +
                                    " (got " + std::to_string(k) + ")");
    }
}

}  // namespace

GroupRingElement build_shat(int k) {
    require_symmetrizer_arity(k);
    GroupRingElement out(k);
    for (const auto& sigma : all_permutations(k)) out.add_term(sigma, sigma.sign());
    return out;
}

GroupRingElement build_sbar(int k) {
    require_symmetrizer_arity(k);
    GroupRingElement out(k);
    for (const auto& sigma : all_permutations(k)) out.add_term(sigma, 1);
    return out;
}

std::vector<Permutation> switching_set(int j, int k) {
    if (k < 1 || j < 1 || j > k) {
        throw std::invalid_argument("switching set needs 1 <= j <= k (got j=" + std::to_string(j) +
                                    ", k=" + std::to_string(k) + ")");
    }
    std::vector<int> rest;
    for (int a = 1; a <= k; ++a) {
        if (a != j) rest.push_back(a);
    }
    std::vector<Permutation> out;
    for (int pos = 0; pos < k; ++pos) {
        std::vector<int> images = rest;
        images.insert(images.begin() + pos, j);
        out.emplace_back(std::move(images));
    }
    return out;
}

GroupRingElement build_that(int j, int k) {
    GroupRingElement out(std::max(k, 1));
    for (const auto& sigma : switching_set(j, k)) out.add_term(sigma, sigma.sign());
    return out;
}

GroupRingElement build_tbar(int j, int k) {
    GroupRingElement out(std::max(k, 1));
    for (const auto& sigma : switching_set(j, k)) out.add_term(sigma, 1);
    return out;
}

GroupRingElement tensor_embed(std::span<const GroupRingElement> parts) {
    if (parts.empty()) throw std::invalid_argument("tensor_embed needs at least one factor");
    int arity = 0;
    std::size_t count = 1;
    for (const auto& part : parts) {
        arity += part.arity();
        count *= std::max<std::size_t>(part.size(), 1);
        if (count > kMaxEmbeddedTerms) throw std::length_error("tensor_embed: term count exceeds guard");
    }

    // Expand factor by factor; images are shifted by the running offset.
    std::map<std::vector<int>, Integer> current{{{}, 1}};
    for (const auto& part : parts) {
        std::map<std::vector<int>, Integer> next;
        const int offset = static_cast<int>(current.begin()->first.size());
        for (const auto& [prefix, c] : current) {
            for (const auto& [sigma, d] : part.terms()) {
                std::vector<int> images = prefix;
                for (int a : sigma.images()) images.push_back(a + offset);
                next[std::move(images)] += c * d;
            }
        }
        current = std::move(next);
        if (current.empty()) return GroupRingElement(arity);
    }

    GroupRingElement out(arity);
    for (auto& [images, c] : current) out.add_term(Permutation(images), c);
    return out;
}

GroupRingElement tensor_embed(std::initializer_list<GroupRingElement> parts) {
    return tensor_embed(std::span<const GroupRingElement>(parts.begin(), parts.size()));
}

GroupRingElement embed_at(const GroupRingElement& part, int offset, int k) {
    const int rest = k - offset - part.arity();
    if (offset < 0 || rest < 0) throw std::invalid_argument("embed_at: block does not fit");
    std::vector<GroupRingElement> parts;
    if (offset > 0) parts.push_back(GroupRingElement::one(offset));
    parts.push_back(part);
    if (rest > 0) parts.push_back(GroupRingElement::one(rest));
    return tensor_embed(parts);
}

Permutation left_rotation(int k) {
    std::vector<int> images;
    for (int a = 2; a <= k; ++a) images.push_back(a);
    images.push_back(1);
    return Permutation(std::move(images));
}

GroupRingElement build_beta(int k) {
    if (k < 1 || k > kMaxBetaArity) {
        throw std::invalid_argument("beta arity must be in 1.." + std::to_string(kMaxBetaArity) + " (got " +
                                    std::to_string(k) + ")");
    }
    static std::mutex mutex;
    static std::map<int, GroupRingElement> cache;
    {
        std::lock_guard lock(mutex);
        if (const auto it = cache.find(k); it != cache.end()) return it->second;
    }

    GroupRingElement result = GroupRingElement::one(k);
    if (k >= 2) {
        GroupRingElement tail = GroupRingElement::one(k);
        tail.add_term(left_rotation(k), -1);
        const GroupRingElement head =
            k == 2 ? GroupRingElement::one(2) : tensor_embed({GroupRingElement::one(1), build_beta(k - 1)});
        result = gr_multiply(head, tail);
    }

    std::lock_guard lock(mutex);
    return cache.emplace(k, std::move(result)).first->second;
}

bool verify_dsw(int k) {
    const GroupRingElement beta = build_beta(k);
    return gr_multiply(beta, beta) == gr_scale(k, beta);
}

}  // namespace dsw

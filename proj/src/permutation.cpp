#include "dsw/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dsw {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int k = arity();
    if (k == 0) throw std::invalid_argument("permutation must have arity >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int a : images_) {
        if (a < 1 || a > k || seen[static_cast<std::size_t>(a - 1)]) {
            throw std::invalid_argument("not a bijection of {1.." + std::to_string(k) + "}");
        }
        seen[static_cast<std::size_t>(a - 1)] = true;
    }
}

Permutation Permutation::identity(int arity) {
    if (arity < 1) throw std::invalid_argument("permutation must have arity >= 1");
    std::vector<int> images(static_cast<std::size_t>(arity));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    while (!text.empty() && (text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
    std::vector<int> images;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string token(text.substr(start, comma - start));
        if (token.empty()) throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
        }
        if (used != token.size()) throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
        images.push_back(value);
        start = comma + 1;
    }
    return Permutation(std::move(images));
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.arity() != tau.arity()) {
        throw std::invalid_argument("compose: arity mismatch (" + std::to_string(sigma.arity()) + " vs " +
                                    std::to_string(tau.arity()) + ")");
    }
    std::vector<int> images(static_cast<std::size_t>(sigma.arity()));
    for (int i = 1; i <= sigma.arity(); ++i) images[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int arity) {
    std::vector<int> images(static_cast<std::size_t>(arity));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace dsw

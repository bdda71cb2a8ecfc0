#include "dsw/eigen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dsw/elements.hpp"
#include "dsw/parallel.hpp"

namespace dsw {

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
    if (text == "even") return Parity::even;
    if (text == "odd") return Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd' (got '" + text + "')");
}

std::vector<int> default_degrees(int ell, Parity parity) {
    std::vector<int> degrees;
    for (int i = 1; i <= ell; ++i) degrees.push_back(parity == Parity::even ? 2 * i : 2 * i - 1);
    return degrees;
}

std::vector<int> alternate_degrees(int ell, Parity parity) {
    return std::vector<int>(static_cast<std::size_t>(ell), parity == Parity::even ? 2 : 3);
}

TensorVector apply_block_symmetrizer(const TensorVector& v, int n, int ell, Parity parity) {
    const int k = v.length();
    if (n * ell > k) throw std::invalid_argument("symmetrizer blocks exceed the tensor length");
    // The full sum over S_l factors as (s_{l-1} (x) 1) * t_{l,l}, so each block
    // is symmetrized by the chain t_{2,2}, t_{3,3}, ..., t_{l,l} on its prefix.
    std::vector<GroupRingElement> chain;
    for (int j = 2; j <= ell; ++j) chain.push_back(parity == Parity::even ? build_that(j, j) : build_tbar(j, j));
    TensorVector out = v;
    for (int block = 0; block < n; ++block) {
        for (const auto& step : chain) out = apply(embed_at(step, block * ell, k), out);
    }
    return out;
}

TensorVector apply_beta_chain(const TensorVector& v, int offset, int length) {
    const int k = v.length();
    if (length < 0) length = k - offset;
    if (offset < 0 || length < 1 || offset + length > k) throw std::invalid_argument("beta range out of bounds");
    // beta_L = (1^{L-2} (x) beta_2)(1^{L-3} (x) (1 - rho_3)) ... (1 - rho_L),
    // applied left factor first.
    TensorVector out = v;
    for (int j = 2; j <= length; ++j) {
        GroupRingElement step = GroupRingElement::one(j);
        step.add_term(left_rotation(j), -1);
        out = apply(embed_at(step, offset + length - j, k), out);
    }
    return out;
}

EigenReport compute_constant(int n, int ell, Parity parity, const EigenOptions& options) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (ell < 2) throw std::invalid_argument("l must be at least 2");
    const int k = n * ell + 1;
    if (k > kMaxSandwichLength) {
        throw std::invalid_argument("n*l+1 = " + std::to_string(k) + " exceeds the guard of " +
                                    std::to_string(kMaxSandwichLength));
    }
    const std::vector<int> degrees = options.degrees.value_or(default_degrees(ell, parity));
    const GradedModule module(degrees);
    if (module.rank() != ell) throw std::invalid_argument("degree list must have exactly l entries");
    if (module.parity() == ParityClass::mixed) {
        throw std::invalid_argument("mixed parity modules are not covered by the eigen-constant relation");
    }
    if ((module.parity() == ParityClass::all_even) != (parity == Parity::even)) {
        throw std::invalid_argument("degree list parity does not match the requested parity");
    }

    std::vector<TensorWord> words;
    std::vector<int> y(static_cast<std::size_t>(ell));
    std::iota(y.begin(), y.end(), 1);
    for (int i = 1; i <= ell; ++i) {
        std::vector<int> letters;
        for (int b = 0; b < n; ++b) letters.insert(letters.end(), y.begin(), y.end());
        letters.push_back(i);
        words.emplace_back(std::span<const int>(letters));
    }
    // Random words whose symmetrized image is nonzero: with uniform parity a
    // block survives the symmetrizer exactly when its letters are distinct, so
    // each block is drawn as a uniform permutation of 1..l.
    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.sample; ++s) {
        std::vector<int> letters;
        for (int b = 0; b < n; ++b) {
            std::vector<int> block = y;
            for (int i = ell - 1; i > 0; --i) {
                std::uniform_int_distribution<int> pick(0, i);
                std::swap(block[static_cast<std::size_t>(i)], block[static_cast<std::size_t>(pick(rng))]);
            }
            letters.insert(letters.end(), block.begin(), block.end());
        }
        letters.push_back(std::uniform_int_distribution<int>(1, ell)(rng));
        words.emplace_back(std::span<const int>(letters));
    }

    std::vector<std::optional<Integer>> ratios(words.size());
    parallel_for(words.size(), options.threads, [&](std::size_t i) {
        const TensorVector u = apply_block_symmetrizer(TensorVector::from_word(module, words[i]), n, ell, parity);
        if (u.is_zero()) return;
        const TensorVector w = apply_block_symmetrizer(apply_beta_chain(u), n, ell, parity);
        const auto e = w.ratio_to(u);
        if (!e) {
            throw std::runtime_error("sandwich image of " + words[i].to_string() +
                                     " is not proportional to its symmetrized input");
        }
        ratios[i] = *e;
    });

    EigenReport report;
    report.n = n;
    report.ell = ell;
    report.parity = parity;
    report.seed = options.seed;
    report.degree_assignments_tested.push_back(degrees);
    std::optional<Integer> value;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!ratios[i]) continue;
        ++report.vectors_tested;
        if (!value) {
            value = *ratios[i];
        } else if (*value != *ratios[i]) {
            throw std::runtime_error("inconsistent eigenvalues: " + value->str() + " and " + ratios[i]->str() +
                                     " (word " + words[i].to_string() + ")");
        }
    }
    if (!value) throw std::runtime_error("every test vector has a zero symmetrized image");
    report.signed_value = *value;
    report.magnitude = abs(*value);
    report.consistent = true;
    for (int q : kSmallPrimes) {
        if (gcd(report.magnitude, Integer(q)) == 1) report.prime_to.push_back(q);
    }
    return report;
}

Integer closed_form_c1(int ell) {
    if (ell < 2) throw std::invalid_argument("l must be at least 2");
    return Integer(ell + 1) * factorial(ell - 1);
}

Integer closed_form_cn2(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return power(Integer(3), static_cast<unsigned>(n));
}

Integer conjectured_value(int n, int ell) {
    return power(Integer(ell + 1) * factorial(ell - 1), static_cast<unsigned>(n));
}

std::vector<ScanRow> conjecture_scan(int max_n, int max_ell, unsigned threads) {
    std::vector<ScanRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        for (int ell = 2; ell <= max_ell; ++ell) rows.push_back(ScanRow{n, ell, 0, 0, conjectured_value(n, ell), ""});
    }
    parallel_for(rows.size() * 2, threads, [&](std::size_t job) {
        ScanRow& row = rows[job / 2];
        const Parity parity = job % 2 == 0 ? Parity::even : Parity::odd;
        (parity == Parity::even ? row.c : row.d) = compute_constant(row.n, row.ell, parity).magnitude;
    });
    for (ScanRow& row : rows) {
        const bool c = row.c == row.conjectured, d = row.d == row.conjectured;
        row.match = c && d ? "both" : c ? "c" : d ? "d" : "none";
    }
    return rows;
}

}  // namespace dsw

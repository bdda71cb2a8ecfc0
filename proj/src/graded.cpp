#include "dsw/graded.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dsw {

std::string to_string(ParityClass parity) {
    switch (parity) {
        case ParityClass::all_even: return "even";
        case ParityClass::all_odd: return "odd";
        case ParityClass::mixed: return "mixed";
    }
    return "unknown";
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string token(text.substr(start, comma - start));
        token.erase(0, token.find_first_not_of(' '));
        token.erase(token.find_last_not_of(' ') + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
        }
        if (used != token.size()) {
            throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
        }
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedModule

GradedModule::GradedModule(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw std::invalid_argument("graded module needs at least one generator");
    if (rank() > kMaxGenerators) {
        throw std::invalid_argument("graded module supports at most " + std::to_string(kMaxGenerators) +
                                    " generators");
    }
    bool any_even = false, any_odd = false;
    for (int d : degrees_) {
        if (d < 1) throw std::invalid_argument("generator degrees must be >= 1");
        (d % 2 == 0 ? any_even : any_odd) = true;
    }
    parity_ = any_even && any_odd ? ParityClass::mixed : any_odd ? ParityClass::all_odd : ParityClass::all_even;
}

GradedModule GradedModule::parse(std::string_view text) { return GradedModule(parse_int_list(text, "degree list")); }

long long GradedModule::total_degree() const {
    long long sum = 0;
    for (int d : degrees_) sum += d;
    return sum;
}

int GradedModule::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

// ---------------------------------------------------------------------------
// TensorWord

TensorWord::TensorWord(std::span<const int> letters) : length_(static_cast<int>(letters.size())) {
    if (length_ > kMaxTensorLength) {
        throw std::invalid_argument("tensor words are limited to length " + std::to_string(kMaxTensorLength));
    }
    for (int a : letters) {
        if (a < 1 || a > kMaxGenerators) throw std::invalid_argument("tensor letter out of range");
        code_ = (code_ << 4) | static_cast<std::uint64_t>(a);
    }
}

TensorWord::TensorWord(std::initializer_list<int> letters)
    : TensorWord(std::span<const int>(letters.begin(), letters.size())) {}

TensorWord TensorWord::from_code(std::uint64_t code, int length) {
    TensorWord w;
    w.code_ = code;
    w.length_ = length;
    return w;
}

TensorWord TensorWord::parse(std::string_view text) {
    const auto letters = parse_int_list(text, "word");
    return TensorWord(std::span<const int>(letters));
}

std::vector<int> TensorWord::letters() const {
    std::vector<int> out(static_cast<std::size_t>(length_));
    for (int i = 1; i <= length_; ++i) out[static_cast<std::size_t>(i - 1)] = letter(i);
    return out;
}

long long TensorWord::degree(const GradedModule& module) const {
    long long sum = 0;
    for (int i = 1; i <= length_; ++i) sum += module.degree(letter(i));
    return sum;
}

void TensorWord::check_against(const GradedModule& module) const {
    for (int i = 1; i <= length_; ++i) {
        if (letter(i) > module.rank()) {
            throw std::invalid_argument("word " + to_string() + " uses a generator beyond rank " +
                                        std::to_string(module.rank()));
        }
    }
}

std::string TensorWord::to_string() const {
    std::string out;
    for (int i = 1; i <= length_; ++i) {
        if (i > 1) out += ',';
        out += std::to_string(letter(i));
    }
    return out;
}

std::strong_ordering TensorWord::operator<=>(const TensorWord& other) const {
    if (length_ != other.length_) return length_ <=> other.length_;
    return code_ <=> other.code_;
}

// ---------------------------------------------------------------------------
// TensorVector

TensorVector::TensorVector(GradedModule module, int length) : module_(std::move(module)), length_(length) {
    if (length < 0 || length > kMaxTensorLength) throw std::invalid_argument("tensor length out of range");
}

TensorVector TensorVector::from_word(const GradedModule& module, const TensorWord& word, const Integer& c) {
    word.check_against(module);
    TensorVector out(module, word.length());
    if (c != 0) out.terms_.emplace_back(word, c);
    return out;
}

TensorVector TensorVector::from_terms(const GradedModule& module, int length, std::vector<Term> terms) {
    TensorVector out(module, length);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [word, c] : terms) {
        if (word.length() != length) throw std::invalid_argument("tensor vector: word length mismatch");
        if (!out.terms_.empty() && out.terms_.back().first == word) {
            out.terms_.back().second += c;
        } else {
            word.check_against(module);
            out.terms_.emplace_back(word, std::move(c));
        }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
    return out;
}

Integer TensorVector::coefficient(const TensorWord& word) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                                     [](const Term& t, const TensorWord& w) { return t.first < w; });
    return it != terms_.end() && it->first == word ? it->second : Integer(0);
}

std::string TensorVector::to_text() const {
    std::string out;
    for (const auto& [word, c] : terms_) {
        out += c.str();
        out += ' ';
        out += word.to_string();
        out += '\n';
    }
    return out;
}

std::optional<Integer> TensorVector::ratio_to(const TensorVector& base) const {
    if (base.is_zero()) throw std::invalid_argument("ratio_to: base vector is zero");
    if (base.length_ != length_) return std::nullopt;
    if (is_zero()) return Integer(0);
    if (terms_.size() != base.terms_.size()) return std::nullopt;
    const auto& [w0, b0] = base.terms_.front();
    if (terms_.front().first != w0) return std::nullopt;
    Integer e = terms_.front().second / b0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != base.terms_[i].first || terms_[i].second != e * base.terms_[i].second) {
            return std::nullopt;
        }
    }
    return e;
}

bool TensorVector::operator==(const TensorVector& other) const {
    return module_ == other.module_ && length_ == other.length_ && terms_ == other.terms_;
}

TensorVector operator+(const TensorVector& a, const TensorVector& b) {
    if (!(a.module() == b.module()) || a.length() != b.length()) {
        throw std::invalid_argument("tensor vector sum: incompatible operands");
    }
    std::vector<TensorVector::Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return TensorVector::from_terms(a.module(), a.length(), std::move(terms));
}

TensorVector operator*(const Integer& c, const TensorVector& v) {
    std::vector<TensorVector::Term> terms;
    if (c != 0) {
        for (const auto& [w, x] : v.terms()) terms.emplace_back(w, c * x);
    }
    return TensorVector::from_terms(v.module(), v.length(), std::move(terms));
}

TensorVector operator-(const TensorVector& a, const TensorVector& b) { return a + Integer(-1) * b; }

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    if (!(a.module() == b.module())) throw std::invalid_argument("tensor product: different modules");
    const int length = a.length() + b.length();
    if (length > kMaxTensorLength) throw std::invalid_argument("tensor product too long");
    std::vector<TensorVector::Term> terms;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            terms.emplace_back(TensorWord::from_code((wa.code() << (4 * wb.length())) | wb.code(), length), ca * cb);
        }
    }
    return TensorVector::from_terms(a.module(), length, std::move(terms));
}

// ---------------------------------------------------------------------------
// Action

namespace {

int koszul_sign(const std::vector<int>& images, const std::array<int, kMaxTensorLength>& letters,
                const GradedModule& module) {
    const std::size_t k = images.size();
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (images[i] > images[j] && module.is_odd(letters[static_cast<std::size_t>(images[i] - 1)]) &&
                module.is_odd(letters[static_cast<std::size_t>(images[j] - 1)])) {
                sign = -sign;
            }
        }
    }
    return sign;
}

// One group ring term prepared for the inner loop.
struct PreparedTerm {
    std::array<std::uint8_t, kMaxTensorLength> source{};  // 0-based source position for each target position
    std::vector<int> images;
    int perm_sign = 1;
    Integer coeff;
    std::optional<std::int64_t> small_coeff;
};

std::vector<PreparedTerm> prepare(const GroupRingElement& element) {
    std::vector<PreparedTerm> out;
    out.reserve(element.size());
    for (const auto& [sigma, c] : element.terms()) {
        PreparedTerm t;
        for (int i = 0; i < sigma.arity(); ++i) {
            t.source[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sigma(i + 1) - 1);
        }
        t.images = sigma.images();
        t.perm_sign = sigma.sign();
        t.coeff = c;
        t.small_coeff = to_int64(c);
        out.push_back(std::move(t));
    }
    return out;
}

// Thrown internally when the 64-bit fast path would overflow.
struct FastPathOverflow {};

// Visits every (target word, signed coefficient) product of `element` on `vector`.
template <typename Sink>
void for_each_product(const std::vector<PreparedTerm>& terms, const TensorVector& vector, Sink&& sink) {
    const GradedModule& module = vector.module();
    const int k = vector.length();
    const ParityClass parity = module.parity();
    std::array<int, kMaxTensorLength> letters{};
    for (std::size_t index = 0; index < vector.size(); ++index) {
        const TensorWord& word = vector.terms()[index].first;
        for (int i = 0; i < k; ++i) letters[static_cast<std::size_t>(i)] = word.letter(i + 1);
        for (const auto& term : terms) {
            std::uint64_t code = 0;
            for (int i = 0; i < k; ++i) {
                code = (code << 4) | static_cast<std::uint64_t>(letters[term.source[static_cast<std::size_t>(i)]]);
            }
            int sign = 1;
            if (parity == ParityClass::all_odd) {
                sign = term.perm_sign;
            } else if (parity == ParityClass::mixed) {
                sign = koszul_sign(term.images, letters, module);
            }
            sink(code, sign, term, index);
        }
    }
}

TensorVector apply_small(const std::vector<PreparedTerm>& terms, const TensorVector& vector) {
    std::unordered_map<std::uint64_t, std::int64_t> acc;
    acc.reserve(std::min<std::size_t>(terms.size() * vector.size(), 1u << 22));
    std::vector<std::int64_t> vcoeffs;
    for (const auto& [w, c] : vector.terms()) {
        const auto small = to_int64(c);
        if (!small) throw FastPathOverflow{};
        vcoeffs.push_back(*small);
    }
    for (const auto& t : terms) {
        if (!t.small_coeff) throw FastPathOverflow{};
    }
    for_each_product(terms, vector, [&](std::uint64_t code, int sign, const PreparedTerm& term, std::size_t index) {
        std::int64_t product = 0;
        if (__builtin_mul_overflow(*term.small_coeff, vcoeffs[index], &product)) throw FastPathOverflow{};
        if (sign < 0) product = -product;
        std::int64_t& slot = acc[code];
        if (__builtin_add_overflow(slot, product, &slot)) throw FastPathOverflow{};
    });
    std::vector<TensorVector::Term> out;
    out.reserve(acc.size());
    for (const auto& [code, c] : acc) {
        if (c != 0) out.emplace_back(TensorWord::from_code(code, vector.length()), Integer(c));
    }
    return TensorVector::from_terms(vector.module(), vector.length(), std::move(out));
}

TensorVector apply_big(const std::vector<PreparedTerm>& terms, const TensorVector& vector) {
    std::unordered_map<std::uint64_t, Integer> acc;
    for_each_product(terms, vector, [&](std::uint64_t code, int sign, const PreparedTerm& term, std::size_t index) {
        Integer product = term.coeff * vector.terms()[index].second;
        if (sign < 0) acc[code] -= product;
        else acc[code] += product;
    });
    std::vector<TensorVector::Term> out;
    out.reserve(acc.size());
    for (auto& [code, c] : acc) {
        if (c != 0) out.emplace_back(TensorWord::from_code(code, vector.length()), std::move(c));
    }
    return TensorVector::from_terms(vector.module(), vector.length(), std::move(out));
}

}  // namespace

std::pair<TensorWord, int> act(const Permutation& sigma, const TensorWord& word, const GradedModule& module) {
    if (sigma.arity() != word.length()) {
        throw std::invalid_argument("act: permutation arity " + std::to_string(sigma.arity()) +
                                    " does not match word length " + std::to_string(word.length()));
    }
    word.check_against(module);
    std::array<int, kMaxTensorLength> letters{};
    for (int i = 0; i < word.length(); ++i) letters[static_cast<std::size_t>(i)] = word.letter(i + 1);
    std::vector<int> result(static_cast<std::size_t>(word.length()));
    for (int i = 1; i <= word.length(); ++i) {
        result[static_cast<std::size_t>(i - 1)] = letters[static_cast<std::size_t>(sigma(i) - 1)];
    }
    return {TensorWord(std::span<const int>(result)), koszul_sign(sigma.images(), letters, module)};
}

TensorVector apply(const GroupRingElement& element, const TensorVector& vector) {
    if (element.arity() != vector.length()) {
        throw std::invalid_argument("apply: element arity " + std::to_string(element.arity()) +
                                    " does not match tensor length " + std::to_string(vector.length()));
    }
    const auto terms = prepare(element);
    try {
        return apply_small(terms, vector);
    } catch (const FastPathOverflow&) {
        return apply_big(terms, vector);
    }
}

std::vector<TensorWord> basis_words(const GradedModule& module, int k, std::optional<long long> degree) {
    if (k < 1 || k > kMaxTensorLength) throw std::invalid_argument("basis_words: length out of range");
    std::vector<TensorWord> out;
    std::vector<int> letters(static_cast<std::size_t>(k), 1);
    const int l = module.rank();
    while (true) {
        const TensorWord w{std::span<const int>(letters)};
        if (!degree || w.degree(module) == *degree) out.push_back(w);
        int pos = k - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == l) {
            letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace dsw

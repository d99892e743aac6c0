#include "latsec/code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <unordered_set>

#include "parallel.hpp"

namespace latsec {

namespace {

// Row-reduce a copy of the rows; returns the rank.
int gf2_rank(std::vector<Bitword> rows) {
    int rank = 0;
    for (int bit = 0; bit < Bitword::kMaxBits; ++bit) {
        auto piv = std::find_if(rows.begin() + rank, rows.end(),
                                [bit](const Bitword& r) { return r.test(bit); });
        if (piv == rows.end()) continue;
        std::swap(*piv, rows[static_cast<std::size_t>(rank)]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && rows[i].test(bit)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
        if (++rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

void check_words_fit(int n, std::span<const Bitword> words) {
    Bitword mask;
    for (int i = 0; i < n; ++i) mask.set(i);
    for (const auto& w : words)
        if (!((w ^ (w & mask)).is_zero()))
            throw validation_error("codeword has support outside the code length");
}

std::uint64_t checked_message_count(int log2_messages, const EnumerationLimits& limits,
                                    const char* what) {
    if (log2_messages >= 63 ||
        (std::uint64_t{1} << log2_messages) > limits.max_messages)
        throw resource_limit_error(std::string(what) + " needs 2^" + std::to_string(log2_messages) +
                                   " messages, above the cap of " + std::to_string(limits.max_messages) +
                                   " (raise max_messages to override)");
    return std::uint64_t{1} << log2_messages;
}

}  // namespace

struct Code::Cache {
    std::mutex mu;
    std::optional<WeightEnumerator> enumerator;
    std::optional<std::vector<Bitword>> words;  // for linear codes

    explicit Cache() = default;
    explicit Cache(std::vector<Bitword> w) : words(std::move(w)) {}
};

Code Code::linear(std::string name, int n, std::vector<Bitword> rows) {
    if (n < 1 || n > 128) throw validation_error("code length must be in [1,128]");
    check_words_fit(n, rows);
    if (rows.size() > static_cast<std::size_t>(n))
        throw validation_error("more generator rows than coordinates");
    if (gf2_rank(rows) != static_cast<int>(rows.size()))
        throw validation_error("generator rows are linearly dependent");
    Code c;
    c.name_ = std::move(name);
    c.n_ = n;
    c.linear_ = std::move(rows);
    c.cache_ = std::make_shared<Cache>();
    return c;
}

Code Code::explicit_set(std::string name, int n, std::vector<Bitword> words) {
    if (n < 1 || n > 128) throw validation_error("code length must be in [1,128]");
    if (words.empty()) throw validation_error("explicit code must contain at least one word");
    check_words_fit(n, words);
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw validation_error("explicit code contains duplicate words");
    Code c;
    c.name_ = std::move(name);
    c.n_ = n;
    c.cache_ = std::make_shared<Cache>(std::move(words));
    return c;
}

Code Code::renamed(std::string name) const {
    Code c = *this;
    c.name_ = std::move(name);
    return c;
}

int Code::dimension() const {
    if (!is_linear()) throw validation_error("dimension is defined for linear codes only");
    return static_cast<int>(linear_->size());
}

BigInt Code::size() const {
    if (is_linear()) return BigInt(1) << dimension();
    return BigInt(cache_->words->size());
}

bool Code::contains_zero() const {
    if (is_linear()) return true;
    const auto& w = *cache_->words;
    return !w.empty() && w.front().is_zero();
}

const std::vector<Bitword>& Code::generator_rows() const {
    if (!is_linear()) throw validation_error("code has no generator representation");
    return *linear_;
}

const std::vector<Bitword>& Code::codewords(const EnumerationLimits& limits) const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->words) {
        int k = dimension();
        std::uint64_t m = checked_message_count(k, limits, "codeword materialization");
        if (m > limits.max_explicit_words)
            throw resource_limit_error("2^" + std::to_string(k) +
                                       " codewords exceed the explicit-word cap of " +
                                       std::to_string(limits.max_explicit_words));
        std::vector<Bitword> words;
        words.reserve(m);
        Bitword cur;
        words.push_back(cur);
        for (std::uint64_t msg = 1; msg < m; ++msg) {
            cur ^= (*linear_)[static_cast<std::size_t>(std::countr_zero(msg))];
            words.push_back(cur);
        }
        std::sort(words.begin(), words.end());
        cache_->words = std::move(words);
    }
    return *cache_->words;
}

const WeightEnumerator& Code::weight_enumerator(const EnumerationLimits& limits) const {
    {
        std::lock_guard lock(cache_->mu);
        if (cache_->enumerator) return *cache_->enumerator;
    }
    WeightEnumerator result(n_);
    if (!is_linear()) {
        std::lock_guard lock(cache_->mu);
        if (!cache_->enumerator) {
            for (const auto& w : *cache_->words) result.count(w.popcount()) += 1;
            cache_->enumerator = std::move(result);
        }
        return *cache_->enumerator;
    }

    // Gray-code message order: one row XOR and one popcount per message.
    int k = dimension();
    std::uint64_t total = checked_message_count(k, limits, "weight enumeration");
    const auto& rows = *linear_;
    std::vector<int> row_weight(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) row_weight[i] = rows[i].popcount();

    int nthreads = detail::thread_count();
    std::vector<std::array<std::uint64_t, 129>> partial(
        static_cast<std::size_t>(std::max(1, nthreads)));
    for (auto& p : partial) p.fill(0);

    detail::parallel_chunks(total, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        auto& counts = partial[static_cast<std::size_t>(chunk)];
        Bitword cur;
        std::uint64_t g = begin ^ (begin >> 1);
        for (int j = 0; j < k; ++j)
            if ((g >> j) & 1) cur ^= rows[static_cast<std::size_t>(j)];
        int w = cur.popcount();
        counts[static_cast<std::size_t>(w)]++;
        for (std::uint64_t msg = begin + 1; msg < end; ++msg) {
            auto flip = static_cast<std::size_t>(std::countr_zero(msg));
            w += row_weight[flip] - 2 * (cur & rows[flip]).popcount();
            cur ^= rows[flip];
            counts[static_cast<std::size_t>(w)]++;
        }
    });

    for (const auto& p : partial)
        for (int w = 0; w <= n_; ++w) result.count(w) += p[static_cast<std::size_t>(w)];

    std::lock_guard lock(cache_->mu);
    if (!cache_->enumerator) cache_->enumerator = std::move(result);
    return *cache_->enumerator;
}

WeightEnumerator weight_enumerator(const Code& code, const EnumerationLimits& limits) {
    return code.weight_enumerator(limits);
}

Code gray_map(std::string name, const std::vector<std::vector<std::uint8_t>>& z4_rows,
              int z4_length, const EnumerationLimits& limits) {
    if (z4_length < 1 || z4_length > 64)
        throw validation_error("Z4 length must be in [1,64]");
    for (const auto& row : z4_rows) {
        if (static_cast<int>(row.size()) != z4_length)
            throw validation_error("Z4 generator rows must all have the stated length");
        for (auto d : row)
            if (d > 3) throw validation_error("Z4 digits must be in {0,1,2,3}");
    }
    std::size_t k = z4_rows.size();
    if (2 * k >= 63 || (std::uint64_t{1} << (2 * k)) > limits.max_messages)
        throw resource_limit_error("Z4 message space 4^" + std::to_string(k) +
                                   " exceeds the cap of " + std::to_string(limits.max_messages));

    // Odometer over the 4^k messages; one row addition per step.
    std::vector<std::uint8_t> word(static_cast<std::size_t>(z4_length), 0);
    std::vector<std::uint8_t> digits(k, 0);
    auto add_row = [&](std::size_t i) {
        for (int j = 0; j < z4_length; ++j)
            word[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>((word[static_cast<std::size_t>(j)] +
                                           z4_rows[i][static_cast<std::size_t>(j)]) & 3u);
    };
    // Gray image bits of digit d: (first, second) with 0->(0,0) 1->(0,1) 2->(1,1) 3->(1,0).
    static constexpr std::uint8_t kFirst[4] = {0, 0, 1, 1};
    static constexpr std::uint8_t kSecond[4] = {0, 1, 1, 0};

    std::unordered_set<Bitword, BitwordHash> image;
    std::uint64_t total = std::uint64_t{1} << (2 * k);
    for (std::uint64_t msg = 0;; ++msg) {
        Bitword b;
        for (int j = 0; j < z4_length; ++j) {
            std::uint8_t d = word[static_cast<std::size_t>(j)];
            if (kFirst[d]) b.set(2 * j);
            if (kSecond[d]) b.set(2 * j + 1);
        }
        image.insert(b);
        if (msg + 1 == total) break;
        std::size_t i = 0;
        while (true) {
            add_row(i);
            if (++digits[i] < 4) break;
            digits[i] = 0;
            ++i;
        }
    }
    std::vector<Bitword> words(image.begin(), image.end());
    return Code::explicit_set(std::move(name), 2 * z4_length, std::move(words));
}

Code direct_sum(std::span<const Code> codes, const EnumerationLimits& limits) {
    if (codes.empty()) throw validation_error("direct sum of an empty list");
    if (codes.size() == 1) return codes.front();

    int n = 0;
    bool all_linear = true;
    for (const auto& c : codes) {
        n += c.length();
        all_linear = all_linear && c.is_linear();
    }
    if (n > 128) throw validation_error("direct sum exceeds the 128-bit length limit");

    std::string name;
    for (const auto& c : codes) {
        if (!name.empty()) name += "+";
        name += c.name().empty() ? "?" : c.name();
    }

    if (all_linear) {
        std::vector<Bitword> rows;
        int offset = 0;
        for (const auto& c : codes) {
            for (const auto& r : c.generator_rows()) {
                Bitword shifted;
                for (int i = 0; i < c.length(); ++i)
                    if (r.test(i)) shifted.set(i + offset);
                rows.push_back(shifted);
            }
            offset += c.length();
        }
        return Code::linear(std::move(name), n, std::move(rows));
    }

    BigInt m = 1;
    for (const auto& c : codes) m *= c.size();
    if (m > limits.max_explicit_words)
        throw resource_limit_error("direct sum has " + m.str() +
                                   " words, above the explicit-word cap");
    std::vector<Bitword> words{Bitword{}};
    int offset = 0;
    for (const auto& c : codes) {
        std::vector<Bitword> next;
        next.reserve(words.size() * static_cast<std::size_t>(c.size()));
        for (const auto& prefix : words)
            for (const auto& w : c.codewords(limits)) {
                Bitword x = prefix;
                for (int i = 0; i < c.length(); ++i)
                    if (w.test(i)) x.set(i + offset);
                next.push_back(x);
            }
        words = std::move(next);
        offset += c.length();
    }
    return Code::explicit_set(std::move(name), n, std::move(words));
}

DistanceInvariance distance_invariance_check(const Code& code, const EnumerationLimits& limits) {
    if (code.is_linear()) return {true, std::nullopt};
    const auto& words = code.codewords(limits);
    if (words.size() * words.size() > limits.max_messages)
        throw resource_limit_error("pairwise distance scan exceeds the enumeration cap");
    int n = code.length();
    auto profile = [&](const Bitword& c) {
        std::vector<std::uint32_t> hist(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& w : words) hist[static_cast<std::size_t>(distance(c, w))]++;
        return hist;
    };
    auto ref = profile(words.front());
    for (std::size_t i = 1; i < words.size(); ++i)
        if (profile(words[i]) != ref) return {false, words[i]};
    return {true, std::nullopt};
}

namespace {

std::pair<int, std::uint64_t> min_distance_and_kissing(const Code& code,
                                                       const EnumerationLimits& limits) {
    if (code.size() == 1)
        throw validation_error("minimum distance is undefined for a single-codeword code");
    if (code.is_linear()) {
        const auto& we = code.weight_enumerator(limits);
        int d = we.min_nonzero_weight();
        return {d, we.count(d).convert_to<std::uint64_t>()};
    }
    const auto& words = code.codewords(limits);
    if (words.size() * words.size() > limits.max_messages)
        throw resource_limit_error("pairwise distance scan exceeds the enumeration cap");
    int d = code.length() + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            d = std::min(d, distance(words[i], words[j]));
    std::uint64_t kiss = 0;
    for (std::size_t j = 1; j < words.size(); ++j)
        if (distance(words.front(), words[j]) == d) ++kiss;
    return {d, kiss};
}

}  // namespace

int min_distance(const Code& code, const EnumerationLimits& limits) {
    return min_distance_and_kissing(code, limits).first;
}

std::uint64_t kissing_number(const Code& code, const EnumerationLimits& limits) {
    return min_distance_and_kissing(code, limits).second;
}

}  // namespace latsec

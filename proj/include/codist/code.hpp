#pragma once

// Generic [n,k] linear-code machinery over a finite field: exact
// minimum distance by exhaustive enumeration, Hadamard-Schur products
// and powers, log-additivity checks, systematic embedding at chosen
// coordinates, erasure decoding, brute-force nearest codeword, an
// error-and-erasure decoder for polynomial evaluation codes, and the
// entrywise extension of all of it to matrix symbols.

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codist/detail/combinatorics.hpp"
#include "codist/field.hpp"
#include "codist/fmatrix.hpp"
#include "codist/funcspace.hpp"

namespace codist {

// Exhaustive searches refuse to run past this many codewords.
inline constexpr std::uint64_t kEnumerationBudget = 1ull << 24;

struct EnumerationBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CodeFamily { generic, reed_solomon, hermitian };

inline const char* family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::reed_solomon: return "reed-solomon";
        case CodeFamily::hermitian: return "hermitian";
        default: return "generic";
    }
}

// Set on codes whose codewords are exactly the evaluations of all
// polynomials of degree < degree_bound at the listed distinct points.
// Closed under Hadamard-Schur products (degree bounds add) and the key
// to the algebraic error decoder.
struct RsInfo {
    std::vector<std::uint32_t> points;
    std::size_t degree_bound = 0;
};

class LinearCode {
public:
    LinearCode() = default;
    LinearCode(FieldPtr field, FMatrix g, FMatrix h, CodeFamily family = CodeFamily::generic,
               std::optional<RsInfo> rs = std::nullopt,
               std::optional<EvalAttachment> eval = std::nullopt)
        : field_(std::move(field)),
          g_(std::move(g)),
          h_(std::move(h)),
          family_(family),
          rs_(std::move(rs)),
          eval_(std::move(eval)) {}

    LinearCode(const LinearCode& o)
        : field_(o.field_),
          g_(o.g_),
          h_(o.h_),
          family_(o.family_),
          rs_(o.rs_),
          eval_(o.eval_),
          d_cache_(o.d_cache_.load()) {}
    LinearCode& operator=(const LinearCode& o) {
        if (this != &o) {
            field_ = o.field_;
            g_ = o.g_;
            h_ = o.h_;
            family_ = o.family_;
            rs_ = o.rs_;
            eval_ = o.eval_;
            d_cache_.store(o.d_cache_.load());
        }
        return *this;
    }

    const FieldPtr& field() const { return field_; }
    const FMatrix& generator() const { return g_; }
    const FMatrix& parity_check() const { return h_; }
    CodeFamily family() const { return family_; }
    const std::optional<RsInfo>& rs() const { return rs_; }
    const std::optional<EvalAttachment>& eval() const { return eval_; }

    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }

    std::optional<long> cached_distance() const {
        const long d = d_cache_.load();
        return d < 0 ? std::nullopt : std::optional<long>(d);
    }
    void cache_distance(long d) const { d_cache_.store(d); }

    // Exact distance available without enumeration: a full polynomial
    // space of degree < D on n distinct points has d = n - D + 1.
    std::optional<long> known_distance() const {
        if (cached_distance()) return cached_distance();
        if (rs_) {
            const std::size_t d_bound = rs_->degree_bound;
            return d_bound <= n() ? static_cast<long>(n() - d_bound + 1) : 1l;
        }
        return std::nullopt;
    }

private:
    FieldPtr field_;
    FMatrix g_, h_;
    CodeFamily family_ = CodeFamily::generic;
    std::optional<RsInfo> rs_;
    std::optional<EvalAttachment> eval_;
    mutable std::atomic<long> d_cache_{-1};
};

inline LinearCode code_from_generator(const FMatrix& g, CodeFamily family = CodeFamily::generic,
                                      std::optional<RsInfo> rs = std::nullopt,
                                      std::optional<EvalAttachment> eval = std::nullopt) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (rank(g) != k) throw std::invalid_argument("generator matrix is rank deficient");
    FMatrix h = nullspace(g).transpose();
    return LinearCode(g.field(), g, std::move(h), family, std::move(rs), std::move(eval));
}

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

inline void require_enumeration(std::uint64_t q, std::uint64_t k, const char* what) {
    if (checked_pow(q, k, kEnumerationBudget) > kEnumerationBudget)
        throw EnumerationBudgetError(std::string(what) +
                                     ": q^k exceeds the exhaustive-enumeration budget (2^24); "
                                     "use a sampling mode instead");
}

// Per-row increment tables for odometer enumeration of m * G: stepping
// message digit i from value c to c+1 (mod q) adds step[i][c] to the
// codeword.
class CodewordStepper {
public:
    explicit CodewordStepper(const LinearCode& c) : f_(*c.field()), g_(c.generator()) {
        const std::size_t q = f_.order(), k = c.k(), n = c.n();
        steps_.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            steps_[i].resize(q);
            for (std::size_t v = 0; v < q; ++v) {
                const std::uint32_t delta =
                    f_.sub(static_cast<std::uint32_t>((v + 1) % q), static_cast<std::uint32_t>(v));
                auto& row = steps_[i][v];
                row.resize(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = f_.mul(delta, g_.raw(i, j));
            }
        }
    }

    void apply(std::vector<std::uint32_t>& word, std::size_t row, std::uint32_t value) const {
        const auto& s = steps_[row][value];
        for (std::size_t j = 0; j < word.size(); ++j) word[j] = f_.add(word[j], s[j]);
    }

    const Field& field() const { return f_; }
    const FMatrix& generator() const { return g_; }

private:
    const Field& f_;
    FMatrix g_;
    std::vector<std::vector<std::vector<std::uint32_t>>> steps_;
};

// Visits every codeword (including zero) in canonical message order:
// message digit 0 cycles fastest. fn(word) -> bool, true stops.
template <class Fn>
bool for_each_codeword(const LinearCode& c, Fn&& fn) {
    require_enumeration(c.field()->order(), c.k(), "codeword enumeration");
    const std::size_t q = c.field()->order(), k = c.k(), n = c.n();
    CodewordStepper stepper(c);
    std::vector<std::uint32_t> word(n, 0), digits(k, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    if (fn(static_cast<const std::vector<std::uint32_t>&>(word))) return true;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        for (;;) {
            const std::uint32_t v = digits[i];
            stepper.apply(word, i, v);
            if (v + 1 == q) {
                digits[i] = 0;
                ++i;
            } else {
                digits[i] = v + 1;
                break;
            }
        }
        if (fn(static_cast<const std::vector<std::uint32_t>&>(word))) return true;
    }
    return false;
}

// Visits one representative per scalar class of nonzero codewords
// (first nonzero message digit fixed to 1); enough for weight searches.
template <class Fn>
void for_each_projective_codeword(const LinearCode& c, Fn&& fn) {
    require_enumeration(c.field()->order(), c.k(), "minimum-distance enumeration");
    const std::size_t q = c.field()->order(), k = c.k(), n = c.n();
    CodewordStepper stepper(c);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<std::uint32_t> word(n, 0);
        for (std::size_t j = 0; j < n; ++j) word[j] = c.generator().raw(lead, j);
        const std::size_t tail = k - lead - 1;
        std::vector<std::uint32_t> digits(tail, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < tail; ++i) total *= q;
        fn(static_cast<const std::vector<std::uint32_t>&>(word));
        for (std::uint64_t step = 1; step < total; ++step) {
            std::size_t i = 0;
            for (;;) {
                const std::uint32_t v = digits[i];
                stepper.apply(word, lead + 1 + i, v);
                if (v + 1 == q) {
                    digits[i] = 0;
                    ++i;
                } else {
                    digits[i] = v + 1;
                    break;
                }
            }
            fn(static_cast<const std::vector<std::uint32_t>&>(word));
        }
    }
}

inline std::size_t weight(const std::vector<std::uint32_t>& w) {
    std::size_t c = 0;
    for (auto v : w) c += v != 0;
    return c;
}

}  // namespace detail

struct MinWeightCodeword {
    long distance = 0;
    std::vector<std::uint32_t> word;
};

// Exact minimum Hamming weight over nonzero codewords, by exhaustive
// enumeration of scalar classes.
inline MinWeightCodeword min_weight_codeword(const LinearCode& c) {
    MinWeightCodeword best;
    best.distance = static_cast<long>(c.n()) + 1;
    detail::for_each_projective_codeword(c, [&](const std::vector<std::uint32_t>& w) {
        const long wt = static_cast<long>(detail::weight(w));
        if (wt < best.distance) {
            best.distance = wt;
            best.word = w;
        }
    });
    c.cache_distance(best.distance);
    return best;
}

inline long min_distance(const LinearCode& c) {
    if (auto d = c.cached_distance()) return *d;
    return min_weight_codeword(c).distance;
}

inline long generalized_genus(const LinearCode& c) {
    return static_cast<long>(c.n()) - static_cast<long>(c.k()) + 1 - min_distance(c);
}

struct CodeReport {
    std::size_t n = 0, k = 0;
    long d = 0;
    long genus = 0;
    long designed_threshold = 0;  // n - d + 1
    bool distance_exact = true;   // false when d is a designed lower bound
    CodeFamily family = CodeFamily::generic;
};

inline CodeReport code_report(const LinearCode& c) {
    CodeReport r;
    r.n = c.n();
    r.k = c.k();
    r.d = min_distance(c);
    r.genus = static_cast<long>(r.n) - static_cast<long>(r.k) + 1 - r.d;
    r.designed_threshold = static_cast<long>(r.n) - r.d + 1;
    r.family = c.family();
    return r;
}

// --- Hadamard-Schur products ---------------------------------------------

// Span of all coordinatewise products of codewords of c1 and c2,
// returned with a canonical (reduced row-echelon) generator.
inline LinearCode hs_product(const LinearCode& c1, const LinearCode& c2) {
    if (!c1.field()->same(*c2.field())) throw std::invalid_argument("codes over different fields");
    if (c1.n() != c2.n()) throw std::invalid_argument("codes of different length");
    const Field& f = *c1.field();
    const std::size_t n = c1.n();
    FMatrix rows(c1.field(), c1.k() * c2.k(), n);
    for (std::size_t i = 0; i < c1.k(); ++i)
        for (std::size_t j = 0; j < c2.k(); ++j)
            for (std::size_t w = 0; w < n; ++w)
                rows.set_raw(i * c2.k() + j, w,
                             f.mul(c1.generator().raw(i, w), c2.generator().raw(j, w)));
    const auto rr = rref(rows);
    FMatrix g(c1.field(), rr.rank, n);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t w = 0; w < n; ++w) g.set_raw(i, w, rr.reduced.raw(i, w));

    std::optional<RsInfo> rs;
    CodeFamily family = CodeFamily::generic;
    if (c1.rs() && c2.rs() && c1.rs()->points == c2.rs()->points) {
        rs = RsInfo{c1.rs()->points, c1.rs()->degree_bound + c2.rs()->degree_bound - 1};
        family = CodeFamily::reed_solomon;
    }
    return code_from_generator(g, family, std::move(rs));
}

inline LinearCode hs_power(const LinearCode& c, unsigned ell) {
    if (ell < 1) throw std::invalid_argument("Hadamard-Schur power needs ell >= 1");
    LinearCode acc = c;
    for (unsigned i = 1; i < ell; ++i) acc = hs_product(acc, c);
    return acc;
}

struct LogAdditiveReport {
    bool log_additive = false;
    long d1 = 0, d2 = 0, d_product = 0;
    long bound = 0;  // d1 + d2 - n
    std::vector<std::uint32_t> witness;  // minimum-weight product codeword when violated
};

inline LogAdditiveReport is_log_additive(const LinearCode& c1, const LinearCode& c2) {
    detail::require_enumeration(c1.field()->order(), c1.k() + c2.k(), "log-additivity check");
    LogAdditiveReport r;
    r.d1 = min_distance(c1);
    r.d2 = min_distance(c2);
    const auto prod = hs_product(c1, c2);
    const auto mw = min_weight_codeword(prod);
    r.d_product = mw.distance;
    r.bound = r.d1 + r.d2 - static_cast<long>(c1.n());
    r.log_additive = r.d_product >= r.bound;
    if (!r.log_additive) r.witness = mw.word;
    return r;
}

// --- information sets and systematic embedding ----------------------------

inline bool is_information_set(const LinearCode& c, const std::vector<std::size_t>& positions) {
    if (positions.size() != c.k()) return false;
    return rank(c.generator().select_columns(positions)) == c.k();
}

// Returns `preferred` when its columns are independent, otherwise the
// lexicographically first information set.
inline std::vector<std::size_t> find_information_set(const LinearCode& c,
                                                     const std::vector<std::size_t>& preferred = {}) {
    if (!preferred.empty() && is_information_set(c, preferred)) return preferred;
    const auto rr = rref(c.generator());
    return rr.pivots;  // greedy column scan = lexicographically first basis
}

// First position set that is an information set of every given code
// (all of the same length). Preferred positions win when they work.
inline std::vector<std::size_t> find_common_information_set(
    const std::vector<const LinearCode*>& codes, const std::vector<std::size_t>& preferred = {}) {
    if (codes.empty()) throw std::invalid_argument("no codes");
    const std::size_t k = codes.front()->k(), n = codes.front()->n();
    for (const auto* c : codes)
        if (c->k() != k || c->n() != n) throw std::invalid_argument("codes of different parameters");
    auto works = [&](const std::vector<std::size_t>& pos) {
        for (const auto* c : codes)
            if (!is_information_set(*c, pos)) return false;
        return true;
    };
    if (preferred.size() == k && works(preferred)) return preferred;
    std::vector<std::size_t> found;
    detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& pos) {
        if (!works(pos)) return false;
        found = pos;
        return true;
    });
    if (found.empty()) throw std::invalid_argument("no common information set exists");
    return found;
}

// k x n map from messages to codewords whose columns at `positions`
// form the identity, i.e. codeword = message * embed_generator.
inline FMatrix embed_generator(const LinearCode& c, const std::vector<std::size_t>& positions) {
    if (!is_information_set(c, positions))
        throw std::invalid_argument("positions are not an information set");
    const FMatrix gp = c.generator().select_columns(positions);
    const auto s = solve(gp, c.generator());
    return s.particular;  // gp^{-1} * G
}

inline std::vector<FieldElement> systematic_embed(const LinearCode& c,
                                                  const std::vector<std::size_t>& positions,
                                                  const std::vector<FieldElement>& message) {
    if (message.size() != c.k()) throw std::invalid_argument("message length != k");
    const FMatrix e = embed_generator(c, positions);
    const Field& f = *c.field();
    std::vector<FieldElement> word(c.n(), c.field()->zero());
    for (std::size_t w = 0; w < c.n(); ++w) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < c.k(); ++i)
            acc = f.add(acc, f.mul(e.raw(i, w), message[i].index()));
        word[w] = c.field()->element(acc);
    }
    return word;
}

inline std::vector<FMatrix> systematic_embed(const LinearCode& c,
                                             const std::vector<std::size_t>& positions,
                                             const std::vector<FMatrix>& message) {
    if (message.size() != c.k()) throw std::invalid_argument("message length != k");
    for (const auto& m : message)
        if (m.rows() != message[0].rows() || m.cols() != message[0].cols() ||
            !m.field()->same(*c.field()))
            throw std::invalid_argument("message blocks must share shape and field");
    const FMatrix e = embed_generator(c, positions);
    std::vector<FMatrix> word;
    word.reserve(c.n());
    for (std::size_t w = 0; w < c.n(); ++w) {
        FMatrix acc(c.field(), message[0].rows(), message[0].cols());
        for (std::size_t i = 0; i < c.k(); ++i)
            acc = acc + message[i].scaled(e.raw(i, w));
        word.push_back(std::move(acc));
    }
    return word;
}

// Plain (non-systematic) encodings.
inline std::vector<FieldElement> encode_message(const LinearCode& c,
                                                const std::vector<FieldElement>& message) {
    if (message.size() != c.k()) throw std::invalid_argument("message length != k");
    const Field& f = *c.field();
    std::vector<FieldElement> word;
    word.reserve(c.n());
    for (std::size_t w = 0; w < c.n(); ++w) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < c.k(); ++i)
            acc = f.add(acc, f.mul(c.generator().raw(i, w), message[i].index()));
        word.push_back(c.field()->element(acc));
    }
    return word;
}

// Codeword of matrix symbols sum_i G[i][w] * A_i; coincides with the
// entrywise scalar encoding of each matrix entry.
inline std::vector<FMatrix> encode_matrix_message(const LinearCode& c,
                                                  const std::vector<FMatrix>& blocks) {
    if (blocks.size() != c.k()) throw std::invalid_argument("message length != k");
    for (const auto& b : blocks)
        if (b.rows() != blocks[0].rows() || b.cols() != blocks[0].cols() ||
            !b.field()->same(*c.field()))
            throw std::invalid_argument("message blocks must share shape and field");
    std::vector<FMatrix> word;
    word.reserve(c.n());
    for (std::size_t w = 0; w < c.n(); ++w) {
        FMatrix acc(c.field(), blocks[0].rows(), blocks[0].cols());
        for (std::size_t i = 0; i < c.k(); ++i) acc = acc + blocks[i].scaled(c.generator().raw(i, w));
        word.push_back(std::move(acc));
    }
    return word;
}

// --- erasure decoding ------------------------------------------------------

template <class Symbol>
struct DecodeOutcome {
    bool success = false;
    std::string diagnostic;
    std::vector<Symbol> codeword;  // full length n on success
};

namespace detail {

// Flattens matrix received symbols into one RHS row per present
// position (scalars flatten to a single column).
inline FMatrix scalar_rhs(const FieldPtr& f, const std::vector<std::optional<FieldElement>>& recv,
                          const std::vector<std::size_t>& present) {
    FMatrix b(f, present.size(), 1);
    for (std::size_t i = 0; i < present.size(); ++i) b.set_raw(i, 0, recv[present[i]]->index());
    return b;
}

inline FMatrix block_rhs(const FieldPtr& f, const std::vector<std::optional<FMatrix>>& recv,
                         const std::vector<std::size_t>& present, std::size_t block_entries) {
    FMatrix b(f, present.size(), block_entries);
    for (std::size_t i = 0; i < present.size(); ++i) {
        const FMatrix& m = *recv[present[i]];
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                b.set_raw(i, r * m.cols() + c, m.raw(r, c));
    }
    return b;
}

template <class Recv>
std::vector<std::size_t> present_positions(const Recv& recv) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < recv.size(); ++i)
        if (recv[i].has_value()) p.push_back(i);
    return p;
}

}  // namespace detail

// Unique codeword agreeing with every unerased symbol, if one exists.
inline DecodeOutcome<FieldElement> erasure_decode(
    const LinearCode& c, const std::vector<std::optional<FieldElement>>& received) {
    DecodeOutcome<FieldElement> out;
    if (received.size() != c.n()) throw std::invalid_argument("received word length != n");
    const auto present = detail::present_positions(received);
    const FMatrix a = c.generator().select_columns(present).transpose();
    const auto s = solve(a, detail::scalar_rhs(c.field(), received, present));
    if (!s.feasible) {
        out.diagnostic = "received word is inconsistent with the code";
        return out;
    }
    if (s.nullspace_basis.cols() != 0) {
        out.diagnostic = "ambiguous: " + std::to_string(c.n() - present.size()) +
                         " erasures leave " + std::to_string(s.nullspace_basis.cols()) +
                         " free dimensions";
        return out;
    }
    const Field& f = *c.field();
    out.success = true;
    out.codeword.reserve(c.n());
    for (std::size_t w = 0; w < c.n(); ++w) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < c.k(); ++i)
            acc = f.add(acc, f.mul(s.particular.raw(i, 0), c.generator().raw(i, w)));
        out.codeword.push_back(c.field()->element(acc));
    }
    return out;
}

inline DecodeOutcome<FMatrix> erasure_decode(const LinearCode& c,
                                             const std::vector<std::optional<FMatrix>>& received) {
    DecodeOutcome<FMatrix> out;
    if (received.size() != c.n()) throw std::invalid_argument("received word length != n");
    const auto present = detail::present_positions(received);
    if (present.empty()) {
        out.diagnostic = "nothing received";
        return out;
    }
    const std::size_t br = received[present[0]]->rows(), bc = received[present[0]]->cols();
    const FMatrix a = c.generator().select_columns(present).transpose();
    const auto s = solve(a, detail::block_rhs(c.field(), received, present, br * bc));
    if (!s.feasible) {
        out.diagnostic = "received word is inconsistent with the code";
        return out;
    }
    if (s.nullspace_basis.cols() != 0) {
        out.diagnostic = "ambiguous: " + std::to_string(c.n() - present.size()) +
                         " erasures leave " + std::to_string(s.nullspace_basis.cols()) +
                         " free dimensions";
        return out;
    }
    const Field& f = *c.field();
    out.success = true;
    for (std::size_t w = 0; w < c.n(); ++w) {
        FMatrix m(c.field(), br, bc);
        for (std::size_t r = 0; r < br; ++r)
            for (std::size_t cc = 0; cc < bc; ++cc) {
                std::uint32_t acc = 0;
                for (std::size_t i = 0; i < c.k(); ++i)
                    acc = f.add(acc, f.mul(s.particular.raw(i, r * bc + cc),
                                           c.generator().raw(i, w)));
                m.set_raw(r, cc, acc);
            }
        out.codeword.push_back(std::move(m));
    }
    return out;
}

// True when every target coordinate of a codeword is determined by the
// coordinates in `present` (a pure rank condition, independent of the
// received values).
inline bool positions_determined(const FMatrix& g, const std::vector<std::size_t>& present,
                                 const std::vector<std::size_t>& targets) {
    const auto rr = rref(g.select_columns(present).transpose());
    const Field& f = *g.field();
    for (const auto t : targets) {
        std::vector<std::uint32_t> v(g.rows());
        for (std::size_t i = 0; i < g.rows(); ++i) v[i] = g.raw(i, t);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            const std::uint32_t c = v[rr.pivots[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = f.sub(v[j], f.mul(c, rr.reduced.raw(r, j)));
        }
        for (auto x : v)
            if (x != 0) return false;
    }
    return true;
}

// Decodes only the requested coordinates; succeeds whenever those are
// uniquely determined even if the full codeword is not.
inline DecodeOutcome<FMatrix> decode_at_positions(const LinearCode& c,
                                                  const std::vector<std::optional<FMatrix>>& received,
                                                  const std::vector<std::size_t>& targets) {
    DecodeOutcome<FMatrix> out;
    if (received.size() != c.n()) throw std::invalid_argument("received word length != n");
    const auto present = detail::present_positions(received);
    if (present.empty()) {
        out.diagnostic = "nothing received";
        return out;
    }
    if (!positions_determined(c.generator(), present, targets)) {
        out.diagnostic = "requested coordinates are not determined by the present symbols";
        return out;
    }
    const std::size_t br = received[present[0]]->rows(), bc = received[present[0]]->cols();
    const FMatrix a = c.generator().select_columns(present).transpose();
    const auto s = solve(a, detail::block_rhs(c.field(), received, present, br * bc));
    if (!s.feasible) {
        out.diagnostic = "received word is inconsistent with the code";
        return out;
    }
    const Field& f = *c.field();
    out.success = true;
    for (const auto t : targets) {
        FMatrix m(c.field(), br, bc);
        for (std::size_t r = 0; r < br; ++r)
            for (std::size_t cc = 0; cc < bc; ++cc) {
                std::uint32_t acc = 0;
                for (std::size_t i = 0; i < c.k(); ++i)
                    acc = f.add(acc, f.mul(s.particular.raw(i, r * bc + cc),
                                           c.generator().raw(i, t)));
                m.set_raw(r, cc, acc);
            }
        out.codeword.push_back(std::move(m));
    }
    return out;
}

// --- brute-force nearest codeword -----------------------------------------

struct NearestCodewordResult {
    std::vector<std::uint32_t> codeword;
    std::size_t distance = 0;
    bool tie = false;
    std::size_t tie_count = 1;  // codewords attaining the minimum
};

// Minimizes Hamming distance to `word` over all codewords; positions
// with an empty optional are ignored (erasures). Ties keep the first
// codeword in canonical message order and are reported.
inline NearestCodewordResult nearest_codeword(const LinearCode& c,
                                              const std::vector<std::optional<std::uint32_t>>& word) {
    if (word.size() != c.n()) throw std::invalid_argument("word length != n");
    NearestCodewordResult best;
    best.distance = c.n() + 1;
    detail::for_each_codeword(c, [&](const std::vector<std::uint32_t>& cw) {
        std::size_t dist = 0;
        for (std::size_t j = 0; j < cw.size(); ++j)
            if (word[j].has_value() && *word[j] != cw[j]) ++dist;
        if (dist < best.distance) {
            best.distance = dist;
            best.codeword = cw;
            best.tie = false;
            best.tie_count = 1;
        } else if (dist == best.distance) {
            best.tie = true;
            ++best.tie_count;
        }
        return false;
    });
    return best;
}

inline NearestCodewordResult nearest_codeword(const LinearCode& c,
                                              const std::vector<std::uint32_t>& word) {
    std::vector<std::optional<std::uint32_t>> w(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) w[i] = word[i];
    return nearest_codeword(c, w);
}

// --- error-and-erasure decoding for polynomial evaluation codes ------------

struct RsDecodeOutcome {
    bool success = false;
    bool verified = false;  // enough symbols for the stated error bound
    std::string diagnostic;
    std::vector<std::uint32_t> codeword;
    std::size_t errors_found = 0;
};

namespace detail {

// deg(f) with coefficients as field-element indices.
inline int fpoly_degree(const std::vector<std::uint32_t>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

inline std::uint32_t fpoly_eval(const Field& fld, const std::vector<std::uint32_t>& f,
                                std::uint32_t x) {
    std::uint32_t acc = 0;
    for (int i = fpoly_degree(f); i >= 0; --i)
        acc = fld.add(fld.mul(acc, x), f[static_cast<std::size_t>(i)]);
    return acc;
}

// f / g with remainder; g nonzero.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> fpoly_divmod(
    const Field& fld, std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g) {
    const int dg = fpoly_degree(g);
    if (dg < 0) throw std::domain_error("polynomial division by zero");
    const std::uint32_t lead_inv = fld.inv(g[static_cast<std::size_t>(dg)]);
    std::vector<std::uint32_t> quot(f.size(), 0);
    for (int i = fpoly_degree(f); i >= dg; i = fpoly_degree(f)) {
        const std::uint32_t c = fld.mul(f[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            f[static_cast<std::size_t>(i - dg + j)] =
                fld.sub(f[static_cast<std::size_t>(i - dg + j)],
                        fld.mul(c, g[static_cast<std::size_t>(j)]));
    }
    return {std::move(quot), std::move(f)};
}

}  // namespace detail

// Rational-interpolation (Berlekamp-Welch style) decoder for codes of
// polynomial evaluations of degree < degree_bound at distinct points;
// corrects up to b errors among the unerased symbols.
inline RsDecodeOutcome rs_error_erasure_decode(
    const LinearCode& c, const std::vector<std::optional<FieldElement>>& received,
    std::size_t b) {
    if (!c.rs()) throw std::invalid_argument("code has no polynomial-evaluation structure");
    if (received.size() != c.n()) throw std::invalid_argument("received word length != n");
    RsDecodeOutcome out;
    const Field& f = *c.field();
    const auto& points = c.rs()->points;
    const std::size_t dbound = c.rs()->degree_bound;
    const auto present = detail::present_positions(received);
    out.verified = present.size() >= dbound + 2 * b;

    if (b == 0) {
        const auto er = erasure_decode(c, received);
        if (!er.success) {
            out.diagnostic = er.diagnostic;
            return out;
        }
        out.success = true;
        out.codeword.reserve(c.n());
        for (const auto& e : er.codeword) out.codeword.push_back(e.index());
        return out;
    }

    // Unknowns: numerator coefficients n_0..n_{dbound+b-1} and locator
    // coefficients e_0..e_{b-1}; the locator is forced monic of degree
    // b. Equations: N(x_w) = r_w * E(x_w) on every unerased position.
    const std::size_t num_n = dbound + b;
    FMatrix a(c.field(), present.size(), num_n + b);
    FMatrix rhs(c.field(), present.size(), 1);
    for (std::size_t row = 0; row < present.size(); ++row) {
        const std::size_t w = present[row];
        const std::uint32_t x = points[w];
        const std::uint32_t r = received[w]->index();
        std::uint32_t xp = 1;
        for (std::size_t j = 0; j < num_n; ++j) {
            a.set_raw(row, j, xp);
            xp = f.mul(xp, x);
        }
        xp = 1;
        for (std::size_t j = 0; j < b; ++j) {
            a.set_raw(row, num_n + j, f.neg(f.mul(r, xp)));
            xp = f.mul(xp, x);
        }
        rhs.set_raw(row, 0, f.mul(r, f.pow(x, b)));
    }
    const auto s = solve(a, rhs);
    if (!s.feasible) {
        out.diagnostic = "rational interpolation is infeasible";
        return out;
    }
    std::vector<std::uint32_t> num(num_n, 0), loc(b + 1, 0);
    for (std::size_t j = 0; j < num_n; ++j) num[j] = s.particular.raw(j, 0);
    for (std::size_t j = 0; j < b; ++j) loc[j] = s.particular.raw(num_n + j, 0);
    loc[b] = 1;
    auto [quot, rem] = detail::fpoly_divmod(f, num, loc);
    if (detail::fpoly_degree(rem) >= 0) {
        out.diagnostic = "locator does not divide numerator (more errors than the bound)";
        return out;
    }
    if (detail::fpoly_degree(quot) >= static_cast<int>(dbound)) {
        out.diagnostic = "interpolant exceeds the code's degree bound";
        return out;
    }
    out.codeword.resize(c.n());
    for (std::size_t w = 0; w < c.n(); ++w)
        out.codeword[w] = detail::fpoly_eval(f, quot, points[w]);
    for (const auto w : present)
        if (out.codeword[w] != received[w]->index()) ++out.errors_found;
    if (out.errors_found > b) {
        out.diagnostic = "decoded word disagrees with more received symbols than the error bound";
        out.success = false;
        return out;
    }
    out.success = true;
    return out;
}

// Entrywise extension to matrix symbols; error positions in each entry
// are a subset of the corrupted workers.
inline DecodeOutcome<FMatrix> rs_error_erasure_decode(
    const LinearCode& c, const std::vector<std::optional<FMatrix>>& received, std::size_t b) {
    DecodeOutcome<FMatrix> out;
    const auto present = detail::present_positions(received);
    if (present.empty()) {
        out.diagnostic = "nothing received";
        return out;
    }
    const std::size_t br = received[present[0]]->rows(), bc = received[present[0]]->cols();
    std::vector<FMatrix> decoded(c.n(), FMatrix(c.field(), br, bc));
    for (std::size_t r = 0; r < br; ++r)
        for (std::size_t cc = 0; cc < bc; ++cc) {
            std::vector<std::optional<FieldElement>> scalar(c.n());
            for (const auto w : present) scalar[w] = (*received[w])(r, cc);
            const auto one = rs_error_erasure_decode(c, scalar, b);
            if (!one.success) {
                out.diagnostic = "entry (" + std::to_string(r) + "," + std::to_string(cc) +
                                 "): " + one.diagnostic;
                return out;
            }
            for (std::size_t w = 0; w < c.n(); ++w) decoded[w].set_raw(r, cc, one.codeword[w]);
        }
    out.success = true;
    out.codeword = std::move(decoded);
    return out;
}

}  // namespace codist

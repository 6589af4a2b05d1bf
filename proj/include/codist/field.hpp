#pragma once

// Exact arithmetic over GF(p) and GF(p^m) in polynomial-basis
// representation. An element is identified by its index in [0, q):
// the coefficient vector (c_0, ..., c_{m-1}) packed as sum c_i * p^i.
// Index order is the canonical element order (zero first, then
// coefficient-lexicographic).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codist {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), constant term first, possibly padded
// with trailing zeros.
inline int poly_degree(const std::vector<std::uint32_t>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of f modulo a monic divisor g, both over GF(p).
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f,
                                           const std::vector<std::uint32_t>& g,
                                           std::uint32_t p) {
    const int dg = poly_degree(g);
    for (int i = poly_degree(f); i >= dg && dg >= 0; i = poly_degree(f)) {
        const std::uint64_t c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            std::uint64_t sub = (c * g[static_cast<std::size_t>(j)]) % p;
            std::uint64_t cur = f[static_cast<std::size_t>(i - dg + j)];
            f[static_cast<std::size_t>(i - dg + j)] =
                static_cast<std::uint32_t>((cur + p - sub) % p);
        }
    }
    return f;
}

inline bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const int m = poly_degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            std::vector<std::uint32_t> g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t v = lo;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field : public std::enable_shared_from_this<Field> {
public:
    // Builds GF(p^m). When no modulus is supplied and m > 1, the monic
    // irreducible polynomial with the smallest packed coefficient value
    // is chosen, so the same (p, m) always yields the same field.
    static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        return FieldPtr(new Field(p, m, std::move(modulus)));
    }

    // Accepts "p" or "p^m", e.g. "7" or "2^2".
    static FieldPtr parse(std::string_view label) {
        const auto caret = label.find('^');
        auto to_u32 = [](std::string_view s) -> std::uint32_t {
            if (s.empty()) throw std::invalid_argument("field label: empty component");
            std::uint64_t v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw std::invalid_argument("field label: expected digits");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
                if (v > 0xffffffffull) throw std::invalid_argument("field label: out of range");
            }
            return static_cast<std::uint32_t>(v);
        };
        if (caret == std::string_view::npos) return make(to_u32(label), 1);
        return make(to_u32(label.substr(0, caret)), to_u32(label.substr(caret + 1)));
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool prime_field() const { return m_ == 1; }

    std::string label() const {
        return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
    }

    bool same(const Field& o) const {
        return this == &o || (p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_);
    }

    // --- index arithmetic -------------------------------------------------

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return (a + b) % p_;
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_slow(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_slow(a);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
        if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
        return mul_slow(a, b);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        if (!inv_tab_.empty()) return inv_tab_[a];
        return pow(a, q_ - 2);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::vector<std::uint32_t> coeffs(std::uint32_t idx) const {
        std::vector<std::uint32_t> c(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            c[i] = idx % p_;
            idx /= p_;
        }
        return c;
    }

    std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const {
        if (c.size() != m_) throw std::invalid_argument("coefficient vector length mismatch");
        std::uint64_t idx = 0;
        for (std::uint32_t i = m_; i-- > 0;) {
            if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
            idx = idx * p_ + c[i];
        }
        return static_cast<std::uint32_t>(idx);
    }

    FieldElement element(std::uint32_t idx) const;
    FieldElement zero() const;
    FieldElement one() const;
    std::vector<FieldElement> elements() const;

private:
    Field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
        : p_(p), m_(m) {
        if (!detail::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
        if (m < 1 || m > 16) throw std::invalid_argument("extension degree out of range");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > (1ull << 31)) throw std::invalid_argument("field order too large");
        }
        q_ = q;
        if (modulus) {
            modulus_ = std::move(*modulus);
            if (modulus_.size() != static_cast<std::size_t>(m_) + 1)
                throw std::invalid_argument("modulus degree mismatch");
            for (auto c : modulus_)
                if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
            if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
            if (m_ > 1 && !detail::poly_irreducible(modulus_, p_))
                throw std::invalid_argument("modulus is reducible");
        } else {
            modulus_ = default_modulus(p, m);
        }
        if (m_ > 1 && q_ <= kTableLimit) build_tables();
    }

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
        if (m == 1) return {0, 1};  // x
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            std::vector<std::uint32_t> f(m + 1, 0);
            std::uint64_t v = lo;
            for (std::uint32_t i = 0; i < m; ++i) {
                f[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            f[m] = 1;
            if (detail::poly_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t out = 0, mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += ((a % p_ + b % p_) % p_) * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return out;
    }

    std::uint32_t neg_slow(std::uint32_t a) const {
        std::uint32_t out = 0, mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t c = a % p_;
            out += (c == 0 ? 0 : p_ - c) * mult;
            a /= p_;
            mult *= p_;
        }
        return out;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        std::array<std::uint64_t, 31> buf{};
        std::array<std::uint32_t, 16> da{}, db{};
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                buf[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
        }
        for (std::uint32_t i = 0; i < 2 * m_ - 1; ++i) buf[i] %= p_;
        // Reduce modulo the monic irreducible polynomial.
        for (std::uint32_t i = 2 * m_ - 2; i >= m_ && i < 2 * m_; --i) {
            const std::uint64_t c = buf[i];
            if (c == 0) continue;
            buf[i] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint64_t sub = (c * modulus_[j]) % p_;
                buf[i - m_ + j] = (buf[i - m_ + j] + p_ - sub) % p_;
            }
        }
        std::uint32_t out = 0, mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += static_cast<std::uint32_t>(buf[i]) * mult;
            mult *= p_;
        }
        return out;
    }

    void build_tables() {
        const std::size_t q = q_;
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        neg_tab_.resize(q);
        inv_tab_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            neg_tab_[a] = neg_slow(static_cast<std::uint32_t>(a));
            for (std::size_t b = 0; b < q; ++b) {
                add_tab_[a * q + b] = add_slow(static_cast<std::uint32_t>(a),
                                               static_cast<std::uint32_t>(b));
                const std::uint32_t prod = mul_slow(static_cast<std::uint32_t>(a),
                                                    static_cast<std::uint32_t>(b));
                mul_tab_[a * q + b] = prod;
                if (prod == 1) inv_tab_[a] = static_cast<std::uint32_t>(b);
            }
        }
    }

    static constexpr std::uint64_t kTableLimit = 256;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::uint32_t idx) : field_(std::move(field)), v_(idx) {
        if (!field_) throw std::invalid_argument("null field");
        if (v_ >= field_->order()) throw std::invalid_argument("element index out of range");
    }

    const FieldPtr& field() const { return field_; }
    std::uint32_t index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(v_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        const Field& f = a.compatible(b);
        return FieldElement(a.field_, f.add(a.v_, b.v_));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        const Field& f = a.compatible(b);
        return FieldElement(a.field_, f.sub(a.v_, b.v_));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        const Field& f = a.compatible(b);
        return FieldElement(a.field_, f.mul(a.v_, b.v_));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        const Field& f = a.compatible(b);
        return FieldElement(a.field_, f.div(a.v_, b.v_));
    }
    FieldElement operator-() const { return FieldElement(field_, field_->neg(v_)); }
    FieldElement inverse() const { return FieldElement(field_, field_->inv(v_)); }
    FieldElement pow(std::uint64_t e) const { return FieldElement(field_, field_->pow(v_, e)); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.compatible(b), a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    const Field& compatible(const FieldElement& o) const {
        if (!field_ || !o.field_) throw std::invalid_argument("uninitialized element");
        if (!field_->same(*o.field_)) throw std::invalid_argument("elements from different fields");
        return *field_;
    }

    FieldPtr field_;
    std::uint32_t v_ = 0;
};

inline FieldElement Field::element(std::uint32_t idx) const {
    return FieldElement(shared_from_this(), idx);
}
inline FieldElement Field::zero() const { return element(0); }
inline FieldElement Field::one() const { return element(1); }

inline std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(static_cast<std::uint32_t>(i)));
    return out;
}

}  // namespace codist

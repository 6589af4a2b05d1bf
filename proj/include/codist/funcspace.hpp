#pragma once

// Formal function spaces for evaluation codes: monomials in a fixed
// variable set, small formal polynomials over the field, point sets,
// degree weights, and the monomial rewriting rule used to keep
// Hermitian bases in canonical form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codist/field.hpp"

namespace codist {

struct Monomial {
    std::vector<std::uint32_t> exps;  // one exponent per variable

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

// A formal polynomial in canonical form: strictly increasing monomials,
// no zero coefficients. Coefficients are element indices of the field
// it will be evaluated over.
class BasisFunction {
public:
    BasisFunction() = default;
    explicit BasisFunction(std::size_t arity) : arity_(arity) {}

    static BasisFunction monomial(std::size_t arity, std::vector<std::uint32_t> exps,
                                  std::uint32_t coeff = 1) {
        if (exps.size() != arity) throw std::invalid_argument("exponent arity mismatch");
        BasisFunction f(arity);
        if (coeff != 0) f.terms_.push_back({coeff, Monomial{std::move(exps)}});
        return f;
    }

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<std::uint32_t, Monomial>>& terms() const { return terms_; }

    void add_term(const Field& f, std::uint32_t coeff, const Monomial& mono) {
        if (coeff == 0) return;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), mono,
            [](const auto& t, const Monomial& m) { return t.second < m; });
        if (it != terms_.end() && it->second == mono) {
            it->first = f.add(it->first, coeff);
            if (it->first == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {coeff, mono});
        }
    }

    BasisFunction multiplied(const Field& f, const BasisFunction& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
        BasisFunction out(arity_);
        for (const auto& [ca, ma] : terms_)
            for (const auto& [cb, mb] : o.terms_) {
                Monomial m;
                m.exps.resize(arity_);
                for (std::size_t v = 0; v < arity_; ++v) m.exps[v] = ma.exps[v] + mb.exps[v];
                out.add_term(f, f.mul(ca, cb), m);
            }
        return out;
    }

    std::uint32_t evaluate(const Field& f, const std::vector<std::uint32_t>& point) const {
        if (point.size() != arity_) throw std::invalid_argument("point arity mismatch");
        std::uint32_t acc = 0;
        for (const auto& [c, m] : terms_) {
            std::uint32_t t = c;
            for (std::size_t v = 0; v < arity_; ++v)
                if (m.exps[v] != 0) t = f.mul(t, f.pow(point[v], m.exps[v]));
            acc = f.add(acc, t);
        }
        return acc;
    }

    friend bool operator==(const BasisFunction& a, const BasisFunction& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::size_t arity_ = 0;
    std::vector<std::pair<std::uint32_t, Monomial>> terms_;
};

struct PointSet {
    std::size_t arity = 0;
    std::vector<std::vector<std::uint32_t>> points;  // element indices, pairwise distinct

    std::size_t size() const { return points.size(); }

    void validate() const {
        for (const auto& p : points)
            if (p.size() != arity) throw std::invalid_argument("point arity mismatch");
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("evaluation points must be distinct");
    }
};

// Per-variable weights defining an additive degree on monomials.
struct DegreeWeights {
    std::vector<long> weights;

    long degree(const Monomial& m) const {
        long d = 0;
        for (std::size_t v = 0; v < m.exps.size(); ++v)
            d += weights[v] * static_cast<long>(m.exps[v]);
        return d;
    }

    // Degree of a general function: max over its support monomials.
    long degree(const BasisFunction& f) const {
        if (f.is_zero()) throw std::invalid_argument("degree of zero function");
        long d = 0;
        bool first = true;
        for (const auto& [c, m] : f.terms()) {
            const long dm = degree(m);
            d = first ? dm : std::max(d, dm);
            first = false;
        }
        return d;
    }

    friend bool operator==(const DegreeWeights& a, const DegreeWeights& b) {
        return a.weights == b.weights;
    }
};

// Rewrites y^q -> x^{q+1} - y on two-variable monomials (variable 0 is
// x, variable 1 is y), keeping y-exponents below q.
struct CurveRule {
    std::uint32_t q = 0;

    BasisFunction reduce(const Field& f, const BasisFunction& in) const {
        BasisFunction cur = in;
        for (;;) {
            bool changed = false;
            BasisFunction next(cur.arity());
            for (const auto& [c, m] : cur.terms()) {
                if (m.exps.size() != 2) throw std::invalid_argument("curve rule needs 2 variables");
                if (m.exps[1] >= q) {
                    changed = true;
                    Monomial hi{{m.exps[0] + q + 1, m.exps[1] - q}};
                    Monomial lo{{m.exps[0], m.exps[1] - q + 1}};
                    next.add_term(f, c, hi);
                    next.add_term(f, f.neg(c), lo);
                } else {
                    next.add_term(f, c, m);
                }
            }
            cur = std::move(next);
            if (!changed) return cur;
        }
    }

    friend bool operator==(const CurveRule& a, const CurveRule& b) { return a.q == b.q; }
};

// Metadata attached to evaluation codes: the basis realized by the
// generator rows, the point set behind the columns, and (when known)
// the degree structure.
struct EvalAttachment {
    PointSet points;
    std::vector<BasisFunction> basis;
    std::optional<DegreeWeights> weights;
    std::optional<CurveRule> rule;
    std::vector<long> degrees;  // aligned with basis when weights are set
};

}  // namespace codist

#pragma once

#include <optional>
#include <vector>

#include "admkit/rational.hpp"

namespace admkit {

// t-adic valuation. Empty means +infinity (the zero polynomial).
using TValuation = std::optional<long>;

inline constexpr std::nullopt_t kValInfinite = std::nullopt;

// Dense polynomial in one deformation variable t, coefficients exact
// rationals, trailing zeros trimmed.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit TPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static TPoly t(long power = 1, Rat coeff = Rat(1)) {
        std::vector<Rat> c(static_cast<size_t>(power) + 1, Rat(0));
        c.back() = std::move(coeff);
        return TPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rat& coeff(long i) const {
        static const Rat zero(0);
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    TValuation valuation() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long>(i);
        return kValInfinite;
    }

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator-() const;
    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact division; throws if the remainder is nonzero.
    TPoly divide_exact(const TPoly& divisor) const;

    std::string to_string() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

inline TValuation t_valuation(const TPoly& p) { return p.valuation(); }

}  // namespace admkit

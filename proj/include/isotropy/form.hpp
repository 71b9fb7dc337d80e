#pragma once

#include "isotropy/ratfun.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace isotropy {

/// Diagonal quadratic form <a_1, ..., a_n> over Q(t, X) with nonzero a_i.
class DiagForm {
public:
    /// Throws std::invalid_argument for an empty list or a zero coefficient.
    explicit DiagForm(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("form must have at least one coefficient");
        for (const auto& c : coeffs_) {
            if (c.is_zero()) throw std::invalid_argument("form must be regular");
        }
    }

    const std::vector<RatFun>& coeffs() const { return coeffs_; }
    std::size_t dim() const { return coeffs_.size(); }
    const RatFun& operator[](std::size_t i) const { return coeffs_[i]; }

    friend bool operator==(const DiagForm&, const DiagForm&) = default;

private:
    std::vector<RatFun> coeffs_;
};

/// Coefficients in canonical form separated by ", ".
std::string to_string(const DiagForm& form);

std::vector<std::string> coefficient_strings(const DiagForm& form);

}  // namespace isotropy

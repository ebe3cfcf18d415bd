#include "patav/upoly.hpp"

#include "patav/errors.hpp"
#include "patav/family.hpp"

#include <algorithm>

namespace patav {

std::string to_string(Family f) { return f == Family::Alt ? "alt" : "inc"; }

Family parse_family(std::string_view text) {
    if (text == "alt") return Family::Alt;
    if (text == "inc") return Family::Inc;
    throw ArgumentError("unknown family '" + std::string(text) + "' (expected alt or inc)");
}

UPoly::UPoly(int c) : coeffs_{mpq_class(c)} { trim(); }
UPoly::UPoly(const mpq_class& c) : coeffs_{c} { trim(); }
UPoly::UPoly(std::initializer_list<mpq_class> coeffs) : coeffs_(coeffs) { trim(); }
UPoly::UPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const mpq_class& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (sgn(b.coeffs_[j]) != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::divide_by_u() const {
    if (is_zero()) return {};
    if (sgn(coeffs_.front()) != 0)
        throw InternalConsistencyError("polynomial " + to_string() + " is not divisible by u");
    return UPoly(std::vector<mpq_class>(coeffs_.begin() + 1, coeffs_.end()));
}

mpq_class UPoly::evaluate(const mpq_class& value) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

long double UPoly::evaluate(long double value) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + static_cast<long double>(it->get_d());
    return acc;
}

std::string UPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += '+';
        out += coeffs_[k].get_str();
        if (k == 1) out += "*u";
        if (k > 1) out += "*u^" + std::to_string(k);
    }
    return out;
}

} // namespace patav

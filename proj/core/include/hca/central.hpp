#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hca/param_poly.hpp"

namespace hca {

// Coordinates on the basis omega_0, ..., omega_n of the 1-forms modulo
// exact forms, where omega_0 is the class of t^-1 dt and omega_k that of
// t^-k u dt for 1 <= k <= n.
class CentralVector {
  public:
    CentralVector() = default;  // rank 0 placeholder
    explicit CentralVector(int n) : c_(static_cast<std::size_t>(n) + 1) {}

    int rank() const { return static_cast<int>(c_.size()) - 1; }  // = n
    bool is_zero() const;

    const ParamPoly& omega(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    ParamPoly& omega(int k) { return c_.at(static_cast<std::size_t>(k)); }

    CentralVector operator-() const;
    CentralVector& operator+=(const CentralVector& o);
    CentralVector& operator-=(const CentralVector& o);
    friend CentralVector operator+(CentralVector a, const CentralVector& b) { return a += b; }
    friend CentralVector operator-(CentralVector a, const CentralVector& b) { return a -= b; }
    CentralVector& scale(const ParamPoly& s);

    friend bool operator==(const CentralVector& a, const CentralVector& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CentralVector& a, const CentralVector& b) { return !(a == b); }

    // e.g. "-2*omega0 + b*omega3"; "0" when zero.
    std::string to_string() const;

  private:
    std::vector<ParamPoly> c_;
};

inline bool CentralVector::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

inline CentralVector CentralVector::operator-() const {
    CentralVector out = *this;
    for (auto& p : out.c_) p = -p;
    return out;
}

inline CentralVector& CentralVector::operator+=(const CentralVector& o) {
    if (c_.size() != o.c_.size())
        throw std::invalid_argument("central vectors belong to different curves");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

inline CentralVector& CentralVector::operator-=(const CentralVector& o) { return *this += -o; }

inline CentralVector& CentralVector::scale(const ParamPoly& s) {
    for (auto& p : c_) p *= s;
    return *this;
}

inline std::string CentralVector::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string cs = c_[k].to_factor_string();
        std::string name = "omega" + std::to_string(k);
        std::string body = (cs == "1") ? name : (cs == "-1" ? "-" + name : cs + "*" + name);
        if (out.empty())
            out = body;
        else if (!body.empty() && body[0] == '-')
            out += " - " + body.substr(1);
        else
            out += " + " + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace hca

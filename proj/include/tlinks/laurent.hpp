#pragma once

// Integer-coefficient Laurent polynomials in one variable A.

#include <cstdint>
#include <map>
#include <string>

namespace tlinks {

class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(long long coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    long long coeff(int exponent) const;
    const std::map<int, long long>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    // A -> A^-1
    LaurentPoly mirror() const;

    // ascending exponents, e.g. "-A^-16 + A^-12 + A^-4"
    std::string to_string() const;

private:
    void add_term(int exponent, long long coeff);
    std::map<int, long long> terms_;  // exponent -> coefficient, no zeros
};

}  // namespace tlinks

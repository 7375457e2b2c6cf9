#pragma once

// Knot diagram extraction by generic vertical projection, Alexander
// polynomial / determinant computation, and classification against the
// reference set {unknot, 3_1, 4_1, 5_1, 5_2}.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "shknot/core.hpp"
#include "shknot/result.hpp"

namespace shknot {

// Exact rational, small magnitudes only.
struct Rat {
    i64 num = 0, den = 1;  // den > 0, reduced
    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);
    friend bool operator==(Rat, Rat);
    friend bool operator<(Rat, Rat);
    friend Rat operator+(Rat, Rat);
    friend Rat operator-(Rat, Rat);
    friend Rat operator*(Rat, Rat);
    double approx() const { return (double)num / (double)den; }
};

struct Crossing {
    int over_stick = -1;
    int under_stick = -1;
    Rat over_t, under_t;  // parameter in [0,1] along each stick's traversal
    int sign = 0;         // +1 / -1
    Rat px, py;           // projected planar point (sheared coordinates)
};

struct Diagram {
    std::vector<Crossing> crossings;
    // pd[i] = {a,b,c,d}: edge labels counterclockwise from the incoming
    // under-strand, edges numbered 1..2n along the orientation.
    std::vector<std::array<int, 4>> pd;
    std::string gauss;  // signed Gauss code, e.g. "O1- U2- O3- U1- ..."
    int writhe = 0;
    int tilt_index = 0;  // which entry of the shear schedule was used
};

std::string pd_string(const Diagram& d);

// Integer Laurent polynomial in one variable. No stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(i64 k);
    static LaurentPoly term(i64 coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    i64 coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;
    const std::map<int, i64>& coeffs() const { return c_; }

    void add_term(i64 coeff, int exp);
    friend LaurentPoly operator+(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator-(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&);

    // Exact division; asserts divisibility (used by fraction-free elimination).
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    i64 eval(i64 t) const;  // may overflow for large |t|; callers keep t small
    // Alexander normalization: lowest exponent 0, positive leading coefficient.
    LaurentPoly normalized() const;
    bool palindromic() const;  // p(t) == t^k p(1/t) after normalization
    std::string str(const std::string& var = "t") const;

private:
    std::map<int, i64> c_;
};

Result<Diagram> project(const Polygon& p);

Result<LaurentPoly> alexander(const Diagram& d);
Result<i64> determinant(const Diagram& d);

// Alexander polynomial straight from a PD code (edge labels 1..2n along the
// orientation); used for the hard-coded reference diagrams.
Result<LaurentPoly> alexander_from_pd(const std::vector<std::array<int, 4>>& pd);
Result<i64> determinant_from_pd(const std::vector<std::array<int, 4>>& pd);

// Kauffman bracket in the variable A, and the normalized bracket
// (-A)^(-3w) * <D>. Exponential state sum; callers cap the crossing count.
LaurentPoly kauffman_bracket(const std::vector<std::array<int, 4>>& pd);
LaurentPoly normalized_bracket(const std::vector<std::array<int, 4>>& pd);

enum class KnotTag { Unknot, K3_1, K4_1, K5_1, K5_2, Unknown };
const char* knot_name(KnotTag t);

struct KnotType {
    KnotTag tag = KnotTag::Unknown;
    i64 det = 0;
    LaurentPoly alex;
    int crossings = 0;
    bool caveat_alexander_trivial_high_crossing = false;
};

// Reference (normalized) Alexander polynomials of the classification set.
const LaurentPoly& reference_alexander(KnotTag t);
// Standard minimal PD codes of the reference knots (unknot omitted).
const std::vector<std::array<int, 4>>& reference_pd(KnotTag t);

// project + alexander + determinant + exact match against the reference
// table. A trivial Alexander polynomial classifies Unknot only when the
// diagram has at most kUnknotCrossingCap crossings.
inline constexpr int kUnknotCrossingCap = 10;
Result<KnotType> classify(const Polygon& p);

}  // namespace shknot

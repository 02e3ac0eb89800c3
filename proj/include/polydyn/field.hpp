#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydyn/zutil.hpp"

namespace polydyn {

// D == 1 encodes Q itself; otherwise D is a squarefree integer != 0, 1
// and the field is Q(sqrt(D)).
struct FieldSpec {
    Int D{1};

    FieldSpec() = default;
    explicit FieldSpec(Int d);

    bool is_rational() const { return D == 1; }
    long degree() const { return D == 1 ? 1 : 2; }
    bool is_real() const { return D > 0; }

    bool operator==(const FieldSpec& o) const { return D == o.D; }
    bool operator!=(const FieldSpec& o) const { return D != o.D; }
};

// a + b*sqrt(D).  Elements with b == 0 are field-agnostic: they carry
// D == 1 and promote when combined with a genuinely quadratic element.
class FieldElement {
  public:
    Rat a, b;
    Int D{1};

    FieldElement() : a(0), b(0), D(1) {}
    FieldElement(Rat x) : a(std::move(x)), b(0), D(1) {}  // NOLINT implicit
    FieldElement(long x) : a(x), b(0), D(1) {}            // NOLINT implicit
    FieldElement(Rat x, Rat y, Int d);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    FieldElement conjugate() const { return FieldElement(a, -b, D); }
    Rat norm() const { return a * a - b * b * Rat(D); }
    Rat trace() const { return 2 * a; }

    FieldElement operator-() const { return FieldElement(-a, -b, D); }
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long n) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // "p/q" or "a+b*sqrt(D)" / "a-b*sqrt(D)" / "b*sqrt(D)" / "sqrt(D)"
    static FieldElement parse(const std::string& s);
    std::string str() const;

    // exact k-th root within the same field, if one exists
    std::optional<FieldElement> exact_kth_root(unsigned k) const;

    // sign for real embeddings: +1 if the image under sqrt(D) -> +sqrt(D)
    // is positive (only for D > 0 or rational elements)
    int sign_at(int embedding) const;
};

FieldElement galois_conjugate(const FieldElement& x);

// shared D of a coefficient list (1 if all rational); throws on a mix of
// distinct quadratic fields
Int common_field(const std::vector<FieldElement>& xs);

}  // namespace polydyn

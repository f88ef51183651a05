#pragma once

#include "skeinlab/int_matrix.hpp"
#include "skeinlab/normal_curve.hpp"

#include <string>
#include <variant>
#include <vector>

namespace skeinlab {

// Letters: alpha_i = 2i-1, beta_i = 2i (i >= 1); inverses are negative.
using FreeWord = std::vector<int>;

FreeWord reduce_word(const FreeWord& w);
FreeWord inverse_word(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord commutator(const FreeWord& x, const FreeWord& y);  // x y x^-1 y^-1
// [a1,b1]...[ag,bg]
FreeWord boundary_word(int genus);

// "a b A B", "a1b1A1B1", "aB" ...; capital letters are inverses; a missing index means 1.
FreeWord parse_word(const std::string& text, int genus);
std::string format_word(const FreeWord& w);

class FreeGroupEndomorphism {
public:
    FreeGroupEndomorphism(int genus, std::vector<FreeWord> images);

    int genus() const { return genus_; }
    const std::vector<FreeWord>& images() const { return images_; }
    FreeWord apply(const FreeWord& w) const;
    FreeGroupEndomorphism compose(const FreeGroupEndomorphism& inner) const;  // this o inner
    // Column j = exponent sums of the image of generator j.
    IntMatrix abelianization() const;

private:
    int genus_;
    std::vector<FreeWord> images_;
};

// Fixes the boundary word as a reduced word and is invertible on abelianization.
bool validate_automorphism(const FreeGroupEndomorphism& phi);

FreeGroupEndomorphism twist_alpha();  // (a, b) -> (a, b a)
FreeGroupEndomorphism twist_beta();   // (a, b) -> (a B, b)

struct SL2Z {
    long a = 1, b = 0, c = 0, d = 1;
    long det() const { return a * d - b * c; }
    SL2Z operator*(const SL2Z& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend bool operator==(const SL2Z& x, const SL2Z& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

class MappingClass {
public:
    explicit MappingClass(SL2Z m);
    explicit MappingClass(FreeGroupEndomorphism phi);

    int genus() const;
    bool is_matrix() const { return std::holds_alternative<SL2Z>(data_); }
    const SL2Z& matrix() const { return std::get<SL2Z>(data_); }
    const FreeGroupEndomorphism& words() const { return std::get<FreeGroupEndomorphism>(data_); }
    // Action on the (p, q) homology coordinates of genus one.
    SL2Z homology_action() const;

private:
    std::variant<SL2Z, FreeGroupEndomorphism> data_;
};

// Genus one only: maps the homology class and re-traces via torus_curve.
NormalCurve act_on_curve(const MappingClass& phi, const NormalCurve& c);

}  // namespace skeinlab

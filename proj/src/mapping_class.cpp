#include "skeinlab/mapping_class.hpp"

#include "skeinlab/lattice.hpp"

#include <cctype>
#include <stdexcept>

namespace skeinlab {

FreeWord reduce_word(const FreeWord& w) {
    FreeWord out;
    for (int x : w) {
        if (x == 0) throw std::invalid_argument("zero is not a generator letter");
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

FreeWord inverse_word(const FreeWord& w) {
    FreeWord out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out(a);
    out.insert(out.end(), b.begin(), b.end());
    return reduce_word(out);
}

FreeWord commutator(const FreeWord& x, const FreeWord& y) {
    return concat(concat(x, y), concat(inverse_word(x), inverse_word(y)));
}

FreeWord boundary_word(int genus) {
    FreeWord w;
    for (int i = 1; i <= genus; ++i) w = concat(w, commutator({2 * i - 1}, {2 * i}));
    return w;
}

FreeWord parse_word(const std::string& text, int genus) {
    FreeWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.' || ch == ',') {
            ++i;
            continue;
        }
        if (ch == '1' && w.empty() && text.find_first_not_of(" 1") == std::string::npos) break;  // identity
        if (ch != 'a' && ch != 'b' && ch != 'A' && ch != 'B')
            throw std::invalid_argument(std::string("unexpected character '") + ch + "' in word \"" + text + "\"");
        ++i;
        int index = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) index = 10 * index + (text[i++] - '0');
        if (index == 0) index = 1;
        if (index > genus) throw std::invalid_argument("generator index exceeds genus in \"" + text + "\"");
        const bool beta = ch == 'b' || ch == 'B';
        const int letter = beta ? 2 * index : 2 * index - 1;
        w.push_back(std::isupper(static_cast<unsigned char>(ch)) ? -letter : letter);
    }
    return reduce_word(w);
}

std::string format_word(const FreeWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int x : w) {
        const int letter = std::abs(x);
        const bool beta = letter % 2 == 0;
        const int index = (letter + 1) / 2;
        char ch = beta ? 'b' : 'a';
        if (x < 0) ch = static_cast<char>(std::toupper(ch));
        out += ch;
        out += std::to_string(index);
    }
    return out;
}

FreeGroupEndomorphism::FreeGroupEndomorphism(int genus, std::vector<FreeWord> images)
    : genus_(genus), images_(std::move(images)) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    if (images_.size() != static_cast<std::size_t>(2 * genus))
        throw std::invalid_argument("endomorphism needs one image per generator");
    for (auto& w : images_) {
        for (int x : w)
            if (x == 0 || std::abs(x) > 2 * genus) throw std::invalid_argument("letter outside the generating set");
        w = reduce_word(w);
    }
}

FreeWord FreeGroupEndomorphism::apply(const FreeWord& w) const {
    FreeWord out;
    for (int x : w) {
        const FreeWord& img = images_.at(static_cast<std::size_t>(std::abs(x) - 1));
        out = concat(out, x > 0 ? img : inverse_word(img));
    }
    return out;
}

FreeGroupEndomorphism FreeGroupEndomorphism::compose(const FreeGroupEndomorphism& inner) const {
    if (inner.genus_ != genus_) throw std::invalid_argument("genus mismatch in composition");
    std::vector<FreeWord> imgs;
    for (const auto& w : inner.images_) imgs.push_back(apply(w));
    return FreeGroupEndomorphism(genus_, std::move(imgs));
}

IntMatrix FreeGroupEndomorphism::abelianization() const {
    const std::size_t n = images_.size();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (int x : images_[j]) m(static_cast<std::size_t>(std::abs(x) - 1), j) += x > 0 ? 1 : -1;
    return m;
}

bool validate_automorphism(const FreeGroupEndomorphism& phi) {
    const FreeWord bw = boundary_word(phi.genus());
    if (phi.apply(bw) != bw) return false;
    const SmithResult s = smith_normal_form(phi.abelianization());
    for (const auto& d : s.diagonal())
        if (d != 1) return false;
    return true;
}

FreeGroupEndomorphism twist_alpha() { return FreeGroupEndomorphism(1, {{1}, {2, 1}}); }
FreeGroupEndomorphism twist_beta() { return FreeGroupEndomorphism(1, {{1, -2}, {2}}); }

MappingClass::MappingClass(SL2Z m) : data_(m) {
    if (m.det() != 1) throw std::invalid_argument("mapping class matrix must have determinant 1");
}

MappingClass::MappingClass(FreeGroupEndomorphism phi) : data_(std::move(phi)) {
    if (!validate_automorphism(words())) throw std::invalid_argument("word datum is not a boundary-fixing automorphism");
}

int MappingClass::genus() const { return is_matrix() ? 1 : words().genus(); }

SL2Z MappingClass::homology_action() const {
    if (is_matrix()) return matrix();
    if (words().genus() != 1) throw std::invalid_argument("homology action on (p, q) is defined for genus one only");
    const IntMatrix m = words().abelianization();
    return {m(0, 0).get_si(), m(0, 1).get_si(), m(1, 0).get_si(), m(1, 1).get_si()};
}

NormalCurve act_on_curve(const MappingClass& phi, const NormalCurve& c) {
    if (phi.genus() != 1 || c.triangulation()->genus() != 1)
        throw std::invalid_argument("curve action is only computed for genus one; supply beta coordinates instead");
    if (c.triangulation() != sigma_g_star(1))
        throw std::invalid_argument("curve action needs the built-in genus-one triangulation");
    if (c.is_empty()) return c;
    const auto h = torus_homology(c);
    const SL2Z m = phi.homology_action();
    return torus_curve(m.a * h[0] + m.b * h[1], m.c * h[0] + m.d * h[1]);
}

}  // namespace skeinlab

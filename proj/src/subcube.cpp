#include "cubegraph/subcube.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cubegraph/errors.hpp"

namespace cubegraph {

Subcube::Subcube(int w) {
    if (w < 1) throw std::invalid_argument("subcube width must be at least 1");
    width = w;
    fixed.assign(word_count(w), 0);
    value.assign(word_count(w), 0);
}

int Subcube::codimension() const {
    int c = 0;
    for (uint64_t w : fixed) c += std::popcount(w);
    return c;
}

void Subcube::set_coord(int i, char c) {
    uint64_t m = uint64_t{1} << (i & 63);
    switch (c) {
        case '0': fixed[i >> 6] |= m; value[i >> 6] &= ~m; break;
        case '1': fixed[i >> 6] |= m; value[i >> 6] |= m; break;
        case '*': fixed[i >> 6] &= ~m; value[i >> 6] &= ~m; break;
        default: throw std::invalid_argument("coordinate must be one of 0, 1, *");
    }
}

bool Subcube::contains(const Point& p) const {
    if (p.width != width)
        throw std::invalid_argument("point width does not match subcube width");
    for (size_t w = 0; w < fixed.size(); ++w)
        if (fixed[w] & (value[w] ^ p.bits[w])) return false;
    return true;
}

std::string Subcube::to_string() const {
    std::string s(width, '*');
    for (int i = 0; i < width; ++i)
        if (coord_fixed(i)) s[i] = coord_value(i) ? '1' : '0';
    return s;
}

std::string Point::to_string() const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

namespace {

bool is_skippable(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == ',' ||
           c == ' ' || c == '\t';
}

}  // namespace

Subcube parse_subcube(std::string_view text) {
    std::string coords;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '0' || c == '1' || c == '*') {
            coords.push_back(c);
        } else if (!is_skippable(c)) {
            std::ostringstream msg;
            msg << "invalid character '" << c << "' at position " << i + 1
                << " in subcube \"" << text << "\"";
            throw std::invalid_argument(msg.str());
        }
    }
    if (coords.empty())
        throw std::invalid_argument("empty subcube text");
    Subcube out(static_cast<int>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i)
        out.set_coord(static_cast<int>(i), coords[i]);
    return out;
}

Point parse_point(std::string_view text) {
    Subcube c = parse_subcube(text);
    if (c.dimension() != 0)
        throw std::invalid_argument("point text may not contain '*'");
    Point p(c.width);
    p.bits = c.value;
    return p;
}

namespace {

void require_same_width(const Subcube& a, const Subcube& b) {
    if (a.width != b.width)
        throw std::invalid_argument("subcube widths differ");
}

}  // namespace

bool intersects(const Subcube& a, const Subcube& b) {
    require_same_width(a, b);
    for (size_t w = 0; w < a.fixed.size(); ++w)
        if (a.fixed[w] & b.fixed[w] & (a.value[w] ^ b.value[w])) return false;
    return true;
}

std::optional<Subcube> intersection(const Subcube& a, const Subcube& b) {
    if (!intersects(a, b)) return std::nullopt;
    Subcube out(a.width);
    for (size_t w = 0; w < a.fixed.size(); ++w) {
        out.fixed[w] = a.fixed[w] | b.fixed[w];
        out.value[w] = a.value[w] | b.value[w];
    }
    return out;
}

Subcube project(const Subcube& x, const Subcube& base) {
    require_same_width(x, base);
    if (base.dimension() == 0)
        throw std::invalid_argument("cannot project onto a base of dimension 0");
    if (!intersects(x, base))
        throw std::invalid_argument("projection requires x to intersect the base");
    Subcube out(base.dimension());
    int j = 0;
    for (int i = 0; i < base.width; ++i) {
        if (base.coord_fixed(i)) continue;
        if (x.coord_fixed(i)) out.set_coord(j, x.coord_value(i) ? '1' : '0');
        ++j;
    }
    return out;
}

int hamming_distance(const Subcube& a, const Subcube& b) {
    require_same_width(a, b);
    int dist = 0;
    for (size_t w = 0; w < a.fixed.size(); ++w)
        dist += std::popcount(a.fixed[w] & b.fixed[w] & (a.value[w] ^ b.value[w]));
    return dist;
}

std::vector<Point> enumerate_points(const Subcube& a, int dimension_cap) {
    int dim = a.dimension();
    if (dim > dimension_cap) {
        std::ostringstream msg;
        msg << "point enumeration of a dimension-" << dim
            << " subcube exceeds the cap of " << dimension_cap;
        throw resource_error(msg.str());
    }
    std::vector<int> free_coords;
    free_coords.reserve(dim);
    for (int i = 0; i < a.width; ++i)
        if (!a.coord_fixed(i)) free_coords.push_back(i);

    std::vector<Point> out;
    out.reserve(size_t{1} << dim);
    Point base(a.width);
    base.bits = a.value;
    for (uint64_t m = 0; m < (uint64_t{1} << dim); ++m) {
        Point p = base;
        // counter bit 0 drives the highest free coordinate: string-lex order
        for (int j = 0; j < dim; ++j)
            if ((m >> (dim - 1 - j)) & 1) p.set(free_coords[j], true);
        out.push_back(std::move(p));
    }
    return out;
}

void CubeFamily::add(Subcube c) {
    if (members.empty() && width == 0) width = c.width;
    if (c.width != width)
        throw std::invalid_argument("member width does not match family width");
    members.push_back(std::move(c));
}

CubeFamily read_family(std::istream& in) {
    CubeFamily fam;
    int declared_width = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string body = line.substr(b, e - b + 1);
        if (body.rfind("d=", 0) == 0) {
            try {
                declared_width = std::stoi(body.substr(2));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family header at line " +
                                            std::to_string(lineno));
            }
            if (declared_width < 0)
                throw std::invalid_argument("negative width in family header");
            fam.width = declared_width;
            continue;
        }
        Subcube c = parse_subcube(body);
        if (fam.width == 0 && fam.members.empty()) fam.width = c.width;
        if (c.width != fam.width)
            throw std::invalid_argument("width mismatch at line " +
                                        std::to_string(lineno));
        fam.members.push_back(std::move(c));
    }
    return fam;
}

void write_family(std::ostream& out, const CubeFamily& fam,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "d=" << fam.width << "\n";
    for (const auto& m : fam.members) out << m.to_string() << "\n";
}

CubeFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    return read_family(in);
}

void save_family(const std::string& path, const CubeFamily& fam,
                 const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write family file: " + path);
    write_family(out, fam, comments);
}

}  // namespace cubegraph

#pragma once
// Subcubes of {0,1}^d as fixed/value bit masks over 64-bit words, plus the
// pieces of their algebra everything else is built on: parsing, intersection,
// projection, Hamming distance and point enumeration.
//
// Character i of the {0,1,*} string form is coordinate i, stored in bit i
// (so the first written coordinate is the least significant bit).  Value
// bits at free coordinates are always zero, which makes equality and
// hashing plain bitwise comparisons.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubegraph {

inline int word_count(int bits) { return (bits + 63) / 64; }

// Mask selecting the live bits of the last word of a width-`bits` vector.
inline uint64_t tail_mask(int bits) {
    int r = bits % 64;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}

struct Point {
    int width = 0;
    std::vector<uint64_t> bits;

    Point() = default;
    explicit Point(int w) : width(w), bits(word_count(w), 0) {}

    bool get(int coord) const { return (bits[coord >> 6] >> (coord & 63)) & 1; }
    void set(int coord, bool v) {
        uint64_t m = uint64_t{1} << (coord & 63);
        if (v) bits[coord >> 6] |= m; else bits[coord >> 6] &= ~m;
    }
    std::string to_string() const;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Subcube {
    int width = 0;
    std::vector<uint64_t> fixed;  // bit i set -> coordinate i fixed
    std::vector<uint64_t> value;  // fixed values; zero at free coordinates

    Subcube() = default;
    explicit Subcube(int w);  // the full cube of width w; throws if w < 1

    int codimension() const;
    int dimension() const { return width - codimension(); }

    bool coord_fixed(int i) const { return (fixed[i >> 6] >> (i & 63)) & 1; }
    bool coord_value(int i) const { return (value[i >> 6] >> (i & 63)) & 1; }

    // c is one of '0', '1', '*'
    void set_coord(int i, char c);

    bool contains(const Point& p) const;
    std::string to_string() const;

    friend auto operator<=>(const Subcube&, const Subcube&) = default;
};

// Parses a {0,1,*} string; parentheses, brackets, commas and blanks are
// skipped so the paper-style "(0,*,1)" notation round-trips.  Throws
// std::invalid_argument naming the first offending position.
Subcube parse_subcube(std::string_view text);

Point parse_point(std::string_view text);

bool intersects(const Subcube& a, const Subcube& b);

// Empty optional iff the subcubes are disjoint; otherwise the subcube with
// the union of both fixed sets (intersections of subcubes are subcubes).
std::optional<Subcube> intersection(const Subcube& a, const Subcube& b);

// Restriction of x to the free coordinates of base, in ascending coordinate
// order.  Requires x to intersect base and dimension(base) >= 1.
Subcube project(const Subcube& x, const Subcube& base);

// Minimum Hamming distance between a point of a and a point of b; equals the
// number of fixed-fixed conflicts, and is 0 exactly when they intersect.
int hamming_distance(const Subcube& a, const Subcube& b);

// All 2^dimension points of a, in lexicographic order of the string form.
// The cap guards accidental 2^d blowups (resource_error).
std::vector<Point> enumerate_points(const Subcube& a, int dimension_cap = 20);

struct CubeFamily {
    int width = 0;
    std::vector<Subcube> members;  // duplicates allowed; order is identity

    CubeFamily() = default;
    explicit CubeFamily(int w) : width(w) {}

    int size() const { return static_cast<int>(members.size()); }
    void add(Subcube c);  // throws on width mismatch

    friend bool operator==(const CubeFamily&, const CubeFamily&) = default;
};

// Family file format: optional "d=<int>" header, one subcube per line,
// '#' starts a comment.  Round-trips bit-exactly.
CubeFamily read_family(std::istream& in);
void write_family(std::ostream& out, const CubeFamily& fam,
                  const std::vector<std::string>& comments = {});
CubeFamily load_family(const std::string& path);
void save_family(const std::string& path, const CubeFamily& fam,
                 const std::vector<std::string>& comments = {});

}  // namespace cubegraph

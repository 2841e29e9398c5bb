#ifndef ARDET_QUIVER_HPP
#define ARDET_QUIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ardet/errors.hpp"

namespace ardet {

// Direction of arrow i, which joins vertices i and i+1 on the A_n line.
enum class Dir : std::uint8_t {
    Right, // i -> i+1
    Left   // i+1 -> i
};

inline Dir opposite(Dir d) { return d == Dir::Right ? Dir::Left : Dir::Right; }

// A zero relation: a directed path of length >= 2, stored as its vertex
// sequence from source to target. Vertices are consecutive on the line and
// all steps have the same sign.
struct Relation {
    std::vector<int> vertices;

    int lo() const { return std::min(vertices.front(), vertices.back()); }
    int hi() const { return std::max(vertices.front(), vertices.back()); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Relation&) const = default;
};

// An orientation of the A_n line with an optional reduced set of zero
// relations; the bound quiver algebra KQ/I. Immutable after construction,
// safe to share across threads.
class Quiver {
public:
    // Validates everything: orientation size, relation paths consistent with
    // the orientation, path length >= 2, and reducedness (no relation range
    // contained in another's). Throws ValidationError.
    static Quiver make(int n, std::vector<Dir> orientation, std::vector<Relation> relations = {});

    int n() const { return n_; }
    int arrow_count() const { return n_ - 1; }

    // Arrow index i runs over 1..n-1.
    Dir dir(int i) const { return orientation_[static_cast<size_t>(i) - 1]; }
    bool arrow_right(int i) const { return dir(i) == Dir::Right; }
    bool arrow_left(int i) const { return dir(i) == Dir::Left; }

    const std::vector<Dir>& orientation() const { return orientation_; }
    const std::vector<Relation>& relations() const { return relations_; }

    // True iff some relation's full vertex range lies inside [a,b].
    bool relation_inside(int a, int b) const;

    bool is_source(int v) const; // no incoming arrow
    bool is_sink(int v) const;   // no outgoing arrow

    std::vector<int> sources() const;
    std::vector<int> sinks() const;
    int interior_source_count() const; // sources in 2..n-1
    int sink_count() const;

    // Canonical text form; parse_quiver(render()) reproduces the value.
    std::string render() const;

    bool operator==(const Quiver&) const = default;

private:
    Quiver() = default;

    int n_ = 1;
    std::vector<Dir> orientation_;
    std::vector<Relation> relations_; // sorted by lo()
};

struct SourceSinkSummary {
    std::vector<int> sources;
    std::vector<int> sinks;
    int p = 0; // sources strictly inside 2..n-1
    int r = 0; // all sinks
};

SourceSinkSummary source_sink_summary(const Quiver& q);

// One report per sink, classified into the five sink-ideal cases. `nonzero`
// follows the case predicate: in cases 1-4 it is plain nonemptiness of the
// restricted set; in case 5 it requires relations on both sides of the sink.
struct SinkIdealReport {
    int sink = 0;
    int case_no = 0;                  // 1..5
    int lo = 0, hi = 0;               // subquiver <lo,hi> the ideal restricts to
    std::vector<Relation> restricted; // relations with range inside <lo,hi>
    bool nonzero = false;
};

// Defined only when the quiver has at least two sinks; throws ValidationError
// otherwise (callers must use the unique-sink branch of the counting formula).
std::vector<SinkIdealReport> sink_ideals(const Quiver& q);

// |{ sinks with nonzero sink ideal }|.
int nonzero_sink_ideal_count(const Quiver& q);

// Accepts the line-oriented text format or, when the first significant
// character is '{', the JSON mirror {"n":..,"orientation":..,"relations":..}.
Quiver parse_quiver(const std::string& text);
Quiver parse_quiver_text(const std::string& text);
Quiver parse_quiver_json(const std::string& text);

} // namespace ardet

#endif

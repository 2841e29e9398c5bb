#include "ardet/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ardet {

namespace {

// Throws ValidationError if `vertices` is not a directed path of length >= 2
// along the given orientation.
void validate_relation_path(int n, const std::vector<Dir>& orientation,
                            const std::vector<int>& vertices) {
    if (vertices.size() < 3)
        throw ValidationError("relation must have length >= 2 (at least 3 vertices)");
    for (int v : vertices)
        if (v < 1 || v > n)
            throw ValidationError("relation vertex " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    const int step = vertices[1] - vertices[0];
    if (step != 1 && step != -1)
        throw ValidationError("relation vertices must be consecutive on the line");
    for (size_t k = 0; k + 1 < vertices.size(); ++k) {
        const int u = vertices[k];
        const int v = vertices[k + 1];
        if (v - u != step)
            throw ValidationError("relation vertices must step by " + std::to_string(step) +
                                  " throughout");
        const int arrow = std::min(u, v);
        const Dir need = (v == u + 1) ? Dir::Right : Dir::Left;
        if (orientation[static_cast<size_t>(arrow) - 1] != need)
            throw ValidationError("relation step " + std::to_string(u) + " -> " +
                                  std::to_string(v) + " runs against arrow " +
                                  std::to_string(arrow));
    }
}

bool range_contained(const Relation& inner, const Relation& outer) {
    return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& tok, int line_no) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line_no, "expected a number, got '" + tok + "'");
    return value;
}

} // namespace

Quiver Quiver::make(int n, std::vector<Dir> orientation, std::vector<Relation> relations) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (static_cast<int>(orientation.size()) != n - 1)
        throw ValidationError("orientation must list exactly n-1 arrows");
    for (const Relation& rel : relations)
        validate_relation_path(n, orientation, rel.vertices);
    for (size_t i = 0; i < relations.size(); ++i)
        for (size_t j = 0; j < relations.size(); ++j)
            if (i != j && range_contained(relations[i], relations[j]))
                throw ValidationError("relation set is not reduced: range [" +
                                      std::to_string(relations[i].lo()) + "," +
                                      std::to_string(relations[i].hi()) +
                                      "] is contained in [" + std::to_string(relations[j].lo()) +
                                      "," + std::to_string(relations[j].hi()) + "]");
    std::sort(relations.begin(), relations.end(),
              [](const Relation& a, const Relation& b) { return a.lo() < b.lo(); });
    Quiver q;
    q.n_ = n;
    q.orientation_ = std::move(orientation);
    q.relations_ = std::move(relations);
    return q;
}

bool Quiver::relation_inside(int a, int b) const {
    for (const Relation& rel : relations_)
        if (a <= rel.lo() && rel.hi() <= b) return true;
    return false;
}

bool Quiver::is_source(int v) const {
    const bool in_from_left = v > 1 && arrow_right(v - 1);
    const bool in_from_right = v < n_ && arrow_left(v);
    return !in_from_left && !in_from_right;
}

bool Quiver::is_sink(int v) const {
    const bool out_to_left = v > 1 && arrow_left(v - 1);
    const bool out_to_right = v < n_ && arrow_right(v);
    return !out_to_left && !out_to_right;
}

std::vector<int> Quiver::sources() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_source(v)) out.push_back(v);
    return out;
}

std::vector<int> Quiver::sinks() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_sink(v)) out.push_back(v);
    return out;
}

int Quiver::interior_source_count() const {
    int p = 0;
    for (int v = 2; v <= n_ - 1; ++v)
        if (is_source(v)) ++p;
    return p;
}

int Quiver::sink_count() const { return static_cast<int>(sinks().size()); }

std::string Quiver::render() const {
    std::ostringstream out;
    for (int v = 1; v <= n_; ++v) {
        if (v > 1) out << (arrow_right(v - 1) ? " > " : " < ");
        out << v;
    }
    out << '\n';
    for (const Relation& rel : relations_) {
        out << "rel:";
        for (int v : rel.vertices) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

SourceSinkSummary source_sink_summary(const Quiver& q) {
    SourceSinkSummary s;
    s.sources = q.sources();
    s.sinks = q.sinks();
    s.p = q.interior_source_count();
    s.r = static_cast<int>(s.sinks.size());
    return s;
}

std::vector<SinkIdealReport> sink_ideals(const Quiver& q) {
    const std::vector<int> sinks = q.sinks();
    if (sinks.size() < 2)
        throw ValidationError("sink ideals undefined: quiver has fewer than two sinks");

    std::vector<int> interior_sources;
    for (int v = 2; v <= q.n() - 1; ++v)
        if (q.is_source(v)) interior_sources.push_back(v);
    if (interior_sources.empty())
        throw InternalError("two sinks with no interior source on a line");

    auto restrict_nonempty = [&q](int lo, int hi) { return q.relation_inside(lo, hi); };
    auto restricted_set = [&q](int lo, int hi) {
        std::vector<Relation> out;
        for (const Relation& rel : q.relations())
            if (lo <= rel.lo() && rel.hi() <= hi) out.push_back(rel);
        return out;
    };

    std::vector<SinkIdealReport> reports;
    for (int i : sinks) {
        SinkIdealReport rep;
        rep.sink = i;
        if (i == 1) {
            rep.case_no = 1;
            rep.lo = 1;
            rep.hi = interior_sources.front();
        } else if (i == q.n()) {
            rep.case_no = 2;
            rep.lo = interior_sources.back();
            rep.hi = q.n();
        } else if (i == sinks.front()) {
            rep.case_no = 3;
            rep.lo = i;
            rep.hi = interior_sources.front();
        } else if (i == sinks.back()) {
            rep.case_no = 4;
            rep.lo = interior_sources.back();
            rep.hi = i;
        } else {
            rep.case_no = 5;
            // nearest sources on both sides; <s,i> and <i,s'> are linear runs
            int s = 0, s_next = 0;
            for (int v : interior_sources) {
                if (v < i) s = v;
                if (v > i && s_next == 0) s_next = v;
            }
            if (s == 0 || s_next == 0)
                throw InternalError("interior sink without flanking sources");
            rep.lo = s;
            rep.hi = s_next;
            rep.restricted = restricted_set(rep.lo, rep.hi);
            rep.nonzero = restrict_nonempty(s, i) && restrict_nonempty(i, s_next);
            reports.push_back(std::move(rep));
            continue;
        }
        rep.restricted = restricted_set(rep.lo, rep.hi);
        rep.nonzero = !rep.restricted.empty();
        reports.push_back(std::move(rep));
    }
    return reports;
}

int nonzero_sink_ideal_count(const Quiver& q) {
    int count = 0;
    for (const SinkIdealReport& rep : sink_ideals(q))
        if (rep.nonzero) ++count;
    return count;
}

Quiver parse_quiver_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    int n = 0;
    std::vector<Dir> orientation;
    std::vector<Relation> relations;
    std::vector<int> relation_lines;
    bool seen_header = false;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = tokens_of(raw);
        if (toks.empty()) continue;

        if (!seen_header) {
            // vertex list with comparators: 1 > 2 < 3 ...
            if (toks.size() % 2 == 0)
                throw ParseError(line_no, "orientation line must alternate vertices and < or >");
            for (size_t k = 0; k < toks.size(); ++k) {
                if (k % 2 == 0) {
                    const int v = parse_int(toks[k], line_no);
                    const int expected = static_cast<int>(k / 2) + 1;
                    if (v != expected)
                        throw ParseError(line_no, "expected vertex " + std::to_string(expected) +
                                                      ", got " + std::to_string(v));
                } else {
                    if (toks[k] == ">")
                        orientation.push_back(Dir::Right);
                    else if (toks[k] == "<")
                        orientation.push_back(Dir::Left);
                    else
                        throw ParseError(line_no, "expected < or >, got '" + toks[k] + "'");
                }
            }
            n = static_cast<int>(toks.size() / 2) + 1;
            seen_header = true;
            continue;
        }

        if (toks[0] == "rel:") {
            Relation rel;
            for (size_t k = 1; k < toks.size(); ++k)
                rel.vertices.push_back(parse_int(toks[k], line_no));
            try {
                validate_relation_path(n, orientation, rel.vertices);
            } catch (const ValidationError& e) {
                throw ParseError(line_no, e.what());
            }
            relations.push_back(std::move(rel));
            relation_lines.push_back(line_no);
            continue;
        }
        throw ParseError(line_no, "expected 'rel: v1 v2 ...', got '" + toks[0] + "'");
    }

    if (!seen_header) throw ParseError(0, "empty input: missing orientation line");

    for (size_t i = 0; i < relations.size(); ++i)
        for (size_t j = 0; j < relations.size(); ++j)
            if (i != j && range_contained(relations[i], relations[j]))
                throw ParseError(relation_lines[j],
                                 "relation set is not reduced: this relation contains the one "
                                 "with range [" +
                                     std::to_string(relations[i].lo()) + "," +
                                     std::to_string(relations[i].hi()) + "]");

    return Quiver::make(n, std::move(orientation), std::move(relations));
}

Quiver parse_quiver_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        std::vector<Dir> orientation;
        for (const auto& entry : j.at("orientation")) {
            const std::string s = entry.get<std::string>();
            if (s == "R")
                orientation.push_back(Dir::Right);
            else if (s == "L")
                orientation.push_back(Dir::Left);
            else
                throw ParseError(0, "orientation entries must be \"R\" or \"L\", got \"" + s +
                                        "\"");
        }
        std::vector<Relation> relations;
        if (j.contains("relations"))
            for (const auto& arr : j.at("relations")) {
                Relation rel;
                for (const auto& v : arr) rel.vertices.push_back(v.get<int>());
                relations.push_back(std::move(rel));
            }
        return Quiver::make(n, std::move(orientation), std::move(relations));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid quiver JSON: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(0, e.what());
    }
}

Quiver parse_quiver(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_quiver_json(text);
        break;
    }
    return parse_quiver_text(text);
}

} // namespace ardet

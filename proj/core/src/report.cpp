#include "ardet/report.hpp"

#include <sstream>

namespace ardet {

namespace {

ojson interval_json(Interval m) { return ojson::array({m.a, m.b}); }

Interval interval_from(const ojson& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

std::string labels_suffix(const Quiver& q, Interval m) {
    const auto labels = module_labels(q, m);
    if (labels.empty()) return "";
    std::string out = "  ";
    for (size_t k = 0; k < labels.size(); ++k) {
        if (k) out += ' ';
        out += labels[k];
    }
    return out;
}

} // namespace

ojson quiver_to_json(const Quiver& q) {
    ojson j;
    j["n"] = q.n();
    ojson orient = ojson::array();
    for (Dir d : q.orientation()) orient.push_back(d == Dir::Right ? "R" : "L");
    j["orientation"] = std::move(orient);
    ojson rels = ojson::array();
    for (const Relation& rel : q.relations()) rels.push_back(rel.vertices);
    j["relations"] = std::move(rels);
    return j;
}

ojson det_report_to_json(const Quiver& q, const DetReport& report) {
    ojson j = quiver_to_json(q);
    j["p"] = report.p;
    j["q"] = report.q_ideals;
    j["r"] = report.r;
    j["branch"] = branch_name(report.predicted.branch);
    if (report.predicted.count)
        j["predicted"] = *report.predicted.count;
    else
        j["predicted"] = nullptr;
    j["det_count"] = report.det_count;
    ojson det = ojson::array();
    for (const Interval& m : report.det_set) {
        ojson entry;
        entry["interval"] = interval_json(m);
        entry["labels"] = module_labels(q, m);
        det.push_back(std::move(entry));
    }
    j["det_set"] = std::move(det);
    ojson records = ojson::array();
    for (const DeterminerRecord& rec : report.records) {
        ojson entry;
        entry["from"] = interval_json(rec.morphism.arrow.source);
        entry["to"] = interval_json(rec.morphism.arrow.target);
        entry["kind"] = rec.morphism.kind == MorphKind::Mono ? "mono" : "epi";
        entry["determiner"] = interval_json(rec.determiner);
        entry["class"] = rec.cls == DetClass::Projective ? "projective" : "tau_inv_kernel";
        records.push_back(std::move(entry));
    }
    j["records"] = std::move(records);
    return j;
}

std::pair<Quiver, DetReport> det_report_from_json(const ojson& j) {
    Quiver q = parse_quiver_json(j.dump());
    DetReport report;
    report.p = j.at("p").get<int>();
    report.q_ideals = j.at("q").get<int>();
    report.r = j.at("r").get<int>();
    report.det_count = j.at("det_count").get<int>();
    const std::string branch = j.at("branch").get<std::string>();
    for (FormulaBranch b :
         {FormulaBranch::PathPZero, FormulaBranch::PathPPositive, FormulaBranch::BoundROne,
          FormulaBranch::BoundRTwoPlus, FormulaBranch::NotApplicable})
        if (branch_name(b) == branch) report.predicted.branch = b;
    if (!j.at("predicted").is_null())
        report.predicted.count = j.at("predicted").get<int>();
    for (const ojson& entry : j.at("det_set"))
        report.det_set.push_back(interval_from(entry.at("interval")));
    for (const ojson& entry : j.at("records")) {
        DeterminerRecord rec;
        const Interval from = interval_from(entry.at("from"));
        const Interval to = interval_from(entry.at("to"));
        const auto arrow = basis_hom(q, from, to);
        if (!arrow) throw ParseError(0, "record " + from.str() + " -> " + to.str() +
                                            " names a zero Hom space");
        rec.morphism.arrow = *arrow;
        rec.morphism.kind =
            entry.at("kind").get<std::string>() == "mono" ? MorphKind::Mono : MorphKind::Epi;
        rec.determiner = interval_from(entry.at("determiner"));
        const bool projective_class = entry.at("class").get<std::string>() == "projective";
        rec.cls = projective_class ? DetClass::Projective : DetClass::TauInvKernel;
        rec.route = projective_class ? Route::SocleShortcut : Route::ClosedForm;
        if (projective_class)
            for (int i = 1; i <= q.n(); ++i)
                if (projective(q, i) == rec.determiner) rec.proj_vertex = i;
        report.records.push_back(std::move(rec));
    }
    return {std::move(q), std::move(report)};
}

ojson sequences_to_json(const ARQuiver& ar) {
    ojson seqs = ojson::array();
    for (const AlmostSplitSeq& seq : ar.sequences()) {
        ojson entry;
        entry["left"] = interval_json(seq.left);
        ojson middle = ojson::array();
        for (const Interval& m : seq.middle) middle.push_back(interval_json(m));
        entry["middle"] = std::move(middle);
        entry["right"] = interval_json(seq.right);
        seqs.push_back(std::move(entry));
    }
    ojson j;
    j["sequences"] = std::move(seqs);
    return j;
}

ojson indecomposables_to_json(const Quiver& q) {
    ojson arr = ojson::array();
    for (const Interval& m : all_indecomposables(q)) {
        ojson entry;
        entry["interval"] = interval_json(m);
        entry["labels"] = module_labels(q, m);
        arr.push_back(std::move(entry));
    }
    ojson j;
    j["indecomposables"] = std::move(arr);
    return j;
}

std::string indecomposables_text(const Quiver& q) {
    std::ostringstream out;
    const auto modules = all_indecomposables(q);
    out << q.render();
    out << "indecomposables (" << modules.size() << "):\n";
    for (const Interval& m : modules) out << "  " << m.str() << labels_suffix(q, m) << '\n';
    return out.str();
}

std::string sequences_text(const Quiver& q, const ARQuiver& ar) {
    std::ostringstream out;
    out << q.render();
    out << "almost split sequences (" << ar.sequences().size() << "):\n";
    for (const AlmostSplitSeq& seq : ar.sequences()) {
        out << "  0 -> " << seq.left.str() << " -> ";
        for (size_t k = 0; k < seq.middle.size(); ++k) {
            if (k) out << " (+) ";
            out << seq.middle[k].str();
        }
        out << " -> " << seq.right.str() << " -> 0\n";
    }
    out << "irreducible morphisms (" << ar.irreducibles().size() << "):\n";
    for (const IrreducibleMorphism& irr : ar.irreducibles())
        out << "  " << (irr.kind == MorphKind::Mono ? "mono " : "epi  ") << irr.arrow.source.str()
            << " -> " << irr.arrow.target.str() << '\n';
    return out.str();
}

std::string sink_ideals_text(const Quiver& q) {
    std::ostringstream out;
    if (q.sink_count() < 2) return "";
    out << "sink ideals:\n";
    for (const SinkIdealReport& rep : sink_ideals(q)) {
        out << "  sink " << rep.sink << "  case " << rep.case_no << "  <" << rep.lo << ","
            << rep.hi << ">  ";
        if (rep.restricted.empty())
            out << "(empty)";
        else
            for (const Relation& rel : rep.restricted) {
                out << "[";
                for (size_t k = 0; k < rel.vertices.size(); ++k) {
                    if (k) out << ' ';
                    out << rel.vertices[k];
                }
                out << "]";
            }
        out << "  " << (rep.nonzero ? "nonzero" : "zero") << '\n';
    }
    return out.str();
}

std::string det_report_text(const Quiver& q, const DetReport& report) {
    std::ostringstream out;
    out << q.render();
    out << "n=" << q.n() << "  p=" << report.p << "  q=" << report.q_ideals
        << "  r=" << report.r << "  branch=" << branch_name(report.predicted.branch)
        << "  predicted=";
    if (report.predicted.count)
        out << *report.predicted.count;
    else
        out << "n/a";
    out << "  det_count=" << report.det_count << '\n';
    out << sink_ideals_text(q);
    out << "records (" << report.records.size() << "):\n";
    for (const DeterminerRecord& rec : report.records) {
        out << "  " << (rec.morphism.kind == MorphKind::Mono ? "mono " : "epi  ")
            << rec.morphism.arrow.source.str() << " -> " << rec.morphism.arrow.target.str()
            << "  C = " << rec.determiner.str();
        if (rec.cls == DetClass::Projective)
            out << "  P(" << rec.proj_vertex << ")";
        else
            out << "  tau^{-1}(ker)";
        out << '\n';
    }
    out << "determiner set (" << report.det_count << "):\n";
    for (const Interval& m : report.det_set)
        out << "  " << m.str() << labels_suffix(q, m) << '\n';
    return out.str();
}

} // namespace ardet

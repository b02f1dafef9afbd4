#include "mptri/document.hpp"

#include <sstream>

namespace mptri {

nlohmann::json OutputDocument::to_json() const {
    nlohmann::json j;
    j["variables"] = variables;
    j["components"] = nlohmann::json::array();
    for (const auto& c : components)
        j["components"].push_back({{"lower", c.lower}, {"upper", c.upper}, {"weight", c.weight}});
    j["pending"] = pending;
    if (multiplicities) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& e : *multiplicities) {
            nlohmann::json row{{"lower", e.lower},
                               {"upper", e.upper},
                               {"count", e.count},
                               {"multiplicity", e.multiplicity}};
            if (e.point) row["point"] = *e.point;
            m.push_back(std::move(row));
        }
        j["multiplicities"] = std::move(m);
        j["total_multiplicity"] = *total_multiplicity;
    }
    if (trace) j["trace"] = *trace;
    if (verification) {
        j["verification"] = {{"match", verification->match},
                             {"oracle_total", verification->oracle_total},
                             {"shears", verification->shears},
                             {"diff", verification->diff}};
    }
    return j;
}

std::string OutputDocument::to_text() const {
    std::ostringstream os;
    os << "variables:";
    for (const auto& v : variables) os << " " << v;
    os << "\ncomponents:\n";
    for (const auto& c : components) {
        os << "  ";
        if (c.weight != 1) os << c.weight << " * ";
        os << "[" << c.lower << ", " << c.upper << "]\n";
    }
    if (components.empty()) os << "  (none: the system has no common zeros)\n";
    if (!pending.empty()) {
        os << "pending sub-systems:\n";
        for (const auto& p : pending) os << "  " << p << "\n";
    }
    if (multiplicities) {
        os << "multiplicities:\n";
        for (const auto& e : *multiplicities) {
            os << "  ";
            if (e.point) os << *e.point;
            else os << "roots of [" << e.lower << ", " << e.upper << "] (" << e.count << " points)";
            os << ": " << e.multiplicity << "\n";
        }
        os << "total multiplicity: " << *total_multiplicity << "\n";
    }
    if (verification) {
        os << "verification: " << (verification->match ? "match" : "MISMATCH")
           << " (oracle total " << verification->oracle_total << ", shears";
        for (long s : verification->shears) os << " " << s;
        os << ")\n";
        for (const auto& dline : verification->diff) os << "  " << dline << "\n";
    }
    return os.str();
}

namespace {

std::string render_point(const std::pair<mpq_class, mpq_class>& pt) {
    return "(" + pt.first.get_str() + ", " + pt.second.get_str() + ")";
}

} // namespace

OutputDocument run_decompose(const Poly& f1, const Poly& f2, const RunOptions& opts) {
    const VarOrderPtr order = f1.order();
    OutputDocument doc;
    doc.variables = order->names();

    Decomposition d = (order->size() == 2)
                          ? bivariate_decompose(f1, f2)
                          : signed_decompose(f1, f2, order->main_index());

    for (const auto& c : d.positives)
        doc.components.push_back({c.triset.lower.to_string(), c.triset.upper.to_string(),
                                  c.weight});
    for (const auto& c : d.negatives)
        doc.components.push_back({c.triset.lower.to_string(), c.triset.upper.to_string(),
                                  -c.weight});
    for (const auto& p : d.pending) {
        std::ostringstream os;
        os << (p.sign < 0 ? "-" : "+") << " [" << p.first.to_string() << ", "
           << p.second.to_string() << "]";
        if (!p.reduced) os << " (verbatim: not reduced modulo the first entry)";
        doc.pending.push_back(os.str());
    }

    if (order->size() == 2 && d.negatives.empty() && d.pending.empty()) {
        MultZeroReport rep = report_multiplicities(d);
        std::vector<MultiplicityDoc> rows;
        for (const auto& e : rep.points) {
            MultiplicityDoc row;
            row.lower = e.lower.to_string();
            row.upper = e.upper.to_string();
            row.count = e.points;
            row.multiplicity = e.multiplicity;
            if (e.rational_point) row.point = render_point(*e.rational_point);
            rows.push_back(std::move(row));
        }
        doc.multiplicities = std::move(rows);
        doc.total_multiplicity = rep.total;
    }

    if (opts.with_trace && d.trace) doc.trace = d.trace->trace_json();

    if (opts.with_verify) {
        if (order->size() != 2)
            throw MathError("--verify supports bivariate systems only");
        OracleReport rep = multiplicities_by_shear(f1, f2);
        CrossCheckResult cc = cross_check(d, rep);
        VerificationDoc v;
        v.match = cc.match;
        v.oracle_total = rep.total;
        v.shears = rep.shears;
        v.diff = cc.diff;
        doc.verification = std::move(v);
    }
    return doc;
}

} // namespace mptri

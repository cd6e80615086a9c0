#include "afs/principles.hpp"

#include "afs/propagation.hpp"
#include "afs/ub_semantics.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace afs {

const char* semantics_token(SemanticsId id) {
    switch (id) {
        case SemanticsId::grounded: return "GR";
        case SemanticsId::complete: return "CO";
        case SemanticsId::preferred: return "PR";
        case SemanticsId::stable: return "ST";
        case SemanticsId::weakly_complete: return "WCO";
        case SemanticsId::weakly_preferred: return "WPR";
        case SemanticsId::weakly_grounded: return "WGR";
        case SemanticsId::weakly_stable: return "WST";
        case SemanticsId::ub_grounded: return "UBGR";
        case SemanticsId::ub_preferred: return "UBPR";
        case SemanticsId::bbu_complete: return "BBU-CO";
        case SemanticsId::bbu_preferred: return "BBU-PR";
        case SemanticsId::bbu_grounded: return "BBU-GR";
    }
    return "?";
}

optional<SemanticsId> semantics_from_token(const string& token) {
    string t;
    for (char c : token) t.push_back(static_cast<char>(toupper(static_cast<unsigned char>(c))));
    replace(t.begin(), t.end(), '_', '-');
    static const pair<const char*, SemanticsId> table[] = {
        {"GR", SemanticsId::grounded},          {"CO", SemanticsId::complete},
        {"PR", SemanticsId::preferred},         {"ST", SemanticsId::stable},
        {"WCO", SemanticsId::weakly_complete},  {"WC", SemanticsId::weakly_complete},
        {"WPR", SemanticsId::weakly_preferred}, {"W-PR", SemanticsId::weakly_preferred},
        {"WGR", SemanticsId::weakly_grounded},  {"WST", SemanticsId::weakly_stable},
        {"UBGR", SemanticsId::ub_grounded},     {"UB-GR", SemanticsId::ub_grounded},
        {"UBPR", SemanticsId::ub_preferred},    {"UB-PR", SemanticsId::ub_preferred},
        {"BBU-CO", SemanticsId::bbu_complete},  {"BBU-PR", SemanticsId::bbu_preferred},
        {"BBU-GR", SemanticsId::bbu_grounded},
    };
    for (const auto& [name, id] : table)
        if (t == name) return id;
    return nullopt;
}

vector<Labelling> semantics_labellings(const Framework& fw, SemanticsId id,
                                       const EnumerationLimits& limits,
                                       const BbuLimits& bbu_limits) {
    switch (id) {
        case SemanticsId::grounded:
        case SemanticsId::weakly_grounded:
            return {grounded_labelling(fw)};
        case SemanticsId::complete:
            return dung_complete_labellings(fw, limits).labellings;
        case SemanticsId::preferred:
            return dung_preferred_labellings(fw, limits).labellings;
        case SemanticsId::stable:
            return dung_stable_labellings(fw, limits).labellings;
        case SemanticsId::weakly_complete:
            return weakly_complete_labellings(fw, limits).labellings;
        case SemanticsId::weakly_preferred:
            return weakly_preferred_labellings(fw, limits).labellings;
        case SemanticsId::weakly_stable:
            return weakly_stable_labellings(fw, limits).labellings;
        case SemanticsId::ub_grounded:
            return {ub_grounded_labelling(fw)};
        case SemanticsId::ub_preferred:
            return ub_preferred_labellings(fw, limits);
        case SemanticsId::bbu_complete:
        case SemanticsId::bbu_preferred:
        case SemanticsId::bbu_grounded: {
            ExtensionSet es = id == SemanticsId::bbu_complete    ? bbu_complete(fw, bbu_limits)
                              : id == SemanticsId::bbu_preferred ? bbu_preferred(fw, bbu_limits)
                                                                 : bbu_grounded(fw, bbu_limits);
            vector<Labelling> out;
            out.reserve(es.extensions.size());
            for (const vector<int>& ext : es.extensions)
                out.push_back(labelling_from_in_set(fw, ext));
            return out;
        }
    }
    throw invalid_argument("unknown semantics");
}

Framework random_framework(int n, double p, uint32_t seed) {
    if (n < 1) throw invalid_argument("random framework needs at least one argument");
    if (p < 0.0 || p > 1.0) throw invalid_argument("edge probability out of range");
    mt19937 gen(seed);
    // Fixed-point threshold keeps the draw sequence identical everywhere.
    uint64_t threshold = static_cast<uint64_t>(p * 4294967296.0);
    vector<string> args;
    args.reserve(n);
    for (int i = 0; i < n; i++) args.push_back("a" + to_string(i));
    vector<pair<string, string>> attacks;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (static_cast<uint64_t>(gen()) < threshold) attacks.emplace_back(args[i], args[j]);
    return Framework::build(args, attacks);
}

LabellingPrincipleFlags check_labelling_principles(const Framework& fw, const Labelling& l) {
    if (l.size() != fw.size())
        throw invalid_argument("labelling does not match framework");
    LabellingPrincipleFlags flags{true, true, true, true};
    for (int a = 0; a < fw.size(); a++) {
        bool some_in = false, all_out = true;
        for (int b : fw.attackers(a)) {
            if (l.at(b) == Label::in) some_in = true;
            if (l.at(b) != Label::out) all_out = false;
        }
        if (l.at(a) == Label::in) {
            if (some_in) flags.conflict_free = false;
            if (!all_out) flags.admissible = false;
        }
        if (all_out && l.at(a) != Label::in) flags.reinstatement = false;
        if (some_in && l.at(a) != Label::out) flags.rejection = false;
    }
    return flags;
}

namespace {

vector<int> initial_components(const Framework& fw, const SccDecomposition& dec) {
    vector<char> attacked_from_outside(dec.components.size(), 0);
    for (int a = 0; a < fw.size(); a++)
        for (int t : fw.targets(a))
            if (dec.component_of[a] != dec.component_of[t])
                attacked_from_outside[dec.component_of[t]] = 1;
    vector<int> out;
    for (size_t c = 0; c < dec.components.size(); c++)
        if (!attacked_from_outside[c]) out.push_back(static_cast<int>(c));
    return out;
}

}  // namespace

PrincipleResult check_directionality(const Framework& fw, SemanticsId id,
                                     const EnumerationLimits& limits,
                                     const BbuLimits& bbu_limits) {
    PrincipleResult res;
    SccDecomposition dec = scc_decomposition(fw);
    vector<Labelling> full = semantics_labellings(fw, id, limits, bbu_limits);
    for (int c : initial_components(fw, dec)) {
        const vector<int>& comp = dec.components[c];
        Framework sub = fw.restrict_to(comp);
        set<vector<string>> restricted = in_set_family(sub, semantics_labellings(sub, id, limits, bbu_limits));
        set<vector<string>> projected;
        for (const Labelling& l : full) {
            vector<string> names;
            for (int a : comp)
                if (l.at(a) == Label::in) names.push_back(fw.name(a));
            sort(names.begin(), names.end());
            projected.insert(move(names));
        }
        if (restricted != projected) {
            res.verdict = Verdict::refuted;
            res.counterexample = fw;
            ostringstream note;
            note << "projection mismatch on the unattacked component {";
            for (size_t i = 0; i < comp.size(); i++)
                note << (i ? "," : "") << fw.name(comp[i]);
            note << "}";
            res.note = note.str();
            return res;
        }
    }
    return res;
}

PrincipleResult check_abstention(const Framework& fw, SemanticsId id,
                                 const EnumerationLimits& limits, const BbuLimits& bbu_limits) {
    PrincipleResult res;
    vector<Labelling> ls = semantics_labellings(fw, id, limits, bbu_limits);
    for (int a = 0; a < fw.size(); a++) {
        bool has_in = false, has_out = false, has_undec = false;
        for (const Labelling& l : ls) {
            if (l.at(a) == Label::in) has_in = true;
            if (l.at(a) == Label::out) has_out = true;
            if (l.at(a) == Label::undec) has_undec = true;
        }
        if (has_in && has_out && !has_undec) {
            res.verdict = Verdict::refuted;
            res.counterexample = fw;
            res.note = "argument " + fw.name(a) + " flips between accepted and rejected "
                       "with no labelling leaving it undecided";
            return res;
        }
    }
    return res;
}

bool i_maximal(const vector<Labelling>& ls) {
    for (size_t i = 0; i < ls.size(); i++)
        for (size_t j = 0; j < ls.size(); j++) {
            if (i == j) continue;
            bool subset = true, proper = false;
            for (int a = 0; a < ls[i].size(); a++) {
                if (ls[i].at(a) == Label::in && ls[j].at(a) != Label::in) subset = false;
                if (ls[j].at(a) == Label::in && ls[i].at(a) != Label::in) proper = true;
            }
            if (subset && proper) return false;
        }
    return true;
}

namespace {

Framework pure_cycle(int len) {
    vector<string> args;
    vector<pair<string, string>> attacks;
    for (int i = 0; i < len; i++) args.push_back("c" + to_string(i));
    for (int i = 0; i < len; i++) attacks.emplace_back(args[i], args[(i + 1) % len]);
    return Framework::build(args, attacks);
}

}  // namespace

PrincipleResult check_cycle_homogeneity(SemanticsId id, int max_len,
                                        const EnumerationLimits& limits,
                                        const BbuLimits& bbu_limits) {
    if (max_len < 2) throw invalid_argument("cycle length bound must be at least 2");
    PrincipleResult res;
    for (int len = 2; len <= max_len; len++) {
        Framework cycle = pure_cycle(len);
        vector<Labelling> ls = semantics_labellings(cycle, id, limits, bbu_limits);
        for (int a = 0; a < cycle.size(); a++) {
            for (size_t i = 0; i + 1 < ls.size(); i++) {
                if (ls[i].at(a) != ls[i + 1].at(a)) {
                    res.verdict = Verdict::refuted;
                    res.counterexample = cycle;
                    res.note = "cycle of length " + to_string(len) + ": argument " +
                               cycle.name(a) + " is labelled differently across labellings";
                    return res;
                }
            }
        }
    }
    return res;
}

namespace {

vector<Framework> bundled_counterexamples() {
    vector<Framework> out;
    // self-attacker blocking its target
    out.push_back(Framework::build({"a", "b"}, {{"a", "a"}, {"a", "b"}}));
    // two rebutting arguments
    out.push_back(Framework::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
    // floating assignment
    out.push_back(Framework::build({"a", "b", "c"},
                                   {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}}));
    // three-cycle
    out.push_back(Framework::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
    // self-attacker feeding a chain
    out.push_back(Framework::build({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "c"}}));
    // rebutting pair feeding a self-attacker: restricted stable labellings
    // are not the projections of the full ones
    out.push_back(Framework::build(
        {"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "c"}}));
    // mutual pair with crossed protections and a three-cycle: splits the
    // set-based grounded family and breaks its directionality
    out.push_back(Framework::build({"a1", "a2", "b1", "b2", "c1", "c2"},
                                   {{"a1", "a2"},
                                    {"a2", "a1"},
                                    {"a1", "c2"},
                                    {"a1", "b2"},
                                    {"b1", "c1"},
                                    {"c1", "c2"},
                                    {"c2", "b1"}}));
    return out;
}

struct RowTracker {
    PrincipleResult result;

    void refute(const Framework& fw, const string& note) {
        if (result.verdict == Verdict::refuted) return;
        result.verdict = Verdict::refuted;
        result.counterexample = fw;
        result.note = note;
    }
    void merge(const PrincipleResult& r) {
        if (r.verdict == Verdict::refuted && result.verdict != Verdict::refuted) result = r;
    }
};

string framework_summary(const Framework& fw) {
    ostringstream os;
    os << "args{";
    for (int a = 0; a < fw.size(); a++) os << (a ? "," : "") << fw.name(a);
    os << "} attacks{";
    bool first = true;
    for (const auto& [x, y] : fw.attack_pairs()) {
        os << (first ? "" : ",") << x << "->" << y;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

PrincipleReport principle_report(const vector<SemanticsId>& ids, const SampleSpec& spec) {
    PrincipleReport report;
    report.semantics = ids;
    report.sample = spec;
    report.principles = {"conflict-free", "admissible",   "reinstatement",
                         "rejection",     "directionality", "abstention",
                         "i-maximality",  "cycle-homogeneity", "acyclic-decided"};

    vector<Framework> sample = bundled_counterexamples();
    for (int i = 0; i < spec.samples; i++) {
        int n = 1 + i % spec.max_arguments;
        double p = spec.edge_probabilities[i % spec.edge_probabilities.size()];
        sample.push_back(random_framework(n, p, spec.seed + 7919u * static_cast<uint32_t>(i)));
    }
    report.frameworks_checked = static_cast<int>(sample.size());

    EnumerationLimits limits;
    BbuLimits bbu_limits;

    for (SemanticsId id : ids) {
        string sem = semantics_token(id);
        RowTracker conflict_free, admissible, reinstatement, rejection;
        RowTracker directionality, abstention, i_max, acyclic_decided;
        CardinalitySummary card;
        bool first_card = true;

        for (const Framework& fw : sample) {
            vector<Labelling> ls = semantics_labellings(fw, id, limits, bbu_limits);

            int count = static_cast<int>(ls.size());
            if (first_card) {
                card.min_count = card.max_count = count;
                first_card = false;
            } else {
                card.min_count = min(card.min_count, count);
                card.max_count = max(card.max_count, count);
            }

            for (const Labelling& l : ls) {
                LabellingPrincipleFlags flags = check_labelling_principles(fw, l);
                string accepted;
                for (const string& nm : in_names(fw, l))
                    accepted += (accepted.empty() ? "" : ",") + nm;
                string where = framework_summary(fw) + " labelling in={" + accepted + "}";
                if (!flags.conflict_free) conflict_free.refute(fw, where);
                if (!flags.admissible) admissible.refute(fw, where);
                if (!flags.reinstatement) reinstatement.refute(fw, where);
                if (!flags.rejection) rejection.refute(fw, where);
            }

            directionality.merge(check_directionality(fw, id, limits, bbu_limits));
            abstention.merge(check_abstention(fw, id, limits, bbu_limits));
            if (!i_maximal(ls))
                i_max.refute(fw, framework_summary(fw));

            for (int a = 0; a < fw.size(); a++) {
                if (!is_acyclic_argument(fw, a)) continue;
                for (const Labelling& l : ls)
                    if (l.at(a) == Label::undec)
                        acyclic_decided.refute(fw, "acyclic argument " + fw.name(a) +
                                                       " left undecided in " +
                                                       framework_summary(fw));
            }
        }

        card.always_exactly_one = (card.min_count == 1 && card.max_count == 1);
        card.always_at_least_one = (card.min_count >= 1);
        report.cardinality[sem] = card;

        RowTracker cycle_homo;
        cycle_homo.merge(check_cycle_homogeneity(id, spec.max_cycle_length, limits, bbu_limits));

        report.rows[{sem, "conflict-free"}] = conflict_free.result;
        report.rows[{sem, "admissible"}] = admissible.result;
        report.rows[{sem, "reinstatement"}] = reinstatement.result;
        report.rows[{sem, "rejection"}] = rejection.result;
        report.rows[{sem, "directionality"}] = directionality.result;
        report.rows[{sem, "abstention"}] = abstention.result;
        report.rows[{sem, "i-maximality"}] = i_max.result;
        report.rows[{sem, "cycle-homogeneity"}] = cycle_homo.result;
        report.rows[{sem, "acyclic-decided"}] = acyclic_decided.result;

        if (id == SemanticsId::weakly_preferred &&
            directionality.result.verdict == Verdict::refuted) {
            report.notes.push_back(
                "WPR directionality is refuted by the floating-assignment counterexample "
                "even though it holds on many sampled frameworks.");
        }
    }
    return report;
}

string render_report(const PrincipleReport& report) {
    ostringstream os;
    os << "principle report\n";
    os << "sample: n<=" << report.sample.max_arguments << " p={";
    for (size_t i = 0; i < report.sample.edge_probabilities.size(); i++)
        os << (i ? "," : "") << report.sample.edge_probabilities[i];
    os << "} samples=" << report.sample.samples << " seed=" << report.sample.seed
       << " cycles<=" << report.sample.max_cycle_length << "\n";
    os << "frameworks checked: " << report.frameworks_checked << "\n\n";

    os << "principle";
    for (SemanticsId id : report.semantics) os << "\t" << semantics_token(id);
    os << "\n";
    for (const string& principle : report.principles) {
        os << principle;
        for (SemanticsId id : report.semantics) {
            auto it = report.rows.find({semantics_token(id), principle});
            os << "\t"
               << (it == report.rows.end()
                       ? "-"
                       : (it->second.verdict == Verdict::holds_on_sample ? "holds-on-sample"
                                                                           : "refuted"));
        }
        os << "\n";
    }
    os << "cardinality";
    for (SemanticsId id : report.semantics) {
        const CardinalitySummary& c = report.cardinality.at(semantics_token(id));
        os << "\t" << c.min_count << ".." << c.max_count
           << (c.always_exactly_one ? " (=1)" : "");
    }
    os << "\n\ncounterexamples:\n";
    for (const auto& [key, result] : report.rows) {
        if (result.verdict != Verdict::refuted) continue;
        os << "  " << key.first << " " << key.second << ": "
           << (result.counterexample ? framework_summary(*result.counterexample) : "-");
        if (!result.note.empty()) os << " -- " << result.note;
        os << "\n";
    }
    if (!report.notes.empty()) {
        os << "notes:\n";
        for (const string& n : report.notes) os << "  " << n << "\n";
    }
    return os.str();
}

}

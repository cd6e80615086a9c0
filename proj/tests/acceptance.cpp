// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include "afs/bbu.hpp"
#include "afs/enumeration.hpp"
#include "afs/io.hpp"
#include "afs/oracle.hpp"
#include "afs/principles.hpp"
#include "afs/propagation.hpp"
#include "afs/ub_semantics.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace afs;
using namespace std;

namespace {

int failures = 0;

void report_line(int criterion, const string& name, bool pass, const string& detail = "") {
    cout << "criterion " << criterion << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) cout << " -- " << detail;
    cout << "\n";
    if (!pass) failures++;
}

Framework fixture(const string& name) {
    ifstream in(string(FIXTURE_DIR) + "/" + name);
    if (!in) throw runtime_error("missing fixture: " + name);
    ostringstream ss;
    ss << in.rdbuf();
    return parse_tgf(ss.str());
}

using NameSet = set<vector<string>>;

double seconds_since(chrono::steady_clock::time_point start) {
    return chrono::duration<double>(chrono::steady_clock::now() - start).count();
}

Framework sample_framework(int index, int max_n, uint32_t seed_base) {
    const double ps[3] = {0.1, 0.3, 0.5};
    int n = 1 + index % max_n;
    double p = ps[index % 3];
    return random_framework(n, p, seed_base + 131u * static_cast<uint32_t>(index));
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    auto start = chrono::steady_clock::now();
    struct Case {
        const char* file;
        NameSet expected;
    };
    vector<Case> cases = {
        {"three_cycle.tgf", {{}}},
        {"self_attack_pair.tgf", {{}, {"b"}}},
        {"floating_assignment.tgf", {{}, {"a"}, {"b"}, {"c"}}},
        {"pentagon_chord.tgf", {{}, {"d"}}},
        {"self_attack_chain.tgf", {{}, {"b"}, {"c"}}},
    };
    bool pass = true;
    string detail;
    for (const Case& c : cases) {
        Framework fw = fixture(c.file);
        NameSet got = in_set_family(fw, weakly_complete_labellings(fw).labellings);
        if (got != c.expected) {
            pass = false;
            detail += string(c.file) + " mismatch; ";
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        pass = false;
        detail += "runtime " + to_string(elapsed) + "s >= 1s";
    }
    report_line(1, "fixture labelling families", pass, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    auto start = chrono::steady_clock::now();
    Framework fw = fixture("mutual_pair_cycle.tgf");
    LabellingSet wc = weakly_complete_labellings(fw);

    bool pass = wc.discoveries == 5 && wc.size() == 4;
    set<vector<string>> sequences;
    for (int i = 0; i < wc.size(); i++)
        for (const vector<int>& seq : wc.ground_sequences[i]) {
            vector<string> names;
            for (int a : seq) names.push_back(fw.name(a));
            sort(names.begin(), names.end());
            sequences.insert(names);
        }
    set<vector<string>> expected = {{}, {"a"}, {"b"}, {"d"}, {"b", "d"}};
    if (sequences != expected) pass = false;

    double elapsed = seconds_since(start);
    if (elapsed >= 1.0) pass = false;
    report_line(2, "ground-based discovery sequences", pass,
                "discoveries=" + to_string(wc.discoveries) +
                    " distinct=" + to_string(wc.size()));
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    bool pass = true;
    string detail;
    int checked = 0;
    for (int i = 0; i < 210; i++) {
        Framework fw = sample_framework(i, 10, 40000);
        checked++;

        if (weakly_grounded_labelling(fw) != grounded_labelling(fw)) {
            pass = false;
            detail = "weakly grounded deviates at sample " + to_string(i);
            break;
        }

        NameSet wst = in_set_family(fw, weakly_stable_labellings(fw).labellings);
        NameSet stable_oracle;
        for (const Labelling& l : oracle::brute_force_complete(fw))
            if (undec_set(l).empty()) stable_oracle.insert(in_names(fw, l));
        if (wst != stable_oracle) {
            pass = false;
            detail = "weakly stable deviates at sample " + to_string(i);
            break;
        }
    }
    report_line(3, "identity checks over random frameworks", pass,
                detail.empty() ? to_string(checked) + " frameworks" : detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    bool pass = true;
    string detail;
    int checked = 0;
    for (int i = 0; i < 510; i++) {
        Framework fw = sample_framework(i, 8, 41000);
        checked++;
        if (in_set_family(fw, weakly_complete_labellings(fw).labellings) !=
            in_set_family(fw, oracle::brute_force_weakly_complete(fw))) {
            pass = false;
            detail = "weakly complete deviates at sample " + to_string(i);
            break;
        }
        if (in_set_family(fw, dung_complete_labellings(fw).labellings) !=
            in_set_family(fw, oracle::brute_force_complete(fw))) {
            pass = false;
            detail = "complete filter deviates at sample " + to_string(i);
            break;
        }
    }
    report_line(4, "oracle equivalence", pass,
                detail.empty() ? to_string(checked) + " frameworks" : detail);
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    bool pass = true;
    string detail;
    for (int i = 0; i < 510 && pass; i++) {
        Framework fw = sample_framework(i, 8, 41000);
        Labelling g = grounded_labelling(fw);
        vector<int> g_in = in_set(g);
        for (const Labelling& l : weakly_complete_labellings(fw).labellings) {
            vector<int> l_in = in_set(l);
            if (!includes(l_in.begin(), l_in.end(), g_in.begin(), g_in.end())) {
                pass = false;
                detail = "grounded containment fails at sample " + to_string(i);
                break;
            }
        }
        for (int a = 0; a < fw.size() && pass; a++) {
            if (credulous_wc(fw, a) != oracle::brute_force_credulous(fw, a)) {
                pass = false;
                detail = "credulous disagreement at sample " + to_string(i) + " argument " +
                         fw.name(a);
            }
        }
    }

    // polynomial-time witness on a long attack chain
    const int chain_len = 10000;
    vector<string> args;
    vector<pair<string, string>> attacks;
    args.reserve(chain_len);
    for (int i = 0; i < chain_len; i++) args.push_back("n" + to_string(i));
    for (int i = 0; i + 1 < chain_len; i++) attacks.emplace_back(args[i], args[i + 1]);
    Framework chain = Framework::build(args, attacks);
    auto start = chrono::steady_clock::now();
    bool head = credulous_wc(chain, 0);
    bool second = credulous_wc(chain, 1);
    bool even_tail = credulous_wc(chain, chain_len - 2);
    bool odd_tail = credulous_wc(chain, chain_len - 1);
    double elapsed = seconds_since(start);
    if (!(head && !second && even_tail && !odd_tail)) {
        pass = false;
        detail += " chain answers wrong;";
    }
    if (elapsed >= 2.0) {
        pass = false;
        detail += " chain took " + to_string(elapsed) + "s";
    }
    report_line(5, "grounded containment, credulous agreement, long chain", pass, detail);
}

// ---------------------------------------------------------------- criterion 6

bool same_shape(const Framework& a, const Framework& b) {
    set<pair<string, string>> pa, pb;
    for (const auto& p : a.attack_pairs()) pa.insert(p);
    for (const auto& p : b.attack_pairs()) pb.insert(p);
    set<string> na(a.names().begin(), a.names().end());
    set<string> nb(b.names().begin(), b.names().end());
    return pa == pb && na == nb;
}

void criterion_6() {
    SampleSpec spec;
    spec.max_arguments = 6;
    spec.samples = 300;
    spec.seed = 1;
    spec.max_cycle_length = 7;
    PrincipleReport report = principle_report(
        {SemanticsId::weakly_complete, SemanticsId::weakly_preferred, SemanticsId::ub_grounded,
         SemanticsId::grounded},
        spec);

    bool pass = true;
    string detail;
    auto expect = [&](const char* sem, const char* principle, Verdict want) {
        const PrincipleResult& r = report.rows.at({sem, principle});
        if (r.verdict != want) {
            pass = false;
            detail += string(sem) + "/" + principle + " unexpected; ";
        }
    };

    expect("WCO", "conflict-free", Verdict::holds_on_sample);
    expect("WCO", "admissible", Verdict::refuted);
    expect("WCO", "reinstatement", Verdict::holds_on_sample);
    expect("WCO", "rejection", Verdict::holds_on_sample);
    expect("WCO", "directionality", Verdict::holds_on_sample);
    expect("WCO", "abstention", Verdict::holds_on_sample);
    expect("WCO", "i-maximality", Verdict::refuted);

    expect("WPR", "directionality", Verdict::refuted);
    expect("WPR", "abstention", Verdict::refuted);
    expect("WPR", "i-maximality", Verdict::holds_on_sample);

    expect("UBGR", "cycle-homogeneity", Verdict::holds_on_sample);
    expect("UBGR", "acyclic-decided", Verdict::holds_on_sample);
    if (!report.cardinality.at("UBGR").always_exactly_one) {
        pass = false;
        detail += "UBGR cardinality; ";
    }

    // classical sanity column
    expect("GR", "conflict-free", Verdict::holds_on_sample);
    expect("GR", "admissible", Verdict::holds_on_sample);
    expect("GR", "reinstatement", Verdict::holds_on_sample);
    expect("GR", "rejection", Verdict::holds_on_sample);
    expect("GR", "directionality", Verdict::holds_on_sample);
    expect("GR", "abstention", Verdict::holds_on_sample);
    expect("GR", "i-maximality", Verdict::holds_on_sample);
    expect("GR", "cycle-homogeneity", Verdict::holds_on_sample);
    if (!report.cardinality.at("GR").always_exactly_one) {
        pass = false;
        detail += "GR cardinality; ";
    }

    // the named counterexamples back the refutations
    Framework g4 = fixture("self_attack_pair.tgf");
    Framework g5 = fixture("floating_assignment.tgf");
    Framework two_cycle = Framework::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    const PrincipleResult& adm = report.rows.at({"WCO", "admissible"});
    if (!adm.counterexample || !same_shape(*adm.counterexample, g4)) {
        pass = false;
        detail += "WCO admissible counterexample; ";
    }
    const PrincipleResult& dir = report.rows.at({"WPR", "directionality"});
    if (!dir.counterexample || !same_shape(*dir.counterexample, g5)) {
        pass = false;
        detail += "WPR directionality counterexample; ";
    }
    const PrincipleResult& abst = report.rows.at({"WPR", "abstention"});
    if (!abst.counterexample || !same_shape(*abst.counterexample, two_cycle)) {
        pass = false;
        detail += "WPR abstention counterexample; ";
    }

    if (report.frameworks_checked < 300) {
        pass = false;
        detail += "sample too small; ";
    }
    report_line(6, "principle matrix", pass, detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    bool pass = true;
    string detail;

    Framework fig6 = fixture("self_attack_chain.tgf");
    Labelling ubg = ub_grounded_labelling(fig6);
    if (in_names(fig6, ubg) != vector<string>{"b"} ||
        out_names(fig6, ubg) != vector<string>{"c"} ||
        undec_names(fig6, ubg) != vector<string>{"a"}) {
        pass = false;
        detail += "ub-grounded chain fixture; ";
    }

    Framework fig7 = fixture("blocking_order.tgf");
    vector<Labelling> ubp = ub_preferred_labellings(fig7);
    if (ubp.size() != 1 || in_names(fig7, ubp.front()) != vector<string>{"b", "d"} ||
        out_names(fig7, ubp.front()) != vector<string>{"c", "e"} ||
        undec_names(fig7, ubp.front()) != vector<string>{"a"}) {
        pass = false;
        detail += "ub-preferred blocking-order fixture; ";
    }
    PrecedenceRelation rel = semantic_precedence(fig7);
    set<pair<string, string>> strict;
    for (const auto& [a, b] : rel.strict) strict.insert({fig7.name(a), fig7.name(b)});
    for (const pair<string, string>& want :
         {pair<string, string>{"b", "c"}, {"c", "d"}, {"c", "e"}})
        if (!strict.count(want)) {
            pass = false;
            detail += "precedence " + want.first + ">" + want.second + " missing; ";
        }

    Framework g5 = fixture("floating_assignment.tgf");
    NameSet ub5 = in_set_family(g5, ub_preferred_labellings(g5));
    NameSet dung_pref = in_set_family(g5, dung_preferred_labellings(g5).labellings);
    if (ub5 != dung_pref || ub5 != NameSet{{"a"}, {"b"}}) {
        pass = false;
        detail += "ub-preferred floating fixture; ";
    }

    report_line(7, "undecidedness-blocking fixtures", pass, detail);
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    bool pass = true;
    string detail;

    auto timed = [&](const char* what, auto&& fn) {
        auto start = chrono::steady_clock::now();
        fn();
        double elapsed = seconds_since(start);
        if (elapsed >= 5.0) {
            pass = false;
            detail += string(what) + " took " + to_string(elapsed) + "s; ";
        }
    };

    timed("floating complete", [&] {
        Framework fl = fixture("floating_assignment.tgf");
        if (extension_name_family(fl, bbu_complete(fl)) != NameSet{{}, {"a"}, {"b"}}) {
            pass = false;
            detail += "floating complete family; ";
        }
    });
    timed("self-attack admissible", [&] {
        Framework self = fixture("self_attack_pair.tgf");
        if (extension_name_family(self, weakly_admissible_sets(self)) !=
            NameSet{{}, {"b"}}) {
            pass = false;
            detail += "self-attack admissible family; ";
        }
    });
    timed("dual grounded", [&] {
        Framework dual = fixture("dual_protection.tgf");
        ExtensionSet gr = bbu_grounded(dual);
        if (gr.size() != 2) {
            pass = false;
            detail += "dual grounded count; ";
        }
        for (const vector<int>& ext : gr.extensions)
            if (ext.empty()) {
                pass = false;
                detail += "dual grounded contains the empty set; ";
            }
    });

    report_line(8, "set-based fixtures", pass, detail);
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
    Framework fl = fixture("floating_assignment.tgf");
    NameSet wc = in_set_family(fl, weakly_complete_labellings(fl).labellings);
    NameSet complete = extension_name_family(fl, bbu_complete(fl));
    bool pass = wc.count({"c"}) == 1 && complete.count({"c"}) == 0;
    report_line(9, "divergence witness", pass);
}

// ---------------------------------------------------------------- criterion 10

string run_cli(const string& args, const string& out_path) {
    string cmd = string(AFSOLVE_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = system(cmd.c_str());
    ifstream in(out_path, ios::binary);
    ostringstream ss;
    ss << in.rdbuf();
    return to_string(rc) + "\n" + ss.str();
}

void criterion_10() {
    string fx = FIXTURE_DIR;
    vector<string> commands = {
        "solve EE-WCO -f " + fx + "/three_cycle.tgf",
        "solve EE-WCO -f " + fx + "/self_attack_pair.tgf",
        "solve EE-WCO -f " + fx + "/floating_assignment.tgf",
        "solve EE-WCO -f " + fx + "/pentagon_chord.tgf",
        "solve EE-WCO -f " + fx + "/self_attack_chain.tgf",
        "solve EE-WCO -f " + fx + "/mutual_pair_cycle.tgf",
        "solve SE-UBGR -f " + fx + "/self_attack_chain.tgf",
        "solve EE-UBPR -f " + fx + "/blocking_order.tgf",
        "solve EE-UBPR -f " + fx + "/floating_assignment.tgf",
        "solve EE-BBU-CO -f " + fx + "/floating_assignment.tgf",
        "solve EE-BBU-GR -f " + fx + "/dual_protection.tgf",
        "solve DC-WCO -a d -f " + fx + "/pentagon_chord.tgf",
        "solve DS-WCO -a a -f " + fx + "/chain3.tgf",
        "solve DC-WCO -a a -f " + fx + "/three_cycle.tgf",
        "solve SE-ST -f " + fx + "/three_cycle.tgf",
        "solve EE-WCO -f " + fx + "/floating_assignment.apx --format apx",
        "solve EE-WST -f " + fx + "/floating_assignment.tgf --text",
        "report --semantics WCO,WPR,UBGR,GR --n 6 --samples 300 --seed 1",
    };
    bool pass = true;
    string detail;
    for (size_t i = 0; i < commands.size(); i++) {
        string first = run_cli(commands[i], "acceptance_cli_a.tmp");
        string second = run_cli(commands[i], "acceptance_cli_b.tmp");
        if (first != second) {
            pass = false;
            detail += "command " + to_string(i) + " differs; ";
        }
        if (first.substr(0, 2) != "0\n") {
            pass = false;
            detail += "command " + to_string(i) + " exited nonzero; ";
        }
    }
    remove("acceptance_cli_a.tmp");
    remove("acceptance_cli_b.tmp");
    report_line(10, "byte-identical CLI reruns", pass, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        cout << "acceptance: all criteria passed\n";
        return 0;
    }
    cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}

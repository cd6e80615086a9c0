#include "afs/bbu.hpp"
#include "afs/enumeration.hpp"
#include "afs/errors.hpp"
#include "afs/io.hpp"
#include "afs/principles.hpp"
#include "afs/propagation.hpp"
#include "afs/ub_semantics.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace std;
using namespace afs;

namespace {

void usage(ostream& os) {
    os << "usage:\n"
       << "  afsolve solve <PROBLEM>-<SEMANTICS> -f <file> [--format tgf|apx] [-a <arg>]\n"
       << "                [--max-args N] [--timeout SECONDS] [--json|--text]\n"
       << "  afsolve report [--semantics <list>] [--n <max>] [--p <p1,p2,..>]\n"
       << "                 [--samples <k>] [--seed <s>] [--cycles <len>]\n"
       << "\n"
       << "problems:  SE EE DC DS (DC/DS take -a <argument>)\n"
       << "semantics: GR CO PR ST WCO WPR WGR WST UBGR UBPR BBU-CO BBU-PR BBU-GR\n";
}

string read_file(const string& path) {
    ifstream in(path, ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SolveOptions {
    string problem;
    SemanticsId semantics;
    string file;
    string format = "tgf";
    optional<string> query;
    optional<int> max_args;
    double timeout_seconds = 0.0;
    bool json = true;
};

Framework load(const SolveOptions& opt) {
    string text = read_file(opt.file);
    if (opt.format == "tgf") return parse_tgf(text);
    if (opt.format == "apx") return parse_apx(text);
    throw parse_error("unknown input format: " + opt.format);
}

bool is_extension_semantics(SemanticsId id) {
    return id == SemanticsId::bbu_complete || id == SemanticsId::bbu_preferred ||
           id == SemanticsId::bbu_grounded;
}

ExtensionSet extension_semantics(const Framework& fw, SemanticsId id, const BbuLimits& lim) {
    switch (id) {
        case SemanticsId::bbu_complete: return bbu_complete(fw, lim);
        case SemanticsId::bbu_preferred: return bbu_preferred(fw, lim);
        default: return bbu_grounded(fw, lim);
    }
}

int run_solve(const SolveOptions& opt) {
    Framework fw = load(opt);
    EnumerationLimits limits{opt.max_args.value_or(25), opt.timeout_seconds};
    BbuLimits bbu_limits{opt.max_args.value_or(20), opt.timeout_seconds};

    if (opt.problem == "DC" || opt.problem == "DS") {
        int arg = fw.index_of(*opt.query);
        bool yes;
        if (opt.problem == "DC" && opt.semantics == SemanticsId::weakly_complete) {
            yes = credulous_wc(fw, arg);
        } else if (opt.problem == "DS" && opt.semantics == SemanticsId::weakly_complete) {
            yes = skeptical_wc(fw, arg, limits);
        } else {
            vector<Labelling> ls = semantics_labellings(fw, opt.semantics, limits, bbu_limits);
            if (opt.problem == "DC") {
                yes = false;
                for (const Labelling& l : ls)
                    if (l.at(arg) == Label::in) { yes = true; break; }
            } else {
                yes = true;
                for (const Labelling& l : ls)
                    if (l.at(arg) != Label::in) { yes = false; break; }
            }
        }
        cout << (yes ? "YES" : "NO") << "\n";
        return 0;
    }

    if (opt.problem == "EE") {
        if (is_extension_semantics(opt.semantics)) {
            ExtensionSet es = extension_semantics(fw, opt.semantics, bbu_limits);
            cout << (opt.json ? emit_extensions_json(fw, es) + "\n"
                              : emit_extensions_text(fw, es));
        } else {
            vector<Labelling> ls = semantics_labellings(fw, opt.semantics, limits, bbu_limits);
            cout << (opt.json ? emit_labellings_json(fw, ls) + "\n"
                              : emit_labellings_text(fw, ls));
        }
        return 0;
    }

    // SE. Single-status semantics return their labelling; the weakly
    // complete family returns the grounded member, which is always
    // present; the remaining families return the first result in in-set
    // order. An empty family prints NONE.
    if (opt.semantics == SemanticsId::grounded || opt.semantics == SemanticsId::weakly_grounded ||
        opt.semantics == SemanticsId::weakly_complete || opt.semantics == SemanticsId::complete) {
        Labelling g = grounded_labelling(fw);
        cout << (opt.json ? emit_labelling_json(fw, g) + "\n" : emit_labelling_text(fw, g));
        return 0;
    }
    if (opt.semantics == SemanticsId::ub_grounded) {
        Labelling l = ub_grounded_labelling(fw);
        cout << (opt.json ? emit_labelling_json(fw, l) + "\n" : emit_labelling_text(fw, l));
        return 0;
    }
    if (is_extension_semantics(opt.semantics)) {
        ExtensionSet es = extension_semantics(fw, opt.semantics, bbu_limits);
        auto fam = extension_name_family(fw, es);
        if (fam.empty()) {
            cout << (opt.json ? "null\n" : "NONE\n");
        } else {
            const vector<string>& first = *fam.begin();
            string json, text;
            for (size_t i = 0; i < first.size(); i++) {
                json += string(i ? "," : "") + "\"" + first[i] + "\"";
                text += string(i ? "," : "") + first[i];
            }
            cout << (opt.json ? "[" + json + "]\n" : "{" + text + "}\n");
        }
        return 0;
    }
    vector<Labelling> ls = semantics_labellings(fw, opt.semantics, limits, bbu_limits);
    if (ls.empty()) {
        cout << (opt.json ? "null\n" : "NONE\n");
        return 0;
    }
    // deterministic witness: smallest sorted in-set
    const Labelling* best = &ls.front();
    vector<string> best_key = in_names(fw, *best);
    for (const Labelling& l : ls) {
        vector<string> key = in_names(fw, l);
        if (key < best_key) {
            best = &l;
            best_key = move(key);
        }
    }
    cout << (opt.json ? emit_labelling_json(fw, *best) + "\n" : emit_labelling_text(fw, *best));
    return 0;
}

int run_report(int argc, char** argv) {
    SampleSpec spec;
    vector<SemanticsId> ids = {SemanticsId::grounded,         SemanticsId::complete,
                               SemanticsId::preferred,        SemanticsId::stable,
                               SemanticsId::weakly_complete,  SemanticsId::weakly_preferred,
                               SemanticsId::ub_grounded,      SemanticsId::ub_preferred};
    for (int i = 0; i < argc; i++) {
        string a = argv[i];
        auto next = [&](const char* what) -> string {
            if (i + 1 >= argc) throw parse_error(string("missing value for ") + what);
            return argv[++i];
        };
        if (a == "--semantics") {
            ids.clear();
            string list = next("--semantics");
            istringstream ss(list);
            string tok;
            while (getline(ss, tok, ',')) {
                auto id = semantics_from_token(tok);
                if (!id) throw parse_error("unknown semantics: " + tok);
                ids.push_back(*id);
            }
        } else if (a == "--n") {
            spec.max_arguments = stoi(next("--n"));
        } else if (a == "--p") {
            spec.edge_probabilities.clear();
            string list = next("--p");
            istringstream ss(list);
            string tok;
            while (getline(ss, tok, ',')) spec.edge_probabilities.push_back(stod(tok));
        } else if (a == "--samples") {
            spec.samples = stoi(next("--samples"));
        } else if (a == "--seed") {
            spec.seed = static_cast<uint32_t>(stoul(next("--seed")));
        } else if (a == "--cycles") {
            spec.max_cycle_length = stoi(next("--cycles"));
        } else {
            throw parse_error("unknown report option: " + a);
        }
    }
    cout << render_report(principle_report(ids, spec));
    return 0;
}

int run(int argc, char** argv) {
    if (argc < 2) {
        usage(cerr);
        return 1;
    }
    string cmd = argv[1];
    if (cmd == "help" || cmd == "-h" || cmd == "--help") {
        usage(cout);
        return 0;
    }
    if (cmd == "report") return run_report(argc - 2, argv + 2);
    if (cmd != "solve") {
        usage(cerr);
        return 1;
    }
    if (argc < 3) {
        usage(cerr);
        return 1;
    }

    SolveOptions opt;
    string task = argv[2];
    size_t dash = task.find('-');
    if (dash == string::npos) throw parse_error("task must look like EE-WCO: " + task);
    opt.problem = task.substr(0, dash);
    string sem = task.substr(dash + 1);
    if (opt.problem != "SE" && opt.problem != "EE" && opt.problem != "DC" && opt.problem != "DS")
        throw parse_error("unknown problem: " + opt.problem);
    auto id = semantics_from_token(sem);
    if (!id) throw parse_error("unknown semantics: " + sem);
    opt.semantics = *id;

    for (int i = 3; i < argc; i++) {
        string a = argv[i];
        auto next = [&](const char* what) -> string {
            if (i + 1 >= argc) throw parse_error(string("missing value for ") + what);
            return argv[++i];
        };
        if (a == "-f") opt.file = next("-f");
        else if (a == "--format") opt.format = next("--format");
        else if (a == "-a") opt.query = next("-a");
        else if (a == "--max-args") opt.max_args = stoi(next("--max-args"));
        else if (a == "--timeout") opt.timeout_seconds = stod(next("--timeout"));
        else if (a == "--json") opt.json = true;
        else if (a == "--text") opt.json = false;
        else throw parse_error("unknown option: " + a);
    }
    if (opt.file.empty()) throw parse_error("missing -f <file>");
    if ((opt.problem == "DC" || opt.problem == "DS") && !opt.query)
        throw parse_error(opt.problem + " requires -a <argument>");
    if ((opt.problem == "SE" || opt.problem == "EE") && opt.query)
        throw parse_error(opt.problem + " does not take -a");
    return run_solve(opt);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const resource_limit_error& e) {
        cerr << "LIMIT " << e.what() << "\n";
        return 2;
    } catch (const exception& e) {
        cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

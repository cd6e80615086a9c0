#include "afs/io.hpp"

#include "afs/errors.hpp"

#include <algorithm>
#include <sstream>

using namespace std;

namespace afs {

namespace {

string trim(const string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

string json_escape(const string& s) {
    string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

string json_list(const vector<string>& names) {
    string out = "[";
    for (size_t i = 0; i < names.size(); i++) {
        out += (i ? "," : "");
        out += '"' + json_escape(names[i]) + '"';
    }
    return out + "]";
}

string joined(const vector<string>& names) {
    string out;
    for (size_t i = 0; i < names.size(); i++) out += (i ? "," : "") + names[i];
    return out;
}

}  // namespace

Framework parse_tgf(const string& text) {
    istringstream is(text);
    string line;
    vector<string> args;
    vector<pair<string, string>> attacks;
    bool seen_separator = false;
    int line_no = 0;
    while (getline(is, line)) {
        line_no++;
        string t = trim(line);
        if (t.empty()) continue;
        if (t == "#") {
            if (seen_separator) throw parse_error("tgf: duplicate '#' separator");
            seen_separator = true;
            continue;
        }
        if (!seen_separator) {
            if (t.find_first_of(" \t") != string::npos)
                throw parse_error("tgf line " + to_string(line_no) +
                                  ": argument id contains whitespace: " + t);
            args.push_back(t);
        } else {
            istringstream ls(t);
            string from, to, extra;
            if (!(ls >> from >> to) || (ls >> extra))
                throw parse_error("tgf line " + to_string(line_no) +
                                  ": expected attack 'x y': " + t);
            attacks.emplace_back(from, to);
        }
    }
    if (!seen_separator) throw parse_error("tgf: missing '#' separator");
    try {
        return Framework::build(args, attacks);
    } catch (const invalid_argument& e) {
        throw parse_error(string("tgf: ") + e.what());
    }
}

Framework parse_apx(const string& text) {
    vector<string> args;
    vector<pair<string, string>> attacks;

    // Strip % comments, then scan "name(args)." facts.
    string clean;
    istringstream is(text);
    string line;
    while (getline(is, line)) {
        size_t pct = line.find('%');
        clean += (pct == string::npos ? line : line.substr(0, pct));
        clean += '\n';
    }

    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < clean.size() && isspace(static_cast<unsigned char>(clean[pos]))) pos++;
    };
    skip_ws();
    while (pos < clean.size()) {
        size_t open = clean.find('(', pos);
        if (open == string::npos)
            throw parse_error("apx: malformed fact near: " + trim(clean.substr(pos)));
        string head = trim(clean.substr(pos, open - pos));
        size_t close = clean.find(')', open);
        if (close == string::npos) throw parse_error("apx: missing ')' in fact " + head);
        string body = clean.substr(open + 1, close - open - 1);
        size_t dot = clean.find('.', close);
        if (dot == string::npos || !trim(clean.substr(close + 1, dot - close - 1)).empty())
            throw parse_error("apx: missing '.' after fact " + head);
        pos = dot + 1;
        skip_ws();

        if (head == "arg") {
            string id = trim(body);
            if (id.empty() || id.find(',') != string::npos)
                throw parse_error("apx: malformed arg fact: arg(" + body + ")");
            args.push_back(id);
        } else if (head == "att") {
            size_t comma = body.find(',');
            if (comma == string::npos)
                throw parse_error("apx: malformed att fact: att(" + body + ")");
            string from = trim(body.substr(0, comma));
            string to = trim(body.substr(comma + 1));
            if (from.empty() || to.empty())
                throw parse_error("apx: malformed att fact: att(" + body + ")");
            attacks.emplace_back(from, to);
        } else {
            throw parse_error("apx: unknown fact: " + head);
        }
    }
    try {
        return Framework::build(args, attacks);
    } catch (const invalid_argument& e) {
        throw parse_error(string("apx: ") + e.what());
    }
}

string emit_tgf(const Framework& fw) {
    string out;
    for (const string& n : fw.names()) out += n + "\n";
    out += "#\n";
    for (const auto& [from, to] : fw.attack_pairs()) out += from + " " + to + "\n";
    return out;
}

string emit_apx(const Framework& fw) {
    string out;
    for (const string& n : fw.names()) out += "arg(" + n + ").\n";
    for (const auto& [from, to] : fw.attack_pairs()) out += "att(" + from + "," + to + ").\n";
    return out;
}

string emit_labelling_json(const Framework& fw, const Labelling& l) {
    return "{\"in\":" + json_list(in_names(fw, l)) + ",\"out\":" + json_list(out_names(fw, l)) +
           ",\"undec\":" + json_list(undec_names(fw, l)) + "}";
}

string emit_labelling_text(const Framework& fw, const Labelling& l) {
    return "in: " + joined(in_names(fw, l)) + "\nout: " + joined(out_names(fw, l)) +
           "\nundec: " + joined(undec_names(fw, l)) + "\n";
}

namespace {

vector<const Labelling*> sorted_by_in_set(const Framework& fw, const vector<Labelling>& ls) {
    vector<pair<vector<string>, const Labelling*>> keyed;
    keyed.reserve(ls.size());
    for (const Labelling& l : ls) keyed.emplace_back(in_names(fw, l), &l);
    sort(keyed.begin(), keyed.end(),
         [](const auto& a, const auto& b) { return a.first < b.first; });
    vector<const Labelling*> out;
    out.reserve(keyed.size());
    for (const auto& [_, l] : keyed) out.push_back(l);
    return out;
}

}  // namespace

string emit_labellings_json(const Framework& fw, const vector<Labelling>& ls) {
    string out = "[";
    bool first = true;
    for (const Labelling* l : sorted_by_in_set(fw, ls)) {
        out += (first ? "" : ",");
        out += emit_labelling_json(fw, *l);
        first = false;
    }
    return out + "]";
}

string emit_labellings_text(const Framework& fw, const vector<Labelling>& ls) {
    string out;
    int i = 0;
    for (const Labelling* l : sorted_by_in_set(fw, ls)) {
        out += "labelling " + to_string(++i) + ":\n" + emit_labelling_text(fw, *l);
    }
    if (ls.empty()) out = "no labellings\n";
    return out;
}

string emit_extensions_json(const Framework& fw, const ExtensionSet& es) {
    set<vector<string>> fam = extension_name_family(fw, es);
    string out = "[";
    bool first = true;
    for (const vector<string>& ext : fam) {
        out += (first ? "" : ",");
        out += json_list(ext);
        first = false;
    }
    return out + "]";
}

string emit_extensions_text(const Framework& fw, const ExtensionSet& es) {
    set<vector<string>> fam = extension_name_family(fw, es);
    string out;
    for (const vector<string>& ext : fam) out += "{" + joined(ext) + "}\n";
    if (fam.empty()) out = "no extensions\n";
    return out;
}

}

#include "tlinks/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tlinks {

namespace {

// minimal cursor over notation strings
struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw std::invalid_argument("expected '" + std::string(1, c) + "' at position " +
                                        std::to_string(i) + " in \"" + s + "\"");
        ++i;
    }
    long long integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("expected an integer at position " +
                                        std::to_string(start) + " in \"" + s + "\"");
        return std::stoll(s.substr(start, i - start));
    }
    void done() {
        skip_ws();
        if (i != s.size())
            throw std::invalid_argument("trailing characters in \"" + s + "\"");
    }
};

struct NotationBody {
    std::vector<TorusPair> pairs;       // every (r,s) element in order
    bool has_semicolon_elem = false;    // final element was (r; d)
    int semi_r = 0;
    long long semi_d = 0;
    bool has_d_suffix = false;          // trailing ";d=K"
    long long d_suffix = 0;
};

// parses the parenthesized body shared by all three notations
NotationBody parse_body(Cursor& cur) {
    NotationBody body;
    cur.expect('(');
    while (true) {
        cur.expect('(');
        const long long r = cur.integer();
        if (cur.peek(';')) {
            cur.expect(';');
            const long long d = cur.integer();
            cur.expect(')');
            body.has_semicolon_elem = true;
            body.semi_r = static_cast<int>(r);
            body.semi_d = d;
            break;  // (r; d) closes the list
        }
        cur.expect(',');
        const long long s = cur.integer();
        cur.expect(')');
        body.pairs.push_back({static_cast<int>(r), s});
        if (cur.peek(',')) {
            cur.expect(',');
            continue;
        }
        break;
    }
    if (cur.peek(';')) {
        cur.expect(';');
        cur.expect('d');
        cur.expect('=');
        body.has_d_suffix = true;
        body.d_suffix = cur.integer();
    }
    cur.expect(')');
    cur.done();
    return body;
}

}  // namespace

BraidWord parse_braid_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty braid file");
    std::istringstream first(line);
    std::string tag;
    int strands = 0;
    first >> tag >> strands;
    if (tag != "strands:" || strands < 1)
        throw std::invalid_argument("braid file must start with 'strands: N'");
    std::vector<int> letters;
    int e;
    while (in >> e) letters.push_back(e);
    if (!in.eof() && in.fail()) throw std::invalid_argument("malformed braid letters");
    return BraidWord::make(strands, std::move(letters));
}

std::string braid_to_text(const BraidWord& b) {
    std::ostringstream out;
    out << "strands: " << b.strands() << "\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out << ' ';
        out << b.letters()[i];
    }
    out << "\n";
    return out.str();
}

BraidWord read_braid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open braid file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_braid_text(buf.str());
}

void write_braid_file(const std::string& path, const BraidWord& b) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write braid file: " + path);
    out << braid_to_text(b);
}

CodeWordSet parse_code_words(const std::string& text) {
    std::vector<std::vector<Syllable>> words;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        // commas also separate components so inline flags can hold several
        for (char& ch : line)
            if (ch == ',') ch = '\n';
        std::istringstream sub(line);
        std::string part;
        while (std::getline(sub, part)) {
            std::istringstream in(part);
            std::string tok;
            std::vector<Syllable> word;
            long long pending_x = -1;
            while (in >> tok) {
                char base = tok[0];
                long long exp = 1;
                if (tok.size() > 1) {
                    if (tok[1] != '^') throw std::invalid_argument("bad syllable: " + tok);
                    exp = std::stoll(tok.substr(2));
                }
                if (exp < 1) throw std::invalid_argument("syllable exponent must be >= 1");
                if (base == 'x') {
                    if (pending_x >= 0)
                        throw std::invalid_argument("code word must alternate x and y blocks");
                    pending_x = exp;
                } else if (base == 'y') {
                    if (pending_x < 0)
                        throw std::invalid_argument("code word must start with an x block");
                    word.push_back({pending_x, exp});
                    pending_x = -1;
                } else {
                    throw std::invalid_argument("bad syllable: " + tok);
                }
            }
            if (pending_x >= 0) throw std::invalid_argument("code word must end with a y block");
            if (!word.empty()) words.push_back(std::move(word));
        }
    }
    return CodeWordSet::make(std::move(words));
}

std::string code_words_to_text(const CodeWordSet& cw) {
    std::ostringstream out;
    for (const auto& word : cw.words()) {
        bool first = true;
        for (const Syllable& s : word) {
            if (!first) out << ' ';
            out << 'x';
            if (s.xs != 1) out << '^' << s.xs;
            out << " y";
            if (s.ys != 1) out << '^' << s.ys;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

LorenzVector parse_vector(const std::string& text) {
    std::string body = text;
    for (char& c : body)
        if (c == '<' || c == '>' || c == ',') c = ' ';
    std::istringstream in(body);
    std::string tok;
    std::vector<std::pair<int, long long>> pairs;
    while (in >> tok) {
        const auto caret = tok.find('^');
        int d;
        long long s = 1;
        if (caret == std::string::npos) {
            d = std::stoi(tok);
        } else {
            d = std::stoi(tok.substr(0, caret));
            s = std::stoll(tok.substr(caret + 1));
        }
        pairs.push_back({d, s});
    }
    return LorenzVector::make(std::move(pairs));
}

std::string vector_to_text(const LorenzVector& v) {
    std::ostringstream out;
    out << '<';
    bool first = true;
    for (auto [d, s] : v.pairs()) {
        if (!first) out << ',';
        out << d;
        if (s != 1) out << '^' << s;
        first = false;
    }
    out << '>';
    return out.str();
}

TLinkParams parse_tlink(const std::string& text) {
    Cursor cur{text};
    cur.expect('T');
    NotationBody body = parse_body(cur);
    if (body.has_semicolon_elem || body.has_d_suffix)
        throw std::invalid_argument("a plain T-link takes no d parameter: " + text);
    return TLinkParams::make(std::move(body.pairs));
}

GenTLinkParams parse_gen_tlink(const std::string& text) {
    Cursor cur{text};
    cur.expect('T');
    NotationBody body = parse_body(cur);
    if (body.has_semicolon_elem)
        throw std::invalid_argument("generalised T-link notation ends with (r,s), not (r;d)");
    if (body.pairs.empty()) throw std::invalid_argument("generalised T-link needs a final pair");
    const TorusPair last = body.pairs.back();
    body.pairs.pop_back();
    return GenTLinkParams::make(std::move(body.pairs), last,
                                body.has_d_suffix ? body.d_suffix : 0);
}

TnLinkParams parse_tn_link(const std::string& text) {
    Cursor cur{text};
    cur.expect('T');
    cur.expect('^');
    const long long n = cur.integer();
    NotationBody body = parse_body(cur);
    if (!body.has_semicolon_elem)
        throw std::invalid_argument("twisted notation ends with (r_last; d): " + text);
    if (body.has_d_suffix) throw std::invalid_argument("twisted notation carries d inside (r; d)");
    return TnLinkParams::make(n, std::move(body.pairs), body.semi_r, body.semi_d);
}

std::string tlink_to_text(const TLinkParams& t) {
    std::ostringstream out;
    out << "T(";
    bool first = true;
    for (const TorusPair& p : t.pairs()) {
        if (!first) out << ',';
        out << '(' << p.r << ',' << p.s << ')';
        first = false;
    }
    out << ')';
    return out.str();
}

std::string gen_tlink_to_text(const GenTLinkParams& g) {
    std::ostringstream out;
    out << "T(";
    for (const TorusPair& p : g.pairs()) out << '(' << p.r << ',' << p.s << "),";
    out << '(' << g.last().r << ',' << g.last().s << ");d=" << g.d() << ')';
    return out.str();
}

std::string tn_link_to_text(const TnLinkParams& t) {
    std::ostringstream out;
    out << "T^" << t.n() << '(';
    for (const TorusPair& p : t.pairs()) out << '(' << p.r << ',' << p.s << "),";
    out << '(' << t.r_last() << ';' << t.d() << "))";
    return out.str();
}

nlohmann::json braid_to_json(const BraidWord& b) {
    return {{"strands", b.strands()}, {"letters", b.letters()}};
}

BraidWord braid_from_json(const nlohmann::json& j) {
    return BraidWord::make(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

nlohmann::json pd_to_json(const PDCode& pd) {
    nlohmann::json crossings = nlohmann::json::array();
    for (const PDCrossing& c : pd.crossings)
        crossings.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.sign});
    return {{"crossings", crossings}, {"free_loops", pd.free_loops}};
}

nlohmann::json code_words_to_json(const CodeWordSet& cw) {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& w : cw.words()) {
        nlohmann::json word = nlohmann::json::array();
        for (const Syllable& s : w) word.push_back({s.xs, s.ys});
        words.push_back(word);
    }
    return {{"words", words}};
}

CodeWordSet code_words_from_json(const nlohmann::json& j) {
    std::vector<std::vector<Syllable>> words;
    for (const auto& w : j.at("words")) {
        std::vector<Syllable> word;
        for (const auto& s : w) word.push_back({s.at(0).get<long long>(), s.at(1).get<long long>()});
        words.push_back(std::move(word));
    }
    return CodeWordSet::make(std::move(words));
}

nlohmann::json vector_to_json(const LorenzVector& v) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [d, s] : v.pairs()) pairs.push_back({d, s});
    return pairs;
}

nlohmann::json gen_tlink_to_json(const GenTLinkParams& g) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const TorusPair& p : g.pairs()) pairs.push_back({p.r, p.s});
    return {{"pairs", pairs}, {"last", {g.last().r, g.last().s}}, {"d", g.d()}};
}

GenTLinkParams gen_tlink_from_json(const nlohmann::json& j) {
    std::vector<TorusPair> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<int>(), p.at(1).get<long long>()});
    TorusPair last{j.at("last").at(0).get<int>(), j.at("last").at(1).get<long long>()};
    return GenTLinkParams::make(std::move(pairs), last, j.value("d", 0LL));
}

nlohmann::json tn_link_to_json(const TnLinkParams& t) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const TorusPair& p : t.pairs()) pairs.push_back({p.r, p.s});
    return {{"n", t.n()}, {"pairs", pairs}, {"r_last", t.r_last()}, {"d", t.d()}};
}

TnLinkParams tn_link_from_json(const nlohmann::json& j) {
    std::vector<TorusPair> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<int>(), p.at(1).get<long long>()});
    return TnLinkParams::make(j.at("n").get<long long>(), std::move(pairs),
                              j.at("r_last").get<int>(), j.value("d", 0LL));
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto [e, c] : p.terms()) terms.push_back({e, c});
    return terms;
}

}  // namespace tlinks

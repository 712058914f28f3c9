#include "hn/scene.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hn {

namespace {

using nlohmann::json;

struct ErrorList {
    std::vector<std::string> items;

    void add(const std::string& where, const std::string& what) {
        items.push_back(where + ": " + what);
    }
    void raise_if_any(const std::string& header) const {
        if (items.empty()) return;
        std::string msg = header;
        for (const std::string& s : items) msg += "\n  " + s;
        throw std::runtime_error(msg);
    }
};

void check_keys(const json& obj, const std::string& where,
                const std::vector<std::string>& allowed, ErrorList& errs) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const std::string& k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) errs.add(where, "unknown field \"" + it.key() + "\"");
    }
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scene: ") + e.what());
    }

    ErrorList errs;
    Scene scene;
    if (!doc.is_object()) {
        errs.add("$", "scene must be a JSON object");
        errs.raise_if_any("scene: invalid");
    }
    check_keys(doc, "$", {"genus", "horseshoes", "edges", "orbits", "options"}, errs);

    if (!doc.contains("genus") || !doc["genus"].is_number_integer())
        errs.add("$.genus", "required integer");
    else {
        scene.graph.genus = doc["genus"].get<int>();
        if (scene.graph.genus < 2) errs.add("$.genus", "genus must be >= 2");
    }
    int genus = scene.graph.genus < 2 ? 2 : scene.graph.genus;

    auto parse_word_at = [&](const json& j, const std::string& where) -> GroupWord {
        if (!j.is_string()) {
            errs.add(where, "expected a word string");
            return GroupWord{genus, {}};
        }
        try {
            return parse_word(genus, j.get<std::string>());
        } catch (const std::exception& e) {
            errs.add(where, e.what());
            return GroupWord{genus, {}};
        }
    };

    if (doc.contains("horseshoes")) {
        if (!doc["horseshoes"].is_array())
            errs.add("$.horseshoes", "expected an array");
        else {
            int hi = 0;
            for (const json& h : doc["horseshoes"]) {
                std::string where = "$.horseshoes[" + std::to_string(hi++) + "]";
                if (!h.is_object()) {
                    errs.add(where, "expected an object");
                    continue;
                }
                check_keys(h, where, {"id", "period", "decks"}, errs);
                Horseshoe hs;
                if (!h.contains("id") || !h["id"].is_string() || h["id"].get<std::string>().empty())
                    errs.add(where + ".id", "required nonempty string");
                else
                    hs.id = h["id"].get<std::string>();
                if (!h.contains("period") || !h["period"].is_number_integer() ||
                    h["period"].get<int>() < 1)
                    errs.add(where + ".period", "required integer >= 1");
                else
                    hs.period = h["period"].get<int>();
                if (!h.contains("decks") || !h["decks"].is_array() || h["decks"].empty())
                    errs.add(where + ".decks", "required nonempty array of words");
                else {
                    int di = 0;
                    for (const json& d : h["decks"])
                        hs.decks.push_back(
                            parse_word_at(d, where + ".decks[" + std::to_string(di++) + "]"));
                }
                scene.graph.horseshoes.push_back(std::move(hs));
            }
        }
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            errs.add("$.edges", "expected an array");
        else {
            int ei = 0;
            for (const json& e : doc["edges"]) {
                std::string where = "$.edges[" + std::to_string(ei++) + "]";
                if (!e.is_object()) {
                    errs.add(where, "expected an object");
                    continue;
                }
                check_keys(e, where, {"from", "to", "n", "word"}, errs);
                Edge ed;
                for (const char* key : {"from", "to"}) {
                    if (!e.contains(key) || !e[key].is_string())
                        errs.add(where + "." + key, "required string");
                }
                if (e.contains("from") && e["from"].is_string()) ed.from = e["from"];
                if (e.contains("to") && e["to"].is_string()) ed.to = e["to"];
                if (!e.contains("n") || !e["n"].is_number_integer() || e["n"].get<int>() < 1)
                    errs.add(where + ".n", "required integer >= 1");
                else
                    ed.n = e["n"].get<int>();
                if (!e.contains("word"))
                    errs.add(where + ".word", "required word string");
                else
                    ed.word = parse_word_at(e["word"], where + ".word");
                // Dangling endpoints are reported here with their location;
                // validate_graph would only see the first one.
                for (const std::string& id : {ed.from, ed.to}) {
                    if (id.empty()) continue;
                    if (vertex_index(scene.graph, id) < 0)
                        errs.add(where, "unknown horseshoe id \"" + id + "\"");
                }
                scene.graph.edges.push_back(std::move(ed));
            }
        }
    }

    if (doc.contains("orbits")) {
        if (!doc["orbits"].is_array())
            errs.add("$.orbits", "expected an array");
        else {
            int oi = 0;
            for (const json& o : doc["orbits"]) {
                std::string where = "$.orbits[" + std::to_string(oi) + "]";
                if (!o.is_object()) {
                    errs.add(where, "expected an object");
                    ++oi;
                    continue;
                }
                check_keys(o, where, {"id", "word", "period"}, errs);
                OrbitProxy op;
                op.id = o.contains("id") && o["id"].is_string() ? o["id"].get<std::string>()
                                                                : "o" + std::to_string(oi);
                if (!o.contains("word"))
                    errs.add(where + ".word", "required word string");
                else
                    op.word = parse_word_at(o["word"], where + ".word");
                if (op.word.empty()) errs.add(where + ".word", "orbit word must be nonempty");
                if (!o.contains("period") || !o["period"].is_number_integer() ||
                    o["period"].get<int>() < 1)
                    errs.add(where + ".period", "required integer >= 1");
                else
                    op.period = o["period"].get<int>();
                scene.orbits.push_back(std::move(op));
                ++oi;
            }
        }
    }

    if (doc.contains("options")) {
        const json& opt = doc["options"];
        if (!opt.is_object())
            errs.add("$.options", "expected an object");
        else {
            check_keys(opt, "$.options", {"depth", "geom_tol", "seed"}, errs);
            if (opt.contains("depth")) {
                if (!opt["depth"].is_number_integer() || opt["depth"].get<int>() < 0)
                    errs.add("$.options.depth", "expected integer >= 0");
                else
                    scene.options.depth = opt["depth"].get<int>();
            }
            if (opt.contains("geom_tol")) {
                if (!opt["geom_tol"].is_number() || opt["geom_tol"].get<double>() <= 0)
                    errs.add("$.options.geom_tol", "expected positive number");
                else
                    scene.options.geom_tol = opt["geom_tol"].get<double>();
            }
            if (opt.contains("seed")) {
                if (!opt["seed"].is_number_unsigned())
                    errs.add("$.options.seed", "expected unsigned integer");
                else
                    scene.options.seed = opt["seed"].get<unsigned long long>();
            }
        }
    }

    errs.raise_if_any("scene: validation failed");
    validate_graph(scene.graph);
    materialize_self_loops(scene.graph);
    return scene;
}

Scene load_scene(const std::string& path) {
    return parse_scene(read_text_file(path));
}

PLRectangle parse_rectangle(const std::string& text) {
    PLRectangle r{};
    std::istringstream in(text);
    std::string line;
    bool have_sides = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "sides") {
            if (toks.size() != 5)
                throw std::runtime_error("rectangle line " + std::to_string(lineno) +
                                         ": sides needs four indices");
            for (int i = 0; i < 4; ++i) r.corner[static_cast<std::size_t>(i)] = std::stoi(toks[static_cast<std::size_t>(i + 1)]);
            have_sides = true;
            continue;
        }
        if (toks.size() != 2)
            throw std::runtime_error("rectangle line " + std::to_string(lineno) +
                                     ": expected \"x y\"");
        r.poly.push_back(P2{parse_rat(toks[0]), parse_rat(toks[1])});
    }
    if (!have_sides) throw std::runtime_error("rectangle: missing \"sides\" line");
    validate_rectangle(r);
    return r;
}

PLRectangle load_rectangle(const std::string& path) {
    return parse_rectangle(read_text_file(path));
}

PLMap parse_map(const std::string& text) {
    PLMap m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 12)
            throw std::runtime_error("map line " + std::to_string(lineno) +
                                     ": expected 12 rationals");
        std::vector<Rat> v(12);
        for (std::size_t i = 0; i < 12; ++i) v[i] = parse_rat(toks[i]);
        PLTriangle t;
        t.dom = {P2{v[0], v[1]}, P2{v[2], v[3]}, P2{v[4], v[5]}};
        t.map = AffineMap{v[6], v[7], v[8], v[9], v[10], v[11]};
        m.pieces.push_back(std::move(t));
    }
    validate_map(m);
    return m;
}

PLMap load_map(const std::string& path) {
    return parse_map(read_text_file(path));
}

std::vector<RatVec> parse_net(const std::string& text, int dim) {
    std::vector<RatVec> net;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        try {
            net.push_back(parse_vec(trimmed, dim));
        } catch (const std::exception& e) {
            throw std::runtime_error("net line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (net.empty()) throw std::runtime_error("net: no vectors");
    return net;
}

std::vector<RatVec> load_net(const std::string& path, int dim) {
    return parse_net(read_text_file(path), dim);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace hn

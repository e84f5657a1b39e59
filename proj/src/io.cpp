#include "ordo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ordo {

namespace {

using nlohmann::json;

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

double parse_weight_token(const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return pos_inf;
    if (tok == "-inf") throw SpecError("-inf is not a valid arc weight");
    size_t used = 0;
    double w;
    try {
        w = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw SpecError("bad weight token: " + tok);
    }
    if (used != tok.size()) throw SpecError("bad weight token: " + tok);
    return w;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) throw SpecError("bad header line: " + line);
            std::string rest;
            if (ls >> rest) throw SpecError("trailing tokens on header line");
            continue;
        }
        long long t, h;
        if (!(ls >> t >> h)) throw SpecError("bad arc line: " + line);
        std::string wtok, rest;
        double w = 1.0;
        if (ls >> wtok) {
            w = parse_weight_token(wtok);
            if (ls >> rest) throw SpecError("trailing tokens on arc line: " + line);
        }
        if (t < 0 || t >= n || h < 0 || h >= n) throw SpecError("arc endpoint out of range: " + line);
        arcs.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h), w});
    }
    if (n < 0) throw SpecError("empty digraph file");
    if (static_cast<long long>(arcs.size()) != m)
        throw SpecError("arc count mismatch: header says " + std::to_string(m) + ", found " +
                        std::to_string(arcs.size()));
    return Digraph(static_cast<int>(n), std::move(arcs));
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    return parse_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d, bool with_weights) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) {
        out << a.tail << ' ' << a.head;
        if (with_weights) {
            if (a.weight == pos_inf)
                out << " inf";
            else
                out << ' ' << a.weight;
        }
        out << '\n';
    }
}

std::string format_digraph(const Digraph& d) {
    bool weighted = false;
    for (const Arc& a : d.arcs())
        if (a.weight != 1.0) weighted = true;
    std::ostringstream os;
    write_digraph(os, d, weighted);
    return os.str();
}

namespace {

double bound_from_json(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return pos_inf;
        if (s == "-inf") return neg_inf;
    }
    throw SpecError("bad bound value in " + where);
}

void fill_per_vertex(const json& obj, const std::string& key, int n, std::vector<double>& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        int v;
        try {
            v = std::stoi(it.key());
        } catch (const std::exception&) {
            throw SpecError("bad vertex id in bounds key \"" + key + "\": " + it.key());
        }
        if (v < 0 || v >= n) throw SpecError("bounds vertex id out of range: " + it.key());
        out[static_cast<size_t>(v)] = bound_from_json(it.value(), key);
    }
}

}  // namespace

BoundsFile parse_bounds(const std::string& json_text, int n) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("bounds JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw SpecError("bounds file must hold a JSON object");
    BoundsFile bf;
    bf.fg = BoundSpec::none(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "f") {
            bf.has_f = true;
            fill_per_vertex(it.value(), key, n, bf.fg.f);
        } else if (key == "g") {
            bf.has_g = true;
            fill_per_vertex(it.value(), key, n, bf.fg.g);
        } else if (key == "m_delta" || key == "m_rho") {
            std::vector<double> vals(static_cast<size_t>(n), 0.0);
            fill_per_vertex(it.value(), key, n, vals);
            std::vector<int> ints(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                double x = vals[static_cast<size_t>(v)];
                if (!(x >= 0) || x != std::floor(x) || x == pos_inf)
                    throw SpecError(key + " entries must be non-negative integers");
                ints[static_cast<size_t>(v)] = static_cast<int>(x);
            }
            (key == "m_delta" ? bf.m_delta : bf.m_rho) = std::move(ints);
        } else if (key == "w_default") {
            if (!it.value().is_number()) throw SpecError("w_default must be a number");
            bf.w_default = it.value().get<double>();
        } else {
            throw SpecError("unknown bounds key: " + key);
        }
    }
    return bf;
}

BoundsFile read_bounds_file(const std::string& path, int n) {
    return parse_bounds(read_text_file(path), n);
}

std::string format_bounds(const BoundSpec& spec) {
    json jf = json::object(), jg = json::object();
    for (size_t v = 0; v < spec.f.size(); ++v) {
        if (spec.f[v] != neg_inf) jf[std::to_string(v)] = spec.f[v];
        if (spec.g[v] != pos_inf) jg[std::to_string(v)] = spec.g[v];
    }
    json j = json::object();
    if (!jf.empty()) j["f"] = jf;
    if (!jg.empty()) j["g"] = jg;
    return j.dump(2) + "\n";
}

RankingProfile parse_rankings_csv(std::istream& in) {
    RankingProfile profile;
    std::map<std::string, int> index;
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        std::vector<std::string> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            size_t b = cell.find_first_not_of(" \t\r");
            size_t e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw SpecError("empty candidate name in: " + line);
            row.push_back(cell.substr(b, e - b + 1));
        }
        if (row.empty()) throw SpecError("empty ranking line");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw SpecError("no rankings found");
    for (const std::string& name : rows[0])
        if (index.emplace(name, static_cast<int>(index.size())).second)
            profile.candidate_names.push_back(name);
    profile.num_candidates = static_cast<int>(index.size());
    for (const auto& row : rows) {
        std::vector<int> ranking;
        for (const std::string& name : row) {
            auto it = index.find(name);
            if (it == index.end()) throw SpecError("unknown candidate: " + name);
            ranking.push_back(it->second);
        }
        profile.rankings.push_back(std::move(ranking));
    }
    profile.validate();
    return profile;
}

RankingProfile read_rankings_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    return parse_rankings_csv(in);
}

ThresholdSpec parse_thresholds(const std::string& json_text, int n) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("thresholds JSON parse error: ") + e.what());
    }
    ThresholdSpec spec;
    spec.tau.assign(static_cast<size_t>(n), 0.0);
    if (j.contains("tau")) {
        std::vector<double> vals(static_cast<size_t>(n), 0.0);
        fill_per_vertex(j["tau"], "tau", n, vals);
        spec.tau = std::move(vals);
    }
    if (j.contains("seed")) {
        for (const auto& v : j["seed"]) {
            if (!v.is_number_integer()) throw SpecError("seed entries must be vertex ids");
            int s = v.get<int>();
            if (s < 0 || s >= n) throw SpecError("seed vertex out of range");
            spec.seed.push_back(s);
        }
    }
    return spec;
}

ThresholdSpec read_thresholds_file(const std::string& path, int n) {
    return parse_thresholds(read_text_file(path), n);
}

std::string format_tags(const std::vector<std::string>& tags) {
    json j = json::object();
    for (size_t i = 0; i < tags.size(); ++i) j[std::to_string(i)] = tags[i];
    return j.dump(2) + "\n";
}

std::vector<std::string> parse_tags(const std::string& json_text) {
    json j = json::parse(json_text);
    std::vector<std::string> tags(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t id = std::stoul(it.key());
        if (id >= tags.size()) throw SpecError("non-contiguous tag ids");
        tags[id] = it.value().get<std::string>();
    }
    return tags;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw SpecError("cannot write " + path);
    out << content;
}

}  // namespace ordo

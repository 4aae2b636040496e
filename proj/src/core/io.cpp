#include "io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace htile {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::istringstream in(clean);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

Vertex parse_vertex(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
    }
}

Simplex parse_simplex(const std::vector<std::string>& tokens, std::size_t begin, std::size_t end,
                      int line_no) {
    std::vector<Vertex> v;
    for (std::size_t i = begin; i < end; ++i) v.push_back(parse_vertex(tokens[i], line_no));
    try {
        return Simplex(std::move(v));
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
}

} // namespace

std::string complex_to_text(const RelativeComplex& s) {
    std::string out;
    for (const Simplex& f : s.ambient().facets()) out += "facet " + f.to_string() + "\n";
    for (const Simplex& f : s.removed().facets()) out += "removed " + f.to_string() + "\n";
    return out;
}

RelativeComplex complex_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<Simplex> facets, removed;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "facet") {
            if (tokens.size() < 2)
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": empty facet");
            facets.push_back(parse_simplex(tokens, 1, tokens.size(), line_no));
        } else if (tokens[0] == "removed") {
            if (tokens.size() < 2)
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": empty removed facet");
            removed.push_back(parse_simplex(tokens, 1, tokens.size(), line_no));
        } else {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                              ": unknown keyword '" + tokens[0] + "'");
        }
    }
    if (facets.empty()) throw Error(ErrorCode::Parse, "no facet lines");
    SimplicialComplex ambient = SimplicialComplex::from_facets(std::move(facets));
    SimplicialComplex sub = removed.empty() ? SimplicialComplex()
                                            : SimplicialComplex::from_facets(std::move(removed));
    try {
        return RelativeComplex(std::move(ambient), std::move(sub));
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, std::string("invalid relative pair: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << content;
}

RelativeComplex read_complex(const std::string& path) {
    return complex_from_text(read_file(path));
}

void write_complex(const RelativeComplex& s, const std::string& path) {
    write_file(path, complex_to_text(s));
}

std::string tiling_to_text(const Tiling& t, const std::string& target_ref) {
    return t.to_string(target_ref);
}

Tiling tiling_from_text(const std::string& text, const std::string& base_dir) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Tiling t;
    bool have_target = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "target") {
            if (tokens.size() != 2)
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": target wants one path");
            std::filesystem::path p(tokens[1]);
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            t.target = read_complex(p.string());
            have_target = true;
        } else if (tokens[0] == "tile") {
            if (!have_target)
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": tile before target");
            // tile <facet> ; opp <...|-> ; morse <...|-> ; critical <0|1>
            std::vector<std::vector<std::string>> sections(1);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i] == ";")
                    sections.emplace_back();
                else
                    sections.back().push_back(tokens[i]);
            }
            if (sections.size() != 4 || sections[1].size() < 2 || sections[1][0] != "opp" ||
                sections[2].size() < 2 || sections[2][0] != "morse" || sections[3].size() != 2 ||
                sections[3][0] != "critical")
                throw Error(ErrorCode::Parse,
                            "line " + std::to_string(line_no) + ": malformed tile line");
            auto parse_part = [&](const std::vector<std::string>& part) {
                if (part.size() == 2 && part[1] == "-") return Simplex{};
                std::vector<Vertex> v;
                for (std::size_t i = 1; i < part.size(); ++i)
                    v.push_back(parse_vertex(part[i], line_no));
                return Simplex(std::move(v));
            };
            std::vector<Vertex> fv;
            for (const std::string& tok : sections[0]) fv.push_back(parse_vertex(tok, line_no));
            Simplex facet(std::move(fv));
            Simplex opp = parse_part(sections[1]);
            Simplex morse = parse_part(sections[2]);
            bool critical = sections[3][1] == "1";
            std::optional<Simplex> morse_opt;
            if (!morse.empty()) morse_opt = morse;
            t.tiles.emplace_back(std::move(facet), std::move(opp), std::move(morse_opt), critical);
        } else {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                              ": unknown keyword '" + tokens[0] + "'");
        }
    }
    if (!have_target) throw Error(ErrorCode::Parse, "missing target line");
    return t;
}

Tiling read_tiling(const std::string& path) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return tiling_from_text(read_file(path), dir);
}

void write_tiling(const Tiling& t, const std::string& path, const std::string& target_ref) {
    write_file(path, tiling_to_text(t, target_ref));
}

} // namespace htile

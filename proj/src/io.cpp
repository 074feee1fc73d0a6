#include "wdlkit/io.hpp"

#include <fstream>
#include <sstream>

namespace wdlkit {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line.substr(0, line.find('#')));
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void fail(std::string_view origin, std::size_t lineno, const std::string& what) {
    throw ParseError(std::string(origin) + ":" + std::to_string(lineno) + ": " + what);
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Dicomplementation parse_lat(std::string_view text, std::string_view origin) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::pair<std::string, std::string>> up_decl, down_decl;
    bool have_elements = false;

    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto tokens = tokenize(lines[i]);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "elements") {
            if (have_elements) fail(origin, i + 1, "duplicate elements line");
            if (tokens.size() < 2) fail(origin, i + 1, "elements line declares no elements");
            names.assign(tokens.begin() + 1, tokens.end());
            have_elements = true;
        } else if (kw == "cover" || kw == "up" || kw == "down") {
            if (!have_elements) fail(origin, i + 1, "elements line must come first");
            if (tokens.size() != 3) fail(origin, i + 1, kw + " expects exactly two names");
            if (kw == "cover") covers.emplace_back(tokens[1], tokens[2]);
            else if (kw == "up") up_decl.emplace_back(tokens[1], tokens[2]);
            else down_decl.emplace_back(tokens[1], tokens[2]);
        } else {
            fail(origin, i + 1, "unknown keyword: " + kw);
        }
    }
    if (!have_elements) fail(origin, lines.size(), "missing elements line");

    FiniteLattice lattice = FiniteLattice::from_covers(names, covers);

    if (up_decl.empty() && down_decl.empty()) return trivial_dicomplementation(lattice);
    if (up_decl.empty() || down_decl.empty())
        throw ParseError(std::string(origin) + ": up and down tables must be declared together");

    auto build_table = [&](const std::vector<std::pair<std::string, std::string>>& decl, const char* kw) {
        std::vector<int> table(lattice.size(), -1);
        for (const auto& [from, to] : decl) {
            int x = lattice.index_of(from);
            if (table[static_cast<std::size_t>(x)] >= 0)
                throw ParseError(std::string(origin) + ": duplicate " + kw + " declaration for " + from);
            table[static_cast<std::size_t>(x)] = lattice.index_of(to);
        }
        for (std::size_t x = 0; x < lattice.size(); ++x)
            if (table[x] < 0)
                throw ParseError(std::string(origin) + ": partial " + kw + " table: no entry for " +
                                 lattice.name(static_cast<int>(x)));
        return table;
    };
    std::vector<int> up = build_table(up_decl, "up");
    std::vector<int> down = build_table(down_decl, "down");
    return {std::move(lattice), std::move(up), std::move(down)};
}

Dicomplementation load_lat(const std::filesystem::path& path) {
    return parse_lat(read_file(path), path.string());
}

std::string to_lat(const FiniteLattice& l) {
    std::string out = "elements";
    for (const auto& n : l.names()) out += " " + n;
    out += "\n";
    for (std::size_t b = 0; b < l.size(); ++b)
        for (int a : l.lower_covers(static_cast<int>(b)))
            out += "cover " + l.name(a) + " " + l.name(static_cast<int>(b)) + "\n";
    return out;
}

std::string to_lat(const Dicomplementation& d) {
    std::string out = to_lat(d.lattice);
    for (std::size_t x = 0; x < d.lattice.size(); ++x)
        out += "up " + d.lattice.name(static_cast<int>(x)) + " " + d.lattice.name(d.up[x]) + "\n";
    for (std::size_t x = 0; x < d.lattice.size(); ++x)
        out += "down " + d.lattice.name(static_cast<int>(x)) + " " + d.lattice.name(d.down[x]) + "\n";
    return out;
}

FormalContext parse_cxt(std::string_view text, std::string_view origin) {
    auto lines = split_lines(text);
    auto need = [&](std::size_t i) -> const std::string& {
        if (i >= lines.size()) fail(origin, lines.size() + 1, "unexpected end of file");
        return lines[i];
    };
    if (need(0) != "B") fail(origin, 1, "expected header line 'B'");
    if (!need(1).empty()) fail(origin, 2, "expected empty line after header");
    std::size_t g, m;
    try {
        g = static_cast<std::size_t>(std::stoul(need(2)));
        m = static_cast<std::size_t>(std::stoul(need(3)));
    } catch (const std::exception&) {
        fail(origin, 3, "expected object and attribute counts");
    }
    if (!need(4).empty()) fail(origin, 5, "expected empty line after counts");

    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < g; ++i) objects.push_back(need(5 + i));
    for (std::size_t i = 0; i < m; ++i) attributes.push_back(need(5 + g + i));
    std::vector<IndexSet> rows;
    for (std::size_t i = 0; i < g; ++i) {
        const std::string& line = need(5 + g + m + i);
        if (line.size() != m) fail(origin, 5 + g + m + i + 1, "incidence row has wrong width");
        IndexSet row(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (line[j] == 'X') row.set(j);
            else if (line[j] != '.') fail(origin, 5 + g + m + i + 1, "incidence characters must be 'X' or '.'");
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 5 + g + m + g; i < lines.size(); ++i)
        if (!lines[i].empty()) fail(origin, i + 1, "trailing content after incidence rows");
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext load_cxt(const std::filesystem::path& path) {
    return parse_cxt(read_file(path), path.string());
}

std::string to_cxt(const FormalContext& k) {
    std::string out = "B\n\n";
    out += std::to_string(k.object_count()) + "\n" + std::to_string(k.attribute_count()) + "\n\n";
    for (const auto& o : k.objects()) out += o + "\n";
    for (const auto& a : k.attributes()) out += a + "\n";
    for (std::size_t g = 0; g < k.object_count(); ++g) {
        for (std::size_t m = 0; m < k.attribute_count(); ++m)
            out += k.incident(static_cast<int>(g), static_cast<int>(m)) ? 'X' : '.';
        out += "\n";
    }
    return out;
}

std::variant<ClosureSystem, KernelSystem> parse_set_system(std::string_view text, std::string_view origin) {
    std::vector<std::string> ground;
    std::vector<std::vector<std::string>> closed, open;
    bool have_ground = false;

    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto tokens = tokenize(lines[i]);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "ground") {
            if (have_ground) fail(origin, i + 1, "duplicate ground line");
            ground.assign(tokens.begin() + 1, tokens.end());
            have_ground = true;
        } else if (kw == "closed" || kw == "open") {
            if (!have_ground) fail(origin, i + 1, "ground line must come first");
            auto& dest = kw == "closed" ? closed : open;
            dest.emplace_back(tokens.begin() + 1, tokens.end());
        } else {
            fail(origin, i + 1, "unknown keyword: " + kw);
        }
    }
    if (!have_ground) fail(origin, lines.size(), "missing ground line");
    if (!closed.empty() && !open.empty())
        fail(origin, lines.size(), "file mixes closed and open sets");
    if (closed.empty() && open.empty())
        fail(origin, lines.size(), "file declares no sets");

    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (ground[i] == name) return static_cast<int>(i);
        throw ParseError(std::string(origin) + ": unknown ground element: " + name);
    };
    auto to_sets = [&](const std::vector<std::vector<std::string>>& families) {
        std::vector<IndexSet> sets;
        for (const auto& members : families) {
            IndexSet s(ground.size());
            for (const auto& name : members) s.set(static_cast<std::size_t>(index_of(name)));
            sets.push_back(std::move(s));
        }
        return sets;
    };
    if (!closed.empty()) return ClosureSystem(ground, to_sets(closed));
    return KernelSystem(ground, to_sets(open));
}

std::variant<ClosureSystem, KernelSystem> load_set_system(const std::filesystem::path& path) {
    return parse_set_system(read_file(path), path.string());
}

} // namespace wdlkit

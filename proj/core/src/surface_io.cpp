#include "slopestab/surface_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "slopestab/exceptional.hpp"

namespace slopestab {
namespace {

bool label_char(char c, bool first) {
    if (first) return std::isalpha(static_cast<unsigned char>(c)) != 0;
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_label(const std::string& t) {
    if (t.empty() || !label_char(t[0], true)) return false;
    for (char c : t)
        if (!label_char(c, false)) return false;
    return true;
}

}  // namespace

DivClass parse_class_expr(const SurfaceModel& s, const std::string& expr) {
    if (expr.empty()) throw Error("class expression: empty");
    if (expr == "0") return DivClass(s.rank(), Rat(0));
    DivClass out(s.rank(), Rat(0));
    std::size_t p = 0;
    auto fail = [&](const std::string& msg) {
        throw Error("class expression '" + expr + "' at column " + std::to_string(p + 1) + ": " +
                    msg);
    };
    while (p < expr.size()) {
        Rat coef(1);
        if (expr[p] == '+' || expr[p] == '-') {
            if (expr[p] == '-') coef = -1;
            ++p;
        } else if (p != 0) {
            fail("expected '+' or '-' between terms");
        }
        if (p >= expr.size()) fail("dangling sign");
        if (std::isdigit(static_cast<unsigned char>(expr[p]))) {
            std::size_t start = p;
            while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) ++p;
            if (p < expr.size() && expr[p] == '/') {
                ++p;
                if (p >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[p])))
                    fail("malformed rational");
                while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) ++p;
            }
            coef *= parse_rat(expr.substr(start, p - start));
            if (p < expr.size() && expr[p] == '*') ++p;
        }
        if (p >= expr.size() || !label_char(expr[p], true)) fail("expected a basis label");
        std::size_t start = p;
        while (p < expr.size() && label_char(expr[p], false)) ++p;
        std::string label = expr.substr(start, p - start);
        if (label == "K") {
            if (s.canonical.size() != s.rank())
                fail("'K' used before the canonical class is known");
            for (std::size_t i = 0; i < s.rank(); ++i) out[i] += coef * s.canonical[i];
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < s.rank(); ++i) {
            if (s.basis[i] == label) {
                out[i] += coef;
                found = true;
                break;
            }
        }
        if (!found) {
            p = start;
            fail("unknown label '" + label + "'");
        }
    }
    return out;
}

std::vector<std::pair<std::string, int>> parse_config_expr(const std::string& expr) {
    if (expr.empty()) throw Error("config expression: empty");
    std::vector<std::pair<std::string, int>> out;
    std::size_t p = 0;
    auto fail = [&](const std::string& msg) {
        throw Error("config expression '" + expr + "' at column " + std::to_string(p + 1) + ": " +
                    msg);
    };
    while (p < expr.size()) {
        if (!out.empty()) {
            if (expr[p] != '+') fail("expected '+' between components");
            ++p;
        }
        long mult = 1;
        if (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) {
            std::size_t start = p;
            while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) ++p;
            mult = std::stol(expr.substr(start, p - start));
            if (p < expr.size() && expr[p] == '*') ++p;
        }
        if (p >= expr.size() || !label_char(expr[p], true)) fail("expected a curve label");
        std::size_t start = p;
        while (p < expr.size() && label_char(expr[p], false)) ++p;
        out.emplace_back(expr.substr(start, p - start), static_cast<int>(mult));
    }
    return out;
}

SurfaceModel parse_surface(const std::string& text) {
    SurfaceModel m;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool saw_name = false, saw_basis = false, saw_canonical = false;
    std::size_t gram_rows = 0;
    auto fail = [&](const std::string& msg) {
        throw Error("surface file line " + std::to_string(lineno) + ": " + msg);
    };
    auto need_basis = [&]() {
        if (!saw_basis) fail("basis must be declared first");
    };
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string key;
        in >> key;
        try {
            if (key == "name") {
                if (saw_name) fail("duplicate name");
                if (!(in >> m.name)) fail("expected a name token");
                saw_name = true;
            } else if (key == "basis") {
                if (saw_basis) fail("duplicate basis");
                std::string lbl;
                while (in >> lbl) {
                    if (!valid_label(lbl)) fail("bad basis label '" + lbl + "'");
                    if (lbl == "K") fail("'K' is reserved for the canonical class");
                    m.basis.push_back(lbl);
                }
                if (m.basis.empty()) fail("empty basis");
                saw_basis = true;
                m.gram = QMatrix(m.rank(), m.rank());
            } else if (key == "gram") {
                need_basis();
                if (gram_rows >= m.rank()) fail("too many gram rows");
                std::string tok;
                std::size_t col = 0;
                while (in >> tok) {
                    if (col >= m.rank()) fail("too many entries in gram row");
                    m.gram.at(gram_rows, col++) = parse_rat(tok);
                }
                if (col != m.rank()) fail("gram row has " + std::to_string(col) + " entries, expected " +
                                          std::to_string(m.rank()));
                ++gram_rows;
            } else if (key == "canonical") {
                need_basis();
                if (saw_canonical) fail("duplicate canonical");
                std::string expr;
                if (!(in >> expr)) fail("expected a class expression");
                m.canonical = parse_class_expr(m, expr);
                saw_canonical = true;
            } else if (key == "curve") {
                need_basis();
                std::string lbl, expr;
                if (!(in >> lbl >> expr)) fail("expected label and class expression");
                if (!valid_label(lbl)) fail("bad curve label '" + lbl + "'");
                CurveRecord c;
                c.label = lbl;
                c.cls = parse_class_expr(m, expr);
                std::string word;
                if (in >> word) {
                    if (word != "genus") fail("unexpected token '" + word + "'");
                    std::string g;
                    if (!(in >> g)) fail("expected a genus value");
                    c.genus = parse_rat(g);
                }
                m.curves.push_back(std::move(c));
            } else if (key == "curves_complete" || key == "kodaira_nonneg") {
                std::string v;
                if (!(in >> v) || (v != "true" && v != "false")) fail("expected true or false");
                (key[0] == 'c' ? m.curves_complete : m.kodaira_nonneg) = (v == "true");
            } else if (key == "reference_positive_class") {
                need_basis();
                std::string expr;
                if (!(in >> expr)) fail("expected a class expression");
                m.reference_positive = parse_class_expr(m, expr);
            } else if (key == "effective_generator") {
                need_basis();
                std::string expr;
                if (!(in >> expr)) fail("expected a class expression");
                m.effective_generators.push_back(parse_class_expr(m, expr));
            } else if (key == "polarisation") {
                need_basis();
                std::string lbl, expr;
                if (!(in >> lbl >> expr)) fail("expected label and class expression");
                m.polarisations.push_back({lbl, parse_class_expr(m, expr)});
            } else if (key == "divisor") {
                std::string lbl, expr;
                if (!(in >> lbl >> expr)) fail("expected label and config expression");
                m.divisors.push_back({lbl, parse_config_expr(expr)});
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const Error& e) {
            std::string what = e.what();
            if (what.rfind("surface file line", 0) == 0) throw;
            fail(what);
        }
    }
    lineno = 0;  // diagnostics below are document-level
    if (!saw_name) throw Error("surface file: missing name");
    if (!saw_basis) throw Error("surface file: missing basis");
    if (gram_rows != m.rank())
        throw Error("surface file: expected " + std::to_string(m.rank()) + " gram rows, found " +
                    std::to_string(gram_rows));
    if (!saw_canonical) throw Error("surface file: missing canonical");
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = i + 1; j < m.rank(); ++j)
            if (m.gram.at(i, j) != m.gram.at(j, i))
                throw Error("surface file: gram not symmetric at row " + std::to_string(i + 1) +
                            ", column " + std::to_string(j + 1));
    try {
        validate(m);
    } catch (const Error& e) {
        throw Error(std::string("surface file: ") + e.what());
    }
    // Featured divisor configs must resolve against the roster.
    for (const auto& named : m.divisors) {
        try {
            make_config(m, named.parts);
        } catch (const Error& e) {
            throw Error("surface file: divisor '" + named.label + "': " + e.what());
        }
    }
    return m;
}

SurfaceModel read_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface(buf.str());
}

std::string serialize_surface(const SurfaceModel& s) {
    std::ostringstream out;
    out << "name " << s.name << '\n';
    out << "basis";
    for (const auto& b : s.basis) out << ' ' << b;
    out << '\n';
    for (std::size_t i = 0; i < s.rank(); ++i) {
        out << "gram";
        for (std::size_t j = 0; j < s.rank(); ++j) out << ' ' << rat_str(s.gram.at(i, j));
        out << '\n';
    }
    out << "canonical " << class_str(s, s.canonical) << '\n';
    for (const auto& c : s.curves) {
        out << "curve " << c.label << ' ' << class_str(s, c.cls);
        if (c.genus) out << " genus " << rat_str(*c.genus);
        out << '\n';
    }
    out << "curves_complete " << (s.curves_complete ? "true" : "false") << '\n';
    out << "kodaira_nonneg " << (s.kodaira_nonneg ? "true" : "false") << '\n';
    if (s.reference_positive)
        out << "reference_positive_class " << class_str(s, *s.reference_positive) << '\n';
    for (const auto& g : s.effective_generators)
        out << "effective_generator " << class_str(s, g) << '\n';
    for (const auto& p : s.polarisations)
        out << "polarisation " << p.label << ' ' << class_str(s, p.cls) << '\n';
    for (const auto& d : s.divisors) {
        out << "divisor " << d.label << ' ';
        bool first = true;
        for (const auto& [lbl, mult] : d.parts) {
            if (!first) out << '+';
            first = false;
            if (mult != 1) out << mult << '*';
            out << lbl;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace slopestab

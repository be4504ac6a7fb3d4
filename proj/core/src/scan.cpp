#include "slopestab/scan.hpp"

#include <sstream>

namespace slopestab {

namespace {

std::string xml_escape(const std::string& in) {
    std::string out;
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

const char* cell_color(const std::string& verdict) {
    if (verdict == "unstable") return "#c62828";
    if (verdict == "conditional") return "#f9a825";
    return "#2e7d32";
}

}  // namespace

ScanReport cone_scan(const SurfaceModel& s, const NamedClass& la,
                     const NamedClass& lb, int grid,
                     const std::vector<NamedClass>& probes, Mode mode) {
    validate(s);
    if (grid < 2) throw Error("scan: grid must be at least 2");
    if (probes.empty()) throw Error("scan: no probe divisors given");
    auto na = is_nef(s, la.cls), nb = is_nef(s, lb.cls);
    if (!na.passed())
        throw Error("scan: endpoint '" + la.label + "' fails the nef test (" +
                    positivity_reasons(na) + ")");
    if (!nb.passed())
        throw Error("scan: endpoint '" + lb.label + "' fails the nef test (" +
                    positivity_reasons(nb) + ")");
    if (!is_ample(s, la.cls).passed() && !is_ample(s, lb.cls).passed())
        throw Error("scan: neither endpoint passes the ampleness test");

    ScanReport rep;
    rep.grid = grid;
    rep.from = la.label;
    rep.to = lb.label;
    const Rat n(grid);
    for (int t = 1; t < grid; ++t) {
        ScanCell cell;
        cell.t = t;
        const Rat w(t);
        cell.polarisation = ((n - w) / n) * la.cls + (w / n) * lb.cls;
        cell.polarisation_str = class_str(s, cell.polarisation);
        cell.verdict = "stable";
        bool conditional = false;
        for (const auto& probe : probes) {
            auto v = destabilizes(s, cell.polarisation, probe.cls, mode);
            conditional = conditional || v.conditional;
            if (!v.stable_wrt) {
                cell.verdict = "unstable";
                cell.witness_divisor = probe.label;
                cell.witness_c = *v.witness_c;
                break;
            }
        }
        if (cell.verdict == "stable" && conditional) cell.verdict = "conditional";
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

std::string scan_csv(const ScanReport& rep) {
    std::string out = "t,polarisation,verdict,witness_divisor,witness_c\n";
    for (const auto& cell : rep.cells) {
        out += std::to_string(cell.t);
        out += ",";
        if (cell.polarisation_str.find(',') == std::string::npos)
            out += cell.polarisation_str;
        else
            out += "\"" + cell.polarisation_str + "\"";
        out += ",";
        out += cell.verdict;
        out += ",";
        out += cell.witness_divisor;
        out += ",";
        if (!cell.witness_divisor.empty()) out += rat_str(cell.witness_c);
        out += "\n";
    }
    return out;
}

std::string scan_svg(const ScanReport& rep) {
    const int cells = static_cast<int>(rep.cells.size());
    const int x0 = 20, y0 = 45, strip_w = 920, strip_h = 40;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" "
           "height=\"150\" viewBox=\"0 0 960 150\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"150\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"20\" y=\"28\" font-family=\"monospace\" font-size=\"14\">"
        << xml_escape(rep.from) << " to " << xml_escape(rep.to) << " (grid "
        << rep.grid << ")</text>\n";
    for (int i = 0; i < cells; ++i) {
        const auto& cell = rep.cells[static_cast<std::size_t>(i)];
        const int xa = x0 + i * strip_w / cells;
        const int xb = x0 + (i + 1) * strip_w / cells;
        svg << "<rect x=\"" << xa << "\" y=\"" << y0 << "\" width=\""
            << (xb - xa) << "\" height=\"" << strip_h << "\" fill=\""
            << cell_color(cell.verdict) << "\" stroke=\"#ffffff\" "
               "stroke-width=\"1\"><title>t=" << cell.t << " "
            << xml_escape(cell.verdict);
        if (!cell.witness_divisor.empty())
            svg << " (" << xml_escape(cell.witness_divisor) << ", c="
                << rat_str(cell.witness_c) << ")";
        svg << "</title></rect>\n";
    }
    const char* names[3] = {"stable", "unstable", "conditional"};
    for (int k = 0; k < 3; ++k) {
        const int lx = 20 + 160 * k;
        svg << "<rect x=\"" << lx << "\" y=\"110\" width=\"14\" height=\"14\" fill=\""
            << cell_color(names[k]) << "\"/>\n";
        svg << "<text x=\"" << (lx + 20)
            << "\" y=\"122\" font-family=\"monospace\" font-size=\"12\">"
            << names[k] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace slopestab

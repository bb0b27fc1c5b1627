#include "hml/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hml/error.hpp"

namespace hml {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SampledFunction& f) {
    const LogGrid& g = *f.grid;
    if (f.side == Side::frequency) {
        os << "beta,re,im\n";
        // emit in ascending beta order
        const std::size_t n = g.n();
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t src = (k + n / 2) % n;
            os << format_double(g.beta()[src]) << ',' << format_double(f.values[src].real())
               << ',' << format_double(f.values[src].imag()) << '\n';
        }
        return;
    }
    if (g.domain() == Domain::real_line) {
        os << "x,re,im\n";
        for (std::size_t j = 0; j < g.n(); ++j)
            os << format_double(g.x()[j]) << ',' << format_double(f.values[j].real()) << ','
               << format_double(f.values[j].imag()) << '\n';
        return;
    }
    os << "t,re,im\n";
    for (std::size_t j = 0; j < g.n(); ++j)
        os << format_double(g.t()[j]) << ',' << format_double(f.values[j].real()) << ','
           << format_double(f.values[j].imag()) << '\n';
}

void write_csv_file(const std::string& path, const SampledFunction& f) {
    std::ofstream os(path);
    require(os.good(), "config-invalid", "cannot open " + path + " for writing");
    write_csv(os, f);
}

HalfPlaneSymbol load_symbol_csv(std::istream& is, const GridPtr& grid, SymbolClass tag) {
    std::vector<std::pair<double, cxd>> rows;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("beta", 0) == 0) { first = false; continue; }
        first = false;
        std::stringstream ss(line);
        std::string cell;
        double col[3] = {0, 0, 0};
        for (int c = 0; c < 3 && std::getline(ss, cell, ','); ++c) col[c] = std::stod(cell);
        rows.emplace_back(col[0], cxd{col[1], col[2]});
    }
    require(rows.size() >= 2, "config-invalid", "symbol CSV needs at least two rows");
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<cxd> vals(grid->n());
    const auto beta = grid->beta();
    for (std::size_t k = 0; k < grid->n(); ++k) {
        const double b = beta[k];
        auto it = std::lower_bound(rows.begin(), rows.end(), b,
                                   [](const auto& r, double x) { return r.first < x; });
        if (it == rows.begin())
            vals[k] = rows.front().second;
        else if (it == rows.end())
            vals[k] = rows.back().second;
        else {
            const auto& hi = *it;
            const auto& lo = *(it - 1);
            const double s = (b - lo.first) / (hi.first - lo.first);
            vals[k] = (1.0 - s) * lo.second + s * hi.second;
        }
    }
    return HalfPlaneSymbol::from_values(grid, std::move(vals), tag);
}

HalfPlaneSymbol load_symbol_csv_file(const std::string& path, const GridPtr& grid,
                                     SymbolClass tag) {
    std::ifstream is(path);
    require(is.good(), "config-invalid", "cannot open " + path);
    return load_symbol_csv(is, grid, tag);
}

} // namespace hml

#include "dcalc/report.hpp"

#include "dcalc/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dcalc {

std::string format_number(double value, int precision) {
    if (precision < 1 || precision > 17) throw InvalidArgument("precision must lie in [1, 17]");
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    return fmt::format("{:.{}g}", value, precision);
}

TextTable::TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

void TextTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != headers_.size()) throw InvalidArgument("row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string TextTable::csv() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(headers_);
    for (const auto& r : rows_) line(r);
    return out;
}

std::string TextTable::pretty() const {
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t i = 0; i < headers_.size(); ++i) width[i] = headers_[i].size();
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += "  ";
            out += fmt::format("{:>{}}", cells[i], width[i]);
        }
        out += '\n';
    };
    line(headers_);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    for (const auto& r : rows_) line(r);
    return out;
}

std::string ascii_plot(const std::vector<double>& values, long first_index, int width, int height) {
    if (values.empty()) return "(no data)\n";
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    const double span = hi > lo ? hi - lo : 1.0;
    std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
    const std::size_t count = values.size();
    for (int col = 0; col < width; ++col) {
        const std::size_t idx =
            count == 1 ? 0 : static_cast<std::size_t>(std::lround(static_cast<double>(col) * (count - 1) / (width - 1)));
        const double v = values[idx];
        int row = static_cast<int>(std::lround((hi - v) / span * (height - 1)));
        row = std::clamp(row, 0, height - 1);
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = '*';
    }
    if (lo < 0.0 && hi > 0.0) {
        const int zero = static_cast<int>(std::lround(hi / span * (height - 1)));
        for (auto& c : grid[static_cast<std::size_t>(zero)]) {
            if (c == ' ') c = '-';
        }
    }
    std::string out = fmt::format("max {:.6g}\n", hi);
    for (const auto& line : grid) out += '|' + line + "|\n";
    out += fmt::format("min {:.6g}   n = {}..{}\n", lo, first_index, first_index + static_cast<long>(count) - 1);
    return out;
}

}  // namespace dcalc

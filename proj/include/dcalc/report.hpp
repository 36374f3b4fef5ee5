#pragma once

#include <string>
#include <vector>

namespace dcalc {

/// Locale-independent "%.{precision}g" rendering. Precision must lie in [1, 17].
std::string format_number(double value, int precision);

/// A rectangular text table rendered as CSV (header row, '\n' line endings,
/// no quoting) or as right-aligned columns.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> headers);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }

    std::string csv() const;
    std::string pretty() const;

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

/// Fixed 64x16 character plot of `values` against their index offset by
/// `first_index`, with min/max annotations.
std::string ascii_plot(const std::vector<double>& values, long first_index = 0, int width = 64, int height = 16);

}  // namespace dcalc

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

// Deterministic text output: shortest round-trip float formatting, no
// locale, no timestamps. Every file starts with '# key=value' metadata lines
// sufficient to rerun the experiment.

namespace ssmc {

inline std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void metadata(const std::string& key, const std::string& value)
    {
        out_ << "# " << key << '=' << value << '\n';
    }

    void metadata(const std::vector<std::pair<std::string, std::string>>& kv)
    {
        for (const auto& [k, v] : kv) metadata(k, v);
    }

    void header(const std::vector<std::string>& cols) { line(cols); }

    void line(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

} // namespace ssmc

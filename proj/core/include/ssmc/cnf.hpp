#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssmc {

struct Clause {
    std::vector<std::int32_t> lits; // nonzero signed variable indices, duplicates collapsed
};

struct CnfFormula {
    std::int32_t num_vars = 0;
    std::vector<Clause> clauses;

    struct Occurrence {
        std::uint32_t clause;
        bool positive;
    };
    // occ[v] lists every clause containing variable v, per polarity; built at
    // parse time. Tautological clauses appear once per polarity and need no
    // special casing anywhere downstream.
    std::vector<std::vector<Occurrence>> occ; // index 1..num_vars

    void build_occurrence_index();
};

class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);
std::string serialize_dimacs(const CnfFormula& f);

// assignments are packed bitsets: bit (v-1) holds variable v
using Assignment = std::vector<std::uint64_t>;

inline Assignment make_assignment(std::int32_t num_vars)
{
    return Assignment(std::size_t(num_vars + 63) / 64, 0);
}

inline bool assignment_bit(const Assignment& a, std::int32_t var)
{
    return (a[std::size_t(var - 1) >> 6] >> ((var - 1) & 63)) & 1;
}

inline void flip_assignment_bit(Assignment& a, std::int32_t var)
{
    a[std::size_t(var - 1) >> 6] ^= std::uint64_t(1) << ((var - 1) & 63);
}

inline bool literal_true(const Assignment& a, std::int32_t lit)
{
    const bool bit = assignment_bit(a, lit > 0 ? lit : -lit);
    return lit > 0 ? bit : !bit;
}

// full rescan; the incremental cache must always agree with this
int unsat_count(const CnfFormula& f, const Assignment& a);

} // namespace ssmc

#include "ssmc/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace ssmc {

void CnfFormula::build_occurrence_index()
{
    occ.assign(std::size_t(num_vars) + 1, {});
    for (std::uint32_t ci = 0; ci < clauses.size(); ++ci)
        for (std::int32_t lit : clauses[ci].lits)
            occ[std::size_t(lit > 0 ? lit : -lit)].push_back({ci, lit > 0});
}

CnfFormula parse_dimacs(std::istream& in)
{
    CnfFormula f;
    bool have_problem = false;
    std::int64_t declared_clauses = 0;
    Clause current;
    bool clause_open = false;
    int line_no = 0;
    int clause_start_line = 0;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream toks(line);
        std::string tok;
        if (!(toks >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (have_problem) throw DimacsParseError(line_no, "duplicate problem line");
            std::string fmt;
            std::int64_t nv = -1, nc = -1;
            if (!(toks >> fmt >> nv >> nc))
                throw DimacsParseError(line_no, "malformed problem line");
            if (fmt == "wcnf")
                throw DimacsParseError(line_no, "weighted formulas (p wcnf) are not supported");
            if (fmt != "cnf") throw DimacsParseError(line_no, "unknown format '" + fmt + "'");
            if (nv < 0 || nv > INT32_MAX || nc < 0)
                throw DimacsParseError(line_no, "invalid variable/clause counts");
            f.num_vars = std::int32_t(nv);
            declared_clauses = nc;
            have_problem = true;
            continue;
        }
        if (!have_problem)
            throw DimacsParseError(line_no, "clause data before problem line");
        // clause literals; the leading token is part of them
        do {
            std::int64_t lit;
            try {
                std::size_t pos = 0;
                lit = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw DimacsParseError(line_no, "expected literal, got '" + tok + "'");
            }
            if (lit == 0) {
                if (current.lits.empty())
                    throw DimacsParseError(line_no, "empty clause");
                f.clauses.push_back(std::move(current));
                current = Clause{};
                clause_open = false;
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw DimacsParseError(line_no, "literal " + std::to_string(lit) +
                                                        " out of range (num_vars=" +
                                                        std::to_string(f.num_vars) + ")");
                if (!clause_open) clause_start_line = line_no;
                clause_open = true;
                const std::int32_t l = std::int32_t(lit);
                if (std::find(current.lits.begin(), current.lits.end(), l) == current.lits.end())
                    current.lits.push_back(l);
            }
        } while (toks >> tok);
    }
    if (clause_open)
        throw DimacsParseError(clause_start_line, "unterminated final clause (missing 0)");
    if (!have_problem) throw DimacsParseError(line_no, "missing problem line");
    if (std::int64_t(f.clauses.size()) != declared_clauses)
        throw DimacsParseError(line_no, "clause count mismatch: declared " +
                                            std::to_string(declared_clauses) + ", found " +
                                            std::to_string(f.clauses.size()));
    f.build_occurrence_index();
    return f;
}

CnfFormula parse_dimacs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (std::int32_t lit : c.lits) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

int unsat_count(const CnfFormula& f, const Assignment& a)
{
    int unsat = 0;
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (std::int32_t lit : c.lits)
            if (literal_true(a, lit)) { sat = true; break; }
        unsat += !sat;
    }
    return unsat;
}

} // namespace ssmc

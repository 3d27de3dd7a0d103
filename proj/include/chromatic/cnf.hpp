#pragma once

// CNF instances with a counting semantics, and a brute-force model counter.
//
// Input is DIMACS with one extra comment line naming the semantics:
//   c semantics nae3        not-all-equal, width 3 (any width >= 3)
//   c semantics alpha2      exactly alpha of 2*alpha literals true ("2of4" = alpha2)
//   c semantics monotone2   width 2, no negations, at least one literal true

#include "chromatic/types.hpp"

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace chromatic {

enum class SemanticsKind { nae, alpha_of_2alpha, monotone_2sat };

struct Semantics {
  SemanticsKind kind = SemanticsKind::nae;
  int param = 3;  // clause width for nae, alpha for alpha_of_2alpha

  int clause_width() const {
    switch (kind) {
      case SemanticsKind::nae: return param;
      case SemanticsKind::alpha_of_2alpha: return 2 * param;
      case SemanticsKind::monotone_2sat: return 2;
    }
    return 0;
  }
};

inline std::string to_string(const Semantics& s) {
  switch (s.kind) {
    case SemanticsKind::nae: return "nae" + std::to_string(s.param);
    case SemanticsKind::alpha_of_2alpha: return "alpha" + std::to_string(s.param);
    case SemanticsKind::monotone_2sat: return "monotone2";
  }
  return "?";
}

inline Semantics parse_semantics(std::string_view tag) {
  if (tag == "monotone2" || tag == "monotone_2sat" || tag == "monotone") return {SemanticsKind::monotone_2sat, 2};
  if (tag == "2of4") return {SemanticsKind::alpha_of_2alpha, 2};
  if (tag.rfind("nae", 0) == 0) {
    int w = parse_int(tag.substr(3));
    if (w < 3) throw InputError("nae width must be >= 3");
    return {SemanticsKind::nae, w};
  }
  if (tag.rfind("alpha", 0) == 0) {
    int a = parse_int(tag.substr(5));
    if (a < 1) throw InputError("alpha must be >= 1");
    return {SemanticsKind::alpha_of_2alpha, a};
  }
  throw InputError("unknown semantics '" + std::string(tag) + "'");
}

struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // signed, 1-based variables
  Semantics semantics;
};

/// Checks widths, ranges, signs and repeated variables.
inline void validate(const CnfInstance& cnf) {
  if (cnf.num_vars < 0) throw InputError("cnf: negative variable count");
  const int width = cnf.semantics.clause_width();
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto& c = cnf.clauses[i];
    const std::string where = "clause " + std::to_string(i + 1);
    if (static_cast<int>(c.size()) != width) {
      throw InputError(where + " has width " + std::to_string(c.size()) + ", semantics " + to_string(cnf.semantics) +
                       " needs " + std::to_string(width));
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      int v = std::abs(c[a]);
      if (c[a] == 0 || v > cnf.num_vars) throw InputError(where + ": variable out of range");
      if (cnf.semantics.kind == SemanticsKind::monotone_2sat && c[a] < 0) {
        throw InputError(where + ": negated literal in a monotone instance");
      }
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (std::abs(c[b]) == v) throw InputError(where + ": variable " + std::to_string(v) + " repeated");
    }
  }
}

inline CnfInstance parse_cnf(std::istream& in) {
  CnfInstance cnf;
  bool have_header = false;
  bool have_semantics = false;
  int declared = -1;
  std::vector<int> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string key;
      std::string tag;
      if (ls >> key >> tag && key == "semantics") {
        cnf.semantics = parse_semantics(tag);
        have_semantics = true;
      }
      continue;
    }
    if (head == "p") {
      std::string fmt;
      if (!(ls >> fmt >> cnf.num_vars >> declared) || fmt != "cnf" || cnf.num_vars < 0 || declared < 0) {
        throw InputError("cnf: bad header '" + line + "'");
      }
      have_header = true;
      continue;
    }
    if (head == "%") break;
    if (!have_header) throw InputError("cnf: clause before header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      int lit = 0;
      try {
        lit = parse_int(tok);
      } catch (const InputError&) {
        throw InputError("cnf: malformed literal '" + tok + "'");
      }
      if (lit == 0) {
        cnf.clauses.push_back(pending);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) throw InputError("cnf: missing 'p cnf V C' header");
  if (!have_semantics) throw InputError("cnf: missing 'c semantics <tag>' line");
  if (!pending.empty()) throw InputError("cnf: last clause not terminated by 0");
  if (static_cast<int>(cnf.clauses.size()) != declared) {
    throw InputError("cnf: header announces " + std::to_string(declared) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  }
  validate(cnf);
  return cnf;
}

inline CnfInstance parse_cnf(const std::string& text) {
  std::istringstream in(text);
  return parse_cnf(in);
}

inline std::string write_cnf(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "c semantics " << to_string(cnf.semantics) << "\n";
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

/// Whether `assignment` (bit v-1 = value of variable v) satisfies every clause.
inline bool satisfies(const CnfInstance& cnf, std::uint32_t assignment) {
  for (const auto& c : cnf.clauses) {
    int trues = 0;
    for (int lit : c) {
      bool value = (assignment >> (std::abs(lit) - 1)) & 1;
      if (lit < 0) value = !value;
      trues += value;
    }
    const int w = static_cast<int>(c.size());
    switch (cnf.semantics.kind) {
      case SemanticsKind::nae:
        if (trues == 0 || trues == w) return false;
        break;
      case SemanticsKind::alpha_of_2alpha:
        if (trues != cnf.semantics.param) return false;
        break;
      case SemanticsKind::monotone_2sat:
        if (trues == 0) return false;
        break;
    }
  }
  return true;
}

inline BigInt count_models(const CnfInstance& cnf) {
  if (cnf.num_vars > 24) throw BudgetExceeded("model counting limited to 24 variables");
  std::uint64_t count = 0;
  const std::uint32_t total = std::uint32_t{1} << cnf.num_vars;
  for (std::uint32_t a = 0; a < total; ++a) count += satisfies(cnf, a);
  return BigInt(count);
}

}  // namespace chromatic

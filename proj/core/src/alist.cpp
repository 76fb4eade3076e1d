#include "etdec/alist.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "etdec/errors.hpp"

namespace etdec {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ValidationError("alist line " + std::to_string(line) + ": " + what);
}

struct Token {
  long value;
  int line;
};

struct Line {
  int number;
  std::vector<long> values;  // may be empty: a degree-0 node's adjacency line
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream tokens(raw);
    Line line{number, {}};
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        line.values.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(number, "expected integer, got '" + tok + "'");
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

// Gathers `count` integers starting at lines[idx], skipping blank lines;
// header and degree sections may wrap across lines.
std::vector<Token> take(const std::vector<Line>& lines, std::size_t& idx, std::size_t count,
                        const char* what) {
  std::vector<Token> out;
  while (out.size() < count) {
    if (idx >= lines.size()) {
      const int line = lines.empty() ? 1 : lines.back().number;
      fail(line, std::string("unexpected end of file while reading ") + what);
    }
    const Line& line = lines[idx];
    if (line.values.size() > count - out.size()) {
      fail(line.number, std::string("too many entries in ") + what);
    }
    for (long v : line.values) out.push_back({v, line.number});
    ++idx;
  }
  return out;
}

}  // namespace

ParityCheckMatrix load_alist(std::istream& in) {
  const std::vector<Line> lines = read_lines(in);

  std::size_t idx = 0;
  const std::vector<Token> header = take(lines, idx, 2, "header");
  const long n_vars = header[0].value;
  const long n_checks = header[1].value;
  if (n_vars < 1 || n_checks < 1) fail(header[0].line, "malformed header: dimensions must be positive");
  if (n_checks >= n_vars) {
    fail(header[0].line, "malformed header: n_checks must be smaller than n_vars for a code of rate in (0,1)");
  }

  const std::vector<Token> maxima = take(lines, idx, 2, "maximum degrees");
  const long max_var_deg = maxima[0].value;
  const long max_check_deg = maxima[1].value;
  if (max_var_deg < 0 || max_check_deg < 0) fail(maxima[0].line, "malformed header: negative maximum degree");

  const std::vector<Token> var_degrees = take(lines, idx, static_cast<std::size_t>(n_vars), "variable degrees");
  const std::vector<Token> check_degrees = take(lines, idx, static_cast<std::size_t>(n_checks), "check degrees");
  for (const Token& t : var_degrees) {
    if (t.value < 0 || t.value > max_var_deg) {
      fail(t.line, "variable degree " + std::to_string(t.value) + " outside [0," + std::to_string(max_var_deg) + "]");
    }
  }
  for (const Token& t : check_degrees) {
    if (t.value < 0 || t.value > max_check_deg) {
      fail(t.line, "check degree " + std::to_string(t.value) + " outside [0," + std::to_string(max_check_deg) + "]");
    }
  }

  // Adjacency sections are one node per line; a blank line is a degree-0
  // node. Zero entries are padding and ignored.
  auto read_adjacency = [&](long node_count, long index_limit, const std::vector<Token>& degrees,
                            const char* what) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
    std::vector<int> line_of(static_cast<std::size_t>(node_count), 0);
    for (long n = 0; n < node_count; ++n) {
      if (idx >= lines.size()) {
        fail(lines.empty() ? 1 : lines.back().number,
             std::string("unexpected end of file while reading ") + what);
      }
      const Line& line = lines[idx++];
      line_of[static_cast<std::size_t>(n)] = line.number;
      std::vector<int>& entries = adj[static_cast<std::size_t>(n)];
      for (long v : line.values) {
        if (v == 0) continue;
        if (v < 1 || v > index_limit) {
          fail(line.number, "index " + std::to_string(v) + " out of range [1," + std::to_string(index_limit) + "]");
        }
        const int zero_based = static_cast<int>(v - 1);
        if (std::find(entries.begin(), entries.end(), zero_based) != entries.end()) {
          fail(line.number, "duplicate edge: index " + std::to_string(v) + " repeated");
        }
        entries.push_back(zero_based);
      }
      if (static_cast<long>(entries.size()) != degrees[static_cast<std::size_t>(n)].value) {
        fail(line.number, std::string(what) + " entry count " + std::to_string(entries.size()) +
                              " does not match declared degree " +
                              std::to_string(degrees[static_cast<std::size_t>(n)].value));
      }
    }
    return std::pair(adj, line_of);
  };

  const auto [var_lists, var_line_of] =
      read_adjacency(n_vars, n_checks, var_degrees, "variable adjacency");
  const auto [check_lists, check_line_of] =
      read_adjacency(n_checks, n_vars, check_degrees, "check adjacency");

  // Cross-check the two directions: the edge sets must agree exactly.
  std::vector<std::vector<int>> from_vars(static_cast<std::size_t>(n_checks));
  for (long v = 0; v < n_vars; ++v) {
    for (int c : var_lists[static_cast<std::size_t>(v)]) from_vars[c].push_back(static_cast<int>(v));
  }
  for (long c = 0; c < n_checks; ++c) {
    std::vector<int> a = from_vars[static_cast<std::size_t>(c)];
    std::vector<int> b = check_lists[static_cast<std::size_t>(c)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      fail(check_line_of[static_cast<std::size_t>(c)],
           "adjacency mismatch: check " + std::to_string(c + 1) +
               " disagrees with the variable-side lists");
    }
  }

  return ParityCheckMatrix::from_check_lists(static_cast<int>(n_vars), check_lists);
}

ParityCheckMatrix load_alist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open alist file: " + path);
  return load_alist(in);
}

void save_alist(const ParityCheckMatrix& h, std::ostream& out) {
  const int n = h.n_vars();
  const int m = h.n_checks();
  int max_var_deg = 0;
  int max_check_deg = 0;
  for (int v = 0; v < n; ++v) max_var_deg = std::max(max_var_deg, h.var_degree(v));
  for (int c = 0; c < m; ++c) max_check_deg = std::max(max_check_deg, h.check_degree(c));

  out << n << ' ' << m << '\n';
  out << max_var_deg << ' ' << max_check_deg << '\n';
  for (int v = 0; v < n; ++v) out << h.var_degree(v) << (v + 1 == n ? '\n' : ' ');
  for (int c = 0; c < m; ++c) out << h.check_degree(c) << (c + 1 == m ? '\n' : ' ');
  for (int v = 0; v < n; ++v) {
    const auto checks = h.var_checks(v);
    for (std::size_t i = 0; i < checks.size(); ++i) out << checks[i] + 1 << (i + 1 == checks.size() ? "" : " ");
    out << '\n';
  }
  for (int c = 0; c < m; ++c) {
    const auto vars = h.check_vars(c);
    for (std::size_t i = 0; i < vars.size(); ++i) out << vars[i] + 1 << (i + 1 == vars.size() ? "" : " ");
    out << '\n';
  }
}

void save_alist_file(const ParityCheckMatrix& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open alist file for writing: " + path);
  save_alist(h, out);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace etdec

#include "pdslab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pdslab {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls{std::string(strip_comment(raw))};
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const std::string& s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

PcWord parse_pc_word(const std::string& w, std::size_t n, std::size_t line) {
  PcWord out;
  if (w == "1") return out;
  std::size_t pos = 0;
  while (pos <= w.size()) {
    auto star = w.find('*', pos);
    std::string factor = w.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    std::int64_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      power = to_int(factor.substr(caret + 1), line);
      factor.resize(caret);
    }
    if (factor.size() < 2 || factor[0] != 'f') fail(line, "bad pc letter '" + factor + "'");
    const std::int64_t i = to_int(factor.substr(1), line);
    if (i < 1 || static_cast<std::size_t>(i) > n) fail(line, "generator f" + std::to_string(i) + " out of range");
    if (power < 0) fail(line, "negative exponents are not allowed in pc words");
    out.insert(out.end(), static_cast<std::size_t>(power), static_cast<std::uint32_t>(i - 1));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return out;
}

// "f1 * f2" is accepted as well as "f1*f2".
std::string join_from(const std::vector<std::string>& tokens, std::size_t first) {
  std::string s;
  for (std::size_t i = first; i < tokens.size(); ++i) s += tokens[i];
  return s;
}

std::string pc_word_text(const PcWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto letter : w) s += (s.empty() ? "f" : "*f") + std::to_string(letter + 1);
  return s;
}

}  // namespace

std::string write_group_file(const FiniteGroup& g) {
  std::string s = "group-table " + std::to_string(g.order()) + "\ngens";
  for (Index x : g.generators()) s += " " + std::to_string(x);
  s += "\nlabels";
  for (const auto& l : g.generator_labels()) s += " " + l;
  s += "\n";
  const auto table = g.table();
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b) s += ' ';
      s += std::to_string(table[a * g.order() + b]);
    }
    s += '\n';
  }
  return s;
}

GroupPtr parse_group_file(std::string_view text, std::size_t max_order) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "group-table")
    throw FormatError("line 1: expected 'group-table v'");
  const std::int64_t v = to_int(lines[0].tokens[1], lines[0].number);
  if (v < 1) fail(lines[0].number, "group order must be positive");
  if (static_cast<std::size_t>(v) > max_order)
    throw std::length_error("group order " + std::to_string(v) + " exceeds the cap of " + std::to_string(max_order));
  const auto n = static_cast<std::size_t>(v);

  std::size_t at = 1;
  if (at >= lines.size() || lines[at].tokens[0] != "gens") fail(at < lines.size() ? lines[at].number : 2, "expected 'gens ...'");
  std::vector<Index> gens;
  for (std::size_t i = 1; i < lines[at].tokens.size(); ++i) {
    auto x = to_int(lines[at].tokens[i], lines[at].number);
    if (x < 0 || x >= v) fail(lines[at].number, "generator index " + std::to_string(x) + " out of range");
    gens.push_back(static_cast<Index>(x));
  }
  ++at;
  std::vector<std::string> labels;
  if (at < lines.size() && lines[at].tokens[0] == "labels") {
    labels.assign(lines[at].tokens.begin() + 1, lines[at].tokens.end());
    if (labels.size() != gens.size()) fail(lines[at].number, "label count differs from generator count");
    ++at;
  }
  if (lines.size() - at != n)
    throw FormatError("expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - at));

  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a, ++at) {
    const Line& row = lines[at];
    if (row.tokens.size() != n)
      fail(row.number, "row " + std::to_string(a) + " has " + std::to_string(row.tokens.size()) + " entries, expected " +
                           std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      auto x = to_int(row.tokens[b], row.number);
      if (x < 0 || x >= v) fail(row.number, "row " + std::to_string(a) + " column " + std::to_string(b) + ": entry out of range");
      table[a * n + b] = static_cast<Index>(x);
    }
  }
  std::vector<std::size_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      auto x = table[a * n + b];
      if (seen[x] != n)
        throw FormatError("row " + std::to_string(a) + " column " + std::to_string(b) + ": entry " + std::to_string(x) +
                          " repeats column " + std::to_string(seen[x]) + " (not a Latin square)");
      seen[x] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      auto x = table[a * n + b];
      if (seen[x] != n)
        throw FormatError("row " + std::to_string(a) + " column " + std::to_string(b) + ": entry " + std::to_string(x) +
                          " repeats row " + std::to_string(seen[x]) + " (not a Latin square)");
      seen[x] = a;
    }
  }
  try {
    return std::make_shared<FiniteGroup>(n, std::move(table), std::move(gens), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string write_pc_file(const PcPresentation& pc) {
  std::string s = "pc " + std::to_string(pc.n_gens) + "\n";
  for (std::size_t i = 0; i < pc.n_gens; ++i)
    s += "order " + std::to_string(i + 1) + " " + std::to_string(pc.relative_orders[i]) + "\n";
  for (std::size_t i = 0; i < pc.n_gens; ++i)
    if (!pc.power_relations[i].empty())
      s += "pow " + std::to_string(i + 1) + " = " + pc_word_text(pc.power_relations[i]) + "\n";
  for (std::size_t j = 0; j < pc.n_gens; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!pc.commutator_relations[j][i].empty())
        s += "comm " + std::to_string(j + 1) + " " + std::to_string(i + 1) + " = " +
             pc_word_text(pc.commutator_relations[j][i]) + "\n";
  return s;
}

PcPresentation parse_pc_file(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "pc")
    throw FormatError("line 1: expected 'pc n'");
  const std::int64_t n = to_int(lines[0].tokens[1], lines[0].number);
  if (n < 1 || n > 64) fail(lines[0].number, "generator count must be in [1, 64]");
  std::vector<std::int64_t> orders(static_cast<std::size_t>(n), 0);
  auto gen_index = [&](const std::string& s, std::size_t line) {
    auto i = to_int(s, line);
    if (i < 1 || i > n) fail(line, "generator " + s + " out of range");
    return static_cast<std::size_t>(i - 1);
  };
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& t = lines[l].tokens;
    if (t[0] != "order") continue;
    if (t.size() != 3) fail(lines[l].number, "expected 'order i o'");
    auto i = gen_index(t[1], lines[l].number);
    if (orders[i] != 0) fail(lines[l].number, "order of f" + t[1] + " given twice");
    orders[i] = to_int(t[2], lines[l].number);
  }
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] == 0) throw FormatError("missing 'order " + std::to_string(i + 1) + " ...'");

  PcPresentation pc(orders);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& t = lines[l].tokens;
    const auto num = lines[l].number;
    try {
      if (t[0] == "order") continue;
      if (t[0] == "pow") {
        if (t.size() < 4 || t[2] != "=") fail(num, "expected 'pow i = WORD'");
        pc.set_power(gen_index(t[1], num), parse_pc_word(join_from(t, 3), un, num));
      } else if (t[0] == "comm") {
        if (t.size() < 5 || t[3] != "=") fail(num, "expected 'comm j i = WORD'");
        pc.set_commutator(gen_index(t[1], num), gen_index(t[2], num), parse_pc_word(join_from(t, 4), un, num));
      } else {
        fail(num, "unknown keyword '" + t[0] + "'");
      }
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      fail(num, e.what());
    }
  }
  try {
    pc.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return pc;
}

GroupPtr parse_any_group_file(std::string_view text, std::size_t max_order) {
  auto lines = tokenize(text);
  if (!lines.empty() && lines[0].tokens[0] == "pc") return group_from_pc_presentation(parse_pc_file(text), max_order).group;
  return parse_group_file(text, max_order);
}

std::vector<Index> parse_subset(std::string_view text, const FiniteGroup& g, WordOrder order) {
  auto lines = tokenize(text);
  std::vector<Index> out;
  std::set<Index> seen;
  auto add = [&](Index x, const std::string& what, std::size_t line) {
    if (!seen.insert(x).second) fail(line, "duplicate element " + what);
    out.push_back(x);
  };
  if (!lines.empty() && lines[0].tokens[0] == "subset-indices") {
    if (lines[0].tokens.size() != 2) fail(lines[0].number, "expected 'subset-indices k'");
    const auto k = to_int(lines[0].tokens[1], lines[0].number);
    for (std::size_t l = 1; l < lines.size(); ++l)
      for (const auto& tok : lines[l].tokens) {
        auto x = to_int(tok, lines[l].number);
        if (x < 0 || static_cast<std::size_t>(x) >= g.order()) fail(lines[l].number, "index " + tok + " out of range");
        add(static_cast<Index>(x), tok, lines[l].number);
      }
    if (static_cast<std::int64_t>(out.size()) != k)
      throw FormatError("subset-indices header says " + std::to_string(k) + ", found " + std::to_string(out.size()));
    return out;
  }

  // Words: split on commas and newlines, ignoring brackets. A GAP-style
  // "S := [ ... ];;" wrapper is accepted.
  std::string body(text);
  if (auto assign = body.find(":="); assign != std::string::npos)
    body.replace(0, assign + 2, std::string(static_cast<std::size_t>(std::count(body.begin(), body.begin() + assign, '\n')), '\n'));
  const auto alphabet = g.alphabet();
  std::size_t number = 0;
  std::istringstream in{body};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::string line(strip_comment(raw));
    for (char& ch : line)
      if (ch == '[' || ch == ']' || ch == ',' || ch == ';') ch = ' ';
    std::istringstream ls(line);
    for (std::string word; ls >> word;) {
      Index x = 0;
      try {
        x = evaluate_word(g, word, alphabet, order);
      } catch (const std::invalid_argument& e) {
        fail(number, e.what());
      }
      add(x, "'" + word + "'", number);
    }
  }
  return out;
}

std::string write_subset_words(const PdsCandidate& c) {
  std::string s;
  for (const auto& w : c.words()) s += w + "\n";
  return s;
}

std::string write_subset_indices(const PdsCandidate& c) {
  std::string s = "subset-indices " + std::to_string(c.subset.size()) + "\n";
  for (std::size_t i = 0; i < c.subset.size(); ++i) s += std::to_string(c.subset[i]) + (i + 1 == c.subset.size() || i % 16 == 15 ? "\n" : " ");
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace pdslab

#include "galcoh/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "galcoh/errors.hpp"

namespace galcoh {

const GLattice* Scenario::find_lattice(const std::string& n) const {
  for (const auto& [k, v] : lattices)
    if (k == n) return &v;
  return nullptr;
}

const TorusEntry* Scenario::find_torus(const std::string& n) const {
  for (const auto& t : tori)
    if (t.name == n) return &t;
  return nullptr;
}

const PlaceFamily* Scenario::find_places(const std::string& n) const {
  for (const auto& [k, v] : places)
    if (k == n) return &v;
  return nullptr;
}

const ShortExactSequence* Scenario::find_sequence(const std::string& n) const {
  for (const auto& [k, v] : sequences)
    if (k == n) return &v;
  return nullptr;
}

std::optional<std::string> Scenario::lattice_name(const GLattice& m) const {
  for (const auto& [k, v] : lattices)
    if (v == m) return k;
  return std::nullopt;
}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

// Splits on blanks and on any character in extra; columns are 1-based and offset by base.
std::vector<Token> tokenize(const std::string& s, std::size_t base, const std::string& extra = "") {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) { return c == ' ' || c == '\t' || extra.find(c) != std::string::npos; };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_sep(s[j])) ++j;
    out.push_back({s.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

struct BodyLine {
  std::size_t line = 0;
  std::string key;
  std::size_t key_column = 0;
  std::string value;
  std::size_t value_column = 0;
  std::vector<Token> tokens;  // whole line, for [compute]
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<BodyLine> body;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

class Parser {
 public:
  Parser(const std::string& name, const CochainLimits& limits) {
    sc_.name = name;
    sc_.limits = limits;
  }

  Scenario parse(const std::string& text) {
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::size_t first = raw.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (raw[first] == '[') {
        std::size_t close = raw.find(']', first);
        if (close == std::string::npos) throw ParseError("section header is missing ']'", line_no, first + 1);
        if (!trim(raw.substr(close + 1)).empty())
          throw ParseError("unexpected text after section header", line_no, close + 2);
        auto toks = tokenize(raw.substr(first + 1, close - first - 1), first + 2);
        if (toks.empty()) throw ParseError("empty section header", line_no, first + 1);
        Section s{toks[0].text, "", line_no, first + 1, {}};
        const bool named = s.kind == "lattice" || s.kind == "torus" || s.kind == "places" || s.kind == "sequence";
        if (named) {
          if (toks.size() != 2) throw ParseError("section [" + s.kind + "] needs exactly one name", line_no, first + 1);
          s.name = toks[1].text;
        } else if (s.kind == "group" || s.kind == "compute") {
          if (toks.size() != 1) throw ParseError("section [" + s.kind + "] takes no name", line_no, toks[1].column);
        } else {
          throw ParseError("unknown section '" + s.kind + "'", line_no, toks[0].column);
        }
        sections.push_back(std::move(s));
      } else {
        if (sections.empty()) throw ParseError("text outside any section", line_no, first + 1);
        BodyLine b;
        b.line = line_no;
        b.tokens = tokenize(raw, 1);
        if (sections.back().kind != "compute") {
          std::size_t eq = raw.find('=');
          if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, first + 1);
          b.key = trim(raw.substr(0, eq));
          b.key_column = first + 1;
          if (b.key.empty()) throw ParseError("missing key before '='", line_no, eq + 1);
          std::string rest = raw.substr(eq + 1);
          std::size_t vstart = rest.find_first_not_of(" \t");
          b.value = trim(rest);
          b.value_column = eq + 2 + (vstart == std::string::npos ? 0 : vstart);
        }
        sections.back().body.push_back(std::move(b));
      }
    }

    for (auto& s : sections) {
      if (s.kind != "group" && !sc_.group)
        throw ParseError("[group] must come before [" + s.kind + "]", s.line, s.column);
      if (s.kind == "group") {
        if (sc_.group) throw ParseError("duplicate [group] section", s.line, s.column);
        build_group(s);
      } else if (s.kind == "lattice") {
        check_new_name(s, sc_.find_lattice(s.name) != nullptr, "lattice");
        sc_.lattices.emplace_back(s.name, build_lattice(s));
      } else if (s.kind == "torus") {
        check_new_name(s, sc_.find_torus(s.name) != nullptr, "torus");
        sc_.tori.push_back(build_torus(s));
      } else if (s.kind == "places") {
        check_new_name(s, sc_.find_places(s.name) != nullptr, "place family");
        sc_.places.emplace_back(s.name, build_places(s));
      } else if (s.kind == "sequence") {
        check_new_name(s, sc_.find_sequence(s.name) != nullptr, "sequence");
        sc_.sequences.emplace_back(s.name, build_sequence(s));
      } else {
        for (const auto& b : s.body) sc_.directives.push_back(build_directive(b));
      }
    }
    if (!sc_.group) throw ParseError("missing [group] section", line_no, 1);
    return std::move(sc_);
  }

 private:
  Scenario sc_;

  static void check_new_name(const Section& s, bool exists, const std::string& what) {
    if (exists) throw ParseError("duplicate " + what + " name '" + s.name + "'", s.line, s.column);
  }

  static const BodyLine& single_key(const Section& s, const std::string& key) {
    const BodyLine* found = nullptr;
    for (const auto& b : s.body) {
      if (b.key != key) continue;
      if (found) throw ParseError("duplicate '" + key + "'", b.line, b.key_column);
      found = &b;
    }
    if (!found) throw ParseError("[" + s.kind + "] section needs '" + key + " = ...'", s.line, s.column);
    return *found;
  }

  static void only_keys(const Section& s, std::initializer_list<const char*> keys) {
    for (const auto& b : s.body)
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return b.key == k; }))
        throw ParseError("unexpected key '" + b.key + "' in [" + s.kind + "]", b.line, b.key_column);
  }

  static long long parse_int(const Token& t, std::size_t line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError("expected an integer, found '" + t.text + "'", line, t.column);
    return v;
  }

  static std::size_t parse_count(const Token& t, std::size_t line) {
    long long v = parse_int(t, line);
    if (v < 0) throw ParseError("expected a non-negative integer, found '" + t.text + "'", line, t.column);
    return static_cast<std::size_t>(v);
  }

  static void expect_args(const std::vector<Token>& toks, std::size_t n, std::size_t line, std::size_t column,
                          const std::string& usage) {
    if (toks.size() != n) throw ParseError("expected '" + usage + "'", line, toks.size() > n ? toks[n].column : column);
  }

  Subgroup parse_subgroup(const std::string& text, std::size_t line, std::size_t column) const {
    auto toks = tokenize(text, column, ",");
    if (toks.empty()) throw ParseError("empty subgroup", line, column);
    std::vector<std::size_t> el;
    for (const auto& t : toks) {
      std::size_t v = parse_count(t, line);
      if (v >= sc_.group->order())
        throw ParseError("element " + t.text + " is not in a group of order " + std::to_string(sc_.group->order()),
                         line, t.column);
      el.push_back(v);
    }
    try {
      return Subgroup(sc_.group, el);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line, column);
    }
  }

  // "0,1;0,2" with columns relative to the line.
  std::vector<Subgroup> parse_subgroup_list(const std::string& text, std::size_t line, std::size_t column) const {
    std::vector<Subgroup> out;
    std::size_t start = 0;
    while (true) {
      std::size_t semi = text.find(';', start);
      std::string part = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      out.push_back(parse_subgroup(part, line, column + start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return out;
  }

  // Text after the first token of a value, with its column.
  static std::pair<std::string, std::size_t> rest_after_first(const BodyLine& b) {
    std::size_t i = b.value.find_first_of(" \t");
    if (i == std::string::npos) return {"", b.value_column + b.value.size()};
    std::size_t j = b.value.find_first_not_of(" \t", i);
    if (j == std::string::npos) return {"", b.value_column + b.value.size()};
    return {b.value.substr(j), b.value_column + j};
  }

  void build_group(const Section& s) {
    only_keys(s, {"kind", "row"});
    const BodyLine& k = single_key(s, "kind");
    auto toks = tokenize(k.value, k.value_column);
    if (toks.empty()) throw ParseError("missing group kind", k.line, k.value_column);
    const std::string& kind = toks[0].text;
    auto cyclic = [&](const Token& t) {
      std::size_t n = parse_count(t, k.line);
      if (n == 0) throw ParseError("cyclic group order must be positive", k.line, t.column);
      if (n > kDefaultGroupOrderCap)
        throw ParseError("group order " + t.text + " exceeds the cap " + std::to_string(kDefaultGroupOrderCap), k.line,
                         t.column);
      return FiniteGroup::cyclic(n);
    };
    const bool has_rows = std::any_of(s.body.begin(), s.body.end(), [](const BodyLine& b) { return b.key == "row"; });
    if (kind != "table" && has_rows)
      throw ParseError("'row' lines are only allowed for kind = table", s.line, s.column);
    try {
      if (kind == "cyclic") {
        expect_args(toks, 2, k.line, k.value_column, "cyclic <n>");
        sc_.group = cyclic(toks[1]);
      } else if (kind == "klein_four") {
        expect_args(toks, 1, k.line, k.value_column, "klein_four");
        sc_.group = FiniteGroup::klein_four();
      } else if (kind == "product") {
        if (toks.size() != 5 || toks[1].text != "cyclic" || toks[3].text != "cyclic")
          throw ParseError("expected 'product cyclic <n> cyclic <m>'", k.line, k.value_column);
        auto a = cyclic(toks[2]), b = cyclic(toks[4]);
        if (a->order() * b->order() > kDefaultGroupOrderCap)
          throw ParseError("group order exceeds the cap " + std::to_string(kDefaultGroupOrderCap), k.line,
                           k.value_column);
        sc_.group = FiniteGroup::direct_product(a, b);
      } else if (kind == "table") {
        expect_args(toks, 1, k.line, k.value_column, "table");
        std::vector<std::vector<std::size_t>> table;
        std::size_t first_row_line = s.line;
        for (const auto& b : s.body) {
          if (b.key != "row") continue;
          if (table.empty()) first_row_line = b.line;
          std::vector<std::size_t> row;
          for (const auto& t : tokenize(b.value, b.value_column, ",")) row.push_back(parse_count(t, b.line));
          if (!table.empty() && row.size() != table.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(table.front().size()),
                             b.line, b.value_column);
          table.push_back(std::move(row));
        }
        if (table.empty()) throw ParseError("kind = table needs 'row = ...' lines", k.line, k.value_column);
        if (table.size() > kDefaultGroupOrderCap)
          throw ParseError("group order exceeds the cap " + std::to_string(kDefaultGroupOrderCap), first_row_line, 1);
        try {
          sc_.group = FiniteGroup::from_table(table);
        } catch (const DomainError& e) {
          throw ParseError(std::string("invalid group table: ") + e.what(), first_row_line, 1);
        }
      } else {
        throw ParseError("unknown group kind '" + kind + "'", k.line, toks[0].column);
      }
    } catch (const CapExceeded& e) {
      throw ParseError(e.what(), k.line, k.value_column);
    }
    sc_.group_description = k.value;
  }

  const GLattice& lattice_ref(const Token& t, std::size_t line) const {
    if (const GLattice* m = sc_.find_lattice(t.text)) return *m;
    throw ParseError("unknown lattice '" + t.text + "'", line, t.column);
  }

  TorusEntry& torus_ref(const Token& t, std::size_t line) {
    for (auto& e : sc_.tori)
      if (e.name == t.text) return e;
    throw ParseError("unknown torus '" + t.text + "'", line, t.column);
  }

  static const FlasqueResolution& resolution_of(TorusEntry& e) {
    if (!e.resolution) e.resolution = flasque_resolution(e.torus);
    return *e.resolution;
  }

  GLattice build_lattice(const Section& s) {
    only_keys(s, {"kind", "gen"});
    const BodyLine& k = single_key(s, "kind");
    auto toks = tokenize(k.value, k.value_column);
    if (toks.empty()) throw ParseError("missing lattice kind", k.line, k.value_column);
    const std::string& kind = toks[0].text;
    const auto& g = sc_.group;
    const bool has_gens = std::any_of(s.body.begin(), s.body.end(), [](const BodyLine& b) { return b.key == "gen"; });
    if (kind != "from_matrices" && has_gens)
      throw ParseError("'gen' lines are only allowed for kind = from_matrices", s.line, s.column);
    if (kind == "trivial") {
      expect_args(toks, 2, k.line, k.value_column, "trivial <rank>");
      return GLattice::trivial(g, parse_count(toks[1], k.line));
    }
    if (kind == "regular") {
      expect_args(toks, 1, k.line, k.value_column, "regular");
      return GLattice::regular(g);
    }
    if (kind == "permutation") {
      auto [rest, col] = rest_after_first(k);
      return GLattice::permutation(g, parse_subgroup(rest, k.line, col));
    }
    if (kind == "dual") {
      expect_args(toks, 2, k.line, k.value_column, "dual <name>");
      return lattice_ref(toks[1], k.line).dual();
    }
    if (kind == "sum") {
      expect_args(toks, 3, k.line, k.value_column, "sum <name> <name>");
      return GLattice::direct_sum({lattice_ref(toks[1], k.line), lattice_ref(toks[2], k.line)});
    }
    if (kind == "norm_quotient") {
      expect_args(toks, 1, k.line, k.value_column, "norm_quotient");
      return norm_one_torus(g).torus.characters();
    }
    if (kind == "characters" || kind == "flasque_quotient" || kind == "flasque_middle") {
      expect_args(toks, 2, k.line, k.value_column, kind + " <torus>");
      TorusEntry& e = torus_ref(toks[1], k.line);
      if (kind == "characters") return e.torus.characters();
      const auto& r = resolution_of(e);
      return kind == "flasque_quotient" ? r.sequence.quotient() : r.sequence.middle();
    }
    if (kind == "from_matrices") {
      expect_args(toks, 1, k.line, k.value_column, "from_matrices");
      std::vector<IntMatrix> mats;
      std::size_t rank = 0;
      for (const auto& b : s.body) {
        if (b.key != "gen") continue;
        auto entries = tokenize(b.value, b.value_column, ",;[]");
        std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
        if (entries.empty() || r * r != entries.size())
          throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, not a square number", b.line,
                           b.value_column);
        if (!mats.empty() && r != rank)
          throw ParseError("matrix has rank " + std::to_string(r) + ", expected " + std::to_string(rank), b.line,
                           b.value_column);
        rank = r;
        IntMatrix m(r, r);
        for (std::size_t i = 0; i < entries.size(); ++i) m(i / r, i % r) = static_cast<long>(parse_int(entries[i], b.line));
        mats.push_back(std::move(m));
      }
      if (mats.size() != g->generators().size())
        throw ParseError("expected one 'gen' line per group generator (" + std::to_string(g->generators().size()) +
                             "), found " + std::to_string(mats.size()),
                         k.line, k.value_column);
      try {
        return GLattice::from_generator_matrices(g, mats);
      } catch (const DomainError& e) {
        throw ParseError(std::string("matrices do not define an action: ") + e.what(), k.line, k.value_column);
      }
    }
    throw ParseError("unknown lattice kind '" + kind + "'", k.line, toks[0].column);
  }

  TorusEntry build_torus(const Section& s) {
    only_keys(s, {"kind"});
    const BodyLine& k = single_key(s, "kind");
    auto toks = tokenize(k.value, k.value_column);
    if (toks.empty()) throw ParseError("missing torus kind", k.line, k.value_column);
    TorusEntry e;
    e.name = s.name;
    e.kind = toks[0].text;
    const auto& g = sc_.group;
    if (e.kind == "norm_one") {
      expect_args(toks, 1, k.line, k.value_column, "norm_one");
      e.subgroups = {g->trivial_subgroup()};
      e.norm_sequence = norm_one_torus(g, s.name);
      e.torus = e.norm_sequence->torus;
    } else if (e.kind == "multinorm" || e.kind == "quasi_trivial") {
      auto [rest, col] = rest_after_first(k);
      if (rest.empty()) throw ParseError("expected '" + e.kind + " <H1;H2;...>'", k.line, col);
      e.subgroups = parse_subgroup_list(rest, k.line, col);
      if (e.kind == "multinorm") {
        e.norm_sequence = multinorm_torus(g, e.subgroups, s.name);
        e.torus = e.norm_sequence->torus;
      } else {
        e.torus = quasi_trivial(g, e.subgroups, s.name).first;
      }
    } else {
      throw ParseError("unknown torus kind '" + e.kind + "'", k.line, toks[0].column);
    }
    return e;
  }

  PlaceFamily build_places(const Section& s) {
    only_keys(s, {"place"});
    std::vector<Place> places;
    for (const auto& b : s.body) {
      std::size_t colon = b.value.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected 'place = <label> : <element indices>'", b.line, b.value_column);
      std::string label = trim(b.value.substr(0, colon));
      if (label.empty()) throw ParseError("place label is empty", b.line, b.value_column);
      std::string elems = b.value.substr(colon + 1);
      places.push_back({label, parse_subgroup(elems, b.line, b.value_column + colon + 1)});
    }
    return PlaceFamily(sc_.group, s.name, std::move(places));
  }

  ShortExactSequence build_sequence(const Section& s) {
    only_keys(s, {"kind"});
    const BodyLine& k = single_key(s, "kind");
    auto toks = tokenize(k.value, k.value_column);
    if (toks.empty()) throw ParseError("missing sequence kind", k.line, k.value_column);
    const std::string& kind = toks[0].text;
    if (kind == "norm") {
      expect_args(toks, 2, k.line, k.value_column, "norm <torus>");
      TorusEntry& e = torus_ref(toks[1], k.line);
      if (!e.norm_sequence) throw ParseError("torus '" + e.name + "' has no norm sequence", k.line, toks[1].column);
      return e.norm_sequence->sequence;
    }
    if (kind == "flasque") {
      expect_args(toks, 2, k.line, k.value_column, "flasque <torus>");
      return resolution_of(torus_ref(toks[1], k.line)).sequence;
    }
    if (kind == "comparison") {
      expect_args(toks, 3, k.line, k.value_column, "comparison <norm_one torus> <multinorm torus>");
      TorusEntry& a = torus_ref(toks[1], k.line);
      TorusEntry& b = torus_ref(toks[2], k.line);
      if (a.kind != "norm_one") throw ParseError("torus '" + a.name + "' is not norm_one", k.line, toks[1].column);
      if (b.kind != "multinorm") throw ParseError("torus '" + b.name + "' is not multinorm", k.line, toks[2].column);
      try {
        return multinorm_comparison(*a.norm_sequence, *b.norm_sequence, b.subgroups);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), k.line, k.value_column);
      }
    }
    if (kind == "split") {
      expect_args(toks, 3, k.line, k.value_column, "split <lattice> <lattice>");
      return ShortExactSequence::split(lattice_ref(toks[1], k.line), lattice_ref(toks[2], k.line));
    }
    throw ParseError("unknown sequence kind '" + kind + "'", k.line, toks[0].column);
  }

  void check_degree(long long d, const Token& t, std::size_t line) const {
    if (d < 0) throw ParseError("degree must be non-negative", line, t.column);
    if (static_cast<std::size_t>(d) > sc_.limits.max_degree)
      throw ParseError("degree " + std::to_string(d) + " exceeds the maximum degree " +
                           std::to_string(sc_.limits.max_degree),
                       line, t.column);
  }

  Directive build_directive(const BodyLine& b) {
    const auto& t = b.tokens;
    Directive d;
    d.line = b.line;
    for (std::size_t i = 0; i < t.size(); ++i) d.text += (i ? " " : "") + t[i].text;
    const std::string& w = t[0].text;
    const std::size_t col = t[0].column;
    auto need = [&](std::size_t n, const std::string& usage) { expect_args(t, n, b.line, col, usage); };
    auto lattice = [&](const Token& x) {
      lattice_ref(x, b.line);
      d.names.push_back(x.text);
    };
    auto torus = [&](const Token& x) {
      torus_ref(x, b.line);
      d.names.push_back(x.text);
    };
    auto places = [&](const Token& x) {
      if (!sc_.find_places(x.text)) throw ParseError("unknown place family '" + x.text + "'", b.line, x.column);
      d.names.push_back(x.text);
    };
    auto sequence = [&](const Token& x) {
      if (!sc_.find_sequence(x.text)) throw ParseError("unknown sequence '" + x.text + "'", b.line, x.column);
      d.names.push_back(x.text);
    };
    if (w == "h") {
      need(3, "h <i> <lattice>");
      d.kind = DirectiveKind::Cohomology;
      d.degree = static_cast<int>(parse_int(t[1], b.line));
      check_degree(d.degree, t[1], b.line);
      lattice(t[2]);
    } else if (w == "tate") {
      need(3, "tate <-1|0> <lattice>");
      d.kind = DirectiveKind::Tate;
      d.degree = static_cast<int>(parse_int(t[1], b.line));
      if (d.degree != -1 && d.degree != 0) throw ParseError("tate degree must be -1 or 0", b.line, t[1].column);
      lattice(t[2]);
    } else if (w == "flasque") {
      need(2, "flasque <lattice>");
      d.kind = DirectiveKind::Flasque;
      lattice(t[1]);
    } else if (w == "resolution" || w == "br") {
      need(2, w + " <torus>");
      d.kind = w == "br" ? DirectiveKind::Br : DirectiveKind::Resolution;
      torus(t[1]);
      if (d.kind == DirectiveKind::Br) check_degree(1, t[0], b.line);
    } else if (w == "sha") {
      need(4, "sha <i> <lattice> <places>");
      d.kind = DirectiveKind::Sha;
      d.degree = static_cast<int>(parse_int(t[1], b.line));
      check_degree(d.degree, t[1], b.line);
      lattice(t[2]);
      places(t[3]);
    } else if (w == "coverage") {
      need(2, "coverage <places>");
      d.kind = DirectiveKind::Coverage;
      places(t[1]);
    } else if (w == "transfer") {
      need(4, "transfer <i> <sequence> <places>");
      d.kind = DirectiveKind::Transfer;
      d.degree = static_cast<int>(parse_int(t[1], b.line));
      check_degree(d.degree + 1LL, t[1], b.line);
      sequence(t[2]);
      places(t[3]);
    } else if (w == "connecting") {
      need(3, "connecting <i> <sequence>");
      d.kind = DirectiveKind::Connecting;
      d.degree = static_cast<int>(parse_int(t[1], b.line));
      check_degree(d.degree + 1LL, t[1], b.line);
      sequence(t[2]);
    } else {
      throw ParseError("unknown directive '" + w + "'", b.line, col);
    }
    return d;
  }
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name, const CochainLimits& limits) {
  return Parser(name, limits).parse(text);
}

const std::string& builtin_paper_biquadratic_text() {
  static const std::string text = R"(# Klein four G = Gal(M/L) of a biquadratic extension.
# Elements: 0 = e, 1 = s, 2 = t, 3 = st.

[group]
kind = klein_four

[lattice Z]
kind = trivial 1

[lattice Z2]
kind = trivial 2

# Norm-one torus R^1_{M/L} G_m and the multinorm torus of the three quadratic subfields.
[torus Q]
kind = norm_one

[torus Qt]
kind = multinorm 0,1;0,2;0,3

[lattice Z_G]
kind = regular

[lattice Q_hat]
kind = characters Q

[lattice Qt_hat]
kind = characters Qt

[lattice R_hat]
kind = flasque_middle Q

[lattice S_hat]
kind = flasque_quotient Q

# 0 -> Z -> Z[G] -> Q_hat -> 0
[sequence norm]
kind = norm Q

# 0 -> Q_hat -> R_hat -> S_hat -> 0
[sequence flasque]
kind = flasque Q

# 0 -> Q_hat -> Qt_hat -> Z^2 -> 0
[sequence comparison]
kind = comparison Q Qt

[places order_two]
place = v_s : 0,1
place = v_t : 0,2
place = v_st : 0,3

[compute]
h 0 Z
h 1 Z
h 2 Z
h 3 Z
h 1 Q_hat
h 2 Q_hat
connecting 2 norm
resolution Q
flasque S_hat
h 1 S_hat
br Q
h 1 Qt_hat
h 2 Qt_hat
sha 1 Q_hat order_two
sha 2 Q_hat order_two
sha 1 S_hat order_two
sha 2 S_hat order_two
sha 2 Qt_hat order_two
coverage order_two
transfer 1 flasque order_two
transfer 1 comparison order_two
)";
  return text;
}

Scenario builtin_paper_biquadratic(const CochainLimits& limits) {
  return parse_scenario(builtin_paper_biquadratic_text(), "paper-biquadratic", limits);
}

}  // namespace galcoh

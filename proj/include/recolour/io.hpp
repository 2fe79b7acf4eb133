#pragma once

// Text formats. Vertices and elements are 1-based in files.
//
//   instance:  p recolour <n> <m> <k> <ell>
//              e <u> <v>            (m lines)
//              a <v> <colour>       (one per vertex)
//              b <v> <colour>       (one per vertex)
//   witness:   r <v> <colour>       (one line per step)
//   hitting:   h <n> <m> <p>
//              f <e1> <e2> ...      (m lines)
//   roles:     role <v> <label>
//
// Blank lines and lines starting with '#' are ignored everywhere.

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "recolour/graph.hpp"
#include "recolour/hardness.hpp"

namespace recolour {

class ParseError : public RecolourError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : RecolourError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next record as a token stream; false at end of input.
  bool next(std::istringstream& record) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      const auto start = text.find_first_not_of(" \t\r");
      if (start == std::string::npos || text[start] == '#') continue;
      record.clear();
      record.str(text);
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

  template <typename T>
  T read(std::istringstream& record, const char* what) {
    std::string tok;
    if (!(record >> tok)) fail(std::string("missing ") + what);
    if (tok.front() == '-') fail(std::string("negative ") + what);
    T value{};
    std::istringstream conv(tok);
    if (!(conv >> value) || !conv.eof()) fail(std::string("malformed ") + what);
    return value;
  }

  void expect_end(std::istringstream& record) {
    std::string extra;
    if (record >> extra) fail("unexpected trailing token '" + extra + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what);
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace detail

inline ReconfigInstance read_instance(std::istream& in) {
  detail::LineReader reader(in);
  std::istringstream rec;
  if (!reader.next(rec)) throw ParseError(reader.line(), "missing header");
  std::string tag, kind;
  rec >> tag >> kind;
  if (tag != "p" || kind != "recolour") {
    reader.fail("expected header 'p recolour <n> <m> <k> <ell>'");
  }
  const auto n = reader.read<std::size_t>(rec, "vertex count");
  const auto m = reader.read<std::size_t>(rec, "edge count");
  const auto k = reader.read<int>(rec, "palette size");
  const auto ell = reader.read<std::size_t>(rec, "budget");
  reader.expect_end(rec);
  if (k < 1) reader.fail("palette size must be at least 1");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Colour> alpha(n, 0), beta(n, 0);
  auto vertex = [&](std::istringstream& r) {
    const auto v = reader.read<std::size_t>(r, "vertex");
    if (v < 1 || v > n) {
      reader.fail("vertex " + std::to_string(v) + " outside 1.." +
                  std::to_string(n));
    }
    return v - 1;
  };
  while (reader.next(rec)) {
    rec >> tag;
    if (tag == "p") {
      reader.fail("duplicate header");
    } else if (tag == "e") {
      const Vertex u = vertex(rec);
      const Vertex v = vertex(rec);
      reader.expect_end(rec);
      if (u == v) reader.fail("self-loop at vertex " + std::to_string(u + 1));
      edges.emplace_back(u, v);
    } else if (tag == "a" || tag == "b") {
      auto& target = tag == "a" ? alpha : beta;
      const Vertex v = vertex(rec);
      const auto c = reader.read<long long>(rec, "colour");
      reader.expect_end(rec);
      if (c < 1 || c > k) {
        reader.fail("colour " + std::to_string(c) + " outside 1.." +
                    std::to_string(k));
      }
      if (target[v] != 0) {
        reader.fail("duplicate '" + tag + "' assignment for vertex " +
                    std::to_string(v + 1));
      }
      target[v] = static_cast<Colour>(c);
    } else {
      reader.fail("unknown record '" + tag + "'");
    }
  }
  if (edges.size() != m) {
    reader.fail("header declares " + std::to_string(m) + " edges but " +
                std::to_string(edges.size()) + " were given");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alpha[v] == 0) {
      reader.fail("missing 'a' assignment for vertex " + std::to_string(v + 1));
    }
    if (beta[v] == 0) {
      reader.fail("missing 'b' assignment for vertex " + std::to_string(v + 1));
    }
  }
  return ReconfigInstance(Graph(n, edges), k, Colouring(alpha, k),
                          Colouring(beta, k), ell);
}

inline void write_instance(std::ostream& out, const ReconfigInstance& inst) {
  const auto edges = inst.graph.edges();
  out << "p recolour " << inst.graph.num_vertices() << ' ' << edges.size()
      << ' ' << inst.k << ' ' << inst.ell << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    out << "a " << v + 1 << ' ' << inst.alpha[v] << '\n';
  }
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    out << "b " << v + 1 << ' ' << inst.beta[v] << '\n';
  }
}

inline RecolouringSequence read_witness(std::istream& in, std::size_t n, int k) {
  detail::LineReader reader(in);
  std::istringstream rec;
  RecolouringSequence seq;
  std::string tag;
  while (reader.next(rec)) {
    rec >> tag;
    if (tag != "r") reader.fail("expected 'r <v> <colour>'");
    const auto v = reader.read<std::size_t>(rec, "vertex");
    const auto c = reader.read<long long>(rec, "colour");
    reader.expect_end(rec);
    if (v < 1 || v > n) {
      reader.fail("vertex " + std::to_string(v) + " outside 1.." +
                  std::to_string(n));
    }
    if (c < 1 || c > k) {
      reader.fail("colour " + std::to_string(c) + " outside 1.." +
                  std::to_string(k));
    }
    seq.push_back({v - 1, static_cast<Colour>(c)});
  }
  return seq;
}

inline void write_witness(std::ostream& out, const RecolouringSequence& seq) {
  for (const auto& s : seq) out << "r " << s.vertex + 1 << ' ' << s.colour << '\n';
}

inline HittingSetInstance read_hitting_set(std::istream& in) {
  detail::LineReader reader(in);
  std::istringstream rec;
  if (!reader.next(rec)) throw ParseError(reader.line(), "missing header");
  std::string tag;
  rec >> tag;
  if (tag != "h") reader.fail("expected header 'h <n> <m> <p>'");
  HittingSetInstance hs;
  hs.universe_size = reader.read<std::size_t>(rec, "universe size");
  const auto m = reader.read<std::size_t>(rec, "family size");
  hs.budget = reader.read<std::size_t>(rec, "budget");
  reader.expect_end(rec);
  while (reader.next(rec)) {
    rec >> tag;
    if (tag != "f") reader.fail("expected 'f <e1> <e2> ...'");
    std::vector<std::size_t> set;
    while (rec >> std::ws && !rec.eof()) {
      const auto e = reader.read<std::size_t>(rec, "element");
      if (e < 1 || e > hs.universe_size) {
        reader.fail("element " + std::to_string(e) + " outside 1.." +
                    std::to_string(hs.universe_size));
      }
      set.push_back(e);
    }
    if (set.empty()) reader.fail("empty set");
    hs.family.push_back(std::move(set));
  }
  if (hs.family.size() != m) {
    reader.fail("header declares " + std::to_string(m) + " sets but " +
                std::to_string(hs.family.size()) + " were given");
  }
  return hs;
}

inline void write_hitting_set(std::ostream& out, const HittingSetInstance& hs) {
  out << "h " << hs.universe_size << ' ' << hs.family.size() << ' ' << hs.budget
      << '\n';
  for (const auto& f : hs.family) {
    out << 'f';
    for (std::size_t e : f) out << ' ' << e;
    out << '\n';
  }
}

inline void write_roles(std::ostream& out, const GadgetInstance& gi) {
  for (Vertex v = 0; v < gi.roles.size(); ++v) {
    out << "role " << v + 1 << ' ' << gi.roles[v] << '\n';
  }
}

}  // namespace recolour

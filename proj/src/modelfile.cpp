#include "ptc/modelfile.hpp"

#include <fstream>
#include <sstream>

#include "ptc/errors.hpp"
#include "ptc/expr.hpp"

namespace ptc {

namespace {

struct Line {
  int number = 0;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& what, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + " expects an integer, got '" + s + "'", line);
  }
}

}  // namespace

CdgaPresentation parse_model(const std::string& text) {
  std::map<std::string, std::vector<Line>> sections;
  {
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string line = trim(raw);
      if (line.empty() || line[0] == '#') continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ParseError("unterminated section header", number);
        current = trim(line.substr(1, line.size() - 2));
        if (current != "generators" && current != "differential" && current != "meta") {
          throw ParseError("unknown section '" + current + "'", number);
        }
        sections[current];
        continue;
      }
      if (current.empty()) throw ParseError("entry before any section header", number);
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'key = value'", number);
      Line entry;
      entry.number = number;
      entry.key = trim(line.substr(0, eq));
      entry.value = trim(line.substr(eq + 1));
      if (entry.key.empty()) throw ParseError("empty key", number);
      sections[current].push_back(std::move(entry));
    }
  }

  GeneratorList gens;
  for (const Line& entry : sections["generators"]) {
    if (!valid_identifier(entry.key)) {
      throw ParseError("invalid generator name '" + entry.key + "'", entry.number);
    }
    std::istringstream val(entry.value);
    std::string degree_tok, block_tok, extra;
    val >> degree_tok >> block_tok >> extra;
    if (degree_tok.empty()) throw ParseError("missing degree", entry.number);
    if (!extra.empty()) throw ParseError("trailing tokens after '" + block_tok + "'", entry.number);
    Generator g;
    g.name = entry.key;
    g.degree = parse_int(degree_tok, "generator degree", entry.number);
    if (block_tok.empty() || block_tok == "fiber") {
      g.block = Block::fiber;
    } else if (block_tok == "base") {
      g.block = Block::base;
    } else {
      throw ParseError("block must be 'base' or 'fiber', got '" + block_tok + "'", entry.number);
    }
    for (const Generator& seen : gens) {
      if (seen.name == g.name) {
        throw ParseError("duplicate generator '" + g.name + "'", entry.number);
      }
    }
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw ParseError("model declares no generators");

  std::vector<GradedPoly> diffs(gens.size(), GradedPoly::zero());
  std::vector<bool> seen(gens.size(), false);
  for (const Line& entry : sections["differential"]) {
    int index = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].name == entry.key) index = static_cast<int>(i);
    }
    if (index < 0) {
      throw ParseError("differential for unknown generator '" + entry.key + "'", entry.number);
    }
    if (seen[static_cast<std::size_t>(index)]) {
      throw ParseError("duplicate differential for '" + entry.key + "'", entry.number);
    }
    seen[static_cast<std::size_t>(index)] = true;
    try {
      diffs[static_cast<std::size_t>(index)] = parse_expression(entry.value, gens);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), entry.number);
    }
  }

  Meta meta;
  for (const Line& entry : sections["meta"]) {
    if (entry.key == "name") {
      meta.name = entry.value;
    } else if (entry.key == "declared_top") {
      meta.declared_top = parse_int(entry.value, "declared_top", entry.number);
    } else if (entry.key == "truncated_above") {
      meta.truncated_above = parse_int(entry.value, "truncated_above", entry.number);
    } else if (entry.key == "fiber_dim") {
      meta.fiber_dim = parse_int(entry.value, "fiber_dim", entry.number);
    } else if (entry.key == "base_dim") {
      meta.base_dim = parse_int(entry.value, "base_dim", entry.number);
    } else if (entry.key.rfind("assert.", 0) == 0) {
      std::string flag = entry.key.substr(7);
      if (flag.empty()) throw ParseError("empty assertion flag", entry.number);
      meta.assertions[flag] = entry.value;
    } else {
      throw ParseError("unknown meta key '" + entry.key + "'", entry.number);
    }
  }

  return CdgaPresentation(std::move(gens), std::move(diffs), std::move(meta));
}

CdgaPresentation load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const CdgaPresentation& p) {
  std::ostringstream out;
  const Meta& meta = p.meta();
  out << "[meta]\n";
  if (!meta.name.empty()) out << "name = " << meta.name << "\n";
  if (meta.declared_top) out << "declared_top = " << *meta.declared_top << "\n";
  if (meta.truncated_above) out << "truncated_above = " << *meta.truncated_above << "\n";
  if (meta.fiber_dim) out << "fiber_dim = " << *meta.fiber_dim << "\n";
  if (meta.base_dim) out << "base_dim = " << *meta.base_dim << "\n";
  for (const auto& [flag, justification] : meta.assertions) {
    out << "assert." << flag << " = " << justification << "\n";
  }
  out << "\n[generators]\n";
  for (int i = 0; i < p.generator_count(); ++i) {
    const Generator& g = p.generator(i);
    out << g.name << " = " << g.degree << " " << (g.block == Block::base ? "base" : "fiber")
        << "\n";
  }
  out << "\n[differential]\n";
  for (int i = 0; i < p.generator_count(); ++i) {
    if (p.differential(i).is_zero()) continue;
    out << p.generator(i).name << " = " << print_poly(p.differential(i), p.generators()) << "\n";
  }
  return out.str();
}

}  // namespace ptc

#include "golodkit/cli/session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "golodkit/error.hpp"
#include "golodkit/exactmath/parser.hpp"
#include "golodkit/ringkit/constructions.hpp"

namespace golodkit::cli {

namespace {

struct Item {
  std::string text;
  int column = 0;  // 1-based column of the first character of text
  bool quoted = false;
};

struct Entry {
  std::string key;
  std::vector<Item> items;
  int line = 0;
};

struct Block {
  std::string kind;  // field | ring | construct | module | class
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

class Located {
 public:
  explicit Located(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(int line, int column, const std::string& msg) const {
    std::string where = source_ + ":" + std::to_string(line);
    if (column > 0) where += ":" + std::to_string(column);
    throw ValidationError(where + ": " + msg);
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits a value into quoted strings and bare tokens (separated by commas or
// whitespace).
std::vector<Item> split_value(const Located& loc, const std::string& line, std::size_t start, int lineno) {
  std::vector<Item> items;
  std::size_t i = start;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string::npos) loc.fail(lineno, static_cast<int>(i) + 1, "unterminated string");
      items.push_back({line.substr(i + 1, close - i - 1), static_cast<int>(i) + 2, true});
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',' && line[j] != '#' &&
           line[j] != '"') {
      ++j;
    }
    items.push_back({line.substr(i, j - i), static_cast<int>(i) + 1, false});
    i = j;
  }
  return items;
}

std::vector<Block> tokenize(const Located& loc, const std::string& text) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t"));
    if (line[0] == '[') {
      const std::size_t close = line.find(']');
      if (close == std::string::npos) loc.fail(lineno, indent + 1, "unterminated section header");
      const std::string rest = trim(line.substr(close + 1));
      if (!rest.empty() && rest[0] != '#') loc.fail(lineno, indent + static_cast<int>(close) + 2, "text after section header");
      std::istringstream hdr(line.substr(1, close - 1));
      Block b;
      b.line = lineno;
      hdr >> b.kind >> b.name;
      std::string extra;
      if (hdr >> extra) loc.fail(lineno, indent + 1, "section header takes at most one name");
      static const std::set<std::string> kinds{"field", "ring", "construct", "module", "class"};
      if (!kinds.count(b.kind)) loc.fail(lineno, indent + 2, "unknown section [" + b.kind + "]");
      blocks.push_back(std::move(b));
      continue;
    }
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) loc.fail(lineno, indent + 1, "expected key = value");
    if (blocks.empty()) loc.fail(lineno, indent + 1, "entry outside any section");
    Entry e;
    e.line = lineno;
    e.key = trim(raw.substr(0, eq));
    if (e.key.empty()) loc.fail(lineno, indent + 1, "missing key");
    e.items = split_value(loc, raw, eq + 1, lineno);
    if (e.items.empty()) loc.fail(lineno, static_cast<int>(eq) + 2, "missing value for '" + e.key + "'");
    blocks.back().entries.push_back(std::move(e));
  }
  return blocks;
}

void check_keys(const Located& loc, const Block& b, const std::set<std::string>& allowed) {
  for (const auto& e : b.entries) {
    if (!allowed.count(e.key)) loc.fail(e.line, 1, "unknown key '" + e.key + "' in [" + b.kind + "]");
  }
}

const Item& single(const Located& loc, const Entry& e) {
  if (e.items.size() != 1) loc.fail(e.line, e.items[1].column, "'" + e.key + "' takes a single value");
  return e.items.front();
}

Field parse_field(const Located& loc, const Block& b) {
  check_keys(loc, b, {"name"});
  if (b.entries.empty()) loc.fail(b.line, 1, "[field] needs name = QQ or name = GF(p)");
  const Item& it = single(loc, b.entries.back());
  if (it.text == "QQ" || it.text == "Q") return Field::rationals();
  if (it.text.rfind("GF(", 0) == 0 && it.text.back() == ')') {
    const std::string digits = it.text.substr(3, it.text.size() - 4);
    if (!digits.empty() && digits.size() < 11 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const unsigned long long p = std::stoull(digits);
      try {
        return Field::prime(static_cast<std::uint32_t>(p > 0xffffffffULL ? 0 : p));
      } catch (const ValidationError& err) {
        loc.fail(b.entries.back().line, it.column, err.what());
      }
    }
  }
  loc.fail(b.entries.back().line, it.column, "unknown field '" + it.text + "' (expected QQ or GF(p))");
}

Polynomial parse_located(const Located& loc, const Entry& e, const Item& it, const ContextPtr& ctx) {
  try {
    return parse_poly(it.text, ctx);
  } catch (const ParseError& err) {
    loc.fail(e.line, it.column + static_cast<int>(err.position()), err.what());
  } catch (const ValidationError& err) {
    loc.fail(e.line, it.column, err.what());
  }
}

RingPtr parse_ring(const Located& loc, const Block& b, Field field) {
  check_keys(loc, b, {"vars", "relations"});
  std::vector<std::string> vars;
  std::vector<std::pair<const Entry*, const Item*>> rels;
  int vars_line = 0;
  for (const auto& e : b.entries) {
    if (e.key == "vars") {
      vars_line = e.line;
      for (const auto& it : e.items) vars.push_back(it.text);
    } else {
      for (const auto& it : e.items) rels.emplace_back(&e, &it);
    }
  }
  if (vars_line == 0) loc.fail(b.line, 1, "[ring] needs vars = ...");
  ContextPtr ctx;
  try {
    ctx = make_context(vars, field);
  } catch (const ValidationError& err) {
    loc.fail(vars_line, 1, err.what());
  }
  std::vector<Polynomial> polys;
  for (const auto& [e, it] : rels) polys.push_back(parse_located(loc, *e, *it, ctx));
  // Per-relation precheck so the error points at the offending string.
  for (std::size_t i = 0; i < polys.size(); ++i) {
    try {
      make_ring(field, vars, std::vector<Polynomial>{polys[i]});
    } catch (const ValidationError& err) {
      const std::string msg = err.what();
      if (msg.find("Artinian") == std::string::npos) loc.fail(rels[i].first->line, rels[i].second->column, msg);
    }
  }
  try {
    return std::make_shared<const QuotientRing>(make_ring(field, vars, std::move(polys)));
  } catch (const ValidationError& err) {
    loc.fail(b.line, 1, std::string("[ring") + (b.name.empty() ? "" : " " + b.name) + "]: " + err.what());
  }
}

ModulePresentation parse_module(const Located& loc, const Block& b, const RingPtr& r) {
  check_keys(loc, b, {"ideal", "degrees", "column"});
  std::vector<RingElement> ideal;
  std::vector<int> degrees;
  std::vector<std::vector<RingElement>> columns;
  bool has_ideal = false, has_degrees = false;
  auto element = [&](const Entry& e, const Item& it) {
    const Polynomial p = parse_located(loc, e, it, r->context());
    try {
      return r->element(p);
    } catch (const ValidationError& err) {
      loc.fail(e.line, it.column, err.what());
    }
  };
  for (const auto& e : b.entries) {
    if (e.key == "ideal") {
      has_ideal = true;
      for (const auto& it : e.items) ideal.push_back(element(e, it));
    } else if (e.key == "degrees") {
      has_degrees = true;
      for (const auto& it : e.items) {
        try {
          std::size_t used = 0;
          degrees.push_back(std::stoi(it.text, &used));
          if (used != it.text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          loc.fail(e.line, it.column, "generator degree must be an integer, got '" + it.text + "'");
        }
      }
    } else {
      std::vector<RingElement> col;
      for (const auto& it : e.items) col.push_back(element(e, it));
      columns.push_back(std::move(col));
    }
  }
  const std::string label = b.name;
  try {
    if (has_ideal) {
      if (has_degrees || !columns.empty()) loc.fail(b.line, 1, "module takes either ideal = ... or degrees/column");
      return ModulePresentation::quotient_by_ideal(r, ideal, label);
    }
    if (!has_degrees) loc.fail(b.line, 1, "module needs ideal = ... or degrees = ... with column = ... entries");
    return ModulePresentation::from_matrix(r, degrees, columns, label);
  } catch (const ValidationError& err) {
    const std::string msg = err.what();
    if (msg.rfind(loc.source() + ":", 0) == 0) throw;
    loc.fail(b.line, 1, "[module " + b.name + "]: " + msg);
  }
}

}  // namespace

const ModulePresentation& Session::module(const std::string& name) const {
  const auto it = modules.find(name);
  if (it == modules.end()) {
    std::string known;
    for (const auto& n : module_order) known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown module '" + name + "' (session defines " + known + ")");
  }
  return it->second;
}

Session parse_session(const std::string& text, const std::string& source) {
  const Located loc(source);
  const std::vector<Block> blocks = tokenize(loc, text);
  Session s;
  s.source = source;
  s.field = Field::rationals();

  int field_blocks = 0;
  for (const auto& b : blocks) {
    if (b.kind != "field") continue;
    if (++field_blocks > 1) loc.fail(b.line, 1, "duplicate [field]");
    s.field = parse_field(loc, b);
  }

  const Block* main_ring = nullptr;
  std::vector<const Block*> modules;
  for (const auto& b : blocks) {
    if (b.kind == "ring") {
      if (b.name.empty()) {
        if (main_ring) loc.fail(b.line, 1, "duplicate unnamed [ring]");
        main_ring = &b;
      } else {
        if (s.named_rings.count(b.name)) loc.fail(b.line, 1, "duplicate [ring " + b.name + "]");
        s.named_rings[b.name] = parse_ring(loc, b, s.field);
      }
    } else if (b.kind == "construct") {
      if (s.construct) loc.fail(b.line, 1, "duplicate [construct]");
      check_keys(loc, b, {"op", "left", "right", "ring"});
      ConstructSpec c;
      c.line = b.line;
      for (const auto& e : b.entries) {
        const std::string v = single(loc, e).text;
        if (e.key == "op") c.op = v;
        if (e.key == "left" || e.key == "ring") c.left = v;
        if (e.key == "right") c.right = v;
      }
      s.construct = c;
    } else if (b.kind == "module") {
      if (b.name.empty()) loc.fail(b.line, 1, "[module] needs a name");
      if (b.name == "k" || b.name == "R") loc.fail(b.line, 1, "module names k and R are reserved");
      modules.push_back(&b);
    } else if (b.kind == "class") {
      if (s.class_spec) loc.fail(b.line, 1, "duplicate [class]");
      ClassSpec c;
      c.line = b.line;
      for (const auto& e : b.entries) {
        const Item& it = single(loc, e);
        if (e.key == "kind") {
          c.kind = it.text;
        } else if (e.key == "generalized_golod") {
          if (it.text != "true" && it.text != "false") loc.fail(e.line, it.column, "expected true or false");
          c.generalized_golod = it.text == "true";
        } else {
          c.params[e.key] = it.text;
        }
      }
      static const std::set<std::string> kinds{"golod", "compressed", "stretched", "kustin", "pade", "user"};
      if (!kinds.count(c.kind)) loc.fail(b.line, 1, "[class] kind must be one of golod, compressed, stretched, kustin, pade, user");
      s.class_spec = c;
    }
  }

  if (main_ring && s.construct) loc.fail(s.construct->line, 1, "a session has either [ring] or [construct], not both");
  if (main_ring) {
    s.ring = parse_ring(loc, *main_ring, s.field);
  } else if (s.construct) {
    const ConstructSpec& c = *s.construct;
    auto named = [&](const std::string& n) {
      if (n.empty()) loc.fail(c.line, 1, "[construct] " + c.op + " needs its operand rings named");
      const auto it = s.named_rings.find(n);
      if (it == s.named_rings.end()) loc.fail(c.line, 1, "[construct] refers to undefined ring '" + n + "'");
      return it->second;
    };
    try {
      if (c.op == "tensor") {
        s.ring = std::make_shared<const QuotientRing>(tensor_product(*named(c.left), *named(c.right)));
      } else if (c.op == "fiber") {
        s.ring = std::make_shared<const QuotientRing>(fiber_product(*named(c.left), *named(c.right)));
      } else if (c.op == "connsum") {
        s.ring = std::make_shared<const QuotientRing>(connected_sum(*named(c.left), *named(c.right)));
      } else if (c.op == "teter") {
        s.ring = std::make_shared<const QuotientRing>(teter_quotient(*named(c.left)));
      } else {
        loc.fail(c.line, 1, "[construct] op must be tensor, fiber, connsum or teter");
      }
    } catch (const ValidationError& err) {
      const std::string msg = err.what();
      if (msg.rfind(source + ":", 0) == 0) throw;
      loc.fail(c.line, 1, "[construct] " + c.op + ": " + msg);
    }
  } else if (s.named_rings.size() == 1) {
    s.ring = s.named_rings.begin()->second;
  } else {
    loc.fail(1, 0, "session defines no [ring] or [construct]");
  }

  s.modules.emplace("k", ModulePresentation::residue_field(s.ring));
  s.modules.emplace("R", ModulePresentation::free_module(s.ring));
  s.module_order = {"k", "R"};
  for (const Block* b : modules) {
    if (s.modules.count(b->name)) loc.fail(b->line, 1, "duplicate [module " + b->name + "]");
    s.modules.emplace(b->name, parse_module(loc, *b, s.ring));
    s.module_order.push_back(b->name);
  }
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str(), path);
}

}  // namespace golodkit::cli

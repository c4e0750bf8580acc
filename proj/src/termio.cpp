#include "operad/termio.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace operad {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
  std::ostringstream os;
  os << "byte 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(c));
  return os.str();
}

/// Cursor over the whole input so spans are absolute byte offsets.
class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  /// Next non-blank byte, or '\0' at the end.
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (accept(c)) return;
    fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(message + ", found end of input", {pos_, pos_});
    throw ParseError(message + ", found " + describe(src_[pos_]), {pos_, pos_ + 1});
  }

  std::string_view name() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !is_name_start(src_[pos_])) fail("expected a name");
    while (pos_ < src_.size() && is_name_char(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  /// Unsigned decimal integer bounded by `limit`.
  std::size_t integer(std::size_t limit, const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail(std::string("expected ") + what);
    std::size_t value = 0;
    bool overflow = false;
    while (pos_ < src_.size() && is_digit(src_[pos_])) {
      value = value * 10 + static_cast<std::size_t>(src_[pos_] - '0');
      if (value > limit) overflow = true;
      ++pos_;
    }
    if (overflow) throw ParseError(std::string(what) + " out of range", {start, pos_});
    return value;
  }

  /// digits ["/" digits], no sign.
  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a rational number");
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ == den) throw ParseError("malformed rational", {start, pos_});
    }
    try {
      return Rational::parse(src_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("malformed rational", {start, pos_});
    }
  }

  /// True when a coefficient `RATIONAL *` starts here; does not consume.
  bool coefficient_ahead() {
    const std::size_t save = pos_;
    skip_ws();
    bool found = false;
    if (pos_ < src_.size() && is_digit(src_[pos_])) {
      while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '/')) ++pos_;
      found = peek() == '*';
    }
    pos_ = save;
    return found;
  }

  std::string_view text() const { return src_; }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

constexpr std::size_t kLabelLimit = 1'000'000;

class TermParser {
 public:
  TermParser(Cursor& cur, const SignaturePtr& sig) : cur_(cur), sig_(sig) {}

  Term parse() {
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    if (is_digit(cur_.peek())) {
      // A bare leaf is the unit under another name.
      const std::size_t label = cur_.integer(kLabelLimit, "leaf label");
      if (label != 1) throw ParseError("a single leaf must be labelled 1", {start, cur_.pos()});
      return Term::unit(sig_);
    }
    const std::size_t name_start = cur_.pos();
    std::string_view name = cur_.name();
    if (name == "id" && cur_.peek() != '(') return Term::unit(sig_);
    cur_.reset(name_start);
    vertex(std::nullopt, 1);
    check_labels();
    return Term(sig_, builder_.finish(), std::move(decoration_), std::move(labels_));
  }

 private:
  void vertex(std::optional<std::size_t> parent, std::size_t depth) {
    if (depth > kMaxParseDepth) throw ParseError("term nested too deeply", {cur_.pos(), cur_.pos()});
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    if (is_digit(cur_.peek())) {
      if (!parent) cur_.fail("expected a generator");
      const std::size_t label = cur_.integer(kLabelLimit, "leaf label");
      builder_.add_leaf(*parent);
      labels_.push_back(static_cast<int>(label));
      label_spans_.push_back({start, cur_.pos()});
      return;
    }
    std::string_view name = cur_.name();
    const SourceSpan name_span{start, cur_.pos()};
    if (name == "id") throw ParseError("the unit 'id' may only stand as a whole term", name_span);
    auto index = sig_->find(name);
    if (!index) throw ParseError("unknown generator '" + std::string(name) + "'", name_span);
    const std::size_t v = builder_.open_vertex();
    if (parent) builder_.add_child(*parent, v);
    decoration_.push_back(*index);
    cur_.expect('(', "'('");
    std::size_t count = 0;
    if (!cur_.accept(')')) {
      do {
        vertex(v, depth + 1);
        ++count;
      } while (cur_.accept(','));
      cur_.expect(')', "',' or ')'");
    }
    const std::size_t arity = sig_->generator(*index).arity;
    if (count != arity)
      throw ParseError("arity mismatch: '" + std::string(name) + "' takes " + std::to_string(arity) + " inputs, got " +
                           std::to_string(count),
                       {start, cur_.pos()});
  }

  void check_labels() {
    const std::size_t n = labels_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t p = 0; p < n; ++p) {
      const auto l = static_cast<std::size_t>(labels_[p]);
      if (l < 1 || l > n)
        throw ParseError("leaf label " + std::to_string(l) + " outside 1.." + std::to_string(n), label_spans_[p]);
      if (seen[l]) throw ParseError("duplicate leaf label " + std::to_string(l), label_spans_[p]);
      seen[l] = true;
      if (sig_->mode() == Mode::planar && l != p + 1)
        throw ParseError("planar terms read leaves 1.." + std::to_string(n) + " left to right", label_spans_[p]);
    }
    // With n labels in 1..n and no duplicates nothing can be missing; a
    // missing label always surfaces above as one out of range.
  }

  Cursor& cur_;
  const SignaturePtr& sig_;
  TreeBuilder builder_;
  std::vector<std::size_t> decoration_;
  std::vector<int> labels_;
  std::vector<SourceSpan> label_spans_;
};

Permutation parse_permutation_at(Cursor& cur, std::optional<std::size_t> degree) {
  cur.skip_ws();
  const std::size_t start = cur.pos();
  if (cur.accept('[')) {
    std::vector<int> word;
    if (!cur.accept(']')) {
      do {
        word.push_back(static_cast<int>(cur.integer(kLabelLimit, "permutation entry")));
      } while (cur.accept(','));
      cur.expect(']', "',' or ']'");
    }
    try {
      Permutation p(std::move(word));
      if (degree && p.degree() != *degree)
        throw ParseError("expected degree " + std::to_string(*degree) + ", got " + std::to_string(p.degree()),
                         {start, cur.pos()});
      return p;
    } catch (const ShapeError& e) {
      throw ParseError(e.what(), {start, cur.pos()});
    }
  }
  if (cur.peek() != '(') cur.fail("expected '[' or '('");
  std::vector<std::vector<int>> cycles;
  std::size_t largest = 0;
  while (cur.accept('(')) {
    std::vector<int> cycle;
    while (is_digit(cur.peek())) {
      const std::size_t point = cur.integer(kLabelLimit, "cycle entry");
      if (point == 0) throw ParseError("cycle entries start at 1", {cur.pos() - 1, cur.pos()});
      largest = std::max(largest, point);
      cycle.push_back(static_cast<int>(point));
      cur.accept(',');
    }
    cur.expect(')', "')'");
    cycles.push_back(std::move(cycle));
  }
  const SourceSpan span{start, cur.pos()};
  const std::size_t n = degree.value_or(largest);
  if (n == 0) throw ParseError("cannot infer the degree of the identity cycle", span);
  if (largest > n) throw ParseError("cycle point exceeds degree " + std::to_string(n), span);
  std::vector<int> word(n);
  for (std::size_t i = 0; i < n; ++i) word[i] = static_cast<int>(i + 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[static_cast<std::size_t>(c[k])]) throw ParseError("cycles are not disjoint", span);
      used[static_cast<std::size_t>(c[k])] = true;
      word[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
    }
  return Permutation(std::move(word));
}

std::string coefficient_prefix(const Rational& c, bool first) {
  std::string out;
  if (c.sign() < 0)
    out = first ? "-" : " - ";
  else if (!first)
    out = " + ";
  const Rational magnitude = c.sign() < 0 ? -c : c;
  if (magnitude != Rational(1)) out += magnitude.str() + "*";
  return out;
}

/// Shared driver for both linear-combination grammars.
template <class Item, class ParseItem, class Add>
void parse_signed_sum(Cursor& cur, ParseItem parse_item, Add add) {
  Rational sign(1);
  if (cur.accept('-')) sign = Rational(-1);
  while (true) {
    Rational coeff(1);
    if (cur.coefficient_ahead()) {
      coeff = cur.rational();
      cur.expect('*', "'*'");
    }
    cur.skip_ws();
    const std::size_t start = cur.pos();
    Item item = parse_item();
    add(item, sign * coeff, SourceSpan{start, cur.pos()});
    if (cur.at_end()) return;
    if (cur.accept('+'))
      sign = Rational(1);
    else if (cur.accept('-'))
      sign = Rational(-1);
    else
      cur.fail("expected '+', '-' or end of input");
  }
}

bool is_literal_zero(std::string_view src) {
  const auto first = src.find_first_not_of(" \t\r\n");
  const auto last = src.find_last_not_of(" \t\r\n");
  return first != std::string_view::npos && first == last && src[first] == '0';
}

}  // namespace

Permutation parse_permutation(std::string_view src, std::optional<std::size_t> degree) {
  Cursor cur(src);
  Permutation p = parse_permutation_at(cur, degree);
  if (!cur.at_end()) cur.fail("expected end of input");
  return p;
}

Term parse_term(std::string_view src, const SignaturePtr& signature) {
  Cursor cur(src);
  Term t = TermParser(cur, signature).parse();
  if (!cur.at_end()) cur.fail("expected end of input");
  return t;
}

std::string print_term(const Term& t) {
  if (t.is_unit()) return "id";
  const auto& shape = t.shape();
  std::string out;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    out += t.signature().generator(t.decoration()[v]).name;
    out += '(';
    bool first = true;
    for (auto in : shape.inputs(v)) {
      if (!first) out += ',';
      first = false;
      if (OperadTree::is_leaf(in))
        out += std::to_string(t.labels()[OperadTree::leaf_index(in)]);
      else
        self(self, static_cast<std::size_t>(in));
    }
    out += ')';
  };
  walk(walk, 0);
  return out;
}

LinComb parse_lincomb(std::string_view src, const SignaturePtr& signature) {
  LinComb out;
  if (is_literal_zero(src)) return out;
  Cursor cur(src);
  parse_signed_sum<Term>(
      cur, [&] { return TermParser(cur, signature).parse(); },
      [&](const Term& t, const Rational& c, SourceSpan span) {
        if (out.arity() && *out.arity() != t.arity())
          throw ParseError("arity mismatch: term has arity " + std::to_string(t.arity()) + ", expected " +
                               std::to_string(*out.arity()),
                           span);
        out.add(t, c);
      });
  return out;
}

std::string print_lincomb(const LinComb& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : v.terms()) {
    out += coefficient_prefix(c, first) + print_term(t);
    first = false;
  }
  return out;
}

PermCombination parse_perm_combination(std::string_view src, std::optional<std::size_t> degree) {
  if (is_literal_zero(src)) {
    if (!degree) throw ParseError("the zero combination needs a known degree", {0, src.size()});
    return PermCombination(*degree);
  }
  Cursor cur(src);
  std::optional<PermCombination> out;
  parse_signed_sum<Permutation>(
      cur, [&] { return parse_permutation_at(cur, degree); },
      [&](const Permutation& s, const Rational& c, SourceSpan span) {
        if (!out) out.emplace(s.degree());
        if (s.degree() != out->degree())
          throw ParseError("degree mismatch: " + std::to_string(s.degree()) + " vs " + std::to_string(out->degree()),
                           span);
        out->add(s, c);
      });
  return *out;
}

std::string print_perm_combination(const PermCombination& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    out += coefficient_prefix(c, first) + s.str();
    first = false;
  }
  return out;
}

namespace {

using nlohmann::json;

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace

std::shared_ptr<const Presentation> load_presentation(std::string_view src) {
  json doc;
  try {
    doc = json::parse(src.begin(), src.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string("malformed JSON: ") + e.what(), {at, std::min(at + 1, src.size())});
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "mode" && key != "generators" && key != "relations")
      throw SchemaError(key, "unknown field");

  const std::string name = as_string(field(doc, "name", ""), "name");
  const std::string mode_text = as_string(field(doc, "mode", ""), "mode");
  Mode mode;
  if (mode_text == "planar")
    mode = Mode::planar;
  else if (mode_text == "symmetric")
    mode = Mode::symmetric;
  else
    throw SchemaError("mode", "expected \"planar\" or \"symmetric\", got \"" + mode_text + "\"");

  const json& gens = field(doc, "generators", "");
  if (!gens.is_array()) throw SchemaError("generators", "expected an array");
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_object()) throw SchemaError(path, "expected an object");
    const std::string gname = as_string(field(gens[i], "name", path), path + ".name");
    const json& arity = field(gens[i], "arity", path);
    if (!arity.is_number_unsigned() || arity.get<std::size_t>() > 64)
      throw SchemaError(path + ".arity", "expected an integer in 0..64");
    generators.push_back({gname, arity.get<std::size_t>()});
  }
  SignaturePtr sig;
  try {
    sig = make_signature(std::move(generators), mode);
  } catch (const Error& e) {
    throw SchemaError("generators", e.what());
  }

  std::vector<Relation> relations;
  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("relations", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& entry = (*it)[i];
      std::string path = "relations[" + std::to_string(i) + "]";
      std::string rname = "r" + std::to_string(i + 1);
      std::string expr;
      if (entry.is_string()) {
        expr = entry.get<std::string>();
      } else if (entry.is_object()) {
        if (entry.contains("name")) rname = as_string(entry["name"], path + ".name");
        expr = as_string(field(entry, "expr", path), path + ".expr");
        path += ".expr";
      } else {
        throw SchemaError(path, "expected a string or an object");
      }
      try {
        relations.push_back({rname, parse_lincomb(expr, sig)});
      } catch (const Error& e) {
        throw SchemaError(path, e.what());
      }
    }
  }
  try {
    return std::make_shared<const Presentation>(name, sig, std::move(relations));
  } catch (const Error& e) {
    throw SchemaError("relations", e.what());
  }
}

std::string save_presentation(const Presentation& p) {
  nlohmann::ordered_json doc;
  doc["name"] = p.name();
  doc["mode"] = to_string(p.signature()->mode());
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : p.signature()->generators()) doc["generators"].push_back({{"name", g.name}, {"arity", g.arity}});
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relations()) doc["relations"].push_back({{"name", r.name}, {"expr", print_lincomb(r.element)}});
  return doc.dump(2) + "\n";
}

std::shared_ptr<const Presentation> load_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_presentation(buf.str());
}

Representation load_representation(std::string_view src, std::shared_ptr<const Presentation> p) {
  const auto& sig = *p->signature();
  std::optional<std::size_t> dim;
  std::map<std::string, MultilinearMap> images;
  std::set<std::pair<std::string, std::size_t>> seen;

  std::size_t line_start = 0;
  while (line_start <= src.size()) {
    std::size_t line_end = src.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = src.size();
    std::size_t content_end = src.find('#', line_start);
    if (content_end == std::string_view::npos || content_end > line_end) content_end = line_end;
    // Cursor over the prefix so spans stay absolute.
    Cursor cur(src.substr(0, content_end));
    cur.reset(line_start);
    if (!cur.at_end()) {
      const std::size_t start = cur.pos();
      std::string_view word = cur.name();
      if (word == "dim" && cur.peek() != '[') {
        if (dim) throw ParseError("dim given twice", {start, cur.pos()});
        const std::size_t d = cur.integer(64, "dimension");
        if (d == 0) throw ParseError("dimension must be positive", {start, cur.pos()});
        dim = d;
        for (const auto& g : sig.generators()) images.emplace(g.name, MultilinearMap(d, g.arity));
      } else {
        const SourceSpan name_span{start, cur.pos()};
        if (!dim) throw ParseError("'dim N' must precede the coefficients", name_span);
        auto it = images.find(std::string(word));
        if (it == images.end()) throw ParseError("unknown generator '" + std::string(word) + "'", name_span);
        MultilinearMap& m = it->second;
        cur.expect('[', "'['");
        const std::size_t out = cur.integer(*dim, "output index");
        std::vector<std::size_t> in;
        if (cur.accept(';') && is_digit(cur.peek())) {
          do {
            in.push_back(cur.integer(*dim, "input index"));
          } while (cur.accept(','));
        }
        cur.expect(']', "']'");
        const SourceSpan index_span{start, cur.pos()};
        if (in.size() != m.arity())
          throw ParseError("'" + std::string(word) + "' takes " + std::to_string(m.arity()) + " input indices",
                           index_span);
        if (out == 0) throw ParseError("indices start at 1", index_span);
        for (auto& j : in) {
          if (j == 0) throw ParseError("indices start at 1", index_span);
          --j;
        }
        const std::size_t flat = m.arity() == 0 ? 0 : m.flat_index(0, in);
        if (!seen.insert({std::string(word), (out - 1) * m.input_count() + flat}).second)
          throw ParseError("coefficient given twice", index_span);
        cur.expect('=', "'='");
        Rational sign(1);
        if (cur.accept('-'))
          sign = Rational(-1);
        else
          cur.accept('+');
        m.at_flat(out - 1, flat) = sign * cur.rational();
        if (!cur.at_end()) cur.fail("expected end of line");
      }
    }
    line_start = line_end + 1;
  }
  if (!dim) throw ParseError("missing 'dim N'", {0, 0});
  return Representation(std::move(p), *dim, std::move(images));
}

std::string save_representation(const Representation& r) {
  std::ostringstream os;
  os << "dim " << r.dim() << "\n";
  for (const auto& g : r.presentation().signature()->generators()) {
    const MultilinearMap& m = r.image(g.name);
    for (std::size_t o = 0; o < m.dim(); ++o)
      for (std::size_t J = 0; J < m.input_count(); ++J) {
        const Rational& c = m.at_flat(o, J);
        if (c.is_zero()) continue;
        os << g.name << '[' << o + 1 << ';';
        std::size_t rest = J;
        std::vector<std::size_t> digits(m.arity());
        for (std::size_t k = m.arity(); k-- > 0;) {
          digits[k] = rest % m.dim();
          rest /= m.dim();
        }
        for (std::size_t k = 0; k < digits.size(); ++k) os << (k ? "," : "") << digits[k] + 1;
        os << "] = " << c.str() << "\n";
      }
  }
  return os.str();
}

}  // namespace operad

#include "thinlie/bracketlang.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace thinlie {

LnWord::LnWord(Word letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("bracket word must be nonempty");
}

BracketExpr::BracketExpr(std::vector<Term> terms) {
  std::map<LnWord, Fel> combined;
  for (auto& t : terms) {
    auto it = combined.find(t.word);
    if (it == combined.end())
      combined.emplace(t.word, t.coeff);
    else
      it->second += t.coeff;
  }
  for (auto& [w, c] : combined)
    if (!c.is_zero()) terms_.push_back({c, w});
}

bool BracketExpr::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.word.degree() != terms_[0].word.degree()) return false;
  return true;
}

unsigned BracketExpr::degree() const {
  if (terms_.empty()) throw std::logic_error("zero expression has no degree");
  if (!is_homogeneous()) throw std::logic_error("expression is not homogeneous");
  return terms_[0].word.degree();
}

unsigned BracketExpr::max_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.word.degree());
  return d;
}

BracketExpr BracketExpr::operator+(const BracketExpr& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return BracketExpr(std::move(all));
}

BracketExpr BracketExpr::scaled(const Fel& c) const {
  std::vector<Term> all;
  for (const auto& t : terms_) all.push_back({t.coeff * c, t.word});
  return BracketExpr(std::move(all));
}

bool BracketExpr::operator==(const BracketExpr& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].word == o.terms_[i].word) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string BracketExpr::pretty() const { return emit_expr(*this); }

LnWord vword(unsigned k, const VContext& ctx) {
  if (k == 0) throw std::invalid_argument("v index must be >= 1");
  if (ctx.q < 3) throw std::invalid_argument("VContext.q not set");
  const std::size_t q = std::size_t(ctx.q);
  Word w;
  w.reserve(k * (q - 1));
  w.push_back(Gen::y);
  for (std::size_t i = 0; i < q - 2; ++i) w.push_back(Gen::x);
  for (unsigned step = 2; step <= k; ++step) {
    if (ctx.mu0_steps.count(step)) {
      w.push_back(Gen::y);
      for (std::size_t i = 0; i < q - 2; ++i) w.push_back(Gen::x);
    } else {
      w.push_back(Gen::x);
      w.push_back(Gen::y);
      for (std::size_t i = 0; i < q - 3; ++i) w.push_back(Gen::x);
    }
  }
  return LnWord(std::move(w));
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
      position(pos) {}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const VContext& ctx, const FieldPtr& field)
      : s_(text), ctx_(ctx), f_(field) {}

  BracketExpr run() {
    std::vector<Term> terms;
    skip_ws();
    if (eof()) throw ParseError("empty expression", 0);
    bool first = true;
    while (!eof()) {
      Fel sign = f_->one();
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++i_;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", i_);
      }
      first = false;
      auto t = parse_term();
      terms.push_back({t.coeff * sign, t.word});
      skip_ws();
    }
    return BracketExpr(std::move(terms));
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }
  void skip_ws() {
    while (!eof() && std::isspace((unsigned char)s_[i_])) ++i_;
  }

  std::uint64_t parse_uint() {
    if (eof() || !std::isdigit((unsigned char)peek())) throw ParseError("expected integer", i_);
    std::uint64_t v = 0;
    while (!eof() && std::isdigit((unsigned char)peek())) {
      v = v * 10 + std::uint64_t(s_[i_] - '0');
      if (v > (std::uint64_t{1} << 62)) throw ParseError("integer too large", i_);
      ++i_;
    }
    return v;
  }

  Term parse_term() {
    skip_ws();
    Fel coeff = f_->one();
    if (!eof() && std::isdigit((unsigned char)peek())) {
      coeff = f_->from_int(std::int64_t(parse_uint() % f_->p()));
      skip_ws();
      if (peek() == '*') {
        ++i_;
        skip_ws();
      }
    } else if (peek() == '(') {
      const std::size_t start = ++i_;
      while (!eof() && peek() != ')') ++i_;
      if (eof()) throw ParseError("unterminated '(' in coefficient", start - 1);
      const std::string elem = s_.substr(start, i_ - start);
      ++i_;
      try {
        coeff = f_->parse(elem);
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad field element: ") + e.what(), start);
      }
      skip_ws();
      if (peek() == '*') {
        ++i_;
        skip_ws();
      }
    }
    if (peek() != '[') throw ParseError("expected '['", i_);
    ++i_;
    Word letters;
    bool any = false;
    while (true) {
      skip_ws();
      if (eof()) throw ParseError("unterminated '['", i_);
      if (peek() == ']') {
        ++i_;
        break;
      }
      any = true;
      parse_atom(letters);
    }
    if (!any || letters.empty())
      throw ParseError("bracket must contain at least one letter", i_ - 1);
    return {coeff, LnWord(std::move(letters))};
  }

  void parse_atom(Word& letters) {
    const char c = peek();
    Word unit;
    if (c == 'x') {
      ++i_;
      unit = {Gen::x};
    } else if (c == 'y') {
      ++i_;
      unit = {Gen::y};
    } else if (c == 'v') {
      const std::size_t at = i_;
      ++i_;
      const std::uint64_t idx = parse_uint();
      if (idx == 0) throw ParseError("v index must be >= 1", at);
      if (ctx_.q < 3) throw ParseError("v atoms need a context with q set", at);
      unit = vword(unsigned(idx), ctx_).letters();
    } else {
      throw ParseError("expected atom 'x', 'y' or 'v<k>'", i_);
    }
    std::uint64_t power = 1;
    skip_ws();
    if (peek() == '^') {
      ++i_;
      skip_ws();
      power = parse_uint();
      if (power > 1u << 20) throw ParseError("power too large", i_);
    }
    for (std::uint64_t r = 0; r < power; ++r)
      letters.insert(letters.end(), unit.begin(), unit.end());
  }

  const std::string& s_;
  std::size_t i_ = 0;
  const VContext& ctx_;
  FieldPtr f_;
};

}  // namespace

BracketExpr parse_expr(const std::string& text, const VContext& ctx, const FieldPtr& field,
                       bool require_homogeneous) {
  BracketExpr e = ExprParser(text, ctx, field).run();
  if (require_homogeneous && !e.is_zero() && !e.is_homogeneous())
    throw ParseError("expression is not homogeneous", 0);
  return e;
}

std::string emit_expr(const BracketExpr& e) {
  if (e.is_zero()) return "0*[x]";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : e.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!t.coeff.is_one()) {
      if (t.coeff.field()->k() == 1)
        os << t.coeff.str() << '*';
      else
        os << '(' << t.coeff.str() << ")*";
    }
    os << t.word.pretty();
  }
  return os.str();
}

void write_presentation(std::ostream& os, const Presentation& p) {
  os << "# " << (p.label.empty() ? "presentation" : p.label) << "\n";
  os << "p=" << p.field->p() << " q=" << p.q << " k=" << p.field->k() << " s=" << p.s
     << " lambda=" << (p.lambda ? p.lambda->str() : "0");
  if (!p.field->has_default_modulus()) {
    os << " modulus=";
    const auto& m = p.field->modulus();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  }
  os << "\n";
  for (const auto& r : p.relators) os << emit_expr(r) << "\n";
}

std::string presentation_to_string(const Presentation& p) {
  std::ostringstream os;
  write_presentation(os, p);
  return os.str();
}

Presentation read_presentation(std::istream& is) {
  std::string line;
  Presentation p;
  std::uint64_t pp = 0, k = 1;
  std::vector<std::uint64_t> modulus;
  std::string lambda_text = "0";
  bool header_seen = false;
  std::vector<std::string> relator_lines;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      if (p.label.empty() && !header_seen) {
        std::string c = line.substr(hash + 1);
        while (!c.empty() && std::isspace((unsigned char)c.front())) c.erase(c.begin());
        p.label = c;
      }
      line = line.substr(0, hash);
    }
    std::string stripped = line;
    stripped.erase(std::remove_if(stripped.begin(), stripped.end(),
                                  [](char c) { return std::isspace((unsigned char)c); }),
                   stripped.end());
    if (stripped.empty()) continue;
    if (!header_seen) {
      std::istringstream hs(line);
      std::string tok;
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("bad header token '" + tok + "'");
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "p")
          pp = std::stoull(val);
        else if (key == "q")
          p.q = std::stoull(val);
        else if (key == "k")
          k = std::stoull(val);
        else if (key == "s")
          p.s = std::stoull(val);
        else if (key == "lambda")
          lambda_text = val;
        else if (key == "modulus") {
          std::istringstream ms(val);
          std::string part;
          while (std::getline(ms, part, ',')) modulus.push_back(std::stoull(part));
        } else
          throw std::invalid_argument("unknown header key '" + key + "'");
      }
      if (pp == 0) throw std::invalid_argument("presentation header must set p");
      if (p.q < 3) throw std::invalid_argument("presentation header must set q (>= 3)");
      p.field = modulus.empty() ? Field::make(pp, unsigned(k))
                                : Field::make(pp, unsigned(k), modulus);
      p.lambda = p.field->parse(lambda_text);
      header_seen = true;
      continue;
    }
    relator_lines.push_back(line);
  }
  if (!header_seen) throw std::invalid_argument("presentation file has no header line");
  VContext ctx(p.q);
  for (const auto& rl : relator_lines)
    p.relators.push_back(parse_expr(rl, ctx, p.field, /*require_homogeneous=*/true));
  return p;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open presentation file: " + path);
  return read_presentation(is);
}

}  // namespace thinlie

#include "selfsim/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace selfsim {

namespace {

struct Tok {
  std::string text;
  int column;  // 1-based
};

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

bool match_integer(const std::string& s) {
  std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool match_fraction(const std::string& s, std::string& num, std::string& den) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return false;
  num = s.substr(0, slash);
  den = s.substr(slash + 1);
  if (!match_integer(num) || den.empty()) return false;
  for (char c : den)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat parse_rat_token(const std::string& s, int line, int col) {
  if (match_integer(s)) return Rat(Int(s));
  std::string num, den;
  if (match_fraction(s, num, den)) {
    Int d(den);
    if (d == 0) throw ParseError(line, col, "zero denominator in '" + s + "'");
    return make_rat(Int(num), d);
  }
  throw ParseError(line, col, "expected integer or a/b, got '" + s + "'");
}

Poly parse_poly_body(const std::string& body, int line, int col) {
  // body is the text between '[' and ']': c0;c1;...
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = body.find(';', start);
    std::string piece = body.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (piece.empty()) {
      throw ParseError(line, col, "empty polynomial coefficient");
    }
    coeffs.push_back(parse_rat_token(piece, line, col));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return Poly(std::move(coeffs));
}

// poly:[...] or poly:[...]/[...]
RatFun parse_poly_token(const std::string& s, int line, int col) {
  const std::string prefix = "poly:[";
  if (s.compare(0, prefix.size(), prefix) != 0) {
    throw ParseError(line, col, "malformed polynomial token '" + s + "'");
  }
  std::size_t close = s.find(']', prefix.size());
  if (close == std::string::npos) {
    throw ParseError(line, col, "missing ']' in '" + s + "'");
  }
  Poly num = parse_poly_body(s.substr(prefix.size(), close - prefix.size()),
                             line, col);
  std::size_t rest = close + 1;
  if (rest == s.size()) return RatFun::reduce(std::move(num), Poly(Rat(1)));
  if (s.compare(rest, 2, "/[") != 0 || s.back() != ']') {
    throw ParseError(line, col, "malformed polynomial token '" + s + "'");
  }
  Poly den = parse_poly_body(s.substr(rest + 2, s.size() - rest - 3), line, col);
  if (den.is_zero()) {
    throw ParseError(line, col, "zero denominator polynomial in '" + s + "'");
  }
  return RatFun::reduce(std::move(num), std::move(den));
}

struct Header {
  int base;
  RingTag tag;
  std::uint64_t p = 0;
};

}  // namespace

AnyDefining parse_defining_file(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::size_t idx = 0;
  auto next_significant = [&]() -> std::optional<std::pair<int, std::vector<Tok>>> {
    while (idx < lines.size()) {
      int line_no = static_cast<int>(idx) + 1;
      const std::string& line = lines[idx];
      ++idx;
      if (is_comment_or_blank(line)) continue;
      return std::make_pair(line_no, tokenize(line));
    }
    return std::nullopt;
  };

  auto base_line = next_significant();
  if (!base_line) throw ParseError(1, 1, "missing 'base <b>' line");
  {
    const auto& [ln, toks] = *base_line;
    if (toks.size() != 2 || toks[0].text != "base" || !match_integer(toks[1].text)) {
      throw ParseError(ln, toks.empty() ? 1 : toks[0].column,
                       "expected 'base <b>'");
    }
  }
  Header h{};
  {
    const auto& [ln, toks] = *base_line;
    Int b(toks[1].text);
    if (b < 2 || b > 64) {
      throw ParseError(ln, toks[1].column, "base must be in [2, 64]");
    }
    h.base = static_cast<int>(mpz_get_ui(b.get_mpz_t()));
  }

  auto ring_line = next_significant();
  if (!ring_line) throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                                   "missing 'ring' line");
  {
    const auto& [ln, toks] = *ring_line;
    if (toks.empty() || toks[0].text != "ring") {
      throw ParseError(ln, toks.empty() ? 1 : toks[0].column,
                       "expected 'ring q', 'ring gf <p>' or 'ring qt'");
    }
    if (toks.size() == 2 && toks[1].text == "q") {
      h.tag = RingTag::Q;
    } else if (toks.size() == 2 && toks[1].text == "qt") {
      h.tag = RingTag::QT;
    } else if (toks.size() == 3 && toks[1].text == "gf" &&
               match_integer(toks[2].text)) {
      h.tag = RingTag::GF;
      Int p(toks[2].text);
      if (sgn(p) <= 0 || !mpz_fits_ulong_p(p.get_mpz_t())) {
        throw ParseError(ln, toks[2].column, "prime out of range");
      }
      h.p = mpz_get_ui(p.get_mpz_t());
      if (!is_prime_u64(h.p)) {
        throw ParseError(ln, toks[2].column,
                         std::to_string(h.p) + " is not prime");
      }
    } else {
      throw ParseError(ln, toks[0].column,
                       "expected 'ring q', 'ring gf <p>' or 'ring qt'");
    }
  }

  std::vector<std::pair<int, std::vector<Tok>>> rows;  // (line number, tokens)
  for (int r = 0; r < h.base; ++r) {
    auto row = next_significant();
    if (!row) {
      throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                       "expected " + std::to_string(h.base) +
                           " matrix rows, got " + std::to_string(r));
    }
    const auto& [ln, toks] = *row;
    if (static_cast<int>(toks.size()) != h.base) {
      throw ParseError(ln, toks.empty() ? 1 : toks.back().column,
                       "expected " + std::to_string(h.base) +
                           " entries in row, got " +
                           std::to_string(toks.size()));
    }
    rows.emplace_back(ln, toks);
  }
  if (auto extra = next_significant()) {
    const auto& [ln, toks] = *extra;
    throw ParseError(ln, toks.empty() ? 1 : toks[0].column,
                     "unexpected content after matrix rows");
  }

  std::size_t b = static_cast<std::size_t>(h.base);
  switch (h.tag) {
    case RingTag::Q: {
      SquareMat<Rat> m(b, Rat(0));
      for (std::size_t i = 0; i < b; ++i) {
        int ln = rows[i].first;
        for (std::size_t j = 0; j < b; ++j) {
          const Tok& t = rows[i].second[j];
          if (t.text.rfind("poly:", 0) == 0) {
            throw ParseError(ln, t.column,
                             "polynomial entries need 'ring qt'");
          }
          m(i, j) = parse_rat_token(t.text, ln, t.column);
        }
      }
      return Defining<Rat>(h.base, std::move(m));
    }
    case RingTag::GF: {
      SquareMat<Fp> m(b, Fp(h.p, 0ll));
      for (std::size_t i = 0; i < b; ++i) {
        int ln = rows[i].first;
        for (std::size_t j = 0; j < b; ++j) {
          const Tok& t = rows[i].second[j];
          if (!match_integer(t.text)) {
            throw ParseError(ln, t.column,
                             "GF(p) entries must be integers, got '" +
                                 t.text + "'");
          }
          m(i, j) = Fp(h.p, Int(t.text));
        }
      }
      return Defining<Fp>(h.base, std::move(m));
    }
    case RingTag::QT: {
      SquareMat<RatFun> m(b, RatFun());
      for (std::size_t i = 0; i < b; ++i) {
        int ln = rows[i].first;
        for (std::size_t j = 0; j < b; ++j) {
          const Tok& t = rows[i].second[j];
          if (t.text.rfind("poly:", 0) == 0) {
            m(i, j) = parse_poly_token(t.text, ln, t.column);
          } else {
            m(i, j) = RatFun(parse_rat_token(t.text, ln, t.column));
          }
        }
      }
      return Defining<RatFun>(h.base, std::move(m));
    }
  }
  throw Error("unreachable");
}

AnyDefining load_defining_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_defining_file(buf.str());
}

namespace {

std::string poly_list(const Poly& p) {
  std::string s = "[";
  int d = p.deg();
  for (int i = 0; i <= std::max(d, 0); ++i) {
    if (i) s += ";";
    Rat c = p.coeff(static_cast<std::size_t>(i));
    s += c.get_str();
  }
  return s + "]";
}

std::string ratfun_token(const RatFun& f) {
  if (f.is_constant()) {
    Rat v = f.constant_value();
    return v.get_str();
  }
  if (f.den().deg() == 0) return "poly:" + poly_list(f.num());
  return "poly:" + poly_list(f.num()) + "/" + poly_list(f.den());
}

}  // namespace

std::string serialize_defining(const AnyDefining& def) {
  std::ostringstream out;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d.tilde(0, 0))>;
        out << "base " << d.base << "\n";
        if constexpr (std::is_same_v<T, Rat>) {
          out << "ring q\n";
        } else if constexpr (std::is_same_v<T, Fp>) {
          out << "ring gf " << d.tilde(0, 0).modulus() << "\n";
        } else {
          out << "ring qt\n";
        }
        std::size_t b = d.tilde.dim();
        for (std::size_t i = 0; i < b; ++i) {
          for (std::size_t j = 0; j < b; ++j) {
            if (j) out << " ";
            const auto& v = d.tilde(i, j);
            if constexpr (std::is_same_v<T, Rat>) {
              out << v.get_str();
            } else if constexpr (std::is_same_v<T, Fp>) {
              out << v.value();
            } else {
              out << ratfun_token(v);
            }
          }
          out << "\n";
        }
      },
      def);
  return out.str();
}

RingTag ring_tag_of(const AnyDefining& def) {
  if (std::holds_alternative<Defining<Rat>>(def)) return RingTag::Q;
  if (std::holds_alternative<Defining<Fp>>(def)) return RingTag::GF;
  return RingTag::QT;
}

int base_of(const AnyDefining& def) {
  return std::visit([](const auto& d) { return d.base; }, def);
}

}  // namespace selfsim

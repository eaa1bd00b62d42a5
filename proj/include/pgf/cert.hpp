// Copyright 2026 The pgroup-family Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file cert.hpp
 * @brief Construction certificates: trees of cyclic groups, direct products,
 * regular wreath products and Frattini quotients.
 *
 * Text form:
 *
 *     cert  := C(p,k) | D(cert,cert) | W(inner,outer) | Q(cert;word{,word})
 *     word  := factor {* factor}
 *     factor:= atom [^ int]
 *     atom  := g<i> | 1 | [word,word] | (word)
 *
 * `W(H,G)` is H wr G. Words in `Q` are in the generators of the evaluated
 * child (see `eval_cert` for their order); the quotient is by their normal
 * closure, which must lie in the Frattini subgroup of the child.
 */

#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pgf/error.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/perm.hpp"
#include "pgf/perm_group.hpp"

namespace pgf {

/// Word in the generators g1, g2, ... of some group.
struct Word {
  enum class Kind { identity, generator, product, power, commutator };
  Kind kind = Kind::identity;
  std::size_t gen = 0;           // generator: 1-based index
  long long exponent = 1;        // power
  std::vector<Word> parts;       // product: factors; power: base; commutator: two words

  static Word identity() { return {}; }
  static Word generator(std::size_t i) { return {Kind::generator, i, 1, {}}; }
  static Word power(Word base, long long e) { return {Kind::power, 0, e, {std::move(base)}}; }
  static Word commutator(Word a, Word b) {
    return {Kind::commutator, 0, 1, {std::move(a), std::move(b)}};
  }
};

inline Perm eval_word(const Word& w, const std::vector<Perm>& gens) {
  switch (w.kind) {
    case Word::Kind::identity:
      return Perm(gens.front().degree());
    case Word::Kind::generator:
      if (w.gen < 1 || w.gen > gens.size()) {
        throw InvalidCertificate("word uses g" + std::to_string(w.gen) + " but the group has " +
                                 std::to_string(gens.size()) + " generators");
      }
      return gens[w.gen - 1];
    case Word::Kind::product: {
      Perm out(gens.front().degree());
      for (const Word& f : w.parts) out = out * eval_word(f, gens);
      return out;
    }
    case Word::Kind::power:
      return eval_word(w.parts[0], gens).pow(w.exponent);
    case Word::Kind::commutator:
      return commutator(eval_word(w.parts[0], gens), eval_word(w.parts[1], gens));
  }
  return Perm(gens.front().degree());
}

inline std::string to_string(const Word& w) {
  switch (w.kind) {
    case Word::Kind::identity:
      return "1";
    case Word::Kind::generator:
      return "g" + std::to_string(w.gen);
    case Word::Kind::product: {
      std::string out;
      for (std::size_t k = 0; k < w.parts.size(); ++k) {
        if (k) out += '*';
        out += to_string(w.parts[k]);
      }
      return out;
    }
    case Word::Kind::power: {
      const Word& b = w.parts[0];
      bool atomic = b.kind == Word::Kind::generator || b.kind == Word::Kind::commutator ||
                    b.kind == Word::Kind::identity;
      std::string base = atomic ? to_string(b) : "(" + to_string(b) + ")";
      return base + "^" + std::to_string(w.exponent);
    }
    case Word::Kind::commutator:
      return "[" + to_string(w.parts[0]) + "," + to_string(w.parts[1]) + "]";
  }
  return "1";
}

/// Certificate tree node.
struct Cert {
  enum class Kind { cyclic, direct, wreath, quotient };
  Kind kind = Kind::cyclic;
  std::uint64_t prime = 0;  // cyclic
  unsigned exponent = 0;    // cyclic
  std::vector<Cert> children;
  std::vector<Word> selector;  // quotient

  static Cert cyclic(std::uint64_t p, unsigned k) { return {Kind::cyclic, p, k, {}, {}}; }
  static Cert direct(Cert a, Cert b) { return {Kind::direct, 0, 0, {std::move(a), std::move(b)}, {}}; }
  /// inner wr outer.
  static Cert wreath(Cert inner, Cert outer) {
    return {Kind::wreath, 0, 0, {std::move(inner), std::move(outer)}, {}};
  }
  static Cert quotient(Cert child, std::vector<Word> words) {
    return {Kind::quotient, 0, 0, {std::move(child)}, std::move(words)};
  }

  /// Number of D, W and Q nodes.
  std::size_t constructors() const {
    std::size_t n = kind == Kind::cyclic ? 0 : 1;
    for (const Cert& c : children) n += c.constructors();
    return n;
  }
};

inline std::string to_string(const Cert& c) {
  switch (c.kind) {
    case Cert::Kind::cyclic:
      return "C(" + std::to_string(c.prime) + "," + std::to_string(c.exponent) + ")";
    case Cert::Kind::direct:
      return "D(" + to_string(c.children[0]) + "," + to_string(c.children[1]) + ")";
    case Cert::Kind::wreath:
      return "W(" + to_string(c.children[0]) + "," + to_string(c.children[1]) + ")";
    case Cert::Kind::quotient: {
      std::string out = "Q(" + to_string(c.children[0]) + ";";
      for (std::size_t k = 0; k < c.selector.size(); ++k) {
        if (k) out += ',';
        out += to_string(c.selector[k]);
      }
      return out + ")";
    }
  }
  return {};
}

namespace detail {

class CertParser {
 public:
  explicit CertParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  Cert parse() {
    Cert c = cert();
    if (i_ != s_.size()) fail("trailing characters");
    return c;
  }

  std::vector<Word> parse_words() {
    std::vector<Word> out{word()};
    while (peek() == ',') {
      ++i_;
      out.push_back(word());
    }
    if (i_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "certificate: " + what + " at offset " + std::to_string(i_));
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++i_;
  }

  long long integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return neg ? -v : v;
  }

  Cert cert() {
    char k = peek();
    ++i_;
    expect('(');
    Cert out;
    if (k == 'C') {
      long long p = integer();
      expect(',');
      long long e = integer();
      if (p < 2 || e < 1) fail("C(p,k) needs p >= 2 and k >= 1");
      out = Cert::cyclic(static_cast<std::uint64_t>(p), static_cast<unsigned>(e));
    } else if (k == 'D' || k == 'W') {
      Cert a = cert();
      expect(',');
      Cert b = cert();
      out = k == 'D' ? Cert::direct(std::move(a), std::move(b))
                     : Cert::wreath(std::move(a), std::move(b));
    } else if (k == 'Q') {
      Cert a = cert();
      expect(';');
      std::vector<Word> ws{word()};
      while (peek() == ',') {
        ++i_;
        ws.push_back(word());
      }
      out = Cert::quotient(std::move(a), std::move(ws));
    } else {
      --i_;
      fail("expected one of C, D, W, Q");
    }
    expect(')');
    return out;
  }

  Word word() {
    std::vector<Word> fs{factor()};
    while (peek() == '*') {
      ++i_;
      fs.push_back(factor());
    }
    if (fs.size() == 1) return std::move(fs[0]);
    Word w;
    w.kind = Word::Kind::product;
    w.parts = std::move(fs);
    return w;
  }

  Word factor() {
    Word a = atom();
    if (peek() == '^') {
      ++i_;
      return Word::power(std::move(a), integer());
    }
    return a;
  }

  Word atom() {
    char ch = peek();
    if (ch == 'g') {
      ++i_;
      long long g = integer();
      if (g < 1) fail("generator index must be positive");
      return Word::generator(static_cast<std::size_t>(g));
    }
    if (ch == '1') {
      ++i_;
      return Word::identity();
    }
    if (ch == '[') {
      ++i_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return Word::commutator(std::move(a), std::move(b));
    }
    if (ch == '(') {
      ++i_;
      Word a = word();
      expect(')');
      return a;
    }
    fail("expected a word");
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Cert parse_cert(std::string_view text) { return detail::CertParser(text).parse(); }

inline std::vector<Word> parse_words(std::string_view text) {
  return detail::CertParser(text).parse_words();
}

/// Limits applied while evaluating certificates.
struct CertCaps {
  std::size_t degree = kDefaultDegreeCap;
  std::uint64_t enumeration = kDefaultEnumerationCap;  // also bounds quotient index
  unsigned max_log_order = 62;                          // order < 2^63
};

/// Prime of a certificate; throws InvalidCertificate if primes are mixed.
inline std::uint64_t cert_prime(const Cert& c) {
  if (c.kind == Cert::Kind::cyclic) {
    if (!is_prime(c.prime)) throw InvalidCertificate(std::to_string(c.prime) + " is not prime");
    return c.prime;
  }
  std::uint64_t p = cert_prime(c.children[0]);
  for (std::size_t k = 1; k < c.children.size(); ++k) {
    if (cert_prime(c.children[k]) != p) {
      throw InvalidCertificate("certificate mixes primes in " + to_string(c));
    }
  }
  return p;
}

/// Rank read off the tree: cyclic 1, products sum, quotients keep the child's.
inline unsigned declared_rank(const Cert& c) {
  switch (c.kind) {
    case Cert::Kind::cyclic:
      return 1;
    case Cert::Kind::direct:
    case Cert::Kind::wreath:
      return declared_rank(c.children[0]) + declared_rank(c.children[1]);
    case Cert::Kind::quotient:
      return declared_rank(c.children[0]);
  }
  return 0;
}

namespace detail {

inline void check_size(const Cert& c, double log2_order, double degree, const CertCaps& caps) {
  if (log2_order > caps.max_log_order) {
    throw CapExceeded("order of " + to_string(c) + " exceeds 2^" + std::to_string(caps.max_log_order));
  }
  if (degree > static_cast<double>(caps.degree)) {
    throw CapExceeded("degree of " + to_string(c) + " exceeds cap " + std::to_string(caps.degree));
  }
}

// Sizes are checked on the children's actual orders before each product is
// built, so no oversized group is ever constructed.
inline PermGroup eval(const Cert& c, std::uint64_t p, const CertCaps& caps) {
  switch (c.kind) {
    case Cert::Kind::cyclic: {
      const double e = static_cast<double>(c.exponent);
      check_size(c, e * std::log2(static_cast<double>(p)), std::pow(static_cast<double>(p), e), caps);
      return cyclic_group(c.prime, c.exponent, caps.enumeration);
    }
    case Cert::Kind::direct: {
      PermGroup a = eval(c.children[0], p, caps);
      PermGroup b = eval(c.children[1], p, caps);
      check_size(c, std::log2(static_cast<double>(a.order())) + std::log2(static_cast<double>(b.order())),
                 static_cast<double>(a.degree() + b.degree()), caps);
      return direct_product(a, b);
    }
    case Cert::Kind::wreath: {
      PermGroup h = eval(c.children[0], p, caps);
      PermGroup g = eval(c.children[1], p, caps);
      const double go = static_cast<double>(g.order());
      check_size(c, std::log2(static_cast<double>(h.order())) * go + std::log2(go),
                 static_cast<double>(h.degree()) * go, caps);
      return wreath_regular(h, g, caps.degree, caps.enumeration);
    }
    case Cert::Kind::quotient: {
      PermGroup child = eval(c.children[0], p, caps);
      std::vector<Perm> seeds;
      for (const Word& w : c.selector) seeds.push_back(eval_word(w, child.generators()));
      Subgroup n = normal_closure(child, seeds);
      Subgroup phi = frattini_subgroup(child, p);
      if (!is_subgroup(phi, n)) {
        throw InvalidCertificate("quotient selector in " + to_string(c) +
                                 " is not contained in the Frattini subgroup");
      }
      if (n.is_trivial()) return child;
      // The quotient acts regularly on the cosets, so its degree is the index.
      check_size(c, std::log2(static_cast<double>(child.order() / n.order())),
                 static_cast<double>(child.order() / n.order()), caps);
      return quotient_group(child, n, caps.enumeration);
    }
  }
  throw Error("unknown certificate node");
}

}  // namespace detail

/// Result of evaluating a certificate.
struct CertGroup {
  PermGroup group;
  std::uint64_t prime;
  unsigned rank;
};

/// Builds the group of a certificate and checks that the structural rank
/// equals the Frattini rank of the result.
///
/// Generators: C gives one cycle; D lists the left factor's generators, then
/// the right's; W lists the inner group's, then the outer's; Q keeps the
/// images of the child's generators.
inline CertGroup eval_cert_checked(const Cert& c, const CertCaps& caps = {}) {
  const std::uint64_t p = cert_prime(c);
  PermGroup g = detail::eval(c, p, caps);
  unsigned r = rank(g, p);
  if (r != declared_rank(c)) {
    throw Error("declared rank " + std::to_string(declared_rank(c)) + " of " + to_string(c) +
                " differs from computed rank " + std::to_string(r));
  }
  return {std::move(g), p, r};
}

inline PermGroup eval_cert(const Cert& c, const CertCaps& caps = {}) {
  return eval_cert_checked(c, caps).group;
}

/// Every certificate with at most `max_constructors` D/W/Q nodes over the
/// leaves C(p,1..max_exponent), one prime per tree. Quotient selectors are
/// "g1^p" and "[g1,g2]". Ordered by constructor count, then construction
/// order; caps are not applied here.
inline std::vector<Cert> certificate_corpus(const std::vector<std::uint64_t>& primes,
                                            unsigned max_exponent, std::size_t max_constructors) {
  std::vector<Cert> out;
  for (std::uint64_t p : primes) {
    // by_size[n] = trees with exactly n constructors.
    std::vector<std::vector<Cert>> by_size(max_constructors + 1);
    for (unsigned k = 1; k <= max_exponent; ++k) by_size[0].push_back(Cert::cyclic(p, k));
    const std::vector<std::vector<Word>> selectors = {
        {Word::power(Word::generator(1), static_cast<long long>(p))},
        {Word::commutator(Word::generator(1), Word::generator(2))}};
    for (std::size_t n = 1; n <= max_constructors; ++n) {
      for (const Cert& c : by_size[n - 1]) {
        for (const auto& sel : selectors) by_size[n].push_back(Cert::quotient(c, sel));
      }
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t b = n - 1 - a;
        for (const Cert& x : by_size[a]) {
          for (const Cert& y : by_size[b]) {
            by_size[n].push_back(Cert::direct(x, y));
            by_size[n].push_back(Cert::wreath(x, y));
          }
        }
      }
    }
    for (auto& layer : by_size) {
      for (Cert& c : layer) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace pgf

#include "trilink/laurent.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include <fmt/format.h>

#include "trilink/errors.hpp"

namespace trilink {

LaurentPoly::LaurentPoly(Coeff constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Coeff coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::loop_value() {
  return monomial(-1, 2) + monomial(-1, -2);
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  const auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += fmt::format("{}", mag);
      continue;
    }
    if (mag != 1) out += fmt::format("{}", mag);
    out += e == 1 ? "A" : fmt::format("A^{}", e);
  }
  return out;
}

namespace {

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw InputError(fmt::format("cannot parse polynomial '{}': {}", text, why));
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (text.substr(i) == "0") return out;
  bool expect_term = true;
  int sign = 1;
  if (i < text.size() && text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (i < text.size()) {
    if (!expect_term) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '+' && text[i] != '-') bad(text, "expected + or -");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    Coeff mag = 1;
    bool has_digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const auto [ptr, ec] =
          std::from_chars(text.data() + i, text.data() + text.size(), mag);
      if (ec != std::errc{}) bad(text, "bad coefficient");
      i = static_cast<std::size_t>(ptr - text.data());
      has_digits = true;
    }
    int exponent = 0;
    if (i < text.size() && text[i] == 'A') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const auto [ptr, ec] =
            std::from_chars(text.data() + i, text.data() + text.size(), exponent);
        if (ec != std::errc{}) bad(text, "bad exponent");
        i = static_cast<std::size_t>(ptr - text.data());
      }
    } else if (!has_digits) {
      bad(text, "empty term");
    }
    out.add_term(exponent, sign * mag);
    expect_term = false;
  }
  if (expect_term) bad(text, "no terms");
  return out;
}

bool equal_up_to_mirror(const LaurentPoly& p, const LaurentPoly& q) {
  return p == q || p == q.reflected();
}

}  // namespace trilink

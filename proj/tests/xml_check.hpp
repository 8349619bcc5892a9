#pragma once
// Minimal XML well-formedness check for generated SVG: balanced tags, quoted
// and unique attributes, known entities, one root element, and an optional
// leading declaration. Comments, CDATA and DTDs are treated as errors since
// the renderers never emit them.

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

inline bool xml_name_char(char c, bool first) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isalpha(u) || c == '_' || c == ':') return true;
  return !first && (std::isdigit(u) || c == '-' || c == '.');
}

inline bool xml_well_formed(std::string_view s) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_name = [&](std::string& out) {
    if (i >= s.size() || !xml_name_char(s[i], true)) return false;
    const std::size_t start = i;
    while (i < s.size() && xml_name_char(s[i], false)) ++i;
    out = std::string(s.substr(start, i - start));
    return true;
  };
  auto entity_ok = [&](std::size_t& k) {
    const std::size_t semi = s.find(';', k);
    if (semi == std::string_view::npos) return false;
    const std::string_view ent = s.substr(k + 1, semi - k - 1);
    static const std::set<std::string_view> named{"amp", "lt", "gt", "quot", "apos"};
    bool ok = named.contains(ent);
    if (!ok && ent.size() > 1 && ent[0] == '#') {
      ok = true;
      for (char c : ent.substr(1)) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    }
    k = semi + 1;
    return ok;
  };

  if (s.starts_with("<?xml")) {
    const std::size_t end = s.find("?>");
    if (end == std::string_view::npos) return false;
    i = end + 2;
  }
  std::vector<std::string> stack;
  int roots = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      if (s[i] == '&') {
        if (!entity_ok(i)) return false;
        continue;
      }
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) return false;
      ++i;
      continue;
    }
    ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::string name;
      if (!read_name(name)) return false;
      skip_ws();
      if (i >= s.size() || s[i] != '>') return false;
      ++i;
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }
    std::string name;
    if (!read_name(name)) return false;
    if (stack.empty() && ++roots > 1) return false;
    std::set<std::string> attrs;
    while (true) {
      const std::size_t before = i;
      skip_ws();
      if (i >= s.size()) return false;
      if (s[i] == '>') {
        ++i;
        stack.push_back(name);
        break;
      }
      if (s[i] == '/') {
        if (i + 1 >= s.size() || s[i + 1] != '>') return false;
        i += 2;
        break;
      }
      if (i == before) return false;  // attributes need leading whitespace
      std::string attr;
      if (!read_name(attr) || !attrs.insert(attr).second) return false;
      skip_ws();
      if (i >= s.size() || s[i] != '=') return false;
      ++i;
      skip_ws();
      if (i >= s.size() || (s[i] != '"' && s[i] != '\'')) return false;
      const char q = s[i++];
      while (i < s.size() && s[i] != q) {
        if (s[i] == '<') return false;
        if (s[i] == '&') {
          if (!entity_ok(i)) return false;
        } else {
          ++i;
        }
      }
      if (i >= s.size()) return false;
      ++i;
    }
  }
  return stack.empty() && roots == 1;
}

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "apoly/bigint.hpp"

namespace apoly {

enum class Side : uint8_t { O = 0, R = 1 };

struct VertexRef {
  Side side;
  uint16_t index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// One element L_O - L_R: vertex index lists, strictly increasing, at most
// three per side (contracted parallel elements reach 2+3).
struct Element {
  uint8_t no = 0, nr = 0;
  std::array<uint16_t, 3> o{}, r{};

  int size() const { return no + nr; }
  bool mixed() const { return no > 0 && nr > 0; }

  void push_o(uint16_t v) { o[no++] = v; }
  void push_r(uint16_t v) { r[nr++] = v; }

  bool contains(Side s, uint16_t v) const {
    const auto& list = s == Side::O ? o : r;
    uint8_t n = s == Side::O ? no : nr;
    for (uint8_t i = 0; i < n; ++i)
      if (list[i] == v) return true;
    return false;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.no != b.no || a.nr != b.nr) return false;
    for (uint8_t i = 0; i < a.no; ++i)
      if (a.o[i] != b.o[i]) return false;
    for (uint8_t i = 0; i < a.nr; ++i)
      if (a.r[i] != b.r[i]) return false;
    return true;
  }

  // a-poly element order: |L_O|+|L_R|, then |L_O|, then vertex lists.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.no != b.no) return a.no < b.no;
    for (uint8_t i = 0; i < a.no; ++i)
      if (a.o[i] != b.o[i]) return a.o[i] < b.o[i];
    for (uint8_t i = 0; i < a.nr; ++i)
      if (a.r[i] != b.r[i]) return a.r[i] < b.r[i];
    return false;
  }
};

enum class Kind : uint8_t { Contacts, Parallel, Minor };

enum class ContactProfile : uint8_t {
  None,          // not contacts kind
  FourSingles,   // four 1-contacts, degree <= 6
  DoubleSingle,  // one 2-contact + two 1-contacts, degree <= 4
  TwoDoubles,    // two 2-contacts, degree <= 4
  TripleSingle,  // one 3-contact + one 1-contact, degree <= 2
};

struct APoly {
  uint8_t count = 0;
  std::array<Element, 4> elems{};

  const Element* begin() const { return elems.data(); }
  const Element* end() const { return elems.data() + count; }
  const Element& operator[](std::size_t i) const { return elems[i]; }

  void push(const Element& e) { elems[count++] = e; }

  void sort_elements() {
    for (uint8_t i = 1; i < count; ++i)
      for (uint8_t j = i; j > 0 && elems[j] < elems[j - 1]; --j)
        std::swap(elems[j], elems[j - 1]);
  }

  friend bool operator==(const APoly& a, const APoly& b) {
    if (a.count != b.count) return false;
    for (uint8_t i = 0; i < a.count; ++i)
      if (!(a.elems[i] == b.elems[i])) return false;
    return true;
  }

  friend bool operator<(const APoly& a, const APoly& b) {
    for (uint8_t i = 0; i < a.count && i < b.count; ++i) {
      if (a.elems[i] < b.elems[i]) return true;
      if (b.elems[i] < a.elems[i]) return false;
    }
    return a.count < b.count;
  }

  uint16_t max_index(Side s) const {
    int m = -1;
    for (const Element& e : *this) {
      const auto& list = s == Side::O ? e.o : e.r;
      uint8_t n = s == Side::O ? e.no : e.nr;
      for (uint8_t i = 0; i < n; ++i) m = std::max(m, static_cast<int>(list[i]));
    }
    return static_cast<uint16_t>(m);  // 0xffff when the side is unused
  }
};

struct KindInfo {
  Kind kind;
  ContactProfile profile = ContactProfile::None;
};

// Classifies a structurally valid a-poly; throws on malformed shapes.
inline KindInfo classify_kind(const APoly& a) {
  auto is_one_contact = [](const Element& e) {
    return e.size() == 4 && e.mixed();
  };
  auto is_two_contact = [](const Element& e) {
    return e.size() == 3 && e.mixed();
  };
  auto is_minor_elem = [](const Element& e) {
    return (e.no == 0 && e.nr == 3) || (e.no == 3 && e.nr == 0) || (e.no == 2 && e.nr == 2);
  };
  auto is_parallel_edge = [](const Element& e) {
    return (e.no == 0 && e.nr == 2) || (e.no == 2 && e.nr == 0);
  };
  switch (a.count) {
    case 1: {
      const Element& e = a[0];
      if ((e.no == 2 && e.nr == 3) || (e.no == 3 && e.nr == 2))
        return {Kind::Parallel};
      break;
    }
    case 2: {
      if (a[0].no == 1 && a[0].nr == 1 && is_one_contact(a[1]))
        return {Kind::Contacts, ContactProfile::TripleSingle};
      if (is_two_contact(a[0]) && is_two_contact(a[1]))
        return {Kind::Contacts, ContactProfile::TwoDoubles};
      break;
    }
    case 3: {
      if (is_two_contact(a[0]) && is_one_contact(a[1]) && is_one_contact(a[2]))
        return {Kind::Contacts, ContactProfile::DoubleSingle};
      if (is_parallel_edge(a[0]) && is_parallel_edge(a[1]) && is_parallel_edge(a[2]))
        return {Kind::Parallel};
      if (is_minor_elem(a[0]) && is_minor_elem(a[1]) && is_minor_elem(a[2]))
        return {Kind::Minor};
      break;
    }
    case 4: {
      if (is_one_contact(a[0]) && is_one_contact(a[1]) && is_one_contact(a[2]) &&
          is_one_contact(a[3]))
        return {Kind::Contacts, ContactProfile::FourSingles};
      break;
    }
    default:
      break;
  }
  throw Error("classify_kind: malformed a-poly");
}

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Contacts: return "contacts";
    case Kind::Parallel: return "parallel";
    default: return "minor";
  }
}

inline Kind kind_from_name(std::string_view s) {
  if (s == "contacts") return Kind::Contacts;
  if (s == "parallel") return Kind::Parallel;
  if (s == "minor") return Kind::Minor;
  throw Error("unknown kind: " + std::string(s));
}

// Structural validation: element shape legality, strictly increasing
// index lists, canonical element order.
inline void validate(const APoly& a) {
  if (a.count == 0) throw Error("a-poly: no elements");
  for (const Element& e : a) {
    if (e.no > 3 || e.nr > 3 || e.size() < 2 || e.size() > 5)
      throw Error("a-poly: bad element arity");
    for (uint8_t i = 1; i < e.no; ++i)
      if (e.o[i - 1] >= e.o[i]) throw Error("a-poly: O list not increasing");
    for (uint8_t i = 1; i < e.nr; ++i)
      if (e.r[i - 1] >= e.r[i]) throw Error("a-poly: R list not increasing");
  }
  for (uint8_t i = 1; i < a.count; ++i)
    if (a.elems[i] < a.elems[i - 1]) throw Error("a-poly: elements out of order");
  classify_kind(a);
}

// --- text form: (o0-r0r1r2,o0o1-r0r3) ------------------------------------

inline std::string to_string(const Element& e) {
  std::string s;
  for (uint8_t i = 0; i < e.no; ++i) s += "o" + std::to_string(e.o[i]);
  s += "-";
  for (uint8_t i = 0; i < e.nr; ++i) s += "r" + std::to_string(e.r[i]);
  return s;
}

inline std::string to_string(const APoly& a) {
  std::string s = "(";
  for (uint8_t i = 0; i < a.count; ++i) {
    if (i) s += ",";
    s += to_string(a[i]);
  }
  s += ")";
  return s;
}

inline APoly parse_apoly(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error(std::string("parse a-poly '") + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') fail("expected '('");
  ++i;
  APoly a;
  for (;;) {
    skip_ws();
    if (a.count >= 4) fail("too many elements");
    Element e;
    // O part
    while (i < text.size() && text[i] == 'o') {
      ++i;
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) fail("bad o index");
      unsigned v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      if (e.no >= 3) fail("too many O vertices");
      e.push_o(static_cast<uint16_t>(v));
    }
    skip_ws();
    if (i >= text.size() || text[i] != '-') fail("expected '-'");
    ++i;
    skip_ws();
    while (i < text.size() && text[i] == 'r') {
      ++i;
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) fail("bad r index");
      unsigned v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      if (e.nr >= 3) fail("too many R vertices");
      e.push_r(static_cast<uint16_t>(v));
    }
    a.push(e);
    skip_ws();
    if (i >= text.size()) fail("unterminated");
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ')') {
      ++i;
      break;
    }
    fail("unexpected character");
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  validate(a);
  return a;
}

}  // namespace apoly

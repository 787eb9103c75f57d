#include "latsurf/words.hpp"

#include <stdexcept>

namespace latsurf {

char gen_char(Gen g) {
  switch (g) {
    case Gen::A: return 'A';
    case Gen::B: return 'B';
    case Gen::C: return 'C';
    case Gen::D: return 'D';
    case Gen::E: return 'E';
    case Gen::NegI: return 'J';
  }
  return '?';
}

GroupWord GroupWord::parse(const std::string& text) {
  std::vector<Letter> ls;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t') continue;
    Gen g;
    switch (ch) {
      case 'A': g = Gen::A; break;
      case 'B': g = Gen::B; break;
      case 'C': g = Gen::C; break;
      case 'D': g = Gen::D; break;
      case 'E': g = Gen::E; break;
      case 'J': g = Gen::NegI; break;
      default:
        throw std::invalid_argument(std::string("bad word letter '") + ch + "' in \"" + text + "\"");
    }
    int e = 1;
    if (i + 1 < text.size() && text[i + 1] == '\'') {
      e = -1;
      ++i;
    }
    ls.push_back({g, e});
  }
  return GroupWord(std::move(ls));
}

void GroupWord::normalize() {
  for (auto& l : letters_)
    if (is_involution(l.gen)) l.exp = 1;
  // cancel adjacent inverse pairs until stable
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
      if (!out.empty() && out.back().gen == l.gen &&
          (is_involution(l.gen) || out.back().exp == -l.exp)) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(l);
      }
    }
    letters_ = std::move(out);
  }
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(ls));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back({it->gen, -it->exp});
  return GroupWord(std::move(ls));
}

GroupWord GroupWord::pow(int n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  GroupWord acc;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = acc * base;
  return acc;
}

std::string GroupWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    out += gen_char(l.gen);
    if (l.exp < 0) out += '\'';
  }
  return out;
}

GroupWord GroupWord::rewritten_for_homology() const {
  std::vector<Letter> ls;
  for (const auto& l : letters_) {
    switch (l.gen) {
      case Gen::B:  // B = D A, and B is its own inverse
        ls.push_back({Gen::D, 1});
        ls.push_back({Gen::A, 1});
        break;
      case Gen::C:  // C = (-I) E B = (-I) E D A
        ls.push_back({Gen::NegI, 1});
        ls.push_back({Gen::E, 1});
        ls.push_back({Gen::D, 1});
        ls.push_back({Gen::A, 1});
        break;
      default:
        ls.push_back(l);
    }
  }
  return GroupWord(std::move(ls));
}

int GroupWord::det_sign() const {
  int s = 1;
  for (const auto& l : letters_)
    if (l.gen == Gen::A || l.gen == Gen::B || l.gen == Gen::C) s = -s;
  return s;
}

}  // namespace latsurf

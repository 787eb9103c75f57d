#pragma once

#include <string>
#include <vector>

#include "latsurf/rational.hpp"

namespace latsurf {

// Generators of the group G± = <A,B,C,-I | A^2=B^2=C^2=(-I)^2=I> together with
// the derived twist generators D = B*A and E = (-I)*C*B. In word syntax the
// letter J stands for -I and a trailing apostrophe marks an inverse: "DE'".
enum class Gen { A, B, C, D, E, NegI };

inline bool is_involution(Gen g) { return g != Gen::D && g != Gen::E; }
char gen_char(Gen g);

struct Letter {
  Gen gen;
  int exp;  // +1 or -1; involutions are normalized to +1

  bool operator==(const Letter&) const = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) { normalize(); }

  static GroupWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  GroupWord operator*(const GroupWord& o) const;
  GroupWord inverse() const;
  GroupWord pow(int n) const;

  std::string str() const;
  bool operator==(const GroupWord&) const = default;

  // Word over {A, D, E, -I} only, obtained by the substitutions B = D A and
  // C = (-I) E D A. Matrix evaluation is unchanged; this is the alphabet the
  // homology actions are defined on.
  GroupWord rewritten_for_homology() const;

  // Number of elementary generator applications a homology action of this
  // word performs, i.e. the length of the rewritten word. Each application
  // consumes one top coordinate of a truncated class.
  int homology_reach() const { return static_cast<int>(rewritten_for_homology().size()); }

  // Product of the generator determinants; constant in c (each generator has
  // constant determinant: A, B, C -> -1 and D, E, -I -> +1).
  int det_sign() const;

 private:
  void normalize();
  std::vector<Letter> letters_;
};

}  // namespace latsurf

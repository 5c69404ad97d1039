#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkprod/ideal.hpp"
#include "hkprod/ring.hpp"

namespace hkprod {

/// Line-oriented session file:
///
///   # comment
///   ring: p=2; vars=x,y,z; mod=[x^3+y^3+z^3]; order=grevlex(y>x>z)
///   ideal J = [y, z]
///
/// `mod` and `order` are optional; the precedence list after the order name is
/// optional too (default: declaration order, first variable highest).
class Session {
 public:
  Session(RingPresentation ring, std::vector<std::pair<std::string, IdealHandle>> ideals);

  const RingPresentation& ring() const { return ring_; }
  const std::vector<std::pair<std::string, IdealHandle>>& ideals() const { return ideals_; }
  bool has_ideal(std::string_view name) const;
  /// Throws ParseError for unknown names.
  const IdealHandle& ideal(std::string_view name) const;

  std::string serialize() const;

 private:
  RingPresentation ring_;
  std::vector<std::pair<std::string, IdealHandle>> ideals_;
};

Session parse_session(std::string_view text);
Session load_session(const std::string& path);

/// Splits "[a, b(c, d)]" style lists on top-level commas.
std::vector<std::string> split_generator_list(std::string_view text);

}  // namespace hkprod

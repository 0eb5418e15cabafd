#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardimer/error.hpp"
#include "hardimer/numeric.hpp"

namespace hardimer {

enum class Colour : std::uint8_t { Blue, Red };

constexpr Colour opposite(Colour c) noexcept {
  return c == Colour::Blue ? Colour::Red : Colour::Blue;
}

constexpr char to_char(Colour c) noexcept { return c == Colour::Blue ? 'B' : 'R'; }

/// A length-N run of blue/red sites, N >= 1. Immutable.
class ColourSequence {
 public:
  explicit ColourSequence(std::vector<Colour> sites);

  /// Parses "BRRB..." (case-insensitive).
  static ColourSequence from_string(std::string_view text);

  /// Site i is Red iff bit i of `bits` is set.
  static ColourSequence from_bits(std::uint64_t bits, int length);

  int size() const noexcept { return static_cast<int>(sites_.size()); }
  Colour operator[](int i) const { return sites_[static_cast<std::size_t>(i)]; }
  std::span<const Colour> sites() const noexcept { return sites_; }

  ColourSequence recoloured() const;
  std::string to_string() const;

  friend bool operator==(const ColourSequence&, const ColourSequence&) = default;

 private:
  std::vector<Colour> sites_;
};

/// An edge between two nearest same-colour sites; [start, end] is closed.
struct Dimer {
  int start = 0;
  int end = 0;
  Colour colour = Colour::Blue;

  int interior() const noexcept { return end - start - 1; }

  friend auto operator<=>(const Dimer&, const Dimer&) = default;
};

enum class ConfigError {
  None,
  IndexOutOfRange,
  StartNotBeforeEnd,
  EndpointColourMismatch,
  NotNearestSameColour,
  Overlap,
};

std::string_view to_string(ConfigError e) noexcept;

/// Outcome of validate_config. On rejection `dimer` indexes the offending
/// dimer in start-sorted order.
struct Validation {
  ConfigError error = ConfigError::None;
  std::size_t dimer = 0;

  explicit operator bool() const noexcept { return error == ConfigError::None; }
  std::string message() const;
};

Validation validate_config(const ColourSequence& seq, std::span<const Dimer> dimers);

class InvalidConfiguration : public Error {
 public:
  explicit InvalidConfiguration(Validation v);
  const Validation& validation() const noexcept { return validation_; }

 private:
  Validation validation_;
};

/// A validated hard-dimer configuration. Dimers are kept sorted by start.
class DimerConfig {
 public:
  /// Throws InvalidConfiguration if any dimer or hardness invariant fails.
  DimerConfig(ColourSequence sequence, std::vector<Dimer> dimers);

  const ColourSequence& sequence() const noexcept { return sequence_; }
  std::span<const Dimer> dimers() const noexcept { return dimers_; }
  int size() const noexcept { return sequence_.size(); }

  DimerConfig recoloured() const;

  friend bool operator==(const DimerConfig&, const DimerConfig&) = default;

 private:
  ColourSequence sequence_;
  std::vector<Dimer> dimers_;
};

struct ConfigStats {
  int n_b = 0;
  int n_r = 0;
  int n_br = 0;
  int gamma_b = 0;
  int gamma_r = 0;

  int n() const noexcept { return 2 * n_b + 2 * n_r + n_br + gamma_b + gamma_r; }
  /// Dimer count.
  int s() const noexcept { return n_b + n_r; }
  /// Sites covered by dimers.
  int t() const noexcept { return 2 * s() + n_br; }
  /// Dimers plus single points.
  int k() const noexcept { return n() - t() + s(); }
  /// Total dimer length.
  int h() const noexcept { return t() - s(); }

  friend auto operator<=>(const ConfigStats&, const ConfigStats&) = default;
};

ConfigStats stats(const DimerConfig& config);

/// Statistics from a raw dimer list; the caller guarantees validity.
ConfigStats stats(const ColourSequence& seq, std::span<const Dimer> dimers);

/// u^{n_b} v^{n_r} w^{n_br}, for any scalar with exact or floating multiply.
template <class Scalar>
Scalar monomial(const DimerConfig& config, const Scalar& u, const Scalar& v, const Scalar& w) {
  const ConfigStats st = stats(config);
  return pow_ui(u, static_cast<unsigned long>(st.n_b)) *
         pow_ui(v, static_cast<unsigned long>(st.n_r)) *
         pow_ui(w, static_cast<unsigned long>(st.n_br));
}

}  // namespace hardimer

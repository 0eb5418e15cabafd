#include "hardimer/core.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace hardimer {

ColourSequence::ColourSequence(std::vector<Colour> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw Error("colour sequence must have at least one site");
}

ColourSequence ColourSequence::from_string(std::string_view text) {
  std::vector<Colour> sites;
  sites.reserve(text.size());
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'B': sites.push_back(Colour::Blue); break;
      case 'R': sites.push_back(Colour::Red); break;
      default: throw Error(std::string("invalid colour character '") + ch + "'");
    }
  }
  return ColourSequence(std::move(sites));
}

ColourSequence ColourSequence::from_bits(std::uint64_t bits, int length) {
  if (length < 1 || length > 64) throw Error("sequence length must be in [1, 64]");
  std::vector<Colour> sites(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    sites[static_cast<std::size_t>(i)] = ((bits >> i) & 1U) ? Colour::Red : Colour::Blue;
  }
  return ColourSequence(std::move(sites));
}

ColourSequence ColourSequence::recoloured() const {
  std::vector<Colour> out(sites_.size());
  std::transform(sites_.begin(), sites_.end(), out.begin(), opposite);
  return ColourSequence(std::move(out));
}

std::string ColourSequence::to_string() const {
  std::string out;
  out.reserve(sites_.size());
  for (Colour c : sites_) out.push_back(to_char(c));
  return out;
}

std::string_view to_string(ConfigError e) noexcept {
  switch (e) {
    case ConfigError::None: return "None";
    case ConfigError::IndexOutOfRange: return "IndexOutOfRange";
    case ConfigError::StartNotBeforeEnd: return "StartNotBeforeEnd";
    case ConfigError::EndpointColourMismatch: return "EndpointColourMismatch";
    case ConfigError::NotNearestSameColour: return "NotNearestSameColour";
    case ConfigError::Overlap: return "Overlap";
  }
  return "Unknown";
}

std::string Validation::message() const {
  if (error == ConfigError::None) return "valid";
  return std::string(to_string(error)) + " at dimer " + std::to_string(dimer);
}

Validation validate_config(const ColourSequence& seq, std::span<const Dimer> dimers) {
  std::vector<Dimer> sorted(dimers.begin(), dimers.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Dimer& a, const Dimer& b) { return a.start < b.start; });

  const int n = seq.size();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Dimer& d = sorted[i];
    if (d.start < 0 || d.end < 0 || d.start >= n || d.end >= n) {
      return {ConfigError::IndexOutOfRange, i};
    }
    if (d.start >= d.end) return {ConfigError::StartNotBeforeEnd, i};
    if (seq[d.start] != d.colour || seq[d.end] != d.colour) {
      return {ConfigError::EndpointColourMismatch, i};
    }
    for (int j = d.start + 1; j < d.end; ++j) {
      if (seq[j] == d.colour) return {ConfigError::NotNearestSameColour, i};
    }
    // Closed intervals: a shared endpoint is an intersection.
    if (i > 0 && sorted[i - 1].end >= d.start) return {ConfigError::Overlap, i};
  }
  return {};
}

InvalidConfiguration::InvalidConfiguration(Validation v)
    : Error("invalid hard-dimer configuration: " + v.message()), validation_(v) {}

DimerConfig::DimerConfig(ColourSequence sequence, std::vector<Dimer> dimers)
    : sequence_(std::move(sequence)), dimers_(std::move(dimers)) {
  if (Validation v = validate_config(sequence_, dimers_); !v) throw InvalidConfiguration(v);
  std::stable_sort(dimers_.begin(), dimers_.end(),
                   [](const Dimer& a, const Dimer& b) { return a.start < b.start; });
}

DimerConfig DimerConfig::recoloured() const {
  std::vector<Dimer> out(dimers_.begin(), dimers_.end());
  for (Dimer& d : out) d.colour = opposite(d.colour);
  return DimerConfig(sequence_.recoloured(), std::move(out));
}

ConfigStats stats(const ColourSequence& seq, std::span<const Dimer> dimers) {
  ConfigStats st;
  int covered_blue = 0;
  int covered_red = 0;
  for (const Dimer& d : dimers) {
    if (d.colour == Colour::Blue) {
      ++st.n_b;
      covered_blue += 2;
      covered_red += d.interior();
    } else {
      ++st.n_r;
      covered_red += 2;
      covered_blue += d.interior();
    }
    st.n_br += d.interior();
  }
  int blue = 0;
  for (Colour c : seq.sites()) blue += (c == Colour::Blue);
  st.gamma_b = blue - covered_blue;
  st.gamma_r = (seq.size() - blue) - covered_red;
  return st;
}

ConfigStats stats(const DimerConfig& config) { return stats(config.sequence(), config.dimers()); }

}  // namespace hardimer

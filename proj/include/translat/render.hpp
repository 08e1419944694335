#pragma once

#include <string>

#include "translat/enumeration.hpp"

namespace translat {

enum class RenderFormat { Dot, Tikz, Json };
enum class RenderTarget { SubgroupLattice, QuotientPoset, TransferSystem, TsHasse };

struct RenderSpec {
  RenderFormat format = RenderFormat::Dot;
  bool ascii = false;  // S/C/L/c markers instead of glyphs
};

RenderFormat parse_render_format(const std::string& name);
RenderTarget parse_render_target(const std::string& name);

// Pure functions of their input: identical bytes for identical inputs.
std::string render_lattice(const Lattice& l, const LatticeAction& a,
                           const RenderSpec& spec);
std::string render_quotient(const QuotientPoset& q, const RenderSpec& spec);
std::string render_transfer(const Lattice& l, const TransferSystem& ts,
                            const RenderSpec& spec);
std::string render_ts_hasse(const Lattice& l, const TsLattice& tsl,
                            const RenderSpec& spec);

// △ ♡ ◆ ◇ (or S C L c in ascii mode); connected shows the hollow glyph.
std::string decoration_glyphs(const Decorations& d, bool ascii);

}  // namespace translat

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "wdlkit/closure.hpp"
#include "wdlkit/context.hpp"
#include "wdlkit/dicomplementation.hpp"

namespace wdlkit {

/// .lat: `elements` line, `cover lower upper` lines, optional total `up x y`
/// and `down x y` tables. '#' comments. Files without any up/down lines get
/// the trivial dicomplementation; partially declared tables are an error.
Dicomplementation parse_lat(std::string_view text, std::string_view origin = "<string>");
Dicomplementation load_lat(const std::filesystem::path& path);
std::string to_lat(const Dicomplementation& d);
std::string to_lat(const FiniteLattice& l);

/// Burmeister .cxt, bit-exact.
FormalContext parse_cxt(std::string_view text, std::string_view origin = "<string>");
FormalContext load_cxt(const std::filesystem::path& path);
std::string to_cxt(const FormalContext& k);

/// Set-system files: a `ground` line followed by `closed`/`open` set lines.
/// A file declares either a closure system or a kernel system, never both.
std::variant<ClosureSystem, KernelSystem> parse_set_system(std::string_view text,
                                                           std::string_view origin = "<string>");
std::variant<ClosureSystem, KernelSystem> load_set_system(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

} // namespace wdlkit

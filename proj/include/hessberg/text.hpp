#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hessberg/hessenberg.hpp"
#include "hessberg/nilpotent.hpp"
#include "hessberg/root_system.hpp"
#include "hessberg/weyl.hpp"

namespace hessberg {

// Root syntax: a coefficient vector "[1,1]" (optionally "-[1,1]") or a
// symbolic sum "a1+a2", "3a1+2a2", "-a1-a2". Resolved against the rank only;
// whether the vector is a root is the caller's check.
Root parse_root_text(const std::string& text, int rank);

std::string root_symbolic(const Root& r);       // "a1+a2", "-a1"
std::string root_vector_text(const Root& r);    // "[1,1]"

// Word syntax: whitespace-separated letters "s1 s2 s1", identity "e".
// Returns 0-based simple indices.
std::vector<int> parse_word_text(const std::string& text, int rank);
std::string word_text(const std::vector<int>& letters);

// Levi syntax: comma-separated 1-based simple indices, "" for the torus.
std::uint32_t parse_levi_text(const std::string& text, int rank);
std::string levi_text(std::uint32_t mask, int rank);

// Hessenberg space syntax: "neg=-a1,-a2" (possibly "neg="), or "h=2,3,3"
// for type A. "all" is only meaningful to catalog-style commands and is
// rejected here.
HessenbergSpace parse_hessenberg_text(const RootSystem& rs, const std::string& text);

// Nilpotent support syntax: comma-separated positive roots, "" for zero.
NilpotentSupport parse_nilpotent_text(const RootSystem& rs, const std::string& text);

}  // namespace hessberg

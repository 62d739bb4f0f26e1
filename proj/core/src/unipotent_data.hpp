#pragma once

namespace klcells::detail {

/// Curated class tables, embedded from data/unipotent at configure time.
extern const char* const kUnipotentB2;
extern const char* const kUnipotentG2;

}  // namespace klcells::detail

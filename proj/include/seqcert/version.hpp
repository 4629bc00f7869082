#pragma once

#ifndef SEQCERT_VERSION_STRING
#define SEQCERT_VERSION_STRING "0.0.0"
#endif

namespace seqcert {

inline constexpr const char* kVersion = SEQCERT_VERSION_STRING;

}  // namespace seqcert

#ifndef ORDCERT_VERSION_HPP
#define ORDCERT_VERSION_HPP

namespace ordcert {

inline constexpr const char* kToolVersion = "ordcert 0.1.0";

}

#endif

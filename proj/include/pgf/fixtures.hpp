// Copyright 2026 The pgroup-family Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file fixtures.hpp
 * @brief Hand-written pc presentations of every group of order 2, 4, 8,
 * 3, 9 and 27.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pgf::fixtures {

inline constexpr std::string_view kOrder2 = R"(# C2
GROUP 2 1
PRIME 2
NGENS 1
END
)";

inline constexpr std::string_view kOrder4 = R"(# C4
GROUP 4 1
PRIME 2
NGENS 2
POWER 1 = g2
END
# C2 x C2
GROUP 4 2
PRIME 2
NGENS 2
END
)";

inline constexpr std::string_view kOrder8 = R"(# C8
GROUP 8 1
PRIME 2
NGENS 3
POWER 1 = g2
POWER 2 = g3
END
# C4 x C2
GROUP 8 2
PRIME 2
NGENS 3
POWER 1 = g3
END
# D4
GROUP 8 3
PRIME 2
NGENS 3
COMM 2 1 = g3
END
# Q8
GROUP 8 4
PRIME 2
NGENS 3
POWER 1 = g3
POWER 2 = g3
COMM 2 1 = g3
END
# C2 x C2 x C2
GROUP 8 5
PRIME 2
NGENS 3
END
)";

inline constexpr std::string_view kOrder3 = R"(# C3
GROUP 3 1
PRIME 3
NGENS 1
END
)";

inline constexpr std::string_view kOrder9 = R"(# C9
GROUP 9 1
PRIME 3
NGENS 2
POWER 1 = g2
END
# C3 x C3
GROUP 9 2
PRIME 3
NGENS 2
END
)";

inline constexpr std::string_view kOrder27 = R"(# C27
GROUP 27 1
PRIME 3
NGENS 3
POWER 1 = g2
POWER 2 = g3
END
# C9 x C3
GROUP 27 2
PRIME 3
NGENS 3
POWER 1 = g3
END
# Heisenberg group, exponent 3
GROUP 27 3
PRIME 3
NGENS 3
COMM 2 1 = g3
END
# C9 : C3, exponent 9
GROUP 27 4
PRIME 3
NGENS 3
POWER 1 = g3
COMM 2 1 = g3
END
# C3 x C3 x C3
GROUP 27 5
PRIME 3
NGENS 3
END
)";

/// Fixture text for one order; throws std::out_of_range for other orders.
inline std::string_view for_order(std::uint64_t order) {
  switch (order) {
    case 2: return kOrder2;
    case 4: return kOrder4;
    case 8: return kOrder8;
    case 3: return kOrder3;
    case 9: return kOrder9;
    case 27: return kOrder27;
    default: throw std::out_of_range("no embedded fixture for order " + std::to_string(order));
  }
}

inline constexpr std::uint64_t kOrders[] = {2, 4, 8, 3, 9, 27};

}  // namespace pgf::fixtures

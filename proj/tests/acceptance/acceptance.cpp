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

// Acceptance run: one line per criterion, exit status from the gating ones.
// Budgets and expected counts are pinned in pgf/claims.hpp. Set PGF_LONG=1
// to include the optional extended counts.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "pgf/claims.hpp"

int main() {
  pgf::VerifyOptions opt;
  opt.data_dir = PGF_DATA_DIR;
  const char* long_env = std::getenv("PGF_LONG");
  opt.include_long = long_env && std::strcmp(long_env, "1") == 0;

  pgf::VerifyReport rep = pgf::run_verify(opt, [](const pgf::ClaimResult& c) {
    std::cout << pgf::VerifyReport{{c}}.table() << std::flush;
  });
  std::cout << (rep.ok() ? "acceptance: PASS\n" : "acceptance: FAIL\n");
  return rep.ok() ? EXIT_SUCCESS : EXIT_FAILURE;
}

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

#pragma once

#include "pgf/error.hpp"
#include "pgf/perm.hpp"
#include "pgf/perm_group.hpp"
#include "pgf/pc_presentation.hpp"
#include "pgf/group_ops.hpp"
#include "pgf/lattice.hpp"
#include "pgf/cert.hpp"
#include "pgf/semiabelian.hpp"
#include "pgf/ramification.hpp"
#include "pgf/census.hpp"
#include "pgf/fixtures.hpp"
#include "pgf/claims.hpp"

// Copyright 2026 The entcert Authors
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

// Umbrella header for the numerical core. The JSON state I/O
// (entcert/state_io.hpp), report serialization (entcert/serialize.hpp) and the
// CLI (entcert/cli.hpp) additionally need the vendored nlohmann/json and CLI11
// headers on the include path.

#include "entcert/audit.hpp"
#include "entcert/bounds.hpp"
#include "entcert/entropy.hpp"
#include "entcert/error.hpp"
#include "entcert/measures.hpp"
#include "entcert/qstate.hpp"
#include "entcert/rng.hpp"
#include "entcert/spectral.hpp"
#include "entcert/theorems.hpp"

// Copyright 2026 The globent Authors
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

#include "globent/convex_roof.hpp"
#include "globent/errors.hpp"
#include "globent/ground_state.hpp"
#include "globent/measures.hpp"
#include "globent/pauli.hpp"
#include "globent/qstate.hpp"
#include "globent/simplex.hpp"
#include "globent/symmetric.hpp"
#include "globent/tolerances.hpp"

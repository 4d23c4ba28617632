// Copyright 2026 The gsmve Authors
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

#include "gsmve/channels.hpp"
#include "gsmve/csv.hpp"
#include "gsmve/errors.hpp"
#include "gsmve/gateset.hpp"
#include "gsmve/gateset_io.hpp"
#include "gsmve/metrics.hpp"
#include "gsmve/parallel.hpp"
#include "gsmve/pl_core.hpp"
#include "gsmve/protocol.hpp"
#include "gsmve/protocol_io.hpp"
#include "gsmve/rng.hpp"
#include "gsmve/sampling.hpp"

// Copyright 2026 The ladder Authors
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

// Umbrella header.

#pragma once

#include "ladder/half_int.hpp"
#include "ladder/segment.hpp"
#include "ladder/multisegment.hpp"
#include "ladder/virtual.hpp"
#include "ladder/gl_ring.hpp"
#include "ladder/classical.hpp"
#include "ladder/decomposer.hpp"
#include "ladder/json.hpp"
#include "ladder/render.hpp"
#include "ladder/oracle.hpp"

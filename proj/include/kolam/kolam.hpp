// Copyright 2026 The Kolam Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "kolam/assignment.hpp"
#include "kolam/count.hpp"
#include "kolam/engine.hpp"
#include "kolam/errors.hpp"
#include "kolam/loop_poly.hpp"
#include "kolam/metric.hpp"
#include "kolam/morse.hpp"
#include "kolam/morse_io.hpp"
#include "kolam/pairing.hpp"
#include "kolam/reduce.hpp"
#include "kolam/render.hpp"
#include "kolam/state_vector.hpp"

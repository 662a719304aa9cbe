// Copyright 2026 The fouropt Authors
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

#include "fouropt/model.hpp"
#include "fouropt/schemes.hpp"
#include "fouropt/symmetry.hpp"
#include "fouropt/faults.hpp"
#include "fouropt/oracle.hpp"
#include "fouropt/deberg.hpp"
#include "fouropt/glover.hpp"
#include "fouropt/driver.hpp"
#include "fouropt/instance.hpp"
#include "fouropt/report.hpp"
#include "fouropt/verify.hpp"
#include "fouropt/bench.hpp"

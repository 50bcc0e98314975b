// Copyright 2026 The PEA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pea/agreement.hpp"
#include "pea/analytics.hpp"
#include "pea/calibration.hpp"
#include "pea/corpus.hpp"
#include "pea/emotion_set.hpp"
#include "pea/error.hpp"
#include "pea/random.hpp"
#include "pea/tasks.hpp"
#include "pea/version.hpp"
#include "pea/wheel.hpp"

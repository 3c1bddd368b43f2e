// Copyright 2026 The hermitian-grs Authors.
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

#include "hgrs/combinatorics.hpp"
#include "hgrs/constructions.hpp"
#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/grs.hpp"
#include "hgrs/io.hpp"
#include "hgrs/linalg.hpp"
#include "hgrs/poly.hpp"
#include "hgrs/scan.hpp"
#include "hgrs/selfdual.hpp"

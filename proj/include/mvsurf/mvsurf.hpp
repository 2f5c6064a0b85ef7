/*
   Copyright 2026 The mvsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVSURF_MVSURF_HPP
#define MVSURF_MVSURF_HPP

#include "builders.hpp"
#include "errors.hpp"
#include "exactalg.hpp"
#include "lattice_point.hpp"
#include "latticegeom.hpp"
#include "matrix_io.hpp"
#include "resultant.hpp"
#include "rng.hpp"
#include "verify.hpp"

#endif  // MVSURF_MVSURF_HPP

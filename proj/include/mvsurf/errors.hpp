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

#ifndef MVSURF_ERRORS_HPP
#define MVSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvsurf {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Non-square input to a determinant, mismatched shapes.
class DimensionError : public Error {
   public:
    using Error::Error;
};

// Modulus not prime, or too small for the requested interpolation.
class ModulusError : public Error {
   public:
    using Error::Error;
};

// Symbolic kernels refuse inputs above their size guard.
class CapacityError : public Error {
   public:
    using Error::Error;
};

// Lattice input does not span a 2D polytope.
class DegeneracyError : public Error {
   public:
    using Error::Error;
};

// Support/chain/deletion data violating the counting constraints.
class ConstraintError : public Error {
   public:
    using Error::Error;
};

// A coefficient referenced by a template has no assigned value.
class IncompletenessError : public Error {
   public:
    using Error::Error;
};

// Should never fire on well-formed input (e.g. a nonexact Dixon division).
class InternalError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace mvsurf

#endif  // MVSURF_ERRORS_HPP

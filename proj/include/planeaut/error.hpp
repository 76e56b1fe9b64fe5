/*
   Copyright 2026 The planeaut Authors

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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace planeaut {

enum class ErrorKind {
    IncompatibleField,
    ZeroPolynomial,
    BadInput,
    SyntaxError,
    UnknownVariable,
    NotAnAutomorphism,
    NotTriangularizable,
    NotLocallyFinite,
    NotSemisimple,
    NotInS,
    NonInvertibleFamily,
    NegativeOrder,
    UnsupportedExtension,
    BoundTooLarge,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every recoverable failure of the library is reported as an Error carrying
/// its kind; internal invariant violations use std::logic_error instead.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

   private:
    ErrorKind kind_;
};

/// Parse failures remember the byte offset of the offending character.
class ParseError : public Error {
   public:
    ParseError(ErrorKind kind, std::size_t offset, const std::string& what)
        : Error(kind, what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

}  // namespace planeaut

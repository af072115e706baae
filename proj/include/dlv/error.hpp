/*
   Copyright 2026 the dlv authors

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

#ifndef DLV_ERROR_HPP
#define DLV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dlv {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Configuration / input validation problems (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// A stage ran out of its ball/depth/trial budget (CLI exit code 3).
struct BudgetError : Error {
    using Error::Error;
};

struct InvertZero : Error {
    InvertZero() : Error("inversion of zero (or of a series with no known leading coefficient)") {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w = "empty precision window") : Error(w) {}
};

struct CarrierMismatch : Error {
    CarrierMismatch() : Error("twisted polynomials over different carriers") {}
};

struct DecompositionInvalid : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct NotFinitePresentation : Error {
    using Error::Error;
};

// ct_free_basis failure; carries a human-readable certificate.
struct NotFree : Error {
    std::string certificate;
    explicit NotFree(const std::string& cert)
        : Error("module is not free over Fq[G]: " + cert), certificate(cert) {}
};

struct NoFrobenius : Error {
    NoFrobenius() : Error("module carries no Frobenius action") {}
};

struct DivergenceSuspected : Error {
    using Error::Error;
};

struct NucleusTooSmall : BudgetError {
    using BudgetError::BudgetError;
};

struct IsometryBallNotFound : BudgetError {
    using BudgetError::BudgetError;
};

struct StabilizationBudgetExceeded : BudgetError {
    using BudgetError::BudgetError;
};

struct RankNotReached : BudgetError {
    using BudgetError::BudgetError;
};

struct NoSectionAvailable : Error {
    using Error::Error;
};

struct WildWithoutBasis : Error {
    using Error::Error;
};

struct InvalidTamingBasis : Error {
    using Error::Error;
};

struct NotPolynomialWithinPrecision : Error {
    using Error::Error;
};

struct MismatchWithDiff : Error {
    using Error::Error;
};

}  // namespace dlv

#endif

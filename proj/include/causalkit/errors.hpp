#pragma once

#include <stdexcept>
#include <string>

namespace causalkit {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NodeOutOfRange : public Error { public: using Error::Error; };
class NodeMismatch : public Error { public: using Error::Error; };
class CyclicInput : public Error { public: using Error::Error; };
class NotExtendable : public Error { public: using Error::Error; };
class MissingSepset : public Error { public: using Error::Error; };

class InsufficientSamples : public Error { public: using Error::Error; };
class SingularCorrelation : public Error { public: using Error::Error; };
class NotDiscrete : public Error { public: using Error::Error; };
class NotContinuous : public Error { public: using Error::Error; };
class MissingValues : public Error { public: using Error::Error; };
class NumericalFailure : public Error { public: using Error::Error; };

class RankDeficient : public Error { public: using Error::Error; };
class ZeroVariance : public Error { public: using Error::Error; };
class EmptyDataset : public Error { public: using Error::Error; };
class SingularDesign : public Error { public: using Error::Error; };

class SchemaViolation : public Error { public: using Error::Error; };

// Input parsing failure carrying the 1-based row/column location.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int row, int col)
        : Error(msg + " (row " + std::to_string(row) + ", col " + std::to_string(col) + ")"),
          row_(row), col_(col) {}

    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

}  // namespace causalkit

#pragma once

#include <stdexcept>
#include <string>

namespace dituran {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input is larger than the exact algorithm is allowed to handle.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int size, int cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NotATournament : public Error {
 public:
  using Error::Error;
};

class InvalidArrangement : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(int q) : Error(std::to_string(q) + " is not prime"), q_(q) {}
  int value() const { return q_; }

 private:
  int q_;
};

// drp() was asked to turn a diagonal edge x_i y_i into a loop.
class DiagonalEdge : public Error {
 public:
  explicit DiagonalEdge(int i) : Error("diagonal edge x" + std::to_string(i) + " y" + std::to_string(i)), index_(i) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NoMatching : public Error {
 public:
  using Error::Error;
};

}  // namespace dituran

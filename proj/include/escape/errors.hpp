#pragma once

#include <stdexcept>
#include <string>

namespace escape {

/// Base of every error thrown by this library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raster could not be read, decoded or written.
class MapIoError : public Error
{
public:
  using Error::Error;
};

/// A pixel matched no legend color.
class ClassificationError : public Error
{
public:
  ClassificationError(int x, int y, const std::string& what)
    : Error(what), x_(x), y_(y)
  {
  }

  int x() const { return x_; }
  int y() const { return y_; }

private:
  int x_;
  int y_;
};

class RenderError : public Error
{
public:
  using Error::Error;
};

/// Invalid scenario or parameter set. `field` is a JSON-pointer-like path.
class ConfigError : public Error
{
public:
  ConfigError(std::string field, const std::string& what)
    : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)), reason_(what)
  {
  }

  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

private:
  std::string field_;
  std::string reason_;
};

enum class Endpoint { Start, Goal };

class HazardAtEndpoint : public Error
{
public:
  HazardAtEndpoint(Endpoint which, const std::string& what)
    : Error(what), which_(which)
  {
  }

  Endpoint which() const { return which_; }

private:
  Endpoint which_;
};

class NoRouteFound : public Error
{
public:
  explicit NoRouteFound(long expanded)
    : Error("no route found after expanding " + std::to_string(expanded) + " nodes"),
      expanded_(expanded)
  {
  }

  long expanded() const { return expanded_; }

private:
  long expanded_;
};

}  // namespace escape

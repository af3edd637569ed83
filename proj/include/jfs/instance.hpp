#pragma once

#include <jfs/error.hpp>
#include <jfs/hpolyhedron.hpp>
#include <jfs/matrix.hpp>
#include <jfs/polyfunc.hpp>
#include <jfs/rational.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jfs {

/** Malformed instance text. `line` and `column` are 1-based. */
class ParseError : public Error
{
public:
    enum class Kind { Syntax, DimensionMismatch, DuplicateName, DanglingReference };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind;
    std::size_t line;
    std::size_t column;
};

/** A named object failed to resolve at query time. */
class UnknownName : public Error
{
public:
    explicit UnknownName(const std::string& name) : Error("unknown name '" + name + "'") {}
};

/// A function block as written: pieces plus the name of its domain set ("" means the whole space).
struct FuncDecl
{
    std::size_t dim = 0;
    std::vector<AffinePiece> pieces;
    std::string domain;

    bool operator==(const FuncDecl&) const = default;
};

/**
 * Named sets, functions, matrices and points over a common ambient dimension.
 * Sets and functions may declare their own dimension (for a function composed
 * with a matrix); points always live in the instance dimension.
 */
struct Instance
{
    std::size_t dim = 0;
    std::map<std::string, HPolyhedron> sets;
    std::map<std::string, FuncDecl> funcs;
    std::map<std::string, RatMatrix> matrices;
    std::map<std::string, Vec> points;

    const HPolyhedron& set(const std::string& name) const;
    PolyFunc func(const std::string& name) const;
    const RatMatrix& matrix(const std::string& name) const;
    const Vec& point(const std::string& name) const;

    bool operator==(const Instance&) const = default;
};

Instance parse_instance(std::string_view text);
std::string print_instance(const Instance& inst);

}  // namespace jfs

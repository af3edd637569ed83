#pragma once

#include <stdexcept>
#include <string>

namespace jfs {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Operands live in different ambient dimensions. */
class DimensionMismatch : public Error
{
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/** An operation was called outside its domain (point not in set, S not in P, ...). */
class PreconditionViolation : public Error
{
public:
    explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

/** Face or cone query on an empty polyhedron. */
class EmptySetError : public Error
{
public:
    explicit EmptySetError(const std::string& what) : Error(what) {}
};

/** The two sets do not intersect, so no joint facial subspace exists. */
class DisjointSets : public Error
{
public:
    explicit DisjointSets(const std::string& what = "sets are disjoint") : Error(what) {}
};

/**
 * A computation produced a result contradicting a proven identity. These are
 * never expected; seeing one means a bug in this library.
 */
class InternalInconsistency : public Error
{
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace jfs

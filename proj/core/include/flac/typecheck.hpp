#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flac/delegations.hpp"
#include "flac/syntax.hpp"

namespace flac {

// Ordered bindings; lookup takes the rightmost entry (shadowing).
class TypingContext {
 public:
  struct Entry {
    std::string name;
    std::optional<Type> type;  // nullopt marks a bound type variable
  };

  TypingContext() = default;
  static TypingContext of(const std::vector<std::pair<std::string, Type>>& vars);

  TypingContext with_var(std::string name, Type ty) const;
  TypingContext with_tyvar(std::string name) const;

  const Type* lookup(const std::string& name) const;
  bool has_tyvar(const std::string& name) const;
  bool type_well_formed(const Type& ty) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct HarnessParams {
  Principal H;
  Projection pi;
};

struct CheckerConfig {
  Principal pc_most = Principal::top().project(Projection::integ);
  std::optional<HarnessParams> harness;
};

struct TypeErrorInfo {
  std::string rule;
  std::string premise;
  std::string detail;
  Span span;

  std::string message() const;
};

class TypeCheckError : public std::runtime_error {
 public:
  explicit TypeCheckError(TypeErrorInfo info)
      : std::runtime_error(info.message()), info_(std::move(info)) {}
  const TypeErrorInfo& info() const { return info_; }

 private:
  TypeErrorInfo info_;
};

// Type protection levels; free type variables never protect.
bool protects(const DelegationContext& ctx, const Principal& l, const Type& tau);

// Authority projection on a type.
Type project_type(const Type& tau, Projection pi);

// Returns the derived type or throws TypeCheckError naming the first
// failed premise.
Type typecheck(const DelegationContext& ctx, const TypingContext& gamma, const Principal& pc,
               const Term& e, const CheckerConfig& cfg = {});

}  // namespace flac

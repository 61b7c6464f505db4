#ifndef DEPCHAR_SYMBOLS_HPP
#define DEPCHAR_SYMBOLS_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace depchar {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SchemaMismatchError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class BoundExceededError : public Error {
public:
  using Error::Error;
};

class CapExceededError : public Error {
public:
  using Error::Error;
};

/// Constants are interned: equality is id equality, and ordering is a
/// stable structural order (named < fresh < pair, then by payload) so that
/// canonical enumeration does not depend on interner history.
class Constant {
public:
  Constant() : id_(0) {}

  static Constant named(const std::string& name);
  /// A brand-new constant every call; `label` is kept for printing
  /// (frozen bodies print their source variable).
  static Constant fresh(const std::string& label);
  /// Product-domain element; the pair structure is recoverable exactly.
  static Constant pair(Constant left, Constant right);

  bool is_pair() const;
  std::pair<Constant, Constant> components() const;

  std::string name() const;

  bool operator==(const Constant& o) const { return id_ == o.id_; }
  bool operator!=(const Constant& o) const { return id_ != o.id_; }
  // Fast total order for set algebra; deterministic per run.  Use
  // lex_less() where a name-based order is contractually required.
  bool operator<(const Constant& o) const { return id_ < o.id_; }

  std::uint32_t raw() const { return id_; }

private:
  explicit Constant(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
  friend class ConstantTable;
};

/// Variables live in a namespace disjoint from constants by type.
class Variable {
public:
  Variable() : id_(0) {}
  static Variable named(const std::string& name);

  std::string name() const;

  bool operator==(const Variable& o) const { return id_ == o.id_; }
  bool operator!=(const Variable& o) const { return id_ != o.id_; }
  bool operator<(const Variable& o) const;

  std::uint32_t raw() const { return id_; }

private:
  explicit Variable(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
  friend class VariableTable;
};

namespace detail {

struct ConstEntry {
  enum class Kind : std::uint8_t { Named, Fresh, Pair } kind;
  std::string label;          // Named/Fresh
  std::uint64_t serial = 0;   // Fresh
  std::uint32_t left = 0;     // Pair
  std::uint32_t right = 0;    // Pair
};

}  // namespace detail

class ConstantTable {
public:
  static ConstantTable& instance() {
    static ConstantTable t;
    return t;
  }

  Constant named(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = named_.find(name);
    if (it != named_.end()) return Constant(it->second);
    std::uint32_t id = add(
        {detail::ConstEntry::Kind::Named, name, 0, 0, 0});
    named_.emplace(name, id);
    return Constant(id);
  }

  Constant fresh(const std::string& label) {
    std::lock_guard<std::mutex> lock(mu_);
    std::uint64_t serial = ++fresh_serial_;
    return Constant(add(
        {detail::ConstEntry::Kind::Fresh, label, serial, 0, 0}));
  }

  Constant pair(Constant l, Constant r) {
    std::lock_guard<std::mutex> lock(mu_);
    std::uint64_t key = (std::uint64_t(l.raw()) << 32) | r.raw();
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return Constant(it->second);
    std::uint32_t id = add(
        {detail::ConstEntry::Kind::Pair, "", 0, l.raw(), r.raw()});
    pairs_.emplace(key, id);
    return Constant(id);
  }

  detail::ConstEntry entry(std::uint32_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(id);
  }

  std::string render(std::uint32_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return render_locked(id);
  }

  // Structural order: named by name, fresh by (label, serial), pairs
  // recursively; kinds are ordered named < fresh < pair.
  bool less(std::uint32_t a, std::uint32_t b) const {
    std::lock_guard<std::mutex> lock(mu_);
    return less_locked(a, b);
  }

private:
  ConstantTable() {
    entries_.push_back({detail::ConstEntry::Kind::Named, "", 0, 0, 0});
  }

  std::uint32_t add(detail::ConstEntry e) {
    entries_.push_back(std::move(e));
    return static_cast<std::uint32_t>(entries_.size() - 1);
  }

  std::string render_locked(std::uint32_t id) const {
    const auto& e = entries_.at(id);
    switch (e.kind) {
      case detail::ConstEntry::Kind::Named:
        return e.label;
      case detail::ConstEntry::Kind::Fresh:
        return e.label + "#" + std::to_string(e.serial);
      case detail::ConstEntry::Kind::Pair:
        return "(" + render_locked(e.left) + "," + render_locked(e.right) +
               ")";
    }
    return "?";
  }

  bool less_locked(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return false;
    const auto& ea = entries_.at(a);
    const auto& eb = entries_.at(b);
    if (ea.kind != eb.kind) return ea.kind < eb.kind;
    switch (ea.kind) {
      case detail::ConstEntry::Kind::Named:
        return ea.label < eb.label;
      case detail::ConstEntry::Kind::Fresh:
        return ea.label != eb.label ? ea.label < eb.label
                                    : ea.serial < eb.serial;
      case detail::ConstEntry::Kind::Pair:
        if (ea.left != eb.left) return less_locked(ea.left, eb.left);
        return less_locked(ea.right, eb.right);
    }
    return false;
  }

  mutable std::mutex mu_;
  std::vector<detail::ConstEntry> entries_;
  std::unordered_map<std::string, std::uint32_t> named_;
  std::unordered_map<std::uint64_t, std::uint32_t> pairs_;
  std::uint64_t fresh_serial_ = 0;
};

class VariableTable {
public:
  static VariableTable& instance() {
    static VariableTable t;
    return t;
  }

  Variable named(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = names_.find(name);
    if (it != names_.end()) return Variable(it->second);
    entries_.push_back(name);
    std::uint32_t id = static_cast<std::uint32_t>(entries_.size() - 1);
    names_.emplace(name, id);
    return Variable(id);
  }

  std::string name(std::uint32_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(id);
  }

  bool less(std::uint32_t a, std::uint32_t b) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(a) < entries_.at(b);
  }

private:
  VariableTable() { entries_.push_back(""); }
  mutable std::mutex mu_;
  std::vector<std::string> entries_;
  std::unordered_map<std::string, std::uint32_t> names_;
};

inline Constant Constant::named(const std::string& name) {
  return ConstantTable::instance().named(name);
}

inline Constant Constant::fresh(const std::string& label) {
  return ConstantTable::instance().fresh(label);
}

inline Constant Constant::pair(Constant left, Constant right) {
  return ConstantTable::instance().pair(left, right);
}

inline bool Constant::is_pair() const {
  return ConstantTable::instance().entry(id_).kind ==
         detail::ConstEntry::Kind::Pair;
}

inline std::pair<Constant, Constant> Constant::components() const {
  auto e = ConstantTable::instance().entry(id_);
  if (e.kind != detail::ConstEntry::Kind::Pair)
    throw Error("constant is not a pair: " + name());
  return {Constant(e.left), Constant(e.right)};
}

inline std::string Constant::name() const {
  return ConstantTable::instance().render(id_);
}

inline bool Constant::operator<(const Constant& o) const {
  return ConstantTable::instance().less(id_, o.id_);
}

inline Variable Variable::named(const std::string& name) {
  return VariableTable::instance().named(name);
}

inline std::string Variable::name() const {
  return VariableTable::instance().name(id_);
}

inline bool Variable::operator<(const Variable& o) const {
  return VariableTable::instance().less(id_, o.id_);
}

/// Canonical constant sequence c0, c1, ... used by canonical forms and
/// database enumeration.
inline Constant canonical_constant(std::size_t i) {
  return Constant::named("c" + std::to_string(i));
}

}  // namespace depchar

namespace std {
template <>
struct hash<depchar::Constant> {
  size_t operator()(const depchar::Constant& c) const noexcept {
    return std::hash<uint32_t>()(c.raw());
  }
};
template <>
struct hash<depchar::Variable> {
  size_t operator()(const depchar::Variable& v) const noexcept {
    return std::hash<uint32_t>()(v.raw());
  }
};
}  // namespace std

#endif  // DEPCHAR_SYMBOLS_HPP

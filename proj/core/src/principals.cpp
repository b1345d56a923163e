#include "flac/principals.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace flac {

struct Principal::Node {
  Kind kind;
  std::string id;                      // name
  Projection pi = Projection::conf;    // proj
  std::shared_ptr<const Node> a, b;    // proj uses a; conj/disj use a,b
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::shared_ptr<const Principal::Node> make_node(Principal::Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 1099511628211ull;
  h = mix(h, std::hash<std::string>{}(n.id));
  h = mix(h, static_cast<std::size_t>(n.pi));
  if (n.a) h = mix(h, n.a->hash);
  if (n.b) h = mix(h, n.b->hash);
  n.hash = h;
  return std::make_shared<const Principal::Node>(std::move(n));
}

}  // namespace

Principal Principal::name(std::string id) {
  if (id.empty()) throw std::invalid_argument("principal names must be nonempty");
  Node n;
  n.kind = Kind::name;
  n.id = std::move(id);
  return Principal(make_node(std::move(n)));
}

Principal Principal::top() {
  Node n;
  n.kind = Kind::top;
  return Principal(make_node(std::move(n)));
}

Principal Principal::bot() {
  Node n;
  n.kind = Kind::bot;
  return Principal(make_node(std::move(n)));
}

Principal Principal::conj(Principal l, Principal r) {
  Node n;
  n.kind = Kind::conj;
  n.a = l.node_;
  n.b = r.node_;
  return Principal(make_node(std::move(n)));
}

Principal Principal::disj(Principal l, Principal r) {
  Node n;
  n.kind = Kind::disj;
  n.a = l.node_;
  n.b = r.node_;
  return Principal(make_node(std::move(n)));
}

Principal Principal::project(Projection pi) const {
  Node n;
  n.kind = Kind::proj;
  n.pi = pi;
  n.a = node_;
  return Principal(make_node(std::move(n)));
}

Principal::Kind Principal::kind() const { return node_->kind; }
const std::string& Principal::name_id() const { return node_->id; }
Projection Principal::projection() const { return node_->pi; }

Principal Principal::base() const { return Principal(node_->a); }

Principal Principal::left() const { return Principal(node_->a); }

Principal Principal::right() const { return Principal(node_->b); }

bool Principal::same_tree(const Principal& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::name: return node_->id == o.node_->id;
    case Kind::top:
    case Kind::bot: return true;
    case Kind::proj:
      return node_->pi == o.node_->pi && Principal(node_->a).same_tree(Principal(o.node_->a));
    case Kind::conj:
    case Kind::disj:
      return Principal(node_->a).same_tree(Principal(o.node_->a)) &&
             Principal(node_->b).same_tree(Principal(o.node_->b));
  }
  return false;
}

std::size_t Principal::tree_hash() const { return node_->hash; }

void Principal::collect_names(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::name: out.insert(node_->id); break;
    case Kind::top:
    case Kind::bot: break;
    case Kind::proj: Principal(node_->a).collect_names(out); break;
    case Kind::conj:
    case Kind::disj:
      Principal(node_->a).collect_names(out);
      Principal(node_->b).collect_names(out);
      break;
  }
}

namespace {

int prec_of(Principal::Kind k) {
  switch (k) {
    case Principal::Kind::conj: return 1;
    case Principal::Kind::disj: return 1;
    default: return 2;
  }
}

void print_principal(const Principal& p, std::ostringstream& out, int min_prec) {
  switch (p.kind()) {
    case Principal::Kind::name: out << p.name_id(); return;
    case Principal::Kind::top: out << "top"; return;
    case Principal::Kind::bot: out << "bot"; return;
    case Principal::Kind::proj: {
      // projections bind tighter than /\ and \/
      const Principal& b = p.base();
      bool paren = prec_of(b.kind()) < 2;
      if (paren) out << "(";
      print_principal(b, out, 0);
      if (paren) out << ")";
      out << (p.projection() == Projection::conf ? "->" : "<-");
      return;
    }
    case Principal::Kind::conj:
    case Principal::Kind::disj: {
      bool paren = min_prec > 1;
      if (paren) out << "(";
      print_principal(p.left(), out, 2);
      out << (p.kind() == Principal::Kind::conj ? " /\\ " : " \\/ ");
      print_principal(p.right(), out, 2);
      if (paren) out << ")";
      return;
    }
  }
}

}  // namespace

std::string Principal::to_string() const {
  std::ostringstream out;
  print_principal(*this, out, 0);
  return out.str();
}

// ---------------------------------------------------------------------------
// Component lattice

Component Component::bottom() { return Component(); }

Component Component::top() {
  Component c;
  c.top_ = true;
  return c;
}

Component Component::atom(const std::string& n) {
  Component c;
  c.clauses_.push_back({n});
  return c;
}

void Component::minimize() {
  if (top_) {
    clauses_.clear();
    return;
  }
  for (auto& cl : clauses_) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  }
  // keep subset-minimal clauses only
  std::vector<std::vector<std::string>> kept;
  for (const auto& c : clauses_) {
    bool dominated = false;
    for (const auto& d : clauses_) {
      if (&c == &d) continue;
      bool d_subset = std::includes(c.begin(), c.end(), d.begin(), d.end());
      if (d_subset && d != c) { dominated = true; break; }
      if (d == c && &d < &c) { dominated = true; break; }  // drop duplicates
    }
    if (!dominated) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  clauses_ = std::move(kept);
}

Component Component::join(const Component& a, const Component& b) {
  if (a.top_ || b.top_) return top();
  Component c;
  c.clauses_ = a.clauses_;
  c.clauses_.insert(c.clauses_.end(), b.clauses_.begin(), b.clauses_.end());
  c.minimize();
  return c;
}

Component Component::meet(const Component& a, const Component& b) {
  if (a.top_) return b;
  if (b.top_) return a;
  Component c;
  for (const auto& ca : a.clauses_) {
    for (const auto& cb : b.clauses_) {
      std::vector<std::string> u = ca;
      u.insert(u.end(), cb.begin(), cb.end());
      c.clauses_.push_back(std::move(u));
    }
  }
  c.minimize();
  return c;
}

bool Component::geq(const Component& other) const {
  if (other.is_bottom()) return true;
  if (top_) return true;
  if (other.top_) return false;
  // every clause of `other` must be dominated by some clause here
  for (const auto& c : other.clauses_) {
    bool covered = false;
    for (const auto& d : clauses_) {
      if (std::includes(c.begin(), c.end(), d.begin(), d.end())) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

bool Component::operator==(const Component& other) const {
  return top_ == other.top_ && clauses_ == other.clauses_;
}

void Component::collect_names(std::set<std::string>& out) const {
  for (const auto& c : clauses_)
    for (const auto& n : c) out.insert(n);
}

bool Component::eval(const std::set<std::string>& true_names, bool top_value) const {
  if (top_) return top_value;
  for (const auto& c : clauses_) {
    bool all = true;
    for (const auto& n : c) {
      if (!true_names.count(n)) { all = false; break; }
    }
    if (all) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Normal forms

bool NormalForm::acts_for(const NormalForm& q) const {
  return conf.geq(q.conf) && integ.geq(q.integ);
}

bool NormalForm::equiv(const NormalForm& q) const { return *this == q; }

void NormalForm::collect_names(std::set<std::string>& out) const {
  conf.collect_names(out);
  integ.collect_names(out);
}

namespace {

Principal clause_to_principal(const std::vector<std::string>& clause) {
  Principal acc = Principal::name(clause.front());
  for (std::size_t i = 1; i < clause.size(); ++i)
    acc = Principal::disj(acc, Principal::name(clause[i]));
  return acc;
}

// Component as a plain lattice expression over names (no projection).
Principal component_to_expr(const Component& c) {
  if (c.is_top()) return Principal::top();
  if (c.is_bottom()) return Principal::bot();
  Principal acc = clause_to_principal(c.clauses().front());
  for (std::size_t i = 1; i < c.clauses().size(); ++i)
    acc = Principal::conj(acc, clause_to_principal(c.clauses()[i]));
  return acc;
}

}  // namespace

Principal NormalForm::to_principal() const {
  bool cb = conf.is_bottom();
  bool ib = integ.is_bottom();
  if (cb && ib) return Principal::bot();
  if (conf.is_top() && integ.is_top()) return Principal::top();
  Principal cpart = component_to_expr(conf).project(Projection::conf);
  Principal ipart = component_to_expr(integ).project(Projection::integ);
  if (ib) return cpart;
  if (cb) return ipart;
  return Principal::conj(cpart, ipart);
}

std::string NormalForm::to_string() const { return to_principal().to_string(); }

NormalForm nf_conj(const NormalForm& a, const NormalForm& b) {
  return {Component::join(a.conf, b.conf), Component::join(a.integ, b.integ)};
}

NormalForm nf_disj(const NormalForm& a, const NormalForm& b) {
  return {Component::meet(a.conf, b.conf), Component::meet(a.integ, b.integ)};
}

NormalForm nf_proj(const NormalForm& a, Projection pi) {
  if (pi == Projection::conf) return {a.conf, Component::bottom()};
  return {Component::bottom(), a.integ};
}

NormalForm nf_join(const NormalForm& a, const NormalForm& b) {
  // p |_| q = (p /\ q)-> /\ (p \/ q)<-
  return {Component::join(a.conf, b.conf), Component::meet(a.integ, b.integ)};
}

NormalForm nf_meet(const NormalForm& a, const NormalForm& b) {
  return {Component::meet(a.conf, b.conf), Component::join(a.integ, b.integ)};
}

NormalForm nf_voice(const NormalForm& a) {
  return {Component::bottom(), Component::join(a.conf, a.integ)};
}

NormalForm nf_view(const NormalForm& a) {
  return {Component::join(a.conf, a.integ), Component::bottom()};
}

namespace {

struct PrincipalHash {
  std::size_t operator()(const Principal& p) const { return p.tree_hash(); }
};
struct PrincipalEq {
  bool operator()(const Principal& a, const Principal& b) const { return a.same_tree(b); }
};

NormalForm normalize_uncached(const Principal& p) {
  switch (p.kind()) {
    case Principal::Kind::name: {
      Component c = Component::atom(p.name_id());
      return {c, c};
    }
    case Principal::Kind::top: return {Component::top(), Component::top()};
    case Principal::Kind::bot: return {Component::bottom(), Component::bottom()};
    case Principal::Kind::proj: return nf_proj(normalize(p.base()), p.projection());
    case Principal::Kind::conj: return nf_conj(normalize(p.left()), normalize(p.right()));
    case Principal::Kind::disj: return nf_disj(normalize(p.left()), normalize(p.right()));
  }
  throw std::logic_error("unreachable principal kind");
}

}  // namespace

NormalForm normalize(const Principal& p) {
  // per-thread memo, so concurrent callers never share mutable state
  thread_local std::unordered_map<Principal, NormalForm, PrincipalHash, PrincipalEq> memo;
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  NormalForm nf = normalize_uncached(p);
  memo.emplace(p, nf);
  return nf;
}

bool static_acts_for(const Principal& p, const Principal& q) {
  return normalize(p).acts_for(normalize(q));
}

bool static_equiv(const Principal& p, const Principal& q) {
  return normalize(p) == normalize(q);
}

bool flows_to(const Principal& p, const Principal& q) {
  NormalForm np = normalize(p), nq = normalize(q);
  // p [= q  iff  (p<- /\ q->) >= (q<- /\ p->), componentwise.
  return nq.conf.geq(np.conf) && np.integ.geq(nq.integ);
}

Principal join(const Principal& p, const Principal& q) {
  return nf_join(normalize(p), normalize(q)).to_principal();
}

Principal meet(const Principal& p, const Principal& q) {
  return nf_meet(normalize(p), normalize(q)).to_principal();
}

Principal voice(const Principal& p) { return nf_voice(normalize(p)).to_principal(); }

Principal view(const Principal& p) { return nf_view(normalize(p)).to_principal(); }

Principal proj(const Principal& p, Projection pi) { return p.project(pi); }

}  // namespace flac

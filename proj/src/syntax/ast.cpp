#include "sessionpi/syntax.hpp"

#include <cassert>
#include <stdexcept>

namespace sessionpi {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         message),
      pos_(pos) {}

struct EndPoint::Node {
  Kind kind;
  Qualifier qualifier = Qualifier::un;
  Polarity polarity = Polarity::end;
  std::shared_ptr<const Type> payload;
  std::shared_ptr<const EndPoint> next;  // continuation, or body of rec
  std::string name;
  std::string key;
};

std::string to_string(Qualifier q) { return q == Qualifier::lin ? "lin" : "un"; }

EndPoint EndPoint::qualified(Qualifier q, Polarity polarity, Type payload, EndPoint continuation) {
  if (polarity == Polarity::end) {
    return end(q);
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::qualified;
  node->qualifier = q;
  node->polarity = polarity;
  node->key = to_string(q) + (polarity == Polarity::receive ? " ?(" : " !(") + payload.key() +
              ")." + continuation.key();
  node->payload = std::make_shared<const Type>(std::move(payload));
  node->next = std::make_shared<const EndPoint>(std::move(continuation));
  return EndPoint(std::move(node));
}

EndPoint EndPoint::end(Qualifier q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::qualified;
  node->qualifier = q;
  node->polarity = Polarity::end;
  node->key = to_string(q) + " end";
  return EndPoint(std::move(node));
}

EndPoint EndPoint::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->key = name;
  node->name = std::move(name);
  return EndPoint(std::move(node));
}

EndPoint EndPoint::recursive(std::string binder, EndPoint body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::recursive;
  node->key = "rec " + binder + ". " + body.key();
  node->name = std::move(binder);
  node->next = std::make_shared<const EndPoint>(std::move(body));
  return EndPoint(std::move(node));
}

EndPoint::Kind EndPoint::kind() const { return node_->kind; }

Qualifier EndPoint::qualifier() const {
  assert(node_->kind == Kind::qualified);
  return node_->qualifier;
}

Polarity EndPoint::polarity() const {
  assert(node_->kind == Kind::qualified);
  return node_->polarity;
}

const Type& EndPoint::payload() const {
  if (!node_->payload) throw std::logic_error("end point type has no payload: " + key());
  return *node_->payload;
}

const EndPoint& EndPoint::continuation() const {
  if (node_->kind != Kind::qualified || !node_->next)
    throw std::logic_error("end point type has no continuation: " + key());
  return *node_->next;
}

const std::string& EndPoint::name() const { return node_->name; }

const EndPoint& EndPoint::body() const {
  if (node_->kind != Kind::recursive) throw std::logic_error("not a recursive type: " + key());
  return *node_->next;
}

const std::string& EndPoint::key() const { return node_->key; }

bool operator==(const EndPoint& a, const EndPoint& b) {
  return a.node_ == b.node_ || a.node_->key == b.node_->key;
}

std::string Type::key() const {
  if (!is_channel()) return first.key();
  return "<" + first.key() + ", " + second->key() + ">";
}

bool operator==(const Type& a, const Type& b) {
  if (a.is_channel() != b.is_channel()) return false;
  if (!a.is_channel()) return a.first == b.first;
  return a.first == b.first && *a.second == *b.second;
}

std::string to_string(const EndPoint& s) { return s.key(); }
std::string to_string(const Type& t) { return t.key(); }

// ---------------------------------------------------------------------------

struct Process::Node {
  Kind kind;
  SourcePos pos;
  std::shared_ptr<const Process> first;   // left, body, continuation
  std::shared_ptr<const Process> second;  // right
  std::string channel;
  std::string name;  // argument or binder
  std::shared_ptr<const Type> annotation;
  std::size_t size = 1;
};

namespace {

std::shared_ptr<Process::Node> make_node(Process::Kind kind, SourcePos pos) {
  auto node = std::make_shared<Process::Node>();
  node->kind = kind;
  node->pos = pos;
  return node;
}

}  // namespace

Process Process::zero(SourcePos pos) { return Process(make_node(Kind::inaction, pos)); }

Process Process::par(Process left, Process right, SourcePos pos) {
  auto node = make_node(Kind::parallel, pos);
  node->size = 1 + left.size() + right.size();
  node->first = std::make_shared<const Process>(std::move(left));
  node->second = std::make_shared<const Process>(std::move(right));
  return Process(std::move(node));
}

Process Process::repl(Process body, SourcePos pos) {
  auto node = make_node(Kind::replication, pos);
  node->size = 1 + body.size();
  node->first = std::make_shared<const Process>(std::move(body));
  return Process(std::move(node));
}

Process Process::output(std::string channel, std::string argument, Process continuation,
                        SourcePos pos) {
  auto node = make_node(Kind::output, pos);
  node->size = 1 + continuation.size();
  node->channel = std::move(channel);
  node->name = std::move(argument);
  node->first = std::make_shared<const Process>(std::move(continuation));
  return Process(std::move(node));
}

Process Process::input(std::string channel, std::string binder, Process continuation,
                       SourcePos pos) {
  auto node = make_node(Kind::input, pos);
  node->size = 1 + continuation.size();
  node->channel = std::move(channel);
  node->name = std::move(binder);
  node->first = std::make_shared<const Process>(std::move(continuation));
  return Process(std::move(node));
}

Process Process::restrict(std::string binder, Type annotation, Process continuation,
                          SourcePos pos) {
  auto node = make_node(Kind::restriction, pos);
  node->size = 1 + continuation.size();
  node->name = std::move(binder);
  node->annotation = std::make_shared<const Type>(std::move(annotation));
  node->first = std::make_shared<const Process>(std::move(continuation));
  return Process(std::move(node));
}

Process::Kind Process::kind() const { return node_->kind; }
SourcePos Process::pos() const { return node_->pos; }

const Process& Process::left() const {
  assert(node_->kind == Kind::parallel);
  return *node_->first;
}

const Process& Process::right() const {
  assert(node_->kind == Kind::parallel);
  return *node_->second;
}

const Process& Process::body() const {
  assert(node_->kind == Kind::replication);
  return *node_->first;
}

const Process& Process::continuation() const {
  assert(node_->kind == Kind::output || node_->kind == Kind::input ||
         node_->kind == Kind::restriction);
  return *node_->first;
}

const std::string& Process::channel() const { return node_->channel; }
const std::string& Process::argument() const { return node_->name; }
const std::string& Process::binder() const { return node_->name; }

const Type& Process::annotation() const {
  assert(node_->kind == Kind::restriction);
  return *node_->annotation;
}

std::size_t Process::size() const { return node_->size; }

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case Process::Kind::inaction:
      return true;
    case Process::Kind::parallel:
      return *x.first == *y.first && *x.second == *y.second;
    case Process::Kind::replication:
      return *x.first == *y.first;
    case Process::Kind::output:
    case Process::Kind::input:
      return x.channel == y.channel && x.name == y.name && *x.first == *y.first;
    case Process::Kind::restriction:
      return x.name == y.name && *x.annotation == *y.annotation && *x.first == *y.first;
  }
  return false;
}

}  // namespace sessionpi
